//! Surface braid group presentations and their braid-reduced finite quotients.
//!
//! A quotient of `B_n(Σ_g)` is braid-reduced when all the `σᵢ` map to one
//! element `σ`. For `n ≥ 3` such quotients are exactly the groups generated by
//! a tuple `(σ, a₁, b₁, …, a_g, b_g)` with `σ` commuting with every `a_r, b_r`,
//! distinct pairs commuting, `[a_r, b_r] = σ²` and `σ^{2(g+n−1)} = 1`. This
//! module evaluates both the full and the reduced relations, searches for
//! such tuples, and looks for the smallest nonabelian examples.

mod presentation;
mod search;
mod standard;
mod witness;

pub use presentation::{
    bellingeri_presentation, reduced_relations, Generator, GroupLike, Letter, Presentation,
    RelationFamily, Relator, Word,
};
pub use search::{
    minimal_braid_reduced_search, non_nilpotency_check, predicted_minimum, CandidateSource,
    CandidateVerdict, Prediction, SearchReport,
};
pub use standard::{standard_witness, standard_witness_symbolic, SymbolicWitness};
pub use witness::{
    check_full_quotient, check_reduced_in, check_reduced_witness, derived_is_sigma_square,
    find_witness, find_witness_counted, parse_witness, sigma_order_dichotomy, write_witness,
    FullImages, FullReport, ReducedReport, RelatorOutcome, Witness, DEFAULT_WITNESS_BUDGET,
};
