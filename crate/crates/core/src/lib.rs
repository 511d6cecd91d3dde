//! Computational group theory for the smallest nonabelian quotients of
//! surface braid groups `B_n(Σ_g)`.
//!
//! The crate is organised in layers:
//!
//! - [`fingroup`]: finite groups as validated Cayley tables, with subgroups,
//!   quotients, structural invariants and isomorphism testing.
//! - [`jn2`]: just 2-step nilpotent (JN2) groups: recognition, the symplectic
//!   structure on `G/ZG`, the standard groups `I(p^j,m)` and `II(p^j,m)`, central
//!   products, and classification with an explicit isomorphism certificate.
//! - [`braid`]: the Bellingeri presentation of `B_n(Σ_g)`, the reduced relations
//!   characterising braid-reduced quotients, witness checking and search, and the
//!   minimal-order quotient search.
//! - [`oracle`]: brute-force cross-checks (exhaustive enumeration of small groups,
//!   a nonabelian catalog up to order 15, normal subgroups, the literal JN2
//!   definition).
//! - [`verify`]: the end-to-end verification checklist.
//! - [`cli`]: the `braidquot` command-line front end.

pub mod braid;
pub mod cli;
mod error;
pub mod fingroup;
pub mod jn2;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use fingroup::{FiniteGroup, GroupMap, Subgroup};
pub use jn2::{Jn2Spec, Variant};
