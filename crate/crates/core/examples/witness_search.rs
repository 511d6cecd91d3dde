//! Search `II(2^2,1)` for a braid-reduced quotient of `B_6(S_1)`, then check
//! the witness against every relator of the full presentation.

use braidquot::braid::{
    bellingeri_presentation, check_full_quotient, find_witness, write_witness,
    DEFAULT_WITNESS_BUDGET,
};
use braidquot::jn2::materialize;

fn main() -> braidquot::Result<()> {
    let (n, g) = (6, 1);
    let spec = "II(2^2,1)";
    let group = materialize(spec.parse()?)?.group;
    let w = find_witness(&group, n, g, DEFAULT_WITNESS_BUDGET)?.expect("II(2^2,1) is a quotient");
    print!("{}", write_witness(&w, spec));

    let report = check_full_quotient(&group, &bellingeri_presentation(n, g)?, &w.extend_to_full());
    println!(
        "{} relators, all hold: {}, images generate: {}",
        report.relators.len(),
        report.relators_hold(),
        report.generates
    );

    // Q8 has the right shape but the wrong center for six strands.
    let q8 = materialize("II(2,1)".parse()?)?.group;
    println!(
        "Q8 witness: {:?}",
        find_witness(&q8, n, g, DEFAULT_WITNESS_BUDGET)?
    );
    Ok(())
}
