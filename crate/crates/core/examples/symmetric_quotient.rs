//! `S_n` is a quotient of `B_n(S_g)`: send `σᵢ` to the transposition
//! `(i, i+1)` and every `a_r`, `b_r` to the identity.

use braidquot::braid::{
    bellingeri_presentation, check_full_quotient, non_nilpotency_check, FullImages,
};
use braidquot::fingroup::symmetric_group;

fn main() -> braidquot::Result<()> {
    for (n, g) in [(5, 1), (5, 2), (6, 1)] {
        let sn = symmetric_group(n)?;
        let images = FullImages {
            sigma: (1..n).map(|i| sn.transposition(i).unwrap()).collect(),
            a: vec![0; g],
            b: vec![0; g],
        };
        let report = check_full_quotient(&sn.group, &bellingeri_presentation(n, g)?, &images);
        println!(
            "S_{n} as a quotient of B_{n}(S_{g}): {} (not nilpotent: {})",
            report.passes(),
            non_nilpotency_check(n)?
        );
    }
    Ok(())
}
