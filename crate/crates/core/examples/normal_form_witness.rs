//! Groups too large to tabulate: the standard witnesses for `B_6(S_2)` live in
//! groups of order 7^5 and are checked directly on normal forms.

use braidquot::braid::{predicted_minimum, standard_witness_symbolic};
use braidquot::Jn2Spec;

fn main() -> braidquot::Result<()> {
    let (n, g) = (6, 2);
    let prediction = predicted_minimum(n, g)?;
    println!("predicted minimum order {}", prediction.order);
    for name in ["I(7,2)", "II(7,2)"] {
        let spec: Jn2Spec = name.parse()?;
        let w = standard_witness_symbolic(spec, n, g)?;
        let report = w.check();
        println!(
            "{name}: sigma = z^{}, reduced relations {}, full presentation {}",
            w.sigma_exponent,
            report.passes(),
            w.full_relators_hold()?
        );
    }
    Ok(())
}
