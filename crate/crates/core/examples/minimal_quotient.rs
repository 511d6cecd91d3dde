//! The smallest nonabelian braid-reduced quotient of `B_5(S_2)`.

use braidquot::braid::{minimal_braid_reduced_search, DEFAULT_WITNESS_BUDGET};

fn main() -> braidquot::Result<()> {
    let report = minimal_braid_reduced_search(5, 2, 64, DEFAULT_WITNESS_BUDGET)?;
    print!("{}", report.render());
    Ok(())
}
