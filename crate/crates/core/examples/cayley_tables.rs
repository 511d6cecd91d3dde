//! Build a few groups, read off their invariants and round-trip one through
//! the Cayley-table text format.
//!
//! ```text
//! cargo run --example cayley_tables
//! ```

use braidquot::fingroup::io::{parse_cayley, write_cayley};
use braidquot::fingroup::{alternating, cyclic, dicyclic, dihedral, direct_product, symmetric};

fn main() -> braidquot::Result<()> {
    let groups = [
        symmetric(4)?,
        alternating(5)?,
        dihedral(12)?,
        dicyclic(12)?,
        direct_product(&cyclic(2)?, &dihedral(8)?)?,
    ];
    println!(
        "{:<8} {:>5} {:>8} {:>7} {:>8}  class",
        "group", "order", "exponent", "center", "derived"
    );
    for g in &groups {
        println!(
            "{:<8} {:>5} {:>8} {:>7} {:>8}  {:?}",
            g.label().unwrap_or("?"),
            g.order(),
            g.exponent(),
            g.center().order(),
            g.derived_subgroup().order(),
            g.nilpotency()
        );
    }

    let d8 = dihedral(8)?;
    let text = write_cayley(&d8);
    print!("\n{text}");
    let back = parse_cayley(&text)?;
    assert!(back.is_isomorphic(&d8)?.is_some());
    println!(
        "order profile of the re-read table: {:?}",
        back.order_profile()
    );
    Ok(())
}
