//! Every group of order at most 8, found by brute force, and the hand-built
//! catalog of nonabelian groups up to order 15.

use braidquot::oracle::{
    exhaustive_catalog_upto, nonabelian_catalog_upto, DEFAULT_ENUMERATION_BUDGET,
};

fn main() -> braidquot::Result<()> {
    let all = exhaustive_catalog_upto(8, DEFAULT_ENUMERATION_BUDGET)?;
    for k in 1..=8 {
        let names: Vec<String> = all.tier(k).map(|e| e.name()).collect();
        println!("order {k}: {}", names.join(", "));
    }

    println!();
    for e in &nonabelian_catalog_upto(15)?.entries {
        println!("{:<6} order {:>2} ({})", e.name(), e.order, e.provenance);
    }
    Ok(())
}
