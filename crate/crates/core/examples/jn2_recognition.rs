//! Decide which groups are just 2-step nilpotent, and compare the structural
//! test with the literal definition.

use braidquot::fingroup::{cyclic, dicyclic, dihedral, direct_product, symmetric};
use braidquot::jn2::is_jn2;
use braidquot::oracle::is_jn2_by_definition;

fn main() -> braidquot::Result<()> {
    let groups = [
        dihedral(8)?,
        dicyclic(8)?,
        dihedral(16)?,
        symmetric(3)?,
        direct_product(&dihedral(8)?, &cyclic(3)?)?,
        direct_product(&dihedral(8)?, &cyclic(2)?)?,
        braidquot::jn2::materialize("II(3^2,1)".parse()?)?.group,
    ];
    for g in &groups {
        let name = g.label().unwrap_or("II(3^2,1)");
        let class = is_jn2(g);
        let literal = is_jn2_by_definition(g)?;
        assert_eq!(class.is_some(), literal);
        match class {
            Some(c) => println!(
                "{name:<10} JN2 with |G'| = {}, |ZG| = {}, m = {}",
                c.p,
                c.center_order(),
                c.m
            ),
            None => println!("{name:<10} not JN2"),
        }
    }
    Ok(())
}
