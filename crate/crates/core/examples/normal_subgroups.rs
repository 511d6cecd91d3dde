//! Normal subgroups as unions of conjugacy classes.

use braidquot::fingroup::{dicyclic, symmetric};
use braidquot::oracle::{conjugacy_classes, normal_subgroups};

fn main() -> braidquot::Result<()> {
    for g in [symmetric(4)?, dicyclic(8)?] {
        let classes = conjugacy_classes(&g);
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        let normals: Vec<usize> = normal_subgroups(&g)?.iter().map(|s| s.order()).collect();
        println!(
            "{}: class sizes {sizes:?}, normal subgroup orders {normals:?}",
            g.label().unwrap()
        );
    }
    Ok(())
}
