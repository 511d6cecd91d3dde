use std::collections::HashSet;

use crate::fingroup::{FiniteGroup, Nilpotency, Subgroup};
use crate::{Error, Result};

/// Largest order accepted by [`normal_subgroups`].
pub const NORMAL_SUBGROUP_LIMIT: usize = 256;

pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        let mut class: Vec<usize> = g.elements().map(|y| g.conjugate(y, x)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            seen[c] = true;
        }
        classes.push(class);
    }
    classes
}

/// Every normal subgroup, sorted by order and then by elements.
///
/// A normal subgroup is a union of conjugacy classes, hence the join of the
/// classes it contains. Starting from the trivial subgroup, each known normal
/// subgroup is joined with every class outside it until nothing new appears.
pub fn normal_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    if g.order() > NORMAL_SUBGROUP_LIMIT {
        return Err(Error::SearchBudgetExceeded { explored: 0 });
    }
    let classes = conjugacy_classes(g);
    let mut found: Vec<(Subgroup, Vec<usize>)> = vec![(Subgroup::trivial(g.order()), Vec::new())];
    let mut seen: HashSet<Vec<usize>> = HashSet::from([vec![0]]);
    let mut head = 0;
    while head < found.len() {
        let (n, gens) = found[head].clone();
        head += 1;
        for class in &classes {
            if n.contains(class[0]) {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.extend(class);
            let joined = g.subgroup_generated(&joined_gens);
            if seen.insert(joined.elements().to_vec()) {
                found.push((joined, joined_gens));
            }
        }
    }
    let mut subgroups: Vec<Subgroup> = found.into_iter().map(|(s, _)| s).collect();
    subgroups.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    Ok(subgroups)
}

/// Nonabelian, with every proper quotient abelian.
pub fn is_just_nonabelian(g: &FiniteGroup) -> Result<bool> {
    if g.is_abelian() {
        return Ok(false);
    }
    for n in normal_subgroups(g)? {
        if n.is_trivial() {
            continue;
        }
        if !g.quotient(&n)?.0.is_abelian() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The literal definition of JN2: nilpotency class exactly 2 and just
/// nonabelian.
pub fn is_jn2_by_definition(g: &FiniteGroup) -> Result<bool> {
    Ok(g.nilpotency() == Nilpotency::Class(2) && is_just_nonabelian(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{alternating, cyclic, dicyclic, dihedral, symmetric};

    #[test]
    fn a5_is_simple() {
        let ns = normal_subgroups(&alternating(5).unwrap()).unwrap();
        assert_eq!(ns.len(), 2);
        assert!(ns[0].is_trivial() && ns[1].is_whole());
    }

    #[test]
    fn q8_has_six_normal_subgroups() {
        assert_eq!(normal_subgroups(&dicyclic(8).unwrap()).unwrap().len(), 6);
    }

    #[test]
    fn cyclic_prime_has_two() {
        assert_eq!(normal_subgroups(&cyclic(7).unwrap()).unwrap().len(), 2);
    }

    #[test]
    fn s4_normal_subgroups() {
        let orders: Vec<usize> = normal_subgroups(&symmetric(4).unwrap())
            .unwrap()
            .iter()
            .map(Subgroup::order)
            .collect();
        assert_eq!(orders, [1, 4, 12, 24]);
    }

    #[test]
    fn just_nonabelian_examples() {
        assert!(!is_just_nonabelian(&cyclic(6).unwrap()).unwrap());
        assert!(is_just_nonabelian(&dihedral(8).unwrap()).unwrap());
        assert!(!is_just_nonabelian(&symmetric(4).unwrap()).unwrap());
        // S3 is just nonabelian but not nilpotent.
        assert!(is_just_nonabelian(&symmetric(3).unwrap()).unwrap());
        assert!(!is_jn2_by_definition(&symmetric(3).unwrap()).unwrap());
        assert!(is_jn2_by_definition(&dicyclic(8).unwrap()).unwrap());
    }

    #[test]
    fn too_large_is_refused() {
        assert!(matches!(
            normal_subgroups(&cyclic(300).unwrap()),
            Err(Error::SearchBudgetExceeded { .. })
        ));
    }

    #[test]
    fn class_sizes_sum_to_order() {
        let g = symmetric(4).unwrap();
        let classes = conjugacy_classes(&g);
        assert_eq!(classes.len(), 5);
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), 24);
    }
}
