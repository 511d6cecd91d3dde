use std::collections::BTreeMap;

use super::{FiniteGroup, GroupMap};
use crate::{Error, Result};

/// A subgroup of some parent group, stored as a sorted element list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
    parent_order: usize,
}

impl Subgroup {
    fn from_mask(mask: &[bool]) -> Self {
        Subgroup {
            elements: mask
                .iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i))
                .collect(),
            parent_order: mask.len(),
        }
    }

    pub fn trivial(parent_order: usize) -> Self {
        Subgroup {
            elements: vec![0],
            parent_order,
        }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup {
            elements: g.elements().collect(),
            parent_order: g.order(),
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent_order
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        g.elements().all(|x| {
            self.elements
                .iter()
                .all(|&s| self.contains(g.conjugate(x, s)))
        })
    }

    pub fn is_abelian_in(&self, g: &FiniteGroup) -> bool {
        self.elements
            .iter()
            .all(|&x| self.elements.iter().all(|&y| g.commutes(x, y)))
    }

    /// Whether the subgroup is cyclic, i.e. has an element of full order.
    pub fn is_cyclic_in(&self, g: &FiniteGroup) -> bool {
        self.elements
            .iter()
            .any(|&x| g.element_order(x) == self.order())
    }

    /// Smallest-index generator of a cyclic subgroup.
    pub fn cyclic_generator(&self, g: &FiniteGroup) -> Option<usize> {
        self.elements
            .iter()
            .copied()
            .find(|&x| g.element_order(x) == self.order())
    }
}

/// Orbit closure of `gens` under right multiplication.
pub(crate) fn generated(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    let mut mask = vec![false; g.order()];
    mask[0] = true;
    let mut queue = vec![0];
    let gens: Vec<usize> = gens.iter().copied().filter(|&s| s != 0).collect();
    while let Some(x) = queue.pop() {
        for &s in &gens {
            let y = g.mul(x, s);
            if !mask[y] {
                mask[y] = true;
                queue.push(y);
            }
        }
    }
    Subgroup::from_mask(&mask)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    /// Nilpotent of the given class (0 for the trivial group).
    Class(usize),
    NotNilpotent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub order: usize,
    pub is_abelian: bool,
    /// `Some(p)` when the group is elementary abelian of exponent `p`.
    pub elementary_abelian_prime: Option<usize>,
    pub exponent: usize,
    pub order_profile: BTreeMap<usize, usize>,
    /// Orders of `γ₁ ⊇ γ₂ ⊇ …` until the series stabilizes.
    pub lower_central_series: Vec<usize>,
    pub nilpotency: Nilpotency,
}

impl FiniteGroup {
    pub fn center(&self) -> Subgroup {
        let mask: Vec<bool> = self
            .elements()
            .map(|z| self.elements().all(|x| self.commutes(z, x)))
            .collect();
        Subgroup::from_mask(&mask)
    }

    pub fn is_central(&self, z: usize) -> bool {
        self.elements().all(|x| self.commutes(z, x))
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Subgroup {
        let mut current = generated(self, gens);
        loop {
            let mut extra = Vec::new();
            for &s in current.elements() {
                for x in self.elements() {
                    let c = self.conjugate(x, s);
                    if !current.contains(c) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return current;
            }
            let mut all = current.elements.clone();
            all.extend(extra);
            current = generated(self, &all);
        }
    }

    /// `[A, B]`, generated by all `[a, b]`, closed to its normal closure.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut seen = vec![false; self.order()];
        let mut comms = Vec::new();
        for &x in a.elements() {
            for &y in b.elements() {
                let c = self.commutator(x, y);
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let whole = Subgroup::whole(self);
        self.commutator_subgroup(&whole, &whole)
    }

    /// The subgroup generated by all commutators, without normal closure.
    pub fn commutator_closure(&self) -> Subgroup {
        let mut seen = vec![false; self.order()];
        let mut comms = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                let c = self.commutator(x, y);
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        generated(self, &comms)
    }

    /// `G/N` with cosets numbered by their smallest element, plus the projection.
    pub fn quotient(&self, normal: &Subgroup) -> Result<(FiniteGroup, GroupMap)> {
        if normal.parent_order != self.order() || !normal.contains(0) {
            return Err(Error::NotNormal(
                "subgroup does not belong to this group".into(),
            ));
        }
        if !normal.is_normal_in(self) {
            return Err(Error::NotNormal(format!(
                "subgroup of order {} is not normal",
                normal.order()
            )));
        }
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for x in self.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &s in normal.elements() {
                coset_of[self.mul(x, s)] = id;
            }
        }
        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b)] as u32);
            }
        }
        let q = FiniteGroup::from_flat(k, table)?;
        Ok((q, GroupMap::new(k, coset_of)))
    }

    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let whole = Subgroup::whole(self);
        let mut series = vec![whole.clone()];
        loop {
            let next = self.commutator_subgroup(series.last().unwrap(), &whole);
            if next.order() == series.last().unwrap().order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn nilpotency(&self) -> Nilpotency {
        let series = self.lower_central_series();
        if series.last().unwrap().is_trivial() {
            Nilpotency::Class(series.len() - 1)
        } else {
            Nilpotency::NotNilpotent
        }
    }

    pub fn invariants(&self) -> Invariants {
        let is_abelian = self.is_abelian();
        let exponent = self.exponent();
        let elementary_abelian_prime =
            (is_abelian && exponent > 1 && super::constructors::is_prime(exponent as u64))
                .then_some(exponent);
        let series = self.lower_central_series();
        let nilpotency = if series.last().unwrap().is_trivial() {
            Nilpotency::Class(series.len() - 1)
        } else {
            Nilpotency::NotNilpotent
        };
        Invariants {
            order: self.order(),
            is_abelian,
            elementary_abelian_prime,
            exponent,
            order_profile: self.order_profile(),
            lower_central_series: series.iter().map(Subgroup::order).collect(),
            nilpotency,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{alternating, cyclic, dicyclic, dihedral, elementary_abelian, symmetric};
    use super::*;

    #[test]
    fn empty_generating_set_gives_trivial_subgroup() {
        let g = symmetric(3).unwrap();
        assert!(g.subgroup_generated(&[]).is_trivial());
    }

    #[test]
    fn transposition_and_three_cycle_generate_s3() {
        let g = symmetric(3).unwrap();
        let orders = g.element_orders();
        for t in g.elements().filter(|&x| orders[x] == 2) {
            for c in g.elements().filter(|&x| orders[x] == 3) {
                assert!(g.subgroup_generated(&[t, c]).is_whole());
            }
        }
    }

    #[test]
    fn involution_in_c4() {
        let g = cyclic(4).unwrap();
        let h = g.subgroup_generated(&[2]);
        assert_eq!(h.order(), 2);
        assert!(!h.is_whole());
    }

    #[test]
    fn abelian_center_and_derived() {
        let g = cyclic(6).unwrap();
        assert!(g.center().is_whole());
        assert!(g.derived_subgroup().is_trivial());
    }

    #[test]
    fn d8_center_and_derived() {
        let d8 = dihedral(8).unwrap();
        assert_eq!(d8.center().order(), 2);
        assert_eq!(d8.derived_subgroup().order(), 2);
    }

    #[test]
    fn s4_derived_is_a4() {
        let s4 = symmetric(4).unwrap();
        let d = s4.derived_subgroup();
        assert_eq!(d.order(), 12);
        let (q, _) = s4.quotient(&d).unwrap();
        assert_eq!(q.order(), 2);
        assert!(alternating(4)
            .unwrap()
            .is_isomorphic(&s4.quotient(&Subgroup::trivial(24)).unwrap().0)
            .unwrap()
            .is_none());
    }

    #[test]
    fn quotient_by_whole_and_trivial() {
        let g = dihedral(8).unwrap();
        let (q, proj) = g.quotient(&Subgroup::whole(&g)).unwrap();
        assert_eq!(q.order(), 1);
        assert!(proj.is_homomorphism(&g, &q));
        let (q, proj) = g.quotient(&Subgroup::trivial(8)).unwrap();
        assert_eq!(q.order(), 8);
        assert_eq!(proj, GroupMap::identity(8));
    }

    #[test]
    fn q8_mod_center_is_elementary_abelian() {
        let q8 = dicyclic(8).unwrap();
        let (q, proj) = q8.quotient(&q8.center()).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.is_abelian());
        assert!(q.elements().all(|x| q.mul(x, x) == 0));
        assert!(proj.is_homomorphism(&q8, &q) && proj.is_surjective());
    }

    #[test]
    fn non_normal_subgroup_rejected() {
        let s3 = symmetric(3).unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let h = s3.subgroup_generated(&[t]);
        assert!(matches!(s3.quotient(&h), Err(Error::NotNormal(_))));
    }

    #[test]
    fn nilpotency_examples() {
        assert_eq!(symmetric(3).unwrap().nilpotency(), Nilpotency::NotNilpotent);
        assert_eq!(dihedral(8).unwrap().nilpotency(), Nilpotency::Class(2));
        assert_eq!(cyclic(1).unwrap().nilpotency(), Nilpotency::Class(0));
        let s3 = symmetric(3).unwrap().invariants();
        assert_eq!(s3.lower_central_series, vec![6, 3]);
    }

    #[test]
    fn elementary_abelian_invariants() {
        let inv = elementary_abelian(3, 2).unwrap().invariants();
        assert_eq!(inv.exponent, 3);
        assert_eq!(inv.elementary_abelian_prime, Some(3));
        assert_eq!(
            cyclic(9).unwrap().invariants().elementary_abelian_prime,
            None
        );
    }

    #[test]
    fn derived_equals_plain_commutator_closure() {
        for g in [
            symmetric(4).unwrap(),
            dicyclic(12).unwrap(),
            alternating(5).unwrap(),
        ] {
            assert_eq!(g.derived_subgroup(), g.commutator_closure());
        }
    }
}
