//! Dense finite groups stored as Cayley tables.
//!
//! Every [`FiniteGroup`] is validated on construction: element `0` is the
//! identity, every element has a two-sided inverse, and the multiplication is
//! associative. Elements are plain `usize` indices into the table.

mod constructors;
pub mod io;
mod iso;
mod map;
mod subgroup;

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::{Error, Result};

pub(crate) use constructors::is_prime;
pub use constructors::{
    alternating, cyclic, dicyclic, dihedral, direct_product, elementary_abelian, symmetric,
    symmetric_group, PermutationGroup, DEFAULT_TABLE_CAP,
};
pub use iso::{is_isomorphic, ISOMORPHISM_LIMIT};
pub use map::GroupMap;
pub use subgroup::{Invariants, Nilpotency, Subgroup};

/// Above this order associativity is checked with Light's test over a
/// generating set instead of over all triples.
const FULL_ASSOCIATIVITY_LIMIT: usize = 256;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    label: Option<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major Cayley table, `table[x][y] = x·y`.
    pub fn from_table(order: usize, table: &[Vec<usize>]) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotAGroup("order must be at least 1".into()));
        }
        if table.len() != order {
            return Err(Error::NotAGroup(format!(
                "expected {order} rows, found {}",
                table.len()
            )));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (x, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotAGroup(format!(
                    "row {x} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= order {
                    return Err(Error::NotAGroup(format!(
                        "entry {v} in row {x} is out of range"
                    )));
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat(order, flat)
    }

    pub(crate) fn from_flat(order: usize, table: Vec<u32>) -> Result<Self> {
        if order > DEFAULT_TABLE_CAP {
            return Err(Error::SizeLimit {
                order: order as u128,
                cap: DEFAULT_TABLE_CAP,
            });
        }
        debug_assert_eq!(table.len(), order * order);
        let inverse = validate(order, &table)?;
        Ok(FiniteGroup {
            order,
            table,
            inverse,
            label: None,
        })
    }

    /// Builds the Cayley table of a concrete group given as an element list
    /// (identity first) and a multiplication closure.
    pub(crate) fn from_elements<T, F>(elements: &[T], mul: F) -> Result<Self>
    where
        T: std::hash::Hash + Eq,
        F: Fn(&T, &T) -> T,
    {
        let order = elements.len();
        if order > DEFAULT_TABLE_CAP {
            return Err(Error::SizeLimit {
                order: order as u128,
                cap: DEFAULT_TABLE_CAP,
            });
        }
        let index: std::collections::HashMap<&T, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e, i as u32))
            .collect();
        let mut table = Vec::with_capacity(order * order);
        for x in elements {
            for y in elements {
                let prod = mul(x, y);
                match index.get(&prod) {
                    Some(&i) => table.push(i),
                    None => return Err(Error::NotAGroup("element list is not closed".into())),
                }
            }
        }
        Self::from_flat(order, table)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    /// `x^e` for any integer exponent.
    pub fn pow(&self, x: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(x) } else { x };
        let mut e = e.unsigned_abs();
        let mut acc = 0;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    /// `[x, y] = x y x⁻¹ y⁻¹`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        let xi_yi = self.mul(self.inv(x), self.inv(y));
        self.mul(xy, xi_yi)
    }

    /// `x y x⁻¹`.
    #[inline]
    pub fn conjugate(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.inv(x))
    }

    #[inline]
    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|x| self.element_order(x)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.commutes(x, y)))
    }

    pub fn centralizer_size(&self, x: usize) -> usize {
        self.elements().filter(|&y| self.commutes(x, y)).count()
    }

    /// Element order → number of elements of that order.
    pub fn order_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for x in self.elements() {
            *profile.entry(self.element_order(x)).or_insert(0) += 1;
        }
        profile
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|x| self.element_order(x))
            .fold(1, num_lcm)
    }

    /// Re-asserts the identity, inverse and associativity laws.
    pub fn check_laws(&self) -> Result<()> {
        validate(self.order, &self.table).map(|_| ())
    }

    /// The row `x` of the table as indices.
    pub fn row(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[x * self.order..(x + 1) * self.order]
            .iter()
            .map(|&v| v as usize)
    }

    /// Relabels the elements: element `x` becomes `perm[x]`. `perm[0]` must be 0.
    /// Returns the relabeled group and the isomorphism old → new.
    pub fn relabel(&self, perm: &[usize]) -> Result<(FiniteGroup, GroupMap)> {
        let n = self.order;
        if perm.len() != n || perm.first() != Some(&0) {
            return Err(Error::ParamRange(
                "relabeling must be a permutation fixing 0".into(),
            ));
        }
        let mut back = vec![usize::MAX; n];
        for (old, &new) in perm.iter().enumerate() {
            if new >= n || back[new] != usize::MAX {
                return Err(Error::ParamRange("relabeling is not a permutation".into()));
            }
            back[new] = old;
        }
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = perm[self.mul(back[x], back[y])] as u32;
            }
        }
        let inverse = (0..n).map(|x| perm[self.inv(back[x])] as u32).collect();
        let group = FiniteGroup {
            order: n,
            table,
            inverse,
            label: self.label.clone(),
        };
        Ok((group, GroupMap::new(n, perm.to_vec())))
    }

    /// A uniformly random relabeling fixing the identity.
    pub fn random_relabel<R: Rng>(&self, rng: &mut R) -> (FiniteGroup, GroupMap) {
        let mut rest: Vec<usize> = (1..self.order).collect();
        rest.shuffle(rng);
        let mut perm = Vec::with_capacity(self.order);
        perm.push(0);
        perm.extend(rest);
        self.relabel(&perm)
            .expect("a shuffled permutation fixing 0")
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        subgroup::generated(self, gens)
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> Result<Option<GroupMap>> {
        iso::is_isomorphic(self, other)
    }
}

fn num_gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn num_lcm(a: usize, b: usize) -> usize {
    a / num_gcd(a, b) * b
}

/// Validates the group laws, returning the inverse table.
fn validate(order: usize, table: &[u32]) -> Result<Vec<u32>> {
    let n = order;
    let at = |x: usize, y: usize| table[x * n + y] as usize;

    for x in 0..n {
        if at(0, x) != x || at(x, 0) != x {
            return Err(Error::NotAGroup(format!(
                "identity law fails: 0·{x} = {}, {x}·0 = {}",
                at(0, x),
                at(x, 0)
            )));
        }
    }

    let mut inverse = vec![0u32; n];
    for x in 0..n {
        match (0..n).find(|&y| at(x, y) == 0) {
            Some(y) if at(y, x) == 0 => inverse[x] = y as u32,
            _ => {
                return Err(Error::NotAGroup(format!("element {x} has no inverse")));
            }
        }
    }

    if n <= FULL_ASSOCIATIVITY_LIMIT {
        for x in 0..n {
            for y in 0..n {
                let xy = at(x, y);
                for z in 0..n {
                    if at(xy, z) != at(x, at(y, z)) {
                        return Err(associativity_error(x, y, z));
                    }
                }
            }
        }
    } else {
        // Light's test: the set of `s` with (x s) y = x (s y) for all x, y is
        // closed under the operation, so it suffices to test `s` in a set
        // generating the table as a magma.
        for s in magma_generators(n, table) {
            for x in 0..n {
                let xs = at(x, s);
                for y in 0..n {
                    if at(xs, y) != at(x, at(s, y)) {
                        return Err(associativity_error(x, s, y));
                    }
                }
            }
        }
    }
    Ok(inverse)
}

fn associativity_error(x: usize, y: usize, z: usize) -> Error {
    Error::NotAGroup(format!("associativity fails for ({x}, {y}, {z})"))
}

/// Greedy generating set of the table viewed as a magma.
fn magma_generators(n: usize, table: &[u32]) -> Vec<usize> {
    let at = |x: usize, y: usize| table[x * n + y] as usize;
    let mut in_closure = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut gens = Vec::new();
    // Every pair (members[k], members[i]) with k <= i is multiplied exactly once.
    let mut i = 0;
    for candidate in 0..n {
        if in_closure[candidate] {
            continue;
        }
        gens.push(candidate);
        in_closure[candidate] = true;
        members.push(candidate);
        while i < members.len() {
            let u = members[i];
            for k in 0..=i {
                let v = members[k];
                for w in [at(u, v), at(v, u)] {
                    if !in_closure[w] {
                        in_closure[w] = true;
                        members.push(w);
                    }
                }
            }
            i += 1;
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_table(1, &[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.is_abelian());
    }

    #[test]
    fn z2_table() {
        let g = FiniteGroup::from_table(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.inv(1), 1);
        assert_eq!(g.element_order(1), 2);
    }

    #[test]
    fn missing_inverse_rejected() {
        let err = FiniteGroup::from_table(2, &[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(
            matches!(err, Error::NotAGroup(ref m) if m.contains("no inverse")),
            "{err}"
        );
    }

    #[test]
    fn latin_square_that_is_not_associative() {
        // A loop of order 5 that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(5, &t).unwrap_err();
        assert!(
            matches!(err, Error::NotAGroup(ref m) if m.contains("associativity")),
            "{err}"
        );
    }

    #[test]
    fn identity_must_be_zero() {
        let err = FiniteGroup::from_table(2, &[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn magma_generators_cover_group() {
        let g = symmetric(4).unwrap();
        let gens = magma_generators(g.order(), &g.table);
        assert!(g.subgroup_generated(&gens).is_whole());
        assert!(gens.len() <= 5);
    }

    #[test]
    fn light_test_agrees_with_full_check_on_large_group() {
        let g = symmetric(6).unwrap();
        let mut t = g.table.clone();
        // Swap two entries in two rows so the Latin property survives but
        // associativity breaks.
        let n = g.order();
        let (x, y1, y2) = (5, 7, 11);
        t.swap(x * n + y1, x * n + y2);
        let x2 = 9;
        t.swap(x2 * n + y1, x2 * n + y2);
        assert!(FiniteGroup::from_flat(n, t).is_err());
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let g = cyclic(7).unwrap();
        assert_eq!(g.pow(1, -1), g.inv(1));
        assert_eq!(g.pow(3, 7), 0);
        assert_eq!(g.mul(g.pow(2, -3), g.pow(2, 3)), 0);
    }
}
