//! Exhaustive enumeration of groups of a given order.
//!
//! Fix an element `x` of maximal order `d` and label `yᵢ xᵉ` as `i·d + e`,
//! where `y₀ = 1, y₁, …` are left coset representatives of `⟨x⟩`. Right
//! multiplication by `x` is then the fixed permutation `R(i·d + e) =
//! i·d + (e+1 mod d)`, and every left translation `L_u` commutes with `R`, so
//! `L_u` is determined by the images of the block starts `i·d`. The search
//! picks rows for the smallest undetermined element and closes the set of
//! rows under composition (`L_{uv} = L_u ∘ L_v`); a complete consistent set is
//! the left regular representation of a group. Isomorphic duplicates are
//! removed at the end.

use itertools::Itertools;

use crate::fingroup::FiniteGroup;
use crate::{Error, Result};

/// Default node budget for [`enumerate_groups_exhaustive`].
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 50_000_000;

struct Enumerator {
    k: usize,
    d: usize,
    nodes: u64,
    budget: u64,
    found: Vec<Vec<u32>>,
}

type Rows = Vec<Option<Vec<u32>>>;

impl Enumerator {
    fn shift(&self, x: u32, e: usize) -> u32 {
        let (blk, off) = (x as usize / self.d, x as usize % self.d);
        (blk * self.d + (off + e) % self.d) as u32
    }

    fn row_from_starts(&self, starts: &[u32]) -> Vec<u32> {
        (0..self.k)
            .map(|x| self.shift(starts[x / self.d], x % self.d))
            .collect()
    }

    /// Defines `rows[u]` and propagates products; returns false on conflict.
    fn close(&self, rows: &mut Rows, u: usize, row: Vec<u32>) -> bool {
        if let Some(existing) = &rows[u] {
            return *existing == row;
        }
        rows[u] = Some(row);
        let mut queue = vec![u];
        while let Some(v) = queue.pop() {
            let defined: Vec<usize> = (0..self.k).filter(|&x| rows[x].is_some()).collect();
            for x in defined {
                for (left, right) in [(x, v), (v, x)] {
                    let lrow = rows[left].as_ref().unwrap();
                    let rrow = rows[right].as_ref().unwrap();
                    let product = lrow[right] as usize;
                    let composed: Vec<u32> = rrow.iter().map(|&t| lrow[t as usize]).collect();
                    match &rows[product] {
                        Some(existing) if *existing != composed => return false,
                        Some(_) => {}
                        None => {
                            rows[product] = Some(composed);
                            queue.push(product);
                        }
                    }
                }
            }
        }
        true
    }

    fn search(&mut self, rows: Rows) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded {
                explored: self.nodes,
            });
        }
        let Some(u) = rows.iter().position(Option::is_none) else {
            self.accept(&rows);
            return Ok(());
        };
        let blocks = self.k / self.d;
        let own = u / self.d;
        if blocks == 1 {
            let mut next = rows;
            if self.close(&mut next, u, self.row_from_starts(&[u as u32])) {
                self.search(next)?;
            }
            return Ok(());
        }
        let others: Vec<usize> = (0..blocks).filter(|&b| b != own).collect();
        for perm in others.iter().copied().permutations(blocks - 1) {
            for offsets in (0..blocks - 1).map(|_| 0..self.d).multi_cartesian_product() {
                let mut starts = vec![u as u32];
                starts.extend(
                    perm.iter()
                        .zip(&offsets)
                        .map(|(&b, &o)| (b * self.d + o) as u32),
                );
                let mut next = rows.clone();
                if self.close(&mut next, u, self.row_from_starts(&starts)) {
                    self.search(next)?;
                }
            }
        }
        Ok(())
    }

    fn accept(&mut self, rows: &Rows) {
        let table: Vec<u32> = rows
            .iter()
            .flat_map(|r| r.as_ref().unwrap().clone())
            .collect();
        // Every element must have order at most d.
        let max_order_ok = (0..self.k).all(|u| {
            let row = &table[u * self.k..(u + 1) * self.k];
            let mut x = u;
            let mut order = 1;
            while x != 0 {
                x = row[x] as usize;
                order += 1;
                if order > self.d {
                    return false;
                }
            }
            true
        });
        if max_order_ok {
            self.found.push(table);
        }
    }
}

/// All groups of order `k` up to isomorphism, ordered by decreasing maximal
/// element order and then by discovery.
pub fn enumerate_groups_exhaustive(k: usize, budget: u64) -> Result<Vec<FiniteGroup>> {
    if k == 0 {
        return Err(Error::ParamRange("order must be positive".into()));
    }
    let mut classes: Vec<FiniteGroup> = Vec::new();
    let mut nodes = 0;
    // A nontrivial group has an element of order at least 2.
    let smallest = if k == 1 { 1 } else { 2 };
    for d in (smallest..=k).rev().filter(|d| k % d == 0) {
        let mut e = Enumerator {
            k,
            d,
            nodes,
            budget,
            found: Vec::new(),
        };
        let mut rows: Rows = vec![None; k];
        rows[0] = Some((0..k as u32).collect());
        e.search(rows)?;
        nodes = e.nodes;
        for table in e.found {
            let g = FiniteGroup::from_flat(k, table)?;
            let mut new = true;
            for c in &classes {
                if g.is_isomorphic(c)?.is_some() {
                    new = false;
                    break;
                }
            }
            if new {
                classes.push(g);
            }
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{cyclic, elementary_abelian, symmetric};

    fn classes(k: usize) -> Vec<FiniteGroup> {
        enumerate_groups_exhaustive(k, DEFAULT_ENUMERATION_BUDGET).unwrap()
    }

    #[test]
    fn small_counts() {
        let expected = [1, 1, 1, 2, 1, 2, 1, 5];
        for (k, &count) in (1..=8).zip(&expected) {
            assert_eq!(classes(k).len(), count, "order {k}");
        }
    }

    #[test]
    fn order_4_is_c4_and_v4() {
        let c = classes(4);
        assert!(c[0].is_isomorphic(&cyclic(4).unwrap()).unwrap().is_some());
        assert!(c[1]
            .is_isomorphic(&elementary_abelian(2, 2).unwrap())
            .unwrap()
            .is_some());
    }

    #[test]
    fn order_6_has_s3() {
        let c = classes(6);
        let nonabelian: Vec<_> = c.iter().filter(|g| !g.is_abelian()).collect();
        assert_eq!(nonabelian.len(), 1);
        assert!(nonabelian[0]
            .is_isomorphic(&symmetric(3).unwrap())
            .unwrap()
            .is_some());
    }

    #[test]
    fn budget_and_range() {
        assert!(matches!(
            enumerate_groups_exhaustive(8, 3),
            Err(Error::SearchBudgetExceeded { .. })
        ));
        assert!(enumerate_groups_exhaustive(0, 10).is_err());
    }
}
