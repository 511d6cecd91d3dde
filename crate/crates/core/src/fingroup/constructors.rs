use std::collections::HashMap;

use itertools::Itertools;

use super::FiniteGroup;
use crate::{Error, Result};

/// Largest group order any constructor will materialize.
pub const DEFAULT_TABLE_CAP: usize = 10_000;

fn check_cap(order: u128) -> Result<usize> {
    if order > DEFAULT_TABLE_CAP as u128 {
        Err(Error::SizeLimit {
            order,
            cap: DEFAULT_TABLE_CAP,
        })
    } else {
        Ok(order as usize)
    }
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::ParamRange(
            "cyclic group order must be positive".into(),
        ));
    }
    check_cap(n as u128)?;
    let elems: Vec<usize> = (0..n).collect();
    Ok(FiniteGroup::from_elements(&elems, |a, b| (a + b) % n)?.with_label(format!("C{n}")))
}

/// `(Z/p)^k`, elements ordered as base-p numbers with the first coordinate most
/// significant.
pub fn elementary_abelian(p: usize, k: u32) -> Result<FiniteGroup> {
    if p < 2 || !is_prime(p as u64) {
        return Err(Error::ParamRange(format!("{p} is not prime")));
    }
    let order = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
    let n = check_cap(order)?;
    let k = k as usize;
    let elems: Vec<Vec<usize>> = (0..n)
        .map(|mut i| {
            let mut v = vec![0; k];
            for slot in v.iter_mut().rev() {
                *slot = i % p;
                i /= p;
            }
            v
        })
        .collect();
    let g = FiniteGroup::from_elements(&elems, |a, b| {
        a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
    })?;
    Ok(g.with_label(format!("E({p}^{k})")))
}

/// A symmetric group together with the permutation carried by each element.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    pub group: FiniteGroup,
    /// `perms[x][i]` is the image of point `i` under element `x`.
    pub perms: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl PermutationGroup {
    /// Index of the element carrying the given permutation, if present.
    pub fn element_of(&self, perm: &[u8]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// The adjacent transposition `(i, i+1)` on points `1..=degree`.
    pub fn transposition(&self, i: usize) -> Option<usize> {
        let degree = self.perms.first()?.len();
        if i == 0 || i >= degree {
            return None;
        }
        let mut p: Vec<u8> = (0..degree as u8).collect();
        p.swap(i - 1, i);
        self.element_of(&p)
    }
}

fn permutation_group(degree: usize, even_only: bool) -> Result<PermutationGroup> {
    let mut size: u128 = (1..=degree as u128).product();
    if even_only && degree >= 2 {
        size /= 2;
    }
    check_cap(size)?;
    let perms: Vec<Vec<u8>> = (0..degree as u8)
        .permutations(degree)
        .filter(|p| !even_only || is_even(p))
        .collect();
    // Composition `(x·y)(i) = x(y(i))`.
    let group =
        FiniteGroup::from_elements(&perms, |x, y| y.iter().map(|&i| x[i as usize]).collect())?;
    let index = perms
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    Ok(PermutationGroup {
        group,
        perms,
        index,
    })
}

fn is_even(p: &[u8]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// The symmetric group on `degree` points, elements in lexicographic order.
pub fn symmetric(degree: usize) -> Result<FiniteGroup> {
    Ok(symmetric_group(degree)?.group)
}

pub fn symmetric_group(degree: usize) -> Result<PermutationGroup> {
    let mut pg = permutation_group(degree, false)?;
    pg.group = pg.group.with_label(format!("S{degree}"));
    Ok(pg)
}

pub fn alternating(degree: usize) -> Result<FiniteGroup> {
    Ok(permutation_group(degree, true)?
        .group
        .with_label(format!("A{degree}")))
}

/// Dihedral group of the given order `2n`, elements `r^i s^e` ordered by `(e, i)`.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 2 || order % 2 != 0 {
        return Err(Error::ParamRange(format!(
            "dihedral order must be even and positive, got {order}"
        )));
    }
    check_cap(order as u128)?;
    let n = order / 2;
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|e| (0..n).map(move |i| (i, e))).collect();
    // s r s⁻¹ = r⁻¹
    let g = FiniteGroup::from_elements(&elems, |&(i, e), &(k, f)| {
        let k = if e == 1 { (n - k) % n } else { k };
        ((i + k) % n, (e + f) % 2)
    })?;
    Ok(g.with_label(format!("D{order}")))
}

/// Dicyclic group of order `4n`: `⟨x, y | x^{2n} = 1, y² = x^n, y x y⁻¹ = x⁻¹⟩`.
pub fn dicyclic(order: usize) -> Result<FiniteGroup> {
    if order < 4 || order % 4 != 0 {
        return Err(Error::ParamRange(format!(
            "dicyclic order must be a positive multiple of 4, got {order}"
        )));
    }
    check_cap(order as u128)?;
    let n = order / 4;
    let m = 2 * n;
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|e| (0..m).map(move |i| (i, e))).collect();
    let g = FiniteGroup::from_elements(&elems, |&(i, e), &(k, f)| {
        let k = if e == 1 { (m - k) % m } else { k };
        let carry = if e == 1 && f == 1 { n } else { 0 };
        ((i + k + carry) % m, (e + f) % 2)
    })?;
    Ok(g.with_label(format!("Dic{order}")))
}

/// `G × H` with `(g, h)` at index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let order = check_cap(g.order() as u128 * h.order() as u128)?;
    let hn = h.order();
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (xg, xh) = (x / hn, x % hn);
        for y in 0..order {
            let (yg, yh) = (y / hn, y % hn);
            table.push((g.mul(xg, yg) * hn + h.mul(xh, yh)) as u32);
        }
    }
    let product = FiniteGroup::from_flat(order, table)?;
    Ok(match (g.label(), h.label()) {
        (Some(a), Some(b)) => product.with_label(format!("{a}x{b}")),
        _ => product,
    })
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}
