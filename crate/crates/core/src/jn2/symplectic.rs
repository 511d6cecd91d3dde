//! The symplectic space `V = G/ZG` of a JN2 group.
//!
//! With a generator `z` of `ZG` fixed, `c = z^{p^{j-1}}` generates `G′` and
//! identifies it with `F_p`. The commutator pairing `(x, y) ↦ [x, y]` is then
//! an alternating nondegenerate form on `V`, and `ν(x) = x^p mod (ZG)^p` is a
//! linear functional whenever `p^j ≠ 2`. A basis is *normalized* when the Gram
//! matrix is the standard symplectic one and the lifted representatives satisfy
//! `aᵢ^p = bᵢ^p = 1` (type I) or `a₁^p = b₁^p = z` with the rest trivial
//! (type II).

use super::is_jn2;
use super::linalg::{inv_mod, solve};
use crate::fingroup::FiniteGroup;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisType {
    I,
    II,
}

#[derive(Clone, Debug)]
pub struct SymplecticData {
    pub p: u64,
    pub j: u32,
    pub m: usize,
    pub z: usize,
    /// Representatives of a basis of `V`, in pair order `a₁, b₁, …, a_m, b_m`
    /// once normalized.
    pub coset_basis: Vec<usize>,
    /// `gram[i][l] = t` where `[rᵢ, r_l] = c^t`.
    pub gram: Vec<Vec<u64>>,
    /// `ν` evaluated on the basis representatives.
    pub nu: Vec<u64>,
    pub basis_type: Option<BasisType>,
    /// Equal to `coset_basis`; after normalization these satisfy the power
    /// conditions of the basis type exactly.
    pub lifted_reps: Vec<usize>,
    zlog: Vec<Option<u64>>,
    coords: Vec<Vec<u64>>,
}

impl SymplecticData {
    pub fn center_order(&self) -> u64 {
        self.p.pow(self.j)
    }

    /// `k` with `x = z^k`, for central `x`.
    pub fn central_exponent(&self, x: usize) -> Option<u64> {
        self.zlog[x]
    }

    /// Coordinates of `x mod ZG` in the basis.
    pub fn coordinates(&self, x: usize) -> &[u64] {
        &self.coords[x]
    }

    /// The pairing value of `[x, y]` in `F_p`.
    pub fn pairing(&self, g: &FiniteGroup, x: usize, y: usize) -> u64 {
        let k = self.zlog[g.commutator(x, y)].expect("commutators are central");
        let c = self.center_order() / self.p;
        debug_assert_eq!(k % c, 0);
        (k / c) % self.p
    }

    /// `ν(x mod ZG)`: the exponent of `x^p` in `ZG/(ZG)^p ≅ F_p`.
    pub fn nu_of(&self, g: &FiniteGroup, x: usize) -> u64 {
        self.zlog[g.pow(x, self.p as i64)].expect("p-th powers are central") % self.p
    }

    /// The product `∏ rᵢ^{vᵢ}` over the basis representatives.
    pub fn element_from_vector(&self, g: &FiniteGroup, v: &[u64]) -> usize {
        self.coset_basis
            .iter()
            .zip(v)
            .fold(0, |acc, (&r, &e)| g.mul(acc, g.pow(r, e as i64)))
    }

    /// Bilinear form on coordinate vectors.
    pub fn form(&self, u: &[u64], v: &[u64]) -> u64 {
        form(&self.gram, u, v, self.p)
    }

    pub fn is_standard_gram(&self) -> bool {
        let n = 2 * self.m;
        (0..n).all(|i| {
            (0..n).all(|l| {
                let expected = if i % 2 == 0 && l == i + 1 {
                    1
                } else if i % 2 == 1 && l + 1 == i {
                    self.p - 1
                } else {
                    0
                };
                self.gram[i][l] == expected
            })
        })
    }
}

fn form(gram: &[Vec<u64>], u: &[u64], v: &[u64], p: u64) -> u64 {
    let mut acc = 0;
    for (i, &ui) in u.iter().enumerate() {
        if ui == 0 {
            continue;
        }
        for (l, &vl) in v.iter().enumerate() {
            acc = (acc + ui * gram[i][l] % p * vl) % p;
        }
    }
    acc
}

fn axpy(y: &mut [u64], a: u64, x: &[u64], p: u64) {
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = (*yi + a * xi) % p;
    }
}

fn scale(x: &[u64], a: u64, p: u64) -> Vec<u64> {
    x.iter().map(|&v| v * a % p).collect()
}

/// Symplectic data for `G` relative to `z`, on the greedy basis of smallest
/// representatives.
pub fn symplectic_data(g: &FiniteGroup, z: usize) -> Result<SymplecticData> {
    let class = is_jn2(g).ok_or(Error::NotJn2)?;
    check_generator(g, z, class.center_order())?;
    let mut reps = Vec::new();
    let mut span = g.subgroup_generated(&[z]);
    for x in g.elements() {
        if span.is_whole() {
            break;
        }
        if !span.contains(x) {
            reps.push(x);
            let mut gens = reps.clone();
            gens.push(z);
            span = g.subgroup_generated(&gens);
        }
    }
    build(g, z, class.p, class.j, class.m as usize, reps)
}

/// Symplectic data relative to a caller-chosen basis of representatives.
pub fn symplectic_data_with_basis(
    g: &FiniteGroup,
    z: usize,
    reps: &[usize],
) -> Result<SymplecticData> {
    let class = is_jn2(g).ok_or(Error::NotJn2)?;
    check_generator(g, z, class.center_order())?;
    let mut gens = reps.to_vec();
    gens.push(z);
    if reps.len() != 2 * class.m as usize || !g.subgroup_generated(&gens).is_whole() {
        return Err(Error::ParamRange(format!(
            "{} representatives do not form a basis of G/ZG (dimension {})",
            reps.len(),
            2 * class.m
        )));
    }
    build(g, z, class.p, class.j, class.m as usize, reps.to_vec())
}

fn check_generator(g: &FiniteGroup, z: usize, center_order: u64) -> Result<()> {
    if !g.is_central(z) {
        return Err(Error::NotCentral(z));
    }
    if g.element_order(z) as u64 != center_order {
        return Err(Error::NotGenerator(z));
    }
    Ok(())
}

fn build(
    g: &FiniteGroup,
    z: usize,
    p: u64,
    j: u32,
    m: usize,
    reps: Vec<usize>,
) -> Result<SymplecticData> {
    let q = p.pow(j);
    let dim = 2 * m;
    if reps.len() != dim {
        return Err(Error::Internal(format!(
            "dim V = {}, expected {dim}",
            reps.len()
        )));
    }
    let mut zlog = vec![None; g.order()];
    let mut zp = 0;
    for k in 0..q {
        zlog[zp] = Some(k);
        zp = g.mul(zp, z);
    }

    // Every element is uniquely z^k ∏ rᵢ^{eᵢ}; enumerate them all.
    let rep_pows: Vec<Vec<usize>> = reps
        .iter()
        .map(|&r| (0..p).map(|e| g.pow(r, e as i64)).collect())
        .collect();
    let mut coords: Vec<Option<Vec<u64>>> = vec![None; g.order()];
    for mut code in 0..p.pow(dim as u32) {
        let mut digits = vec![0u64; dim];
        for d in digits.iter_mut().rev() {
            *d = code % p;
            code /= p;
        }
        let mut x = digits
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &e)| g.mul(acc, rep_pows[i][e as usize]));
        for _ in 0..q {
            if coords[x].is_some() {
                return Err(Error::Internal(
                    "basis representatives are dependent".into(),
                ));
            }
            coords[x] = Some(digits.clone());
            x = g.mul(x, z);
        }
    }
    let coords: Vec<Vec<u64>> = coords
        .into_iter()
        .map(|c| c.ok_or_else(|| Error::Internal("basis does not span G/ZG".into())))
        .collect::<Result<_>>()?;

    let mut data = SymplecticData {
        p,
        j,
        m,
        z,
        coset_basis: reps.clone(),
        gram: vec![vec![0; dim]; dim],
        nu: vec![0; dim],
        basis_type: None,
        lifted_reps: reps,
        zlog,
        coords,
    };
    for i in 0..dim {
        for l in 0..dim {
            data.gram[i][l] = data.pairing(g, data.coset_basis[i], data.coset_basis[l]);
        }
        data.nu[i] = data.nu_of(g, data.coset_basis[i]);
    }
    Ok(data)
}

/// Greedy hyperbolic-pair extraction from a spanning set of a nondegenerate
/// subspace.
fn hyperbolic_pairs(
    gram: &[Vec<u64>],
    p: u64,
    mut pool: Vec<Vec<u64>>,
) -> Result<Vec<(Vec<u64>, Vec<u64>)>> {
    let mut pairs = Vec::new();
    while let Some(u) = pool.iter().find(|v| v.iter().any(|&x| x != 0)).cloned() {
        let (x, b) = pool
            .iter()
            .map(|x| (x, form(gram, &u, x, p)))
            .find(|&(_, b)| b != 0)
            .ok_or_else(|| Error::Internal("pairing is degenerate".into()))?;
        let f = scale(x, inv_mod(b, p), p);
        pool = project(gram, p, &pool, &u, &f);
        pairs.push((u, f));
    }
    Ok(pairs)
}

/// Projects `w ↦ w − B(w,f)·u + B(w,u)·f` onto the complement of the pair.
fn project(gram: &[Vec<u64>], p: u64, pool: &[Vec<u64>], u: &[u64], f: &[u64]) -> Vec<Vec<u64>> {
    pool.iter()
        .map(|w| {
            let mut w = w.clone();
            let bwf = form(gram, &w, f, p);
            let bwu = form(gram, &w, u, p);
            axpy(&mut w, (p - bwf) % p, u, p);
            axpy(&mut w, bwu, f, p);
            w
        })
        .collect()
}

/// Produces a normalized basis of type I or II with representatives satisfying
/// the power conditions exactly. Requires `p^j ≠ 2`.
pub fn normalize_basis(g: &FiniteGroup, data: &SymplecticData) -> Result<SymplecticData> {
    let p = data.p;
    let q = data.center_order();
    if q == 2 {
        return Err(Error::Unsupported(
            "ν is not linear when p^j = 2; classify by element orders instead".into(),
        ));
    }
    let dim = 2 * data.m;
    let unit = |i: usize| {
        let mut e = vec![0; dim];
        e[i] = 1;
        e
    };
    let standard: Vec<Vec<u64>> = (0..dim).map(unit).collect();

    let (mut pairs, basis_type) = if data.nu.iter().all(|&v| v == 0) {
        (Vec::new(), BasisType::I)
    } else {
        // ν = B(n, ·) for a unique n. A first vector v with ν(v) = 1 and the
        // partner w = v − n give B(v, w) = 1 and ν(w) = 1, and ν vanishes on
        // the symplectic complement of span(v, w).
        let transpose: Vec<Vec<u64>> = (0..dim)
            .map(|r| (0..dim).map(|c| data.gram[c][r]).collect())
            .collect();
        let n = solve(&transpose, &data.nu, p)
            .ok_or_else(|| Error::Internal("pairing is degenerate".into()))?;
        let i = data.nu.iter().position(|&v| v != 0).unwrap();
        let v = scale(&unit(i), inv_mod(data.nu[i], p), p);
        let mut w = v.clone();
        axpy(&mut w, p - 1, &n, p);
        (vec![(v, w)], BasisType::II)
    };
    let pool = match pairs.first() {
        Some((v, w)) => project(&data.gram, p, &standard, v, w),
        None => standard,
    };
    pairs.extend(hyperbolic_pairs(&data.gram, p, pool)?);
    if pairs.len() != data.m {
        return Err(Error::Internal(
            "symplectic basis has the wrong size".into(),
        ));
    }

    // Lift: x^p = z^s with s ≡ ν(x) mod p; replace x by x·z^{-(s-ν)/p}.
    let mut lifted = Vec::with_capacity(dim);
    for (idx, (e, f)) in pairs.iter().enumerate() {
        let target_nu = u64::from(basis_type == BasisType::II && idx == 0);
        for vec in [e, f] {
            let x = data.element_from_vector(g, vec);
            let s = data.zlog[g.pow(x, p as i64)].expect("p-th powers are central");
            if s % p != target_nu {
                return Err(Error::Internal("ν pattern not achieved".into()));
            }
            let shift = ((s + q - target_nu) % q) / p;
            lifted.push(g.mul(x, g.pow(data.z, -(shift as i64))));
        }
    }

    let mut normalized = build(g, data.z, p, data.j, data.m, lifted)?;
    normalized.basis_type = Some(basis_type);
    verify_normalized(g, &normalized)?;
    Ok(normalized)
}

fn verify_normalized(g: &FiniteGroup, data: &SymplecticData) -> Result<()> {
    let q = data.center_order();
    let c = g.pow(data.z, (q / data.p) as i64);
    let reps = &data.lifted_reps;
    for (i, &x) in reps.iter().enumerate() {
        for (l, &y) in reps.iter().enumerate() {
            let expected = if i % 2 == 0 && l == i + 1 {
                c
            } else if i % 2 == 1 && l + 1 == i {
                g.inv(c)
            } else {
                0
            };
            if g.commutator(x, y) != expected {
                return Err(Error::Internal(format!(
                    "lifted representatives {i}, {l} do not form a symplectic basis"
                )));
            }
        }
        let expected_power = if data.basis_type == Some(BasisType::II) && i < 2 {
            data.z
        } else {
            0
        };
        if g.pow(x, data.p as i64) != expected_power {
            return Err(Error::Internal(format!(
                "lifted representative {i} has the wrong p-th power"
            )));
        }
    }
    Ok(())
}
