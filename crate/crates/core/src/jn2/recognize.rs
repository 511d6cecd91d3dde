use crate::fingroup::{is_prime, FiniteGroup};

/// The class `(p^j, m)` of a JN2 group: `|G′| = p`, `|ZG| = p^j`,
/// `|G/ZG| = p^{2m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Jn2Class {
    pub p: u64,
    pub j: u32,
    pub m: u32,
}

impl Jn2Class {
    pub fn center_order(&self) -> u64 {
        self.p.pow(self.j)
    }
}

fn log_exact(mut n: usize, p: usize) -> Option<u32> {
    let mut e = 0;
    while n > 1 {
        if n % p != 0 {
            return None;
        }
        n /= p;
        e += 1;
    }
    Some(e)
}

/// Recognizes JN2 groups through the structural characterization:
/// `G′` cyclic of prime order `p`, `ZG` cyclic of order `p^j`, and `G/ZG`
/// elementary abelian of exponent `p`.
pub fn is_jn2(g: &FiniteGroup) -> Option<Jn2Class> {
    let derived = g.derived_subgroup();
    let p = derived.order();
    if !is_prime(p as u64) {
        return None;
    }
    let center = g.center();
    let j = log_exact(center.order(), p)?;
    if j == 0 || !center.is_cyclic_in(g) {
        return None;
    }
    // G/ZG abelian of exponent p.
    if !derived.is_subset_of(&center) {
        return None;
    }
    if !g.elements().all(|x| center.contains(g.pow(x, p as i64))) {
        return None;
    }
    let v = log_exact(g.order() / center.order(), p)?;
    if v % 2 != 0 {
        return None;
    }
    Some(Jn2Class {
        p: p as u64,
        j,
        m: v / 2,
    })
}
