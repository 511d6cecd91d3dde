//! Just 2-step nilpotent (JN2) groups.
//!
//! A finite group is JN2 when it has nilpotency class exactly 2 and every
//! proper quotient is abelian. Such a group is a `p`-group with `G′` of order
//! `p`, cyclic center `ZG` of order `p^j`, and `V = G/ZG ≅ F_p^{2m}`; the pair
//! `(p^j, m)` is its *class*. Up to isomorphism there are exactly two JN2
//! groups per class, the standard groups `I(p^j,m)` and `II(p^j,m)` built here.

mod central;
mod classify;
mod element;
mod linalg;
mod recognize;
mod standard;
mod symplectic;

use std::fmt;
use std::str::FromStr;

use crate::fingroup::is_prime;
use crate::{Error, Result};

pub use central::{central_product, cyclic_center_iso, CentralProduct};
pub use classify::classify;
pub use element::Jn2Element;
pub use recognize::{is_jn2, Jn2Class};
pub use standard::{materialize, Jn2Group};
pub use symplectic::{
    normalize_basis, symplectic_data, symplectic_data_with_basis, BasisType, SymplecticData,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `M(p^j)^{⊙m}`.
    I,
    /// `N(p^j) ⊙ M(p^j)^{⊙(m-1)}`.
    II,
}

/// Descriptor of a standard JN2 group `I(p^j,m)` or `II(p^j,m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Jn2Spec {
    pub p: u64,
    pub j: u32,
    pub m: u32,
    pub variant: Variant,
}

impl Jn2Spec {
    pub fn new(variant: Variant, p: u64, j: u32, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::ParamRange(format!("{p} is not prime")));
        }
        if j == 0 || m == 0 {
            return Err(Error::ParamRange("j and m must be positive".into()));
        }
        Ok(Jn2Spec { p, j, m, variant })
    }

    /// `|ZG| = p^j`.
    pub fn center_order(&self) -> u64 {
        self.p.pow(self.j)
    }

    /// `p^{2m+j}`, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        (self.p as u128).checked_pow(2 * self.m + self.j)
    }

    pub fn with_variant(self, variant: Variant) -> Self {
        Jn2Spec { variant, ..self }
    }

    /// Every standard spec (both variants) whose group order is at most `bound`,
    /// sorted by `(order, p, j, m, variant)`.
    pub fn all_up_to(bound: u128) -> Vec<Jn2Spec> {
        let mut specs = Vec::new();
        let mut p = 2u64;
        while (p as u128).pow(3) <= bound {
            if is_prime(p) {
                for m in 1.. {
                    if (p as u128).pow(2 * m + 1) > bound {
                        break;
                    }
                    for j in 1.. {
                        match (p as u128).checked_pow(2 * m + j) {
                            Some(o) if o <= bound => {
                                for variant in [Variant::I, Variant::II] {
                                    specs.push(Jn2Spec { p, j, m, variant });
                                }
                            }
                            _ => break,
                        }
                    }
                }
            }
            p += 1;
        }
        specs.sort_by_key(Jn2Spec::sort_key);
        specs
    }

    pub fn sort_key(&self) -> (u128, u64, u32, u32, Variant) {
        (
            self.order().unwrap_or(u128::MAX),
            self.p,
            self.j,
            self.m,
            self.variant,
        )
    }
}

impl fmt::Display for Jn2Spec {
    /// `I(p^j,m)`, with `^j` omitted when `j = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.variant {
            Variant::I => "I",
            Variant::II => "II",
        };
        if self.j == 1 {
            write!(f, "{v}({},{})", self.p, self.m)
        } else {
            write!(f, "{v}({}^{},{})", self.p, self.j, self.m)
        }
    }
}

impl FromStr for Jn2Spec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a JN2 spec: {s:?}"));
        let (variant, rest) = if let Some(r) = s.strip_prefix("II(") {
            (Variant::II, r)
        } else if let Some(r) = s.strip_prefix("I(") {
            (Variant::I, r)
        } else {
            return Err(bad());
        };
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let (pj, m) = inner.split_once(',').ok_or_else(bad)?;
        let (p, j) = match pj.split_once('^') {
            Some((p, j)) => (p, j.parse::<u32>().map_err(|_| bad())?),
            None => (pj, 1),
        };
        let p: u64 = p.parse().map_err(|_| bad())?;
        let m: u32 = m.parse().map_err(|_| bad())?;
        Jn2Spec::new(variant, p, j, m)
    }
}
