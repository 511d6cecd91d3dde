use super::{Jn2Element, Jn2Spec};
use crate::fingroup::{FiniteGroup, DEFAULT_TABLE_CAP};
use crate::{Error, Result};

/// A materialized standard JN2 group with its distinguished generators.
#[derive(Clone, Debug)]
pub struct Jn2Group {
    pub spec: Jn2Spec,
    pub group: FiniteGroup,
    pub z: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl Jn2Group {
    pub fn index_of(&self, x: &Jn2Element) -> usize {
        self.spec.index_of(x) as usize
    }

    pub fn element_at(&self, idx: usize) -> Jn2Element {
        self.spec.element_at(idx as u128)
    }

    /// `z^e` as an element index.
    pub fn z_pow(&self, e: u64) -> usize {
        self.group.pow(self.z, e as i64)
    }
}

/// Builds the Cayley table of `I(p^j,m)` or `II(p^j,m)` with elements in
/// lexicographic order of their normal forms `(k, α, β)`.
pub fn materialize(spec: Jn2Spec) -> Result<Jn2Group> {
    let order = spec.order().unwrap_or(u128::MAX);
    if order > DEFAULT_TABLE_CAP as u128 {
        return Err(Error::SizeLimit {
            order,
            cap: DEFAULT_TABLE_CAP,
        });
    }
    let n = order as usize;
    let elements: Vec<Jn2Element> = (0..n as u128).map(|i| spec.element_at(i)).collect();
    let mut table = Vec::with_capacity(n * n);
    for x in &elements {
        for y in &elements {
            table.push(spec.index_of(&spec.multiply(x, y)) as u32);
        }
    }
    let group = FiniteGroup::from_flat(n, table)?.with_label(spec.to_string());
    let m = spec.m as usize;
    Ok(Jn2Group {
        z: spec.index_of(&spec.z()) as usize,
        a: (1..=m)
            .map(|i| spec.index_of(&spec.a(i)) as usize)
            .collect(),
        b: (1..=m)
            .map(|i| spec.index_of(&spec.b(i)) as usize)
            .collect(),
        spec,
        group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{dicyclic, dihedral};

    fn build(s: &str) -> Jn2Group {
        materialize(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn m2_is_d8_and_n2_is_q8() {
        let m2 = build("I(2,1)");
        let n2 = build("II(2,1)");
        assert!(m2
            .group
            .is_isomorphic(&dihedral(8).unwrap())
            .unwrap()
            .is_some());
        assert!(n2
            .group
            .is_isomorphic(&dicyclic(8).unwrap())
            .unwrap()
            .is_some());
    }

    #[test]
    fn m5_has_order_125_and_center_5() {
        let g = build("I(5,1)");
        assert_eq!(g.group.order(), 125);
        assert_eq!(g.group.center().order(), 5);
        assert!(g.group.center().contains(g.z));
    }

    #[test]
    fn generators_satisfy_presentation() {
        for s in ["I(3^2,1)", "II(3^2,1)", "II(2^2,2)", "I(2^3,1)"] {
            let g = build(s);
            let q = g.spec.center_order();
            let grp = &g.group;
            assert_eq!(grp.element_order(g.z) as u64, q);
            for i in 0..g.spec.m as usize {
                assert_eq!(grp.commutator(g.a[i], g.b[i]), g.z_pow(q / g.spec.p), "{s}");
                let ap = grp.pow(g.a[i], g.spec.p as i64);
                let expected = if i == 0 && g.spec.variant == super::super::Variant::II {
                    g.z
                } else {
                    0
                };
                assert_eq!(ap, expected, "{s}");
            }
        }
    }

    #[test]
    fn too_large_refused() {
        assert!(matches!(
            materialize("I(7,2)".parse().unwrap()),
            Err(Error::SizeLimit { .. })
        ));
    }
}
