use std::collections::BTreeMap;

use crate::fingroup::{direct_product, FiniteGroup, GroupMap, Subgroup};
use crate::{Error, Result};

/// `G ⊙ H` together with the canonical maps from each factor.
#[derive(Clone, Debug)]
pub struct CentralProduct {
    pub group: FiniteGroup,
    pub left: GroupMap,
    pub right: GroupMap,
}

/// The isomorphism `ZG → ZH` sending `zg^k ↦ zh^k` for cyclic centers
/// generated by `zg` and `zh`.
pub fn cyclic_center_iso(
    g: &FiniteGroup,
    zg: usize,
    h: &FiniteGroup,
    zh: usize,
) -> Result<BTreeMap<usize, usize>> {
    let (cg, ch) = (g.center(), h.center());
    if cg.order() != ch.order() {
        return Err(Error::CenterMismatch(format!(
            "centers have orders {} and {}",
            cg.order(),
            ch.order()
        )));
    }
    if g.element_order(zg) != cg.order() || !cg.contains(zg) {
        return Err(Error::NotGenerator(zg));
    }
    if h.element_order(zh) != ch.order() || !ch.contains(zh) {
        return Err(Error::NotGenerator(zh));
    }
    let mut phi = BTreeMap::new();
    let (mut x, mut y) = (0, 0);
    for _ in 0..cg.order() {
        phi.insert(x, y);
        x = g.mul(x, zg);
        y = h.mul(y, zh);
    }
    Ok(phi)
}

fn check_center_iso(
    g: &FiniteGroup,
    h: &FiniteGroup,
    phi: &BTreeMap<usize, usize>,
) -> Result<(Subgroup, Subgroup)> {
    let (cg, ch) = (g.center(), h.center());
    if phi.keys().copied().ne(cg.elements().iter().copied()) {
        return Err(Error::CenterMismatch(
            "map is not defined exactly on the center of the first factor".into(),
        ));
    }
    let mut values: Vec<usize> = phi.values().copied().collect();
    values.sort_unstable();
    if values != ch.elements() {
        return Err(Error::CenterMismatch(
            "map is not a bijection onto the center of the second factor".into(),
        ));
    }
    for (&x, &fx) in phi {
        for (&y, &fy) in phi {
            if phi[&g.mul(x, y)] != h.mul(fx, fy) {
                return Err(Error::CenterMismatch("map is not a homomorphism".into()));
            }
        }
    }
    Ok((cg, ch))
}

/// `(G × H) / {(c, φ(c)⁻¹) : c ∈ ZG}`.
pub fn central_product(
    g: &FiniteGroup,
    h: &FiniteGroup,
    phi: &BTreeMap<usize, usize>,
) -> Result<CentralProduct> {
    check_center_iso(g, h, phi)?;
    let product = direct_product(g, h)?;
    let hn = h.order();
    let pair = |x: usize, y: usize| x * hn + y;
    let identified: Vec<usize> = phi.iter().map(|(&c, &fc)| pair(c, h.inv(fc))).collect();
    let normal = product.subgroup_generated(&identified);
    debug_assert_eq!(normal.order(), phi.len());
    let (quotient, proj) = product.quotient(&normal)?;
    let left = GroupMap::new(
        quotient.order(),
        g.elements().map(|x| proj.image(pair(x, 0))).collect(),
    );
    let right = GroupMap::new(
        quotient.order(),
        h.elements().map(|y| proj.image(pair(0, y))).collect(),
    );
    let group = match (g.label(), h.label()) {
        (Some(a), Some(b)) => quotient.with_label(format!("{a}.{b}")),
        _ => quotient,
    };
    Ok(CentralProduct { group, left, right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::cyclic;
    use crate::jn2::{is_jn2, materialize, Jn2Class};

    #[test]
    fn c2_with_itself_is_c2() {
        let c2 = cyclic(2).unwrap();
        let phi = cyclic_center_iso(&c2, 1, &c2, 1).unwrap();
        let cp = central_product(&c2, &c2, &phi).unwrap();
        assert_eq!(cp.group.order(), 2);
        assert!(cp.left.is_homomorphism(&c2, &cp.group));
        assert!(cp.right.is_homomorphism(&c2, &cp.group));
    }

    #[test]
    fn m3_squared_is_i31_2() {
        let m3 = materialize("I(3,1)".parse().unwrap()).unwrap();
        let phi = cyclic_center_iso(&m3.group, m3.z, &m3.group, m3.z).unwrap();
        let cp = central_product(&m3.group, &m3.group, &phi).unwrap();
        assert_eq!(cp.group.order(), 243);
        assert_eq!(is_jn2(&cp.group), Some(Jn2Class { p: 3, j: 1, m: 2 }));
        let target = materialize("I(3,2)".parse().unwrap()).unwrap();
        assert!(cp.group.is_isomorphic(&target.group).unwrap().is_some());
        assert!(cp.left.is_injective());
    }

    #[test]
    fn mismatched_centers_rejected() {
        let m2 = materialize("I(2,1)".parse().unwrap()).unwrap();
        let m3 = materialize("I(3,1)".parse().unwrap()).unwrap();
        assert!(matches!(
            cyclic_center_iso(&m2.group, m2.z, &m3.group, m3.z),
            Err(Error::CenterMismatch(_))
        ));
        let mut phi = BTreeMap::new();
        phi.insert(0, 0);
        assert!(matches!(
            central_product(&m2.group, &m2.group, &phi),
            Err(Error::CenterMismatch(_))
        ));
    }
}
