use super::{
    is_jn2, materialize, normalize_basis, symplectic_data, BasisType, Jn2Group, Jn2Spec, Variant,
};
use crate::fingroup::{FiniteGroup, GroupMap};
use crate::{Error, Result};

/// Identifies a JN2 group with its standard model and returns an explicit
/// isomorphism onto `materialize(spec)`.
pub fn classify(g: &FiniteGroup) -> Result<(Jn2Spec, GroupMap)> {
    let class = is_jn2(g).ok_or(Error::NotJn2)?;
    let base = Jn2Spec::new(Variant::I, class.p, class.j, class.m)?;
    let (spec, map) = if class.center_order() == 2 {
        classify_binary(g, base)?
    } else {
        classify_symplectic(g, base)?
    };
    let target = materialize(spec)?;
    if !map.is_isomorphism(g, &target.group) {
        return Err(Error::Internal(format!(
            "classification map onto {spec} is not an isomorphism"
        )));
    }
    Ok((spec, map))
}

/// `p^j = 2`: the two candidates differ in their number of elements of
/// order 4, so the order profile decides and a generic search supplies the map.
fn classify_binary(g: &FiniteGroup, base: Jn2Spec) -> Result<(Jn2Spec, GroupMap)> {
    let profile = g.order_profile();
    for variant in [Variant::I, Variant::II] {
        let spec = base.with_variant(variant);
        let model = materialize(spec)?;
        if model.group.order_profile() != profile {
            continue;
        }
        return match g.is_isomorphic(&model.group)? {
            Some(map) => Ok((spec, map)),
            None => Err(Error::Internal(format!(
                "{spec} matches the order profile but is not isomorphic"
            ))),
        };
    }
    Err(Error::Internal(
        "order profile matches neither standard group".into(),
    ))
}

fn classify_symplectic(g: &FiniteGroup, base: Jn2Spec) -> Result<(Jn2Spec, GroupMap)> {
    let center = g.center();
    let z = center
        .cyclic_generator(g)
        .ok_or_else(|| Error::Internal("center is not cyclic".into()))?;
    let data = normalize_basis(g, &symplectic_data(g, z)?)?;
    let variant = match data.basis_type {
        Some(BasisType::II) => Variant::II,
        _ => Variant::I,
    };
    let spec = base.with_variant(variant);
    let target = materialize(spec)?;
    let target_reps = standard_reps(&target);
    let images = g
        .elements()
        .map(|x| {
            let coords = data.coordinates(x);
            let w = data.element_from_vector(g, coords);
            let k = data
                .central_exponent(g.mul(x, g.inv(w)))
                .expect("x differs from its basis word by a central element");
            let word = target_reps.iter().zip(coords).fold(0, |acc, (&r, &e)| {
                target.group.mul(acc, target.group.pow(r, e as i64))
            });
            target.group.mul(target.z_pow(k), word)
        })
        .collect();
    Ok((spec, GroupMap::new(target.group.order(), images)))
}

fn standard_reps(target: &Jn2Group) -> Vec<usize> {
    target
        .a
        .iter()
        .zip(&target.b)
        .flat_map(|(&a, &b)| [a, b])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{dicyclic, dihedral, symmetric};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn standard_groups_round_trip() {
        for spec in Jn2Spec::all_up_to(243) {
            let g = materialize(spec).unwrap();
            let (found, map) = classify(&g.group).unwrap();
            assert_eq!(found, spec);
            assert!(map.is_isomorphism(&g.group, &g.group));
        }
    }

    #[test]
    fn relabeled_groups_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for s in ["II(3,1)", "I(2^2,2)", "II(2,2)", "II(5,1)"] {
            let spec: Jn2Spec = s.parse().unwrap();
            let g = materialize(spec).unwrap();
            let (h, _) = g.group.random_relabel(&mut rng);
            assert_eq!(classify(&h).unwrap().0, spec);
        }
    }

    #[test]
    fn named_groups() {
        assert_eq!(
            classify(&dihedral(8).unwrap()).unwrap().0.to_string(),
            "I(2,1)"
        );
        assert_eq!(
            classify(&dicyclic(8).unwrap()).unwrap().0.to_string(),
            "II(2,1)"
        );
        assert!(matches!(
            classify(&symmetric(3).unwrap()),
            Err(Error::NotJn2)
        ));
    }
}
