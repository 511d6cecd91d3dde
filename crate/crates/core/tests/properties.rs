use braidquot::braid::{
    bellingeri_presentation, find_witness, Generator, Letter, Word, DEFAULT_WITNESS_BUDGET,
};
use braidquot::fingroup::io::{parse_cayley, write_cayley};
use braidquot::fingroup::{cyclic, dihedral, elementary_abelian, symmetric, FiniteGroup};
use braidquot::jn2::{central_product, classify, cyclic_center_iso, materialize};
use braidquot::oracle::nonabelian_catalog_upto;
use braidquot::{Jn2Spec, Variant};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_specs() -> Vec<Jn2Spec> {
    Jn2Spec::all_up_to(64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relabeling_preserves_structure(seed in any::<u64>(), which in 0usize..4) {
        let g = [symmetric(4), dihedral(12), materialize("II(2^2,1)".parse().unwrap()).map(|j| j.group), cyclic(9)][which]
            .as_ref()
            .unwrap()
            .clone();
        let (h, map) = g.random_relabel(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(map.is_isomorphism(&g, &h));
        prop_assert_eq!(g.order_profile(), h.order_profile());
        prop_assert_eq!(g.center().order(), h.center().order());
        prop_assert_eq!(g.nilpotency(), h.nilpotency());
        prop_assert!(g.is_isomorphic(&h).unwrap().is_some());
    }

    #[test]
    fn cayley_text_round_trips(seed in any::<u64>()) {
        let g = dihedral(10).unwrap();
        let (h, _) = g.random_relabel(&mut ChaCha8Rng::seed_from_u64(seed));
        let back = parse_cayley(&write_cayley(&h)).unwrap();
        prop_assert_eq!(write_cayley(&back), write_cayley(&h));
    }

    #[test]
    fn classify_is_relabeling_invariant(seed in any::<u64>(), idx in 0usize..100) {
        let specs = small_specs();
        let spec = specs[idx % specs.len()];
        let g = materialize(spec).unwrap().group;
        let (h, _) = g.random_relabel(&mut ChaCha8Rng::seed_from_u64(seed));
        let (found, map) = classify(&h).unwrap();
        prop_assert_eq!(found, spec);
        prop_assert!(map.is_isomorphism(&h, &materialize(found).unwrap().group));
    }

    #[test]
    fn spec_text_round_trips(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), j in 1u32..4, m in 1u32..5, two in any::<bool>()) {
        let variant = if two { Variant::II } else { Variant::I };
        let spec = Jn2Spec::new(variant, p, j, m).unwrap();
        prop_assert_eq!(spec.to_string().parse::<Jn2Spec>().unwrap(), spec);
    }

    #[test]
    fn word_inverse_evaluates_to_inverse(letters in prop::collection::vec((0usize..5, any::<bool>()), 0..12)) {
        let s4 = symmetric(4).unwrap();
        let word = Word(
            letters
                .iter()
                .map(|&(k, inverse)| Letter {
                    generator: match k {
                        0 => Generator::Sigma(1),
                        1 => Generator::Sigma(2),
                        2 => Generator::A(1),
                        3 => Generator::B(1),
                        _ => Generator::Sigma(3),
                    },
                    inverse,
                })
                .collect(),
        );
        let images = [1usize, 5, 7, 11, 13];
        let assign = |x: Generator| match x {
            Generator::Sigma(i) => images[i - 1 + usize::from(i == 3)],
            Generator::A(_) => images[2],
            Generator::B(_) => images[3],
        };
        let x = word.evaluate(&s4, assign);
        let y = word.inverse().evaluate(&s4, assign);
        prop_assert_eq!(s4.mul(x, y), 0);
    }
}

/// Exhaustive search over all triples, evaluating the full presentation with
/// every braid generator sent to the same element.
fn naive_has_witness(group: &FiniteGroup, n: usize) -> bool {
    let p = bellingeri_presentation(n, 1).unwrap();
    let k = group.order();
    (0..k).any(|s| {
        (0..k).any(|a| {
            (0..k).any(|b| {
                let img = |x: Generator| match x {
                    Generator::Sigma(_) => s,
                    Generator::A(_) => a,
                    Generator::B(_) => b,
                };
                p.relators.iter().all(|r| r.word.evaluate(group, img) == 0)
                    && group.subgroup_generated(&[s, a, b]).is_whole()
            })
        })
    })
}

#[test]
fn witness_search_agrees_with_naive_enumeration() {
    let mut groups: Vec<FiniteGroup> = nonabelian_catalog_upto(15)
        .unwrap()
        .entries
        .into_iter()
        .map(|e| e.group)
        .collect();
    for spec in Jn2Spec::all_up_to(16) {
        groups.push(materialize(spec).unwrap().group);
    }
    groups.push(cyclic(6).unwrap());
    groups.push(elementary_abelian(2, 2).unwrap());
    let mut positives = 0;
    for g in &groups {
        for n in 3..=7 {
            let naive = naive_has_witness(g, n);
            let fast = find_witness(g, n, 1, DEFAULT_WITNESS_BUDGET).unwrap();
            assert_eq!(naive, fast.is_some(), "{:?} with n = {n}", g.label());
            positives += usize::from(naive);
        }
    }
    assert!(positives > 0);
}

#[test]
fn central_products_add_ranks() {
    for (base, m1, m2) in [
        ("I(3,1)", 1, 1),
        ("I(2,1)", 1, 2),
        ("I(2^2,1)", 1, 1),
        ("II(3,1)", 1, 1),
    ] {
        let spec: Jn2Spec = base.parse().unwrap();
        let left = materialize(Jn2Spec { m: m1, ..spec }).unwrap();
        let right = materialize(Jn2Spec {
            m: m2,
            variant: Variant::I,
            ..spec
        })
        .unwrap();
        let phi = cyclic_center_iso(&left.group, left.z, &right.group, right.z).unwrap();
        let product = central_product(&left.group, &right.group, &phi).unwrap();
        let (found, _) = classify(&product.group).unwrap();
        assert_eq!(
            (found.p, found.j, found.m),
            (spec.p, spec.j, m1 + m2),
            "{base}"
        );
        // Gluing a type II factor onto type I factors keeps type II.
        assert_eq!(found.variant, spec.variant, "{base}");
    }
}
