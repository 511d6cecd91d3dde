//! Isomorphism testing by backtracking over generator images.
//!
//! A generating sequence `g₁, …, g_k` of the source is chosen greedily
//! (largest element order first, then smallest centralizer). Candidate images
//! must share an element signature (order, centralizer size, number of square
//! roots). After each assignment the map is extended along a breadth-first
//! spanning tree of `⟨g₁, …, g_i⟩` and checked to be an injective homomorphism
//! on that subgroup, which prunes inconsistent prefixes early.

use std::collections::BTreeMap;

use super::{FiniteGroup, GroupMap};
use crate::{Error, Result};

/// Largest order accepted by [`is_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 2500;

type Signature = (usize, usize, usize);

fn signatures(g: &FiniteGroup) -> Vec<Signature> {
    let orders = g.element_orders();
    let mut roots = vec![0usize; g.order()];
    for x in g.elements() {
        roots[g.mul(x, x)] += 1;
    }
    g.elements()
        .map(|x| (orders[x], g.centralizer_size(x), roots[x]))
        .collect()
}

fn signature_profile(sigs: &[Signature]) -> BTreeMap<Signature, usize> {
    let mut m = BTreeMap::new();
    for &s in sigs {
        *m.entry(s).or_insert(0) += 1;
    }
    m
}

/// One level of the search: the subgroup generated by the first `i+1`
/// generators, in BFS order, each non-identity element recorded as
/// `parent · gens[via]`.
struct Level {
    elements: Vec<usize>,
    parent: Vec<usize>,
    via: Vec<usize>,
}

fn build_levels(g: &FiniteGroup, gens: &[usize]) -> Vec<Level> {
    (1..=gens.len())
        .map(|k| {
            let mut seen = vec![false; g.order()];
            seen[0] = true;
            let mut level = Level {
                elements: vec![0],
                parent: vec![0],
                via: vec![0],
            };
            let mut head = 0;
            while head < level.elements.len() {
                let x = level.elements[head];
                for (i, &s) in gens[..k].iter().enumerate() {
                    let y = g.mul(x, s);
                    if !seen[y] {
                        seen[y] = true;
                        level.elements.push(y);
                        level.parent.push(x);
                        level.via.push(i);
                    }
                }
                head += 1;
            }
            level
        })
        .collect()
}

fn generating_sequence(g: &FiniteGroup, sigs: &[Signature]) -> Vec<usize> {
    let mut ranked: Vec<usize> = g.elements().skip(1).collect();
    ranked.sort_by_key(|&x| (std::cmp::Reverse(sigs[x].0), sigs[x].1, x));
    let mut gens = Vec::new();
    let mut current = g.subgroup_generated(&[]);
    for x in ranked {
        if current.is_whole() {
            break;
        }
        if !current.contains(x) {
            gens.push(x);
            current = g.subgroup_generated(&gens);
        }
    }
    gens
}

struct Search<'a> {
    source: &'a FiniteGroup,
    target: &'a FiniteGroup,
    gens: Vec<usize>,
    levels: Vec<Level>,
    candidates: Vec<Vec<usize>>,
    gen_images: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, k: usize) -> bool {
        let level = &self.levels[k];
        let (src, tgt) = (self.source, self.target);
        // Reset the images on this level, then rebuild along the BFS tree.
        for &x in &level.elements {
            if self.image[x] != usize::MAX {
                self.used[self.image[x]] = false;
                self.image[x] = usize::MAX;
            }
        }
        self.image[0] = 0;
        self.used[0] = true;
        for idx in 1..level.elements.len() {
            let x = level.elements[idx];
            let y = tgt.mul(
                self.image[level.parent[idx]],
                self.gen_images[level.via[idx]],
            );
            if self.used[y] {
                return false;
            }
            self.used[y] = true;
            self.image[x] = y;
        }
        for &x in &level.elements {
            let ix = self.image[x];
            for (i, &s) in self.gens[..=k].iter().enumerate() {
                if self.image[src.mul(x, s)] != tgt.mul(ix, self.gen_images[i]) {
                    return false;
                }
            }
        }
        true
    }

    fn clear_level(&mut self, k: usize) {
        for &x in &self.levels[k].elements {
            if self.image[x] != usize::MAX {
                self.used[self.image[x]] = false;
                self.image[x] = usize::MAX;
            }
        }
    }

    fn run(&mut self, k: usize) -> bool {
        if k == self.gens.len() {
            return true;
        }
        let candidates = std::mem::take(&mut self.candidates[k]);
        for &c in &candidates {
            self.gen_images[k] = c;
            // `extend` rebuilds the whole of ⟨g₁..g_k⟩ from the generator images,
            // and a failed deeper level wipes everything it touched.
            if self.extend(k) && self.run(k + 1) {
                self.candidates[k] = candidates;
                return true;
            }
        }
        self.clear_level(k);
        self.candidates[k] = candidates;
        false
    }
}

/// Returns an explicit isomorphism `g → h`, or `None` if the groups are not
/// isomorphic.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<GroupMap>> {
    for x in [g, h] {
        if x.order() > ISOMORPHISM_LIMIT {
            return Err(Error::SizeLimit {
                order: x.order() as u128,
                cap: ISOMORPHISM_LIMIT,
            });
        }
    }
    if g.order() != h.order() {
        return Ok(None);
    }
    let n = g.order();
    if n == 1 {
        return Ok(Some(GroupMap::identity(1)));
    }
    let (gs, hs) = (signatures(g), signatures(h));
    if signature_profile(&gs) != signature_profile(&hs) {
        return Ok(None);
    }

    let gens = generating_sequence(g, &gs);
    let levels = build_levels(g, &gens);
    let candidates = gens
        .iter()
        .map(|&x| h.elements().filter(|&y| hs[y] == gs[x]).collect())
        .collect();
    let mut search = Search {
        source: g,
        target: h,
        gen_images: vec![0; gens.len()],
        gens,
        levels,
        candidates,
        image: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if !search.run(0) {
        return Ok(None);
    }
    let map = GroupMap::new(n, search.image);
    if !map.is_isomorphism(g, h) {
        return Err(Error::Internal(
            "isomorphism search produced an invalid map".into(),
        ));
    }
    Ok(Some(map))
}

#[cfg(test)]
mod tests {
    use super::super::{cyclic, dicyclic, dihedral, direct_product, elementary_abelian, symmetric};
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn relabeled_copy_is_isomorphic() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for g in [
            symmetric(4).unwrap(),
            dicyclic(12).unwrap(),
            dihedral(16).unwrap(),
        ] {
            let (h, _) = g.random_relabel(&mut rng);
            let map = is_isomorphic(&g, &h).unwrap().expect("isomorphic");
            assert!(map.is_isomorphism(&g, &h));
        }
    }

    #[test]
    fn d8_and_q8_are_not_isomorphic() {
        let d8 = dihedral(8).unwrap();
        let q8 = dicyclic(8).unwrap();
        assert!(is_isomorphic(&d8, &q8).unwrap().is_none());
    }

    #[test]
    fn c4_and_klein_four_differ() {
        let c4 = cyclic(4).unwrap();
        let v4 = elementary_abelian(2, 2).unwrap();
        assert!(is_isomorphic(&c4, &v4).unwrap().is_none());
    }

    #[test]
    fn d12_is_s3_times_c2() {
        let d12 = dihedral(12).unwrap();
        let p = direct_product(&symmetric(3).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert!(is_isomorphic(&d12, &p).unwrap().is_some());
        assert!(is_isomorphic(&d12, &dicyclic(12).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn symmetric_and_composed_maps() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = dicyclic(16).unwrap();
        let (h, _) = g.random_relabel(&mut rng);
        let (k, _) = h.random_relabel(&mut rng);
        let gh = is_isomorphic(&g, &h).unwrap().unwrap();
        let hk = is_isomorphic(&h, &k).unwrap().unwrap();
        let hg = is_isomorphic(&h, &g).unwrap().unwrap();
        assert!(hg.is_isomorphism(&h, &g));
        assert!(gh.compose(&hk).is_isomorphism(&g, &k));
    }
}
