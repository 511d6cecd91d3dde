use super::FiniteGroup;

/// A map between the element sets of two finite groups.
///
/// Construction does not check anything; use [`GroupMap::is_homomorphism`] and
/// [`GroupMap::is_isomorphism`] to certify it against concrete groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMap {
    target_order: usize,
    images: Vec<usize>,
}

impl GroupMap {
    pub fn new(target_order: usize, images: Vec<usize>) -> Self {
        GroupMap {
            target_order,
            images,
        }
    }

    pub fn identity(order: usize) -> Self {
        GroupMap::new(order, (0..order).collect())
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn source_order(&self) -> usize {
        self.images.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        if self.images.len() != source.order()
            || self.target_order != target.order()
            || self.images.first() != Some(&0)
            || self.images.iter().any(|&v| v >= target.order())
        {
            return false;
        }
        source.elements().all(|x| {
            let ix = self.images[x];
            source
                .elements()
                .all(|y| self.images[source.mul(x, y)] == target.mul(ix, self.images[y]))
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target_order];
        self.images
            .iter()
            .all(|&v| v < self.target_order && !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target_order];
        for &v in &self.images {
            if v < self.target_order {
                seen[v] = true;
            }
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_isomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        source.order() == target.order()
            && self.is_injective()
            && self.is_homomorphism(source, target)
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &GroupMap) -> GroupMap {
        GroupMap::new(
            then.target_order,
            self.images.iter().map(|&x| then.images[x]).collect(),
        )
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<GroupMap> {
        if self.images.len() != self.target_order || !self.is_injective() {
            return None;
        }
        let mut back = vec![0; self.target_order];
        for (x, &y) in self.images.iter().enumerate() {
            back[y] = x;
        }
        Some(GroupMap::new(self.images.len(), back))
    }
}
