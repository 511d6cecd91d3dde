use super::{linalg, Jn2Spec, Variant};

/// Normal form `z^k · ∏ᵢ aᵢ^{αᵢ} bᵢ^{βᵢ}` of an element of a standard JN2
/// group, with `k mod p^j` and `αᵢ, βᵢ mod p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Jn2Element {
    pub k: u64,
    pub alpha: Vec<u64>,
    pub beta: Vec<u64>,
}

impl Jn2Element {
    pub fn identity(m: u32) -> Self {
        Jn2Element {
            k: 0,
            alpha: vec![0; m as usize],
            beta: vec![0; m as usize],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0 && self.alpha.iter().chain(&self.beta).all(|&e| e == 0)
    }
}

impl Jn2Spec {
    pub fn z(&self) -> Jn2Element {
        Jn2Element {
            k: 1 % self.center_order(),
            ..Jn2Element::identity(self.m)
        }
    }

    /// The generator `a_i` (1-based).
    pub fn a(&self, i: usize) -> Jn2Element {
        let mut e = Jn2Element::identity(self.m);
        e.alpha[i - 1] = 1;
        e
    }

    /// The generator `b_i` (1-based).
    pub fn b(&self, i: usize) -> Jn2Element {
        let mut e = Jn2Element::identity(self.m);
        e.beta[i - 1] = 1;
        e
    }

    pub fn is_valid(&self, x: &Jn2Element) -> bool {
        let m = self.m as usize;
        x.k < self.center_order()
            && x.alpha.len() == m
            && x.beta.len() == m
            && x.alpha.iter().chain(&x.beta).all(|&e| e < self.p)
    }

    /// Product in collected form.
    ///
    /// Pairs with different index commute, `b a = c⁻¹ a b` with
    /// `c = [a, b] = z^{p^{j-1}}`, and in variant II the first pair carries
    /// `a₁^p = b₁^p = z` into the central exponent.
    pub fn multiply(&self, x: &Jn2Element, y: &Jn2Element) -> Jn2Element {
        let p = self.p;
        let q = self.center_order();
        let c = q / p;
        let m = self.m as usize;
        let twist: u64 = (0..m).map(|i| x.beta[i] * y.alpha[i] % p).sum::<u64>() % p;
        let mut k = (x.k + y.k + (q - (c * twist) % q)) % q;
        let mut alpha = Vec::with_capacity(m);
        let mut beta = Vec::with_capacity(m);
        for i in 0..m {
            let sa = x.alpha[i] + y.alpha[i];
            let sb = x.beta[i] + y.beta[i];
            if i == 0 && self.variant == Variant::II {
                k = (k + sa / p + sb / p) % q;
            }
            alpha.push(sa % p);
            beta.push(sb % p);
        }
        Jn2Element { k, alpha, beta }
    }

    pub fn power(&self, x: &Jn2Element, mut e: u64) -> Jn2Element {
        let mut acc = Jn2Element::identity(self.m);
        let mut sq = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &sq);
            }
            sq = self.multiply(&sq, &sq);
            e >>= 1;
        }
        acc
    }

    /// Every element has order dividing `p^{j+1}`.
    pub fn inverse(&self, x: &Jn2Element) -> Jn2Element {
        self.power(x, self.center_order() * self.p - 1)
    }

    pub fn commutator(&self, x: &Jn2Element, y: &Jn2Element) -> Jn2Element {
        let xy = self.multiply(x, y);
        let inv = self.multiply(&self.inverse(x), &self.inverse(y));
        self.multiply(&xy, &inv)
    }

    /// The center of a standard group is exactly `⟨z⟩`.
    pub fn is_central(&self, x: &Jn2Element) -> bool {
        x.alpha.iter().chain(&x.beta).all(|&e| e == 0)
    }

    /// Whether `gens` generate the whole group, decided without enumerating it.
    ///
    /// Let `H = ⟨gens⟩` and let `C` be the central subgroup generated by the
    /// `p`-th powers and pairwise commutators of `gens`. Then `H/C` is
    /// elementary abelian, so `H ∩ ZG` is `C` together with the products
    /// `∏ gᵢ^{eᵢ}` for `e` in the kernel of the projection to `V`. `H` is the
    /// whole group iff the projection is onto and `H ∩ ZG` contains `z`.
    pub fn generates(&self, gens: &[Jn2Element]) -> bool {
        let p = self.p;
        let vectors: Vec<Vec<u64>> = gens
            .iter()
            .map(|x| x.alpha.iter().chain(&x.beta).copied().collect())
            .collect();
        if linalg::rank(&vectors, p) != 2 * self.m as usize {
            return false;
        }
        let mut central = Vec::new();
        for (i, x) in gens.iter().enumerate() {
            central.push(self.power(x, p).k);
            for y in &gens[i + 1..] {
                central.push(self.commutator(x, y).k);
            }
        }
        for e in linalg::left_kernel(&vectors, p) {
            let word = gens
                .iter()
                .zip(&e)
                .fold(Jn2Element::identity(self.m), |acc, (x, &c)| {
                    self.multiply(&acc, &self.power(x, c))
                });
            central.push(word.k);
        }
        // A cyclic p-group is generated by any element of exponent prime to p.
        central.iter().any(|&k| k % p != 0)
    }

    /// Position of `x` in the lexicographic order on `(k, α, β)`.
    pub fn index_of(&self, x: &Jn2Element) -> u128 {
        let p = self.p as u128;
        let mut idx = x.k as u128;
        for &d in x.alpha.iter().chain(&x.beta) {
            idx = idx * p + d as u128;
        }
        idx
    }

    pub fn element_at(&self, mut idx: u128) -> Jn2Element {
        let p = self.p as u128;
        let m = self.m as usize;
        let mut digits = vec![0u64; 2 * m];
        for d in digits.iter_mut().rev() {
            *d = (idx % p) as u64;
            idx /= p;
        }
        Jn2Element {
            k: idx as u64,
            alpha: digits[..m].to_vec(),
            beta: digits[m..].to_vec(),
        }
    }
}
