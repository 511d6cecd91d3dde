use std::fmt;

use crate::{Error, Result};

/// A generator of the surface braid group presentation (indices 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Sigma(usize),
    A(usize),
    B(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sigma(i) => write!(f, "s{i}"),
            Generator::A(i) => write!(f, "a{i}"),
            Generator::B(i) => write!(f, "b{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn inverted(self) -> Letter {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn gen(g: Generator) -> Word {
        Word(vec![Letter {
            generator: g,
            inverse: false,
        }])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn then(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn pow(&self, e: usize) -> Word {
        Word(
            self.0
                .iter()
                .copied()
                .cycle()
                .take(self.0.len() * e)
                .collect(),
        )
    }

    /// `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.then(y).then(&x.inverse()).then(&y.inverse())
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.0.iter().map(|l| l.generator)
    }

    /// Evaluates the word in `group` under the given assignment.
    pub fn evaluate<G: GroupLike>(
        &self,
        group: &G,
        assign: impl Fn(Generator) -> G::Elem,
    ) -> G::Elem {
        self.0.iter().fold(group.identity(), |acc, l| {
            let x = assign(l.generator);
            let x = if l.inverse { group.inverse(&x) } else { x };
            group.op(&acc, &x)
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.generator)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Anything relators can be evaluated in.
pub trait GroupLike {
    type Elem: Clone + PartialEq;
    fn identity(&self) -> Self::Elem;
    fn op(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inverse(&self, x: &Self::Elem) -> Self::Elem;
    fn is_central(&self, x: &Self::Elem) -> bool;
    fn generated_by(&self, gens: &[Self::Elem]) -> bool;

    fn is_identity(&self, x: &Self::Elem) -> bool {
        *x == self.identity()
    }
}

impl GroupLike for crate::fingroup::FiniteGroup {
    type Elem = usize;
    fn identity(&self) -> usize {
        0
    }
    fn op(&self, x: &usize, y: &usize) -> usize {
        self.mul(*x, *y)
    }
    fn inverse(&self, x: &usize) -> usize {
        self.inv(*x)
    }
    fn is_central(&self, x: &usize) -> bool {
        crate::fingroup::FiniteGroup::is_central(self, *x)
    }
    fn generated_by(&self, gens: &[usize]) -> bool {
        self.subgroup_generated(gens).is_whole()
    }
}

impl GroupLike for crate::jn2::Jn2Spec {
    type Elem = crate::jn2::Jn2Element;
    fn identity(&self) -> Self::Elem {
        crate::jn2::Jn2Element::identity(self.m)
    }
    fn op(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.multiply(x, y)
    }
    fn inverse(&self, x: &Self::Elem) -> Self::Elem {
        crate::jn2::Jn2Spec::inverse(self, x)
    }
    fn is_central(&self, x: &Self::Elem) -> bool {
        crate::jn2::Jn2Spec::is_central(self, x)
    }
    fn generated_by(&self, gens: &[Self::Elem]) -> bool {
        self.generates(gens)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationFamily {
    /// `[σᵢ, σⱼ] = 1` for `|i − j| ≥ 2`.
    BraidCommute,
    /// `σᵢ σᵢ₊₁ σᵢ = σᵢ₊₁ σᵢ σᵢ₊₁`.
    BraidTriple,
    R1,
    R2,
    R3,
    R4,
    TR,
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationFamily::BraidCommute => "braid-commute",
            RelationFamily::BraidTriple => "braid-triple",
            RelationFamily::R1 => "R1",
            RelationFamily::R2 => "R2",
            RelationFamily::R3 => "R3",
            RelationFamily::R4 => "R4",
            RelationFamily::TR => "TR",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub family: RelationFamily,
    pub word: Word,
}

/// A finite presentation of `B_n(Σ_g)` or of its braid-reduced quotients.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub n: usize,
    pub g: usize,
    /// Reduced presentations have the single braid generator `σ = s1`.
    pub reduced: bool,
    pub relators: Vec<Relator>,
}

impl Presentation {
    pub fn generators(&self) -> Vec<Generator> {
        let sigmas = if self.reduced { 1 } else { self.n - 1 };
        (1..=sigmas)
            .map(Generator::Sigma)
            .chain((1..=self.g).map(Generator::A))
            .chain((1..=self.g).map(Generator::B))
            .collect()
    }

    pub fn family(&self, family: RelationFamily) -> impl Iterator<Item = &Relator> {
        self.relators.iter().filter(move |r| r.family == family)
    }

    pub fn count(&self, family: RelationFamily) -> usize {
        self.family(family).count()
    }

    /// Whether every relator uses only declared generators.
    pub fn is_well_formed(&self) -> bool {
        let gens = self.generators();
        self.relators
            .iter()
            .all(|r| r.word.generators().all(|g| gens.contains(&g)))
    }
}

fn s(i: usize) -> Word {
    Word::gen(Generator::Sigma(i))
}

fn a(r: usize) -> Word {
    Word::gen(Generator::A(r))
}

fn b(r: usize) -> Word {
    Word::gen(Generator::B(r))
}

/// The full presentation of the surface braid group with generators
/// `σ₁..σ_{n−1}, a₁..a_g, b₁..b_g`.
pub fn bellingeri_presentation(n: usize, g: usize) -> Result<Presentation> {
    if n < 2 || g < 1 {
        return Err(Error::ParamRange(format!(
            "the presentation needs n ≥ 2 and g ≥ 1 (got n = {n}, g = {g})"
        )));
    }
    let mut rel = Vec::new();
    let mut push = |family, word| rel.push(Relator { family, word });

    for i in 1..n {
        for j in i + 2..n {
            push(RelationFamily::BraidCommute, Word::commutator(&s(i), &s(j)));
        }
    }
    for i in 1..n.saturating_sub(1) {
        let lhs = s(i).then(&s(i + 1)).then(&s(i));
        let rhs = s(i + 1).then(&s(i)).then(&s(i + 1));
        push(RelationFamily::BraidTriple, lhs.then(&rhs.inverse()));
    }
    for r in 1..=g {
        for i in 2..n {
            push(RelationFamily::R1, Word::commutator(&a(r), &s(i)));
            push(RelationFamily::R1, Word::commutator(&b(r), &s(i)));
        }
    }
    let s1 = s(1);
    let s1i = s1.inverse();
    for r in 1..=g {
        for x in [a(r), b(r)] {
            push(
                RelationFamily::R2,
                Word::commutator(&x, &s1i.then(&x).then(&s1i)),
            );
        }
    }
    for r in 1..=g {
        for sidx in 1..r {
            let conj = |w: Word| s1.then(&w).then(&s1i);
            push(RelationFamily::R3, Word::commutator(&a(sidx), &conj(a(r))));
            push(RelationFamily::R3, Word::commutator(&b(sidx), &conj(b(r))));
            push(RelationFamily::R3, Word::commutator(&b(sidx), &conj(a(r))));
            push(RelationFamily::R3, Word::commutator(&a(sidx), &conj(b(r))));
        }
    }
    for r in 1..=g {
        let lhs = Word::commutator(&a(r), &s1i.then(&b(r)).then(&s1i));
        push(RelationFamily::R4, lhs.then(&s1.pow(2).inverse()));
    }
    let lhs = (1..=g).fold(Word::default(), |w, r| {
        w.then(&Word::commutator(&a(r), &b(r).inverse()))
    });
    // σ₁σ₂⋯σ_{n−1}² ⋯σ₂σ₁
    let up = (1..n).fold(Word::default(), |w, i| w.then(&s(i)));
    let down = (1..n - 1).rev().fold(Word::default(), |w, i| w.then(&s(i)));
    let rhs = up.then(&s(n - 1)).then(&down);
    push(RelationFamily::TR, lhs.then(&rhs.inverse()));

    Ok(Presentation {
        n,
        g,
        reduced: false,
        relators: rel,
    })
}

/// The reduced relations characterizing braid-reduced quotients, on
/// generators `σ = s1, a_r, b_r`. Requires `n ≥ 3`.
pub fn reduced_relations(n: usize, g: usize) -> Result<Presentation> {
    if n < 3 || g < 1 {
        return Err(Error::ParamRange(format!(
            "the reduced relations need n ≥ 3 and g ≥ 1 (got n = {n}, g = {g})"
        )));
    }
    Ok(reduced_unchecked(n, g))
}

pub(crate) fn reduced_unchecked(n: usize, g: usize) -> Presentation {
    let mut rel = Vec::new();
    let mut push = |family, word| rel.push(Relator { family, word });
    let sigma = s(1);
    for r in 1..=g {
        push(RelationFamily::R1, Word::commutator(&a(r), &sigma));
        push(RelationFamily::R1, Word::commutator(&b(r), &sigma));
    }
    for r in 1..=g {
        for sidx in 1..r {
            push(RelationFamily::R3, Word::commutator(&a(sidx), &a(r)));
            push(RelationFamily::R3, Word::commutator(&b(sidx), &b(r)));
            push(RelationFamily::R3, Word::commutator(&b(sidx), &a(r)));
            push(RelationFamily::R3, Word::commutator(&a(sidx), &b(r)));
        }
    }
    for r in 1..=g {
        let word = Word::commutator(&a(r), &b(r)).then(&sigma.pow(2).inverse());
        push(RelationFamily::R4, word);
    }
    push(RelationFamily::TR, sigma.pow(2 * (g + n - 1)));
    Presentation {
        n,
        g,
        reduced: true,
        relators: rel,
    }
}
