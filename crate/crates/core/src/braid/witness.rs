use std::fmt::Write as _;

use super::presentation::{reduced_unchecked, Generator, GroupLike, Presentation, RelationFamily};
use crate::fingroup::FiniteGroup;
use crate::{Error, Result};

/// A candidate generating tuple `(σ, a₁, b₁, …, a_g, b_g)` for a braid-reduced
/// quotient of `B_n(Σ_g)`, as element indices of some group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub n: usize,
    pub g: usize,
    pub sigma: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl Witness {
    /// Images for the full presentation with every `σᵢ` sent to `σ`.
    pub fn extend_to_full(&self) -> FullImages {
        FullImages {
            sigma: vec![self.sigma; self.n - 1],
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }

    pub fn generators(&self) -> Vec<usize> {
        let mut gens = vec![self.sigma];
        gens.extend(&self.a);
        gens.extend(&self.b);
        gens
    }
}

/// Images of `σ₁..σ_{n−1}, a₁..a_g, b₁..b_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullImages {
    pub sigma: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl FullImages {
    pub fn image(&self, x: Generator) -> usize {
        match x {
            Generator::Sigma(i) => self.sigma[i - 1],
            Generator::A(r) => self.a[r - 1],
            Generator::B(r) => self.b[r - 1],
        }
    }

    fn all(&self) -> Vec<usize> {
        self.sigma
            .iter()
            .chain(&self.a)
            .chain(&self.b)
            .copied()
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct RelatorOutcome {
    pub family: RelationFamily,
    pub relator: String,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct FullReport {
    pub relators: Vec<RelatorOutcome>,
    pub generates: bool,
}

impl FullReport {
    pub fn relators_hold(&self) -> bool {
        self.relators.iter().all(|r| r.holds)
    }

    pub fn passes(&self) -> bool {
        self.relators_hold() && self.generates
    }

    pub fn family_holds(&self, family: RelationFamily) -> bool {
        self.relators
            .iter()
            .filter(|r| r.family == family)
            .all(|r| r.holds)
    }
}

/// Evaluates every relator of `presentation` in `group` under `images`.
///
/// `images` must cover every generator of the presentation.
pub fn check_full_quotient(
    group: &FiniteGroup,
    presentation: &Presentation,
    images: &FullImages,
) -> FullReport {
    let relators = presentation
        .relators
        .iter()
        .map(|r| RelatorOutcome {
            family: r.family,
            relator: r.word.to_string(),
            holds: r.word.evaluate(group, |x| images.image(x)) == 0,
        })
        .collect();
    FullReport {
        relators,
        generates: group.subgroup_generated(&images.all()).is_whole(),
    }
}

/// Outcome of checking the reduced relations on a tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReducedReport {
    pub r1: bool,
    pub r3: bool,
    pub r4: bool,
    pub tr: bool,
    pub generates: bool,
    /// `[a_r, b_r⁻¹] = σ⁻²` for every `r`.
    pub derived_identity: bool,
    pub sigma_central: bool,
}

impl ReducedReport {
    pub fn passes(&self) -> bool {
        self.r1 && self.r3 && self.r4 && self.tr && self.generates
    }

    pub fn key_values(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("r1", self.r1),
            ("r3", self.r3),
            ("r4", self.r4),
            ("tr", self.tr),
            ("generates", self.generates),
            ("derived_identity", self.derived_identity),
            ("sigma_central", self.sigma_central),
        ]
    }
}

/// Checks the reduced relations in any group model.
pub fn check_reduced_in<G: GroupLike>(
    group: &G,
    n: usize,
    genus: usize,
    sigma: &G::Elem,
    a: &[G::Elem],
    b: &[G::Elem],
) -> ReducedReport {
    let pres = reduced_unchecked(n, genus);
    let assign = |x: Generator| match x {
        Generator::Sigma(_) => sigma.clone(),
        Generator::A(r) => a[r - 1].clone(),
        Generator::B(r) => b[r - 1].clone(),
    };
    let family = |f: RelationFamily| {
        pres.family(f)
            .all(|r| group.is_identity(&r.word.evaluate(group, assign)))
    };
    let sigma_inv = group.inverse(sigma);
    let sigma_m2 = group.op(&sigma_inv, &sigma_inv);
    let derived_identity = a.iter().zip(b).all(|(x, y)| {
        let yi = group.inverse(y);
        let c = group.op(&group.op(&group.op(x, &yi), &group.inverse(x)), y);
        c == sigma_m2
    });
    let mut gens = vec![sigma.clone()];
    gens.extend(a.iter().cloned());
    gens.extend(b.iter().cloned());
    ReducedReport {
        r1: family(RelationFamily::R1),
        r3: family(RelationFamily::R3),
        r4: family(RelationFamily::R4),
        tr: family(RelationFamily::TR),
        generates: group.generated_by(&gens),
        derived_identity,
        sigma_central: group.is_central(sigma),
    }
}

pub fn check_reduced_witness(group: &FiniteGroup, w: &Witness) -> ReducedReport {
    check_reduced_in(group, w.n, w.g, &w.sigma, &w.a, &w.b)
}

/// `d = |σ|` and `|σ²|` satisfy: `|σ²|` odd and `d = |σ²|`, or `|σ²| = 2` and
/// `d = 4`.
pub fn sigma_order_dichotomy(group: &FiniteGroup, w: &Witness) -> bool {
    let d = group.element_order(w.sigma);
    let p = group.element_order(group.mul(w.sigma, w.sigma));
    (p % 2 == 1 && p > 1 && d == p) || (p == 2 && d == 4)
}

/// `G′ = ⟨σ²⟩`.
pub fn derived_is_sigma_square(group: &FiniteGroup, w: &Witness) -> bool {
    let s2 = group.mul(w.sigma, w.sigma);
    group.derived_subgroup().elements() == group.subgroup_generated(&[s2]).elements()
}

struct Search<'a> {
    group: &'a FiniteGroup,
    genus: usize,
    sigma: usize,
    sigma2: usize,
    placed: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn place(&mut self) -> Result<bool> {
        let depth = self.placed.len();
        if depth == 2 * self.genus {
            let mut gens = vec![self.sigma];
            gens.extend(&self.placed);
            return Ok(self.group.subgroup_generated(&gens).is_whole());
        }
        let earlier = &self.placed[..depth - depth % 2];
        let pair_start = (depth % 2 == 1).then(|| self.placed[depth - 1]);
        let g = self.group;
        let candidates: Vec<usize> = g
            .elements()
            .filter(|&x| earlier.iter().all(|&y| g.commutes(x, y)))
            .filter(|&x| pair_start.is_none_or(|a| g.commutator(a, x) == self.sigma2))
            .collect();
        self.nodes += g.order() as u64;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded {
                explored: self.nodes,
            });
        }
        for x in candidates {
            self.placed.push(x);
            if self.place()? {
                return Ok(true);
            }
            self.placed.pop();
        }
        Ok(false)
    }
}

/// Default node budget for [`find_witness`].
pub const DEFAULT_WITNESS_BUDGET: u64 = 200_000_000;

/// Searches for a witness in deterministic order: `σ` over central elements
/// with `σ^{2(g+n−1)} = 1` by increasing index, then `a₁, b₁, a₂, …` by
/// increasing index subject to the commutation constraints.
///
/// Returns the first witness found, and `None` once the space is exhausted.
/// `budget` bounds the number of candidate elements examined.
pub fn find_witness(
    group: &FiniteGroup,
    n: usize,
    genus: usize,
    budget: u64,
) -> Result<Option<Witness>> {
    find_witness_counted(group, n, genus, budget).map(|(w, _)| w)
}

/// As [`find_witness`], also returning the number of nodes examined.
pub fn find_witness_counted(
    group: &FiniteGroup,
    n: usize,
    genus: usize,
    budget: u64,
) -> Result<(Option<Witness>, u64)> {
    if n < 3 || genus < 1 {
        return Err(Error::ParamRange(format!(
            "witness search needs n ≥ 3 and g ≥ 1 (got n = {n}, g = {genus})"
        )));
    }
    let tr = 2 * (genus + n - 1) as i64;
    let abelian = group.is_abelian();
    let mut nodes = 0;
    for sigma in group.center().elements().iter().copied() {
        if group.pow(sigma, tr) != 0 {
            continue;
        }
        let sigma2 = group.mul(sigma, sigma);
        // With σ² = 1 every generator pair commutes, so the group would be
        // abelian; conversely an abelian group forces σ² = [a, b] = 1.
        if (sigma2 == 0) != abelian {
            continue;
        }
        let mut search = Search {
            group,
            genus,
            sigma,
            sigma2,
            placed: Vec::with_capacity(2 * genus),
            nodes,
            budget,
        };
        let found = search.place()?;
        nodes = search.nodes;
        if found {
            let (a, b) = search.placed.chunks(2).map(|p| (p[0], p[1])).unzip();
            return Ok((
                Some(Witness {
                    n,
                    g: genus,
                    sigma,
                    a,
                    b,
                }),
                nodes,
            ));
        }
    }
    Ok((None, nodes))
}

/// Serializes a witness; `group` is a file path or group expression.
pub fn write_witness(w: &Witness, group: &str) -> String {
    let join = |v: &[usize]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    writeln!(out, "n {}", w.n).unwrap();
    writeln!(out, "g {}", w.g).unwrap();
    writeln!(out, "group {group}").unwrap();
    writeln!(out, "sigma {}", w.sigma).unwrap();
    writeln!(out, "a {}", join(&w.a)).unwrap();
    writeln!(out, "b {}", join(&w.b)).unwrap();
    out
}

/// Parses a witness file, returning the witness and its group reference.
pub fn parse_witness(text: &str) -> Result<(Witness, String)> {
    let mut n = None;
    let mut genus = None;
    let mut group = None;
    let mut sigma = None;
    let mut a = None;
    let mut b = None;
    let int = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("expected an integer, found {s:?}")))
    };
    let ints = |s: &str| s.split_whitespace().map(int).collect::<Result<Vec<_>>>();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once(' ').unwrap_or((line, ""));
        let value = value.trim();
        match key {
            "n" => n = Some(int(value)?),
            "g" => genus = Some(int(value)?),
            "group" => group = Some(value.to_string()),
            "sigma" => sigma = Some(int(value)?),
            "a" => a = Some(ints(value)?),
            "b" => b = Some(ints(value)?),
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: unknown key {key:?}",
                    lineno + 1
                )))
            }
        }
    }
    let missing = |k: &str| Error::Parse(format!("witness file lacks `{k}`"));
    let w = Witness {
        n: n.ok_or_else(|| missing("n"))?,
        g: genus.ok_or_else(|| missing("g"))?,
        sigma: sigma.ok_or_else(|| missing("sigma"))?,
        a: a.ok_or_else(|| missing("a"))?,
        b: b.ok_or_else(|| missing("b"))?,
    };
    if w.a.len() != w.g || w.b.len() != w.g {
        return Err(Error::Parse(format!(
            "expected {} entries in `a` and `b`",
            w.g
        )));
    }
    Ok((w, group.ok_or_else(|| missing("group"))?))
}
