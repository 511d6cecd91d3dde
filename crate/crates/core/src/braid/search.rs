use std::fmt::Write as _;

use super::witness::{check_reduced_witness, find_witness_counted, Witness};
use crate::fingroup::{is_prime, symmetric, FiniteGroup, Nilpotency, DEFAULT_TABLE_CAP};
use crate::jn2::{materialize, Jn2Spec};
use crate::oracle::{nonabelian_catalog_upto, Provenance, NONABELIAN_CATALOG_LIMIT};
use crate::{Error, Result};

/// The predicted minimum order `p^{2g+j}` of a nonabelian braid-reduced
/// quotient, with `p` the least prime factor of `g + n − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub p: u64,
    pub j: u32,
    pub order: u128,
}

pub fn predicted_minimum(n: usize, g: usize) -> Result<Prediction> {
    if n < 5 || g < 1 {
        return Err(Error::ParamRange(format!(
            "the prediction covers n ≥ 5 and g ≥ 1 (got n = {n}, g = {g})"
        )));
    }
    let t = (g + n - 1) as u64;
    let p = (2..=t).find(|&d| t % d == 0 && is_prime(d)).unwrap();
    let j = if p == 2 { 2 } else { 1 };
    let order = (p as u128)
        .checked_pow(2 * g as u32 + j)
        .ok_or_else(|| Error::ParamRange("predicted order overflows".into()))?;
    Ok(Prediction { p, j, order })
}

/// Whether `S_m` fails to be nilpotent, read off its lower central series.
pub fn non_nilpotency_check(m: usize) -> Result<bool> {
    Ok(symmetric(m)?.nilpotency() == Nilpotency::NotNilpotent)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateSource {
    Jn2(Jn2Spec),
    Catalog {
        provenance: Provenance,
        index: usize,
    },
}

#[derive(Clone, Debug)]
pub struct CandidateVerdict {
    pub name: String,
    pub order: usize,
    pub source: CandidateSource,
    pub witness: Option<Witness>,
    pub nodes: u64,
}

impl CandidateVerdict {
    /// Rebuilds the candidate group.
    pub fn group(&self) -> Result<FiniteGroup> {
        match &self.source {
            CandidateSource::Jn2(spec) => Ok(materialize(*spec)?.group),
            CandidateSource::Catalog { index, .. } => {
                let catalog = nonabelian_catalog_upto(NONABELIAN_CATALOG_LIMIT)?;
                Ok(catalog.entries[*index].group.clone())
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub n: usize,
    pub g: usize,
    pub bound: usize,
    pub minimum: Option<usize>,
    /// Names of the attaining groups, one per isomorphism class.
    pub attained: Vec<String>,
    pub verdicts: Vec<CandidateVerdict>,
    pub predicted: Prediction,
    pub catalog_limit: usize,
}

impl SearchReport {
    pub fn successes(&self) -> impl Iterator<Item = &CandidateVerdict> {
        self.verdicts.iter().filter(|v| v.witness.is_some())
    }

    pub fn matches_prediction(&self) -> bool {
        self.minimum.map(|m| m as u128) == Some(self.predicted.order)
    }

    /// For every JN2 candidate with a witness: `m = g` and `p | g + n − 1`.
    pub fn necessity_holds(&self) -> bool {
        self.successes().all(|v| match &v.source {
            CandidateSource::Jn2(s) => {
                s.m as usize == self.g && (self.g + self.n - 1) as u64 % s.p == 0
            }
            CandidateSource::Catalog { .. } => true,
        })
    }

    pub fn key_values(&self) -> Vec<(String, String)> {
        let mut kv: Vec<(String, String)> = Vec::new();
        let mut put = |k: &str, v: String| kv.push((k.to_string(), v));
        put("n", self.n.to_string());
        put("g", self.g.to_string());
        put("bound", self.bound.to_string());
        put(
            "minimum",
            self.minimum
                .map_or_else(|| "none".to_string(), |m| m.to_string()),
        );
        put("attained", self.attained.join(","));
        put("predicted_p", self.predicted.p.to_string());
        put("predicted_j", self.predicted.j.to_string());
        put("predicted_order", self.predicted.order.to_string());
        put("matches_prediction", self.matches_prediction().to_string());
        put("necessity_holds", self.necessity_holds().to_string());
        put("candidates", self.verdicts.len().to_string());
        put("successes", self.successes().count().to_string());
        put("catalog_limit", self.catalog_limit.to_string());
        put(
            "nodes",
            self.verdicts
                .iter()
                .map(|v| v.nodes)
                .sum::<u64>()
                .to_string(),
        );
        kv
    }

    /// Human-readable table, then `---`, then `key=value` lines.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "braid-reduced quotient search: n={} g={} bound={}",
            self.n, self.g, self.bound
        )
        .unwrap();
        writeln!(
            out,
            "{:<14} {:>6}  {:<20} witness",
            "candidate", "order", "source"
        )
        .unwrap();
        for v in &self.verdicts {
            let source = match &v.source {
                CandidateSource::Jn2(_) => "jn2".to_string(),
                CandidateSource::Catalog { provenance, .. } => format!("catalog/{provenance}"),
            };
            let witness = match &v.witness {
                Some(w) => format!("sigma={} a={:?} b={:?}", w.sigma, w.a, w.b),
                None => "none".to_string(),
            };
            writeln!(
                out,
                "{:<14} {:>6}  {:<20} {witness}",
                v.name, v.order, source
            )
            .unwrap();
        }
        let p = self.predicted;
        writeln!(
            out,
            "predicted minimum: p={} j={} order={}",
            p.p, p.j, p.order
        )
        .unwrap();
        match self.minimum {
            Some(m) => writeln!(
                out,
                "observed minimum: {m}, attained by {}",
                self.attained.join(", ")
            )
            .unwrap(),
            None => writeln!(out, "observed minimum: none within the bound").unwrap(),
        }
        writeln!(
            out,
            "coverage: every nonabelian group of order <= {} is a candidate \
             (catalog, exhaustive through order 8); above that only the standard \
             JN2 groups are searched, so minimality there rests on the reduction \
             to JN2 groups",
            self.catalog_limit
        )
        .unwrap();
        out.push_str("---\n");
        for (k, v) in self.key_values() {
            writeln!(out, "{k}={v}").unwrap();
        }
        out
    }
}

/// Searches every standard JN2 group of order at most `bound`, together with
/// the nonabelian catalog up to `min(bound, 15)`, for braid-reduced witnesses.
///
/// `budget` bounds the nodes of each individual witness search.
pub fn minimal_braid_reduced_search(
    n: usize,
    g: usize,
    bound: usize,
    budget: u64,
) -> Result<SearchReport> {
    let predicted = predicted_minimum(n, g)?;
    if bound > DEFAULT_TABLE_CAP {
        return Err(Error::SizeLimit {
            order: bound as u128,
            cap: DEFAULT_TABLE_CAP,
        });
    }
    let catalog_limit = bound.min(NONABELIAN_CATALOG_LIMIT);
    let mut candidates: Vec<(CandidateVerdict, FiniteGroup)> = Vec::new();
    for spec in Jn2Spec::all_up_to(bound as u128) {
        let group = materialize(spec)?.group;
        candidates.push((
            verdict(spec.to_string(), CandidateSource::Jn2(spec), &group),
            group,
        ));
    }
    let catalog = nonabelian_catalog_upto(catalog_limit)?;
    for (index, e) in catalog.entries.iter().enumerate() {
        let source = CandidateSource::Catalog {
            provenance: e.provenance,
            index,
        };
        candidates.push((verdict(e.name(), source, &e.group), e.group.clone()));
    }
    // Order first; JN2 candidates before catalog ones of the same order.
    candidates.sort_by_key(|(v, _)| {
        let rank = match &v.source {
            CandidateSource::Jn2(s) => (0, s.sort_key(), 0),
            CandidateSource::Catalog { index, .. } => {
                (1, (0, 0, 0, 0, crate::jn2::Variant::I), *index)
            }
        };
        (v.order, rank)
    });

    for (v, group) in candidates.iter_mut() {
        let (witness, nodes) = find_witness_counted(group, n, g, budget)?;
        if let Some(w) = &witness {
            if !check_reduced_witness(group, w).passes() {
                return Err(Error::Internal(format!(
                    "witness for {} fails re-verification",
                    v.name
                )));
            }
        }
        v.witness = witness;
        v.nodes = nodes;
    }

    let minimum = candidates
        .iter()
        .filter(|(v, _)| v.witness.is_some())
        .map(|(v, _)| v.order)
        .min();
    let mut attained: Vec<(String, &FiniteGroup)> = Vec::new();
    if let Some(min) = minimum {
        for (v, group) in &candidates {
            if v.order != min || v.witness.is_none() {
                continue;
            }
            let mut new = true;
            for (_, h) in &attained {
                if group.is_isomorphic(h)?.is_some() {
                    new = false;
                    break;
                }
            }
            if new {
                attained.push((v.name.clone(), group));
            }
        }
    }
    let attained = attained.into_iter().map(|(name, _)| name).collect();
    Ok(SearchReport {
        n,
        g,
        bound,
        minimum,
        attained,
        verdicts: candidates.into_iter().map(|(v, _)| v).collect(),
        predicted,
        catalog_limit,
    })
}

fn verdict(name: String, source: CandidateSource, group: &FiniteGroup) -> CandidateVerdict {
    CandidateVerdict {
        name,
        order: group.order(),
        source,
        witness: None,
        nodes: 0,
    }
}
