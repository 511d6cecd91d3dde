use super::presentation::{bellingeri_presentation, Generator};
use super::witness::{check_reduced_in, check_reduced_witness, ReducedReport, Witness};
use crate::jn2::{materialize, Jn2Element, Jn2Group, Jn2Spec, Variant};
use crate::{Error, Result};

/// A standard witness expressed in normal forms, usable at any order.
#[derive(Clone, Debug)]
pub struct SymbolicWitness {
    pub spec: Jn2Spec,
    pub n: usize,
    pub g: usize,
    /// `σ = z^sigma_exponent`.
    pub sigma_exponent: u64,
    pub sigma: Jn2Element,
    pub a: Vec<Jn2Element>,
    pub b: Vec<Jn2Element>,
}

impl SymbolicWitness {
    pub fn check(&self) -> ReducedReport {
        check_reduced_in(&self.spec, self.n, self.g, &self.sigma, &self.a, &self.b)
    }

    /// Evaluates every relator of the full presentation with `σᵢ := σ`.
    pub fn full_relators_hold(&self) -> Result<bool> {
        let pres = bellingeri_presentation(self.n, self.g)?;
        let assign = |x: Generator| match x {
            Generator::Sigma(_) => self.sigma.clone(),
            Generator::A(r) => self.a[r - 1].clone(),
            Generator::B(r) => self.b[r - 1].clone(),
        };
        Ok(pres
            .relators
            .iter()
            .all(|r| r.word.evaluate(&self.spec, assign).is_identity()))
    }
}

/// The exponent `e` with `σ = z^e` in the standard witness for `spec`.
fn sigma_exponent(spec: &Jn2Spec) -> Result<u64> {
    let (p, j) = (spec.p, spec.j);
    let q = spec.center_order();
    match (p == 2, spec.variant) {
        (true, Variant::I) if j == 2 => Ok(1),
        (true, Variant::I) => Err(Error::HypothesisFailed(format!(
            "type I with p = 2 needs j = 2, not j = {j}"
        ))),
        (true, Variant::II) if j >= 2 => Ok(1 << (j - 2)),
        (true, Variant::II) => Err(Error::HypothesisFailed(
            "type II with p = 2 needs j ≥ 2".into(),
        )),
        (false, Variant::I) if j == 1 => Ok(q.div_ceil(2)),
        (false, Variant::I) => Err(Error::HypothesisFailed(format!(
            "type I with odd p needs j = 1, not j = {j}"
        ))),
        (false, Variant::II) => Ok((q + q / p) / 2),
    }
}

/// The witness of the standard construction: `a_r, b_r` the standard
/// generators and `σ` a suitable power of `z`, verified in normal forms.
pub fn standard_witness_symbolic(spec: Jn2Spec, n: usize, g: usize) -> Result<SymbolicWitness> {
    if n < 3 {
        return Err(Error::HypothesisFailed(format!("n = {n} < 3")));
    }
    if spec.m as usize != g {
        return Err(Error::HypothesisFailed(format!(
            "rank m = {} differs from genus g = {g}",
            spec.m
        )));
    }
    let t = (g + n - 1) as u64;
    if t % spec.p != 0 {
        return Err(Error::HypothesisFailed(format!(
            "p = {} does not divide g + n − 1 = {t}",
            spec.p
        )));
    }
    let e = sigma_exponent(&spec)?;
    let w = SymbolicWitness {
        spec,
        n,
        g,
        sigma_exponent: e,
        sigma: spec.power(&spec.z(), e),
        a: (1..=g).map(|r| spec.a(r)).collect(),
        b: (1..=g).map(|r| spec.b(r)).collect(),
    };
    if !w.check().passes() {
        return Err(Error::Internal(format!(
            "standard witness for {spec} fails verification"
        )));
    }
    Ok(w)
}

/// The standard witness inside the materialized group.
pub fn standard_witness(spec: Jn2Spec, n: usize, g: usize) -> Result<(Jn2Group, Witness)> {
    let sym = standard_witness_symbolic(spec, n, g)?;
    let group = materialize(spec)?;
    let w = Witness {
        n,
        g,
        sigma: group.index_of(&sym.sigma),
        a: sym.a.iter().map(|x| group.index_of(x)).collect(),
        b: sym.b.iter().map(|x| group.index_of(x)).collect(),
    };
    if !check_reduced_witness(&group.group, &w).passes() {
        return Err(Error::Internal(format!(
            "standard witness for {spec} fails verification"
        )));
    }
    Ok((group, w))
}
