//! Acceptance checklist: one PASS/FAIL line per criterion.
//!
//! The expected minima and attaining groups are written out literally. The
//! relator evaluation, the tuple search of criterion 2, the order-4 counts and
//! the center test of criterion 8 are implemented here from scratch rather
//! than through the library routines they check.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use braidquot::braid::{
    bellingeri_presentation, derived_is_sigma_square, find_witness, minimal_braid_reduced_search,
    non_nilpotency_check, sigma_order_dichotomy, standard_witness, Generator, Presentation,
    Witness, DEFAULT_WITNESS_BUDGET,
};
use braidquot::fingroup::{
    cyclic, dicyclic, dihedral, direct_product, elementary_abelian, symmetric_group, FiniteGroup,
};
use braidquot::jn2::materialize;
use braidquot::oracle::{
    enumerate_groups_exhaustive, exhaustive_catalog_upto, nonabelian_catalog_upto,
    DEFAULT_ENUMERATION_BUDGET,
};
use braidquot::verify::{check_classification, check_properties};
use braidquot::{Jn2Spec, Variant};

type Outcome = Result<(bool, String), String>;

/// Product of a relator word under explicit images, one letter at a time.
fn eval_relator(
    group: &FiniteGroup,
    p: &Presentation,
    word_index: usize,
    img: &dyn Fn(Generator) -> usize,
) -> usize {
    p.relators[word_index].word.0.iter().fold(0, |acc, letter| {
        let x = img(letter.generator);
        let x = if letter.inverse { group.inv(x) } else { x };
        group.mul(acc, x)
    })
}

/// Closure of a generating set under multiplication, by breadth-first search.
fn generated_order(group: &FiniteGroup, gens: &[usize]) -> usize {
    let mut seen = vec![false; group.order()];
    seen[0] = true;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = group.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    seen.iter().filter(|&&b| b).count()
}

/// Every relator of the full presentation is trivial and the images generate.
fn full_quotient_holds(
    group: &FiniteGroup,
    p: &Presentation,
    sigma: &[usize],
    a: &[usize],
    b: &[usize],
) -> bool {
    let img = |x: Generator| match x {
        Generator::Sigma(i) => sigma[i - 1],
        Generator::A(r) => a[r - 1],
        Generator::B(r) => b[r - 1],
    };
    (0..p.relators.len()).all(|i| eval_relator(group, p, i, &img) == 0) && {
        let gens: Vec<usize> = sigma.iter().chain(a).chain(b).copied().collect();
        generated_order(group, &gens) == group.order()
    }
}

fn witness_holds(group: &FiniteGroup, w: &Witness) -> bool {
    let p = bellingeri_presentation(w.n, w.g).unwrap();
    full_quotient_holds(group, &p, &vec![w.sigma; w.n - 1], &w.a, &w.b)
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Found witnesses, kept for criteria 6 and 9.
struct Found {
    witnesses: Vec<(FiniteGroup, Witness)>,
}

fn criterion_1(found: &mut Found) -> Outcome {
    let rows: [(usize, usize, usize, usize, [&str; 2]); 3] = [
        (6, 1, 64, 16, ["I(2^2,1)", "II(2^2,1)"]),
        (5, 1, 125, 125, ["I(5,1)", "II(5,1)"]),
        (5, 2, 64, 64, ["I(2^2,2)", "II(2^2,2)"]),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (n, g, bound, expected, attainers) in rows {
        let start = Instant::now();
        let report =
            minimal_braid_reduced_search(n, g, bound, DEFAULT_WITNESS_BUDGET).map_err(err)?;
        let elapsed = start.elapsed();
        ok &= report.minimum == Some(expected)
            && report.attained == attainers
            && elapsed < Duration::from_secs(60);
        for v in report.successes() {
            let group = v.group().map_err(err)?;
            let w = v.witness.clone().unwrap();
            // Every success must be a genuine quotient, checked from scratch.
            ok &= witness_holds(&group, &w);
            found.witnesses.push((group, w));
        }
        detail.push(format!(
            "({n},{g}) min={} [{}] {:.2?}",
            report.minimum.map_or("none".into(), |m| m.to_string()),
            report.attained.join(","),
            elapsed
        ));
    }
    Ok((ok, detail.join("; ")))
}

fn criterion_2(found: &mut Found) -> Outcome {
    let start = Instant::now();
    let (n, g) = (6, 1);
    let presentation = bellingeri_presentation(n, g).map_err(err)?;
    let mut groups: Vec<(String, FiniteGroup)> = Vec::new();
    for e in exhaustive_catalog_upto(8, DEFAULT_ENUMERATION_BUDGET)
        .map_err(err)?
        .entries
    {
        if !e.group.is_abelian() {
            groups.push((e.name(), e.group));
        }
    }
    for e in nonabelian_catalog_upto(15).map_err(err)?.entries {
        if e.order > 8 {
            groups.push((e.name(), e.group));
        }
    }
    let mut ok = true;
    let mut tuples = 0u64;
    for (name, group) in &groups {
        let k = group.order();
        let mut any = false;
        for s in 0..k {
            for a in 0..k {
                for b in 0..k {
                    tuples += 1;
                    if full_quotient_holds(group, &presentation, &vec![s; n - 1], &[a], &[b]) {
                        any = true;
                    }
                }
            }
        }
        let library = find_witness(group, n, g, DEFAULT_WITNESS_BUDGET).map_err(err)?;
        if let Some(w) = &library {
            found.witnesses.push((group.clone(), w.clone()));
        }
        if any || library.is_some() {
            ok = false;
            eprintln!("unexpected braid-reduced quotient in {name}");
        }
    }
    let names: Vec<&str> = groups.iter().map(|(n, _)| n.as_str()).collect();
    let elapsed = start.elapsed();
    ok &= groups.len() == 8 && elapsed < Duration::from_secs(60);
    Ok((
        ok,
        format!(
            "{} groups [{}], {tuples} tuples, none admit a witness, {elapsed:.2?}",
            groups.len(),
            names.join(" ")
        ),
    ))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let (ok, detail) = check_classification(0, 10).map_err(err)?;
    let elapsed = start.elapsed();
    Ok((
        ok && elapsed < Duration::from_secs(300),
        format!("{detail}, {elapsed:.2?}"),
    ))
}

fn count_order_four(group: &FiniteGroup) -> usize {
    group
        .elements()
        .filter(|&x| {
            let x2 = group.mul(x, x);
            x2 != 0 && group.mul(x2, x2) == 0
        })
        .count()
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut pairs = 0;
    for spec in Jn2Spec::all_up_to(243) {
        if spec.variant != Variant::I {
            continue;
        }
        let i = materialize(spec).map_err(err)?.group;
        let ii = materialize(spec.with_variant(Variant::II))
            .map_err(err)?
            .group;
        ok &= i.is_isomorphic(&ii).map_err(err)?.is_none();
        pairs += 1;
    }
    let d8 = count_order_four(&dihedral(8).map_err(err)?);
    let q8 = count_order_four(&dicyclic(8).map_err(err)?);
    ok &= d8 == 2 && q8 == 6;
    Ok((
        ok,
        format!("{pairs} pairs non-isomorphic, D8 has {d8} and Q8 has {q8} elements of order 4"),
    ))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let classes = enumerate_groups_exhaustive(8, DEFAULT_ENUMERATION_BUDGET).map_err(err)?;
    let elapsed = start.elapsed();
    let known = [
        cyclic(8).map_err(err)?,
        direct_product(&cyclic(4).map_err(err)?, &cyclic(2).map_err(err)?).map_err(err)?,
        elementary_abelian(2, 3).map_err(err)?,
        materialize("I(2,1)".parse().map_err(err)?)
            .map_err(err)?
            .group,
        materialize("II(2,1)".parse().map_err(err)?)
            .map_err(err)?
            .group,
    ];
    let mut hit = [0; 5];
    for c in &classes {
        for (i, k) in known.iter().enumerate() {
            if c.is_isomorphic(k).map_err(err)?.is_some() {
                hit[i] += 1;
            }
        }
    }
    let nonabelian = classes.iter().filter(|g| !g.is_abelian()).count();
    let ok =
        classes.len() == 5 && nonabelian == 2 && hit == [1; 5] && elapsed < Duration::from_secs(30);
    Ok((
        ok,
        format!(
            "{} classes, {nonabelian} nonabelian (I(2,1) and II(2,1)), {elapsed:.2?}",
            classes.len()
        ),
    ))
}

fn criterion_6(found: &Found) -> Outcome {
    let mut ok = true;
    for (group, w) in &found.witnesses {
        ok &= witness_holds(group, w);
    }
    let mut standard = 0;
    for spec in Jn2Spec::all_up_to(125) {
        for n in 3..=9 {
            let g = spec.m as usize;
            if !((g + n - 1) as u64).is_multiple_of(spec.p) {
                continue;
            }
            // Specs outside the construction hypotheses are refused.
            let Ok((group, w)) = standard_witness(spec, n, g) else {
                continue;
            };
            ok &= witness_holds(&group.group, &w);
            standard += 1;
        }
    }
    ok &= standard > 0 && !found.witnesses.is_empty();
    Ok((
        ok,
        format!(
            "{} found witnesses and {standard} standard witnesses satisfy every relator",
            found.witnesses.len()
        ),
    ))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    for n in [5, 6] {
        let sn = symmetric_group(n).map_err(err)?;
        let sigma: Vec<usize> = (1..n).map(|i| sn.transposition(i).unwrap()).collect();
        let p = bellingeri_presentation(n, 1).map_err(err)?;
        ok &= full_quotient_holds(&sn.group, &p, &sigma, &[0], &[0]);
        let library = braidquot::braid::check_full_quotient(
            &sn.group,
            &p,
            &braidquot::braid::FullImages {
                sigma,
                a: vec![0],
                b: vec![0],
            },
        );
        ok &= library.passes();
    }
    let elapsed = start.elapsed();
    Ok((
        ok && elapsed < Duration::from_secs(60),
        format!("S_5 and S_6 with genus 1, {elapsed:.2?}"),
    ))
}

fn criterion_8() -> Outcome {
    let mut ok = true;
    for m in 3..=6 {
        let sm = symmetric_group(m).map_err(err)?.group;
        // A nontrivial nilpotent group has a nontrivial center.
        let center = sm
            .elements()
            .filter(|&x| sm.elements().all(|y| sm.mul(x, y) == sm.mul(y, x)))
            .count();
        ok &= center == 1 && non_nilpotency_check(m).map_err(err)?;
    }
    Ok((
        ok,
        "S_3..S_6: trivial center, lower central series stalls".into(),
    ))
}

fn criterion_9(found: &Found) -> Outcome {
    let (mut ok, detail) = check_properties(0, 1000).map_err(err)?;
    let mut checked = 0;
    for (group, w) in &found.witnesses {
        if group.is_abelian() {
            continue;
        }
        ok &= sigma_order_dichotomy(group, w) && derived_is_sigma_square(group, w);
        checked += 1;
    }
    Ok((
        ok,
        format!(
            "{detail}; exponent bound for I checked where p^j != 2; sigma dichotomy and G' = <sigma^2> on {checked} witnesses"
        ),
    ))
}

fn main() -> ExitCode {
    let mut found = Found {
        witnesses: Vec::new(),
    };
    let mut results: Vec<(u32, &str, Outcome, Duration)> = Vec::new();
    macro_rules! run {
        ($n:expr, $title:expr, $e:expr) => {{
            let start = Instant::now();
            let outcome = $e;
            results.push(($n, $title, outcome, start.elapsed()));
            let (n, title, outcome, _) = results.last().unwrap();
            match outcome {
                Ok((true, d)) => println!("criterion {n}: PASS  {title} ({d})"),
                Ok((false, d)) => println!("criterion {n}: FAIL  {title} ({d})"),
                Err(e) => println!("criterion {n}: FAIL  {title} (error: {e})"),
            }
        }};
    }
    run!(1, "minimum-order reproduction", criterion_1(&mut found));
    run!(
        2,
        "no braid-reduced quotient of order below 16 for (6,1)",
        criterion_2(&mut found)
    );
    run!(
        3,
        "JN2 recognition and classification round-trip",
        criterion_3()
    );
    run!(4, "I and II are not isomorphic", criterion_4());
    run!(5, "exhaustive order-8 enumeration", criterion_5());
    run!(
        6,
        "reduced witnesses satisfy the full presentation",
        criterion_6(&found)
    );
    run!(7, "S_n is a quotient", criterion_7());
    run!(8, "S_m is not nilpotent", criterion_8());
    run!(9, "property suites", criterion_9(&found));
    if results
        .iter()
        .all(|(_, _, o, _)| matches!(o, Ok((true, _))))
    {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
