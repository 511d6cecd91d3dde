//! The `braidquot` command-line interface.
//!
//! Every verb prints a human-readable report, then a `---` line, then
//! `key=value` lines. Exit codes: 0 success, 1 a negative mathematical answer,
//! 2 a usage, parse or input error, 3 a search budget or size limit.
//!
//! Wherever a group is expected, a *group expression* is accepted: a standard
//! spec such as `I(2^2,1)`, one of `cyclic(n)`, `elementary_abelian(p,k)`,
//! `symmetric(n)`, `alternating(n)`, `dihedral(order)`, `dicyclic(order)`, or
//! the path of a Cayley-table file.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::{
    bellingeri_presentation, check_full_quotient, check_reduced_witness, derived_is_sigma_square,
    minimal_braid_reduced_search, parse_witness, predicted_minimum, sigma_order_dichotomy,
    write_witness, CandidateSource, FullImages, FullReport, RelationFamily, Witness,
    DEFAULT_WITNESS_BUDGET,
};
use crate::fingroup::io::{read_cayley_file, write_cayley_file};
use crate::fingroup::{
    alternating, cyclic, dicyclic, dihedral, elementary_abelian, symmetric, symmetric_group,
    FiniteGroup, DEFAULT_TABLE_CAP,
};
use crate::jn2::{classify, is_jn2, materialize, Jn2Spec};
use crate::oracle::{exhaustive_catalog_upto, DEFAULT_ENUMERATION_BUDGET};
use crate::verify::verify_paper;
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "braidquot",
    version,
    about = "Finite groups, JN2 classification and braid-reduced quotients of surface braid groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a group and optionally write its Cayley table.
    Construct {
        /// Group expression, e.g. `II(3,2)` or `dihedral(8)`.
        #[arg(long)]
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a group is JN2 and, if so, name its standard model.
    Classify {
        /// Cayley-table file.
        #[arg(long = "in", conflicts_with = "spec", required_unless_present = "spec")]
        input: Option<PathBuf>,
        /// Group expression.
        #[arg(long)]
        spec: Option<String>,
        /// Seed for the relabeling round-trip.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random relabelings to round-trip.
        #[arg(long, default_value_t = 10)]
        relabelings: usize,
    },
    /// Check a witness file against the reduced relations.
    CheckWitness {
        #[arg(long)]
        witness: PathBuf,
    },
    /// Check the full surface braid presentation, either for a witness with
    /// every `σᵢ` sent to `σ` or for `S_n` with `σᵢ ↦ (i, i+1)`.
    CheckFull {
        #[arg(long, conflicts_with_all = ["n", "g"], required_unless_present_all = ["n", "g"])]
        witness: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        g: Option<usize>,
    },
    /// Find the smallest nonabelian braid-reduced quotient up to a bound.
    SearchMin {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: usize,
        /// Largest candidate order (default: the predicted minimum).
        #[arg(long)]
        bound: Option<usize>,
        /// Node budget per witness search.
        #[arg(long, default_value_t = DEFAULT_WITNESS_BUDGET)]
        budget: u64,
        /// Directory receiving one witness file per successful candidate.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the whole verification checklist.
    VerifyPaper {
        /// Number of strands (repeatable; default 5 and 6).
        #[arg(long)]
        n: Vec<usize>,
        /// Genus (repeatable; default 1 and 2).
        #[arg(long)]
        g: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_WITNESS_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enumerate all groups up to an order by brute force.
    Enumerate {
        #[arg(long)]
        bound: usize,
        /// Directory receiving the Cayley tables and an index.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SearchBudgetExceeded { .. } | Error::SizeLimit { .. } => 3,
        Error::NotJn2 | Error::HypothesisFailed(_) => 1,
        _ => 2,
    }
}

/// Resolves a group expression, reading relative paths against `base`.
pub fn resolve_group(expr: &str, base: &Path) -> Result<FiniteGroup> {
    let expr = expr.trim();
    if let Ok(spec) = expr.parse::<Jn2Spec>() {
        return Ok(materialize(spec)?.group);
    }
    if let Some((name, rest)) = expr.split_once('(') {
        if let Some(args) = rest.strip_suffix(')') {
            let args = args
                .split(',')
                .map(|a| {
                    a.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad argument {a:?} in {expr:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let one = || match args[..] {
                [x] => Ok(x),
                _ => Err(Error::Parse(format!("{name} takes one argument"))),
            };
            return match name.trim() {
                "cyclic" => cyclic(one()?),
                "symmetric" => symmetric(one()?),
                "alternating" => alternating(one()?),
                "dihedral" => dihedral(one()?),
                "dicyclic" => dicyclic(one()?),
                "elementary_abelian" => match args[..] {
                    [p, k] => elementary_abelian(p, k as u32),
                    _ => Err(Error::Parse(
                        "elementary_abelian takes two arguments".into(),
                    )),
                },
                other => Err(Error::Parse(format!("unknown group constructor {other:?}"))),
            };
        }
    }
    let path = base.join(expr);
    if path.is_file() {
        return read_cayley_file(path);
    }
    Err(Error::Parse(format!(
        "{expr:?} is neither a group expression nor a readable file"
    )))
}

/// A finished report: human text, machine block and exit code.
struct Report {
    text: String,
    kv: Vec<(String, String)>,
    code: i32,
}

impl Report {
    fn new() -> Self {
        Report {
            text: String::new(),
            kv: Vec::new(),
            code: 0,
        }
    }

    fn put(&mut self, key: &str, value: impl ToString) {
        self.kv.push((key.to_string(), value.to_string()));
    }

    fn render(&self) -> String {
        let mut out = self.text.clone();
        out.push_str("---\n");
        for (k, v) in &self.kv {
            writeln!(out, "{k}={v}").unwrap();
        }
        out
    }
}

fn construct(spec: &str, out: Option<&Path>) -> Result<Report> {
    let group = resolve_group(spec, Path::new("."))?;
    let mut r = Report::new();
    writeln!(r.text, "constructed {spec} with {} elements", group.order()).unwrap();
    r.put("group", spec);
    r.put("order", group.order());
    r.put("abelian", group.is_abelian());
    r.put("exponent", group.exponent());
    r.put("center_order", group.center().order());
    if let Some(path) = out {
        write_cayley_file(&group, path)?;
        r.put("wrote", path.display());
    }
    Ok(r)
}

fn classify_verb(
    group: &FiniteGroup,
    source: &str,
    seed: u64,
    relabelings: usize,
) -> Result<Report> {
    let mut r = Report::new();
    r.put("input", source);
    r.put("order", group.order());
    if is_jn2(group).is_none() {
        writeln!(r.text, "{source}: not just 2-step nilpotent").unwrap();
        r.put("jn2", false);
        r.code = 1;
        return Ok(r);
    }
    let (spec, map) = classify(group)?;
    let target = materialize(spec)?;
    let verified = map.is_isomorphism(group, &target.group);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agree = 0;
    for _ in 0..relabelings {
        let (h, _) = group.random_relabel(&mut rng);
        if classify(&h)?.0 == spec {
            agree += 1;
        }
    }
    writeln!(r.text, "{source} is isomorphic to {spec}").unwrap();
    writeln!(r.text, "image of each element under the certificate:").unwrap();
    let images: Vec<String> = group.elements().map(|x| map.image(x).to_string()).collect();
    writeln!(r.text, "{}", images.join(" ")).unwrap();
    r.put("jn2", true);
    r.put("spec", spec);
    r.put("p", spec.p);
    r.put("j", spec.j);
    r.put("m", spec.m);
    r.put("variant", format!("{:?}", spec.variant));
    r.put("isomorphism", if verified { "verified" } else { "failed" });
    r.put("relabel_roundtrip", format!("{agree}/{relabelings}"));
    r.put("seed", seed);
    if !verified || agree != relabelings {
        return Err(Error::Internal("classification is not stable".into()));
    }
    Ok(r)
}

fn load_witness(path: &Path) -> Result<(Witness, String, FiniteGroup)> {
    let text = std::fs::read_to_string(path)?;
    let (w, group_ref) = parse_witness(&text)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let group = resolve_group(&group_ref, base)?;
    let order = group.order();
    if w.generators().iter().any(|&x| x >= order) {
        return Err(Error::Parse(format!(
            "witness refers to elements outside a group of order {order}"
        )));
    }
    Ok((w, group_ref, group))
}

fn check_witness(path: &Path) -> Result<Report> {
    let (w, group_ref, group) = load_witness(path)?;
    let report = check_reduced_witness(&group, &w);
    let mut r = Report::new();
    writeln!(
        r.text,
        "reduced relations for n={} g={} in {group_ref} (order {})",
        w.n,
        w.g,
        group.order()
    )
    .unwrap();
    for (k, v) in report.key_values() {
        writeln!(r.text, "  {k:<17} {}", if v { "holds" } else { "fails" }).unwrap();
    }
    r.put("n", w.n);
    r.put("g", w.g);
    r.put("group", &group_ref);
    r.put("order", group.order());
    for (k, v) in report.key_values() {
        r.put(k, v);
    }
    let passes = report.passes();
    if passes && !group.is_abelian() {
        r.put("sigma_dichotomy", sigma_order_dichotomy(&group, &w));
        r.put(
            "derived_is_sigma_square",
            derived_is_sigma_square(&group, &w),
        );
    }
    r.put("passes", passes);
    r.code = if passes { 0 } else { 1 };
    Ok(r)
}

fn full_report(r: &mut Report, report: &FullReport) {
    let families = [
        RelationFamily::BraidCommute,
        RelationFamily::BraidTriple,
        RelationFamily::R1,
        RelationFamily::R2,
        RelationFamily::R3,
        RelationFamily::R4,
        RelationFamily::TR,
    ];
    for f in families {
        let count = report.relators.iter().filter(|o| o.family == f).count();
        let holds = report.family_holds(f);
        writeln!(
            r.text,
            "  {:<13} {count:>3} relators  {}",
            format!("{f:?}"),
            if holds { "hold" } else { "FAIL" }
        )
        .unwrap();
        r.put(&format!("{f:?}").to_lowercase(), holds);
    }
    for o in report.relators.iter().filter(|o| !o.holds) {
        writeln!(r.text, "  failing relator: {}", o.relator).unwrap();
    }
    r.put("relators", report.relators.len());
    r.put("generates", report.generates);
    r.put("passes", report.passes());
    r.code = if report.passes() { 0 } else { 1 };
}

fn check_full(witness: Option<&Path>, n: Option<usize>, g: Option<usize>) -> Result<Report> {
    let mut r = Report::new();
    let (group, images, n, g, label) = match witness {
        Some(path) => {
            let (w, group_ref, group) = load_witness(path)?;
            (group, w.extend_to_full(), w.n, w.g, group_ref)
        }
        None => {
            let (n, g) = (n.unwrap(), g.unwrap());
            let sn = symmetric_group(n)?;
            let images = FullImages {
                sigma: (1..n).map(|i| sn.transposition(i).unwrap()).collect(),
                a: vec![0; g],
                b: vec![0; g],
            };
            (sn.group, images, n, g, format!("symmetric({n})"))
        }
    };
    let presentation = bellingeri_presentation(n, g)?;
    writeln!(
        r.text,
        "full presentation of B_{n}(S_{g}) in {label} (order {})",
        group.order()
    )
    .unwrap();
    r.put("n", n);
    r.put("g", g);
    r.put("group", &label);
    full_report(&mut r, &check_full_quotient(&group, &presentation, &images));
    Ok(r)
}

fn search_min(
    n: usize,
    g: usize,
    bound: Option<usize>,
    budget: u64,
    out: Option<&Path>,
) -> Result<Report> {
    let bound = match bound {
        Some(b) => b,
        None => {
            let predicted = predicted_minimum(n, g)?.order;
            if predicted > DEFAULT_TABLE_CAP as u128 {
                return Err(Error::SizeLimit {
                    order: predicted,
                    cap: DEFAULT_TABLE_CAP,
                });
            }
            predicted as usize
        }
    };
    let report = minimal_braid_reduced_search(n, g, bound, budget)?;
    let mut r = Report::new();
    let rendered = report.render();
    let (text, _) = rendered.split_once("---\n").unwrap_or((&rendered, ""));
    r.text.push_str(text);
    r.kv = report.key_values().into_iter().collect();
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        for v in report.successes() {
            let w = v.witness.as_ref().unwrap();
            let stem = v.name.replace(['(', ')', ',', '^'], "_");
            let group_ref = match &v.source {
                CandidateSource::Jn2(spec) => spec.to_string(),
                CandidateSource::Catalog { .. } => {
                    let file = format!("{stem}.grp");
                    write_cayley_file(&v.group()?, dir.join(&file))?;
                    file
                }
            };
            let file = format!("witness_{}.txt", stem.trim_end_matches('_'));
            std::fs::write(dir.join(&file), write_witness(w, &group_ref))?;
            written.push(file);
        }
        r.put("wrote", written.join(","));
    }
    r.code = if report.minimum.is_some() { 0 } else { 1 };
    Ok(r)
}

fn enumerate(bound: usize, out: Option<&Path>, budget: u64) -> Result<Report> {
    let catalog = exhaustive_catalog_upto(bound, budget)?;
    let mut r = Report::new();
    writeln!(r.text, "{:<6} {:>7}  groups", "order", "classes").unwrap();
    for k in 1..=bound {
        let names: Vec<String> = catalog.tier(k).map(|e| e.name()).collect();
        writeln!(r.text, "{k:<6} {:>7}  {}", names.len(), names.join(" ")).unwrap();
        r.put(&format!("order_{k}"), names.len());
    }
    r.put("total", catalog.len());
    if let Some(dir) = out {
        let files = catalog.export(dir)?;
        r.put("wrote", files.len());
        r.put("dir", dir.display());
    }
    Ok(r)
}

fn dispatch(command: &Command, err: &mut dyn Write) -> Result<Report> {
    match command {
        Command::Construct { spec, out } => construct(spec, out.as_deref()),
        Command::Classify {
            input,
            spec,
            seed,
            relabelings,
        } => {
            let (group, source) = match (input, spec) {
                (Some(path), _) => (read_cayley_file(path)?, path.display().to_string()),
                (None, Some(expr)) => (resolve_group(expr, Path::new("."))?, expr.clone()),
                (None, None) => unreachable!("clap requires one of --in and --spec"),
            };
            classify_verb(&group, &source, *seed, *relabelings)
        }
        Command::CheckWitness { witness } => check_witness(witness),
        Command::CheckFull { witness, n, g } => check_full(witness.as_deref(), *n, *g),
        Command::SearchMin {
            n,
            g,
            bound,
            budget,
            out,
        } => search_min(*n, *g, *bound, *budget, out.as_deref()),
        Command::VerifyPaper { n, g, budget, seed } => {
            let ns = if n.is_empty() { vec![5, 6] } else { n.clone() };
            let gs = if g.is_empty() { vec![1, 2] } else { g.clone() };
            let report = verify_paper(&ns, &gs, *budget, *seed)?;
            let _ = err.write_all(report.timings().as_bytes());
            let rendered = report.render();
            let (text, kv) = rendered.split_once("---\n").unwrap();
            Ok(Report {
                text: text.to_string(),
                kv: kv
                    .lines()
                    .filter_map(|l| l.split_once('='))
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .collect(),
                code: if report.passed() { 0 } else { 1 },
            })
        }
        Command::Enumerate { bound, out, budget } => enumerate(*bound, out.as_deref(), *budget),
    }
}

/// Parses `argv` (including the program name), runs the verb and returns the
/// exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("usage error");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match dispatch(&cli.command, err) {
        Ok(report) => {
            let _ = out.write_all(report.render().as_bytes());
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
