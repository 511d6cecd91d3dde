use std::fs;
use std::path::Path;

use braidquot::cli::run;

fn braidquot(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("braidquot").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

fn key<'a>(output: &'a str, k: &str) -> Option<&'a str> {
    let (_, block) = output.split_once("---\n")?;
    block
        .lines()
        .find_map(|l| l.strip_prefix(k).and_then(|r| r.strip_prefix('=')))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_classify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.grp");
    let (code, out) = braidquot(&["construct", "--spec", "I(2^2,1)", "--out", path(&file)]);
    assert_eq!(code, 0);
    assert_eq!(key(&out, "order"), Some("16"));
    let (code, out) = braidquot(&["classify", "--in", path(&file)]);
    assert_eq!(code, 0);
    assert_eq!(key(&out, "spec"), Some("I(2^2,1)"));
    assert_eq!(key(&out, "isomorphism"), Some("verified"));

    let abelian = dir.path().join("c.grp");
    braidquot(&[
        "construct",
        "--spec",
        "elementary_abelian(2,3)",
        "--out",
        path(&abelian),
    ]);
    let (code, out) = braidquot(&["classify", "--in", path(&abelian)]);
    assert_eq!(code, 1);
    assert_eq!(key(&out, "jn2"), Some("false"));
}

#[test]
fn search_witnesses_are_rereadable() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = braidquot(&[
        "search-min",
        "--n",
        "6",
        "--g",
        "1",
        "--bound",
        "64",
        "--out",
        path(dir.path()),
    ]);
    assert_eq!(code, 0);
    assert_eq!(key(&out, "minimum"), Some("16"));
    assert_eq!(key(&out, "attained"), Some("I(2^2,1),II(2^2,1)"));
    let files: Vec<&str> = key(&out, "wrote").unwrap().split(',').collect();
    assert!(files.len() >= 2);
    for f in files {
        let w = dir.path().join(f);
        let (code, out) = braidquot(&["check-witness", "--witness", path(&w)]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(key(&out, "passes"), Some("true"));
        let (code, out) = braidquot(&["check-full", "--witness", path(&w)]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(key(&out, "r2"), Some("true"));
    }
}

#[test]
fn broken_witness_is_a_negative_result() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    fs::write(&w, "n 6\ng 1\ngroup II(2^2,1)\nsigma 0\na 1\nb 2\n").unwrap();
    let (code, out) = braidquot(&["check-witness", "--witness", path(&w)]);
    assert_eq!(code, 1);
    assert_eq!(key(&out, "passes"), Some("false"));

    fs::write(&w, "n 6\ng 1\ngroup II(2^2,1)\nsigma 99\na 1\nb 2\n").unwrap();
    assert_eq!(braidquot(&["check-witness", "--witness", path(&w)]).0, 2);
}

#[test]
fn witness_group_file_is_resolved_next_to_the_witness() {
    let dir = tempfile::tempdir().unwrap();
    braidquot(&[
        "construct",
        "--spec",
        "dihedral(8)",
        "--out",
        path(&dir.path().join("d8.grp")),
    ]);
    let w = dir.path().join("w.txt");
    fs::write(&w, "n 3\ng 1\ngroup d8.grp\nsigma 0\na 1\nb 4\n").unwrap();
    let (code, out) = braidquot(&["check-witness", "--witness", path(&w)]);
    assert!(code == 0 || code == 1, "{out}");
    assert_eq!(key(&out, "order"), Some("8"));
}

#[test]
fn enumerated_catalog_is_rereadable() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = braidquot(&["enumerate", "--bound", "8", "--out", path(dir.path())]);
    assert_eq!(code, 0);
    assert_eq!(key(&out, "order_8"), Some("5"));
    assert_eq!(key(&out, "total"), Some("14"));
    let index = fs::read_to_string(dir.path().join("index.txt")).unwrap();
    let mut jn2 = 0;
    for line in index.lines() {
        let file = line.split(' ').next().unwrap();
        let (code, _) = braidquot(&[
            "classify",
            "--in",
            path(&dir.path().join(file)),
            "--relabelings",
            "2",
        ]);
        assert!(code == 0 || code == 1);
        jn2 += usize::from(code == 0);
    }
    assert_eq!(jn2, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["search-min", "--n", "5", "--g", "1"];
    assert_eq!(braidquot(&args), braidquot(&args));
    let args = ["verify-paper", "--n", "6", "--g", "1"];
    let first = braidquot(&args);
    assert_eq!(first.0, 0);
    assert_eq!(
        key(&first.1, "row_6_1_smallest"),
        Some("order 16 (2-group)")
    );
    assert_eq!(first, braidquot(&args));
}

#[test]
fn verify_paper_row_5_1() {
    let (code, out) = braidquot(&["verify-paper", "--n", "5", "--g", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("braid-reduced minimum 125"));
    assert!(out.contains("vs S_5 order 120"));
    assert!(out.contains("smallest nonabelian quotient: S_5"));
}
