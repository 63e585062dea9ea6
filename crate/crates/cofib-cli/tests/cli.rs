use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn cofib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cofib")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn poset_file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(format!("{name}.poset"));
    fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const DIAMOND: &str = "poset diamond\nelements: b l r t\ncovers: b<l b<r l<t r<t\n";

#[test]
fn analyze_diamond() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "diamond", DIAMOND);
    let o = cofib(&["analyze", s(&f)]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("route: sliscof(join)"));
    assert!(out.contains("cofibrant: VERIFIED"));
    assert!(out.contains("minima: 1/1 VERIFIED"));
}

#[test]
fn analyze_singleton() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "pt", "poset pt\nelements: a\ncovers:\n");
    let o = cofib(&["analyze", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("minima: 1/1 VERIFIED"));
}

#[test]
fn crown_has_no_witness() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "crown", "poset crown\nelements: a b c x y z\ncovers: a<x a<y b<y b<z c<z c<x\n");
    let o = cofib(&["analyze", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no witness route"));
}

#[test]
fn parse_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "bad", "poset bad\nelements: a b\ncovers: a<q\n");
    assert_eq!(cofib(&["analyze", s(&f)]).status.code(), Some(2));
    assert_eq!(cofib(&["analyze", "/nonexistent/file.poset"]).status.code(), Some(2));
}

#[test]
fn emit_then_verify() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "w", "poset w\nelements: a b c d e\ncovers: a<b c<b c<d e<d\n");
    let cert = dir.path().join("w.cert");
    assert_eq!(cofib(&["analyze", s(&f), "--emit", s(&cert)]).status.code(), Some(0));
    let o = cofib(&["verify", s(&cert), s(&f)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    for m in ["a", "c", "e"] {
        let min = dir.path().join(format!("w.cert.min-{m}"));
        assert_eq!(cofib(&["verify", s(&min), s(&f)]).status.code(), Some(0));
    }
}

#[test]
fn relabeled_poset_still_matches() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "diamond", DIAMOND);
    let g = poset_file(&dir, "again", "poset again\nelements: top x y bot\ncovers: x<top y<top bot<x bot<y\n");
    let cert = dir.path().join("d.cert");
    cofib(&["analyze", s(&f), "--emit", s(&cert)]);
    assert_eq!(cofib(&["verify", s(&cert), s(&g)]).status.code(), Some(0));
}

#[test]
fn flipped_entry_names_the_node() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "diamond", DIAMOND);
    let cert = dir.path().join("d.cert");
    cofib(&["analyze", s(&f), "--emit", s(&cert)]);
    let text = fs::read_to_string(&cert).unwrap();
    let line = text.lines().find(|l| l.contains("(bottom-in")).expect("a retract node");
    let flipped = line.replacen("s0->t0", "s0->t1", 1);
    assert_ne!(line, flipped);
    fs::write(&cert, text.replacen(line, &flipped, 1)).unwrap();
    let o = cofib(&["verify", s(&cert), s(&f)]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(1), "{out}");
    assert!(out.contains("first failure: [FAIL] R_RETRACT at root"), "{out}");
}

#[test]
fn mismatched_poset() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "diamond", DIAMOND);
    let g = poset_file(&dir, "chain", "poset chain\nelements: a b c d\ncovers: a<b b<c c<d\n");
    let cert = dir.path().join("d.cert");
    cofib(&["analyze", s(&f), "--emit", s(&cert)]);
    let o = cofib(&["verify", s(&cert), s(&g)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("ObjectMismatch"));
}

#[test]
fn enumerate_table_and_dump() {
    let dir = TempDir::new().unwrap();
    let o = cofib(&["enumerate", "5", "--dump", s(dir.path())]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    let row: Vec<&str> = out.lines().find(|l| l.starts_with("5 ")).unwrap().split_whitespace().collect();
    assert_eq!(&row[..4], &["5", "63", "44", "25"]);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 63);
    let first = fs::read_to_string(dir.path().join("n5_000.poset")).unwrap();
    assert!(first.starts_with("poset n5_000\nelements: "));
}

#[test]
fn enumerate_rejects_large_n() {
    assert_eq!(cofib(&["enumerate", "7"]).status.code(), Some(2));
    assert_eq!(cofib(&["enumerate", "0"]).status.code(), Some(2));
}

#[test]
fn suite_passes_in_strict_mode() {
    let o = cofib(&["paper-suite", "--strict-axioms", "--seed", "11"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("9/9 criteria passed"));
    let bopcof = out.lines().find(|l| l.starts_with("bopcof n=1")).unwrap();
    assert!(bopcof.contains("CONDITIONAL"));
}
