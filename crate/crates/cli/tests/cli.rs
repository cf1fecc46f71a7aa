use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use barnette::fixtures::{icosahedron, k4};
use barnette::planar::{op_equivalent, parse_triangulation, write_triangulation};

fn barnette(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_barnette"))
        .args(args)
        .env_remove("BARNETTE_CATALOG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const P_TRACE: &str = "start G 3\nstep A\nstep C 0\nstep C 1\nstep C 1\n";

#[test]
fn catalog_check_passes() {
    let o = barnette(&["catalog", "check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains(" 0 failed"));
}

#[test]
fn catalog_check_reads_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    let shipped = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/catalog");
    for e in fs::read_dir(shipped).unwrap() {
        let e = e.unwrap();
        fs::copy(e.path(), dir.path().join(e.file_name())).unwrap();
    }
    let o = barnette(&["catalog", "check", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    // a broken copy fails with a diagnostic
    let base = dir.path().join("base.cat");
    let text = fs::read_to_string(&base).unwrap();
    fs::write(&base, text.replacen("flavor=pm", "flavor=bogus", 1)).unwrap();
    let o = barnette(&["catalog", "check", dir.path().to_str().unwrap()]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn replay_then_construct_p_is_exceptional() {
    let dir = tempfile::tempdir().unwrap();
    let trace = write(dir.path(), "p.trace", P_TRACE);
    let o = barnette(&["replay", &trace]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let p = write(dir.path(), "P.tri", &stdout(&o));
    let o = barnette(&["construct", &p, "--flavor", "compatible"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("exceptional graph P"));
    assert!(stdout(&o).contains("exception=P"));
    let o = barnette(&["construct", &p, "--flavor", "any"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_k4() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "K4.tri", &write_triangulation(&k4()));
    let o = barnette(&["verify", &g, "2 3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("is_hamiltonian=true"));
    let o = barnette(&["verify", &g, "2 3 4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("is_hamiltonian=false"));
}

#[test]
fn construct_verify_dualize_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let t = icosahedron();
    let g = write(dir.path(), "ico.tri", &write_triangulation(&t));
    let o = barnette(&["construct", &g]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let res = write(dir.path(), "ico.res", &stdout(&o));
    let o = barnette(&["verify", &g, &res, "--flavor", "compatible"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let dot = dir.path().join("dual.dot");
    let o = barnette(&["dualize", &g, &res, "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let cycle: BTreeSet<usize> = out
        .lines()
        .find_map(|l| l.strip_prefix("cycle="))
        .unwrap()
        .split_whitespace()
        .map(|x| x.parse().unwrap())
        .collect();
    assert_eq!(cycle.len(), 20);
    assert!(out.contains("barnette_class=true"));
    assert_eq!(fs::read_to_string(dot).unwrap().matches("color=red").count(), 20);
}

#[test]
fn enumerate_matches_census() {
    for n in ["4", "9"] {
        let e = barnette(&["enumerate", "--max-vertices", n]);
        let c = barnette(&["census", "--max-vertices", n]);
        assert_eq!(e.status.code(), Some(0));
        assert_eq!(c.status.code(), Some(0));
        let a: BTreeSet<String> = stdout(&e).lines().map(String::from).collect();
        let b: BTreeSet<String> = stdout(&c).lines().map(String::from).collect();
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }
}

#[test]
fn enumerated_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("classes");
    let o = barnette(&["--jobs", "2", "enumerate", "--max-vertices", "9", "--height", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let codes = stdout(&o).lines().count();
    let files: Vec<_> = fs::read_dir(&out).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), codes);
    for f in files {
        let text = fs::read_to_string(&f).unwrap();
        let t = parse_triangulation(&text).unwrap();
        let again = parse_triangulation(&write_triangulation(&t)).unwrap();
        assert!(op_equivalent(&t, &again));
    }
}

#[test]
fn oracle_reports_exhaustion() {
    let dir = tempfile::tempdir().unwrap();
    let trace = write(dir.path(), "p.trace", P_TRACE);
    let p = write(dir.path(), "P.tri", &stdout(&barnette(&["replay", &trace])));
    let o = barnette(&["oracle", &p, "--flavor", "compatible", "--all"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("count=0\nexhausted=true"));
    let o = barnette(&["oracle", &p, "--flavor", "any", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().filter(|l| l.starts_with("set=")).count() > 1);
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.tri", "triangulation v1\ng=1\nouter=1 2\n");
    assert_eq!(barnette(&["construct", &bad]).status.code(), Some(2));
    assert_eq!(barnette(&["verify", "missing.tri", "1"]).status.code(), Some(2));
    assert_eq!(barnette(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(barnette(&["enumerate", "--max-vertices", "0"]).status.code(), Some(2));
    let g = write(dir.path(), "K4.tri", &write_triangulation(&k4()));
    assert_eq!(barnette(&["verify", &g, "2 x"]).status.code(), Some(2));
    assert_eq!(barnette(&["construct", &g, "--flavor", "sideways"]).status.code(), Some(2));
}

#[test]
fn non_members_are_refused() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "s.tri", &write_triangulation(&barnette::fixtures::stacked_octahedron()));
    let o = barnette(&["construct", &g]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("error:"));
}
