//! The `cellfuse` binary end to end.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cellfuse::group_file::GroupFile;
use cellfuse::report::ReportDocument;
use cellfuse_core::Group;

fn cellfuse(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cellfuse"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn constructed(args: &[&str]) -> Group {
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    let o = cellfuse(&full);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    Group::new(GroupFile::from_json(&stdout(&o)).unwrap().to_spec().unwrap())
}

fn report(o: &Output) -> ReportDocument {
    ReportDocument::read(&stdout(o)).unwrap()
}

fn shipped() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/verify")
}

#[test]
fn construct_examples() {
    let g = constructed(&["psl2", "19"]);
    assert_eq!((g.degree(), g.order()), (20, 3420));
    let g = constructed(&["dihedral", "8"]);
    assert_eq!((g.degree(), g.order()), (4, 8));
    let g = constructed(&["wreath(cyclic 3, symmetric 2)"]);
    assert_eq!((g.degree(), g.order()), (6, 18));
    assert_eq!(g.name(), Some("wreath(cyclic 3, symmetric 2)"));
}

#[test]
fn construct_is_byte_deterministic() {
    for req in [&["psl2", "13"][..], &["direct_product(quaternion8, alternating 4)"]] {
        let mut args = vec!["construct"];
        args.extend_from_slice(req);
        assert_eq!(cellfuse(&args).stdout, cellfuse(&args).stdout);
    }
}

#[test]
fn construct_rejects_bad_requests() {
    assert_eq!(code(&cellfuse(&["construct", "psl2", "15"])), 1);
    assert_eq!(code(&cellfuse(&["construct", "dihedral", "5"])), 1);
    assert_eq!(code(&cellfuse(&["construct", "torus", "3"])), 1);
}

#[test]
fn analyze_psl2_19() {
    let o = cellfuse(&["analyze", "psl2", "19", "--prime", "3", "--json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stderr(&o).is_empty());
    let r = report(&o);
    assert_eq!(r.case, "proper_strongly_closed");
    assert_eq!(r.gamma_label.as_deref(), Some("dihedral 6"));
    assert_eq!(r.orders.gamma, Some(6));
    assert_eq!(r.fibration.base[0], "B(gamma)^_3");
}

#[test]
fn analyze_cellular_examples() {
    let o = cellfuse(&["analyze", "cyclic", "9", "--prime", "3"]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert_eq!((r.case.as_str(), r.reduced), ("cellular", true));
    assert!(stdout(&o).find("\"quotient\"").is_none());
    assert!(stderr(&o).contains("cellular"));

    let o = cellfuse(&["analyze", "symmetric", "4", "--prime", "5", "--json"]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert_eq!(r.case, "cellular");
    assert_eq!(r.note.as_deref(), Some("no p-torsion"));
}

#[test]
fn analyze_reads_files_and_writes_out() {
    let dir = tempfile::tempdir().unwrap();
    let group = dir.path().join("s4.json");
    let out = dir.path().join("s4.report.json");
    assert_eq!(code(&cellfuse(&["construct", "symmetric", "4", "--out", group.to_str().unwrap()])), 0);
    let o = cellfuse(&[
        "analyze",
        group.to_str().unwrap(),
        "--prime",
        "2",
        "--json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let r = ReportDocument::read(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(r.case, "sylow_strongly_closed");
    assert_eq!(r.other_primes, [3]);
}

#[test]
fn analyze_skip_strong_fusion_drops_the_check() {
    let o = cellfuse(&["analyze", "psl2", "19", "--prime", "3", "--json", "--skip-strong-fusion"]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert!(!r.verifications.contains_key("strong_fusion_in_quotient"));
    assert_eq!(r.verifications["gamma_p_perfect"], "pass");
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(code(&cellfuse(&["analyze", "symmetric", "4", "--prime", "4"])), 1);
    assert_eq!(code(&cellfuse(&["analyze", "no_such_file.json", "--prime", "2"])), 1);
    assert_eq!(code(&cellfuse(&["analyze", "frobnicate", "--prime", "2"])), 1);
    let o = cellfuse(&["analyze", "symmetric", "6", "--prime", "2", "--cap", "100"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("cap"));
    let o = cellfuse(&["analyze", "symmetric", "4"]);
    assert_ne!(code(&o), 0);
}

#[test]
fn verify_shipped_fixtures() {
    let o = cellfuse(&["verify", shipped().to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}\n{}", stdout(&o), stderr(&o));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert!(lines.iter().filter(|l| l.starts_with("PASS")).count() >= 20);
    let labels: Vec<&str> = lines
        .iter()
        .filter(|l| l.starts_with("PASS"))
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    let mut sorted = labels.clone();
    sorted.sort();
    assert_eq!(labels, sorted);
}

#[test]
fn verify_names_the_corrupted_field() {
    let dir = tempfile::tempdir().unwrap();
    for f in ["psl2_8.json", "psl2_8.p3.report.json", "sl2_3.json", "sl2_3.p3.report.json"] {
        std::fs::copy(shipped().join(f), dir.path().join(f)).unwrap();
    }
    let path = dir.path().join("psl2_8.p3.report.json");
    let text = std::fs::read_to_string(&path).unwrap();
    let corrupted = text.replace("\"gamma\": 6", "\"gamma\": 7");
    assert_ne!(text, corrupted);
    std::fs::write(&path, corrupted).unwrap();
    let o = cellfuse(&["verify", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("orders.gamma"), "{}", stdout(&o));
    assert!(stderr(&o).contains("orders.gamma"));
    assert!(stdout(&o).contains("PASS  sl2_3.p3"));
}

#[test]
fn verify_empty_directory() {
    let dir = tempfile::tempdir().unwrap();
    let o = cellfuse(&["verify", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("0 fixtures"));
}

#[test]
fn group_fixtures_match_constructors() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/groups");
    let load = |f: &str| cellfuse::group_file::load(&dir.join(f), 1_000_000).unwrap();
    assert!(load("psl2_8.json").same_elements(&cellfuse_core::catalog::psl2_8().unwrap()));
    assert!(load("sl2_3.json").same_elements(&cellfuse_core::catalog::sl2_3().unwrap()));
    for f in ["psl2_8.json", "sl2_3.json"] {
        let a = std::fs::read_to_string(dir.join(f)).unwrap();
        let b = std::fs::read_to_string(shipped().join(f)).unwrap();
        assert_eq!(a, b, "{f}");
    }
}
