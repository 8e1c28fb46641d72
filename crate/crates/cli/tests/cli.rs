//! End-to-end checks of the binary: reference examples, exit codes, output
//! determinism and TBL round-trips.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use superplactic::alphabet::SignedAlphabet;
use superplactic::tableau::{enumerate_skew, format_skew_tableau};
use superplactic::Partition;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_superplactic"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

struct Workdir {
    dir: PathBuf,
}

impl Workdir {
    fn new(tag: &str) -> Self {
        let dir =
            std::env::temp_dir().join(format!("superplactic-cli-{tag}-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        Workdir { dir }
    }

    fn file(&self, name: &str, contents: &str) -> String {
        let path = self.dir.join(name);
        fs::write(&path, contents).unwrap();
        path.to_str().unwrap().to_string()
    }
}

impl Drop for Workdir {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.dir);
    }
}

const SIGMA5: &str = "1 0\n2 0\n3 1\n4 0\n5 1\n";

#[test]
fn build_prints_the_insertion_tableau() {
    let w = Workdir::new("build");
    let sigma = w.file("sigma5", SIGMA5);
    let out = run(&["build", "--alphabet", &sigma, "--word", "5 5 3 4 4 1 1 2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 1 2\n3 4 4\n5\n5\n");
}

#[test]
fn equiv_exit_codes() {
    let w = Workdir::new("equiv");
    let sigma = w.file("sigma5", SIGMA5);
    let out = run(&[
        "equiv",
        "--alphabet",
        &sigma,
        "5 5 3 4 4 1 1 2",
        "5 5 3 1 4 1 4 2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "true\n");

    let out = run(&["equiv", "--alphabet", &sigma, "--bfs", "1 2", "2 1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "false\n");
}

#[test]
fn input_errors_exit_2() {
    let w = Workdir::new("errors");
    let sigma = w.file("sigma5", SIGMA5);
    let out = run(&["build", "--alphabet", &sigma, "--word", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let bad = w.file("bad.sigma", "x 0\nx 1\n");
    let out = run(&["build", "--alphabet", &bad, "--word", "x"]);
    assert_eq!(out.status.code(), Some(2));

    // a column violation names the cell
    let tbl = w.file("bad.tbl", "1\n1\n");
    let out = run(&["validate", "--alphabet", &sigma, &tbl]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("(1,1)"), "stderr names the cell: {err}");
}

#[test]
fn resource_budget_exits_3() {
    let w = Workdir::new("budget");
    let sigma = w.file("sigma5", SIGMA5);
    let long_word = ["1"; 11].join(" ");
    let out = run(&["greene", "--alphabet", &sigma, "--word", &long_word]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn rectify_trace_is_json_lines() {
    let w = Workdir::new("trace");
    let sigma = w.file("nat6", "1 1\n2 0\n3 1\n4 0\n5 1\n6 0\n");
    let tbl = w.file("s.tbl", ". . 2 2\n. . 3\n. . 3\n1 2\n5\n");
    let out = run(&["rectify", "--alphabet", &sigma, &tbl, "--trace"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let json_lines: Vec<&str> = text.lines().filter(|l| l.starts_with('{')).collect();
    assert_eq!(json_lines.len(), 6);
    for line in json_lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("corner").is_some() && v.get("path").is_some() && v.get("vacated").is_some());
    }
    assert!(text.ends_with("1 2 2 2\n3\n3\n5\n"));
}

#[test]
fn outputs_are_deterministic() {
    let w = Workdir::new("determinism");
    let sigma = w.file("sigma5", SIGMA5);
    let args = ["lr", "--alphabet", &sigma, "--shape", "3,2,1/2,1"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn printed_tableaux_reparse_to_equal_tableaux() {
    let w = Workdir::new("roundtrip");
    let sigma = w.file("sigma", "1 0\n2 1\n3 1\n");
    let a = SignedAlphabet::parse(SIGMA_ROUNDTRIP).unwrap();
    for outer in Partition::all_up_to(5) {
        for inner in outer.sub_partitions() {
            let shape = superplactic::SkewShape::new(outer.clone(), inner).unwrap();
            for t in enumerate_skew(&shape, &a) {
                let path = w.file("t.tbl", &format_skew_tableau(&t, &a));
                let out = run(&["validate", "--alphabet", &sigma, &path]);
                assert!(out.status.success());
                assert_eq!(stdout(&out), format_skew_tableau(&t, &a));
            }
        }
    }
}

const SIGMA_ROUNDTRIP: &str = "1 0\n2 1\n3 1\n";

#[test]
fn schur_check_reports_and_succeeds() {
    let w = Workdir::new("schur");
    let sigma = w.file("cl3", "1 0\n2 0\n3 0\n");
    let out = run(&["schur-check", "--alphabet", &sigma, "--shape", "2,1/1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("1,1 1"));
    assert!(text.contains("2 1"));
    assert!(text.contains("total"));

    let out = run(&[
        "schur-check",
        "--alphabet",
        &sigma,
        "--shape",
        "2,1/1",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["skew_tableau_count"], v["weighted_total"]);
}

#[test]
fn evacuate_emits_alphabet_then_tableau() {
    let w = Workdir::new("evac");
    let sigma = w.file("sigma5", SIGMA5);
    let tbl = w.file("t.tbl", "1 1 2\n3 4 4\n5\n5\n");
    let out = run(&["evacuate", "--alphabet", &sigma, &tbl]);
    assert!(out.status.success());
    let text = stdout(&out);
    let (alphabet_part, tableau_part) = text.split_once("\n\n").unwrap();
    assert!(alphabet_part.starts_with("5* 1"));
    assert_eq!(tableau_part, "5* 4* 3*\n5* 1* 1*\n4*\n2*\n");

    // the emitted pair is self-describing: starred symbols parse back and
    // evacuating again over the opposite alphabet recovers the input
    let op_sigma = w.file("op.sigma", alphabet_part);
    let op_tbl = w.file("op.tbl", tableau_part);
    let out = run(&["validate", "--alphabet", &op_sigma, &op_tbl]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), tableau_part);
    let out = run(&["evacuate", "--alphabet", &op_sigma, &op_tbl]);
    assert!(out.status.success());
    let (_, back) = stdout(&out)
        .split_once("\n\n")
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .unwrap();
    assert_eq!(back, "1** 1** 2**\n3** 4** 4**\n5**\n5**\n");
}
