//! End-to-end checks of the command-line interface: stdout shapes,
//! stdin handling, and exit codes.

use std::io::Write;
use std::process::{Command, Stdio};

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_teqset"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn CLI");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().expect("collect CLI output");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn gen_emits_one_code_per_class() {
    let (code, stdout, _) = run(&["gen", "5"], "");
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 12);
    let (code, stdout, _) = run(&["gen", "5", "--irreducible"], "");
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 6);
}

#[test]
fn teq_reports_analysis_per_line() {
    let (code, stdout, _) = run(&["teq"], "101\n");
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "code=101 minimal_sets=[{0,1,2}] teq={0,1,2} schwartz_ok=true\n"
    );
}

#[test]
fn canon_dedups_isomorphic_codes() {
    // Both inputs are 3-cycles, so one canonical line comes out.
    let (code, stdout, _) = run(&["canon"], "101\n010\n");
    assert_eq!(code, 0);
    assert_eq!(stdout, "010\n");
}

#[test]
fn gen_piped_through_canon_is_identity() {
    let (_, generated, _) = run(&["gen", "4"], "");
    let (code, canonical, _) = run(&["canon"], &generated);
    assert_eq!(code, 0);
    assert_eq!(canonical, generated);
}

#[test]
fn beta_census_report() {
    let (code, stdout, _) = run(&["beta", "5"], "");
    assert_eq!(code, 0);
    assert!(stdout.contains("# beta-census n=5 mode=full"));
    assert!(stdout.contains("# survivors: 2"));
}

#[test]
fn domgraph_renders_arcs_and_verdict() {
    let (code, stdout, _) = run(&["domgraph"], "101\n");
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "tournament 101\n0>1\n1>2\n2>0\nverdict=spiked-odd-cycle cycle=[0,1,2]\n"
    );
}

#[test]
fn schwartz_sweep_reports_no_records() {
    let (code, stdout, _) = run(&["schwartz", "6"], "");
    assert_eq!(code, 0);
    assert!(stdout.contains("# schwartz-sweep n=6 records=0"));
}

#[test]
fn conjecture_sweep_reports_no_counterexamples() {
    let (code, stdout, _) = run(&["conjecture", "3", "5"], "");
    assert_eq!(code, 0);
    assert!(stdout.contains("counterexamples=0"), "{stdout}");
}

#[test]
fn verify_runs_both_sweeps() {
    let (code, stdout, _) = run(
        &["verify", "--trials", "5", "--max-size", "8", "--seed", "1"],
        "",
    );
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 2, "{stdout}");
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, stderr) = run(&["conjecture", "4", "5"], "");
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
}

#[test]
fn malformed_input_exits_three_with_line_number() {
    let (code, _, stderr) = run(&["teq"], "10x\n");
    assert_eq!(code, 3);
    assert!(stderr.contains("line 1"), "{stderr}");
}
