//! End-to-end runs of the command line, in process and through the binary.
//! Machine-format outputs are pinned in `tests/golden`; set `LOOPOID_BLESS=1`
//! to rewrite them.

use std::path::{Path, PathBuf};
use std::process::Command;

use loopoid_cli::{run, EXIT_BUDGET, EXIT_CHECK_FAILED, EXIT_INVALID_INPUT, EXIT_OK, EXIT_USAGE};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("loopoid").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

fn golden(name: &str, actual: &str) {
    let file = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("LOOPOID_BLESS").is_some() {
        std::fs::write(&file, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&file).unwrap_or_else(|e| panic!("{}: {e}", file.display()));
    assert_eq!(actual, expected, "{name} drifted");
}

#[test]
fn pair_groupoid_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.lpd");
    assert_eq!(cli(&["construct", "pair-groupoid", "--n", "3", "-o", &g]).code, EXIT_OK);
    let r = cli(&["check", &g, "--class", "groupoid"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let r = cli(&["--format", "machine", "check", &g]);
    assert_eq!(r.code, EXIT_OK);
    golden("classify_pair_groupoid_3.tsv", &r.stdout);
}

#[test]
fn phi_is_not_a_loopoid() {
    let dir = tempfile::tempdir().unwrap();
    let p = path(dir.path(), "p.lpd");
    assert_eq!(cli(&["construct", "phi", "--n", "5", "--phi", "0,1,3,2,4", "-o", &p]).code, EXIT_OK);
    let r = cli(&["check", &p, "--class", "loopoid", "--format", "machine"]);
    assert_eq!(r.code, EXIT_CHECK_FAILED);
    assert!(r.stdout.contains("witness.0.axiom\tunities-associativity"));
    golden("check_phi_loopoid.tsv", &r.stdout);
    assert_eq!(cli(&["check", &p, "--class", "left-loopoid"]).code, EXIT_OK);
    let r = cli(&["construct", "phi", "--n", "5", "--phi", "0,2,1,3,4"]);
    assert_eq!(r.code, EXIT_INVALID_INPUT);
}

#[test]
fn syntax_error_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.lpd");
    std::fs::write(&bad, "elements 2\nunits 0\ntriples\n0 0 zero\nend\n").unwrap();
    let r = cli(&["check", &bad]);
    assert_eq!(r.code, EXIT_INVALID_INPUT);
    assert!(r.stderr.contains("line 4, column 5"), "{}", r.stderr);
    let r = cli(&["check", &path(dir.path(), "missing.lpd")]);
    assert_eq!(r.code, EXIT_INVALID_INPUT);
}

#[test]
fn usage_errors() {
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(cli(&["check"]).code, EXIT_USAGE);
    assert_eq!(cli(&["check", "x.lpd", "--class", "monoid"]).code, EXIT_USAGE);
    assert_eq!(cli(&["enumerate", "--mode", "semiloopoid", "--size", "9"]).code, EXIT_USAGE);
    let help = cli(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("verify-propositions"));
}

#[test]
fn enumerate_counts() {
    let r = cli(&["enumerate", "--mode", "loop", "--size", "5", "--up-to-iso", "--count-only", "--format", "machine"]);
    assert_eq!((r.code, r.stdout.as_str()), (EXIT_OK, "count\t6\n"));
    let r = cli(&["enumerate", "--mode", "semiloopoid", "--size", "2", "--units", "1", "--format", "machine"]);
    assert_eq!(r.code, EXIT_OK);
    golden("enumerate_semiloopoid_2_units_1.tsv", &r.stdout);
    let r = cli(&["enumerate", "--mode", "semiloopoid", "--size", "2", "--units", "1"]);
    assert_eq!(r.stdout.matches("\nend\n").count(), 2);
}

#[test]
fn isotropy_reduce_and_iso() {
    let dir = tempfile::tempdir().unwrap();
    let z3 = path(dir.path(), "z3.lpd");
    std::fs::write(
        &z3,
        loopoid::io::print(&loopoid::constructors::GroupTable::cyclic(3).to_structure()),
    )
    .unwrap();
    let prod = path(dir.path(), "prod.lpd");
    assert_eq!(cli(&["construct", "product", "--loop", &z3, "--n", "2", "-o", &prod]).code, EXIT_OK);
    let iso = path(dir.path(), "iso.lpd");
    let r = cli(&["isotropy", &prod, "--unit", "(0,1,1)", "-o", &iso]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let r = cli(&["iso", &iso, &z3, "--format", "machine"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.starts_with("isomorphic\tyes\n"));
    assert_eq!(cli(&["iso", &prod, &z3]).code, EXIT_CHECK_FAILED);
    assert_eq!(cli(&["isotropy", &prod, "--unit", "nowhere"]).code, EXIT_INVALID_INPUT);

    // the full carrier with the identity projection reduces to itself
    let n = loopoid::io::parse(&std::fs::read_to_string(&prod).unwrap()).unwrap().n();
    let all: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let proj: Vec<String> = (0..n).map(|i| format!("{i}:{i}")).collect();
    let t = path(dir.path(), "t.txt");
    std::fs::write(&t, format!("subset {}\nprojection {}\nend\n", all.join(" "), proj.join(" "))).unwrap();
    let r = cli(&["reduce", &prod, "--transversal", &t]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let reduced = loopoid::io::parse(&r.stdout).unwrap();
    let original = loopoid::io::parse(&std::fs::read_to_string(&prod).unwrap()).unwrap();
    assert_eq!(reduced, original.without_inversions());
}

#[test]
fn baer_and_extended_constructions() {
    let r = cli(&[
        "construct", "baer", "--group", "symmetric:3", "--subgroup", "e,(12)", "--transversal", "e,(123),(132)",
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert!(r.stdout.starts_with("elements 3\nlabels e (123) (132)\n"));
    let r = cli(&[
        "construct", "extended", "--n", "5", "--units", "0,1", "--alpha", "0,1,0,1,0", "--beta", "0,1,1,0,0",
        "--g0", "2", "--a", "1,3", "--l0", "1:2,3:4",
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let r = cli(&[
        "construct", "extended", "--n", "5", "--units", "0,1", "--alpha", "0,1,0,1,0", "--beta", "0,1,1,0,0",
        "--g0", "2", "--a", "1,3", "--l0", "1:2,3:2",
    ]);
    assert_eq!(r.code, EXIT_INVALID_INPUT);
    assert!(r.stderr.contains("injective"));
}

#[test]
fn budget_and_propositions() {
    // both run in one test so the environment variable cannot leak into others
    std::env::set_var("LPD_BUDGET_NODES", "5");
    let r = cli(&["enumerate", "--mode", "loop", "--size", "5"]);
    std::env::remove_var("LPD_BUDGET_NODES");
    assert_eq!(r.code, EXIT_BUDGET);
    let r = cli(&["verify-propositions", "--max-size", "3", "--format", "machine"]);
    golden("verify_propositions_3.tsv", &r.stdout);
    // the set-equality form of the anchor condition has counterexamples
    assert_eq!(r.code, EXIT_CHECK_FAILED);
    assert!(r.stdout.contains("equivalence.flag.equivalence-inclusion\tpass"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_loopoid");
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.lpd");
    let status = Command::new(bin).args(["construct", "pair-groupoid", "--n", "2", "-o", &g]).status().unwrap();
    assert_eq!(status.code(), Some(EXIT_OK));
    let output = Command::new(bin).args(["check", &g, "--class", "loop"]).output().unwrap();
    assert_eq!(output.status.code(), Some(EXIT_CHECK_FAILED));
    let output = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(output.status.code(), Some(EXIT_USAGE));
}
