//! End-to-end tests of the installed binary: every subcommand, the exit-code
//! contract, and byte-level determinism of the output.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn vergne(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vergne"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn vergne_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vergne"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn code_of(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

const HEISENBERG: &str = "# 3-dimensional heisenberg algebra\ndim 3\n[3,2] = Z1\n";

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(content.as_bytes()).unwrap();
    file.flush().unwrap();
    file
}

#[test]
fn validate_accepts_and_reports() {
    let file = write_temp(HEISENBERG);
    let out = vergne(&["validate", file.path().to_str().unwrap()]);
    assert_eq!(code_of(&out), 0, "{}", stderr_of(&out));
    assert_eq!(stdout_of(&out), "ok: dim 3, center dim 1, 1 bracket relation(s)\n");
}

#[test]
fn validate_reads_stdin() {
    let out = vergne_stdin(&["validate", "-"], HEISENBERG);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).starts_with("ok: dim 3"));
}

#[test]
fn exit_codes_follow_the_contract() {
    // 2: unreadable syntax
    let bad = write_temp("dim 3\n[3,2] = Z9\n");
    let out = vergne(&["validate", bad.path().to_str().unwrap()]);
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("out of range"));

    // 2: missing file
    let out = vergne(&["validate", "/nonexistent/algebra.txt"]);
    assert_eq!(code_of(&out), 2);

    // 1: well-formed but not a valid algebra
    let malcev = write_temp("dim 3\n[3,2] = Z3\n");
    let out = vergne(&["validate", malcev.path().to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
    assert!(stderr_of(&out).contains("line 2"));

    let jacobi = write_temp("dim 5\n[4,3] = Z2\n[5,2] = Z1\n");
    let out = vergne(&["validate", jacobi.path().to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
    assert!(stderr_of(&out).contains("Jacobi"));

    let antisym = write_temp("dim 3\n[3,2] = Z1\n[2,3] = Z1\n");
    let out = vergne(&["validate", antisym.path().to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
    assert!(stderr_of(&out).contains("conflicting values"));

    // 2: malformed functional
    let file = write_temp(HEISENBERG);
    let out = vergne(&["polarize", file.path().to_str().unwrap(), "--ell", "1,0"]);
    assert_eq!(code_of(&out), 2);
    let out = vergne(&["polarize", file.path().to_str().unwrap(), "--ell", "1,x,0"]);
    assert_eq!(code_of(&out), 2);

    // 2: unknown flag
    let out = vergne(&["polarize", file.path().to_str().unwrap(), "--frobnicate"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn polarize_text_output_is_exact_and_deterministic() {
    let file = write_temp(HEISENBERG);
    let path = file.path().to_str().unwrap();
    let out = vergne(&["polarize", path, "--ell", "1,0,0"]);
    assert_eq!(code_of(&out), 0, "{}", stderr_of(&out));
    let expected = "\
algebra: dim 3, center dim 1
functional: [1, 0, 0]
method: refined
orbit dim: 2
dim p: 2
p basis:
  [1, 0, 0]  =  Z1
  [0, 1, 0]  =  Z2
verified: true
";
    assert_eq!(stdout_of(&out), expected);
    let again = vergne(&["polarize", path, "--ell", "1,0,0"]);
    assert_eq!(out.stdout, again.stdout, "output must be byte-identical across runs");
}

#[test]
fn polarize_methods_and_trace() {
    let file = write_temp(HEISENBERG);
    let path = file.path().to_str().unwrap();
    for method in ["basic", "refined", "auto"] {
        let out = vergne(&["polarize", path, "--ell", "1,0,0", "--method", method]);
        assert_eq!(code_of(&out), 0);
        assert!(stdout_of(&out).contains("verified: true"));
    }
    let out = vergne(&["polarize", path, "--ell", "1,0,0", "--trace"]);
    let text = stdout_of(&out);
    assert!(text.contains("radical trace:"));
    assert!(text.contains("j=1  dim 1  span{Z1}"));
    assert!(text.contains("j=2  dim 2  span{Z1, Z2}"));
    assert!(text.contains("j=3  dim 1  span{Z1}"));
}

#[test]
fn polarize_json_schema() {
    let file = write_temp(HEISENBERG);
    let out = vergne(&[
        "polarize",
        file.path().to_str().unwrap(),
        "--ell",
        "1,-3/2,0",
        "--json",
    ]);
    assert_eq!(code_of(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(value["algebra_dim"], 3);
    assert_eq!(value["method"], "refined");
    assert_eq!(value["dim_p"], 2);
    assert_eq!(value["orbit_dim"], 2);
    assert_eq!(value["verified"], true);
    let basis = value["p_basis"].as_array().unwrap();
    assert_eq!(basis.len(), 2);
    for vector in basis {
        for entry in vector.as_array().unwrap() {
            let s = entry.as_str().expect("rationals are strings");
            assert!(!s.contains('.'), "no decimals in {s}");
        }
    }
    // rationals keep exact p/q form: on free3 the reduced basis carries -1/2
    let shown = vergne(&["catalog", "--show", "free3"]);
    assert_eq!(code_of(&shown), 0);
    let out = vergne_stdin(&["polarize", "-", "--ell", "1,2,3,0,0,0", "--json"], &stdout_of(&shown));
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let flat: Vec<String> = value["p_basis"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|v| v.as_array().unwrap().iter())
        .map(|e| e.as_str().unwrap().to_string())
        .collect();
    assert!(flat.contains(&"-1/2".to_string()), "expected -1/2 in {flat:?}");
}

#[test]
fn free_step2_emit_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("free3.alg");
    let out = vergne(&["free-step2", "3", "--emit", path.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("wrote"));

    let out = vergne(&["validate", path.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("dim 6, center dim 3"));

    let out = vergne(&["polarize", path.to_str().unwrap(), "--ell", "1,2,3,0,0,0"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("dim p: 5"));
    assert!(text.contains("verified: true"));
}

#[test]
fn free_step2_emit_to_stdout_pipes_into_validate() {
    let out = vergne(&["free-step2", "4", "--emit", "-"]);
    assert_eq!(code_of(&out), 0);
    let emitted = stdout_of(&out);
    let check = vergne_stdin(&["validate", "-"], &emitted);
    assert_eq!(code_of(&check), 0);
    assert!(stdout_of(&check).contains("dim 10, center dim 6"));
}

#[test]
fn polarize_free_worked_example_and_json() {
    let out = vergne(&["polarize-free", "3", "--ell", "1,2,3,0,0,0"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("Z3 + 3*Z1 - 2*Z2"), "{text}");
    assert!(text.contains("dim p: 5"));
    assert!(text.contains("verified: true"));

    let out = vergne(&["polarize-free", "3", "--ell", "1,2,3,0,0,0", "--json"]);
    assert_eq!(code_of(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["method"], "free_step2");
    assert_eq!(value["verified"], true);
    assert_eq!(value["dim_p"], 5);
    assert_eq!(value["orbit_dim"], 2);
}

#[test]
fn polarize_free_fallback_warns_and_verifies() {
    let out = vergne(&["polarize-free", "3", "--ell", "0,5,7,0,0,0", "--json"]);
    assert_eq!(code_of(&out), 0);
    assert!(stderr_of(&out).contains("falling back"));
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["method"], "basic");
    assert_eq!(value["verified"], true);
}

#[test]
fn verify_subcommand_accepts_and_rejects() {
    let file = write_temp(HEISENBERG);
    let path = file.path().to_str().unwrap();

    let out = vergne(&["verify", path, "--ell", "1,0,0", "--basis", "1,0,0;0,1,0"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("subalgebra: true"));
    assert!(text.contains("isotropic: true"));
    assert!(text.contains("polarization: true"));

    let out = vergne(&["verify", path, "--ell", "1,0,0", "--basis", "0,1,0;0,0,1"]);
    assert_eq!(code_of(&out), 1);
    let text = stdout_of(&out);
    assert!(text.contains("polarization: false"));
    assert!(text.contains("witness"));

    // wrong arity in a basis vector
    let out = vergne(&["verify", path, "--ell", "1,0,0", "--basis", "1,0"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn catalog_show_output_feeds_polarize() {
    let out = vergne(&["catalog"]);
    assert_eq!(code_of(&out), 0);
    let listing = stdout_of(&out);
    for name in ["heisenberg", "filiform4", "filiform5", "free2", "free3", "free4", "free5"] {
        assert!(listing.contains(name), "missing {name} in listing");
    }

    let out = vergne(&["catalog", "--show", "filiform5"]);
    assert_eq!(code_of(&out), 0);
    let shown = stdout_of(&out);
    let check = vergne_stdin(&["polarize", "-", "--ell", "2,-1,3,5,7"], &shown);
    assert_eq!(code_of(&check), 0, "{}", stderr_of(&check));
    assert!(stdout_of(&check).contains("verified: true"));

    let out = vergne(&["catalog", "--show", "not-a-thing"]);
    assert_eq!(code_of(&out), 1);
}

#[test]
fn batch_processes_functionals_in_order() {
    let algebra = write_temp(HEISENBERG);
    let ells = write_temp("1,0,0\n\n# a comment\n0,0,1\n2,-1/2,5\n");
    let out = vergne(&[
        "batch",
        algebra.path().to_str().unwrap(),
        "--ells",
        ells.path().to_str().unwrap(),
    ]);
    assert_eq!(code_of(&out), 0, "{}", stderr_of(&out));
    let text = stdout_of(&out);
    let i1 = text.find("[1] ell = [1, 0, 0]").expect("first block");
    let i2 = text.find("[2] ell = [0, 0, 1]").expect("second block");
    let i3 = text.find("[3] ell = [2, -1/2, 5]").expect("third block");
    assert!(i1 < i2 && i2 < i3, "blocks must follow input order");
    assert_eq!(text.matches("verified true").count(), 3);

    let bad = write_temp("1,0,0\nnot-a-functional\n");
    let out = vergne(&[
        "batch",
        algebra.path().to_str().unwrap(),
        "--ells",
        bad.path().to_str().unwrap(),
    ]);
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("line 2"));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let file = write_temp(HEISENBERG);
    let path = file.path().to_str().unwrap();
    let first = vergne(&["polarize", path, "--ell", "5,1/3,-2", "--json"]);
    let second = vergne(&["polarize", path, "--ell", "5,1/3,-2", "--json"]);
    assert_eq!(code_of(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    let free_first = vergne(&["polarize-free", "4", "--ell", "1,2,0,3,1,4,0,0,0,0", "--json"]);
    let free_second = vergne(&["polarize-free", "4", "--ell", "1,2,0,3,1,4,0,0,0,0", "--json"]);
    assert_eq!(free_first.stdout, free_second.stdout);
}
