use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tiv::action::{random_tensor, sample_rng};
use tiv::invariants::{hyperdet_nn1, substitute_u};
use tiv::pencil::{block_det, RatTensor};
use tiv::polyring::int;
use tiv::tensor_file::TensorFile;

fn tiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiv"))
        .args(args)
        .output()
        .expect("run tiv")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write_tensor(dir: &Path, name: &str, t: &RatTensor) -> PathBuf {
    let path = dir.join(name);
    TensorFile::from_tensor(t).save(&path).unwrap();
    path
}

fn diag_tensor(x: &[i64], y: &[i64]) -> RatTensor {
    let d =
        |v: &[i64]| tiv::linalg::RatMatrix::diag(&v.iter().map(|&a| int(a)).collect::<Vec<_>>());
    RatTensor::from_slices(&d(x), &d(y)).unwrap()
}

#[test]
fn pencil_symbolic_n1() {
    let o = tiv(&["pencil", "--n", "1", "--symbolic"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "f_{0,1} = T[1,1,2]\nf_{1,0} = T[1,1,1]\n");
}

#[test]
fn pencil_values_at_identity_pair() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_tensor(dir.path(), "t.json", &diag_tensor(&[1, 1], &[1, 1]));
    let o = tiv(&["pencil", "--n", "2", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "f_{0,2} = 1\nf_{1,1} = 2\nf_{2,0} = 1\n");
    let o = tiv(&["pencil", "-i", path.to_str().unwrap(), "--method", "both"]);
    assert!(stdout(&o).ends_with("methods agree\n"));
}

#[test]
fn pencil_methods_agree_n3() {
    let o = tiv(&["pencil", "--n", "3", "--method", "both"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("methods agree\n"));
}

#[test]
fn pencil_pretty_prints_one_term_per_line() {
    let o = tiv(&["pencil", "--n", "2", "--pretty"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "f_{0,2} =");
    assert_eq!(
        lines[1..3]
            .iter()
            .filter(|l| l.starts_with("- ") || l.starts_with("T["))
            .count(),
        2
    );
    assert_eq!(lines.iter().filter(|l| l.starts_with("f_{")).count(), 3);
}

#[test]
fn pencil_nonsquare_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let t = random_tensor(2, 3, &mut sample_rng(0, 0));
    let path = write_tensor(dir.path(), "t.json", &t);
    let o = tiv(&["pencil", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("square"));
}

#[test]
fn blockdet_symbolic_1x2() {
    let o = tiv(&["blockdet", "--m", "1", "--n", "2", "--symbolic"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "T[1,1,1]*T[1,2,2] - T[1,2,1]*T[1,1,2]");
}

#[test]
fn blockdet_trivial_and_invalid_formats() {
    let o = tiv(&["blockdet", "--m", "2", "--n", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("trivial: K"));
    assert_eq!(code(&tiv(&["blockdet", "--m", "3", "--n", "2"])), 2);
    assert_eq!(code(&tiv(&["blockdet", "--m", "2", "--n", "2"])), 2);
}

#[test]
fn blockdet_value() {
    let dir = tempfile::tempdir().unwrap();
    let t = random_tensor(2, 3, &mut sample_rng(5, 1));
    let path = write_tensor(dir.path(), "t.json", &t);
    let o = tiv(&[
        "blockdet",
        "--m",
        "2",
        "--n",
        "3",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let expected = t.evaluate(&block_det(2, 3).unwrap()).unwrap();
    assert_eq!(stdout(&o).trim(), expected.to_string());
}

#[test]
fn check_classical_n2_passes() {
    let o = tiv(&["check", "--n", "2", "--group", "slslsl", "--samples", "25"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("PASS"));
}

#[test]
fn check_coordinate_fails_with_witness() {
    let o = tiv(&["check", "--poly", "T[1,1,1]"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.starts_with("FAIL"));
    assert!(out.contains("t = {"));
    assert!(out.contains("P = "));
}

#[test]
fn check_block_determinant_2x3() {
    let o = tiv(&["check", "--m", "2", "--n", "3", "--group", "slslsl"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS block determinant"));
}

#[test]
fn check_pencil_coefficients_under_slsl() {
    let o = tiv(&["check", "--n", "3", "--group", "slsl", "--samples", "10"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(),
        4
    );
}

#[test]
fn check_is_deterministic_per_seed() {
    let a = tiv(&["check", "--poly", "T[1,1,1]*T[2,2,2]", "--seed", "7"]);
    let b = tiv(&["check", "--poly", "T[1,1,1]*T[2,2,2]", "--seed", "7"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn check_u_form_variant_fails() {
    let o = tiv(&[
        "check",
        "--n",
        "3",
        "--u-form",
        "--poly",
        "U1^2*U2^2 - 4*U0*U1^3 - 4*U1^3*U3 + 18*U0*U1*U2*U3 - 27*U0^2*U3^2",
    ]);
    assert_eq!(code(&o), 1);
}

#[test]
fn subduct_examples() {
    let o = tiv(&[
        "subduct",
        "--n",
        "2",
        "--poly",
        "T[1,1,1]*T[2,2,1] - T[1,2,1]*T[2,1,1]",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "U-form: U2\nremainder: 0\n");

    let o = tiv(&["subduct", "--n", "2", "--poly", "f1^2 - 4*f0*f2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "U-form: U1^2 - 4*U2*U0\nremainder: 0\n");

    let o = tiv(&["subduct", "--n", "2", "--poly", "T[1,1,1]"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("remainder: T[1,1,1]"));
}

#[test]
fn subduct_reads_poly_file() {
    let dir = tempfile::tempdir().unwrap();
    let expanded = substitute_u(&hyperdet_nn1(2).unwrap(), 2).unwrap();
    let path = dir.path().join("p.txt");
    std::fs::write(&path, expanded.to_pretty_string()).unwrap();
    let o = tiv(&["subduct", "--n", "2", "--poly-file", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "U-form: U1^2 - 4*U2*U0\nremainder: 0\n");
}

#[test]
fn hyperdet_degenerate_and_not() {
    let dir = tempfile::tempdir().unwrap();
    let deg = write_tensor(
        dir.path(),
        "d.json",
        &diag_tensor(&[1, 1, 1, 1], &[1, 1, 2, 3]),
    );
    let o = tiv(&["hyperdet", "--n", "4", "--input", deg.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "value: 0\ndegenerate\n");

    let gen = write_tensor(
        dir.path(),
        "g.json",
        &diag_tensor(&[1, 1, 1, 1], &[1, 2, 3, 4]),
    );
    let o = tiv(&["hyperdet", "--input", gen.to_str().unwrap()]);
    let out = stdout(&o);
    assert!(out.ends_with("\nnon-degenerate\n"));
    assert_ne!(out.lines().next().unwrap(), "value: 0");
}

#[test]
fn hyperdet_n2_matches_expanded_polynomial() {
    let dir = tempfile::tempdir().unwrap();
    let mut t = RatTensor::zeros(2, 2);
    for (pos, v) in [3, -1, 4, 1, -5, 9, 2, 6].into_iter().enumerate() {
        let (i, j, k) = (pos % 2 + 1, (pos / 2) % 2 + 1, pos / 4 + 1);
        t.set(i, j, k, int(v));
    }
    let path = write_tensor(dir.path(), "t.json", &t);
    let o = tiv(&["hyperdet", "--n", "2", "-i", path.to_str().unwrap()]);
    let expanded = substitute_u(&hyperdet_nn1(2).unwrap(), 2).unwrap();
    let value = t.evaluate(&expanded).unwrap();
    assert_ne!(value, int(0));
    assert_eq!(
        stdout(&o).lines().next().unwrap(),
        format!("value: {value}")
    );
}

#[test]
fn expansion_guard() {
    let o = Command::new(env!("CARGO_BIN_EXE_tiv"))
        .args(["hyperdet", "--n", "4", "--symbolic", "--expand"])
        .env("TIV_MAX_TERMS", "1000")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("TIV_MAX_TERMS"));
}

#[test]
fn lie_kernel_outputs() {
    let o = tiv(&["lie-kernel", "--m", "2", "--n", "2", "--degree", "2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("dimension: 3\n"));
    assert_eq!(out.lines().count(), 4);
    let o = tiv(&[
        "lie-kernel",
        "--m",
        "2",
        "--n",
        "5",
        "--degree",
        "3",
        "--parts",
        "slm,sln,sl2",
    ]);
    assert_eq!(stdout(&o), "dimension: 0\n");
    assert_eq!(
        code(&tiv(&[
            "lie-kernel",
            "--m",
            "4",
            "--n",
            "4",
            "--degree",
            "6"
        ])),
        2
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&tiv(&["frobnicate"])), 2);
    assert_eq!(code(&tiv(&["check", "--group", "gl"])), 2);
    assert_eq!(code(&tiv(&["check", "--poly", "T[1,1,"])), 2);
    assert_eq!(code(&tiv(&["pencil"])), 2);
}

#[test]
fn tensor_file_round_trip_is_identity_on_normalized_files() {
    let dir = tempfile::tempdir().unwrap();
    let raw = dir.path().join("raw.json");
    std::fs::write(
        &raw,
        r#"{"m":2,"n":2,"entries":{"T[2,1,2]":"6/-4","T[1,1,1]":"3"}}"#,
    )
    .unwrap();
    let norm = TensorFile::load(&raw).unwrap().normalized().unwrap();
    let saved = dir.path().join("saved.json");
    norm.save(&saved).unwrap();
    let again = TensorFile::load(&saved).unwrap();
    assert_eq!(again, norm);
    assert_eq!(again.entries.as_ref().unwrap()["T[2,1,2]"], "-3/2");
}
