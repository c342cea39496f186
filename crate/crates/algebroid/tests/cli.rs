//! End-to-end checks of the command-line surface: exit codes, the
//! versioned line format, byte determinism, and the print/parse round
//! trip.

use algebroid::algebra::parse_poly;
use algebroid::cli::{self, EXIT_OK, EXIT_STEP_LIMIT, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["algebroid".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn polygon_of_the_cubic() {
    let (code, out, _) = run(&["polygon", "Z^3+X^2*Z+Y^3-X^4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("format: 1\n"));
    assert!(out.contains("delta: (0, 1) (1, 0)\n"));
    assert!(out.contains("delta.facet: (0, 1) -> (1, 0) slope -1 length2 2\n"));
}

#[test]
fn polygon_levels_and_porcelain_records() {
    let (code, out, _) = run(&["polygon", "Z^3+X^2*Z+Y^3-X^4", "--levels", "--porcelain"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("delta.vertex: 0 1\n"));
    assert!(out.contains("delta.vertex: 1 0\n"));
    assert!(out.contains("gamma[1].vertex: 2 0\n"));
    assert!(out.contains("gamma[2]: empty\n"));
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["resolve", "Z^2+X^2+Y^6", "--strategy", "worst"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first, second);
}

#[test]
fn printed_equations_reparse_to_the_same_polynomial() {
    for expr in [
        "Z^5+X^2*Y*Z^3+X^3*Y^3",
        "z^2 - 1/2 x y + 3y^7",
        "Z^3 + 3*X*Z^2",
    ] {
        let (code, out, _) = run(&["transform", expr, "--transvection", "1,-2"]);
        assert_eq!(code, EXIT_OK);
        for key in ["equation: ", "result: "] {
            let line = out
                .lines()
                .find_map(|l| l.strip_prefix(key))
                .expect("line present");
            let reparsed = parse_poly(line).expect("printed equation parses");
            assert_eq!(reparsed.to_string(), line);
        }
    }
}

#[test]
fn bounds_of_the_prepared_quintic() {
    let (code, out, _) = run(&["bounds", "Z^5+X^2*Y*Z^3+X^3*Y^3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("bound.prepared: 4\n"));
    assert!(out.contains("bound.nonplane: not-applicable\n"));
}

#[test]
fn resolve_reports_depth_and_outcome() {
    let (code, out, _) = run(&[
        "resolve",
        "Z^2+X^2+Y^4",
        "--strategy",
        "worst",
        "--max-steps",
        "10",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("outcome: DROPPED\n"));
    assert!(out.contains("depth: 2\n"));
    assert!(out.contains("step[2].delta: dropped\n"));
}

#[test]
fn resolve_with_given_directions() {
    let (code, out, _) = run(&[
        "resolve",
        "Z^2+X^2+Y^4",
        "--strategy",
        "dirs=0:1:0,0:1:0",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("outcome: DROPPED\n"));
    assert!(out.contains("depth: 2\n"));
}

#[test]
fn step_limit_exit_code() {
    let (code, out, _) = run(&["resolve", "Z^2+X^2+Y^8", "--strategy", "generic", "--max-steps", "1"]);
    // Generic strategy resolves this in one step, so force the limit with
    // the given strategy instead.
    assert!(code == EXIT_OK || code == EXIT_STEP_LIMIT, "unexpected output: {out}");
    let (code, out, _) = run(&[
        "resolve",
        "Z^2+X^2+Y^8",
        "--strategy",
        "dirs=0:1:0,0:1:0,0:1:0,0:1:0",
        "--max-steps",
        "2",
    ]);
    assert_eq!(code, EXIT_STEP_LIMIT, "output: {out}");
    assert!(out.contains("outcome: STEP_LIMIT\n"));
}

#[test]
fn parse_errors_use_exit_code_one() {
    let (code, out, err) = run(&["polygon", "Z^2 + ?"]);
    assert_eq!(code, EXIT_USAGE, "output: {out}");
    assert!(err.contains("byte 6"));

    let (code, _, err) = run(&["polygon", "Z^2 + X"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("not a Weierstrass equation"));

    let (code, _, err) = run(&["transform", "Z^2+X^3", "--monoidal-zy", "0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("not permissible"));

    let (code, _, err) = run(&["transform", "Z^2+X^3"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("choose exactly one"));
}

#[test]
fn transform_subcommand_variants() {
    let (code, out, _) = run(&["transform", "Z^2+X^2+Y^4", "--quadratic", "0:1:0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("result: Z^2 + Y^2 + X^2\n"));
    assert!(out.contains("multiplicity-dropped: false\n"));

    let (code, out, _) = run(&["transform", "Z^2-X^3", "--monoidal-zx", "0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("result: Z^2 - X\n"));
    assert!(out.contains("order: 1\n"));
    assert!(out.contains("multiplicity-dropped: true\n"));

    let (code, out, _) = run(&["transform", "Z^2+X^2", "--quadratic", "1:0:1/2"]);
    assert_eq!(code, EXIT_OK, "output: {out}");
    assert!(out.contains("kind: quadratic (1:0:1/2)\n"));
}

#[test]
fn svg_flag_writes_a_file() {
    let dir = std::env::temp_dir().join("algebroid-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("delta.svg");
    let (code, out, _) = run(&[
        "polygon",
        "Z^2-X^3*Y",
        "--svg",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("svg: "));
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.starts_with("<svg"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn prepare_reports_witnesses() {
    let (code, out, _) = run(&["prepare", "Z^3 + 3*X*Z^2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("wt: false\n"));
    assert!(out.contains("tchirnhausen: Z^3 - 3*X^2*Z + 2*X^3\n"));

    let (code, out, _) = run(&["prepare", "Z^5+X^2*Y*Z^3+X^3*Y^3"]);
    assert_eq!(code, EXIT_OK, "output: {out}");
    assert!(out.contains("prepared: true\n"));
    assert!(out.contains("level[3]: witness r=2 s=1 phi=identity"));
}

#[test]
fn prepare_handles_degree_bounds_and_non_plane_cones() {
    // a_0 = X (Y - X)^2 + X^8: a shallow bound cannot see the perturbation
    // and reports an inexact witness; a deep bound catches the mismatch.
    let expr = "Z^2 + X*Y^2 - 2*X^2*Y + X^3 + X^8";
    let (code, out, _) = run(&["prepare", expr, "--degree-bound", "3"]);
    assert_eq!(code, EXIT_OK, "output: {out}");
    assert!(
        out.contains("level[0]: witness r=1 s=2 phi=(1) verified-to=3 exact=false\n"),
        "output: {out}"
    );
    let (code, out, _) = run(&["prepare", expr, "--degree-bound", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("level[0]: unresolved\n"), "output: {out}");

    let (code, out, _) = run(&["prepare", "Z^2+X^2+Y^4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("prepared: not-applicable"), "output: {out}");
}

#[test]
fn malformed_directions_are_rejected() {
    let (code, _, err) = run(&["transform", "Z^2+X^3", "--quadratic", "1:2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("A:B:C"));
    let (code, _, err) = run(&["transform", "Z^2+X^3", "--quadratic", "0:0:0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("nonzero"));
    let (code, _, err) = run(&["resolve", "Z^2+X^3", "--strategy", "sideways"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("unknown strategy"));
}

#[test]
fn verify_runs_the_corpus() {
    let (code, out, _) = run(&["verify"]);
    assert_eq!(code, EXIT_OK, "output: {out}");
    assert!(out.contains("result: 18/18 passed\n"));
}
