//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (run with `cargo test --test acceptance -- --nocapture` to see
//! them). All arithmetic is exact; a criterion passes only with zero
//! failures at the stated sample counts.

use std::process::Command;
use std::time::Instant;

use demival::suites::{run_suite, SuiteConfig};

const SEED: u64 = 42;

fn cfg(samples: usize) -> SuiteConfig {
    SuiteConfig { seed: SEED, samples, ..SuiteConfig::default() }
}

fn run(criterion: &str, name: &str, samples: usize) {
    let started = Instant::now();
    let result = run_suite(name, &cfg(samples)).unwrap_or_else(|e| {
        println!("FAIL {criterion}: suite {name} errored: {e}");
        panic!("criterion {criterion}: suite {name} errored: {e}");
    });
    let elapsed = started.elapsed();
    if result.passed() {
        println!(
            "PASS {criterion}: {name} ({} samples, {:.2?})",
            result.samples, elapsed
        );
    } else {
        println!(
            "FAIL {criterion}: {name} ({} samples): {:?}",
            result.samples, result.failures
        );
        panic!("criterion {criterion} failed in {name}: {:?}", result.failures);
    }
}

#[test]
fn criterion_01_axiom_suite() {
    let started = Instant::now();
    run("criterion 1", "axioms/rational", 1000);
    run("criterion 1", "axioms/quad-minus5", 1000);
    run("criterion 1", "axioms/quad-minus1", 1000);
    run("criterion 1", "axioms/w-rational", 1000);
    run("criterion 1", "axioms/w-quad", 1000);
    run("criterion 1", "axioms/t", 1000);
    run("criterion 1", "axioms/u", 1000);
    println!("PASS criterion 1: all axiom suites, total {:.2?}", started.elapsed());
}

#[test]
fn criterion_02_gauss_kronecker() {
    run("criterion 2", "gauss-kronecker/rational", 1000);
    run("criterion 2", "gauss-kronecker/quad", 1000);
}

#[test]
fn criterion_03_bezout_construction() {
    // 500 random (p, q) pairs split across both bases.
    run("criterion 3", "bezout-construction", 500);
}

#[test]
fn criterion_04_principal_generators() {
    run("criterion 4", "rw-principal-generator", 200);
}

#[test]
fn criterion_05_dedekind_oracle() {
    run("criterion 5", "dedekind-oracle", 200);
}

#[test]
fn criterion_06_non_pid_witness() {
    run("criterion 6", "non-pid-witness", 1);
}

#[test]
fn criterion_07_ideal_correspondence() {
    run("criterion 7", "coefficient-cofactors", 200);
    // 200 samples = 100 per base, each checking both directions.
    run("criterion 7", "ideal-correspondence", 200);
}

#[test]
fn criterion_08_u_valuation() {
    run("criterion 8", "u-membership", 500);
    run("criterion 8", "basis-witness", 50);
    run("criterion 8", "reconstruct-unit", 200);
}

#[test]
fn criterion_09_factorization_exhaustive() {
    let started = Instant::now();
    // The suite enumerates every integer polynomial of degree ≤ 3 with
    // coefficients in [-4, 4] regardless of the samples knob.
    run("criterion 9", "factor-exhaustive", 1);
    println!("PASS criterion 9: exhaustive run took {:.2?}", started.elapsed());
}

// ---- Criterion 10: golden CLI transcripts ----

fn demival(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_demival"))
        .args(args)
        .env_remove("DEMIVAL_FACTOR_BOUND")
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn criterion_10_cli_golden_transcripts() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["valuate", "--ring", "q", "--valuation", "divisor", "4/9"],
            "{\"entries\":[{\"label\":\"p:2\",\"exp\":2},{\"label\":\"p:3\",\"exp\":-2}]}\n",
        ),
        (
            &["pgen", "--ring", "q", "--gens", "2", "X"],
            "{\"generator\":\"X^2+2\",\"value\":{\"entries\":[]},\"cofactors\":[\"(2)/(X^2+2)\",\"(X)/(X^2+2)\"],\"combination\":[\"1\",\"X\"],\"steps\":[{\"h\":1,\"p_from_accumulator\":false}]}\n",
        ),
        (
            &[
                "ideal",
                "--ring",
                "quad:-5",
                "principal-search",
                "(2, 1+sqrt(-5))",
                "--bound",
                "100",
            ],
            "{\"principal\":false}\n",
        ),
    ];
    for (args, golden) in cases {
        let (out1, err1, code1) = demival(args);
        let (out2, _, code2) = demival(args);
        assert_eq!(code1, 0, "exit code for {args:?}; stderr: {err1}");
        assert_eq!(code2, 0);
        assert_eq!(out1, out2, "output not reproducible for {args:?}");
        assert_eq!(&out1, golden, "golden mismatch for {args:?}");
    }

    // Seeded suites are bit-reproducible across runs.
    let seeded: &[&str] = &[
        "check",
        "--suite",
        "minimal-descent",
        "--suite",
        "dedekind-oracle",
        "--seed",
        "7",
        "--samples",
        "25",
    ];
    let (out1, _, code1) = demival(seeded);
    let (out2, _, code2) = demival(seeded);
    assert_eq!(code1, 0);
    assert_eq!(code2, 0);
    assert_eq!(out1, out2, "seeded check output must be byte-identical");
    println!("PASS criterion 10: golden transcripts byte-identical across runs");
}

// ---- CLI error-path contract ----

#[test]
fn cli_exit_codes() {
    // Parse error: exit 2.
    let (_, _, code) = demival(&["valuate", "--ring", "q", "X^-1"]);
    assert_eq!(code, 2, "negative exponent outside sugar position is a parse error");

    // Domain error: exit 1 with a machine-readable code.
    let (out, _, code) = demival(&[
        "valuate",
        "--ring",
        "q",
        "--factor-bound",
        "50",
        "9991",
    ]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(out.trim()).expect("error JSON");
    assert_eq!(v["error"], "factor-bound-exceeded");

    // Rejected quadratic context: d ≡ 1 (mod 4).
    let (_, _, code) = demival(&["valuate", "--ring", "quad:5", "2"]);
    assert_eq!(code, 1);
}

#[test]
fn factor_bound_env_var() {
    let run = |extra_args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_demival"))
            .args(["valuate", "--ring", "q"])
            .args(extra_args)
            .arg("9991")
            .env("DEMIVAL_FACTOR_BOUND", "50")
            .output()
            .expect("binary runs");
        (
            String::from_utf8(out.stdout).expect("utf8"),
            out.status.code().unwrap_or(-1),
        )
    };
    // The env var lowers the default bound below 97·103.
    let (out, code) = run(&[]);
    assert_eq!(code, 1);
    assert!(out.contains("factor-bound-exceeded"), "got: {out}");
    // An explicit flag wins over the env var.
    let (out, code) = run(&["--factor-bound", "1000000"]);
    assert_eq!(code, 0);
    assert!(out.contains("p:97"), "got: {out}");
}
