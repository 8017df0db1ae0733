use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;

use schubert::asm::{enumerate_asms, PartialAsm};
use schubert::decomp::perm_set_of_asm;
use schubert::groebner::{Ideal, DEFAULT_BUDGET};
use schubert::ideal::{antidiagonal_initial, schubert_ideal};
use schubert::monomial::MonomialIdeal;
use schubert::perm::Permutation;
use schubert::pipedream::{pipe_dreams, PipeDream};
use schubert::poly::Polynomial;
use schubert::schubpoly::{schubert_polynomial, SchubertAlgorithm};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// The `result` field of a `--json` run, after checking the envelope.
fn json_result(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let v: Value = serde_json::from_str(&stdout(&full)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], format!("{} {}", args[0], args[1]));
    v["result"].clone()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["perm", "essential", "2,1,5,4,3"]), "{(1,1),(3,4),(4,3)}\n");
    assert_eq!(stdout(&["poly", "regularity", "1,2,3,9,8,4,5,6,7"]), "6\n");
    assert_eq!(stdout(&["asm", "enumerate", "5", "--count"]), "429\n");
}

#[test]
fn first_minimal_prime_of_antidiagonal_initial_ideal() {
    let text = stdout(&["ideal", "primes", "2,1,4,3,6,5"]);
    assert_eq!(text.lines().next().unwrap(), "monomialIdeal (z[1,1], z[1,3], z[1,5])");
}

#[test]
fn matrices_may_come_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.txt");
    std::fs::write(&path, "0 1 0\n1 -1 1\n0 1 0\n").unwrap();
    let from_file = stdout(&["decomp", "permset", path.to_str().unwrap()]);
    assert_eq!(from_file, stdout(&["decomp", "permset", "0 1 0; 1 -1 1; 0 1 0"]));
    assert_eq!(from_file, "{{3, 1, 2}, {2, 3, 1}}\n");
}

#[test]
fn explicit_generators() {
    let out = stdout(&["decomp", "decompose", "--gens", "z[1,1]", "--size", "2x2"]);
    assert_eq!(out, "{{2, 1}}\n");
    assert_eq!(stdout(&["decomp", "is-asm", "--gens", "z[1,1]*z[2,2]"]), "false\n");
}

#[test]
fn json_cells_match_library() {
    let v = json_result(&["perm", "essential", "2,1,6,3,5,4"]);
    let cells: Vec<(u32, u32)> = serde_json::from_value(v).unwrap();
    let expected: Vec<(u32, u32)> = perm("2,1,6,3,5,4").essential_set().iter().collect();
    assert_eq!(cells, expected);
}

#[test]
fn json_polynomial_round_trip() {
    let v = json_result(&["poly", "schubert", "2,1,4,3"]);
    let p = Polynomial::from_json(&v).unwrap();
    assert_eq!(p, schubert_polynomial(&perm("2,1,4,3"), SchubertAlgorithm::DividedDifference));
}

#[test]
fn json_ideal_round_trip() {
    let a = perm("3,1,4,2").to_matrix();
    let ideal = Ideal::from_json(&json_result(&["ideal", "fulton", "3,1,4,2"])).unwrap();
    assert!(ideal.equals(&schubert_ideal(&a), DEFAULT_BUDGET).unwrap());
    assert_eq!(ideal.asm().unwrap(), &a);
}

#[test]
fn json_monomial_ideal_round_trip() {
    let a: PartialAsm = "0 0 1 0; 1 0 -1 1; 0 0 1 0; 0 1 0 0".parse().unwrap();
    let v = json_result(&["ideal", "antidiag", "0,0,1,0;1,0,-1,1;0,0,1,0;0,1,0,0"]);
    assert_eq!(MonomialIdeal::from_json(&v).unwrap(), antidiagonal_initial(&a));
}

#[test]
fn json_matrices_and_permutations_round_trip() {
    let v = json_result(&["asm", "enumerate", "3"]);
    let list: Vec<PartialAsm> = serde_json::from_value(v).unwrap();
    assert_eq!(list, enumerate_asms(3).unwrap());

    let a: PartialAsm = "0 1 0; 1 -1 1; 0 1 0".parse().unwrap();
    let v = json_result(&["decomp", "permset", "0,1,0;1,-1,1;0,1,0"]);
    let perms: Vec<Permutation> = serde_json::from_value(v).unwrap();
    assert_eq!(perms, perm_set_of_asm(&a).unwrap());

    let v = json_result(&["decomp", "get-asm", "3,4,1,2", "3,2,4,1"]);
    let got: PartialAsm = serde_json::from_value(v).unwrap();
    assert_eq!(got, "0 0 1 0; 0 1 0 0; 1 -1 0 1; 0 1 0 0".parse().unwrap());
}

#[test]
fn json_pipe_dreams_round_trip() {
    let w = perm("2,1,4,3");
    let v = json_result(&["pipedream", "list", "2,1,4,3"]);
    let dreams: Vec<PipeDream> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|d| {
            let size = d["size"].as_u64().unwrap() as usize;
            let crosses: Vec<(u32, u32)> = serde_json::from_value(d["crosses"].clone()).unwrap();
            PipeDream::new(size, crosses).unwrap()
        })
        .collect();
    assert_eq!(dreams, pipe_dreams(&w).unwrap());
}

#[test]
fn random_lists_follow_the_seed() {
    let draw = |seed: &str| stdout(&["--seed", seed, "asm", "random", "5", "4"]);
    assert_eq!(draw("7"), draw("7"));
    assert_ne!(draw("7"), draw("8"));
    let distinct = stdout(&["asm", "random", "3", "7", "--distinct"]);
    assert_eq!(distinct.split("\n\n").count(), 7);
    assert_eq!(exit_code(&["asm", "random", "3", "8", "--distinct"]), 1);
}

#[test]
fn enumeration_uses_the_data_directory() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(stdout(&["--data-dir", d, "asm", "enumerate", "4", "--count"]), "42\n");
    let cached = dir.path().join("asm_4.txt");
    assert!(cached.exists());
    std::fs::write(&cached, "1 1\n1 1\n").unwrap();
    assert_eq!(exit_code(&["--data-dir", d, "asm", "enumerate", "4", "--count"]), 1);
}

#[test]
fn domain_errors_exit_with_one() {
    let cases: &[&[&str]] = &[
        &["perm", "length", "2,2,1"],
        &["perm", "length", "1,x"],
        &["perm", "class", "2,1", "nonsense"],
        &["asm", "validate", "1 1; 0 0"],
        &["asm", "validate", "2 0; 0 1"],
        &["asm", "from-ranktable", "0 2; 1 1"],
        &["asm", "enumerate", "9"],
        &["ideal", "diaginit", "2,1", "--order", "sideways"],
        &["poly", "schubert", "2,1", "--algorithm", "guess"],
        &["pipedream", "render", "2,1,4,3", "--index", "99"],
        &["decomp", "get-asm", "1,2,4,3", "1,3,2,4"],
        &["--budget", "1", "decomp", "intersect", "3,4,1,2", "3,2,4,1"],
        &["decomp", "decompose", "--gens", "z[1,1] +", "--size", "2x2"],
        &["decomp", "decompose", "--gens", "z[1,1]", "--size", "2by2"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.starts_with("error: "), "{args:?}: {err}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: &[&[&str]] = &[
        &[],
        &["perm"],
        &["perm", "frobnicate", "1,2"],
        &["perm", "length"],
        &["asm", "enumerate", "five"],
        &["--seed", "-3", "asm", "random", "3", "1"],
        &["decomp", "add"],
        &["decomp", "is-asm", "1,2", "--gens", "z[1,1]"],
        &["poly", "raj", "2,1", "--unknown"],
    ];
    for args in cases {
        assert_eq!(exit_code(args), 2, "{args:?}");
    }
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["decomp", "--help"]), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Arbitrary text as a permutation argument is either accepted or a
    // domain error, and acceptance agrees with the library parser.
    #[test]
    fn permutation_arguments_never_misuse_exit_codes(arg in "[0-9,{} x-]{1,12}") {
        prop_assume!(!arg.starts_with('-'));
        let out = run(&["perm", "length", &arg]);
        let parsed = arg.trim().parse::<Permutation>();
        match out.status.code() {
            Some(0) => prop_assert!(parsed.is_ok()),
            Some(1) => prop_assert!(parsed.is_err()),
            other => prop_assert!(false, "exit {other:?} for {arg:?}"),
        }
    }

    #[test]
    fn matrix_arguments_never_misuse_exit_codes(arg in "[01 ;-]{1,16}") {
        prop_assume!(!arg.starts_with('-'));
        let code = run(&["asm", "ranktable", &arg]).status.code();
        prop_assert!(code == Some(0) || code == Some(1), "exit {code:?} for {arg:?}");
    }
}
