use std::path::PathBuf;
use std::process::{Command, Output};

fn sample(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("samples");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn lienil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lienil"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn corank_of_filiform_four() {
    let o = lienil(&["corank", &sample("l4_3.lie")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "dim M = 2, t = 4");
}

#[test]
fn identify_scrambled_basis() {
    let o = lienil(&["identify", &sample("scrambled.lie")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "L4_3");
}

#[test]
fn verify_l55_realization() {
    let o = lienil(&["verify", &sample("l5_5.real")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("homomorphism: yes, faithful: yes"));
}

#[test]
fn failed_verification_exits_one() {
    let o = lienil(&["verify", &sample("wrong.real")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("homomorphism: no"));
}

#[test]
fn parse_errors_exit_two() {
    let o = lienil(&["check", &sample("not_jacobi.lie")]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3") && err.contains("Jacobi"), "{err}");
    assert_eq!(
        lienil(&["check", "no/such/file.lie"]).status.code(),
        Some(2)
    );
    assert_eq!(lienil(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(lienil(&["classify"]).status.code(), Some(2));
    assert_eq!(lienil(&["catalog", "show", "L9_9"]).status.code(), Some(2));
    let o = lienil(&["extend", &sample("h1.lie"), "--cocycle", "(1,3)=x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_report_is_stable() {
    let o = lienil(&["--json", "invariants", &sample("l4_3.lie")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/l4_3_invariants.json"));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["corank"], 4);
}

#[test]
fn extend_by_cocycle() {
    let o = lienil(&["extend", &sample("h1.lie"), "--cocycle", "(1,3)=1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("identified as: L4_3"));
    let o = lienil(&["extend", &sample("l4_3.lie"), "--cocycle", "(3,4)=1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn extend_search_finds_l55() {
    let o = lienil(&[
        "extend-search",
        &sample("h1_plus_i.lie"),
        "--target",
        "L5_5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("identified as: L5_5"));
    assert!(out.contains("recovers the base: yes"));
    let o = lienil(&["extend-search", &sample("h1.lie"), "--target", "L5_5"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn fock_check_levels() {
    let o = lienil(&["fock-check", &sample("l5_8.real"), "--levels", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("N = 10: yes"));
    let o = lienil(&["fock-check", &sample("l5_5.real"), "--levels", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("refused"));
    assert_eq!(
        lienil(&["fock-check", &sample("l5_5.real"), "--levels", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn classify_flags_discrepancy() {
    let o = lienil(&["classify", "--corank", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("flag: L4_2 ⊕ i: listed t=6, engine computes t=3"));
}

#[test]
fn catalog_listing() {
    let o = lienil(&["--json", "catalog", "list"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 17);
    let o = lienil(&["catalog", "show", "h(2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim M = 5, t = 5"));
}

#[test]
fn every_sample_is_handled() {
    for f in ["h1.lie", "h1_plus_i.lie", "l4_3.lie", "scrambled.lie"] {
        assert_eq!(
            lienil(&["invariants", &sample(f)]).status.code(),
            Some(0),
            "{f}"
        );
    }
    for f in ["l4_3.real", "l5_5.real", "l5_8.real", "h1_shifted.real"] {
        assert_eq!(
            lienil(&["verify", &sample(f)]).status.code(),
            Some(0),
            "{f}"
        );
        assert_eq!(
            lienil(&["fock-check", &sample(f)]).status.code(),
            Some(0),
            "{f}"
        );
    }
}
