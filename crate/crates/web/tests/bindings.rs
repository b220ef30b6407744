use lienil_web::{analyze, corank_grid, verify};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn analyze_reports_invariants() {
    let v = parse(&analyze("algebra l dim 4\n[1,2] = v3\n[1,3] = v4"));
    assert_eq!(v["corank"], 4);
    assert_eq!(v["identified_as"], "L4_3");
    let v = parse(&analyze("algebra l dim 4\n[1,2] = v3\n[3,4] = v1"));
    assert!(v["error"].as_str().unwrap().contains("Jacobi"));
}

#[test]
fn grid_matches_growth_law() {
    let v = parse(&corank_grid(3, 2));
    let cells = v.as_array().unwrap();
    assert_eq!(cells.len(), 9);
    for c in cells {
        let (m, k) = (c["m"].as_u64().unwrap(), c["k"].as_u64().unwrap());
        let want = if m == 1 { k + 1 } else { 2 * m + k + 1 };
        assert_eq!(c["engine"].as_u64().unwrap(), want);
    }
    assert!(parse(&corank_grid(0, 1))["error"].is_string());
}

#[test]
fn verify_runs_both_checks() {
    let text = "realization r\ntarget L4_3\nmodes 1\nv1 = a1\nv2 = 1/2*b1^2\nv3 = b1\nv4 = I";
    let v = parse(&verify(text, 6));
    assert_eq!(v["is_homomorphism"], true);
    assert_eq!(v["fock"]["agrees"], true);
    let v = parse(&verify(&text.replace("1/2*", ""), 6));
    assert_eq!(v["is_homomorphism"], false);
    assert!(parse(&verify(text, 2))["fock"]["refused"].is_string());
}
