use kclass_wasm::{analyze_value, gamma_curve_value, psl2_value};

const A5_IN_S5: &str =
    "name A5\ndegree 5\nsection ambient\ngen 1 0 2 3 4\ngen 1 2 3 4 0\nsection socle\ngen 1 2 0 3 4\ngen 1 2 3 4 0\n";

#[test]
fn gamma_curve_flags_the_a5_exception() {
    let v = gamma_curve_value(120f64.log2(), 3, 10).unwrap();
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 8);
    // k = 4 gets the relaxed A5 bound; k = 3 has no exception and fails.
    assert_eq!(points[1]["limit"], 1.727);
    assert_eq!(points[1]["holds"], true);
    assert_eq!(points[0]["holds"], false);
    assert_eq!(v["first_k_within_bound"], 4);
}

#[test]
fn gamma_curve_rejects_bad_ranges() {
    assert!(gamma_curve_value(10.0, 2, 5).is_err());
    assert!(gamma_curve_value(10.0, 9, 5).is_err());
    assert!(gamma_curve_value(-1.0, 3, 5).is_err());
}

#[test]
fn psl2_matches_closed_forms() {
    for q in [7u64, 8, 9, 11, 16] {
        let v = psl2_value(q).unwrap();
        let want = if q % 2 == 0 { q + 1 } else { (q + 5) / 2 };
        assert_eq!(v["k_T"], want, "q = {q}");
        assert_eq!(v["k_T_formula"], want, "q = {q}");
        assert!(v["k_star"].as_u64().unwrap() >= v["k_star_lower_bound"].as_u64().unwrap());
    }
    assert_eq!(psl2_value(8).unwrap()["k_star"], 5);
    assert!(psl2_value(6).is_err());
    assert!(psl2_value(64).is_err());
}

#[test]
fn analyze_reports_classes_and_orbits() {
    let v = analyze_value(A5_IN_S5).unwrap();
    assert_eq!(v["order_A"], "120");
    assert_eq!(v["order_T"], "60");
    assert_eq!(v["k_T"], 5);
    assert_eq!(v["k_A"], 7);
    assert_eq!(v["k_star"], 4);
    assert_eq!(v["element_orders"], serde_json::json!([1, 2, 3, 5]));
}

#[test]
fn analyze_surfaces_parse_errors() {
    let err = analyze_value("name X\ndegree 3\nsection ambient\ngen 0 0 1\n").unwrap_err();
    assert!(err.contains("line 4"), "{err}");
}
