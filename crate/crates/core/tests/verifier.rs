use kclass_core::corpus::Catalog;
use kclass_core::report::Verdict;
use kclass_core::verifier::{base3_report, bertram_report, run_suite, SocleShape, Suite, SuiteOptions};

#[test]
fn bertram_boundaries_are_exact() {
    // 3^10 = 59049; |G| = 3^10 fails, one less passes.
    assert_eq!(bertram_report("x", 59049, 10).verdict, Verdict::Fail);
    assert_eq!(bertram_report("x", 59048, 10).verdict, Verdict::Pass);
    // Ceiling equality: 3^9 < |G| <= 3^10.
    let r = bertram_report("x", 19684, 10);
    assert_eq!(r.get("ceiling_equality").and_then(|v| v.as_bool()), Some(true));
    let r = bertram_report("x", 19683, 10);
    assert_eq!(r.get("ceiling_equality").and_then(|v| v.as_bool()), Some(false));
    // |3^40| overflows f64 precision but not the comparison.
    let big = 3u128.pow(40);
    assert_eq!(base3_report("x", big, 40).verdict, Verdict::Pass);
    assert_eq!(base3_report("x", big + 1, 40).verdict, Verdict::Fail);
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL {
        assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
    }
    assert!("tables ".parse::<Suite>().is_err());
}

#[test]
fn shapes_parse_and_reject() {
    let s: SocleShape = "1x4@0-1;1x4@2-3".parse().unwrap();
    assert_eq!(s.r(), 2);
    assert_eq!(s.to_string().parse::<SocleShape>().unwrap(), s);
    assert_eq!("2x4".parse::<SocleShape>().unwrap().total_factors(), 2);
    for bad in ["", "0x4", "2x3", "2y4", "1x4@3-1"] {
        assert!(bad.parse::<SocleShape>().is_err(), "{bad}");
    }
}

#[test]
fn tables_suite_has_no_failures() {
    let opts = SuiteOptions::new(Catalog::bundled());
    let reports = run_suite(Suite::Tables, &opts).unwrap();
    let failed: Vec<_> = reports.iter().filter(|r| r.failed()).map(|r| &r.subject).collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert!(reports.iter().any(|r| r.id == "tables.alternating_tail" && r.passed()));
}
