use std::path::PathBuf;
use std::process::{Command, Output};

fn kclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kclass"))
        .args(args)
        .env_remove("KCLASS_CATALOG")
        .output()
        .expect("spawn kclass")
}

fn catalog_file(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/catalog")
        .join(name);
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn order_of_a5_in_s5() {
    let o = kclass(&["order", &catalog_file("a5.grp")]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("|A| = 120"), "{s}");
    assert!(s.contains("|T| = 60"), "{s}");
    assert!(s.contains("|A:T| = 2"), "{s}");
}

#[test]
fn classes_lists_sizes_summing_to_the_order() {
    let o = kclass(&["classes", &catalog_file("psl2_7.grp")]);
    assert!(o.status.success());
    let s = stdout(&o);
    let socle = s.split("socle:").nth(1).expect("socle section");
    assert!(socle.starts_with(" 6 classes, |G| = 168"), "{socle}");
    let total: u64 = socle
        .lines()
        .skip(2)
        .filter_map(|l| l.split_whitespace().next()?.parse::<u64>().ok())
        .sum();
    assert_eq!(total, 168);
}

#[test]
fn kstar_and_eorders() {
    let s = stdout(&kclass(&["kstar", &catalog_file("psl2_8.grp")]));
    assert!(s.contains("k(T) = 9, k*(T) = 5, |A:T| = 3"), "{s}");
    let s = stdout(&kclass(&["eorders", &catalog_file("a6.grp")]));
    assert!(s.contains("e(T) = 5 {1, 2, 3, 4, 5}"), "{s}");
}

#[test]
fn gamma_exit_status_follows_the_bound() {
    let a5 = 120f64.log2().to_string();
    let o = kclass(&["gamma", "--log2aut", &a5, "--k", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("gamma = 1.726"));
    let o = kclass(&["gamma", "--log2aut", "40", "--k", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let o = kclass(&["gamma", "--log2aut", "4", "--k", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("lemmas.json");
    let o = kclass(&["verify", "lemmas", "--json", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("0 failed"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.iter().all(|r| r["verdict"] == "pass"));
    assert!(reports.iter().any(|r| r["id"] == "lemma.weighted_sharpness"));
}

#[test]
fn verify_json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        assert!(
            kclass(&["verify", "bertram", "--cap", "200000", "--json", p.to_str().unwrap()])
                .status
                .success()
        );
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn catalog_override_from_env_and_flag() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = std::fs::read_to_string(catalog_file("manifest.tsv")).unwrap();
    let keep: String = manifest
        .lines()
        .filter(|l| l.starts_with('#') || l.starts_with("A5\t") || l.starts_with("PSL2(7)\t"))
        .map(|l| format!("{l}\n"))
        .collect();
    std::fs::write(dir.path().join("manifest.tsv"), keep).unwrap();
    for f in ["a5.grp", "psl2_7.grp"] {
        std::fs::copy(catalog_file(f), dir.path().join(f)).unwrap();
    }
    let o = Command::new(env!("CARGO_BIN_EXE_kclass"))
        .args(["verify", "bertram"])
        .env("KCLASS_CATALOG", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(2 entries)"));

    let missing = dir.path().join("nope");
    let o = kclass(&["verify", "bertram", "--catalog", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rejects_unknown_suite_and_bad_files() {
    let o = kclass(&["verify", "everything"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown suite"));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.grp");
    std::fs::write(&bad, "name X\ndegree 3\nsection ambient\ngen 0 0 1\n").unwrap();
    let o = kclass(&["order", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}
