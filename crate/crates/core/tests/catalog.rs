//! The bundled catalog against independent order formulas, the on-disk
//! copy, and the reference tables.

use num_bigint::BigUint;

use kclass_core::corpus::tables::reference_rows;
use kclass_core::corpus::{manifest_text, realize, Catalog, CorpusError, EntryKind, Family};
use kclass_core::permcore::DEFAULT_CAP;

fn catalog_dir() -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("catalog")
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// (|T|, |Out(T)|) from the classical order formulas.
fn expected_order(family: &Family) -> Option<(BigUint, u64)> {
    match family {
        Family::Alternating(n) => {
            let fact: BigUint = (1..=*n as u64).map(BigUint::from).product();
            Some((fact / 2u32, if *n == 6 { 4 } else { 2 }))
        }
        Family::Lie(spec) => {
            let q = spec.p.pow(spec.f);
            let big = BigUint::from(q);
            let one = BigUint::from(1u32);
            match spec.n {
                2 => {
                    let d = gcd(2, q - 1);
                    Some((&big * (big.pow(2) - &one) / d, d * spec.f as u64))
                }
                3 => {
                    let d = gcd(3, q - 1);
                    let order = big.pow(3) * (big.pow(2) - &one) * (big.pow(3) - &one) / d;
                    Some((order, 2 * d * spec.f as u64))
                }
                _ => None,
            }
        }
        _ => None,
    }
}

#[test]
fn aut_entries_match_order_formulas() {
    let catalog = Catalog::bundled();
    let mut checked = 0;
    for e in catalog.entries().iter().filter(|e| e.kind == EntryKind::Aut) {
        if let Some((t, out)) = expected_order(&e.family) {
            assert_eq!(e.socle_order, t, "{}", e.name);
            assert_eq!(e.out_index, out, "{}", e.name);
            checked += 1;
        }
    }
    assert!(checked >= 50, "{checked}");
}

#[test]
fn every_file_backed_entry_realizes() {
    let catalog = Catalog::bundled();
    let files: Vec<_> = catalog.entries().iter().filter(|e| !e.is_formula_only()).collect();
    assert_eq!(files.len(), 44);
    for e in files {
        let pair = realize(e, DEFAULT_CAP).unwrap_or_else(|err| panic!("{}: {err}", e.name));
        assert_eq!(
            pair.ambient().order_exact(),
            e.ambient_order().try_into().unwrap(),
            "{}",
            e.name
        );
    }
}

#[test]
fn formula_only_entries_refuse_to_load() {
    let catalog = Catalog::bundled();
    let m = catalog.get("M24").unwrap();
    assert!(m.is_formula_only());
    assert!(matches!(m.load(), Err(CorpusError::FormulaOnly(_))));
}

#[test]
fn disk_catalog_matches_bundled() {
    let bundled = Catalog::bundled();
    let disk = Catalog::from_dir(&catalog_dir()).unwrap();
    assert_eq!(bundled.entries().len(), disk.entries().len());
    for (a, b) in bundled.entries().iter().zip(disk.entries()) {
        assert_eq!(a.name, b.name);
        assert_eq!(a.path, b.path);
        if a.path.is_some() {
            assert_eq!(a.load().unwrap(), b.load().unwrap(), "{}", a.name);
        }
    }
    let on_disk = std::fs::read_to_string(catalog_dir().join("manifest.tsv")).unwrap();
    assert_eq!(manifest_text(bundled.entries()), on_disk);
}

#[test]
fn reference_rows_are_carried_by_the_catalog() {
    let catalog = Catalog::bundled();
    for row in reference_rows() {
        let e = catalog.get(row.name).unwrap_or_else(|| panic!("{} missing", row.name));
        let k = e.k_star.unwrap();
        assert_eq!(k.value(), row.k_star, "{}", row.name);
        assert_eq!(k.exact().is_none(), row.at_least, "{}", row.name);
        assert_eq!(e.gamma_bound, Some(row.gamma_bound), "{}", row.name);
    }
}

#[test]
fn tampered_manifest_is_rejected_on_realize() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = std::fs::read_to_string(catalog_dir().join("manifest.tsv")).unwrap();
    let tampered: String = manifest
        .lines()
        .filter(|l| l.starts_with('#') || l.starts_with("A5\t"))
        .map(|l| l.replace("\t60\t2\t", "\t60\t4\t") + "\n")
        .collect();
    std::fs::write(dir.path().join("manifest.tsv"), tampered).unwrap();
    std::fs::copy(catalog_dir().join("a5.grp"), dir.path().join("a5.grp")).unwrap();
    let catalog = Catalog::from_dir(dir.path()).unwrap();
    let err = realize(catalog.get("A5").unwrap(), DEFAULT_CAP).unwrap_err();
    assert!(err.to_string().contains("|A:T| = 2, expected 4"), "{err}");
}
