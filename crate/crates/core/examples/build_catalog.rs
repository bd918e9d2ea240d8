//! Regenerates `catalog/`: one `.grp` file per brute-force entry plus
//! `manifest.tsv`, which also carries the formula-only rows.
//!
//!     cargo run --release -p kclass-core --example build_catalog [DIR]

use std::path::PathBuf;

use num_bigint::BigUint;
use num_integer::Integer;

use kclass_core::bounds::{LieFamily, LieFamilySpec};
use kclass_core::construct::{
    alternating_generators, direct_square, mathieu11, mathieu12_in_aut, mathieu22_in_aut, prime_power, psl2_in_aut,
    psl2_in_pgl2, psl3_in_aut, reduce_generators, symmetric_generators, symmetric_over_alternating, wreath_with_s2,
    Construction, ProjectiveLine,
};
use kclass_core::corpus::tables::{reference_row, reference_rows, SPORADIC_ORDERS};
use kclass_core::corpus::{manifest_text, CatalogEntry, EntryKind, Family, GroupFile, KStar, SectionTag};
use kclass_core::lemmas::alternating_class_count;
use kclass_core::permcore::StabChain;
use kclass_core::verifier::SocleShape;

const PSL2_FIELDS: [u64; 26] = [
    7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64, 67, 71, 121,
];
const PSL3_FIELDS: [u64; 4] = [2, 3, 4, 5];

struct Builder {
    dir: PathBuf,
    entries: Vec<CatalogEntry>,
}

fn expectations(name: &str) -> (Option<KStar>, Option<f64>) {
    match reference_row(name) {
        Some(row) if row.at_least => (Some(KStar::AtLeast(row.k_star)), Some(row.gamma_bound)),
        Some(row) => (Some(KStar::Exact(row.k_star)), Some(row.gamma_bound)),
        None => (None, None),
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn psl2_order(q: u64) -> (BigUint, u64) {
    let (_, f) = prime_power(q).unwrap();
    let d = 2u64.gcd(&(q - 1));
    (BigUint::from(q * (q * q - 1) / d), d * f as u64)
}

fn psl3_order(q: u64) -> (BigUint, u64) {
    let (_, f) = prime_power(q).unwrap();
    let d = 3u64.gcd(&(q - 1));
    let q = BigUint::from(q);
    let one = BigUint::from(1u32);
    let order = q.pow(3) * (q.pow(2) - &one) * (q.pow(3) - &one) / d;
    (order, 2 * d * f as u64)
}

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn add(
        &mut self,
        name: &str,
        kind: EntryKind,
        family: Family,
        (socle_order, out_index): (BigUint, u64),
        k_socle: Option<u64>,
        shape: Option<&str>,
        c: Option<Construction>,
    ) {
        let (mut k_star, mut gamma_bound) = expectations(name);
        if kind != EntryKind::Aut {
            k_star = None;
            gamma_bound = None;
        }
        // Socle generator order matters for product shapes, so those are kept.
        let reduce = kind != EntryKind::Product;
        let path = c.map(|c| self.write_file(name, c, &socle_order, out_index, reduce));
        self.entries.push(CatalogEntry {
            name: name.to_string(),
            path,
            kind,
            family,
            socle_order,
            out_index,
            k_socle,
            k_star,
            gamma_bound,
            shape: shape.map(|s| s.parse::<SocleShape>().expect("valid shape")),
            source: None,
        });
    }

    fn write_file(&self, name: &str, c: Construction, socle_order: &BigUint, out: u64, reduce: bool) -> String {
        let seed = name
            .bytes()
            .fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
        let (ambient, socle) = if reduce {
            (
                reduce_generators(c.degree, &c.ambient, seed),
                reduce_generators(c.degree, &c.socle, seed ^ 1),
            )
        } else {
            (c.ambient, c.socle)
        };
        let t = StabChain::new(c.degree, &socle).order();
        let a = StabChain::new(c.degree, &ambient).order();
        assert_eq!(BigUint::from(t), *socle_order, "{name}: |T|");
        assert_eq!(a, t * out as u128, "{name}: |A:T|");
        let mut file = GroupFile::new(name, c.degree);
        if a == t {
            file = file.with_section(SectionTag::Ambient, socle);
        } else {
            file = file
                .with_section(SectionTag::Ambient, ambient)
                .with_section(SectionTag::Socle, socle);
        }
        let stem: String = name
            .chars()
            .map(|ch| {
                if ch.is_ascii_alphanumeric() {
                    ch.to_ascii_lowercase()
                } else {
                    '_'
                }
            })
            .collect();
        let path = format!("{}.grp", stem.trim_end_matches('_'));
        std::fs::write(self.dir.join(&path), file.serialize()).unwrap();
        path
    }
}

fn lie(n: u32, q: u64) -> Family {
    Family::Lie(LieFamilySpec::with_q(LieFamily::Linear, n, q).unwrap())
}

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("catalog"));
    std::fs::create_dir_all(&dir).unwrap();
    for old in std::fs::read_dir(&dir).unwrap().flatten() {
        if old.path().extension().is_some_and(|e| e == "grp") {
            std::fs::remove_file(old.path()).unwrap();
        }
    }
    let mut b = Builder {
        dir: dir.clone(),
        entries: Vec::new(),
    };
    let aut = EntryKind::Aut;

    for n in 5..=22u64 {
        let name = format!("A{n}");
        let out = if n == 6 { 4 } else { 2 };
        let order = (factorial(n) / 2u32, out);
        let k = alternating_class_count(n as usize).unwrap().try_into().unwrap();
        let c = match n {
            6 => {
                let line = ProjectiveLine::new(9).unwrap();
                Some(Construction {
                    degree: 10,
                    ambient: line.pgaml2_generators(),
                    socle: line.psl2_generators(),
                })
            }
            5 | 7..=10 => Some(Construction {
                degree: n as usize,
                ambient: symmetric_generators(n as usize),
                socle: alternating_generators(n as usize),
            }),
            _ => None,
        };
        let shape = match n {
            5 => Some("1x4"),
            6 => Some("1x5"),
            _ => None,
        };
        b.add(&name, aut, Family::Alternating(n as u32), order, Some(k), shape, c);
    }

    for (name, order, out) in SPORADIC_ORDERS {
        let (c, k, shape) = match *name {
            "M11" => (
                Some(Construction {
                    degree: 11,
                    ambient: mathieu11(),
                    socle: mathieu11(),
                }),
                Some(10),
                Some("1x10"),
            ),
            "M12" => (Some(mathieu12_in_aut()), Some(15), None),
            "M22" => (Some(mathieu22_in_aut()), Some(12), None),
            _ => (None, None, None),
        };
        let family = Family::Sporadic(name.to_string());
        b.add(name, aut, family, (order.parse().unwrap(), *out), k, shape, c);
    }

    let mut psl2: Vec<u64> = PSL2_FIELDS.to_vec();
    psl2.push(169);
    for q in psl2 {
        let name = format!("PSL2({q})");
        let k = if q % 2 == 0 { q + 1 } else { (q + 5) / 2 };
        let c = (q != 169).then(|| psl2_in_aut(q as usize).unwrap());
        let shape = (q == 8).then_some("1x5");
        b.add(&name, aut, lie(2, q), psl2_order(q), Some(k), shape, c);
    }
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let name = format!("PSL3({q})");
        let k = match q {
            2 => Some(6),
            3 => Some(12),
            4 => Some(10),
            5 => Some(30),
            _ => None,
        };
        let c = PSL3_FIELDS.contains(&q).then(|| psl3_in_aut(q as usize).unwrap());
        let shape = (q == 4).then_some("1x6");
        b.add(&name, aut, lie(3, q), psl3_order(q), k, shape, c);
    }

    for q in [5u64, 7, 9] {
        let name = format!("PGL2({q})");
        let (order, _) = psl2_order(q);
        let c = psl2_in_pgl2(q as usize).unwrap();
        b.add(
            &name,
            EntryKind::Almost,
            lie(2, q),
            (order, 2),
            Some((q + 5) / 2),
            None,
            Some(c),
        );
    }

    let s5 = symmetric_over_alternating(5);
    b.add(
        "S5wrS2",
        EntryKind::Product,
        Family::Product,
        (BigUint::from(3600u32), 8),
        Some(25),
        Some("2x4"),
        Some(wreath_with_s2(&s5)),
    );
    b.add(
        "S5xS5",
        EntryKind::Product,
        Family::Product,
        (BigUint::from(3600u32), 4),
        Some(25),
        Some("1x4@0-1;1x4@2-3"),
        Some(direct_square(&s5)),
    );

    for row in reference_rows() {
        assert!(
            b.entries.iter().any(|e| e.name == row.name),
            "no entry for {}",
            row.name
        );
    }
    std::fs::write(dir.join("manifest.tsv"), manifest_text(&b.entries)).unwrap();
    let files = b.entries.iter().filter(|e| e.path.is_some()).count();
    println!("{} entries, {files} files in {}", b.entries.len(), dir.display());
}
