//! Formula layer: Lie-type parameters, the γ statistic, lower bounds for
//! k*(T), class-count formulas for PSL_2 / PGL_2, and the c₂ check.

mod lie;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::construct::prime_power;
use crate::report::VerificationReport;

pub use lie::{lie_facts, LieFamily, LieFamilySpec, SimpleGroupFacts};

/// The global constant: γ(T) <= C2 for every non-abelian simple T.
pub const C2: f64 = 1.954;
/// The bound γ(T) < C_GENERIC for all T other than A5 and PSL_3(4).
pub const C_GENERIC: f64 = 1.613;
/// γ(A5) is at most this.
pub const GAMMA_A5_BOUND: f64 = 1.727;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),
    #[error("k = {0} is outside the domain (k >= 3 required)")]
    Domain(u64),
    #[error("{0} is not an admissible field size here")]
    BadFieldSize(u64),
}

/// log₂ of an arbitrary-precision integer.
pub fn log2_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().log2();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap().log2() + shift as f64
}

/// `(log₂ k)² · log₂ log₂ k`, the denominator of γ.
pub fn gamma_denominator(k: f64) -> f64 {
    let l = k.log2();
    l * l * l.log2()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaValue {
    pub log2_aut: f64,
    pub k: u64,
    pub gamma: f64,
}

/// γ = log₂|Aut(T)| / ((log₂ k)² log₂ log₂ k).
pub fn gamma(log2_aut: f64, k: u64) -> Result<GammaValue, BoundsError> {
    if k < 3 {
        return Err(BoundsError::Domain(k));
    }
    Ok(GammaValue {
        log2_aut,
        k,
        gamma: log2_aut / gamma_denominator(k as f64),
    })
}

/// Lower bound for k*(T): the least integer at least
/// `max{e(T), q^r / (d |Out(T)|)}` (k* is an integer, so rounding up is
/// sound).
pub fn k_star_lower_bound(spec: &LieFamilySpec, e_of_t: Option<u64>) -> Result<u64, BoundsError> {
    let facts = lie_facts(spec)?;
    let num = spec.q_to_rank();
    let den = BigUint::from(facts.d * facts.out_order);
    let ratio = num.div_ceil(&den).to_u64().unwrap_or(u64::MAX);
    Ok(ratio.max(e_of_t.unwrap_or(0)))
}

/// k(PSL_2(q)): q + 1 for even q, (q + 5)/2 for odd q.
pub fn psl2_class_count(q: u64) -> Result<u64, BoundsError> {
    if q < 4 || prime_power(q).is_none() {
        return Err(BoundsError::BadFieldSize(q));
    }
    Ok(if q.is_multiple_of(2) { q + 1 } else { (q + 5) / 2 })
}

/// k(PGL_2(q)) = q + 2 for odd q >= 5.
pub fn pgl2_class_count(q: u64) -> Result<u64, BoundsError> {
    if q < 5 || q.is_multiple_of(2) || prime_power(q).is_none() {
        return Err(BoundsError::BadFieldSize(q));
    }
    Ok(q + 2)
}

#[derive(Clone, Debug, PartialEq)]
pub struct C2Entry {
    pub name: String,
    pub log2_aut: f64,
    pub k: u64,
}

impl C2Entry {
    pub fn new(name: impl Into<String>, log2_aut: f64, k: u64) -> Self {
        Self {
            name: name.into(),
            log2_aut,
            k,
        }
    }
}

/// The bound that applies to an entry: the two exceptional groups are
/// recognized from `(|Aut(T)|, k*)` so aliases such as PSL_2(4) ≅ PSL_2(5) ≅
/// A5 are treated alike. Returns the bound and whether it is inclusive.
pub fn c2_limit(log2_aut: f64, k: u64) -> (f64, bool, Option<&'static str>) {
    let close = |n: f64| (log2_aut - n.log2()).abs() < 1e-9;
    if k == 4 && close(120.0) {
        (GAMMA_A5_BOUND, true, Some("A5"))
    } else if k == 6 && close(241920.0) {
        (C2, true, Some("PSL3(4)"))
    } else {
        (C_GENERIC, false, None)
    }
}

/// Per-entry c₂ check.
pub fn c2_entry_report(entry: &C2Entry) -> VerificationReport {
    let mut r = VerificationReport::new("c2", &entry.name);
    let g = match gamma(entry.log2_aut, entry.k) {
        Ok(g) => g,
        Err(e) => {
            r.require(false, e.to_string());
            return r;
        }
    };
    let (limit, inclusive, exception) = c2_limit(entry.log2_aut, entry.k);
    r.real("log2_aut", entry.log2_aut)
        .int("k", entry.k)
        .real("gamma", g.gamma)
        .real("limit", limit)
        .flag("exception", exception.is_some());
    let ok = if inclusive { g.gamma <= limit } else { g.gamma < limit };
    r.require(ok, format!("gamma {:.6} exceeds {limit}", g.gamma))
        .require(g.gamma <= C2, format!("gamma {:.6} exceeds c2", g.gamma))
        .margin(limit - g.gamma);
    if let Some(name) = exception {
        r.note(format!("exceptional group ({name})"));
    }
    r
}

/// γ < 1.613 for every entry except A5 (γ <= 1.727) and PSL_3(4)
/// (γ <= 1.954); the aggregate report keeps every entry's γ.
pub fn verify_c2(entries: &[C2Entry]) -> VerificationReport {
    let mut r = VerificationReport::new("c2", format!("{} entries", entries.len()));
    let mut exceptions = Vec::new();
    for e in entries {
        let sub = c2_entry_report(e);
        if let Some(g) = sub.get("gamma").and_then(|v| v.as_real()) {
            r.real(&format!("gamma[{}]", e.name), g);
        }
        if sub.get("exception").and_then(|v| v.as_bool()) == Some(true) {
            exceptions.push(e.name.clone());
        }
        if let Some(m) = sub.margin {
            r.margin(m);
        }
        r.require(sub.passed(), format!("{}: {}", e.name, sub.reason.unwrap_or_default()));
    }
    r.text("exceptions", exceptions.join(","));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_of_the_tight_cases() {
        let a5 = gamma(120f64.log2(), 4).unwrap().gamma;
        assert!((a5 - 1.7267).abs() < 1e-4 && a5 <= 1.727);
        let l34 = gamma(241920f64.log2(), 6).unwrap().gamma;
        assert!((l34 - 1.9534).abs() < 1e-4 && l34 <= 1.954);
        let l28 = gamma(1512f64.log2(), 5).unwrap().gamma;
        assert!(l28 > 1.612006 && l28 <= 1.613);
        let m22 = gamma(887040f64.log2(), 11).unwrap().gamma;
        assert!(m22 < 0.923 && m22 > 0.922);
    }

    #[test]
    fn gamma_domain() {
        assert_eq!(gamma(10.0, 2), Err(BoundsError::Domain(2)));
        assert!(gamma(10.0, 3).unwrap().gamma > 0.0);
    }

    #[test]
    fn gamma_monotone() {
        let mut prev = f64::INFINITY;
        for k in 3..=10_000u64 {
            let g = gamma(50.0, k).unwrap().gamma;
            assert!(g < prev, "k = {k}");
            assert!(gamma(50.5, k).unwrap().gamma > g);
            prev = g;
        }
    }

    #[test]
    fn lower_bound_examples() {
        let l28 = LieFamilySpec::with_q(LieFamily::Linear, 2, 8).unwrap();
        assert_eq!(k_star_lower_bound(&l28, Some(5)).unwrap(), 5);
        assert_eq!(k_star_lower_bound(&l28, None).unwrap(), 3);
        let l261 = LieFamilySpec::with_q(LieFamily::Linear, 2, 61).unwrap();
        assert_eq!(k_star_lower_bound(&l261, None).unwrap(), 16);
        assert_eq!(k_star_lower_bound(&l261, Some(40)).unwrap(), 40);
    }

    #[test]
    fn class_count_formulas() {
        assert_eq!(psl2_class_count(8).unwrap(), 9);
        assert_eq!(psl2_class_count(7).unwrap(), 6);
        assert_eq!(psl2_class_count(9).unwrap(), 7);
        assert!(psl2_class_count(3).is_err());
        assert!(psl2_class_count(12).is_err());
        assert_eq!(pgl2_class_count(5).unwrap(), 7);
        assert_eq!(pgl2_class_count(9).unwrap(), 11);
        assert!(pgl2_class_count(8).is_err());
    }

    #[test]
    fn c2_exceptions_recognized_by_value() {
        let entries = vec![
            C2Entry::new("PSL2(4)", 120f64.log2(), 4),
            C2Entry::new("PSL3(4)", 241920f64.log2(), 6),
            C2Entry::new("PSL2(8)", 1512f64.log2(), 5),
            C2Entry::new("M22", 887040f64.log2(), 11),
        ];
        let r = verify_c2(&entries);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.get("exceptions").unwrap().to_string(), "PSL2(4),PSL3(4)");
        // Without the exception A5 would fail the generic bound.
        let bad = verify_c2(&[C2Entry::new("fake", 120f64.log2() + 1e-3, 4)]);
        assert!(bad.failed());
    }

    #[test]
    fn log2_big_matches_f64() {
        let x = BigUint::from(3u32).pow(2000);
        assert!((log2_big(&x) - 2000.0 * 3f64.log2()).abs() < 1e-6);
        assert_eq!(log2_big(&BigUint::from(1024u32)), 10.0);
    }
}
