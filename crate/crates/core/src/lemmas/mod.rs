//! Exact and swept checks of the arithmetic inequalities used in the bounds.

mod partitions;
mod sums;
mod weighted;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::report::VerificationReport;

pub use partitions::{
    alternating_class_count, alternating_gamma, distinct_odd_partitions, even_partition_count, partition_count,
    partition_counts, verify_partition_bound, MAX_PARTITION_N,
};
pub use sums::{sum_product_parts, verify_sum_product, verify_sum_product_sweep, SumProductCheck};
pub use weighted::{check_weighted_inequality, verify_weighted_cases, WeightedCase, WeightedOutcome, WEIGHTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("out of range: {0}")]
    OutOfRange(String),
}

/// Named inclusive integer ranges for a sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepRange {
    vars: Vec<(String, u64, u64)>,
}

impl SweepRange {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn var(mut self, name: &str, lo: u64, hi: u64) -> Result<Self, LemmaError> {
        if lo > hi {
            return Err(LemmaError::OutOfRange(format!("{name}: {lo} > {hi}")));
        }
        self.vars.retain(|(n, _, _)| n != name);
        self.vars.push((name.to_string(), lo, hi));
        Ok(self)
    }

    pub fn get(&self, name: &str) -> Option<(u64, u64)> {
        self.vars
            .iter()
            .find(|(n, _, _)| n == name)
            .map(|&(_, lo, hi)| (lo, hi))
    }

    /// Default sweep for the prime-power inequalities: p ∈ {2,3,5,7},
    /// f <= 20, 2 <= a, b <= 8.
    pub fn prime_power_default() -> Self {
        Self::new()
            .var("p", 2, 7)
            .and_then(|s| s.var("f", 1, 20))
            .and_then(|s| s.var("a", 2, 8))
            .and_then(|s| s.var("b", 2, 8))
            .expect("valid default")
    }

    fn describe(&self) -> String {
        self.vars
            .iter()
            .map(|(n, lo, hi)| format!("{n} in [{lo}, {hi}]"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Exact `C(n, k)` by the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> Result<BigUint, LemmaError> {
    if k > n {
        return Err(LemmaError::OutOfRange(format!("C({n}, {k})")));
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    Ok(acc)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// For every q = p^f and 2 <= a <= b in range: (qᵃ−1)(qᵇ−1) <= q^{a+b},
/// (qᵃ−1)(qᵇ+1) <= q^{a+b}, q >= 2f, q >= 16 ⇒ q >= 3f, and for f != 3,
/// f² <= 2^f (i.e. 2 log₂ f <= f). All comparisons are exact.
pub fn verify_prime_power_inequalities(ranges: &SweepRange) -> VerificationReport {
    let mut r = VerificationReport::new("lemma.prime_power", ranges.describe());
    let (Some((p_lo, p_hi)), Some((f_lo, f_hi)), Some((a_lo, a_hi)), Some((b_lo, b_hi))) =
        (ranges.get("p"), ranges.get("f"), ranges.get("a"), ranges.get("b"))
    else {
        r.require(false, "ranges p, f, a, b are required");
        return r;
    };
    let one = BigUint::one();
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for p in (p_lo..=p_hi).filter(|&p| is_prime(p)) {
        for f in f_lo.max(1)..=f_hi {
            let q = BigUint::from(p).pow(f as u32);
            let fb = BigUint::from(f);
            checked += 1;
            if q < BigUint::from(2u32) * &fb {
                failures.push(format!("q >= 2f fails at {p}^{f}"));
            }
            if q >= BigUint::from(16u32) && q < BigUint::from(3u32) * &fb {
                failures.push(format!("q >= 3f fails at {p}^{f}"));
            }
            for a in a_lo.max(2)..=a_hi {
                for b in b_lo.max(a)..=b_hi {
                    let qa = q.pow(a as u32);
                    let qb = q.pow(b as u32);
                    let qab = &qa * &qb;
                    checked += 2;
                    if (&qa - &one) * (&qb - &one) > qab {
                        failures.push(format!("(q^a-1)(q^b-1) fails at q={q}, a={a}, b={b}"));
                    }
                    if (&qa - &one) * (&qb + &one) > qab {
                        failures.push(format!("(q^a-1)(q^b+1) fails at q={q}, a={a}, b={b}"));
                    }
                }
            }
        }
    }
    for f in f_lo.max(1)..=f_hi {
        checked += 1;
        let holds = BigUint::from(f * f) <= BigUint::from(2u32).pow(f as u32);
        if f != 3 && !holds {
            failures.push(format!("2 log f <= f fails at f = {f}"));
        }
    }
    // f = 3 is a genuine exception: 9 > 8.
    let f3_excluded = 9 > 8;
    r.int("checked", checked)
        .int("failures", failures.len() as u64)
        .real("2log2(3)", 2.0 * 3f64.log2())
        .flag("f3_exclusion_needed", f3_excluded);
    for f in failures.iter().take(5) {
        r.note(f.clone());
    }
    r.require(failures.is_empty(), "prime-power inequality fails");
    r
}

/// `(log k)² log log k <= k²/2` for `4 <= k <= k_max`.
pub fn verify_klog_bound(k_max: u64) -> VerificationReport {
    let mut r = VerificationReport::new("lemma.klog", format!("4 <= k <= {k_max}"));
    if k_max < 4 {
        r.require(false, "k_max must be at least 4");
        return r;
    }
    let mut fails = 0u64;
    let mut min_ratio = f64::INFINITY;
    for k in 4..=k_max {
        let kf = k as f64;
        let lhs = crate::bounds::gamma_denominator(kf);
        let rhs = kf * kf / 2.0;
        if lhs > rhs {
            fails += 1;
        }
        min_ratio = min_ratio.min(rhs / lhs);
    }
    r.int("failures", fails)
        .real("min_rhs_over_lhs", min_ratio)
        .text("range", format!("verified on [4, {k_max}] only"));
    r.margin(min_ratio - 1.0);
    r.require(fails == 0, "(log k)^2 log log k <= k^2/2 fails");
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3).unwrap(), BigUint::from(10u32));
        assert_eq!(binomial(9, 0).unwrap(), BigUint::from(1u32));
        // 225·224·223·222 / 24
        assert_eq!(binomial(225, 4).unwrap(), BigUint::from(103962600u64));
        assert!(binomial(3, 4).is_err());
        // Pascal's rule as an oracle.
        for n in 1..40u64 {
            for k in 1..n {
                assert_eq!(
                    binomial(n, k).unwrap(),
                    binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn prime_power_default_sweep() {
        let r = verify_prime_power_inequalities(&SweepRange::prime_power_default());
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn f3_is_a_real_exception() {
        assert!(2.0 * 3f64.log2() > 3.0);
        let r = verify_prime_power_inequalities(&SweepRange::prime_power_default());
        assert_eq!(r.get("f3_exclusion_needed").unwrap().as_bool(), Some(true));
    }

    #[test]
    fn klog_examples() {
        // k = 4: 4 · 1 = 4 <= 8; k = 32: 25 log₂5 ≈ 58.05 <= 512.
        assert_eq!(crate::bounds::gamma_denominator(4.0), 4.0);
        assert!((crate::bounds::gamma_denominator(32.0) - 58.048).abs() < 1e-3);
        assert!(verify_klog_bound(100_000).passed());
        assert!(verify_klog_bound(3).failed());
    }

    #[test]
    fn sweep_range_rejects_inverted() {
        assert!(SweepRange::new().var("k", 5, 4).is_err());
    }
}
