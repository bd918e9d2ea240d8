use num_bigint::BigUint;
use rayon::prelude::*;

use super::{binomial, LemmaError};
use crate::bounds::{gamma_denominator, log2_big, C2};
use crate::report::VerificationReport;

/// The three weights used in the per-factor inequality.
pub const WEIGHTS: [f64; 3] = [1.0, 1.17, 2.5];

/// One instance `(n, k, w)` of
/// `n log n + c₂ n (log k)² log log k <= w · log 3 · C(n+k-1, k-1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightedCase {
    pub n: u64,
    pub k: u64,
    pub w: f64,
}

impl WeightedCase {
    /// The weight assigned by the case table: 2.5 for `n = 1, k < 222`,
    /// 1.17 for `n = 2, k < 9`, and 1 otherwise.
    pub fn assigned(n: u64, k: u64) -> Result<Self, LemmaError> {
        Self::check_domain(n, k)?;
        let w = match (n, k) {
            (1, k) if k < 222 => 2.5,
            (2, k) if k < 9 => 1.17,
            _ => 1.0,
        };
        Ok(Self { n, k, w })
    }

    /// An explicit weight, e.g. for probing where a case stops holding.
    pub fn with_weight(n: u64, k: u64, w: f64) -> Result<Self, LemmaError> {
        Self::check_domain(n, k)?;
        Ok(Self { n, k, w })
    }

    fn check_domain(n: u64, k: u64) -> Result<(), LemmaError> {
        if n < 1 || k < 4 {
            return Err(LemmaError::OutOfRange(format!(
                "need n >= 1 and k >= 4, got n = {n}, k = {k}"
            )));
        }
        Ok(())
    }

    pub fn matches_case_table(&self) -> bool {
        Self::assigned(self.n, self.k).map(|c| c.w == self.w).unwrap_or(false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightedOutcome {
    pub holds: bool,
    pub lhs: f64,
    /// log₂ of the right-hand side (it overflows doubles for large n, k).
    pub log2_rhs: f64,
    /// `log₂ rhs − log₂ lhs`; non-negative iff the inequality holds.
    pub log_margin: f64,
}

fn lhs(n: u64, k: u64) -> f64 {
    let n = n as f64;
    n * n.log2() + C2 * n * gamma_denominator(k as f64)
}

fn outcome(case: &WeightedCase, binom: &BigUint) -> WeightedOutcome {
    let l = lhs(case.n, case.k);
    let log2_rhs = case.w.log2() + 3f64.log2().log2() + log2_big(binom);
    let log_margin = log2_rhs - l.log2();
    WeightedOutcome {
        holds: log_margin >= 0.0,
        lhs: l,
        log2_rhs,
        log_margin,
    }
}

/// Evaluates one instance; the binomial is exact before conversion.
pub fn check_weighted_inequality(case: &WeightedCase) -> WeightedOutcome {
    let b = binomial(case.n + case.k - 1, case.k - 1).expect("in range");
    outcome(case, &b)
}

/// Sweeps `1 <= n <= n_max`, `4 <= k <= k_max` with the assigned weights,
/// and records the sharp threshold for `n = 1, w = 1` and `n = 2, w = 1`.
pub fn verify_weighted_cases(n_max: u64, k_max: u64) -> VerificationReport {
    let mut r = VerificationReport::new("lemma.weighted", format!("n <= {n_max}, 4 <= k <= {k_max}"));
    if n_max < 2 || k_max < 222 {
        r.require(false, "sweep must reach n = 2 and k = 222");
        return r;
    }
    // Per n: (failures with assigned w, minimum log margin).
    let per_n: Vec<(u64, Vec<u64>, f64)> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            // C(n+k-1, k-1) = C(n+k-1, n), updated as k grows.
            let mut b = binomial(n + 3, n).unwrap();
            let mut fails = Vec::new();
            let mut min_margin = f64::INFINITY;
            for k in 4..=k_max {
                if k > 4 {
                    b = b * BigUint::from(n + k - 1) / BigUint::from(k - 1);
                }
                let case = WeightedCase::assigned(n, k).unwrap();
                let o = outcome(&case, &b);
                if !o.holds {
                    fails.push(k);
                }
                min_margin = min_margin.min(o.log_margin);
            }
            (n, fails, min_margin)
        })
        .collect();
    let mut total_fail = 0;
    for (n, fails, m) in &per_n {
        total_fail += fails.len();
        r.margin(*m);
        if !fails.is_empty() {
            r.note(format!("n = {n} fails at k = {:?}", &fails[..fails.len().min(5)]));
        }
    }
    r.int("cases", n_max * (k_max - 3)).int("failures", total_fail as u64);
    r.require(total_fail == 0, "some assigned-weight case fails");

    // Thresholds with w = 1.
    let first_pass = |n: u64| -> Option<u64> {
        let mut last_fail = None;
        for k in 4..=k_max.min(2048) {
            let o = check_weighted_inequality(&WeightedCase::with_weight(n, k, 1.0).unwrap());
            if !o.holds {
                last_fail = Some(k);
            }
        }
        last_fail.map(|k| k + 1)
    };
    let t1 = first_pass(1);
    let t2 = first_pass(2);
    r.int("threshold_n1_w1", t1.unwrap_or(4))
        .int("threshold_n2_w1", t2.unwrap_or(4));
    r.require(t1 == Some(222), "n = 1, w = 1 threshold is not 222")
        .require(t2 == Some(9), "n = 2, w = 1 threshold is not 9");
    // n >= 3 with w = 1 at every k in range.
    let n3_ok = per_n.iter().filter(|(n, _, _)| *n >= 3).all(|(_, f, _)| f.is_empty());
    r.flag("n_ge_3_w1", n3_ok);
    r.text("range", format!("verified on n <= {n_max}, k <= {k_max} only"));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn holds(n: u64, k: u64, w: f64) -> bool {
        check_weighted_inequality(&WeightedCase::with_weight(n, k, w).unwrap()).holds
    }

    /// Direct double-precision evaluation of both sides.
    fn oracle(n: u64, k: u64, w: f64) -> bool {
        let mut binom = 1f64;
        for i in 0..n {
            binom = binom * (k + i) as f64 / (i + 1) as f64;
        }
        let nf = n as f64;
        let kl = (k as f64).log2();
        nf * nf.log2() + 1.954 * nf * kl * kl * kl.log2() <= w * 3f64.log2() * binom
    }

    #[test]
    fn sharp_threshold_at_222() {
        assert!(holds(1, 222, 1.0));
        assert!(!holds(1, 221, 1.0));
        assert!(holds(3, 4, 1.0));
        assert!(holds(2, 4, 1.17));
        assert!(holds(1, 4, 2.5));
    }

    #[test]
    fn agrees_with_float_oracle() {
        for n in 1..=6 {
            for k in 4..=400 {
                for w in WEIGHTS {
                    assert_eq!(holds(n, k, w), oracle(n, k, w), "n={n} k={k} w={w}");
                }
            }
        }
    }

    #[test]
    fn case_table() {
        assert_eq!(WeightedCase::assigned(1, 100).unwrap().w, 2.5);
        assert_eq!(WeightedCase::assigned(1, 222).unwrap().w, 1.0);
        assert_eq!(WeightedCase::assigned(2, 8).unwrap().w, 1.17);
        assert_eq!(WeightedCase::assigned(2, 9).unwrap().w, 1.0);
        assert!(!WeightedCase::with_weight(1, 221, 1.0).unwrap().matches_case_table());
        assert!(WeightedCase::assigned(0, 5).is_err());
        assert!(WeightedCase::assigned(1, 3).is_err());
    }

    #[test]
    fn small_sweep() {
        let r = verify_weighted_cases(20, 600);
        assert!(r.passed(), "{r:?}");
    }
}
