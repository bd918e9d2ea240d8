use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::LemmaError;
use crate::bounds::{gamma_denominator, log2_big, C_GENERIC};
use crate::report::VerificationReport;

pub const MAX_PARTITION_N: usize = 100_000;

/// `p(0), ..., p(n_max)` by Euler's pentagonal-number recurrence.
pub fn partition_counts(n_max: usize) -> Result<Vec<BigUint>, LemmaError> {
    if n_max > MAX_PARTITION_N {
        return Err(LemmaError::OutOfRange(format!(
            "partition index {n_max} exceeds {MAX_PARTITION_N}"
        )));
    }
    let mut p: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    p.push(BigUint::one());
    for n in 1..=n_max {
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let acc = if k % 2 == 1 { &mut plus } else { &mut minus };
            *acc += &p[n - g1];
            if g2 <= n {
                *acc += &p[n - g2];
            }
        }
        p.push(plus - minus);
    }
    Ok(p)
}

pub fn partition_count(n: usize) -> Result<BigUint, LemmaError> {
    Ok(partition_counts(n)?.pop().unwrap())
}

/// Number of partitions of `n` into distinct odd parts: the cycle types whose
/// S_n-class splits in A_n.
pub fn distinct_odd_partitions(n: usize) -> BigUint {
    // Subset-sum over odd parts, each used at most once.
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for part in (1..=n).step_by(2) {
        for s in (part..=n).rev() {
            let add = ways[s - part].clone();
            ways[s] += add;
        }
    }
    ways.swap_remove(n)
}

/// Number of S_n-classes contained in A_n (partitions with an even number of
/// even parts). For n != 6 this is k*(A_n).
pub fn even_partition_count(n: usize) -> Result<BigUint, LemmaError> {
    let p = partition_count(n)?;
    Ok((p + distinct_odd_partitions(n)) >> 1u32)
}

/// k(A_n): classes of S_n inside A_n, with the split classes counted twice.
pub fn alternating_class_count(n: usize) -> Result<BigUint, LemmaError> {
    if n <= 1 {
        return Ok(BigUint::one());
    }
    Ok(even_partition_count(n)? + distinct_odd_partitions(n))
}

/// The bound `p(n)/4 >= e^{2√n}/56` for `n_min <= n <= n_max`, its
/// consequence `k >= p(22)/4 >= 250` for the alternating tail, and the
/// chain bounding γ(A_n) below the generic constant.
pub fn verify_partition_bound(n_min: usize, n_max: usize) -> VerificationReport {
    let mut r = VerificationReport::new("lemma.partition_bound", format!("{n_min} <= n <= {n_max}"));
    if n_min < 22 || n_min > n_max {
        r.require(false, "range must satisfy 22 <= n_min <= n_max");
        return r;
    }
    let p = match partition_counts(n_max) {
        Ok(p) => p,
        Err(e) => {
            r.require(false, e.to_string());
            return r;
        }
    };
    let log2e = std::f64::consts::LOG2_E;
    let mut failures = Vec::new();
    let mut log2_fact = (2..n_min).map(|i| (i as f64).log2()).sum::<f64>();
    for (n, pn) in p.iter().enumerate().take(n_max + 1).skip(n_min) {
        log2_fact += (n as f64).log2();
        // Compare logarithms: log₂(p(n)/4) against 2√n log₂e − log₂56.
        let lhs = log2_big(pn) - 2.0;
        let s = (n as f64).sqrt();
        let rhs = 2.0 * s * log2e - 56f64.log2();
        r.margin(lhs - rhs);
        // k >= p(n)/4 >= p(22)/4, and log k >= √n.
        let quarter = pn >> 2u32;
        let chain_log_k = rhs >= s;
        // γ <= log n! / (rhs² · log √n) < 2n / rhs² < c.
        let g1 = log2_fact / (rhs * rhs * s.log2());
        let g2 = 2.0 * n as f64 / (rhs * rhs);
        let ok = lhs >= rhs && quarter >= BigUint::from(250u32) && chain_log_k && g1 < g2 && g2 < C_GENERIC;
        if !ok {
            failures.push(n);
        }
    }
    let p22 = &p[22];
    let k22 = (p22 >> 2u32).to_u64().unwrap();
    r.int("p(22)", p22.clone())
        .int("floor(p(22)/4)", k22)
        .real("e^(2sqrt(22))/56", (2.0 * 22f64.sqrt()).exp() / 56.0)
        .int("failures", failures.len() as u64)
        .text("range", format!("verified on [{n_min}, {n_max}] only"));
    r.require(
        failures.is_empty(),
        format!("fails at n = {:?}", &failures[..failures.len().min(5)]),
    )
    .require(k22 == 250, "p(22)/4 does not give k >= 250");
    r
}

/// γ of A_n at the stated k, used to compare the two candidate bounds
/// `k(A_n)/2` and `p(n)/4` for the tail rows of the alternating table.
pub fn alternating_gamma(n: usize, k: u64) -> f64 {
    let log2_sn: f64 = (2..=n).map(|i| (i as f64).log2()).sum();
    log2_sn / gamma_denominator(k as f64)
}
