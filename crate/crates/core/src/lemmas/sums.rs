use rayon::prelude::*;

use super::LemmaError;
use crate::report::VerificationReport;

/// One part of the sum/product lemma, with both sides scaled to integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumProductCheck {
    pub part: &'static str,
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
}

/// Checks the applicable parts for `xs` (each at least 4):
/// `r >= 3`: 2.5 Σx <= Πx; `r = 2`: 2.5x₁ + 1.17x₂ <= x₁x₂, and when both are
/// at least 5, 2.5x₁ + 2.5x₂ <= x₁x₂. Comparisons are exact after scaling.
pub fn sum_product_parts(r: usize, xs: &[u64]) -> Result<Vec<SumProductCheck>, LemmaError> {
    if xs.len() != r || r < 2 {
        return Err(LemmaError::OutOfRange(format!(
            "need r >= 2 values, got r = {r} with {} values",
            xs.len()
        )));
    }
    if let Some(x) = xs.iter().find(|&&x| x < 4) {
        return Err(LemmaError::OutOfRange(format!("value {x} is below 4")));
    }
    let sum: u128 = xs.iter().map(|&x| x as u128).sum();
    let prod: u128 = xs
        .iter()
        .try_fold(1u128, |acc, &x| acc.checked_mul(x as u128))
        .ok_or_else(|| LemmaError::OutOfRange("product overflows".into()))?;
    let mk = |part, lhs: u128, rhs: u128| SumProductCheck {
        part,
        lhs,
        rhs,
        holds: lhs <= rhs,
    };
    if r >= 3 {
        return Ok(vec![mk("i", 5 * sum, 2 * prod)]);
    }
    let (x1, x2) = (xs[0] as u128, xs[1] as u128);
    let mut out = vec![mk("ii", 250 * x1 + 117 * x2, 100 * prod)];
    if x1 >= 5 && x2 >= 5 {
        out.push(mk("iii", 5 * sum, 2 * prod));
    }
    Ok(out)
}

pub fn verify_sum_product(r: usize, xs: &[u64]) -> Result<bool, LemmaError> {
    Ok(sum_product_parts(r, xs)?.iter().all(|c| c.holds))
}

/// Visits every nondecreasing tuple of length `r` over `lo..=hi`.
fn for_each_multiset(r: usize, lo: u64, hi: u64, mut f: impl FnMut(&[u64])) {
    let mut xs = vec![lo; r];
    loop {
        f(&xs);
        let mut i = r;
        while i > 0 && xs[i - 1] == hi {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        xs[i - 1] += 1;
        let v = xs[i - 1];
        for x in &mut xs[i..] {
            *x = v;
        }
    }
}

/// Part (i) for `3 <= r <= r_max` over `4 <= xᵢ <= x_max` (as multisets, the
/// statement being symmetric), parts (ii)/(iii) over all ordered pairs, and
/// the induction step `2.5(S + x) <= P x` given `2.5 S <= P`, `x >= 4`,
/// `P >= 16`.
pub fn verify_sum_product_sweep(r_max: usize, x_max: u64) -> VerificationReport {
    let mut rep = VerificationReport::new("lemma.sum_product", format!("r <= {r_max}, 4 <= x <= {x_max}"));
    let mut checked = 0u64;
    let mut failures = 0u64;
    for r in 3..=r_max {
        // Split on the first coordinate for parallelism.
        let (c, f): (u64, u64) = (4..=x_max)
            .into_par_iter()
            .map(|first| {
                let mut c = 0;
                let mut f = 0;
                for_each_multiset(r - 1, first, x_max, |rest| {
                    let sum = first + rest.iter().sum::<u64>();
                    let prod = rest.iter().fold(first as u128, |a, &x| a * x as u128);
                    c += 1;
                    if 5 * sum as u128 > 2 * prod {
                        f += 1;
                    }
                });
                (c, f)
            })
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        checked += c;
        failures += f;
    }
    let mut boundary = Vec::new();
    let mut min_slack = i128::MAX;
    for x1 in 4..=x_max {
        for x2 in 4..=x_max {
            for c in sum_product_parts(2, &[x1, x2]).unwrap() {
                checked += 1;
                if !c.holds {
                    failures += 1;
                }
                if c.part == "iii" {
                    min_slack = min_slack.min(c.rhs as i128 - c.lhs as i128);
                    if c.lhs == c.rhs {
                        boundary.push(format!("({x1},{x2})"));
                    }
                }
            }
        }
    }
    // Induction step: worst case S = floor(2P/5).
    let mut step_ok = true;
    for p in 16..=4096u128 {
        let s = 2 * p / 5;
        for x in 4..=x_max as u128 {
            if 5 * (s + x) > 2 * p * x {
                step_ok = false;
            }
        }
    }
    rep.int("checked", checked)
        .int("failures", failures)
        .text("equality_cases_iii", boundary.join(" "))
        .flag("induction_step", step_ok)
        .text("range", format!("verified on r <= {r_max}, x <= {x_max} only"));
    rep.margin(min_slack as f64 / 2.0);
    rep.require(failures == 0, "sum/product inequality fails")
        .require(step_ok, "induction step fails")
        .require(
            boundary.first().map(String::as_str) == Some("(5,5)"),
            "expected equality at (5,5)",
        );
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = sum_product_parts(3, &[4, 4, 4]).unwrap();
        assert_eq!((c[0].lhs, c[0].rhs), (60, 128)); // 30 <= 64, doubled
        let c = sum_product_parts(2, &[4, 4]).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].lhs, c[0].rhs), (1468, 1600)); // 14.68 <= 16
        let c = sum_product_parts(2, &[5, 5]).unwrap();
        assert_eq!((c[1].lhs, c[1].rhs), (50, 50)); // 25 <= 25
        assert!(verify_sum_product(2, &[5, 5]).unwrap());
        assert!(verify_sum_product(2, &[3, 5]).is_err());
        assert!(verify_sum_product(3, &[5, 5]).is_err());
    }

    #[test]
    fn multiset_enumeration_counts() {
        // C(hi - lo + r, r) nondecreasing tuples.
        let mut n = 0;
        for_each_multiset(3, 4, 8, |_| n += 1);
        assert_eq!(n, 35);
    }

    #[test]
    fn small_sweep() {
        let r = verify_sum_product_sweep(4, 20);
        assert!(r.passed(), "{r:?}");
    }
}
