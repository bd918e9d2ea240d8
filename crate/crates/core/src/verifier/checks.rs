use num_bigint::BigUint;
use num_traits::{One, Pow};

use super::{SocleShape, VerifyError};
use crate::autorbits::{k_star, orbit_count_on_subset, AmbientPair};
use crate::bounds::{gamma_denominator, C2};
use crate::lemmas::binomial;
use crate::permcore::{is_normal_subgroup, FiniteGroup, GroupError, Permutation};
use crate::report::VerificationReport;

fn pow3(k: u64) -> BigUint {
    BigUint::from(3u32).pow(k)
}

fn log3(order: u128) -> f64 {
    (order as f64).ln() / 3f64.ln()
}

fn over_cap(id: &str, subject: &str, order: u128, cap: usize) -> Option<VerificationReport> {
    (order > cap as u128).then(|| {
        let mut r = VerificationReport::skipped(id, subject, format!("order {order} exceeds cap {cap}"));
        r.int("order", order);
        r
    })
}

/// log₃|G| < k(G), from a known order and class count. Both comparisons are
/// exact: |G| < 3^k, and the ceiling case 3^(k-1) < |G| <= 3^k.
pub fn bertram_report(subject: &str, order: u128, k: u64) -> VerificationReport {
    let mut r = VerificationReport::new("bertram", subject);
    let g = BigUint::from(order);
    let ceiling = k >= 1 && pow3(k - 1) < g && g <= pow3(k);
    let l3 = log3(order);
    r.int("order", order)
        .int("k", k)
        .real("log3_order", l3)
        .flag("ceiling_equality", ceiling)
        .require(g < pow3(k), format!("log3|G| = {l3:.6} >= k(G) = {k}"))
        .margin(k as f64 - l3);
    r
}

pub fn verify_bertram(subject: &str, g: &FiniteGroup, cap: usize) -> VerificationReport {
    if let Some(r) = over_cap("bertram", subject, g.order_exact(), cap) {
        return r;
    }
    match g.classes(cap) {
        Ok(c) => bertram_report(subject, g.order_exact(), c.k() as u64),
        Err(e) => VerificationReport::skipped("bertram", subject, e.to_string()),
    }
}

/// |G| <= 3^k(G), i.e. log|G| <= (log 3) k(G).
pub fn base3_report(subject: &str, order: u128, k: u64) -> VerificationReport {
    let mut r = VerificationReport::new("base3", subject);
    let lhs = (order as f64).log2();
    let rhs = 3f64.log2() * k as f64;
    r.int("order", order)
        .int("k", k)
        .real("log2_order", lhs)
        .real("log2(3)k", rhs)
        .require(BigUint::from(order) <= pow3(k), "log|G| > (log 3) k(G)")
        .margin(rhs - lhs);
    r
}

/// Records whether |A| <= 3^k*, the sufficient condition that settles every
/// G between T and A at once.
pub fn note_auto(r: &mut VerificationReport, ambient_order: u128, k_star: u64) {
    let holds = BigUint::from(ambient_order) <= pow3(k_star);
    r.int("k_star", k_star).flag("auto_holds", holds);
    if holds {
        r.note("log|A| <= (log 3) k* holds, so every G with T <= G <= A satisfies the bound");
    }
}

/// Checks log|G| <= (log 3) k(G) for T ⊴ G <= A. When `ambient_is_aut`, also
/// evaluates the sufficient condition log|A| <= (log 3) k*(T).
pub fn verify_base3_almost_simple(
    pair: &AmbientPair,
    g: &FiniteGroup,
    ambient_is_aut: bool,
    cap: usize,
) -> Result<VerificationReport, VerifyError> {
    if !g.generators().iter().all(|x| pair.ambient().contains(x)) {
        return Err(GroupError::NotASubgroup.into());
    }
    if !pair.socle().generators().iter().all(|x| g.contains(x)) {
        return Err(GroupError::NotASubgroup.into());
    }
    if !is_normal_subgroup(g, pair.socle().generators())? {
        return Err(GroupError::NotNormal.into());
    }
    let subject = format!("degree {} order {}", g.degree(), g.order_exact());
    if let Some(r) = over_cap("base3", &subject, g.order_exact(), cap) {
        return Ok(r);
    }
    let k = g.classes(cap)?.k() as u64;
    let mut r = base3_report(&subject, g.order_exact(), k);
    if ambient_is_aut {
        match k_star(pair, cap) {
            Ok(ks) => note_auto(&mut r, pair.ambient().order_exact(), ks as u64),
            Err(e) => {
                r.note(format!("k* not computed: {e}"));
            }
        }
    }
    Ok(r)
}

/// s·|G| <= 3^(k(G)/s), compared exactly as (s|G|)^s <= 3^k(G).
fn index_inequality(s: u64, order: u128, k: u64) -> bool {
    let lhs = BigUint::from(order) * s;
    Pow::pow(lhs, s as u32) <= pow3(k)
}

/// For T ⊴ Γ <= A with |A : Γ| = s, evaluates s|G| <= 3^(k(G)/s) for
/// G = T and G = Γ. If it holds for every such G, then |H| <= 3^k(H) for
/// all H with T ⊴ H <= A; only the evaluated instances are asserted. When
/// the inequality fails the reduction does not apply and the report is
/// skipped rather than failed.
pub fn verify_index_reduction(
    pair: &AmbientPair,
    gamma: &FiniteGroup,
    s: u64,
    cap: usize,
) -> Result<VerificationReport, VerifyError> {
    let a = pair.ambient();
    if !gamma.generators().iter().all(|x| a.contains(x)) {
        return Err(GroupError::NotASubgroup.into());
    }
    let found = a.order_exact() / gamma.order_exact();
    if s == 0 || found != s as u128 || !a.order_exact().is_multiple_of(gamma.order_exact()) {
        return Err(VerifyError::IndexMismatch { expected: s, found });
    }
    if !is_normal_subgroup(gamma, pair.socle().generators())? {
        return Err(GroupError::NotNormal.into());
    }
    let subject = format!(
        "T order {}, Γ order {}, s = {s}",
        pair.socle().order_exact(),
        gamma.order_exact()
    );
    let mut r = VerificationReport::new("index_reduction", subject);
    r.int("s", s);
    let mut all_hold = true;
    for (label, g) in [("T", pair.socle()), ("Gamma", gamma)] {
        if let Some(skip) = over_cap("index_reduction", label, g.order_exact(), cap) {
            return Ok(skip);
        }
        let k = g.classes(cap)?.k() as u64;
        let holds = index_inequality(s, g.order_exact(), k);
        let lhs = (s as f64).log2() + (g.order_exact() as f64).log2();
        let rhs = 3f64.log2() * k as f64 / s as f64;
        r.int(&format!("order_{label}"), g.order_exact())
            .int(&format!("k_{label}"), k)
            .real(&format!("log2_lhs_{label}"), lhs)
            .real(&format!("log2_rhs_{label}"), rhs)
            .flag(&format!("holds_{label}"), holds)
            .margin(rhs - lhs);
        all_hold &= holds;
    }
    if all_hold {
        r.note("s|G| <= 3^(k(G)/s) holds for the evaluated G; with every intermediate G this gives |H| <= 3^k(H) for all H with socle T");
    } else {
        r.verdict = crate::report::Verdict::Skipped;
        r.reason = Some("s|G| <= 3^(k(G)/s) fails for an evaluated G; the reduction does not apply".into());
    }
    Ok(r)
}

/// The socle inequalities for G with socle M₁ × … × M_r, Mᵢ = Tᵢ^nᵢ:
/// ∏ C(nᵢ+kᵢ−1, kᵢ−1) <= k(G); the G-classes inside each Mᵢ number more
/// than (kᵢ/nᵢ)^nᵢ; and log|G| < n log n + c₂ Σ nᵢ (log kᵢ)² log log kᵢ.
pub fn verify_socle_bounds(
    subject: &str,
    shape: &SocleShape,
    g: &FiniteGroup,
    socle_generators: &[Permutation],
    cap: usize,
) -> Result<VerificationReport, VerifyError> {
    if let Some(r) = over_cap("socle_bounds", subject, g.order_exact(), cap) {
        return Ok(r);
    }
    if !is_normal_subgroup(g, socle_generators)? {
        return Err(GroupError::NotNormal.into());
    }
    let k_g = g.classes(cap)?.k() as u64;
    let mut r = VerificationReport::new("socle_bounds", subject);
    r.text("shape", shape.to_string())
        .int("order", g.order_exact())
        .int("k", k_g);

    let mut product = BigUint::one();
    for f in shape.factors() {
        let b = binomial(f.n as u64 + f.k - 1, f.k - 1).expect("k >= 4");
        product *= b;
    }
    r.int("binomial_product", product.clone())
        .require(product <= BigUint::from(k_g), "product of binomials exceeds k(G)");

    for (i, f) in shape.factors().iter().enumerate() {
        let gens = match f.generators {
            Some((a, b)) if b < socle_generators.len() => socle_generators[a..=b].to_vec(),
            Some(_) => {
                return Err(VerifyError::Shape(format!("generator range out of bounds in {shape}")));
            }
            None => socle_generators.to_vec(),
        };
        if !is_normal_subgroup(g, &gens)? {
            return Err(GroupError::NotNormal.into());
        }
        let m = FiniteGroup::new(g.degree(), gens)?;
        let classes = orbit_count_on_subset(g, m.elements(cap)?, cap)? as u64;
        let n = f.n;
        let lhs = BigUint::from(classes) * BigUint::from(n).pow(n);
        let rhs = BigUint::from(f.k).pow(n);
        let bound = (f.k as f64 / n as f64).powi(n as i32);
        // n! < n^n needs n >= 2; for a single factor only >= is available
        // (G = Aut(T) has exactly k* classes inside T).
        let ok = if n >= 2 { lhs > rhs } else { lhs >= rhs };
        r.int(&format!("classes_in_M{}", i + 1), classes)
            .real(&format!("(k/n)^n[{}]", i + 1), bound)
            .require(ok, format!("G-classes in M{} below (k/n)^n", i + 1))
            .margin(classes as f64 - bound);
        if n == 1 && lhs == rhs {
            r.note(format!("M{}: classes equal (k/n)^n (single factor, non-strict)", i + 1));
        }
    }

    let n_total = shape.total_factors() as f64;
    let mut c2_sum = 0.0;
    let mut n_log_sum = 0.0;
    for f in shape.factors() {
        let n = f.n as f64;
        c2_sum += n * gamma_denominator(f.k as f64);
        n_log_sum += n * n.log2();
    }
    let lhs = (g.order_exact() as f64).log2();
    let rhs = n_total * n_total.log2() + C2 * c2_sum;
    r.real("log2_order", lhs)
        .real("log_bound", rhs)
        .real("log_bound_by_parts", n_log_sum + C2 * c2_sum)
        .require(lhs < rhs, "log|G| >= n log n + c2 sum")
        .margin(rhs - lhs);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{alternating_generators, psl3_in_aut, symmetric_generators, ProjectivePlane};
    use crate::permcore::DEFAULT_CAP;

    fn s5_pair() -> AmbientPair {
        let s5 = FiniteGroup::new(5, symmetric_generators(5)).unwrap();
        AmbientPair::new(s5, alternating_generators(5)).unwrap()
    }

    #[test]
    fn bertram_examples() {
        let r = bertram_report("PSL3(4)", 20160, 10);
        assert!(r.passed());
        assert_eq!(r.get("ceiling_equality").unwrap().as_bool(), Some(true));
        assert!((r.get("log3_order").unwrap().as_real().unwrap() - 9.021_796).abs() < 1e-6);
        let m22 = bertram_report("M22", 443520, 12);
        assert_eq!(m22.get("ceiling_equality").unwrap().as_bool(), Some(true));
        let a5 = bertram_report("A5", 60, 5);
        assert_eq!(a5.get("ceiling_equality").unwrap().as_bool(), Some(false));
        // 81 = 3^4: equality of log₃|G| and k is a failure.
        assert!(bertram_report("x", 81, 4).failed());
        assert!(bertram_report("x", 80, 4).passed());
    }

    #[test]
    fn bertram_skips_over_cap() {
        let s5 = FiniteGroup::new(5, symmetric_generators(5)).unwrap();
        assert_eq!(verify_bertram("S5", &s5, 100).verdict, crate::report::Verdict::Skipped);
        let r = verify_bertram("S5", &s5, DEFAULT_CAP);
        assert_eq!(r.get("k").unwrap().to_string(), "7");
    }

    #[test]
    fn base3_s5() {
        let pair = s5_pair();
        let r = verify_base3_almost_simple(&pair, pair.ambient(), true, DEFAULT_CAP).unwrap();
        assert!(r.passed());
        assert!((r.get("log2(3)k").unwrap().as_real().unwrap() - 11.0947).abs() < 1e-3);
        // 120 > 3^4.
        assert_eq!(r.get("auto_holds").unwrap().as_bool(), Some(false));
        let bad = FiniteGroup::new(5, vec![Permutation::from_cycles(5, &[&[0, 1]]).unwrap()]).unwrap();
        assert!(verify_base3_almost_simple(&pair, &bad, true, DEFAULT_CAP).is_err());
    }

    #[test]
    fn index_reduction_rejects_wrong_s() {
        let pair = s5_pair();
        let a5 = FiniteGroup::new(5, alternating_generators(5)).unwrap();
        assert!(matches!(
            verify_index_reduction(&pair, &a5, 3, DEFAULT_CAP),
            Err(VerifyError::IndexMismatch { expected: 3, found: 2 })
        ));
        // s = 1: the inequality is |G| <= 3^k(G).
        let r = verify_index_reduction(&pair, pair.ambient(), 1, DEFAULT_CAP).unwrap();
        assert_eq!(r.get("holds_T").unwrap().as_bool(), Some(60 <= 243));
        assert!(r.passed());
    }

    #[test]
    fn index_reduction_psl34() {
        let c = psl3_in_aut(4).unwrap();
        let a = FiniteGroup::new(c.degree, c.ambient).unwrap();
        let pair = AmbientPair::new(a, c.socle).unwrap();
        let gamma = FiniteGroup::new(42, ProjectivePlane::new(4).unwrap().pgaml3_generators()).unwrap();
        let r = verify_index_reduction(&pair, &gamma, 2, DEFAULT_CAP).unwrap();
        assert_eq!(r.get("k_T").unwrap().to_string(), "10");
        // 2 · 20160 > 3^5.
        assert_eq!(r.get("holds_T").unwrap().as_bool(), Some(false));
        assert_eq!(r.verdict, crate::report::Verdict::Skipped);
    }

    #[test]
    fn socle_bounds_s5() {
        let pair = s5_pair();
        let shape = SocleShape::single(1, 4).unwrap();
        let r = verify_socle_bounds("S5", &shape, pair.ambient(), pair.socle().generators(), DEFAULT_CAP).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.get("binomial_product").unwrap().to_string(), "4");
        // S5-classes inside A5: cycle types 1, 3, 2², 5.
        assert_eq!(r.get("classes_in_M1").unwrap().to_string(), "4");
    }
}
