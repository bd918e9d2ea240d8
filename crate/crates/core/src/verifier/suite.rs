use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::checks::{
    base3_report, bertram_report, note_auto, verify_bertram, verify_index_reduction, verify_socle_bounds,
};
use super::{Suite, VerifyError};
use crate::autorbits::{element_order_spectrum, k_star, AmbientPair};
use crate::bounds::{
    c2_entry_report, gamma, k_star_lower_bound, pgl2_class_count, psl2_class_count, verify_c2, C2Entry, LieFamily,
};
use crate::construct::{
    direct_product, psl2_in_pgl2, psl3_in_aut, symmetric_over_alternating, wreath_with_s2, ProjectiveLine,
    ProjectivePlane,
};
use crate::corpus::tables::{reference_row, reference_rows, SPORADIC_ORDERS};
use crate::corpus::{realize, Catalog, CatalogEntry, EntryKind, Family, KStar};
use crate::lemmas::{
    alternating_class_count, alternating_gamma, check_weighted_inequality, even_partition_count, partition_count,
    verify_klog_bound, verify_partition_bound, verify_prime_power_inequalities, verify_sum_product_sweep,
    verify_weighted_cases, SweepRange, WeightedCase,
};
use crate::permcore::{FiniteGroup, Permutation, DEFAULT_CAP};
use crate::report::{Verdict, VerificationReport};

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub cap: usize,
    pub catalog: Catalog,
    pub klog_k_max: u64,
    pub weighted_n_max: u64,
    pub weighted_k_max: u64,
    pub sum_r_max: usize,
    pub sum_x_max: u64,
    pub partition_n_max: usize,
}

impl SuiteOptions {
    pub fn new(catalog: Catalog) -> Self {
        Self {
            cap: DEFAULT_CAP,
            catalog,
            klog_k_max: 1_000_000,
            weighted_n_max: 200,
            weighted_k_max: 5000,
            sum_r_max: 6,
            sum_x_max: 64,
            partition_n_max: 2000,
        }
    }
}

/// Brute-force quantities for one catalog entry; `None` where the cap was
/// exceeded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryData {
    pub order_t: u128,
    pub order_a: u128,
    pub k_t: Option<u64>,
    pub k_a: Option<u64>,
    pub k_star: Option<u64>,
    pub e_t: Option<u64>,
}

/// Realizes an entry and computes k(T), k(A), the A-orbits on T and e(T).
pub fn compute_entry(entry: &CatalogEntry, cap: usize) -> Result<EntryData, VerifyError> {
    let pair = realize(entry, cap)?;
    let fits = |g: &FiniteGroup| g.order_exact() <= cap as u128;
    let t = pair.socle();
    let a = pair.ambient();
    let k_t = if fits(t) {
        Some(t.classes(cap)?.k() as u64)
    } else {
        None
    };
    let (k_star, e_t) = if entry.kind != EntryKind::Product && fits(a) {
        (
            Some(k_star(&pair, cap)? as u64),
            Some(element_order_spectrum(t, cap)?.len() as u64),
        )
    } else {
        (None, None)
    };
    let k_a = if fits(a) {
        Some(a.classes(cap)?.k() as u64)
    } else {
        None
    };
    Ok(EntryData {
        order_t: t.order_exact(),
        order_a: a.order_exact(),
        k_t,
        k_a,
        k_star,
        e_t,
    })
}

type Computed<'a> = Vec<(&'a CatalogEntry, Result<EntryData, String>)>;

fn compute_all(catalog: &Catalog, cap: usize) -> Computed<'_> {
    let file_entries: Vec<&CatalogEntry> = catalog.entries().iter().filter(|e| !e.is_formula_only()).collect();
    file_entries
        .into_par_iter()
        .map(|e| (e, compute_entry(e, cap).map_err(|err| err.to_string())))
        .collect()
}

fn lookup<'a>(computed: &'a Computed<'_>, name: &str) -> Option<&'a Result<EntryData, String>> {
    computed.iter().find(|(e, _)| e.name == name).map(|(_, d)| d)
}

/// Runs a suite over the catalog; reports come back in a fixed order.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<VerificationReport>, VerifyError> {
    let needs_entries = !matches!(suite, Suite::Lemmas | Suite::Socle);
    let computed = if needs_entries {
        compute_all(&opts.catalog, opts.cap)
    } else {
        Vec::new()
    };
    let mut out = Vec::new();
    let run = |s: Suite, out: &mut Vec<VerificationReport>| -> Result<(), VerifyError> {
        match s {
            Suite::Tables => out.extend(tables_suite(opts, &computed)),
            Suite::C2 => out.extend(c2_suite(opts, &computed)),
            Suite::Lemmas => out.extend(lemmas_suite(opts)),
            Suite::Bertram => out.extend(bertram_suite(&computed)),
            Suite::AlmostSimple => out.extend(almost_simple_suite(opts, &computed)?),
            Suite::Socle => out.extend(socle_suite(opts)?),
            Suite::All => unreachable!(),
        }
        Ok(())
    };
    if suite == Suite::All {
        for s in &Suite::ALL[..Suite::ALL.len() - 1] {
            run(*s, &mut out)?;
        }
    } else {
        run(suite, &mut out)?;
    }
    Ok(out)
}

fn failed_entry(id: &str, name: &str, err: &str) -> VerificationReport {
    let mut r = VerificationReport::new(id, name);
    r.require(false, format!("catalog entry rejected: {err}"));
    r
}

fn table_row_report(entry: &CatalogEntry, data: Option<&Result<EntryData, String>>) -> VerificationReport {
    let mut r = VerificationReport::new("tables.row", &entry.name);
    let computed = match data {
        Some(Err(e)) => return failed_entry("tables.row", &entry.name, e),
        Some(Ok(d)) => d.k_star.map(|k| (k, d)),
        None => None,
    };
    let (k, source) = match (computed, entry.k_star) {
        (Some((k, _)), _) => (KStar::Exact(k), "brute"),
        (None, Some(ks)) => (ks, "formula"),
        (None, None) => {
            return VerificationReport::skipped("tables.row", &entry.name, "no k* computed or declared");
        }
    };
    r.text("source", source).int("k_star", k.value());
    if let Some(ks) = entry.k_star {
        r.text("expected_k_star", ks.to_string());
        if source == "brute" {
            match ks {
                KStar::Exact(e) => r.require(e == k.value(), format!("k* = {}, expected {e}", k.value())),
                KStar::AtLeast(e) => r.require(k.value() >= e, format!("k* = {} below {e}", k.value())),
            };
        }
    }
    if let Some(row) = reference_row(&entry.name) {
        r.int("table_k_star", row.k_star);
        r.require(
            entry.k_star
                == Some(if row.at_least {
                    KStar::AtLeast(row.k_star)
                } else {
                    KStar::Exact(row.k_star)
                }),
            "declared k* differs from the reference row",
        )
        .require(
            entry.gamma_bound == Some(row.gamma_bound),
            "declared gamma bound differs from the reference row",
        );
    }

    let log2_aut = match computed {
        Some((_, d)) => (d.order_a as f64).log2(),
        None => entry.log2_ambient(),
    };
    match gamma(log2_aut, k.value()) {
        Ok(g) => {
            r.real("gamma", g.gamma);
            if let Some(bound) = entry.gamma_bound {
                r.real("gamma_bound", bound)
                    .real("gap", bound - g.gamma)
                    .require(g.gamma < bound, format!("gamma {:.6} not below {bound}", g.gamma))
                    .margin(bound - g.gamma);
            }
        }
        Err(e) => {
            r.require(false, e.to_string());
        }
    }

    match &entry.family {
        Family::Lie(spec) => {
            let e_t = computed.and_then(|(_, d)| d.e_t);
            if let Ok(lower) = k_star_lower_bound(spec, e_t) {
                r.int("k_star_lower_bound", lower)
                    .require(lower <= k.value(), format!("lower bound {lower} exceeds k*"));
            }
            if spec.family == LieFamily::Linear && spec.n == 2 {
                if let (Some(q), Some(k_t)) = (spec.q().to_u64(), computed.and_then(|(_, d)| d.k_t)) {
                    if let Ok(formula) = psl2_class_count(q) {
                        r.int("k_T", k_t)
                            .require(formula == k_t, format!("k(T) = {k_t}, formula gives {formula}"));
                    }
                }
            }
        }
        Family::Alternating(n) => {
            let n = *n as usize;
            if let (KStar::Exact(k), true) = (k, n != 6) {
                let even = even_partition_count(n).expect("small n");
                r.int("even_partitions", even.clone()).require(
                    even == BigUint::from(k),
                    "k*(A_n) differs from the even-partition count",
                );
            }
            if let Some(k_t) = computed.and_then(|(_, d)| d.k_t) {
                let formula = alternating_class_count(n).expect("small n");
                r.int("k_T", k_t).require(
                    formula == BigUint::from(k_t),
                    "k(A_n) differs from the partition formula",
                );
            }
        }
        Family::Sporadic(name) => {
            if let Some((_, order, out)) = SPORADIC_ORDERS.iter().find(|(n, _, _)| n == name) {
                r.require(
                    entry.socle_order.to_string() == *order && entry.out_index == *out,
                    "sporadic order or Out differs from the reference list",
                );
            }
        }
        Family::Product => {}
    }
    r
}

/// The tail rows use a lower bound for k*: compare floor(k(A_n)/2) and
/// floor(p(n)/4) against the tabulated values.
fn alternating_tail_report() -> VerificationReport {
    let mut r = VerificationReport::new("tables.alternating_tail", "A20, A21, A22");
    let mut half_matches = true;
    let mut quarter_matches = true;
    for row in reference_rows().filter(|r| r.at_least) {
        let n: usize = row.name[1..].parse().expect("A<n>");
        let k_an = alternating_class_count(n).expect("small n");
        let half = (&k_an >> 1u32).to_u64().unwrap();
        let p = partition_count(n).expect("small n");
        let quarter = p.to_f64().unwrap() / 4.0;
        half_matches &= half == row.k_star;
        quarter_matches &= quarter.floor() as u64 == row.k_star;
        r.int(&format!("k(A{n})"), k_an)
            .int(&format!("k(A{n})/2"), half)
            .real(&format!("p({n})/4"), quarter)
            .int(&format!("table[A{n}]"), row.k_star);
        // γ with |Aut(A_n)| = n!.
        let g = alternating_gamma(n, half);
        r.real(&format!("gamma[A{n}]"), g);
        r.require(
            g < row.gamma_bound,
            format!("A{n}: gamma {g:.6} not below {}", row.gamma_bound),
        )
        .margin(row.gamma_bound - g);
    }
    r.flag("k(A_n)/2_reproduces", half_matches)
        .flag("p(n)/4_reproduces", quarter_matches)
        .text(
            "reproduced_by",
            match (half_matches, quarter_matches) {
                (true, false) => "k(A_n)/2",
                (false, true) => "p(n)/4",
                (true, true) => "both",
                (false, false) => "neither",
            },
        )
        .require(
            half_matches || quarter_matches,
            "neither candidate bound reproduces the tail rows",
        );
    r
}

fn psl2_formula_reports(cap: usize) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for q in [4usize, 7, 8, 9, 11, 13, 16] {
        let line = ProjectiveLine::new(q).expect("prime power");
        let mut r = VerificationReport::new("formula.psl2_classes", format!("PSL2({q})"));
        let t = FiniteGroup::new(line.degree(), line.psl2_generators()).expect("valid");
        match (t.classes(cap), psl2_class_count(q as u64)) {
            (Ok(c), Ok(f)) => {
                r.int("k_brute", c.k() as u64)
                    .int("k_formula", f)
                    .require(c.k() as u64 == f, "brute force and formula differ");
            }
            (Err(e), _) => r = VerificationReport::skipped("formula.psl2_classes", format!("PSL2({q})"), e.to_string()),
            (_, Err(e)) => {
                r.require(false, e.to_string());
            }
        }
        out.push(r);
    }
    for q in [5usize, 7, 9] {
        let c = psl2_in_pgl2(q).expect("odd prime power");
        let mut r = VerificationReport::new("formula.pgl2_classes", format!("PGL2({q})"));
        let g = FiniteGroup::new(c.degree, c.ambient).expect("valid");
        match (g.classes(cap), pgl2_class_count(q as u64)) {
            (Ok(cl), Ok(f)) => {
                r.int("k_brute", cl.k() as u64)
                    .int("k_formula", f)
                    .require(cl.k() as u64 == f, "brute force and formula differ");
            }
            (Err(e), _) => r = VerificationReport::skipped("formula.pgl2_classes", format!("PGL2({q})"), e.to_string()),
            (_, Err(e)) => {
                r.require(false, e.to_string());
            }
        }
        out.push(r);
    }
    out
}

fn tables_suite(opts: &SuiteOptions, computed: &Computed<'_>) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for entry in opts.catalog.entries().iter().filter(|e| e.kind == EntryKind::Aut) {
        out.push(table_row_report(entry, lookup(computed, &entry.name)));
    }
    let mut coverage = VerificationReport::new("tables.coverage", opts.catalog.origin());
    let missing: Vec<&str> = reference_rows()
        .filter(|row| opts.catalog.get(row.name).is_none())
        .map(|row| row.name)
        .collect();
    coverage
        .int("reference_rows", reference_rows().count() as u64)
        .int("missing", missing.len() as u64)
        .text("missing_rows", missing.join(","))
        .require(missing.is_empty(), "reference rows without a catalog entry");
    out.push(coverage);
    out.push(alternating_tail_report());
    out.extend(psl2_formula_reports(opts.cap));
    out
}

fn c2_suite(opts: &SuiteOptions, computed: &Computed<'_>) -> Vec<VerificationReport> {
    let mut entries = Vec::new();
    let mut out = Vec::new();
    for entry in opts.catalog.entries().iter().filter(|e| e.kind == EntryKind::Aut) {
        let brute = match lookup(computed, &entry.name) {
            Some(Ok(d)) => d.k_star.map(|k| (k, (d.order_a as f64).log2())),
            _ => None,
        };
        let (k, log2_aut, source) = match (brute, entry.k_star) {
            (Some((k, l)), _) => (k, l, "brute"),
            (None, Some(KStar::Exact(k))) => (k, entry.log2_ambient(), "declared"),
            // γ decreases in k, so a lower bound on k* gives an upper bound on γ.
            (None, Some(KStar::AtLeast(k))) => (k, entry.log2_ambient(), "lower bound"),
            (None, None) => continue,
        };
        let c = C2Entry::new(entry.name.clone(), log2_aut, k);
        let mut r = c2_entry_report(&c);
        r.text("k_source", source);
        out.push(r);
        entries.push(c);
    }
    let mut summary = verify_c2(&entries);
    summary.id = "c2.summary".into();
    out.push(summary);
    out
}

fn lemmas_suite(opts: &SuiteOptions) -> Vec<VerificationReport> {
    let mut out = vec![
        verify_prime_power_inequalities(&SweepRange::prime_power_default()),
        verify_klog_bound(opts.klog_k_max),
        verify_weighted_cases(opts.weighted_n_max, opts.weighted_k_max),
    ];
    let mut sharp = VerificationReport::new("lemma.weighted_sharpness", "w = 1 thresholds");
    for (n, k, expect) in [(1, 221, false), (1, 222, true), (2, 8, false), (2, 9, true)] {
        let case = WeightedCase::with_weight(n, k, 1.0).expect("valid case");
        let o = check_weighted_inequality(&case);
        sharp
            .flag(&format!("holds[n={n},k={k}]"), o.holds)
            .real(&format!("log_margin[n={n},k={k}]"), o.log_margin)
            .require(o.holds == expect, format!("n={n}, k={k}: expected holds = {expect}"));
    }
    out.push(sharp);
    out.push(verify_sum_product_sweep(opts.sum_r_max, opts.sum_x_max));
    out.push(verify_partition_bound(22, opts.partition_n_max));
    out
}

fn bertram_suite(computed: &Computed<'_>) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let mut ceiling_simple = Vec::new();
    let mut ceiling_all = Vec::new();
    for (entry, data) in computed {
        let d = match data {
            Ok(d) => d,
            Err(e) => {
                out.push(failed_entry("bertram", &entry.name, e));
                continue;
            }
        };
        let mut subjects: Vec<(String, u128, Option<u64>, bool)> = Vec::new();
        match entry.kind {
            EntryKind::Aut => {
                subjects.push((entry.name.clone(), d.order_t, d.k_t, true));
                if d.order_a != d.order_t {
                    subjects.push((format!("Aut({})", entry.name), d.order_a, d.k_a, false));
                }
            }
            EntryKind::Almost => subjects.push((entry.name.clone(), d.order_a, d.k_a, false)),
            EntryKind::Product => {
                subjects.push((format!("soc({})", entry.name), d.order_t, d.k_t, false));
                subjects.push((entry.name.clone(), d.order_a, d.k_a, false));
            }
        }
        for (subject, order, k, simple) in subjects {
            let r = match k {
                Some(k) => {
                    let mut r = bertram_report(&subject, order, k);
                    r.flag("simple", simple);
                    if r.get("ceiling_equality").and_then(|v| v.as_bool()) == Some(true) {
                        if simple {
                            ceiling_simple.push(subject.clone());
                        }
                        ceiling_all.push(subject.clone());
                    }
                    r
                }
                None => VerificationReport::skipped("bertram", &subject, "order exceeds cap"),
            };
            out.push(r);
        }
    }
    let mut summary = VerificationReport::new("bertram.summary", format!("{} groups", out.len()));
    let fails = out.iter().filter(|r| r.failed()).count();
    summary
        .int("checked", out.iter().filter(|r| r.passed()).count() as u64)
        .int("failed", fails as u64)
        .int(
            "skipped",
            out.iter().filter(|r| r.verdict == Verdict::Skipped).count() as u64,
        )
        .text("ceiling_equality_simple", ceiling_simple.join(","))
        .text("ceiling_equality_all", ceiling_all.join(","))
        .require(fails == 0, "log3|G| < k(G) fails for some group");
    out.push(summary);
    out
}

fn almost_simple_suite(opts: &SuiteOptions, computed: &Computed<'_>) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut out = Vec::new();
    for (entry, data) in computed.iter().filter(|(e, _)| e.kind != EntryKind::Product) {
        let d = match data {
            Ok(d) => d,
            Err(e) => {
                out.push(failed_entry("base3", &entry.name, e));
                continue;
            }
        };
        let mut groups = Vec::new();
        if entry.kind == EntryKind::Aut {
            groups.push((entry.name.clone(), d.order_t, d.k_t, false));
            groups.push((format!("Aut({})", entry.name), d.order_a, d.k_a, true));
        } else {
            groups.push((entry.name.clone(), d.order_a, d.k_a, false));
        }
        for (subject, order, k, is_aut) in groups {
            let mut r = match k {
                Some(k) => base3_report(&subject, order, k),
                None => VerificationReport::skipped("base3", &subject, "order exceeds cap"),
            };
            if let (true, Some(ks)) = (is_aut, d.k_star) {
                note_auto(&mut r, d.order_a, ks);
            }
            out.push(r);
        }
    }
    // PSL3(4) with Γ = PΓL3(4) of index 2 in Aut.
    let c = psl3_in_aut(4).expect("q = 4");
    let pair = AmbientPair::new(FiniteGroup::new(c.degree, c.ambient)?, c.socle)?;
    let plane = ProjectivePlane::new(4).expect("q = 4");
    let gamma_group = FiniteGroup::new(c.degree, plane.pgaml3_generators())?;
    let mut r = verify_index_reduction(&pair, &gamma_group, 2, opts.cap)?;
    r.subject = format!("PSL3(4) in PΓL3(4), {}", r.subject);
    out.push(r);
    Ok(out)
}

/// Representatives of the three configurations where the general argument
/// needs a direct check: A5² <= G <= S5 × S5, Aut(T) ≀ S2 for T = A5 and
/// PSL3(4).
fn exceptional_reports(cap: usize) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut out = Vec::new();
    let s5 = symmetric_over_alternating(5);
    let wreath = wreath_with_s2(&s5);
    let g = FiniteGroup::new(wreath.degree, wreath.ambient)?;
    let mut r = verify_bertram("S5 wr S2", &g, cap);
    r.id = "exceptional.wreath".into();
    out.push(r);

    let l34 = psl3_in_aut(4).expect("q = 4");
    let big = wreath_with_s2(&l34);
    let g = FiniteGroup::new(big.degree, big.ambient)?;
    let mut r = verify_bertram("Aut(PSL3(4)) wr S2", &g, cap);
    r.id = "exceptional.wreath".into();
    out.push(r);

    // Subgroups between A5 × A5 and S5 × S5 correspond to the five subgroups
    // of C2 × C2.
    let (degree, blocks) = direct_product(&[(5, s5.socle.clone()), (5, s5.socle.clone())]);
    let (_, odd) = direct_product(&[(5, vec![s5.ambient[0].clone()]), (5, vec![s5.ambient[0].clone()])]);
    let (t1, t2) = (odd[0][0].clone(), odd[1][0].clone());
    let socle: Vec<Permutation> = blocks.concat();
    let tops: [(&str, Vec<Permutation>); 5] = [
        ("A5 x A5", vec![]),
        ("S5 x A5", vec![t1.clone()]),
        ("A5 x S5", vec![t2.clone()]),
        ("(S5 x S5)^+", vec![t1.then(&t2)]),
        ("S5 x S5", vec![t1, t2]),
    ];
    for (name, extra) in tops {
        let mut gens = socle.clone();
        gens.extend(extra);
        let g = FiniteGroup::new(degree, gens)?;
        let mut r = verify_bertram(name, &g, cap);
        r.id = "exceptional.product".into();
        out.push(r);
    }
    Ok(out)
}

fn socle_suite(opts: &SuiteOptions) -> Result<Vec<VerificationReport>, VerifyError> {
    let entries: Vec<&CatalogEntry> = opts
        .catalog
        .entries()
        .iter()
        .filter(|e| e.shape.is_some() && !e.is_formula_only())
        .collect();
    let mut out: Vec<VerificationReport> = entries
        .into_par_iter()
        .map(|e| -> Result<VerificationReport, VerifyError> {
            let pair = realize(e, opts.cap)?;
            let shape = e.shape.as_ref().expect("filtered");
            verify_socle_bounds(&e.name, shape, pair.ambient(), pair.socle().generators(), opts.cap)
        })
        .collect::<Result<_, _>>()?;
    out.extend(exceptional_reports(opts.cap)?);
    Ok(out)
}
