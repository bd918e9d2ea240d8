//! Property tests against naive oracles: permutation algebra, group-file
//! round trips, and class/orbit counts of random subgroups of S_6.

use std::collections::{HashMap, HashSet};

use proptest::prelude::*;

use kclass_core::autorbits::{fused_class_count, k_star, AmbientPair};
use kclass_core::corpus::{parse_group_file, GroupFile, SectionTag};
use kclass_core::lemmas::{binomial, partition_count};
use kclass_core::permcore::{FiniteGroup, Permutation, StabChain};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn perms(n: usize, count: usize) -> impl Strategy<Value = Vec<Permutation>> {
    proptest::collection::vec(perm(n), count)
}

/// Plain composition on image vectors: apply `p`, then `q`.
fn apply_then(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&x| q[x]).collect()
}

fn naive_closure(n: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = apply_then(&x, &g.to_vec());
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        out[v] = i;
    }
    out
}

/// Orbits of `acting` on `set` by conjugation, computed from every element.
fn naive_orbits(set: &[Vec<usize>], acting: &[Vec<usize>]) -> usize {
    let index: HashMap<&Vec<usize>, usize> = set.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut label = vec![usize::MAX; set.len()];
    let mut count = 0;
    for i in 0..set.len() {
        if label[i] != usize::MAX {
            continue;
        }
        for a in acting {
            let c = apply_then(&apply_then(&inverse(a), &set[i]), a);
            label[index[&c]] = count;
        }
        count += 1;
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(ps in perms(9, 3)) {
        let (a, b, c) = (&ps[0], &ps[1], &ps[2]);
        prop_assert_eq!(a.then(b).then(c), a.then(&b.then(c)));
        prop_assert_eq!(a.then(b).to_vec(), apply_then(&a.to_vec(), &b.to_vec()));
    }

    #[test]
    fn inverse_and_conjugation(ps in perms(9, 2)) {
        let (g, a) = (&ps[0], &ps[1]);
        prop_assert!(g.then(&g.inverse()).is_identity());
        prop_assert_eq!(g.conjugate_by(a), a.inverse().then(g).then(a));
        prop_assert_eq!(g.conjugate_by(a).cycle_lengths().len(), g.cycle_lengths().len());
    }

    #[test]
    fn order_is_least_identity_power(g in perm(10)) {
        let m = g.order();
        prop_assert!(g.pow(m).is_identity());
        prop_assert!((1..m).all(|e| !g.pow(e).is_identity()));
        prop_assert_eq!(g.cycle_lengths().iter().sum::<usize>(), 10);
    }

    #[test]
    fn group_file_round_trip(a in perms(7, 3), t in perms(7, 2)) {
        let file = GroupFile::new("G", 7)
            .with_section(SectionTag::Ambient, a)
            .with_section(SectionTag::Socle, t);
        let again = parse_group_file(&file.serialize()).unwrap();
        prop_assert_eq!(again, file);
    }

    #[test]
    fn orders_and_classes_match_naive_closure(gens in perms(6, 2)) {
        let all = naive_closure(6, &gens);
        prop_assert_eq!(StabChain::new(6, &gens).order(), all.len() as u128);
        let g = FiniteGroup::new(6, gens.clone()).unwrap();
        let c = g.classes(1_000).unwrap();
        prop_assert_eq!(c.k(), naive_orbits(&all, &all));
        prop_assert_eq!(c.sizes().iter().map(|&s| s as u128).sum::<u128>(), all.len() as u128);
        prop_assert!(c.sizes().iter().all(|&s| (all.len() as u64).is_multiple_of(s)));
    }

    #[test]
    fn kstar_counts_orbits_of_the_normalizing_group(gens in perms(6, 2)) {
        // T = <gens> is normal in S_6 only in rare cases; act with T itself
        // and with the full S_6 on A_6 instead.
        let t = FiniteGroup::new(6, gens.clone()).unwrap();
        let pair = AmbientPair::trivial_extension(t);
        let all = naive_closure(6, &gens);
        prop_assert_eq!(k_star(&pair, 1_000).unwrap(), naive_orbits(&all, &all));
        prop_assert_eq!(fused_class_count(&pair, 1_000).unwrap(), naive_orbits(&all, &all));
    }
}

#[test]
fn kstar_of_a6_under_s6() {
    let s6_gens = vec![
        Permutation::new(vec![1, 0, 2, 3, 4, 5]).unwrap(),
        Permutation::new(vec![1, 2, 3, 4, 5, 0]).unwrap(),
    ];
    let a6_gens = vec![
        Permutation::new(vec![1, 2, 0, 3, 4, 5]).unwrap(),
        Permutation::new(vec![0, 2, 3, 4, 5, 1]).unwrap(),
    ];
    let s6 = naive_closure(6, &s6_gens);
    let a6 = naive_closure(6, &a6_gens);
    assert_eq!(a6.len(), 360);
    let pair = AmbientPair::new(FiniteGroup::new(6, s6_gens).unwrap(), a6_gens).unwrap();
    // Conjugation by S_6 fuses the two 5-cycle classes: 7 - 1 = 6.
    assert_eq!(k_star(&pair, 1_000).unwrap(), naive_orbits(&a6, &s6));
    assert_eq!(k_star(&pair, 1_000).unwrap(), 6);
}

#[test]
fn partition_and_binomial_oracles() {
    // Euler's pentagonal recurrence as an independent check of p(n).
    let mut p = vec![1i128];
    for n in 1..=120i128 {
        let mut s = 0i128;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            s += sign * p[(n - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                s += sign * p[(n - g2) as usize];
            }
        }
        p.push(s);
    }
    for n in [1usize, 5, 22, 50, 120] {
        assert_eq!(partition_count(n).unwrap().to_string(), p[n].to_string(), "p({n})");
    }
    // Pascal's rule.
    for n in 1..40u64 {
        for k in 1..n {
            assert_eq!(
                binomial(n, k).unwrap(),
                binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap()
            );
        }
    }
}
