//! Permutation arithmetic, group enumeration, and conjugacy classes.

mod classes;
mod elements;
mod group;
mod perm;
mod stabchain;
mod union_find;

use thiserror::Error;

pub use classes::{decompose, fuse_orbits, ClassDecomposition, OrbitPartition};
pub use elements::ElementSet;
pub use group::{
    closure, conjugacy_classes, group_elements, group_order, is_normal_subgroup, FiniteGroup, DEFAULT_CAP,
};
pub use perm::{compose, element_order, Permutation, MAX_DEGREE};
pub use stabchain::StabChain;
pub use union_find::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("image list is not a bijection")]
    NotABijection,
    #[error("unsupported degree {0} (must be 1..=256)")]
    UnsupportedDegree(usize),
    #[error("enumeration cap exceeded: more than {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generators are not contained in the ambient group")]
    NotASubgroup,
    #[error("subgroup is not normal in the ambient group")]
    NotNormal,
    #[error("element set is not closed under conjugation")]
    NotConjugationClosed,
    #[error("index mismatch: expected {expected}, found {found}")]
    IndexMismatch { expected: u128, found: u128 },
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn sym(n: usize) -> FiniteGroup {
        FiniteGroup::new(n, vec![cyc(n, &[&[0, 1]]), cyc(n, &[&(0..n).collect::<Vec<_>>()])]).unwrap()
    }

    fn alt(n: usize) -> FiniteGroup {
        let gens = (0..n - 2).map(|i| cyc(n, &[&[i, i + 1, i + 2]])).collect();
        FiniteGroup::new(n, gens).unwrap()
    }

    /// Closure by repeatedly multiplying every known element by every known
    /// element until nothing new appears.
    fn closure_oracle(degree: usize, gens: &[Permutation]) -> BTreeSet<Permutation> {
        let mut all: BTreeSet<Permutation> = BTreeSet::new();
        all.insert(Permutation::identity(degree));
        all.extend(gens.iter().cloned());
        loop {
            let current: Vec<_> = all.iter().cloned().collect();
            let before = all.len();
            for a in &current {
                for b in &current {
                    all.insert(a.then(b));
                }
            }
            if all.len() == before {
                return all;
            }
        }
    }

    /// Classes by conjugating each element by every group element.
    fn class_oracle(elements: &BTreeSet<Permutation>) -> Vec<BTreeSet<Permutation>> {
        let mut seen = BTreeSet::new();
        let mut classes = Vec::new();
        for g in elements {
            if seen.contains(g) {
                continue;
            }
            let class: BTreeSet<_> = elements.iter().map(|a| g.conjugate_by(a)).collect();
            seen.extend(class.iter().cloned());
            classes.push(class);
        }
        classes
    }

    #[test]
    fn alt5_elements_match_closure_oracle() {
        let a5 = alt(5);
        let oracle = closure_oracle(5, a5.generators());
        assert_eq!(oracle.len(), 60);
        let elements = group_elements(&a5, 1_000_000).unwrap();
        assert_eq!(elements.len(), 60);
        assert_eq!(elements.sorted(), oracle.into_iter().collect::<Vec<_>>());
        assert_eq!(group_order(&a5, 1_000_000).unwrap(), 60);
    }

    #[test]
    fn sym5_order_matches_closure_oracle() {
        let oracle = closure_oracle(5, sym(5).generators());
        assert_eq!(oracle.len(), 120);
        assert_eq!(group_order(&sym(5), DEFAULT_CAP).unwrap(), 120);
        assert_eq!(group_elements(&sym(5), DEFAULT_CAP).unwrap().len(), 120);
    }

    #[test]
    fn alt5_classes_match_brute_force() {
        let a5 = alt(5);
        let oracle = class_oracle(&closure_oracle(5, a5.generators()));
        let mut oracle_sizes: Vec<u64> = oracle.iter().map(|c| c.len() as u64).collect();
        oracle_sizes.sort_unstable();
        assert_eq!(oracle_sizes, vec![1, 12, 12, 15, 20]);

        let classes = conjugacy_classes(&a5, DEFAULT_CAP).unwrap();
        assert_eq!(classes.k(), 5);
        assert_eq!(classes.size_multiset(), oracle_sizes);
        let oracle_reps: BTreeSet<_> = oracle.iter().map(|c| c.iter().next().unwrap().clone()).collect();
        let reps: BTreeSet<_> = classes.representatives().iter().cloned().collect();
        assert_eq!(reps, oracle_reps);
        assert!(classes.representatives()[0].is_identity());
    }

    #[test]
    fn cyclic_group_is_abelian() {
        let c3 = FiniteGroup::new(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(conjugacy_classes(&c3, 10).unwrap().k(), 3);
        assert!(c3.is_abelian());
    }

    #[test]
    fn sym5_has_seven_classes() {
        let s5 = sym(5);
        let classes = conjugacy_classes(&s5, DEFAULT_CAP).unwrap();
        assert_eq!(classes.k(), 7);
        assert_eq!(classes.size_multiset(), vec![1, 10, 15, 20, 20, 24, 30]);
    }

    #[test]
    fn classes_independent_of_generating_set() {
        let a = sym(6);
        let b = FiniteGroup::new(6, (0..5).map(|i| cyc(6, &[&[i, i + 1]])).collect()).unwrap();
        let ca = conjugacy_classes(&a, DEFAULT_CAP).unwrap();
        let cb = conjugacy_classes(&b, DEFAULT_CAP).unwrap();
        assert_eq!(ca.k(), cb.k());
        assert_eq!(ca.size_multiset(), cb.size_multiset());
        assert_eq!(ca.representatives(), cb.representatives());
    }

    #[test]
    fn fusion_rejects_open_subsets() {
        let s4 = sym(4);
        let mut set = ElementSet::new(4);
        set.insert(Permutation::identity(4).images());
        set.insert(cyc(4, &[&[0, 1]]).images());
        assert!(matches!(
            fuse_orbits(&set, s4.generators()),
            Err(GroupError::NotConjugationClosed)
        ));
    }
}
