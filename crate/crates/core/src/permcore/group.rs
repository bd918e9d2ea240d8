use std::sync::OnceLock;

use super::classes::{self, ClassDecomposition};
use super::elements::ElementSet;
use super::perm::{compose_into, Permutation, MAX_DEGREE};
use super::stabchain::StabChain;
use super::GroupError;

/// Default enumeration cap: 5 * 10^6 elements.
pub const DEFAULT_CAP: usize = 5_000_000;

/// A permutation group given by generators, with lazily computed order,
/// stabilizer chain, element set and class decomposition.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
    elements: OnceLock<ElementSet>,
    classes: OnceLock<ClassDecomposition>,
}

impl FiniteGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(GroupError::UnsupportedDegree(degree));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(Self {
            degree,
            generators,
            chain: OnceLock::new(),
            elements: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("valid degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::new(self.degree, &self.generators))
    }

    /// Exact order from the stabilizer chain, with no enumeration cap.
    pub fn order_exact(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    /// The generator closure, materialized by breadth-first search.
    pub fn elements(&self, cap: usize) -> Result<&ElementSet, GroupError> {
        if let Some(set) = self.elements.get() {
            return if set.len() > cap {
                Err(GroupError::CapExceeded { cap })
            } else {
                Ok(set)
            };
        }
        // The chain gives the exact size up front, so oversized groups fail
        // before any memory is committed.
        if self.order_exact() > cap as u128 {
            return Err(GroupError::CapExceeded { cap });
        }
        let set = closure(self.degree, &self.generators, cap)?;
        let _ = self.elements.set(set);
        Ok(self.elements.get().unwrap())
    }

    pub fn order(&self, cap: usize) -> Result<u128, GroupError> {
        let order = self.order_exact();
        if order > cap as u128 {
            Err(GroupError::CapExceeded { cap })
        } else {
            Ok(order)
        }
    }

    pub fn classes(&self, cap: usize) -> Result<&ClassDecomposition, GroupError> {
        if let Some(c) = self.classes.get() {
            if c.group_order() > cap as u128 {
                return Err(GroupError::CapExceeded { cap });
            }
            return Ok(c);
        }
        let elements = self.elements(cap)?;
        let decomposition = classes::decompose(elements, &self.generators)?;
        let _ = self.classes.set(decomposition);
        Ok(self.classes.get().unwrap())
    }

    /// Drops the cached element set and classes (the chain is kept).
    pub fn release_elements(&mut self) {
        self.elements = OnceLock::new();
        self.classes = OnceLock::new();
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        let g = Self::new(self.degree, self.generators.clone()).unwrap();
        if let Some(chain) = self.chain.get() {
            let _ = g.chain.set(chain.clone());
        }
        g
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Breadth-first closure of `generators` under right multiplication,
/// starting from the identity.
pub fn closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<ElementSet, GroupError> {
    let mut set = ElementSet::new(degree);
    let id = Permutation::identity(degree);
    set.insert(id.images());
    let gens: Vec<&[u8]> = generators
        .iter()
        .filter(|g| !g.is_identity())
        .map(|g| g.images())
        .collect();
    let mut scratch = vec![0u8; degree];
    let mut next = 0;
    while next < set.len() {
        for g in &gens {
            compose_into(set.get(next), g, &mut scratch);
            let (_, fresh) = set.insert(&scratch);
            if fresh && set.len() > cap {
                return Err(GroupError::CapExceeded { cap });
            }
        }
        next += 1;
    }
    Ok(set)
}

/// Materializes the closure of the generators.
pub fn group_elements(g: &FiniteGroup, cap: usize) -> Result<&ElementSet, GroupError> {
    g.elements(cap)
}

pub fn group_order(g: &FiniteGroup, cap: usize) -> Result<u128, GroupError> {
    g.order(cap)
}

/// Whether `<t_generators>` is normal in `a`. Every `t` must lie in `a`.
pub fn is_normal_subgroup(a: &FiniteGroup, t_generators: &[Permutation]) -> Result<bool, GroupError> {
    for t in t_generators {
        if t.degree() != a.degree() {
            return Err(GroupError::DegreeMismatch {
                expected: a.degree(),
                found: t.degree(),
            });
        }
        if !a.contains(t) {
            return Err(GroupError::NotASubgroup);
        }
    }
    let sub = StabChain::new(a.degree(), t_generators);
    Ok(a.generators()
        .iter()
        .all(|x| t_generators.iter().all(|t| sub.contains(&t.conjugate_by(x)))))
}

pub fn conjugacy_classes(g: &FiniteGroup, cap: usize) -> Result<&ClassDecomposition, GroupError> {
    g.classes(cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn sym(n: usize) -> FiniteGroup {
        FiniteGroup::new(n, vec![cyc(n, &[&[0, 1]]), cyc(n, &[&(0..n).collect::<Vec<_>>()])]).unwrap()
    }

    fn alt5_gens() -> Vec<Permutation> {
        vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1, 2, 3, 4]])]
    }

    #[test]
    fn trivial_group_has_identity_only() {
        let g = FiniteGroup::trivial(4);
        let e = group_elements(&g, 10).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e.contains(&Permutation::identity(4)));
        assert_eq!(group_order(&g, 1).unwrap(), 1);
    }

    #[test]
    fn cap_exceeded_names_the_cap() {
        let err = group_elements(&sym(5), 100).unwrap_err();
        assert_eq!(err, GroupError::CapExceeded { cap: 100 });
        assert!(err.to_string().contains("100"));
        // The BFS itself also honours the cap.
        let err = closure(5, sym(5).generators(), 100).unwrap_err();
        assert_eq!(err, GroupError::CapExceeded { cap: 100 });
    }

    #[test]
    fn normality() {
        let s5 = sym(5);
        assert!(is_normal_subgroup(&s5, &alt5_gens()).unwrap());
        assert!(!is_normal_subgroup(&s5, &[cyc(5, &[&[0, 1]])]).unwrap());
        assert!(is_normal_subgroup(&s5, s5.generators()).unwrap());
        let a5 = FiniteGroup::new(5, alt5_gens()).unwrap();
        assert_eq!(
            is_normal_subgroup(&a5, &[cyc(5, &[&[0, 1]])]),
            Err(GroupError::NotASubgroup)
        );
    }

    #[test]
    fn generator_degree_checked() {
        let err = FiniteGroup::new(4, vec![Permutation::identity(5)]).unwrap_err();
        assert!(matches!(err, GroupError::DegreeMismatch { .. }));
    }
}
