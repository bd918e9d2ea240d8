//! Orbits of an ambient group acting by conjugation on a normal subgroup:
//! k*(T) when the ambient is Aut(T), and the element-order spectrum e(T).

use std::collections::BTreeSet;

use crate::permcore::{fuse_orbits, is_normal_subgroup, ElementSet, FiniteGroup, GroupError, Permutation, UnionFind};
use crate::report::VerificationReport;

/// A group `A` with a normal subgroup `T`, checked on construction.
#[derive(Clone, Debug)]
pub struct AmbientPair {
    ambient: FiniteGroup,
    socle: FiniteGroup,
    validated: bool,
}

impl AmbientPair {
    /// Checks that `<socle_generators>` is a normal subgroup of `ambient`.
    pub fn new(ambient: FiniteGroup, socle_generators: Vec<Permutation>) -> Result<Self, GroupError> {
        if !is_normal_subgroup(&ambient, &socle_generators)? {
            return Err(GroupError::NotNormal);
        }
        let socle = FiniteGroup::new(ambient.degree(), socle_generators)?;
        Ok(Self {
            ambient,
            socle,
            validated: true,
        })
    }

    /// As [`AmbientPair::new`], additionally requiring `|A| / |T| = index`.
    pub fn with_index(
        ambient: FiniteGroup,
        socle_generators: Vec<Permutation>,
        index: u128,
    ) -> Result<Self, GroupError> {
        let pair = Self::new(ambient, socle_generators)?;
        let found = pair.out_index();
        if found != index {
            return Err(GroupError::IndexMismatch { expected: index, found });
        }
        Ok(pair)
    }

    /// A group paired with itself.
    pub fn trivial_extension(group: FiniteGroup) -> Self {
        Self {
            socle: group.clone(),
            ambient: group,
            validated: true,
        }
    }

    pub fn ambient(&self) -> &FiniteGroup {
        &self.ambient
    }

    pub fn socle(&self) -> &FiniteGroup {
        &self.socle
    }

    pub fn validated(&self) -> bool {
        self.validated
    }

    /// `|A : T|`, from stabilizer-chain orders.
    pub fn out_index(&self) -> u128 {
        self.ambient.order_exact() / self.socle.order_exact()
    }
}

/// Number of orbits of conjugation by `a`'s generators on `subset`, which
/// must be closed under that action.
pub fn orbit_count_on_subset(a: &FiniteGroup, subset: &ElementSet, cap: usize) -> Result<usize, GroupError> {
    if subset.len() > cap {
        return Err(GroupError::CapExceeded { cap });
    }
    if subset.degree() != a.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: a.degree(),
            found: subset.degree(),
        });
    }
    Ok(fuse_orbits(subset, a.generators())?.count)
}

/// k*(T): orbits of the ambient on the elements of the socle. Only the socle
/// is enumerated; the ambient's order is still required to fit the cap.
pub fn k_star(pair: &AmbientPair, cap: usize) -> Result<usize, GroupError> {
    if pair.ambient.order_exact() > cap as u128 {
        return Err(GroupError::CapExceeded { cap });
    }
    let elements = pair.socle.elements(cap)?;
    orbit_count_on_subset(&pair.ambient, elements, cap)
}

/// The set of element orders of `t`; e(T) is its size.
pub fn element_order_spectrum(t: &FiniteGroup, cap: usize) -> Result<BTreeSet<u64>, GroupError> {
    let elements = t.elements(cap)?;
    let mut orders: BTreeSet<u64> = BTreeSet::new();
    for i in 0..elements.len() {
        orders.insert(elements.permutation(i).order());
    }
    Ok(orders)
}

/// Number of T-classes after fusing them under conjugation by the ambient's
/// generators. This is k*(T) computed through the class-fusion view.
pub fn fused_class_count(pair: &AmbientPair, cap: usize) -> Result<usize, GroupError> {
    let elements = pair.socle.elements(cap)?;
    let classes = pair.socle.classes(cap)?;
    let mut uf = UnionFind::new(classes.k());
    for (c, rep) in classes.representatives().iter().enumerate() {
        for a in pair.ambient.generators() {
            let image = rep.conjugate_by(a);
            let j = elements
                .position(image.images())
                .ok_or(GroupError::NotConjugationClosed)?;
            uf.union(c, classes.class_of(j));
        }
    }
    Ok(uf.set_count())
}

/// k(T), k(A) (when enumerable), k*(T), and the check k*(T) >= k(T)/|A:T|.
pub fn class_fusion_summary(pair: &AmbientPair, cap: usize) -> Result<VerificationReport, GroupError> {
    let k_t = pair.socle.classes(cap)?.k();
    let ks = k_star(pair, cap)?;
    let fused = fused_class_count(pair, cap)?;
    let index = pair.out_index();
    let mut r = VerificationReport::new("class_fusion", format!("degree {}", pair.ambient.degree()));
    r.int("order_T", pair.socle.order_exact())
        .int("order_A", pair.ambient.order_exact())
        .int("index", index)
        .int("k_T", k_t as u64);
    match pair.ambient.classes(cap) {
        Ok(c) => {
            r.int("k_A", c.k() as u64);
        }
        Err(e) => {
            r.note(format!("k(A) not computed: {e}"));
        }
    }
    r.int("k_star", ks as u64)
        .int("k_star_by_fusion", fused as u64)
        .real("bound", k_t as f64 / index as f64);
    r.require(ks == fused, "orbit and class-fusion counts differ")
        .require((ks as u128) * index >= k_t as u128, "k* < k(T)/|A:T|")
        .require(ks <= k_t, "k* exceeds k(T)")
        .margin(ks as f64 - k_t as f64 / index as f64);
    Ok(r)
}
