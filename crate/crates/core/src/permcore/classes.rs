use super::elements::ElementSet;
use super::perm::{conjugate_into, Permutation};
use super::union_find::UnionFind;
use super::GroupError;

/// Orbits of a set of conjugators acting on an element set.
pub struct OrbitPartition {
    /// Orbit label per element index, numbered by first appearance.
    pub labels: Vec<u32>,
    pub count: usize,
}

/// Fuses `set` into orbits of conjugation by `conjugators`.
///
/// Every conjugate must land back in `set`; otherwise the set is not a union
/// of orbits and `NotConjugationClosed` is returned.
pub fn fuse_orbits(set: &ElementSet, conjugators: &[Permutation]) -> Result<OrbitPartition, GroupError> {
    let degree = set.degree();
    let mut uf = UnionFind::new(set.len());
    let mut scratch = vec![0u8; degree];
    let conjugators: Vec<&Permutation> = conjugators.iter().filter(|a| !a.is_identity()).collect();
    for a in &conjugators {
        if a.degree() != degree {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: a.degree(),
            });
        }
    }
    for i in 0..set.len() {
        for a in &conjugators {
            conjugate_into(set.get(i), a.images(), &mut scratch);
            let j = set.position(&scratch).ok_or(GroupError::NotConjugationClosed)?;
            uf.union(i, j);
        }
    }
    let count = uf.set_count();
    Ok(OrbitPartition {
        labels: uf.labels(),
        count,
    })
}

/// Conjugacy classes of a group: representatives (lexicographically least
/// element of each class), class sizes, and the class of every element.
#[derive(Clone, Debug)]
pub struct ClassDecomposition {
    representatives: Vec<Permutation>,
    sizes: Vec<u64>,
    element_class: Vec<u32>,
    group_order: u128,
}

impl ClassDecomposition {
    /// Number of classes, k(G).
    pub fn k(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn group_order(&self) -> u128 {
        self.group_order
    }

    /// Class index (into `representatives`) of the element with dense index `i`
    /// in the group's element set.
    pub fn class_of(&self, i: usize) -> usize {
        self.element_class[i] as usize
    }

    /// Sorted multiset of class sizes.
    pub fn size_multiset(&self) -> Vec<u64> {
        let mut s = self.sizes.clone();
        s.sort_unstable();
        s
    }

    pub fn from_partition(set: &ElementSet, partition: &OrbitPartition) -> Self {
        let mut min_index: Vec<usize> = vec![usize::MAX; partition.count];
        let mut sizes = vec![0u64; partition.count];
        for (i, &label) in partition.labels.iter().enumerate() {
            let l = label as usize;
            sizes[l] += 1;
            if min_index[l] == usize::MAX || set.get(i) < set.get(min_index[l]) {
                min_index[l] = i;
            }
        }
        let mut order: Vec<usize> = (0..partition.count).collect();
        order.sort_by(|&a, &b| set.get(min_index[a]).cmp(set.get(min_index[b])));
        let mut rank = vec![0u32; partition.count];
        for (r, &l) in order.iter().enumerate() {
            rank[l] = r as u32;
        }
        ClassDecomposition {
            representatives: order.iter().map(|&l| set.permutation(min_index[l])).collect(),
            sizes: order.iter().map(|&l| sizes[l]).collect(),
            element_class: partition.labels.iter().map(|&l| rank[l as usize]).collect(),
            group_order: set.len() as u128,
        }
    }
}

/// Conjugacy classes of the group whose element set is `elements` and which
/// is generated by `generators`.
pub fn decompose(elements: &ElementSet, generators: &[Permutation]) -> Result<ClassDecomposition, GroupError> {
    let partition = fuse_orbits(elements, generators)?;
    Ok(ClassDecomposition::from_partition(elements, &partition))
}
