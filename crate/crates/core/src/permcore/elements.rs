use std::hash::{BuildHasher, Hasher};

use hashbrown::HashTable;
use rustc_hash::FxBuildHasher;

use super::perm::Permutation;

/// A set of permutations of one degree, stored as a flat array of image
/// lists with a hash index keyed by the encoding.
///
/// Elements receive dense indices in insertion order. Set equality and the
/// canonical (lexicographic) order do not depend on that insertion order.
pub struct ElementSet {
    degree: usize,
    data: Vec<u8>,
    index: HashTable<u32>,
    hasher: FxBuildHasher,
}

impl ElementSet {
    pub fn new(degree: usize) -> Self {
        Self {
            degree,
            data: Vec::new(),
            index: HashTable::new(),
            hasher: FxBuildHasher,
        }
    }

    pub fn with_capacity(degree: usize, capacity: usize) -> Self {
        Self {
            degree,
            data: Vec::with_capacity(degree * capacity),
            index: HashTable::with_capacity(capacity),
            hasher: FxBuildHasher,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.degree
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Image list of the element with dense index `i`.
    #[inline]
    pub fn get(&self, i: usize) -> &[u8] {
        &self.data[i * self.degree..(i + 1) * self.degree]
    }

    pub fn permutation(&self, i: usize) -> Permutation {
        Permutation::from_images_unchecked(self.get(i))
    }

    #[inline]
    fn hash_of(&self, images: &[u8]) -> u64 {
        let mut h = self.hasher.build_hasher();
        h.write(images);
        h.finish()
    }

    #[inline]
    pub fn position(&self, images: &[u8]) -> Option<usize> {
        debug_assert_eq!(images.len(), self.degree);
        let hash = self.hash_of(images);
        let degree = self.degree;
        let data = &self.data;
        self.index
            .find(hash, |&i| {
                let i = i as usize;
                &data[i * degree..(i + 1) * degree] == images
            })
            .map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.position(p.images()).is_some()
    }

    /// Inserts an image list, returning its index and whether it was new.
    pub fn insert(&mut self, images: &[u8]) -> (usize, bool) {
        debug_assert_eq!(images.len(), self.degree);
        if let Some(i) = self.position(images) {
            return (i, false);
        }
        let i = self.len();
        assert!(i < u32::MAX as usize, "element set overflow");
        self.data.extend_from_slice(images);
        let hash = self.hash_of(images);
        let degree = self.degree;
        let data = &self.data;
        let hasher = &self.hasher;
        self.index.insert_unique(hash, i as u32, |&j| {
            let j = j as usize;
            let mut h = hasher.build_hasher();
            h.write(&data[j * degree..(j + 1) * degree]);
            h.finish()
        });
        (i, true)
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[u8]> + '_ {
        self.data.chunks_exact(self.degree)
    }

    /// All elements in canonical (lexicographic) order.
    pub fn sorted(&self) -> Vec<Permutation> {
        let mut all: Vec<Permutation> = self.iter().map(Permutation::from_images_unchecked).collect();
        all.sort_unstable();
        all
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.degree == other.degree && self.iter().all(|e| other.position(e).is_some())
    }
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.len() == other.len() && self.is_subset_of(other)
    }
}

impl Eq for ElementSet {}

impl std::fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ElementSet")
            .field("degree", &self.degree)
            .field("len", &self.len())
            .finish()
    }
}
