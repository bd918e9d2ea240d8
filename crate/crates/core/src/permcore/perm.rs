use std::fmt;

use num_integer::Integer;

use super::GroupError;

/// Largest supported permutation degree. Points are stored as `u8`.
pub const MAX_DEGREE: usize = 256;

/// A permutation of `{0, .., degree - 1}` stored as its image list.
///
/// Products are read left to right: `p.then(&q)` applies `p` first, so
/// `p.then(&q).image(x) == q.image(p.image(x))`. Ordering is lexicographic on
/// the image list, which is also the canonical encoding order used to pick
/// class representatives.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u8]>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let degree = images.len();
        if degree == 0 || degree > MAX_DEGREE {
            return Err(GroupError::UnsupportedDegree(degree));
        }
        let mut seen = vec![false; degree];
        for &v in &images {
            if v >= degree || seen[v] {
                return Err(GroupError::NotABijection);
            }
            seen[v] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// Builds a permutation from an image slice that is already known to be a
    /// bijection (e.g. a slice of an element store).
    pub(crate) fn from_images_unchecked(images: &[u8]) -> Self {
        debug_assert!(is_bijection(images));
        Self { images: images.into() }
    }

    pub fn identity(degree: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&degree));
        Self {
            images: (0..degree).map(|x| x as u8).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles given on 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(GroupError::UnsupportedDegree(degree));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree || touched[x] {
                    return Err(GroupError::NotABijection);
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self` followed by `other`. Panics on a degree mismatch; use
    /// [`compose`] for the checked form.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        let mut out = vec![0u8; self.degree()];
        compose_into(&self.images, &other.images, &mut out);
        Permutation { images: out.into() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0u8; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            out[v as usize] = i as u8;
        }
        Permutation { images: out.into() }
    }

    /// `other^-1 * self * other`, i.e. the conjugate of `self` by `other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        let mut out = vec![0u8; self.degree()];
        conjugate_into(&self.images, &other.images, &mut out);
        Permutation { images: out.into() }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        cycle_lengths(&self.images)
    }

    /// Least `m >= 1` with `self^m` the identity.
    pub fn order(&self) -> u64 {
        order_of(&self.images)
    }

    /// Smallest point moved by the permutation, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &v)| i != v as usize)
            .map(|(i, _)| i)
    }

    /// Disjoint-cycle notation on 0-based points, `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&x.to_string());
                first = false;
                x = self.image(x);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self.cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

/// Checked composition: the result maps `x` to `q(p(x))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation, GroupError> {
    if p.degree() != q.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: p.degree(),
            found: q.degree(),
        });
    }
    Ok(p.then(q))
}

/// Order of a permutation: the lcm of its cycle lengths.
pub fn element_order(p: &Permutation) -> u64 {
    p.order()
}

#[inline]
pub(crate) fn compose_into(p: &[u8], q: &[u8], out: &mut [u8]) {
    for (o, &x) in out.iter_mut().zip(p) {
        *o = q[x as usize];
    }
}

/// Writes `a^-1 g a` into `out`: the point `a(x)` goes to `a(g(x))`.
#[inline]
pub(crate) fn conjugate_into(g: &[u8], a: &[u8], out: &mut [u8]) {
    for (x, &gx) in g.iter().enumerate() {
        out[a[x] as usize] = a[gx as usize];
    }
}

pub(crate) fn cycle_lengths(images: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut lengths = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x] as usize;
            len += 1;
        }
        lengths.push(len);
    }
    lengths
}

pub(crate) fn order_of(images: &[u8]) -> u64 {
    cycle_lengths(images)
        .into_iter()
        .fold(1u64, |acc, len| acc.lcm(&(len as u64)))
}

pub(crate) fn is_bijection(images: &[u8]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&v| {
        let v = v as usize;
        v < seen.len() && !std::mem::replace(&mut seen[v], true)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn compose_identity_is_neutral() {
        let q = perm(&[3, 0, 4, 1, 2]);
        assert_eq!(compose(&Permutation::identity(5), &q).unwrap(), q);
    }

    #[test]
    fn compose_applies_left_factor_first() {
        let p = perm(&[1, 0, 2]);
        let q = perm(&[0, 2, 1]);
        assert_eq!(compose(&p, &q).unwrap(), perm(&[2, 0, 1]));
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let p = perm(&[4, 2, 0, 1, 3]);
        assert!(compose(&p, &p.inverse()).unwrap().is_identity());
        assert!(compose(&p.inverse(), &p).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = compose(&Permutation::identity(3), &Permutation::identity(4)).unwrap_err();
        assert!(matches!(err, GroupError::DegreeMismatch { .. }));
    }

    #[test]
    fn element_orders() {
        assert_eq!(element_order(&Permutation::identity(7)), 1);
        let five = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(element_order(&five), 5);
        let six = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(element_order(&six), 6);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(matches!(
            Permutation::new(vec![0, 1, 1]),
            Err(GroupError::NotABijection)
        ));
        assert!(matches!(
            Permutation::new(vec![0, 3, 1]),
            Err(GroupError::NotABijection)
        ));
        assert!(Permutation::from_cycles(4, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn conjugation_matches_product_form() {
        let g = perm(&[1, 2, 0, 4, 3]);
        let a = perm(&[4, 0, 3, 1, 2]);
        let expected = a.inverse().then(&g).then(&a);
        assert_eq!(g.conjugate_by(&a), expected);
    }

    #[test]
    fn cycle_string_and_pow() {
        let p = Permutation::from_cycles(6, &[&[0, 2, 4], &[1, 5]]).unwrap();
        assert_eq!(p.cycle_string(), "(0 2 4)(1 5)");
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
        assert_eq!(Permutation::identity(2).cycle_string(), "()");
    }
}
