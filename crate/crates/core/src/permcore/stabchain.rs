//! Deterministic Schreier–Sims stabilizer chains.
//!
//! Used for exact group orders without enumeration, membership tests, and
//! point stabilizers. Element enumeration remains the breadth-first closure in
//! [`super::group`]; the two routes are checked against each other in tests.

use super::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[x]` indexes into `reps` when `x` is in the orbit.
    transversal: Vec<Option<u32>>,
    /// `reps[i]` maps the base point to `orbit[i]`.
    reps: Vec<Permutation>,
    reps_inv: Vec<Permutation>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(0);
        let id = Permutation::identity(degree);
        Self {
            base,
            generators: Vec::new(),
            orbit: vec![base],
            transversal,
            reps: vec![id.clone()],
            reps_inv: vec![id],
        }
    }

    fn rep(&self, point: usize) -> Option<(&Permutation, &Permutation)> {
        self.transversal[point].map(|i| (&self.reps[i as usize], &self.reps_inv[i as usize]))
    }

    /// Extends the orbit under the current generators. Returns the index of
    /// the first new orbit point.
    fn extend_orbit(&mut self) -> usize {
        let first_new = self.orbit.len();
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            let ux = self.reps[self.transversal[x].unwrap() as usize].clone();
            for s in &self.generators {
                let y = s.image(x);
                if self.transversal[y].is_none() {
                    let uy = ux.then(s);
                    self.transversal[y] = Some(self.reps.len() as u32);
                    self.reps_inv.push(uy.inverse());
                    self.reps.push(uy);
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
        first_new
    }
}

/// A base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        Self::with_base(degree, generators, &[])
    }

    /// Builds a chain whose base begins with `base_prefix`.
    pub fn with_base(degree: usize, generators: &[Permutation], base_prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: base_prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        for g in generators {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            chain.absorb(0, g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Exact group order as the product of basic orbit lengths. Saturates at
    /// `u128::MAX`, far beyond any group this crate can handle.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    /// Strips `g` through the chain starting at `level`, returning the residue
    /// and the level where sifting stopped (`levels.len()` if it passed all).
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let image = g.image(level.base);
            match level.rep(image) {
                Some((_, inv)) => g = g.then(inv),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g.clone(), 0).0.is_identity()
    }

    /// Adds `g` (which fixes all base points before `level`) to the group
    /// stabilizing those points, restoring the chain invariants below it.
    fn absorb(&mut self, level: usize, g: Permutation) {
        let (residue, _) = self.sift(g, level);
        if residue.is_identity() {
            return;
        }
        if level == self.levels.len() {
            let base = residue.first_moved_point().expect("non-identity residue moves a point");
            self.levels.push(Level::new(base, self.degree));
        }
        self.levels[level].generators.push(residue);
        self.levels[level].extend_orbit();

        // Schreier generators u_x * s * u_{s(x)}^-1 must lie in the next
        // stabilizer. Re-checking every pair keeps the routine simple; groups
        // handled here have small bases.
        let mut i = 0;
        while i < self.levels[level].orbit.len() {
            let mut j = 0;
            while j < self.levels[level].generators.len() {
                let lv = &self.levels[level];
                let x = lv.orbit[i];
                let s = &lv.generators[j];
                let (ux, _) = lv.rep(x).unwrap();
                let (_, uy_inv) = lv.rep(s.image(x)).unwrap();
                let schreier = ux.then(s).then(uy_inv);
                if !schreier.is_identity() {
                    let (res, _) = self.sift(schreier, level + 1);
                    if !res.is_identity() {
                        self.absorb(level + 1, res);
                    }
                }
                j += 1;
            }
            i += 1;
        }
    }

    /// Generators of the pointwise stabilizer of the first `depth` base points.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        let mut gens = Vec::new();
        for level in self.levels.iter().skip(depth) {
            gens.extend(level.generators.iter().cloned());
        }
        gens
    }

    /// An element of the group mapping the first base point to `point`.
    pub fn transversal_element(&self, point: usize) -> Option<Permutation> {
        self.levels.first().and_then(|l| l.rep(point)).map(|(u, _)| u.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=8usize {
            let gens = [cyc(n, &[&[0, 1]]), cyc(n, &[&(0..n).collect::<Vec<_>>()])];
            let chain = StabChain::new(n, &gens);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(chain.order(), fact, "S{n}");
        }
    }

    #[test]
    fn membership() {
        // A4 inside S4.
        let gens = [cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])];
        let chain = StabChain::new(4, &gens);
        assert_eq!(chain.order(), 12);
        assert!(chain.contains(&cyc(4, &[&[0, 1], &[2, 3]])));
        assert!(!chain.contains(&cyc(4, &[&[0, 1]])));
    }

    #[test]
    fn prescribed_base_gives_stabilizers() {
        let n = 6;
        let gens = [cyc(n, &[&[0, 1]]), cyc(n, &[&[0, 1, 2, 3, 4, 5]])];
        let chain = StabChain::with_base(n, &gens, &[5, 4]);
        assert_eq!(&chain.base()[..2], &[5, 4]);
        let stab = StabChain::new(n, &chain.stabilizer_generators(2));
        assert_eq!(stab.order(), 24);
        for g in chain.stabilizer_generators(2) {
            assert_eq!(g.image(5), 5);
            assert_eq!(g.image(4), 4);
        }
    }

    #[test]
    fn trivial_group() {
        let chain = StabChain::new(3, &[Permutation::identity(3)]);
        assert_eq!(chain.order(), 1);
        assert!(chain.contains(&Permutation::identity(3)));
    }
}
