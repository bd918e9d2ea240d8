//! Standard permutation-group constructions used to author the bundled
//! catalog: natural actions of symmetric and alternating groups, projective
//! lines and planes over finite fields, Mathieu groups, and wreath/direct
//! products. Every construction is validated downstream by order checks.

mod field;
mod outer;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::permcore::{FiniteGroup, Permutation, StabChain};

pub use field::{prime_power, FiniteField};
pub use outer::{find_outer_involution, twisted_double};

/// A group `ambient` with a normal subgroup generated by `socle`, acting on
/// `degree` points.
#[derive(Clone, Debug)]
pub struct Construction {
    pub degree: usize,
    pub ambient: Vec<Permutation>,
    pub socle: Vec<Permutation>,
}

fn cycle(degree: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(degree, &[points]).expect("valid cycle")
}

pub fn symmetric_generators(n: usize) -> Vec<Permutation> {
    if n == 1 {
        return Vec::new();
    }
    vec![cycle(n, &[0, 1]), cycle(n, &(0..n).collect::<Vec<_>>())]
}

pub fn alternating_generators(n: usize) -> Vec<Permutation> {
    if n < 3 {
        return Vec::new();
    }
    // (0 1 2) together with an (n-1)- or n-cycle, whichever is even.
    let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
    vec![cycle(n, &[0, 1, 2]), cycle(n, &long)]
}

/// `S_n` acting naturally, with socle `A_n`.
pub fn symmetric_over_alternating(n: usize) -> Construction {
    Construction {
        degree: n,
        ambient: symmetric_generators(n),
        socle: alternating_generators(n),
    }
}

/// Points of the projective line over GF(q): field elements `0..q` and
/// infinity as `q`.
pub struct ProjectiveLine {
    pub field: FiniteField,
}

impl ProjectiveLine {
    pub fn new(q: usize) -> Option<Self> {
        FiniteField::new(q).map(|field| Self { field })
    }

    pub fn degree(&self) -> usize {
        self.field.order() + 1
    }

    /// The Möbius map `x -> (a x + b) / (c x + d)`; `ad - bc` must be nonzero.
    pub fn mobius(&self, a: usize, b: usize, c: usize, d: usize) -> Permutation {
        let k = &self.field;
        let q = k.order();
        let images = (0..=q)
            .map(|x| {
                let (num, den) = if x == q {
                    (a, c)
                } else {
                    (k.add(k.mul(a, x), b), k.add(k.mul(c, x), d))
                };
                match k.inv(den) {
                    Some(i) => k.mul(num, i),
                    None => q,
                }
            })
            .collect();
        Permutation::new(images).expect("invertible Möbius map")
    }

    pub fn frobenius(&self) -> Permutation {
        let q = self.field.order();
        let images = (0..=q)
            .map(|x| if x == q { q } else { self.field.frobenius(x) })
            .collect();
        Permutation::new(images).unwrap()
    }

    /// Generators of PSL_2(q): translations, multiplication by a square, and
    /// `x -> -1/x`.
    pub fn psl2_generators(&self) -> Vec<Permutation> {
        let k = &self.field;
        let w = k.primitive();
        let mut gens: Vec<Permutation> = k
            .additive_basis()
            .into_iter()
            .map(|t| self.mobius(1, t, 0, 1))
            .collect();
        gens.push(self.mobius(k.mul(w, w), 0, 0, 1));
        gens.push(self.mobius(0, k.neg(1), 1, 0));
        gens
    }

    /// Adds the diagonal automorphism `x -> w x`.
    pub fn pgl2_generators(&self) -> Vec<Permutation> {
        let mut gens = self.psl2_generators();
        gens.push(self.mobius(self.field.primitive(), 0, 0, 1));
        gens
    }

    /// PΓL_2(q) = Aut(PSL_2(q)) for q >= 4.
    pub fn pgaml2_generators(&self) -> Vec<Permutation> {
        let mut gens = self.pgl2_generators();
        if self.field.degree() > 1 {
            gens.push(self.frobenius());
        }
        gens
    }
}

/// PSL_2(q) inside its full automorphism group PΓL_2(q), on q + 1 points.
pub fn psl2_in_aut(q: usize) -> Option<Construction> {
    let line = ProjectiveLine::new(q)?;
    Some(Construction {
        degree: line.degree(),
        ambient: line.pgaml2_generators(),
        socle: line.psl2_generators(),
    })
}

/// PSL_2(q) inside PGL_2(q).
pub fn psl2_in_pgl2(q: usize) -> Option<Construction> {
    let line = ProjectiveLine::new(q)?;
    Some(Construction {
        degree: line.degree(),
        ambient: line.pgl2_generators(),
        socle: line.psl2_generators(),
    })
}

/// The projective plane PG(2, q) with points and lines indexed by
/// normalized coordinate vectors (first nonzero coordinate equal to 1).
pub struct ProjectivePlane {
    pub field: FiniteField,
    vectors: Vec<[usize; 3]>,
}

type Matrix = [[usize; 3]; 3];

impl ProjectivePlane {
    pub fn new(q: usize) -> Option<Self> {
        let field = FiniteField::new(q)?;
        let mut vectors = Vec::new();
        for a in 0..q {
            for b in 0..q {
                vectors.push([1, a, b]);
            }
        }
        for b in 0..q {
            vectors.push([0, 1, b]);
        }
        vectors.push([0, 0, 1]);
        Some(Self { field, vectors })
    }

    /// Number of points (equal to the number of lines).
    pub fn points(&self) -> usize {
        self.vectors.len()
    }

    fn normalize(&self, v: [usize; 3]) -> usize {
        let k = &self.field;
        let lead = v.iter().copied().find(|&x| x != 0).expect("nonzero vector");
        let s = k.inv(lead).unwrap();
        let n = [k.mul(v[0], s), k.mul(v[1], s), k.mul(v[2], s)];
        self.vectors.iter().position(|&w| w == n).unwrap()
    }

    fn row_times(&self, v: [usize; 3], m: &Matrix) -> [usize; 3] {
        let k = &self.field;
        let mut out = [0; 3];
        for (j, o) in out.iter_mut().enumerate() {
            for (i, &vi) in v.iter().enumerate() {
                *o = k.add(*o, k.mul(vi, m[i][j]));
            }
        }
        out
    }

    fn inverse_transpose(&self, m: &Matrix) -> Matrix {
        let k = &self.field;
        // Cofactor matrix divided by the determinant is the inverse transpose.
        let cof = |r: usize, c: usize| -> usize {
            let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
            let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
            let minor = k.sub(
                k.mul(m[rows[0]][cols[0]], m[rows[1]][cols[1]]),
                k.mul(m[rows[0]][cols[1]], m[rows[1]][cols[0]]),
            );
            if (r + c).is_multiple_of(2) {
                minor
            } else {
                k.neg(minor)
            }
        };
        let det = (0..3).fold(0, |acc, j| k.add(acc, k.mul(m[0][j], cof(0, j))));
        let inv_det = k.inv(det).expect("invertible matrix");
        let mut out = [[0; 3]; 3];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x = k.mul(cof(r, c), inv_det);
            }
        }
        out
    }

    /// The collineation `v -> v m` on points, with lines moved by the
    /// inverse transpose; points are `0..n`, lines `n..2n`.
    pub fn matrix_action(&self, m: &Matrix) -> Permutation {
        let n = self.points();
        let dual = self.inverse_transpose(m);
        let mut images = vec![0; 2 * n];
        for (i, &v) in self.vectors.iter().enumerate() {
            images[i] = self.normalize(self.row_times(v, m));
            images[n + i] = n + self.normalize(self.row_times(v, &dual));
        }
        Permutation::new(images).unwrap()
    }

    pub fn frobenius_action(&self) -> Permutation {
        let n = self.points();
        let mut images = vec![0; 2 * n];
        for (i, &v) in self.vectors.iter().enumerate() {
            let w = self.normalize(v.map(|x| self.field.frobenius(x)));
            images[i] = w;
            images[n + i] = n + w;
        }
        Permutation::new(images).unwrap()
    }

    /// The polarity swapping each point with the line of the same coordinates.
    pub fn polarity(&self) -> Permutation {
        let n = self.points();
        Permutation::new((0..2 * n).map(|i| (i + n) % (2 * n)).collect()).unwrap()
    }

    pub fn sl3_generators(&self) -> Vec<Permutation> {
        let mut gens = Vec::new();
        for (i, j) in [(0, 1), (1, 2), (2, 0)] {
            for t in self.field.additive_basis() {
                let mut m = [[0; 3]; 3];
                for (d, row) in m.iter_mut().enumerate() {
                    row[d] = 1;
                }
                m[i][j] = t;
                gens.push(self.matrix_action(&m));
            }
        }
        gens
    }

    /// PΓL_3(q): SL_3 plus a diagonal element and the field automorphism.
    pub fn pgaml3_generators(&self) -> Vec<Permutation> {
        let mut gens = self.sl3_generators();
        let mut diag = [[0; 3]; 3];
        diag[0][0] = self.field.primitive();
        diag[1][1] = 1;
        diag[2][2] = 1;
        gens.push(self.matrix_action(&diag));
        if self.field.degree() > 1 {
            gens.push(self.frobenius_action());
        }
        gens
    }
}

/// PSL_3(q) inside Aut(PSL_3(q)) = PΓL_3(q) extended by the polarity, acting
/// on the 2(q^2 + q + 1) points and lines of PG(2, q).
pub fn psl3_in_aut(q: usize) -> Option<Construction> {
    let plane = ProjectivePlane::new(q)?;
    let mut ambient = plane.pgaml3_generators();
    ambient.push(plane.polarity());
    Some(Construction {
        degree: 2 * plane.points(),
        ambient,
        socle: plane.sl3_generators(),
    })
}

fn perm_1based(degree: usize, cycles: &[&[usize]]) -> Permutation {
    let zero: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|&x| x - 1).collect()).collect();
    let refs: Vec<&[usize]> = zero.iter().map(|c| c.as_slice()).collect();
    Permutation::from_cycles(degree, &refs).expect("valid cycles")
}

/// M11 on 11 points.
pub fn mathieu11() -> Vec<Permutation> {
    vec![
        perm_1based(11, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]]),
        perm_1based(11, &[&[3, 7, 11, 8], &[4, 10, 5, 6]]),
    ]
}

/// M12 on 12 points.
pub fn mathieu12() -> Vec<Permutation> {
    vec![
        perm_1based(12, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]]),
        perm_1based(12, &[&[3, 7, 11, 8], &[4, 10, 5, 6]]),
        perm_1based(12, &[&[1, 12], &[2, 11], &[3, 6], &[4, 8], &[5, 9], &[7, 10]]),
    ]
}

/// M24 on 24 points.
pub fn mathieu24() -> Vec<Permutation> {
    vec![
        perm_1based(24, &[&(1..=23).collect::<Vec<_>>()]),
        perm_1based(
            24,
            &[
                &[3, 17, 10, 7, 9],
                &[4, 13, 14, 19, 5],
                &[8, 18, 11, 12, 23],
                &[15, 20, 22, 21, 16],
            ],
        ),
        perm_1based(
            24,
            &[
                &[1, 24],
                &[2, 23],
                &[3, 12],
                &[4, 16],
                &[5, 18],
                &[6, 10],
                &[7, 20],
                &[8, 14],
                &[9, 21],
                &[11, 17],
                &[13, 22],
                &[15, 19],
            ],
        ),
    ]
}

/// Restricts permutations fixing the set `removed` to the remaining points,
/// relabelled in increasing order.
fn restrict(perms: &[Permutation], removed: &[usize]) -> Vec<Permutation> {
    let degree = perms.first().map_or(0, |p| p.degree());
    let keep: Vec<usize> = (0..degree).filter(|x| !removed.contains(x)).collect();
    let mut relabel = vec![usize::MAX; degree];
    for (new, &old) in keep.iter().enumerate() {
        relabel[old] = new;
    }
    perms
        .iter()
        .map(|p| {
            Permutation::new(keep.iter().map(|&x| relabel[p.image(x)]).collect())
                .expect("permutation preserves the removed set")
        })
        .collect()
}

/// M22 inside M22:2 = Aut(M22) on 22 points, as the pointwise and setwise
/// stabilizers of two points in M24.
pub fn mathieu22_in_aut() -> Construction {
    let m24 = mathieu24();
    let (a, b) = (22, 23);
    let pointwise = StabChain::with_base(24, &m24, &[a, b]).stabilizer_generators(2);
    // An element swapping a and b: u maps a to b, then v in Stab(b) maps u(b)
    // back to a.
    let u = StabChain::with_base(24, &m24, &[a])
        .transversal_element(b)
        .expect("M24 is transitive");
    let c = u.image(b);
    let stab_b = StabChain::with_base(24, &m24, &[b]).stabilizer_generators(1);
    let w = StabChain::with_base(24, &stab_b, &[a])
        .transversal_element(c)
        .expect("Stab(b) is transitive on the rest");
    let swap = u.then(&w.inverse());
    debug_assert_eq!(swap.image(a), b);
    debug_assert_eq!(swap.image(b), a);

    let mut setwise = pointwise.clone();
    setwise.push(swap);
    Construction {
        degree: 22,
        ambient: restrict(&setwise, &[a, b]),
        socle: restrict(&pointwise, &[a, b]),
    }
}

/// M12 inside Aut(M12) acting on 24 points.
pub fn mathieu12_in_aut() -> Construction {
    let m12 = FiniteGroup::new(12, mathieu12()).unwrap();
    let sigma = find_outer_involution(&m12).expect("M12 has an outer involution");
    twisted_double(&m12, &sigma)
}

/// The direct product of `factors` acting on disjoint point blocks.
pub fn direct_product(factors: &[(usize, Vec<Permutation>)]) -> (usize, Vec<Vec<Permutation>>) {
    let degree: usize = factors.iter().map(|(d, _)| d).sum();
    let mut offset = 0;
    let mut out = Vec::new();
    for (d, gens) in factors {
        out.push(
            gens.iter()
                .map(|g| {
                    let images = (0..degree)
                        .map(|x| {
                            if x >= offset && x < offset + d {
                                offset + g.image(x - offset)
                            } else {
                                x
                            }
                        })
                        .collect();
                    Permutation::new(images).unwrap()
                })
                .collect(),
        );
        offset += d;
    }
    (degree, out)
}

/// The permutation of `copies * block` points swapping block 0 and block 1.
pub fn block_swap(block: usize, copies: usize) -> Permutation {
    let degree = block * copies;
    let images = (0..degree)
        .map(|x| match x / block {
            0 => x + block,
            1 => x - block,
            _ => x,
        })
        .collect();
    Permutation::new(images).unwrap()
}

/// `base ≀ S_2` in the imprimitive action on two blocks, with socle
/// `socle × socle`.
pub fn wreath_with_s2(c: &Construction) -> Construction {
    let (degree, blocks) = direct_product(&[(c.degree, c.ambient.clone()), (c.degree, c.ambient.clone())]);
    let (_, socle_blocks) = direct_product(&[(c.degree, c.socle.clone()), (c.degree, c.socle.clone())]);
    let mut ambient: Vec<Permutation> = blocks.concat();
    ambient.push(block_swap(c.degree, 2));
    Construction {
        degree,
        ambient,
        socle: socle_blocks.concat(),
    }
}

/// `A × A` with socle `T × T`; socle generators list the first factor first.
pub fn direct_square(c: &Construction) -> Construction {
    let (degree, blocks) = direct_product(&[(c.degree, c.ambient.clone()), (c.degree, c.ambient.clone())]);
    let (_, socle_blocks) = direct_product(&[(c.degree, c.socle.clone()), (c.degree, c.socle.clone())]);
    Construction {
        degree,
        ambient: blocks.concat(),
        socle: socle_blocks.concat(),
    }
}

/// Replaces a generating set by a smaller one with the same closure, trying
/// random pairs (then triples) of elements of the group. Deterministic for a
/// fixed seed.
pub fn reduce_generators(degree: usize, gens: &[Permutation], seed: u64) -> Vec<Permutation> {
    let chain = StabChain::new(degree, gens);
    let order = chain.order();
    if gens.len() <= 2 {
        return gens.to_vec();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Product replacement walk for roughly uniform random elements.
    let mut state: Vec<Permutation> = gens.to_vec();
    while state.len() < 10 {
        state.push(gens[state.len() % gens.len()].clone());
    }
    let mut random_element = |rng: &mut ChaCha8Rng| -> Permutation {
        let idx: Vec<usize> = (0..state.len()).collect();
        let pair: Vec<usize> = idx.choose_multiple(rng, 2).cloned().collect();
        let (i, j) = (pair[0], pair[1]);
        state[i] = state[i].then(&state[j]);
        state[i].clone()
    };
    for _ in 0..50 {
        random_element(&mut rng);
    }
    for size in 2..gens.len() {
        for _ in 0..200 {
            let candidate: Vec<Permutation> = (0..size).map(|_| random_element(&mut rng)).collect();
            if StabChain::new(degree, &candidate).order() == order {
                return candidate;
            }
        }
    }
    gens.to_vec()
}

/// A generating set for `ambient` that begins with `socle_gens`, padded with
/// as few extra random elements of the ambient as needed.
pub fn extend_generators(
    degree: usize,
    socle_gens: &[Permutation],
    ambient_gens: &[Permutation],
    seed: u64,
) -> Vec<Permutation> {
    let target = StabChain::new(degree, ambient_gens).order();
    let mut out = socle_gens.to_vec();
    if StabChain::new(degree, &out).order() == target {
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state: Vec<Permutation> = ambient_gens.to_vec();
    while state.len() < 10 {
        state.push(ambient_gens[state.len() % ambient_gens.len()].clone());
    }
    let idx: Vec<usize> = (0..state.len()).collect();
    let mut next = |rng: &mut ChaCha8Rng| {
        let pair: Vec<usize> = idx.choose_multiple(rng, 2).cloned().collect();
        state[pair[0]] = state[pair[0]].then(&state[pair[1]]);
        state[pair[0]].clone()
    };
    for _ in 0..50 {
        next(&mut rng);
    }
    for extra in 1..=ambient_gens.len() {
        for _ in 0..200 {
            let mut candidate = socle_gens.to_vec();
            candidate.extend((0..extra).map(|_| next(&mut rng)));
            if StabChain::new(degree, &candidate).order() == target {
                return candidate;
            }
        }
    }
    out.extend(ambient_gens.iter().cloned());
    out
}
