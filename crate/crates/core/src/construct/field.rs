/// The finite field GF(p^f) with elements encoded as `0..q`, the base-`p`
/// digits of an element being its polynomial coefficients (constant term
/// first) modulo a fixed irreducible polynomial.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: usize,
    f: u32,
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    primitive: usize,
}

/// Returns `(p, f)` when `q = p^f` for a prime `p`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..)
        .take_while(|d| d * d <= q)
        .find(|d| q.is_multiple_of(*d))
        .unwrap_or(q);
    let mut rest = q;
    let mut f = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

impl FiniteField {
    /// Builds GF(q) for a prime power `q <= 1024`.
    pub fn new(q: usize) -> Option<Self> {
        if q > 1024 {
            return None;
        }
        let (p, f) = prime_power(q as u64)?;
        let p = p as usize;
        let digits = |e: usize| -> Vec<usize> {
            let mut e = e;
            (0..f)
                .map(|_| {
                    let d = e % p;
                    e /= p;
                    d
                })
                .collect()
        };
        let encode = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &x| acc * p + x) };

        let mut add = vec![0u16; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&s) as u16;
            }
        }

        // Monic modulus x^f + c(x); the first c giving a field wins.
        for c in 0..q {
            let modulus = digits(c);
            let mul_poly = |a: &[usize], b: &[usize]| -> Vec<usize> {
                let mut prod = vec![0usize; 2 * f as usize];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (f as usize..prod.len()).rev() {
                    let lead = prod[k];
                    if lead == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    // x^f = -c(x)
                    for (i, m) in modulus.iter().enumerate() {
                        let idx = k - f as usize + i;
                        prod[idx] = (prod[idx] + lead * (p - m) % p) % p;
                    }
                }
                prod.truncate(f as usize);
                prod
            };
            let mut mul = vec![0u16; q * q];
            for a in 0..q {
                let da = digits(a);
                for b in 0..q {
                    mul[a * q + b] = encode(&mul_poly(&da, &digits(b))) as u16;
                }
            }
            let is_field = (1..q).all(|a| (1..q).all(|b| mul[a * q + b] != 0));
            if !is_field {
                continue;
            }
            let primitive = (1..q)
                .find(|&g| {
                    let mut x = g;
                    let mut order = 1;
                    while x != 1 {
                        x = mul[x * q + g] as usize;
                        order += 1;
                    }
                    order == q - 1
                })
                .expect("multiplicative group of a finite field is cyclic");
            return Some(Self {
                p,
                f,
                q,
                add,
                mul,
                primitive,
            });
        }
        None
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn primitive(&self) -> usize {
        self.primitive
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| (1..self.q).find(|&b| self.mul(a, b) == 1).unwrap())
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// The Frobenius map `a -> a^p`.
    pub fn frobenius(&self, a: usize) -> usize {
        self.pow(a, self.p)
    }

    /// An additive basis of the field over its prime field.
    pub fn additive_basis(&self) -> Vec<usize> {
        (0..self.f as usize).map(|i| self.pow(self.primitive, i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn field_axioms_small() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let k = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(k.add(a, 0), a);
                assert_eq!(k.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(k.mul(a, k.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    for c in [0, 1, q - 1] {
                        let lhs = k.mul(a, k.add(b, c));
                        let rhs = k.add(k.mul(a, b), k.mul(a, c));
                        assert_eq!(lhs, rhs, "distributivity in GF({q})");
                    }
                }
            }
            assert_eq!(k.pow(k.primitive(), q - 1), 1);
            // Frobenius is additive.
            assert_eq!(k.frobenius(k.add(2 % q, 1)), k.add(k.frobenius(2 % q), 1));
        }
    }
}
