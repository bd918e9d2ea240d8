use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::{log2_big, BoundsError};
use crate::construct::prime_power;

/// The rows of the table of simple groups of Lie type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieFamily {
    /// PSL_n(q)
    Linear,
    /// PSU_n(q)
    Unitary,
    /// PSp_{2n}(q)
    Symplectic,
    /// Ω_{2n+1}(q), q odd
    OrthogonalOdd,
    /// PΩ⁺_{2n}(q)
    OrthogonalPlus,
    /// PΩ⁻_{2n}(q)
    OrthogonalMinus,
    /// ²B₂(q²), q² = 2^f with f odd
    Suzuki,
    /// ²G₂(q²), q² = 3^f with f odd
    ReeG2,
    /// ²F₄(q²), q² = 2^f with f odd
    ReeF4,
    /// ³D₄(q)
    Triality,
    /// ²E₆(q)
    TwistedE6,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl LieFamily {
    pub const ALL: [LieFamily; 16] = [
        LieFamily::Linear,
        LieFamily::Unitary,
        LieFamily::Symplectic,
        LieFamily::OrthogonalOdd,
        LieFamily::OrthogonalPlus,
        LieFamily::OrthogonalMinus,
        LieFamily::Suzuki,
        LieFamily::ReeG2,
        LieFamily::ReeF4,
        LieFamily::Triality,
        LieFamily::TwistedE6,
        LieFamily::G2,
        LieFamily::F4,
        LieFamily::E6,
        LieFamily::E7,
        LieFamily::E8,
    ];

    /// Short tag used in catalog manifests.
    pub fn tag(self) -> &'static str {
        match self {
            LieFamily::Linear => "L",
            LieFamily::Unitary => "U",
            LieFamily::Symplectic => "S",
            LieFamily::OrthogonalOdd => "O",
            LieFamily::OrthogonalPlus => "O+",
            LieFamily::OrthogonalMinus => "O-",
            LieFamily::Suzuki => "2B2",
            LieFamily::ReeG2 => "2G2",
            LieFamily::ReeF4 => "2F4",
            LieFamily::Triality => "3D4",
            LieFamily::TwistedE6 => "2E6",
            LieFamily::G2 => "G2",
            LieFamily::F4 => "F4",
            LieFamily::E6 => "E6",
            LieFamily::E7 => "E7",
            LieFamily::E8 => "E8",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.tag() == tag)
    }

    /// Exceptional families have no rank parameter.
    fn fixed_rank(self) -> Option<u32> {
        match self {
            LieFamily::Suzuki | LieFamily::ReeG2 | LieFamily::G2 => Some(2),
            LieFamily::ReeF4 | LieFamily::Triality | LieFamily::F4 => Some(4),
            LieFamily::TwistedE6 | LieFamily::E6 => Some(6),
            LieFamily::E7 => Some(7),
            LieFamily::E8 => Some(8),
            _ => None,
        }
    }

    /// Suzuki and Ree groups: the field size `p^f` plays the role of `q²`.
    fn is_very_twisted(self) -> bool {
        matches!(self, LieFamily::Suzuki | LieFamily::ReeG2 | LieFamily::ReeF4)
    }
}

/// Family plus parameters `n`, `p`, `f` (with `q = p^f`).
///
/// `n` is the dimension for linear and unitary groups, the half-dimension for
/// symplectic and orthogonal groups, and ignored (set to the rank) for the
/// exceptional families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieFamilySpec {
    pub family: LieFamily,
    pub n: u32,
    pub p: u64,
    pub f: u32,
}

impl LieFamilySpec {
    pub fn new(family: LieFamily, n: u32, p: u64, f: u32) -> Result<Self, BoundsError> {
        let spec = Self {
            family,
            n: family.fixed_rank().unwrap_or(n),
            p,
            f,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Builds a spec from the field size `q` instead of `(p, f)`.
    pub fn with_q(family: LieFamily, n: u32, q: u64) -> Result<Self, BoundsError> {
        let (p, f) = prime_power(q).ok_or_else(|| BoundsError::InvalidSpec(format!("{q} is not a prime power")))?;
        Self::new(family, n, p, f)
    }

    pub fn q(&self) -> BigUint {
        BigUint::from(self.p).pow(self.f)
    }

    fn q_u64(&self) -> Option<u64> {
        self.p.checked_pow(self.f)
    }

    fn validate(&self) -> Result<(), BoundsError> {
        let bad = |why: &str| Err(BoundsError::InvalidSpec(format!("{self}: {why}")));
        if self.f == 0 || prime_power(self.p) != Some((self.p, 1)) {
            return bad("p must be prime and f positive");
        }
        let q = self.q_u64();
        let n = self.n;
        use LieFamily::*;
        match self.family {
            Linear if n < 2 => bad("n >= 2 required"),
            Linear if n == 2 && q.is_some_and(|q| q < 4) => bad("PSL_2(q) needs q >= 4"),
            Unitary if n < 3 => bad("n >= 3 required"),
            Unitary if n == 3 && q == Some(2) => bad("PSU_3(2) is solvable"),
            Symplectic if n < 2 => bad("n >= 2 required"),
            Symplectic if n == 2 && q == Some(2) => bad("PSp_4(2) is not simple"),
            OrthogonalOdd if n < 3 => bad("n >= 3 required"),
            OrthogonalOdd if self.p == 2 => bad("q must be odd"),
            OrthogonalPlus | OrthogonalMinus if n < 4 => bad("n >= 4 required"),
            Suzuki if self.p != 2 || self.f.is_multiple_of(2) || self.f < 3 => bad("needs p = 2 and odd f >= 3"),
            ReeG2 if self.p != 3 || self.f.is_multiple_of(2) || self.f < 3 => bad("needs p = 3 and odd f >= 3"),
            ReeF4 if self.p != 2 || self.f.is_multiple_of(2) => bad("needs p = 2 and odd f"),
            G2 if q == Some(2) => bad("G_2(2) is not simple"),
            _ => Ok(()),
        }
    }

    /// Lie rank `r` used in `k(T) >= q^r`: the rank of the underlying
    /// algebraic group.
    pub fn lie_rank(&self) -> u32 {
        use LieFamily::*;
        match self.family {
            Linear | Unitary => self.n - 1,
            Symplectic | OrthogonalOdd | OrthogonalPlus | OrthogonalMinus => self.n,
            other => other.fixed_rank().unwrap(),
        }
    }

    /// `q^r`, where for Suzuki and Ree groups `q` is the square root of the
    /// field size (so `q^r = p^{f r / 2}`, an integer since `r` is even).
    pub fn q_to_rank(&self) -> BigUint {
        let r = self.lie_rank();
        if self.family.is_very_twisted() {
            BigUint::from(self.p).pow(self.f * r / 2)
        } else {
            self.q().pow(r)
        }
    }
}

impl fmt::Display for LieFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.q();
        match self.family.fixed_rank() {
            Some(_) => write!(f, "{}({q})", self.family.tag()),
            None => write!(f, "{}_{}({q})", self.family.tag(), self.n),
        }
    }
}

/// Per-family parameters: `d`, `|Out|`, and bounds on `|Aut|`.
#[derive(Clone, Debug, PartialEq)]
pub struct SimpleGroupFacts {
    pub d: u64,
    pub out_order: u64,
    /// The tabulated upper bound on `|Aut(T)|`.
    pub aut_upper: BigUint,
    pub log2_aut_upper: f64,
    /// Exact `|Aut(T)|`, available for PSL_2 and PSL_3.
    pub exact_aut_order: Option<BigUint>,
    pub lie_rank: u32,
    /// Conventions worth flagging (ambiguous `d`, known problems with a row).
    pub notes: Vec<String>,
}

fn gcd(a: u64, b: &BigUint) -> u64 {
    (b % a).to_u64().unwrap().gcd(&a)
}

/// `|PΩ⁺_8(q)|`, only used to sanity-check the tabulated bound.
fn omega8_plus_order(q: &BigUint, d: u64) -> BigUint {
    let one = BigUint::one();
    let q2 = q * q;
    let q4 = &q2 * &q2;
    let q6 = &q4 * &q2;
    let q12 = &q6 * &q6;
    q12 * (&q2 - &one) * (&q4 - &one) * (&q4 - &one) * (&q6 - &one) / BigUint::from(d)
}

/// `d`, `|Out(T)|` and the tabulated `|Aut(T)|` bound for a family.
pub fn lie_facts(spec: &LieFamilySpec) -> Result<SimpleGroupFacts, BoundsError> {
    spec.validate()?;
    use LieFamily::*;
    let q = spec.q();
    let one = BigUint::one();
    let f = spec.f as u64;
    let fb = BigUint::from(f);
    let n = spec.n;
    let p = spec.p;
    let mut notes = Vec::new();
    let (d, out, aut_upper): (u64, u64, BigUint) = match spec.family {
        Linear => {
            let d = gcd(n as u64, &(&q - &one));
            if n == 2 {
                notes.push("n = 2: |Out| = df with d = gcd(2, q-1)".into());
                (d, d * f, &fb * q.pow(3))
            } else {
                (d, 2 * d * f, 2u32 * &fb * q.pow(n * n - 1))
            }
        }
        Unitary => {
            let d = gcd(n as u64, &(&q + &one));
            (d, 2 * d * f, 2u32 * &fb * q.pow(n * n - 1))
        }
        Symplectic => {
            let d = gcd(2, &(&q - &one));
            if n == 2 {
                (d, 2 * f, 2u32 * &fb * q.pow(10))
            } else {
                (d, d * f, &fb * q.pow(2 * n * n + n))
            }
        }
        OrthogonalOdd => (2, 2 * f, &fb * q.pow(2 * n * n + n)),
        OrthogonalPlus if n == 4 => {
            let d = gcd(4, &(q.pow(4) - &one));
            let bound = 2u32 * &fb * q.pow(28);
            let actual = BigUint::from(6 * d * f) * omega8_plus_order(&q, d);
            if actual > bound {
                notes.push(format!("tabulated bound 2fq^28 = {bound} is below 6df|T| = {actual}"));
            }
            (d, 6 * d * f, bound)
        }
        OrthogonalPlus => {
            let d = gcd(4, &(q.pow(n) - &one));
            (d, 2 * d * f, 2u32 * &fb * q.pow(2 * n * n - n))
        }
        OrthogonalMinus => {
            let d = gcd(4, &(q.pow(n) + &one));
            (d, 2 * d * f, 2u32 * &fb * q.pow(2 * n * n - n))
        }
        Suzuki => (1, f, &fb * BigUint::from(2u32).pow(5 * spec.f)),
        ReeG2 => (1, f, &fb * BigUint::from(3u32).pow(7 * spec.f)),
        ReeF4 => (1, f, &fb * BigUint::from(2u32).pow(26 * spec.f)),
        Triality => (1, 3 * f, 6u32 * &fb * q.pow(28)),
        TwistedE6 => {
            let d = gcd(3, &(&q + &one));
            (d, 2 * d * f, 2u32 * &fb * q.pow(78))
        }
        G2 => {
            let m = if p == 3 { 2 } else { 1 };
            (1, m * f, m * &fb * q.pow(14))
        }
        F4 => {
            let m = if p == 2 { 2 } else { 1 };
            (1, m * f, m * &fb * q.pow(52))
        }
        E6 => {
            let d = gcd(3, &(&q - &one));
            (d, 2 * d * f, 2u32 * &fb * q.pow(78))
        }
        E7 => {
            let d = gcd(2, &(&q - &one));
            (d, d * f, &fb * q.pow(133))
        }
        E8 => (1, f, &fb * q.pow(248)),
    };

    let exact_aut_order = match (spec.family, n) {
        (Linear, 2) => Some(&q * (&q * &q - &one) * &fb),
        (Linear, 3) => Some(2u32 * &fb * q.pow(3) * (q.pow(2) - &one) * (q.pow(3) - &one)),
        _ => None,
    };
    Ok(SimpleGroupFacts {
        d,
        out_order: out,
        log2_aut_upper: log2_big(&aut_upper),
        aut_upper,
        exact_aut_order,
        lie_rank: spec.lie_rank(),
        notes,
    })
}
