use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad socle shape `{text}`: {why}")]
pub struct ShapeError {
    pub text: String,
    pub why: &'static str,
}

/// One minimal normal subgroup Mᵢ = Tᵢⁿⁱ, with kᵢ = k*(Tᵢ). `generators`
/// optionally selects which socle generators (inclusive index range)
/// generate Mᵢ; without it Mᵢ is the whole socle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SocleFactor {
    pub n: u32,
    pub k: u64,
    pub generators: Option<(usize, usize)>,
}

/// Declared structure of a socle M₁ × … × M_r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleShape {
    factors: Vec<SocleFactor>,
}

impl SocleShape {
    pub fn new(factors: Vec<SocleFactor>) -> Result<Self, ShapeError> {
        let bad = |why| ShapeError {
            text: format!("{factors:?}"),
            why,
        };
        if factors.is_empty() {
            return Err(bad("r must be at least 1"));
        }
        if factors.iter().any(|f| f.n == 0) {
            return Err(bad("every n_i must be at least 1"));
        }
        if factors.iter().any(|f| f.k < 4) {
            return Err(bad("every k_i must be at least 4"));
        }
        if factors.iter().any(|f| matches!(f.generators, Some((a, b)) if a > b)) {
            return Err(bad("empty generator range"));
        }
        Ok(Self { factors })
    }

    /// r = 1, one factor type.
    pub fn single(n: u32, k: u64) -> Result<Self, ShapeError> {
        Self::new(vec![SocleFactor { n, k, generators: None }])
    }

    pub fn factors(&self) -> &[SocleFactor] {
        &self.factors
    }

    pub fn r(&self) -> usize {
        self.factors.len()
    }

    /// n = Σ nᵢ.
    pub fn total_factors(&self) -> u32 {
        self.factors.iter().map(|f| f.n).sum()
    }
}

impl FromStr for SocleShape {
    type Err = ShapeError;

    /// `<n>x<k>[@a-b]`, factors joined by `;`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why| ShapeError {
            text: s.to_string(),
            why,
        };
        let mut factors = Vec::new();
        for part in s.split(';') {
            let (nk, range) = match part.split_once('@') {
                Some((nk, r)) => (nk, Some(r)),
                None => (part, None),
            };
            let (n, k) = nk.trim().split_once('x').ok_or(bad("expected <n>x<k>"))?;
            let n = n.parse().map_err(|_| bad("bad n"))?;
            let k = k.parse().map_err(|_| bad("bad k"))?;
            let generators = match range {
                None => None,
                Some(r) => {
                    let (a, b) = r.split_once('-').ok_or(bad("expected a-b range"))?;
                    Some((
                        a.parse().map_err(|_| bad("bad range"))?,
                        b.parse().map_err(|_| bad("bad range"))?,
                    ))
                }
            };
            factors.push(SocleFactor { n, k, generators });
        }
        Self::new(factors).map_err(|e| ShapeError {
            text: s.to_string(),
            ..e
        })
    }
}

impl fmt::Display for SocleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}x{}", factor.n, factor.k)?;
            if let Some((a, b)) = factor.generators {
                write!(f, "@{a}-{b}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s: SocleShape = "1x4@0-1;1x4@2-3".parse().unwrap();
        assert_eq!(s.r(), 2);
        assert_eq!(s.total_factors(), 2);
        assert_eq!(s.to_string(), "1x4@0-1;1x4@2-3");
        let w: SocleShape = "2x4".parse().unwrap();
        assert_eq!((w.r(), w.total_factors()), (1, 2));
    }

    #[test]
    fn rejects_invalid() {
        assert!("2x3".parse::<SocleShape>().is_err());
        assert!("0x4".parse::<SocleShape>().is_err());
        assert!("".parse::<SocleShape>().is_err());
        assert!("1x4@3-1".parse::<SocleShape>().is_err());
        assert!(SocleShape::new(vec![]).is_err());
    }
}
