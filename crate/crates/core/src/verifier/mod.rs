//! Theorem-level checks over the catalog: the base-3 bounds, the socle
//! inequalities, the reference tables and the c₂ constant.

mod checks;
mod shape;
mod suite;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::corpus::CorpusError;
use crate::permcore::GroupError;

pub use checks::{
    base3_report, bertram_report, note_auto, verify_base3_almost_simple, verify_bertram, verify_index_reduction,
    verify_socle_bounds,
};
pub use shape::{ShapeError, SocleFactor, SocleShape};
pub use suite::{compute_entry, run_suite, EntryData, SuiteOptions};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}` (expected tables, c2, lemmas, bertram, almost-simple, socle or all)")]
    UnknownSuite(String),
    #[error("index mismatch: expected {expected}, found {found}")]
    IndexMismatch { expected: u64, found: u128 },
    #[error("bad socle shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    C2,
    Lemmas,
    Bertram,
    AlmostSimple,
    Socle,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Tables,
        Suite::C2,
        Suite::Lemmas,
        Suite::Bertram,
        Suite::AlmostSimple,
        Suite::Socle,
        Suite::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::C2 => "c2",
            Suite::Lemmas => "lemmas",
            Suite::Bertram => "bertram",
            Suite::AlmostSimple => "almost-simple",
            Suite::Socle => "socle",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
