//! Conjugacy-class counts, automorphism-orbit counts and the inequalities
//! that bound them, for permutation groups of small degree.

pub mod autorbits;
pub mod bounds;
pub mod construct;
pub mod corpus;
pub mod lemmas;
pub mod permcore;
pub mod report;
pub mod verifier;
