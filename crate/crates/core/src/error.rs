use thiserror::Error;

use crate::path::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("illegal character {ch:?} at index {index} (expected one of U, D, F, G)")]
    IllegalCharacter { ch: char, index: usize },
    #[error("unbalanced path: {ups} upsteps but {downs} downsteps")]
    UnbalancedPath { ups: usize, downs: usize },
    #[error("path dips below ground level at index {index}")]
    NegativePrefix { index: usize },
    #[error("step {step} at index {index} is not allowed in a {family} path")]
    FamilyViolation {
        family: Family,
        step: char,
        index: usize,
    },
    #[error("step at index {0} is not an upstep")]
    NotAnUpstep(usize),
    #[error("step at index {0} is not a flatstep")]
    NotAFlatstep(usize),
    #[error("index {index} is out of range for a path of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("expected a {expected} path, got a {found} path")]
    WrongFamily { expected: Family, found: Family },
    #[error("Dyck path contains UUU at index {0}")]
    NotUuuFree(usize),
    #[error("Motzkin path contains a green flatstep at index {0}")]
    HasGreenFlat(usize),
    #[error("Motzkin path contains a ground-level flatstep at index {0}")]
    HasGroundFlat(usize),
    #[error("input is the empty Dyck path, which has no preimage")]
    EmptyDyck,
    #[error("cannot decode path: {0}")]
    NotDecodable(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Path(#[from] PathError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("k = {k} is out of range for n = {n}")]
    KOutOfRange { n: usize, k: usize },
    #[error("n = {0} is out of range (need n >= 1)")]
    SizeOutOfRange(usize),
    #[error("{family} paths of size {n} would yield {count} paths, above the cap of {cap}")]
    SizeTooLarge {
        family: Family,
        n: usize,
        count: String,
        cap: u64,
    },
}
