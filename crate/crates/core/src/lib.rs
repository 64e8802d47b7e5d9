//! Exact computation of immanants and symmetric-group characters, plus the
//! linear-algebra checks needed to verify which matrix maps preserve a given
//! immanant.
//!
//! Everything is computed over exact integers and rationals; no floating
//! point appears anywhere. Sizes are desk-scale: character tables and
//! immanants up to n = 7 run in seconds, a few heavier scans accept n = 8
//! behind explicit opt-ins.

pub mod characters;
pub mod combinatorics;
pub mod exactlinalg;
pub mod immanants;
pub mod rational;
pub mod report;
pub mod stabilizer;
pub mod sweep;

use thiserror::Error;

/// Largest n for which permutations of S_n are enumerated in memory.
pub const PERMUTATION_CAP: usize = 9;

/// Largest n for which partitions are enumerated.
pub const PARTITION_CAP: usize = 50;

#[derive(Debug, Error)]
pub enum Error {
    #[error("n = {n} exceeds the supported cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("parameter must be nonzero: {0}")]
    ZeroParameter(String),
    #[error("character table invariant violated: {0}")]
    TableInvariant(String),
    #[error("could not parse {what}: {detail}")]
    Parse { what: String, detail: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
