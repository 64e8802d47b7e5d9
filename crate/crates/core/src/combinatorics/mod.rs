//! Partitions, permutations, cycle types, and their enumerations.

mod partition;
mod permutation;

pub use partition::{enumerate_partitions, Partition};
pub use permutation::{enumerate_permutations, CycleType, Permutation};

pub(crate) use partition::factorial_u128;
