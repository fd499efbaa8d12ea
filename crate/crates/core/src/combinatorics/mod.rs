//! Permutations, partitions, compositions, set partitions and coset representatives.

mod composition;
mod partition;
mod permutation;
mod set_partition;

use std::collections::BTreeMap;

pub use composition::{compositions, distinguished_reps, mobius, Composition};
pub use partition::{partitions, partitions_up_to, Partition};
pub use permutation::{all_permutations, all_reduced_words, reduced_words_by_moves, Permutation};
pub use set_partition::SetPartition;

use crate::error::{Error, Result};

/// Default cap on `n` for anything that enumerates all of `S_n`.
pub const ENUMERATION_BOUND: usize = 8;

/// For every cycle type of `S_n`, the minimal length and the lexicographically
/// first permutation attaining it.
pub fn minimal_class_elements(n: usize, bound: usize) -> Result<BTreeMap<Partition, (usize, Permutation)>> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let mut out: BTreeMap<Partition, (usize, Permutation)> = BTreeMap::new();
    for p in all_permutations(n) {
        let len = p.length();
        let entry = out.entry(p.cycle_type()).or_insert((usize::MAX, p.clone()));
        if len < entry.0 {
            *entry = (len, p);
        }
    }
    Ok(out)
}

pub fn min_length_in_class(lambda: &Partition) -> Result<usize> {
    min_length_in_class_with_bound(lambda, ENUMERATION_BOUND)
}

pub fn min_length_in_class_with_bound(lambda: &Partition, bound: usize) -> Result<usize> {
    let n = lambda.size();
    Ok(minimal_class_elements(n, bound)?[lambda].0)
}
