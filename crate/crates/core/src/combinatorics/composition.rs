use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Partition, Permutation, SetPartition};
use crate::error::{Error, Result};

/// A composition of `n`: an ordered sequence of positive parts, identified with
/// the set partition of `[1, n]` into consecutive intervals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Self { parts })
    }

    /// The one-block composition `(n)`; empty when `n = 0`.
    pub fn single(n: usize) -> Self {
        Self { parts: if n == 0 { Vec::new() } else { vec![n] } }
    }

    /// `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// The hook `(k, 1^{n-k})`, `1 ≤ k ≤ n`.
    pub fn hook(k: usize, n: usize) -> Self {
        assert!(k >= 1 && k <= n, "hook ({k}, 1^{}) invalid", n.saturating_sub(k));
        let mut parts = vec![k];
        parts.extend(std::iter::repeat(1).take(n - k));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Partial sums `{c_1, c_1+c_2, …, n}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        self.parts
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }

    pub fn from_descents(n: usize, descents: &BTreeSet<usize>) -> Self {
        let mut parts = Vec::new();
        let mut prev = 0;
        for &d in descents.iter().filter(|&&d| d > 0 && d < n) {
            parts.push(d - prev);
            prev = d;
        }
        if n > prev {
            parts.push(n - prev);
        }
        Self { parts }
    }

    /// Complement of the descent set in `[1, n]`.
    pub fn code(&self) -> BTreeSet<usize> {
        let d = self.descents();
        (1..=self.size()).filter(|i| !d.contains(i)).collect()
    }

    pub fn from_code(n: usize, code: &BTreeSet<usize>) -> Self {
        let descents = (1..=n).filter(|i| !code.contains(i)).collect();
        Self::from_descents(n, &descents)
    }

    /// Finest composition coarsening both; its descent set is the intersection.
    pub fn join(&self, other: &Composition) -> Result<Composition> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        let d: BTreeSet<usize> = self.descents().intersection(&other.descents()).copied().collect();
        Ok(Self::from_descents(self.size(), &d))
    }

    /// Whether `self` is a coarsening of `finer` (`π(self) ≥ π(finer)`).
    pub fn coarsens(&self, finer: &Composition) -> bool {
        self.size() == finer.size() && self.descents().is_subset(&finer.descents())
    }

    /// All coarsenings of `self`, including itself.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.size();
        let internal: Vec<usize> = self.descents().into_iter().filter(|&d| d < n).collect();
        let mut out = Vec::with_capacity(1 << internal.len());
        for mask in 0u64..(1u64 << internal.len()) {
            let keep: BTreeSet<usize> = internal
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &d)| d)
                .collect();
            out.push(Self::from_descents(n, &keep));
        }
        out.sort();
        out
    }

    /// Integer intervals (0-based, half-open) of the blocks.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&p| {
                let r = start..start + p;
                start += p;
                r
            })
            .collect()
    }

    pub fn set_partition(&self) -> SetPartition {
        let blocks = self.blocks().into_iter().map(|r| (r.start + 1..=r.end).collect()).collect();
        SetPartition::from_blocks(self.size(), blocks).expect("intervals partition [1, n]")
    }

    /// Whether `σ` maps every block of `π(c)` to itself.
    pub fn preserves(&self, sigma: &Permutation) -> bool {
        sigma.n() == self.size()
            && self.blocks().iter().all(|r| r.clone().all(|i| r.contains(&(sigma.image(i + 1) - 1))))
    }

    /// `c↑n`: append the part `n - |c|`, dropped when zero.
    pub fn complete_up(&self, n: usize) -> Result<Composition> {
        let size = self.size();
        if size > n {
            return Err(Error::CompletionUndefined { partition: self.parts.clone(), n });
        }
        let mut parts = self.parts.clone();
        if n > size {
            parts.push(n - size);
        }
        Ok(Self { parts })
    }

    /// If `self = (k, 1^{n-k})`, returns `k`.
    pub fn hook_size(&self) -> Option<usize> {
        match self.parts.split_first() {
            None => None,
            Some((&k, rest)) => rest.iter().all(|&p| p == 1).then_some(k),
        }
    }

    pub fn to_partition(&self) -> Partition {
        Partition::new(self.parts.clone())
    }
}

/// Möbius function on the coarsening order: `(-1)^{ℓ(c) - ℓ(d)}` for `d ≥ c`.
pub fn mobius(c: &Composition, d: &Composition) -> Result<i32> {
    if !d.coarsens(c) {
        return Err(Error::NotCoarsening { fine: c.parts.clone(), coarse: d.parts.clone() });
    }
    Ok(if (c.len() - d.len()) % 2 == 0 { 1 } else { -1 })
}

/// All `2^{n-1}` compositions of `n` (one, the empty composition, for `n = 0`).
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::default()];
    }
    let mut out: Vec<Composition> = (0u64..1u64 << (n - 1))
        .map(|mask| {
            let d: BTreeSet<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            Composition::from_descents(n, &d)
        })
        .collect();
    out.sort();
    out
}

/// Minimal-length representatives of the right cosets `S_c\S_n`: the shuffles of
/// the increasing words on the blocks, sorted lexicographically.
pub fn distinguished_reps(c: &Composition) -> Vec<Permutation> {
    let n = c.size();
    let blocks = c.blocks();
    let mut labels: Vec<usize> = Vec::with_capacity(n);
    for (b, r) in blocks.iter().enumerate() {
        labels.extend(std::iter::repeat(b).take(r.len()));
    }
    let mut out = Vec::new();
    // Lexicographic enumeration of label arrangements; filling each block's
    // values in increasing order preserves lexicographic order on words.
    loop {
        let mut next_val: Vec<u8> = blocks.iter().map(|r| r.start as u8 + 1).collect();
        let word: Vec<u8> = labels
            .iter()
            .map(|&b| {
                let v = next_val[b];
                next_val[b] += 1;
                v
            })
            .collect();
        out.push(Permutation::from_bytes_unchecked(word));
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| labels[i] < labels[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| labels[j] > labels[i]).unwrap();
        labels.swap(i, j);
        labels[i + 1..].reverse();
    }
    out
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Composition::default());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("composition {s:?}")))?;
        Composition::new(parts)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Composition::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
