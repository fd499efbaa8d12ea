use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use super::{Partition, SetPartition};
use crate::error::{Error, Result};

/// A permutation of `[1, n]` in one-line notation.
///
/// Products compose right to left: `(σ·τ)(i) = σ(τ(i))`. Under this
/// convention `w·s_i` swaps the letters in positions `i, i+1` of the word and
/// `s_i·w` swaps the values `i, i+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "degree {n} too large");
        Self { word: (1..=n as u8).collect() }
    }

    /// The elementary transposition `s_i = (i, i+1)` in `S_n`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { index: i, n });
        }
        let mut p = Self::identity(n);
        p.word.swap(i - 1, i);
        Ok(p)
    }

    pub fn from_word(word: &[usize]) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(word.to_vec()));
        }
        for &v in word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(word.to_vec()));
            }
            seen[v] = true;
        }
        Ok(Self { word: word.iter().map(|&v| v as u8).collect() })
    }

    pub(crate) fn from_bytes_unchecked(word: Vec<u8>) -> Self {
        Self { word }
    }

    /// Product of elementary transpositions `s_{i_1} ··· s_{i_r}`.
    pub fn from_generators(n: usize, gens: &[usize]) -> Result<Self> {
        let mut p = Self::identity(n);
        for &i in gens {
            if i == 0 || i >= n {
                return Err(Error::GeneratorOutOfRange { index: i, n });
            }
            p.word.swap(i - 1, i);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn bytes(&self) -> &[u8] {
        &self.word
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn image(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        Ok(Self {
            word: other.word.iter().map(|&v| self.word[v as usize - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Self { word: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `self · s_i`: swaps positions `i, i+1`.
    pub fn mul_generator_right(&self, i: usize) -> Permutation {
        let mut w = self.word.clone();
        w.swap(i - 1, i);
        Self { word: w }
    }

    /// `s_i · self`: swaps values `i, i+1`.
    pub fn mul_generator_left(&self, i: usize) -> Permutation {
        Self {
            word: self
                .word
                .iter()
                .map(|&v| {
                    if v as usize == i {
                        v + 1
                    } else if v as usize == i + 1 {
                        v - 1
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    /// Positions `i` with `σ(i) > σ(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.word[i - 1] > self.word[i]).collect()
    }

    /// Values `i` such that `i+1` appears to the left of `i`; the descents of the inverse.
    pub fn recoils(&self) -> Vec<usize> {
        self.inverse().descents()
    }

    /// Lexicographically smallest reduced word, built by repeatedly stripping
    /// the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut pos = vec![0usize; self.n() + 2];
        for (i, &v) in self.word.iter().enumerate() {
            pos[v as usize] = i;
        }
        let mut out = Vec::with_capacity(self.length());
        'outer: loop {
            for i in 1..self.n() {
                if pos[i + 1] < pos[i] {
                    out.push(i);
                    pos.swap(i, i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        out
    }

    pub fn orbits(&self) -> SetPartition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut blocks = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut block = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                block.push(i);
                i = self.image(i);
            }
            blocks.push(block);
        }
        SetPartition::from_blocks(n, blocks).expect("orbits partition [1, n]")
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.orbits().blocks().iter().map(|b| b.len()).collect())
    }

    /// Embeds into `S_m`, `m ≥ n`, by appending fixed points.
    pub fn extend(&self, m: usize) -> Permutation {
        assert!(m >= self.n());
        let mut w = self.word.clone();
        w.extend((self.n() + 1..=m).map(|v| v as u8));
        Self { word: w }
    }

    /// Restriction to `[1, m]` when the points above `m` are fixed.
    pub fn restrict(&self, m: usize) -> Option<Permutation> {
        if m > self.n() {
            return None;
        }
        if (m + 1..=self.n()).all(|i| self.image(i) == i) {
            Some(Self { word: self.word[..m].to_vec() })
        } else {
            None
        }
    }

    /// Smallest `k ≥ 1` such that the permutation fixes every point above `k`.
    pub fn support_bound(&self) -> usize {
        (1..=self.n())
            .rev()
            .find(|&i| self.image(i) != i)
            .unwrap_or(1)
            .max(1)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Digit string for `n ≤ 9`, comma-separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("permutation {s:?}")))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse(format!("permutation {s:?}")))?
        };
        Permutation::from_word(&word)
    }
}

/// All permutations of `[1, n]` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut w: Vec<u8> = (1..=n as u8).collect();
    let mut out = vec![Permutation { word: w.clone() }];
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| w[j] > w[i]).unwrap();
        w.swap(i, j);
        w[i + 1..].reverse();
        out.push(Permutation { word: w.clone() });
    }
    out
}

/// Every reduced word of `p`, by recursion on left descents.
pub fn all_reduced_words(p: &Permutation) -> BTreeSet<Vec<usize>> {
    fn rec(p: &Permutation, prefix: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if p.is_identity() {
            out.insert(prefix.clone());
            return;
        }
        for i in p.recoils() {
            prefix.push(i);
            rec(&p.mul_generator_left(i), prefix, out);
            prefix.pop();
        }
    }
    let mut out = BTreeSet::new();
    rec(p, &mut Vec::new(), &mut out);
    out
}

/// Reduced words reachable from `start` by braid moves `i,i+1,i ↔ i+1,i,i+1`
/// and commutations `i,j ↔ j,i` for `|i - j| > 1`.
pub fn reduced_words_by_moves(start: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(w) = queue.pop_front() {
        let mut next = Vec::new();
        for k in 0..w.len().saturating_sub(1) {
            if w[k].abs_diff(w[k + 1]) > 1 {
                let mut v = w.clone();
                v.swap(k, k + 1);
                next.push(v);
            }
            if k + 2 < w.len() && w[k] == w[k + 2] && w[k].abs_diff(w[k + 1]) == 1 {
                let mut v = w.clone();
                v[k] = w[k + 1];
                v[k + 1] = w[k];
                v[k + 2] = w[k + 1];
                next.push(v);
            }
        }
        for v in next {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(p("123").length(), 0);
        assert_eq!(p("321").length(), 3);
        assert_eq!(p("24513").length(), 5);
    }

    #[test]
    fn reduced_words() {
        assert!(p("123").reduced_word().is_empty());
        assert_eq!(p("213").reduced_word(), vec![1]);
        assert_eq!(p("321").reduced_word(), vec![1, 2, 1]);
        let all = all_reduced_words(&p("321"));
        assert_eq!(all.into_iter().collect::<Vec<_>>(), vec![vec![1, 2, 1], vec![2, 1, 2]]);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(p("24513").cycle_type(), Partition::new(vec![3, 2]));
        assert_eq!(p("123").cycle_type(), Partition::new(vec![1, 1, 1]));
        assert_eq!(p("321").cycle_type(), Partition::new(vec![2, 1]));
    }

    #[test]
    fn composition_convention() {
        // (σ∘τ)(i) = σ(τ(i)); right multiplication by s_i swaps positions.
        let s1 = Permutation::generator(3, 1).unwrap();
        let s2 = Permutation::generator(3, 2).unwrap();
        assert_eq!(s1.compose(&s2).unwrap(), p("231"));
        assert_eq!(p("213").mul_generator_right(2), p("231"));
        assert_eq!(p("213").mul_generator_left(2), p("312"));
        assert_eq!(Permutation::from_generators(3, &[1, 2]).unwrap(), p("231"));
    }

    #[test]
    fn reduced_word_of_shuffle_example() {
        let w = Permutation::from_generators(7, &[2, 4, 3, 2, 1, 5, 4, 3, 2, 6, 5]).unwrap();
        assert_eq!(w, p("5613724"));
        assert_eq!(w.length(), 11);
    }

    #[test]
    fn display_wide() {
        let q = Permutation::identity(10);
        assert_eq!(q.to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!(q.to_string().parse::<Permutation>().unwrap(), q);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!("113".parse::<Permutation>().is_err());
        assert!("14".parse::<Permutation>().is_err());
    }

    #[test]
    fn lexicographic_enumeration() {
        let all = all_permutations(3);
        let words: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(words, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(all_permutations(0).len(), 1);
    }
}
