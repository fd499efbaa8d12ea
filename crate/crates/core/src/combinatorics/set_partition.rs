use std::fmt;

use crate::error::{Error, Result};

/// A set partition of `[1, n]`; blocks sorted internally and by minimum.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut out = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            for &i in &b {
                if i == 0 || i > n || seen[i] {
                    return Err(Error::Parse(format!("block element {i} invalid or repeated")));
                }
                seen[i] = true;
            }
            b.sort_unstable();
            out.push(b);
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::Parse("blocks do not cover [1, n]".into()));
        }
        out.sort();
        Ok(Self { n, blocks: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    fn labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.n + 1];
        for (k, b) in self.blocks.iter().enumerate() {
            for &i in b {
                label[i] = k;
            }
        }
        label
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        let l = other.labels();
        self.n == other.n && self.blocks.iter().all(|b| b.iter().all(|&i| l[i] == l[b[0]]))
    }

    /// Lattice join: the finest partition coarser than both.
    pub fn join(&self, other: &SetPartition) -> Result<SetPartition> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for b in self.blocks.iter().chain(other.blocks.iter()) {
            for w in b.windows(2) {
                let (a, c) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a.max(c)] = a.min(c);
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for i in 1..=self.n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        SetPartition::from_blocks(self.n, groups.into_values().collect())
    }

    /// The finest interval partition coarser than `self`.
    pub fn interval_closure(&self) -> SetPartition {
        let mut reach = vec![0; self.n + 1];
        for b in &self.blocks {
            let max = *b.last().unwrap();
            for &i in b {
                reach[i] = max;
            }
        }
        let mut blocks = Vec::new();
        let mut start = 1;
        while start <= self.n {
            let mut end = reach[start];
            let mut i = start;
            while i <= end {
                end = end.max(reach[i]);
                i += 1;
            }
            blocks.push((start..=end).collect());
            start = end + 1;
        }
        SetPartition { n: self.n, blocks }
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{{{}}}", s.join("|"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_and_closure() {
        let a = SetPartition::from_blocks(4, vec![vec![1, 3], vec![2], vec![4]]).unwrap();
        let b = SetPartition::from_blocks(4, vec![vec![1], vec![2], vec![3, 4]]).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j.blocks(), &[vec![1, 3, 4], vec![2]]);
        assert_eq!(j.interval_closure().blocks(), &[vec![1, 2, 3, 4]]);
        assert!(a.refines(&j));
        assert!(!j.refines(&a));
    }

    #[test]
    fn rejects_overlap() {
        assert!(SetPartition::from_blocks(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::from_blocks(3, vec![vec![1, 2]]).is_err());
    }
}
