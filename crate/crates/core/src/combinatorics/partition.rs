use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive. The empty
/// partition is allowed.
///
/// Ordered by size, then reverse lexicographically, so `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of the part 1.
    pub fn m1(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::new();
        for i in 1..=self.largest() {
            out.push(self.parts.iter().filter(|&&p| p >= i).count());
        }
        Partition { parts: out }
    }

    /// Partial-sum comparison `self ≤ other`, padding with zeros. For partitions of
    /// different sizes this compares only the partial sums.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }

    /// `λ→n = (λ_1+1, …, λ_r+1, 1^{n-|λ|-ℓ(λ)})`.
    pub fn complete_arrow(&self, n: usize) -> Result<Partition> {
        let used = self.size() + self.len();
        if used > n {
            return Err(Error::CompletionUndefined { partition: self.parts.clone(), n });
        }
        let mut parts: Vec<usize> = self.parts.iter().map(|p| p + 1).collect();
        parts.extend(std::iter::repeat(1).take(n - used));
        Ok(Partition { parts })
    }

    /// `λ↑n`: append the part `n - |λ|` (dropped when zero) and re-sort.
    pub fn complete_up(&self, n: usize) -> Result<Partition> {
        let size = self.size();
        if size > n {
            return Err(Error::CompletionUndefined { partition: self.parts.clone(), n });
        }
        let mut parts = self.parts.clone();
        parts.push(n - size);
        Ok(Partition::new(parts))
    }

    /// Inverse of `→`: drop the parts equal to 1 and subtract 1 from the rest.
    pub fn strip_arrow(&self) -> Partition {
        Partition::new(self.parts.iter().map(|p| p - 1).collect())
    }

    /// The partition with one copy of its largest part removed.
    pub fn remove_largest(&self) -> Partition {
        Partition { parts: self.parts.iter().skip(1).copied().collect() }
    }

    /// The partition with one copy of the part `p` removed, if present.
    pub fn remove_part(&self, p: usize) -> Option<Partition> {
        let idx = self.parts.iter().position(|&x| x == p)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Partition { parts })
    }

    /// Distinct part values.
    pub fn distinct_parts(&self) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.dedup();
        v
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Comma-joined parts; the empty partition renders as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("partition {s:?}")))?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {s:?} has a zero part")));
        }
        Ok(Partition::new(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Partition::new(Vec::deserialize(d)?))
    }
}

/// Partitions of `n`, largest first in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `k`, in canonical order.
pub fn partitions_up_to(k: usize) -> Vec<Partition> {
    (0..=k).flat_map(partitions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn completions() {
        assert_eq!(p("2").complete_arrow(5).unwrap(), p("3,1,1"));
        assert_eq!(p("").complete_arrow(4).unwrap(), p("1,1,1,1"));
        assert_eq!(p("").complete_up(4).unwrap(), p("4"));
        assert_eq!(p("2,1").complete_up(5).unwrap(), p("2,2,1"));
        assert_eq!(p("3").complete_up(3).unwrap(), p("3"));
        assert!(p("2,1").complete_arrow(4).is_err());
        assert!(p("2,2").complete_up(3).is_err());
        assert_eq!(p("3,1,1").strip_arrow(), p("2"));
    }

    #[test]
    fn ordering_and_enumeration() {
        let all = partitions_up_to(3);
        let shown: Vec<String> = all.iter().map(|x| format!("{x:?}")).collect();
        assert_eq!(shown, ["()", "(1)", "(2)", "(1,1)", "(3)", "(2,1)", "(1,1,1)"]);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn conjugate_and_dominance() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert!(p("2,2").dominated_by(&p("3,1")));
        assert!(!p("3,1").dominated_by(&p("2,2")));
        assert!(p("1,1").dominated_by(&p("2")));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("1,x".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!(p("1,3"), p("3,1"));
    }
}
