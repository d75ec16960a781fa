//! Integer partitions: weakly decreasing sequences of positive integers.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition. Parts are stored weakly decreasing; the empty partition is
/// valid. Serializes as a plain JSON array of parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Build from parts that must already be weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::MalformedPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// Build from parts in any order; zero parts are dropped.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p != 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// |λ| = sum of parts.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of `k` among the parts.
    pub fn multiplicity(&self, k: u32) -> u32 {
        self.0.iter().filter(|&&p| p == k).count() as u32
    }

    /// All parts even?
    pub fn all_even(&self) -> bool {
        self.0.iter().all(|&p| p % 2 == 0)
    }

    /// Halve every part; requires all parts even.
    pub fn halved(&self) -> Result<Self> {
        if !self.all_even() {
            return Err(Error::MalformedPartition(format!(
                "cannot halve partition with odd part: {self}"
            )));
        }
        Ok(Partition(self.0.iter().map(|&p| p / 2).collect()))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    /// `(2,1)` for nonempty partitions, `∅` for the empty one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in a deterministic order (descending first part).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen(n, n, &mut current, &mut out);
    return out;

    fn gen(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        let mut part = max_part.min(remaining);
        while part >= 1 {
            current.push(part);
            gen(remaining - part, part, current, out);
            current.pop();
            part -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts_match_known_values() {
        // p(0..9) = 1,1,2,3,5,7,11,15,22,30
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n as u32).len(), e, "p({n})");
        }
    }

    #[test]
    fn new_rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![3, 1, 1]).is_ok());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Partition::empty().to_string(), "∅");
        assert_eq!(Partition::new(vec![2, 1]).unwrap().to_string(), "(2,1)");
    }

    #[test]
    fn json_roundtrip() {
        let p = Partition::new(vec![3, 1]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[3,1]");
        let back: Partition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
