use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros. Padding with zeros never changes the value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, rejecting sequences that increase anywhere.
    /// Trailing zeros are stripped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary entries into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The i-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_m_partition(&self, m: usize) -> bool {
        self.length() <= m
    }

    /// Parts padded with zeros to exactly `len` entries. Panics if the
    /// partition is longer than `len`.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        assert!(self.length() <= len, "cannot pad {self} to {len} entries");
        let mut v = self.0.clone();
        v.resize(len, 0);
        v
    }

    /// Conjugate partition: `mu_i = #{j : lambda_j >= i}`.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut mu = vec![0u32; cols];
        for &p in &self.0 {
            for slot in mu.iter_mut().take(p as usize) {
                *slot += 1;
            }
        }
        Partition(mu)
    }

    /// The partition with its first row removed.
    pub fn bar(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Componentwise sum after zero padding.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.length().max(other.length());
        let parts = (0..len).map(|i| self.part(i) + other.part(i)).collect();
        Partition(parts)
    }

    /// Componentwise difference, if it is again a partition.
    pub fn checked_sub(&self, other: &Partition) -> Option<Partition> {
        if other.length() > self.length() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.length());
        for i in 0..self.length() {
            parts.push(self.part(i).checked_sub(other.part(i))?);
        }
        Partition::new(parts).ok()
    }

    /// `c[i-1]` is the number of columns with exactly `i` boxes, i.e.
    /// `lambda_i - lambda_{i+1}`, for `i = 1..=length`.
    pub fn column_counts(&self) -> Vec<u32> {
        (0..self.length())
            .map(|i| self.part(i) - self.part(i + 1))
            .collect()
    }

    /// Whether `self` fits inside `other` componentwise.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.length() <= other.length() && (0..self.length()).all(|i| self.part(i) <= other.part(i))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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

/// Parses comma separated parts such as `34,6,2`; surrounding parentheses
/// are tolerated.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|t| {
                t.trim().parse::<u32>().map_err(|e| Error::PartitionSyntax {
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::PartitionSyntax {
            input: s.to_string(),
            reason: "parts must be weakly decreasing".into(),
        })
    }
}

#[macro_export]
macro_rules! partition {
    ($($p:expr),* $(,)?) => {
        $crate::combinatorics::Partition::new(vec![$($p as u32),*]).expect("valid partition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_strips_zeros() {
        let p = Partition::new(vec![3, 1, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[3, 1]);
        assert_eq!(p.length(), 2);
        assert_eq!(p.size(), 4);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(partition![2, 2].transpose(), partition![2, 2]);
        assert_eq!(partition![3].transpose(), partition![1, 1, 1]);
        let mut expected = vec![3, 3, 2, 2, 2, 2];
        expected.extend(std::iter::repeat_n(1, 28));
        assert_eq!(partition![34, 6, 2].transpose().parts(), expected.as_slice());
        assert_eq!(partition![34, 6, 2].transpose().transpose(), partition![34, 6, 2]);
    }

    #[test]
    fn add_examples() {
        assert_eq!(partition![6].add(&partition![6, 6]), partition![12, 6]);
        assert_eq!(partition![6, 6, 6].add(&partition![6, 6, 6]), partition![12, 12, 12]);
        assert_eq!(partition![8, 4].add(&partition![10, 2]), partition![18, 6]);
    }

    #[test]
    fn column_count_examples() {
        assert_eq!(partition![6, 6, 6].column_counts(), vec![0, 0, 6]);
        assert_eq!(partition![12, 6].column_counts(), vec![6, 6]);
        assert_eq!(partition![34, 6, 2].column_counts(), vec![28, 4, 2]);
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = "34,6,2".parse().unwrap();
        assert_eq!(p, partition![34, 6, 2]);
        assert_eq!(p.to_string(), "(34,6,2)");
        assert_eq!("(6,6)".parse::<Partition>().unwrap(), partition![6, 6]);
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn bar_and_sub() {
        assert_eq!(partition![10, 1, 1].bar(), partition![1, 1]);
        assert_eq!(partition![12, 12].checked_sub(&partition![6, 6]), Some(partition![6, 6]));
        assert_eq!(partition![12, 6].checked_sub(&partition![6, 6, 6]), None);
        assert_eq!(partition![7, 3].checked_sub(&partition![6, 6]), None);
    }

    #[test]
    fn serde_roundtrip_validates() {
        let p: Partition = serde_json::from_str("[5,3,0]").unwrap();
        assert_eq!(p, partition![5, 3]);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
