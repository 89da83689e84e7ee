//! Integer partitions and their reverse-lexicographic enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::binomial;

/// Weakly decreasing sequence of positive parts. The derived `Ord` is the
/// lexicographic order on parts, so `3+3 < 4+1+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

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

impl Partition {
    /// Parts may be given in any order; they are sorted decreasingly.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::MalformedPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::MalformedPartition("zero part".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `|λ|`.
    pub fn n(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ C(λ_i, k)`.
    pub fn weighted(&self, k: u64) -> u64 {
        self.0.iter().map(|&p| binomial(p as u64, k)).sum()
    }

    /// `Σ C(λ_i, 2)`, the number of non-edges of the associated complex.
    pub fn weight2(&self) -> u64 {
        self.weighted(2)
    }

    /// `(value, multiplicity)` pairs in decreasing order of value.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The m-sequence `(λ_1 - 1, ..., λ_ℓ - 1)`.
    pub fn m_sequence(&self) -> Vec<usize> {
        self.0.iter().map(|&p| p as usize - 1).collect()
    }

    pub fn largest(&self) -> u32 {
        self.0[0]
    }

    /// Compact table notation: parts written out, repeated 1s collapsed to
    /// `1xk`. `3+2+1+1` renders as `3 2 1x2`, `2+2+2` as `2 2 2`.
    pub fn compact(&self) -> String {
        let mut tokens: Vec<String> = Vec::new();
        for (value, count) in self.multiplicities() {
            if value == 1 && count > 1 {
                tokens.push(format!("1x{count}"));
            } else {
                tokens.extend(std::iter::repeat_n(value.to_string(), count));
            }
        }
        tokens.join(" ")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Accepts `3+1+1` and `[3,1,1]`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, sep) = if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::MalformedPartition(format!("unclosed bracket in {s:?}")))?;
            (inner, ',')
        } else {
            (s, '+')
        };
        let parts = body
            .split(sep)
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::MalformedPartition(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Every partition of `n` exactly once, in reverse-lexicographic order
/// (`4, 3+1, 2+2, 2+1+1, 1+1+1+1`). Yields nothing for `n = 0`.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions { next: (n > 0).then(|| vec![n as u32]) }
}

#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut parts = current.clone();
        let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
        parts.truncate(parts.len() - ones);
        if let Some(last) = parts.pop() {
            // split the smallest part above 1 and refill greedily with parts of
            // size `last - 1`
            let size = last - 1;
            let mut remaining = ones as u32 + last;
            while remaining >= size {
                parts.push(size);
                remaining -= size;
            }
            if remaining > 0 {
                parts.push(remaining);
            }
            self.next = Some(parts);
        }
        Some(Partition(current))
    }
}
