use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::GammaError;

/// A strictly decreasing sequence of positive integers.
///
/// Ordered by size first, then lexicographically, so that canonical output
/// lists higher-degree basis symbols together.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, GammaError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(GammaError::NotStrict(parts));
        }
        Ok(StrictPartition(parts))
    }

    /// Sorts and checks distinctness; zero parts are dropped.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Option<Self> {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All strict partitions of `n`.
    pub fn all_of_size(n: u32) -> Vec<StrictPartition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if rem == 0 {
                out.push(StrictPartition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Strict partitions contained in the staircase `(n, n-1, …, 1)`.
    pub fn in_staircase(n: u32) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let parts: Vec<u32> = (1..=n).rev().filter(|&p| mask & (1 << (p - 1)) != 0).collect();
            out.push(StrictPartition(parts));
        }
        out.sort();
        out
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = GammaError;
    fn try_from(v: Vec<u32>) -> Result<Self, GammaError> {
        StrictPartition::new(v)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Vec<u32> {
        p.0
    }
}

impl Ord for StrictPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for StrictPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A strictly decreasing sequence of nonnegative integers; only the last
/// part may be zero. Lengths of type-D partitions matter: `(k)` and
/// `(k, 0)` are different.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct TypeDPartition(Vec<u32>);

impl TypeDPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, GammaError> {
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(GammaError::NotStrict(parts));
        }
        Ok(TypeDPartition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ(+)`: every part increased by one.
    pub fn plus(&self) -> StrictPartition {
        StrictPartition(self.0.iter().map(|p| p + 1).collect())
    }

    /// Every type-D partition with largest part at most `max`.
    pub fn all_bounded(max: u32) -> Vec<TypeDPartition> {
        let mut out = Vec::new();
        for mask in 0u64..(1 << (max + 1)) {
            let parts: Vec<u32> = (0..=max).rev().filter(|&p| mask & (1 << p) != 0).collect();
            out.push(TypeDPartition(parts));
        }
        out.sort();
        out
    }
}

impl fmt::Debug for TypeDPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for TypeDPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
