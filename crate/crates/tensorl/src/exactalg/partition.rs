//! Integer partitions indexing dominant cocharacters.

use std::fmt;

/// Weakly decreasing list of positive parts (trailing zeros trimmed away).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros. Panics if `parts` is not
    /// weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part at `i` (0-indexed), zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n`, as cocharacter valuations.
    pub fn to_cochar_vals(&self, n: usize) -> Vec<i64> {
        (0..n).map(|i| self.part(i) as i64).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// All partitions of weight at most `max_weight` with at most `max_rows`
/// parts, the empty partition included.
pub fn partitions_bounded(max_weight: u32, max_rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(
        out: &mut Vec<Partition>,
        current: &mut Vec<u32>,
        remaining: u32,
        max_part: u32,
        rows_left: usize,
    ) {
        out.push(Partition::new(current.clone()));
        if rows_left == 0 {
            return;
        }
        let cap = max_part.min(remaining);
        for p in (1..=cap).rev() {
            current.push(p);
            rec(out, current, remaining - p, p, rows_left - 1);
            current.pop();
        }
    }
    rec(&mut out, &mut current, max_weight, max_weight, max_rows);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        // partitions of weight <= 4 into <= 2 rows:
        // (), (1), (2), (3), (4), (1,1), (2,1), (2,2), (3,1)
        let ps = partitions_bounded(4, 2);
        assert_eq!(ps.len(), 9);
        assert!(ps.contains(&Partition::new(vec![2, 2])));
        assert!(!ps.contains(&Partition::new(vec![2, 1, 1])));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]), Partition::new(vec![2, 1]));
        assert_eq!(Partition::new(vec![0]).weight(), 0);
    }

    #[test]
    #[should_panic(expected = "weakly decreasing")]
    fn increasing_rejected() {
        Partition::new(vec![1, 2]);
    }
}
