//! Integer cocharacters of the diagonal torus.

use std::fmt;

/// Valuation vector `(k_1, ..., k_N)` encoding the torus element
/// `diag(p^{k_1}, ..., p^{k_N})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochar {
    vals: Vec<i64>,
}

impl Cochar {
    pub fn new(vals: Vec<i64>) -> Self {
        Cochar { vals }
    }

    pub fn zeros(n: usize) -> Self {
        Cochar { vals: vec![0; n] }
    }

    /// `diag(t, I)`: the head valuations followed by zeros, total length `n`.
    pub fn embedded(head: &[i64], n: usize) -> Self {
        assert!(head.len() <= n, "head longer than ambient rank");
        let mut vals = vec![0i64; n];
        vals[..head.len()].copy_from_slice(head);
        Cochar { vals }
    }

    pub fn len(&self) -> usize {
        self.vals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn val(&self, i: usize) -> i64 {
        self.vals[i]
    }

    pub fn vals(&self) -> &[i64] {
        &self.vals
    }

    /// Total valuation of the determinant.
    pub fn total(&self) -> i64 {
        self.vals.iter().sum()
    }
}

impl fmt::Display for Cochar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.vals.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}
