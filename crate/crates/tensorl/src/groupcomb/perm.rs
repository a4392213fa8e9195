//! Permutation (Weyl) matrices and their conjugation actions.

use std::fmt;

use super::cochar::Cochar;
use crate::{Error, Result};

/// Permutation matrix of size `N`, stored as the image of each row index:
/// the matrix has a `1` at `(i, img[i])` (0-indexed) and zeros elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermMat {
    img: Vec<usize>,
}

impl PermMat {
    pub fn identity(n: usize) -> Self {
        PermMat {
            img: (0..n).collect(),
        }
    }

    /// Builds from row images, verifying bijectivity.
    pub fn from_images(img: Vec<usize>) -> Result<Self> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &j in &img {
            if j >= n || seen[j] {
                return Err(Error::internal(
                    "perm_bijection",
                    format!("row images {img:?} are not a bijection"),
                ));
            }
            seen[j] = true;
        }
        Ok(PermMat { img })
    }

    pub fn size(&self) -> usize {
        self.img.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.img[i]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> PermMat {
        let mut inv = vec![0; self.img.len()];
        for (i, &j) in self.img.iter().enumerate() {
            inv[j] = i;
        }
        PermMat { img: inv }
    }

    /// Positions of the nonzero entries, as 0-indexed `(row, col)` pairs.
    pub fn one_positions(&self) -> Vec<(usize, usize)> {
        self.img.iter().enumerate().map(|(i, &j)| (i, j)).collect()
    }

    /// `w * diag(p^c) * w^{-1}`: the diagonal entry at position `i` of the
    /// conjugate is the entry of `c` at `img[i]`.
    pub fn conj_cochar(&self, c: &Cochar) -> Cochar {
        assert_eq!(c.len(), self.size(), "cocharacter length mismatch");
        Cochar::new(self.img.iter().map(|&j| c.val(j)).collect())
    }

    /// Image of the elementary coordinate `(i, j)` under `w E_{ij} w^{-1}`:
    /// the conjugate has its entry at `(w^{-1}(i), w^{-1}(j))`.
    pub fn conj_coord(&self, coord: (usize, usize), inv: &PermMat) -> (usize, usize) {
        (inv.img[coord.0], inv.img[coord.1])
    }
}

impl fmt::Display for PermMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.img)
    }
}

/// Block-diagonal Weyl element with `r` blocks, each reversing `1..nm`.
pub fn build_wj(n: usize, m: usize, r: usize) -> PermMat {
    let nm = n * m;
    let mut img = Vec::with_capacity(nm * r);
    for b in 0..r {
        for a in 0..nm {
            img.push(b * nm + (nm - 1 - a));
        }
    }
    PermMat { img }
}

/// The interleaving Weyl element of GL(nrm): its nonzero entries sit at
/// `(a + b·nm, (a-1)·r + b + 1)` in 1-indexed terms, for `1 <= a <= nm` and
/// `0 <= b <= r-1`. Conjugation by it carries the block structure of `nm`
/// blocks of size `r` into `r` blocks of size `nm`.
pub fn build_w0(n: usize, m: usize, r: usize) -> Result<PermMat> {
    let nm = n * m;
    let size = nm * r;
    let mut img = vec![usize::MAX; size];
    for a in 1..=nm {
        for b in 0..r {
            let row = a + b * nm; // 1-indexed
            let col = (a - 1) * r + b + 1; // 1-indexed
            img[row - 1] = col - 1;
        }
    }
    PermMat::from_images(img)
}
