//! Coordinate pattern groups for the unipotent subgroups entering the
//! torus-sum reduction.
//!
//! A pattern is a finite set of off-diagonal matrix positions in GL(N),
//! optionally with a marked subset carrying the additive character. The
//! groups here are always coordinate groups (one free entry per position),
//! so conjugation by a permutation matrix acts position-by-position.

use std::collections::BTreeSet;
use std::fmt;

use super::perm::{build_w0, PermMat};
use crate::{Error, Result};

/// Finite set of off-diagonal positions `(row, col)` in GL(N), 0-indexed,
/// with an optional character-support subset.
///
/// Positions are not restricted to the upper triangle: conjugating an
/// upper-triangular pattern by a Weyl element can legitimately land entries
/// in the lower block triangle, and the measure bookkeeping is the same.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordSet {
    ambient: usize,
    coords: BTreeSet<(usize, usize)>,
    charsupp: BTreeSet<(usize, usize)>,
}

impl CoordSet {
    pub fn empty(ambient: usize) -> Self {
        CoordSet {
            ambient,
            coords: BTreeSet::new(),
            charsupp: BTreeSet::new(),
        }
    }

    pub fn new(
        ambient: usize,
        coords: BTreeSet<(usize, usize)>,
        charsupp: BTreeSet<(usize, usize)>,
    ) -> Self {
        for &(i, j) in &coords {
            assert!(
                i != j && i < ambient && j < ambient,
                "bad coordinate ({i},{j})"
            );
        }
        assert!(
            charsupp.is_subset(&coords),
            "character support must lie inside the coordinate set"
        );
        CoordSet {
            ambient,
            coords,
            charsupp,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn contains(&self, coord: (usize, usize)) -> bool {
        self.coords.contains(&coord)
    }

    pub fn coords(&self) -> &BTreeSet<(usize, usize)> {
        &self.coords
    }

    pub fn charsupp(&self) -> &BTreeSet<(usize, usize)> {
        &self.charsupp
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.coords.iter().all(|&(i, j)| i < j)
    }

    /// Conjugate by a permutation matrix; character support is carried along.
    pub fn conj(&self, w: &PermMat) -> CoordSet {
        assert_eq!(w.size(), self.ambient, "permutation size mismatch");
        let inv = w.inverse();
        let coords = self.coords.iter().map(|&c| w.conj_coord(c, &inv)).collect();
        let charsupp = self
            .charsupp
            .iter()
            .map(|&c| w.conj_coord(c, &inv))
            .collect();
        CoordSet {
            ambient: self.ambient,
            coords,
            charsupp,
        }
    }

    /// Coordinate-wise set difference; the result carries no character.
    pub fn minus(&self, other: &CoordSet) -> CoordSet {
        assert_eq!(self.ambient, other.ambient);
        CoordSet {
            ambient: self.ambient,
            coords: self.coords.difference(&other.coords).copied().collect(),
            charsupp: BTreeSet::new(),
        }
    }

    pub fn is_disjoint(&self, other: &CoordSet) -> bool {
        self.coords.is_disjoint(&other.coords)
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, &(i, j)) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let star = if self.charsupp.contains(&(i, j)) {
                "*"
            } else {
                ""
            };
            write!(f, "({},{}){star}", i + 1, j + 1)?;
        }
        write!(f, "}}")
    }
}

/// The coordinate patterns feeding the torus-sum reduction, all inside
/// GL(nrm).
///
/// In the block structure with `nm` blocks of size `r`:
/// - `radical`: the full block-strictly-upper unipotent radical, character
///   supported on the diagonals of the superdiagonal blocks;
/// - `inblock_lower`: entries on or below the diagonal within each block;
/// - `reduced`: `inblock_lower` with the first superdiagonal block cut to
///   its diagonal.
///
/// In the conjugated structure with `r` blocks of size `nm`:
/// - `whittaker_blocks`: the strictly upper entries of the `r` diagonal
///   blocks, character on their superdiagonals;
/// - `complement`: what remains of the conjugated `reduced` pattern after
///   removing `whittaker_blocks` — these positions sit in the off-diagonal
///   blocks, strictly upper within each block and missing the block-local
///   `(1,2)` entry.
#[derive(Debug, Clone)]
pub struct UnipotentPatterns {
    pub radical: CoordSet,
    pub inblock_lower: CoordSet,
    pub reduced: CoordSet,
    pub whittaker_blocks: CoordSet,
    pub complement: CoordSet,
}

/// Builds all patterns for the given `(n, m, r)` and verifies the
/// conjugation split. Fails with an internal error if the conjugated
/// `reduced` pattern is not partitioned by `whittaker_blocks` plus an
/// off-diagonal-block complement of the expected in-block shape.
pub fn build_patterns(n: usize, m: usize, r: usize) -> Result<UnipotentPatterns> {
    assert!(n >= 1 && m >= 1 && r >= 1, "sizes must be positive");
    let nm = n * m;
    let ambient = nm * r;

    let mut u_coords = BTreeSet::new();
    let mut u_char = BTreeSet::new();
    let mut u0_coords = BTreeSet::new();
    let mut u1_coords = BTreeSet::new();
    // blocks (bi, bj), 1 <= bi < bj <= nm, of size r
    for bi in 1..=nm {
        for bj in (bi + 1)..=nm {
            for a in 1..=r {
                for b in 1..=r {
                    let coord = ((bi - 1) * r + a - 1, (bj - 1) * r + b - 1);
                    u_coords.insert(coord);
                    if bj == bi + 1 && a == b {
                        u_char.insert(coord);
                    }
                    if a >= b {
                        u0_coords.insert(coord);
                        if !(bi == 1 && bj == 2) || a == b {
                            u1_coords.insert(coord);
                        }
                    }
                }
            }
        }
    }
    let radical = CoordSet::new(ambient, u_coords, u_char.clone());
    let inblock_lower = CoordSet::new(
        ambient,
        u0_coords,
        u_char.intersection(radical.coords()).copied().collect(),
    );
    let u1_char: BTreeSet<(usize, usize)> = u_char.intersection(&u1_coords).copied().collect();
    let reduced = CoordSet::new(ambient, u1_coords, u1_char);

    // r diagonal blocks of size nm, strictly upper, character on superdiagonals
    let mut u2_coords = BTreeSet::new();
    let mut u2_char = BTreeSet::new();
    for g in 0..r {
        for a in 1..=nm {
            for b in (a + 1)..=nm {
                let coord = (g * nm + a - 1, g * nm + b - 1);
                u2_coords.insert(coord);
                if b == a + 1 {
                    u2_char.insert(coord);
                }
            }
        }
    }
    let whittaker_blocks = CoordSet::new(ambient, u2_coords, u2_char);

    let w0 = build_w0(n, m, r)?;
    let image = reduced.conj(&w0);

    // the conjugated pattern must contain the Whittaker blocks exactly,
    // character support included
    for &c in whittaker_blocks.coords() {
        if !image.contains(c) {
            return Err(Error::internal(
                "pattern_structure",
                format!(
                    "conjugated pattern misses Whittaker position ({},{})",
                    c.0 + 1,
                    c.1 + 1
                ),
            ));
        }
    }
    if image.charsupp() != whittaker_blocks.charsupp() {
        return Err(Error::internal(
            "pattern_structure",
            "conjugated character support does not match the Whittaker superdiagonals",
        ));
    }

    let complement = image.minus(&whittaker_blocks);

    // every leftover position must sit in an off-diagonal nm-block, strictly
    // upper within its block and avoiding the block-local (1,2) entry
    for &(i, j) in complement.coords() {
        let (bi, a) = (i / nm, i % nm + 1);
        let (bj, b) = (j / nm, j % nm + 1);
        let ok = bi != bj && a < b && !(a == 1 && b == 2);
        if !ok {
            return Err(Error::internal(
                "pattern_structure",
                format!(
                    "conjugated position ({},{}) is neither a Whittaker-block entry nor of the complement shape",
                    i + 1, j + 1
                ),
            ));
        }
    }

    Ok(UnipotentPatterns {
        radical,
        inblock_lower,
        reduced,
        whittaker_blocks,
        complement,
    })
}
