//! Per-coordinate threshold grids and the combinatorial index spaces that
//! drive both enumerations.
//!
//! For coordinate `j`, the grid `Q_j` lists the lower bound `lower[j]`
//! followed by the distinct matrix entries of column `j` strictly above it,
//! in increasing order. Consecutive grid points delimit the linear regimes
//! of `min(a_ij, x_j)`: no column entry ever lies strictly between two
//! consecutive points.

use std::fmt;

use crate::error::{Error, Result};
use crate::instance::{BoundVectors, ProblemInstance};
use crate::rat::Rat;

/// Sorted breakpoints for one coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdGrid {
    /// `q[0] = lower[j]`; `q[k]` for `k >= 1` are the distinct column values
    /// above it, so `q` is strictly increasing and ends at `upper[j]`
    /// whenever it has more than one point.
    pub q: Vec<Rat>,
    /// Whether the coordinate is pinned (`lower[j] == upper[j]`).
    pub pinned: bool,
}

impl ThresholdGrid {
    /// Count of distinct column values strictly above the lower bound.
    pub fn segments(&self) -> usize {
        self.q.len() - 1
    }
}

/// One coordinate of an index tuple: either a segment number (1-based into
/// the grid, 0 meaning "pinned coordinate" in the minimal enumeration) or
/// the sentinel that pins the coordinate to 1 in the maximal enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexEntry {
    Seg(usize),
    Inf,
}

impl fmt::Display for IndexEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexEntry::Seg(k) => write!(f, "{k}"),
            IndexEntry::Inf => write!(f, "∞"),
        }
    }
}

/// Which family a subsystem (or cell) describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    Minimal,
    Maximal,
}

/// The Cartesian product of per-coordinate candidate lists.
#[derive(Clone, Debug)]
pub struct IndexSpace {
    pub kind: CellKind,
    /// Candidate entries per coordinate, in iteration order (`Inf` last).
    pub lists: Vec<Vec<IndexEntry>>,
    /// Exact product of the list sizes.
    pub total: u128,
}

/// Builds the threshold grids. Requires `lower[j] <= upper[j]` for all `j`
/// (i.e. the precheck did not report infeasibility).
pub fn build_grids(
    instance: &ProblemInstance,
    bounds: &BoundVectors,
) -> Result<Vec<ThresholdGrid>> {
    let mut grids = Vec::with_capacity(instance.cols());
    for j in 0..instance.cols() {
        let lower = &bounds.lower[j];
        let upper = &bounds.upper[j];
        if lower > upper {
            return Err(Error::GridPrecondition { j: j + 1 });
        }
        let mut above: Vec<Rat> = (0..instance.rows())
            .map(|i| instance.entry(i, j).clone())
            .filter(|a| a > lower)
            .collect();
        above.sort();
        above.dedup();
        let pinned = above.is_empty();
        debug_assert_eq!(pinned, lower == upper);
        let mut q = Vec::with_capacity(above.len() + 1);
        q.push(lower.clone());
        q.extend(above);
        grids.push(ThresholdGrid { q, pinned });
    }
    Ok(grids)
}

/// Assembles the per-coordinate candidate lists and checks the total tuple
/// count against `cap`.
pub fn build_index_space(grids: &[ThresholdGrid], kind: CellKind, cap: u64) -> Result<IndexSpace> {
    let mut lists = Vec::with_capacity(grids.len());
    for grid in grids {
        let mut list = Vec::new();
        match kind {
            CellKind::Minimal => {
                if grid.pinned {
                    list.push(IndexEntry::Seg(0));
                } else {
                    list.extend((1..=grid.segments()).map(IndexEntry::Seg));
                }
            }
            CellKind::Maximal => {
                list.extend((1..=grid.segments()).map(IndexEntry::Seg));
                list.push(IndexEntry::Inf);
            }
        }
        lists.push(list);
    }
    let mut total: u128 = 1;
    for list in &lists {
        total = total
            .checked_mul(list.len() as u128)
            .ok_or(Error::CapExceeded {
                total: "more than 2^128".to_string(),
                cap,
            })?;
    }
    if total > cap as u128 {
        return Err(Error::CapExceeded {
            total: total.to_string(),
            cap,
        });
    }
    Ok(IndexSpace { kind, lists, total })
}

impl IndexSpace {
    /// Iterates the Cartesian product in lexicographic order over
    /// coordinates (last coordinate varies fastest), with each list in its
    /// stored order. Deterministic: two runs yield identical sequences.
    pub fn iter_tuples(&self) -> IndexTuples<'_> {
        IndexTuples {
            space: self,
            positions: vec![0; self.lists.len()],
            exhausted: self.lists.iter().any(|l| l.is_empty()),
        }
    }
}

pub struct IndexTuples<'a> {
    space: &'a IndexSpace,
    positions: Vec<usize>,
    exhausted: bool,
}

impl Iterator for IndexTuples<'_> {
    type Item = Vec<IndexEntry>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted {
            return None;
        }
        let tuple = self
            .positions
            .iter()
            .zip(&self.space.lists)
            .map(|(&p, list)| list[p])
            .collect();
        // Odometer increment, rightmost coordinate fastest.
        let mut j = self.positions.len();
        loop {
            if j == 0 {
                self.exhausted = true;
                break;
            }
            j -= 1;
            self.positions[j] += 1;
            if self.positions[j] < self.space.lists[j].len() {
                break;
            }
            self.positions[j] = 0;
        }
        Some(tuple)
    }
}
