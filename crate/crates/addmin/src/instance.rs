//! Problem instances: the matrix `A`, the right-hand side `b`, evaluation of
//! the addition-min composition, and the per-coordinate solution bounds.
//!
//! An instance models the system
//!
//! ```text
//! min(a_i1, x_1) + min(a_i2, x_2) + ... + min(a_in, x_n) = b_i,   i = 1..m
//! ```
//!
//! with `a_ij, x_j in [0, 1]` and `b_i > 0`. Instances are immutable after
//! construction and safe to share across threads.

use std::fmt;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// A validated instance: `A` is m-by-n with entries in [0, 1], `b` has
/// length m with positive entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    a: Vec<Vec<Rat>>,
    b: Vec<Rat>,
}

/// The two bound vectors controlling the enumeration:
/// `lower[j]` is a lower bound on every solution coordinate, and
/// `upper[j] = max_i a_ij` is an upper bound on every minimal solution.
///
/// `lower[j]` may exceed 1 (or `upper[j]`); that signals infeasibility
/// downstream and is stored as computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundVectors {
    pub lower: Vec<Rat>,
    pub upper: Vec<Rat>,
}

/// Outcome of the fast feasibility precheck. `Infeasible` is definitive;
/// `PossiblySolvable` is not a guarantee (solvability is decided by
/// enumeration).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    PossiblySolvable,
    Infeasible(InfeasibleReason),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfeasibleReason {
    /// lower[j] > upper[j]
    LowerExceedsUpper { j: usize, lower: Rat, upper: Rat },
    /// lower[j] > 1
    LowerExceedsOne { j: usize, lower: Rat },
    /// b_i > sum of row i
    RhsExceedsRowSum { i: usize, rhs: Rat, row_sum: Rat },
}

impl fmt::Display for InfeasibleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfeasibleReason::LowerExceedsUpper { j, lower, upper } => write!(
                f,
                "lower bound {lower} exceeds upper bound {upper} at column {}",
                j + 1
            ),
            InfeasibleReason::LowerExceedsOne { j, lower } => {
                write!(f, "lower bound {lower} exceeds 1 at column {}", j + 1)
            }
            InfeasibleReason::RhsExceedsRowSum { i, rhs, row_sum } => write!(
                f,
                "right-hand side {rhs} exceeds row sum {row_sum} at row {}",
                i + 1
            ),
        }
    }
}

impl ProblemInstance {
    pub fn new(a: Vec<Vec<Rat>>, b: Vec<Rat>) -> Result<Self> {
        if a.is_empty() || a[0].is_empty() {
            return Err(Error::EmptyInstance);
        }
        let n = a[0].len();
        if a.iter().any(|row| row.len() != n) {
            return Err(Error::RaggedMatrix);
        }
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                got: b.len(),
            });
        }
        for (i, row) in a.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.is_negative() || *v > Rat::one() {
                    return Err(Error::EntryOutOfRange {
                        i: i + 1,
                        j: j + 1,
                        value: v.to_string(),
                    });
                }
            }
        }
        for (i, v) in b.iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::NonpositiveRhs {
                    i: i + 1,
                    value: v.to_string(),
                });
            }
        }
        Ok(ProblemInstance { a, b })
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.a[0].len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.a[i][j]
    }

    pub fn rhs(&self) -> &[Rat] {
        &self.b
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.a
    }

    /// Largest entry of column `j`.
    pub fn column_max(&self, j: usize) -> Rat {
        self.a
            .iter()
            .map(|row| &row[j])
            .max()
            .expect("m >= 1")
            .clone()
    }

    /// The vector whose i-th entry is `sum_j min(a_ij, x_j)`, computed
    /// exactly. `x` entries are not range-checked here.
    pub fn evaluate(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.cols() {
            return Err(Error::DimensionMismatch {
                expected: self.cols(),
                got: x.len(),
            });
        }
        Ok(self
            .a
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, xj)| a.min(xj).clone()).sum())
            .collect())
    }

    /// True iff `x` is in `[0,1]^n` and satisfies every equation exactly.
    /// A coordinate outside `[0,1]` is a domain error, distinct from `false`.
    pub fn is_solution(&self, x: &[Rat]) -> Result<bool> {
        if x.len() != self.cols() {
            return Err(Error::DimensionMismatch {
                expected: self.cols(),
                got: x.len(),
            });
        }
        for (j, v) in x.iter().enumerate() {
            if v.is_negative() || *v > Rat::one() {
                return Err(Error::PointOutOfRange {
                    j: j + 1,
                    value: v.to_string(),
                });
            }
        }
        Ok(self.evaluate(x)? == self.b)
    }

    /// The bound vectors: `upper[j] = max_i a_ij` and
    /// `lower[j] = max(0, max_i (b_i - sum_{k != j} a_ik))`.
    pub fn bounds(&self) -> BoundVectors {
        let n = self.cols();
        let row_sums: Vec<Rat> = self.a.iter().map(|row| row.iter().sum()).collect();
        let mut lower = Vec::with_capacity(n);
        let mut upper = Vec::with_capacity(n);
        for j in 0..n {
            upper.push(self.column_max(j));
            let mut lo = Rat::zero();
            for (i, row) in self.a.iter().enumerate() {
                // b_i minus the sum of the other entries in row i
                let co_sum = &row_sums[i] - &row[j];
                let candidate = &self.b[i] - &co_sum;
                if candidate > lo {
                    lo = candidate;
                }
            }
            lower.push(lo);
        }
        BoundVectors { lower, upper }
    }

    /// Fast necessary conditions for solvability. An `Infeasible` verdict is
    /// definitive; `PossiblySolvable` must be confirmed by enumeration.
    pub fn precheck(&self) -> Feasibility {
        let BoundVectors { lower, upper } = self.bounds();
        for j in 0..self.cols() {
            if lower[j] > Rat::one() {
                return Feasibility::Infeasible(InfeasibleReason::LowerExceedsOne {
                    j,
                    lower: lower[j].clone(),
                });
            }
            if lower[j] > upper[j] {
                return Feasibility::Infeasible(InfeasibleReason::LowerExceedsUpper {
                    j,
                    lower: lower[j].clone(),
                    upper: upper[j].clone(),
                });
            }
        }
        for (i, row) in self.a.iter().enumerate() {
            let row_sum: Rat = row.iter().sum();
            if self.b[i] > row_sum {
                return Feasibility::Infeasible(InfeasibleReason::RhsExceedsRowSum {
                    i,
                    rhs: self.b[i].clone(),
                    row_sum,
                });
            }
        }
        Feasibility::PossiblySolvable
    }
}


#[cfg(test)]
mod tests {
    use super::test_util::*;
    use super::*;

    #[test]
    fn construction_validates() {
        assert!(matches!(
            ProblemInstance::new(vec![], vec![]),
            Err(Error::EmptyInstance)
        ));
        assert!(matches!(
            ProblemInstance::new(vec![vec_r(&["1.5"])], vec_r(&["0.5"])),
            Err(Error::EntryOutOfRange { .. })
        ));
        assert!(matches!(
            ProblemInstance::new(vec![vec_r(&["0.5"])], vec_r(&["0"])),
            Err(Error::NonpositiveRhs { .. })
        ));
        assert!(matches!(
            ProblemInstance::new(
                vec![vec_r(&["0.5"]), vec_r(&["0.5", "0.2"])],
                vec_r(&["0.5", "0.5"])
            ),
            Err(Error::RaggedMatrix)
        ));
        assert!(matches!(
            ProblemInstance::new(vec![vec_r(&["0.5"])], vec_r(&["0.5", "0.5"])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn evaluates_composition() {
        let inst = example_instance();
        assert_eq!(
            inst.evaluate(&vec_r(&["0.3", "0.6", "0.7"])).unwrap(),
            vec_r(&["1.4", "1.5"])
        );
        assert_eq!(
            inst.evaluate(&vec_r(&["0", "0", "0"])).unwrap(),
            vec_r(&["0", "0"])
        );
        assert_eq!(
            inst.evaluate(&vec_r(&["1", "1", "1"])).unwrap(),
            vec_r(&["1.5", "2.0"])
        );
        assert!(inst.evaluate(&vec_r(&["1", "1"])).is_err());
    }

    #[test]
    fn recognizes_solutions() {
        let inst = example_instance();
        assert!(inst.is_solution(&vec_r(&["0.3", "0.6", "0.7"])).unwrap());
        assert!(!inst.is_solution(&vec_r(&["0", "0", "0"])).unwrap());
        // In-family point: (1-t, 1-t, t) at t = 0.45.
        assert!(inst.is_solution(&vec_r(&["0.55", "0.55", "0.45"])).unwrap());
        // Coordinate-swapped variant is not a solution.
        assert!(!inst.is_solution(&vec_r(&["0.45", "0.45", "0.55"])).unwrap());
        assert!(matches!(
            inst.is_solution(&vec_r(&["1.5", "0", "0"])),
            Err(Error::PointOutOfRange { .. })
        ));
    }

    #[test]
    fn bound_vectors_match_worked_example() {
        let inst = example_instance();
        let BoundVectors { lower, upper } = inst.bounds();
        assert_eq!(lower, vec_r(&["0.3", "0.5", "0.4"]));
        assert_eq!(upper, vec_r(&["0.7", "0.6", "0.8"]));
    }

    #[test]
    fn bound_vectors_single_entry() {
        let inst = instance(&[&["0.2"]], &["0.5"]);
        let BoundVectors { lower, upper } = inst.bounds();
        assert_eq!(lower, vec_r(&["0.5"]));
        assert_eq!(upper, vec_r(&["0.2"]));
    }

    #[test]
    fn precheck_verdicts() {
        assert_eq!(example_instance().precheck(), Feasibility::PossiblySolvable);

        let inst = instance(&[&["0.2"]], &["0.5"]);
        assert!(matches!(
            inst.precheck(),
            Feasibility::Infeasible(InfeasibleReason::LowerExceedsUpper { j: 0, .. })
        ));

        // Both the bound and row-sum conditions fail here; the bound
        // condition is checked first.
        let inst = instance(&[&["0.5", "0.5"]], &["1.1"]);
        assert!(matches!(
            inst.precheck(),
            Feasibility::Infeasible(InfeasibleReason::LowerExceedsUpper { j: 0, .. })
        ));

        // Row-sum violation with healthy bounds.
        let inst = instance(&[&["0.5", "0.5"], &["1", "1"]], &["1.1", "1.0"]);
        assert!(matches!(
            inst.precheck(),
            Feasibility::Infeasible(InfeasibleReason::RhsExceedsRowSum { i: 0, .. })
        ));
    }

    #[test]
    fn evaluate_is_monotone() {
        // Spot check of the monotonicity invariant; the property test in
        // tests/properties.rs covers random instances.
        let inst = example_instance();
        let lo = inst.evaluate(&vec_r(&["0.2", "0.4", "0.6"])).unwrap();
        let hi = inst.evaluate(&vec_r(&["0.3", "0.6", "0.7"])).unwrap();
        assert!(lo.iter().zip(&hi).all(|(l, h)| l <= h));
    }
}
