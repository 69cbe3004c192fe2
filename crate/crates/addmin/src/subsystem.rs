//! Box-constrained linear subsystems and their exact solution cells.
//!
//! Every index tuple selects one linear regime of `min(a_ij, x_j)` per
//! coordinate. Within that regime the equations become linear with 0/1
//! coefficients on the free variables, subject to per-variable interval
//! bounds (closed-closed for the minimal family, closed-strict for the
//! maximal family). Each subsystem is solved exactly:
//!
//! 1. Gaussian elimination over the equality rows yields an affine
//!    parametrization `x = x0 + D*t`.
//! 2. Substituting the parametrization into the interval bounds yields
//!    linear constraints over the parameters, carrying strictness flags.
//! 3. Fourier-Motzkin elimination decides feasibility of the parameter
//!    region; a derived constraint is strict iff any parent is strict.
//! 4. Back-substitution with the midpoint rule produces a witness point.

use crate::error::{Error, Result};
use crate::grid::{CellKind, IndexEntry, ThresholdGrid};
use crate::instance::ProblemInstance;
use crate::rat::Rat;

/// Interval bounds for one free variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarBounds {
    pub lo: Rat,
    pub lo_strict: bool,
    pub hi: Rat,
    pub hi_strict: bool,
}

/// One equality row: `sum_f coeffs[f] * x_free[f] + constant = rhs`,
/// with every coefficient 0 or 1 as built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemRow {
    pub coeffs: Vec<Rat>,
    pub constant: Rat,
    pub rhs: Rat,
}

/// The concrete linear subsystem for one index tuple.
#[derive(Clone, Debug)]
pub struct BoxLinearSystem {
    /// Total number of original variables.
    pub n: usize,
    /// Variables pinned to a constant, as `(column, value)` pairs.
    pub fixed: Vec<(usize, Rat)>,
    /// Columns of the free variables, ascending.
    pub free: Vec<usize>,
    /// Interval bounds per free variable, parallel to `free`.
    pub bounds: Vec<VarBounds>,
    pub rows: Vec<SystemRow>,
}

/// Comparison relation of a linear constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Lt,
}

/// `coeffs . t REL rhs` over the cell parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rat>,
    pub rel: Rel,
    pub rhs: Rat,
}

impl LinearConstraint {
    pub fn holds_at(&self, t: &[Rat]) -> bool {
        let lhs: Rat = self.coeffs.iter().zip(t).map(|(c, v)| c * v).sum();
        match self.rel {
            Rel::Le => lhs <= self.rhs,
            Rel::Lt => lhs < self.rhs,
        }
    }
}

/// Which subsystem a cell came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSource {
    pub kind: CellKind,
    /// The index tuple; empty for cells produced by a shortcut.
    pub index: Vec<IndexEntry>,
}

/// The exact solution set of one feasible subsystem:
/// `{ x0 + D*t | t satisfies every constraint }`.
///
/// The interval bounds are folded into the constraints, so every parameter
/// point satisfying them maps into `[0,1]^n`. The witness is a member point
/// produced by midpoint back-substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionCell {
    pub source: CellSource,
    pub origin: Vec<Rat>,
    /// n rows by d columns.
    pub directions: Vec<Vec<Rat>>,
    pub constraints: Vec<LinearConstraint>,
    pub witness: Vec<Rat>,
}

impl SolutionCell {
    /// Dimension of the solution family.
    pub fn dim(&self) -> usize {
        self.directions.first().map_or(0, |row| row.len())
    }

    /// The point `x0 + D*t`.
    pub fn point_at(&self, t: &[Rat]) -> Vec<Rat> {
        self.origin
            .iter()
            .zip(&self.directions)
            .map(|(o, dir)| o + dir.iter().zip(t).map(|(c, v)| c * v).sum::<Rat>())
            .collect()
    }

    /// Recovers the parameter vector with `x = x0 + D*t`, if one exists.
    pub fn params_for(&self, x: &[Rat]) -> Option<Vec<Rat>> {
        if x.len() != self.origin.len() {
            return None;
        }
        let d = self.dim();
        let rhs: Vec<Rat> = x.iter().zip(&self.origin).map(|(xi, oi)| xi - oi).collect();
        if d == 0 {
            return rhs.iter().all(Rat::is_zero).then(Vec::new);
        }
        // Solve D*t = x - x0 by elimination; D has full column rank by
        // construction, but the code does not rely on it.
        let mut rows: Vec<(Vec<Rat>, Rat)> = self.directions.iter().cloned().zip(rhs).collect();
        let mut pivot_of_col = vec![None::<usize>; d];
        let mut used = vec![false; rows.len()];
        for (col, pivot_slot) in pivot_of_col.iter_mut().enumerate() {
            let Some(r) = (0..rows.len()).find(|&r| !used[r] && !rows[r].0[col].is_zero()) else {
                continue;
            };
            used[r] = true;
            let pivot = rows[r].0[col].clone();
            for c in 0..d {
                rows[r].0[c] = &rows[r].0[c] / &pivot;
            }
            rows[r].1 = &rows[r].1 / &pivot;
            for r2 in 0..rows.len() {
                if r2 == r || rows[r2].0[col].is_zero() {
                    continue;
                }
                let factor = rows[r2].0[col].clone();
                for c in 0..d {
                    let delta = &factor * &rows[r].0[c];
                    rows[r2].0[c] = &rows[r2].0[c] - &delta;
                }
                let delta = &factor * &rows[r].1;
                rows[r2].1 = &rows[r2].1 - &delta;
            }
            *pivot_slot = Some(r);
        }
        let t: Vec<Rat> = pivot_of_col
            .into_iter()
            .map(|slot| match slot {
                Some(r) => rows[r].1.clone(),
                None => Rat::zero(),
            })
            .collect();
        // Verify: guards both inconsistent systems and rank deficiency.
        let check = self.point_at(&t);
        (check == x).then_some(t)
    }

    /// Exact membership test against the parametric description.
    pub fn contains(&self, x: &[Rat]) -> bool {
        match self.params_for(x) {
            Some(t) => self.constraints.iter().all(|c| c.holds_at(&t)),
            None => false,
        }
    }

    /// A cell holding exactly one explicit point.
    pub(crate) fn singleton(source: CellSource, point: Vec<Rat>) -> Self {
        let n = point.len();
        SolutionCell {
            source,
            origin: point.clone(),
            directions: vec![Vec::new(); n],
            constraints: Vec::new(),
            witness: point,
        }
    }

    /// For one-dimensional cells: the tightest parameter interval
    /// `(lo, lo_strict, hi, hi_strict)` implied by the constraints.
    pub fn param_interval(&self) -> Option<(Rat, bool, Rat, bool)> {
        if self.dim() != 1 {
            return None;
        }
        let mut lo: Option<(Rat, bool)> = None;
        let mut hi: Option<(Rat, bool)> = None;
        for c in &self.constraints {
            let coeff = &c.coeffs[0];
            if coeff.is_zero() {
                continue;
            }
            let val = &c.rhs / coeff;
            let strict = c.rel == Rel::Lt;
            if coeff.is_positive() {
                match &mut hi {
                    Some((v, s)) => {
                        if val < *v {
                            *v = val;
                            *s = strict;
                        } else if val == *v {
                            *s |= strict;
                        }
                    }
                    None => hi = Some((val, strict)),
                }
            } else {
                match &mut lo {
                    Some((v, s)) => {
                        if val > *v {
                            *v = val;
                            *s = strict;
                        } else if val == *v {
                            *s |= strict;
                        }
                    }
                    None => lo = Some((val, strict)),
                }
            }
        }
        let (lo, ls) = lo?;
        let (hi, hs) = hi?;
        Some((lo, ls, hi, hs))
    }
}

fn delta_coefficient(a: &Rat, seg_lo: &Rat, seg_hi: &Rat) -> Result<bool> {
    if a >= seg_hi {
        Ok(true)
    } else if a <= seg_lo {
        Ok(false)
    } else {
        Err(Error::Internal(format!(
            "matrix entry {a} lies strictly between grid points {seg_lo} and {seg_hi}"
        )))
    }
}

fn build_system(
    instance: &ProblemInstance,
    grids: &[ThresholdGrid],
    tuple: &[IndexEntry],
    kind: CellKind,
) -> Result<BoxLinearSystem> {
    let n = instance.cols();
    if tuple.len() != n || grids.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: tuple.len(),
        });
    }
    let mut fixed: Vec<(usize, Rat)> = Vec::new();
    let mut free: Vec<usize> = Vec::new();
    let mut bounds: Vec<VarBounds> = Vec::new();
    // Segment limits per free variable, for delta resolution.
    let mut segments: Vec<(Rat, Rat)> = Vec::new();
    for (j, entry) in tuple.iter().enumerate() {
        let grid = &grids[j];
        match (kind, entry) {
            (CellKind::Minimal, IndexEntry::Seg(0)) => {
                if !grid.pinned {
                    return Err(Error::Internal(format!(
                        "index 0 at unpinned column {}",
                        j + 1
                    )));
                }
                fixed.push((j, grid.q[0].clone()));
            }
            (CellKind::Minimal, IndexEntry::Seg(k)) => {
                let k = *k;
                if k > grid.segments() {
                    return Err(Error::Internal(format!(
                        "segment index {k} out of range at column {}",
                        j + 1
                    )));
                }
                free.push(j);
                segments.push((grid.q[k - 1].clone(), grid.q[k].clone()));
                bounds.push(VarBounds {
                    lo: grid.q[k - 1].clone(),
                    lo_strict: false,
                    hi: grid.q[k].clone(),
                    hi_strict: false,
                });
            }
            (CellKind::Maximal, IndexEntry::Inf) => {
                fixed.push((j, Rat::one()));
            }
            (CellKind::Maximal, IndexEntry::Seg(k)) => {
                let k = *k;
                if k == 0 || k > grid.segments() {
                    return Err(Error::Internal(format!(
                        "segment index {k} out of range at column {}",
                        j + 1
                    )));
                }
                free.push(j);
                segments.push((grid.q[k - 1].clone(), grid.q[k].clone()));
                bounds.push(VarBounds {
                    lo: grid.q[k - 1].clone(),
                    lo_strict: false,
                    hi: grid.q[k].clone(),
                    hi_strict: true,
                });
            }
            (CellKind::Minimal, IndexEntry::Inf) => {
                return Err(Error::Internal(format!(
                    "pin sentinel in minimal tuple at column {}",
                    j + 1
                )));
            }
        }
    }
    let mut rows = Vec::with_capacity(instance.rows());
    for i in 0..instance.rows() {
        let mut constant: Rat = fixed
            .iter()
            .map(|(j, v)| instance.entry(i, *j).min(v).clone())
            .sum();
        let mut coeffs = Vec::with_capacity(free.len());
        for (f, &j) in free.iter().enumerate() {
            let (seg_lo, seg_hi) = &segments[f];
            if delta_coefficient(instance.entry(i, j), seg_lo, seg_hi)? {
                coeffs.push(Rat::one());
            } else {
                coeffs.push(Rat::zero());
                constant = constant + instance.entry(i, j);
            }
        }
        rows.push(SystemRow {
            coeffs,
            constant,
            rhs: instance.rhs()[i].clone(),
        });
    }
    Ok(BoxLinearSystem {
        n,
        fixed,
        free,
        bounds,
        rows,
    })
}

/// The subsystem selecting segment `k_j` per coordinate in the minimal
/// enumeration (`Seg(0)` for pinned coordinates).
pub fn build_minimal_system(
    instance: &ProblemInstance,
    grids: &[ThresholdGrid],
    k: &[IndexEntry],
) -> Result<BoxLinearSystem> {
    build_system(instance, grids, k, CellKind::Minimal)
}

/// The subsystem for the maximal enumeration: `Inf` pins a coordinate to 1,
/// `Seg(k)` selects a segment with a strict upper bound.
pub fn build_maximal_system(
    instance: &ProblemInstance,
    grids: &[ThresholdGrid],
    m: &[IndexEntry],
) -> Result<BoxLinearSystem> {
    build_system(instance, grids, m, CellKind::Maximal)
}

/// Affine expression of one free variable over the parameters.
struct Affine {
    constant: Rat,
    coeffs: Vec<Rat>,
}

/// Reduced row echelon form over the free variables. Columns are scanned
/// from last to first so that the earliest coordinates become parameters,
/// which keeps one-dimensional families in the familiar `x_1 = t` shape.
/// Returns `None` when the rows are inconsistent.
fn parametrize(rows: &[SystemRow], nf: usize) -> Option<(Vec<usize>, Vec<Affine>)> {
    let mut mat: Vec<(Vec<Rat>, Rat)> = rows
        .iter()
        .map(|r| (r.coeffs.clone(), &r.rhs - &r.constant))
        .collect();
    let mut used = vec![false; mat.len()];
    let mut pivot_row = vec![None::<usize>; nf];
    for col in (0..nf).rev() {
        let Some(r) = (0..mat.len()).find(|&r| !used[r] && !mat[r].0[col].is_zero()) else {
            continue;
        };
        used[r] = true;
        pivot_row[col] = Some(r);
        let pivot = mat[r].0[col].clone();
        for c in 0..nf {
            mat[r].0[c] = &mat[r].0[c] / &pivot;
        }
        mat[r].1 = &mat[r].1 / &pivot;
        for r2 in 0..mat.len() {
            if r2 == r || mat[r2].0[col].is_zero() {
                continue;
            }
            let factor = mat[r2].0[col].clone();
            for c in 0..nf {
                let delta = &factor * &mat[r].0[c];
                mat[r2].0[c] = &mat[r2].0[c] - &delta;
            }
            let delta = &factor * &mat[r].1;
            mat[r2].1 = &mat[r2].1 - &delta;
        }
    }
    // Rows without a pivot are now all-zero on the left; a nonzero
    // right-hand side there means the equalities are inconsistent.
    for (r, row) in mat.iter().enumerate() {
        if !used[r] && !row.1.is_zero() {
            debug_assert!(row.0.iter().all(Rat::is_zero));
            return None;
        }
    }
    let params: Vec<usize> = (0..nf).filter(|&c| pivot_row[c].is_none()).collect();
    let exprs: Vec<Affine> = (0..nf)
        .map(|c| match pivot_row[c] {
            None => {
                let l = params.iter().position(|&p| p == c).unwrap();
                let mut coeffs = vec![Rat::zero(); params.len()];
                coeffs[l] = Rat::one();
                Affine {
                    constant: Rat::zero(),
                    coeffs,
                }
            }
            Some(r) => Affine {
                constant: mat[r].1.clone(),
                coeffs: params.iter().map(|&p| -&mat[r].0[p]).collect(),
            },
        })
        .collect();
    Some((params, exprs))
}

struct BoundCandidate {
    value: Rat,
    strict: bool,
}

fn tighten_upper(slot: &mut Option<BoundCandidate>, value: Rat, strict: bool) {
    match slot {
        Some(cur) => {
            if value < cur.value {
                *cur = BoundCandidate { value, strict };
            } else if value == cur.value {
                cur.strict |= strict;
            }
        }
        None => *slot = Some(BoundCandidate { value, strict }),
    }
}

fn tighten_lower(slot: &mut Option<BoundCandidate>, value: Rat, strict: bool) {
    match slot {
        Some(cur) => {
            if value > cur.value {
                *cur = BoundCandidate { value, strict };
            } else if value == cur.value {
                cur.strict |= strict;
            }
        }
        None => *slot = Some(BoundCandidate { value, strict }),
    }
}

/// Splits off constraints with all-zero coefficients and checks them.
/// Returns `None` if any constant constraint is violated.
fn check_constants(constraints: Vec<LinearConstraint>) -> Option<Vec<LinearConstraint>> {
    let mut kept = Vec::with_capacity(constraints.len());
    for c in constraints {
        if c.coeffs.iter().all(Rat::is_zero) {
            let ok = match c.rel {
                Rel::Le => !c.rhs.is_negative(),
                Rel::Lt => c.rhs.is_positive(),
            };
            if !ok {
                return None;
            }
        } else {
            kept.push(c);
        }
    }
    Some(kept)
}

fn combine(lower: &LinearConstraint, upper: &LinearConstraint, l: usize) -> LinearConstraint {
    // lower has coeffs[l] < 0, upper has coeffs[l] > 0; both multipliers
    // below are positive, so the combination eliminates t_l exactly.
    let wu = -&lower.coeffs[l];
    let wl = upper.coeffs[l].clone();
    let coeffs = upper
        .coeffs
        .iter()
        .zip(&lower.coeffs)
        .map(|(u, lo)| &(u * &wu) + &(lo * &wl))
        .collect();
    let rhs = &(&upper.rhs * &wu) + &(&lower.rhs * &wl);
    let rel = if lower.rel == Rel::Lt || upper.rel == Rel::Lt {
        Rel::Lt
    } else {
        Rel::Le
    };
    LinearConstraint { coeffs, rel, rhs }
}

/// Decides feasibility of `constraints` over `d` parameters by
/// Fourier-Motzkin elimination and, when feasible, produces the point
/// chosen by the midpoint rule.
pub(crate) fn feasible_point(constraints: &[LinearConstraint], d: usize) -> Option<Vec<Rat>> {
    let mut current = constraints.to_vec();
    let mut stages: Vec<Vec<LinearConstraint>> = Vec::with_capacity(d);
    for l in 0..d {
        current = check_constants(current)?;
        stages.push(current.clone());
        let mut next = Vec::new();
        let mut lowers = Vec::new();
        let mut uppers = Vec::new();
        for c in current {
            if c.coeffs[l].is_zero() {
                next.push(c);
            } else if c.coeffs[l].is_positive() {
                uppers.push(c);
            } else {
                lowers.push(c);
            }
        }
        for lo in &lowers {
            for up in &uppers {
                next.push(combine(lo, up, l));
            }
        }
        current = next;
    }
    check_constants(current)?;

    let mut t = vec![Rat::zero(); d];
    for l in (0..d).rev() {
        let mut lo: Option<BoundCandidate> = None;
        let mut hi: Option<BoundCandidate> = None;
        for c in &stages[l] {
            if c.coeffs[l].is_zero() {
                continue;
            }
            let tail: Rat = c.coeffs[l + 1..]
                .iter()
                .zip(&t[l + 1..])
                .map(|(cf, tv)| cf * tv)
                .sum();
            let value = &(&c.rhs - &tail) / &c.coeffs[l];
            let strict = c.rel == Rel::Lt;
            if c.coeffs[l].is_positive() {
                tighten_upper(&mut hi, value, strict);
            } else {
                tighten_lower(&mut lo, value, strict);
            }
        }
        t[l] = match (lo, hi) {
            (Some(lo), Some(hi)) => {
                if lo.value < hi.value {
                    (&lo.value + &hi.value) / Rat::from_int(2)
                } else if lo.value == hi.value && !lo.strict && !hi.strict {
                    lo.value
                } else {
                    // Unreachable after a successful elimination pass.
                    return None;
                }
            }
            // Cells built from grid subsystems always bound every parameter
            // on both sides; these arms only serve hand-built systems.
            (Some(lo), None) => {
                if lo.strict {
                    &lo.value + &Rat::one()
                } else {
                    lo.value
                }
            }
            (None, Some(hi)) => {
                if hi.strict {
                    &hi.value - &Rat::one()
                } else {
                    hi.value
                }
            }
            (None, None) => Rat::zero(),
        };
    }
    Some(t)
}

/// Solves the subsystem exactly. Returns `None` when it has no solutions,
/// otherwise a cell whose point set equals the subsystem's solution set.
pub fn solve_box_system(system: &BoxLinearSystem, source: CellSource) -> Option<SolutionCell> {
    for b in &system.bounds {
        let empty = b.lo > b.hi || (b.lo == b.hi && (b.lo_strict || b.hi_strict));
        if empty {
            return None;
        }
    }
    let nf = system.free.len();
    let (params, exprs) = parametrize(&system.rows, nf)?;
    let d = params.len();

    let mut origin = vec![Rat::zero(); system.n];
    let mut directions = vec![vec![Rat::zero(); d]; system.n];
    for (j, v) in &system.fixed {
        origin[*j] = v.clone();
    }
    for (f, &j) in system.free.iter().enumerate() {
        origin[j] = exprs[f].constant.clone();
        directions[j] = exprs[f].coeffs.clone();
    }

    let mut all_constraints = Vec::with_capacity(2 * nf);
    for (f, &j) in system.free.iter().enumerate() {
        let b = &system.bounds[f];
        let dir = &directions[j];
        // x_j(t) <= hi
        all_constraints.push(LinearConstraint {
            coeffs: dir.clone(),
            rel: if b.hi_strict { Rel::Lt } else { Rel::Le },
            rhs: &b.hi - &origin[j],
        });
        // lo <= x_j(t), i.e. -x_j(t) <= -lo
        all_constraints.push(LinearConstraint {
            coeffs: dir.iter().map(|c| -c).collect(),
            rel: if b.lo_strict { Rel::Lt } else { Rel::Le },
            rhs: &origin[j] - &b.lo,
        });
    }

    let t = feasible_point(&all_constraints, d)?;
    let witness: Vec<Rat> = origin
        .iter()
        .zip(&directions)
        .map(|(o, dir)| o + dir.iter().zip(&t).map(|(c, v)| c * v).sum::<Rat>())
        .collect();
    // Constant-true constraints were verified above; keep only the ones
    // that actually constrain the parameters.
    let constraints = all_constraints
        .into_iter()
        .filter(|c| c.coeffs.iter().any(|v| !v.is_zero()))
        .collect();
    Some(SolutionCell {
        source,
        origin,
        directions,
        constraints,
        witness,
    })
}
