//! Enumeration of all minimal and maximal solutions, the solution
//! classifiers, the bounding constructions, and the full solution-set
//! description.
//!
//! The solution set, when nonempty, is exactly the union of order intervals
//! `{x | u <= x <= v}` over enumerated minimal points `u` and maximal points
//! `v`. That union is reporting output; membership queries for concrete
//! points are answered by direct evaluation.

use crate::error::{Error, Result};
use crate::grid::{build_grids, build_index_space, CellKind};
use crate::instance::{Feasibility, ProblemInstance};
use crate::rat::Rat;
use crate::subsystem::{
    build_maximal_system, build_minimal_system, solve_box_system, CellSource, SolutionCell,
};

/// Default cap on the number of index tuples per enumeration.
pub const DEFAULT_MAX_CELLS: u64 = 1_000_000;

/// Knobs for the enumeration algorithms. `use_shortcuts` exists so tests can
/// confirm that the full enumeration agrees with the unique-solution
/// shortcuts; production callers leave it on.
#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    pub max_cells: u64,
    pub use_shortcuts: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            max_cells: DEFAULT_MAX_CELLS,
            use_shortcuts: true,
        }
    }
}

/// Which unique-solution shortcut fired during an enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shortcut {
    /// The lower bound vector is itself a solution, hence the unique
    /// minimal one.
    LowerBoundIsSolution,
    /// `(1, ..., 1)` is a solution, hence the unique maximal one.
    AllOnesIsSolution,
}

impl Shortcut {
    pub fn tag(&self) -> &'static str {
        match self {
            Shortcut::LowerBoundIsSolution => "alpha_check_is_solution",
            Shortcut::AllOnesIsSolution => "all_ones_is_solution",
        }
    }
}

/// Complete description of the solution set.
#[derive(Clone, Debug)]
pub struct SolutionSetDescription {
    pub minimal_cells: Vec<SolutionCell>,
    pub maximal_cells: Vec<SolutionCell>,
    pub solvable: bool,
    pub shortcuts: Vec<Shortcut>,
}

/// All minimal solutions, as an ordered list of cells (iteration order of
/// the index tuples). Returns the empty list when the instance has no
/// solutions. May return a single shortcut cell when the lower bound vector
/// solves the system.
pub fn enumerate_minimal(instance: &ProblemInstance) -> Result<Vec<SolutionCell>> {
    enumerate_minimal_with(instance, &EnumerationOptions::default())
}

pub fn enumerate_minimal_with(
    instance: &ProblemInstance,
    options: &EnumerationOptions,
) -> Result<Vec<SolutionCell>> {
    if matches!(instance.precheck(), Feasibility::Infeasible(_)) {
        return Ok(Vec::new());
    }
    let bounds = instance.bounds();
    if options.use_shortcuts && instance.is_solution(&bounds.lower)? {
        return Ok(vec![SolutionCell::singleton(
            CellSource {
                kind: CellKind::Minimal,
                index: Vec::new(),
            },
            bounds.lower.clone(),
        )]);
    }
    let grids = build_grids(instance, &bounds)?;
    let space = build_index_space(&grids, CellKind::Minimal, options.max_cells)?;
    let mut cells = Vec::new();
    for tuple in space.iter_tuples() {
        let system = build_minimal_system(instance, &grids, &tuple)?;
        let source = CellSource {
            kind: CellKind::Minimal,
            index: tuple,
        };
        if let Some(cell) = solve_box_system(&system, source) {
            debug_assert!(instance.is_solution(&cell.witness).unwrap_or(false));
            cells.push(cell);
        }
    }
    Ok(cells)
}

/// All maximal solutions, as an ordered list of cells. May return a single
/// shortcut cell when `(1, ..., 1)` solves the system.
pub fn enumerate_maximal(instance: &ProblemInstance) -> Result<Vec<SolutionCell>> {
    enumerate_maximal_with(instance, &EnumerationOptions::default())
}

pub fn enumerate_maximal_with(
    instance: &ProblemInstance,
    options: &EnumerationOptions,
) -> Result<Vec<SolutionCell>> {
    if matches!(instance.precheck(), Feasibility::Infeasible(_)) {
        return Ok(Vec::new());
    }
    let ones = vec![Rat::one(); instance.cols()];
    if options.use_shortcuts && instance.is_solution(&ones)? {
        return Ok(vec![SolutionCell::singleton(
            CellSource {
                kind: CellKind::Maximal,
                index: Vec::new(),
            },
            ones,
        )]);
    }
    let grids = build_grids(instance, &instance.bounds())?;
    let space = build_index_space(&grids, CellKind::Maximal, options.max_cells)?;
    let mut cells = Vec::new();
    for tuple in space.iter_tuples() {
        let system = build_maximal_system(instance, &grids, &tuple)?;
        let source = CellSource {
            kind: CellKind::Maximal,
            index: tuple,
        };
        if let Some(cell) = solve_box_system(&system, source) {
            debug_assert!(instance.is_solution(&cell.witness).unwrap_or(false));
            cells.push(cell);
        }
    }
    Ok(cells)
}

fn require_solution(instance: &ProblemInstance, x: &[Rat]) -> Result<()> {
    if instance.is_solution(x)? {
        Ok(())
    } else {
        Err(Error::NotASolution)
    }
}

/// True iff the solution `x` is minimal: every coordinate is dominated by
/// some matrix entry of its column.
pub fn is_minimal(instance: &ProblemInstance, x: &[Rat]) -> Result<bool> {
    require_solution(instance, x)?;
    Ok((0..instance.cols()).all(|j| (0..instance.rows()).any(|i| &x[j] <= instance.entry(i, j))))
}

/// True iff the solution `x` is maximal: every coordinate below 1 is
/// strictly dominated by some matrix entry of its column.
pub fn is_maximal(instance: &ProblemInstance, x: &[Rat]) -> Result<bool> {
    require_solution(instance, x)?;
    let one = Rat::one();
    Ok((0..instance.cols())
        .all(|j| x[j] == one || (0..instance.rows()).any(|i| &x[j] < instance.entry(i, j))))
}

/// A minimal solution below `x`: coordinates exceeding their column maximum
/// are lowered onto it, which leaves every equation unchanged. Single pass;
/// the result is minimal and `result <= x`.
pub fn minimal_below(instance: &ProblemInstance, x: &[Rat]) -> Result<Vec<Rat>> {
    require_solution(instance, x)?;
    let mut out = x.to_vec();
    for (j, v) in out.iter_mut().enumerate() {
        let col_max = instance.column_max(j);
        if *v > col_max {
            *v = col_max;
        }
    }
    debug_assert_eq!(is_minimal(instance, &out).ok(), Some(true));
    Ok(out)
}

/// A maximal solution above `x`: coordinates at or above their column
/// maximum are raised to 1, which leaves every equation unchanged. Single
/// pass; the result is maximal and `x <= result`.
pub fn maximal_above(instance: &ProblemInstance, x: &[Rat]) -> Result<Vec<Rat>> {
    require_solution(instance, x)?;
    let one = Rat::one();
    let mut out = x.to_vec();
    for (j, v) in out.iter_mut().enumerate() {
        if *v < one && *v >= instance.column_max(j) {
            *v = one.clone();
        }
    }
    debug_assert_eq!(is_maximal(instance, &out).ok(), Some(true));
    Ok(out)
}

/// Whether the system has any solution: exactly when the minimal
/// enumeration produces at least one nonempty cell.
pub fn is_solvable(instance: &ProblemInstance) -> Result<bool> {
    Ok(!enumerate_minimal(instance)?.is_empty())
}

pub fn is_solvable_with(instance: &ProblemInstance, options: &EnumerationOptions) -> Result<bool> {
    Ok(!enumerate_minimal_with(instance, options)?.is_empty())
}

/// Bundles both enumerations with the solvability flag and any shortcut
/// that fired.
pub fn describe_solution_set(instance: &ProblemInstance) -> Result<SolutionSetDescription> {
    describe_solution_set_with(instance, &EnumerationOptions::default())
}

pub fn describe_solution_set_with(
    instance: &ProblemInstance,
    options: &EnumerationOptions,
) -> Result<SolutionSetDescription> {
    let minimal_cells = enumerate_minimal_with(instance, options)?;
    let maximal_cells = enumerate_maximal_with(instance, options)?;
    let mut shortcuts = Vec::new();
    if minimal_cells.len() == 1 && minimal_cells[0].source.index.is_empty() {
        shortcuts.push(Shortcut::LowerBoundIsSolution);
    }
    if maximal_cells.len() == 1 && maximal_cells[0].source.index.is_empty() {
        shortcuts.push(Shortcut::AllOnesIsSolution);
    }
    Ok(SolutionSetDescription {
        solvable: !minimal_cells.is_empty(),
        minimal_cells,
        maximal_cells,
        shortcuts,
    })
}
