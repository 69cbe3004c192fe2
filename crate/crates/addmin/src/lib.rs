//! Exact solver for systems of fuzzy relation equations with addition-min
//! composition:
//!
//! ```text
//! min(a_i1, x_1) + min(a_i2, x_2) + ... + min(a_in, x_n) = b_i,   i = 1..m
//! ```
//!
//! over `x in [0,1]^n`, with `a_ij in [0,1]` and `b_i > 0`. The solver
//! decides solvability and enumerates the complete sets of minimal and
//! maximal solutions as parametric cells; every solution lies between a
//! minimal and a maximal one, so the union of the resulting order intervals
//! describes the whole solution set.
//!
//! All arithmetic is exact rational; floating point never enters the solve
//! path. Minimal solutions of the system are also minimal solutions of the
//! corresponding `>=` inequality system, which is where these systems arise
//! in practice (data transmission quality assignment in peer-to-peer file
//! sharing).

pub mod document;
pub mod enumeration;
pub mod error;
pub mod grid;
pub mod instance;
pub mod oracle;
pub mod rat;
pub mod render;
pub mod subsystem;

pub use document::InstanceDocument;
pub use enumeration::{
    describe_solution_set, enumerate_maximal, enumerate_minimal, is_maximal, is_minimal,
    is_solvable, maximal_above, minimal_below, EnumerationOptions, Shortcut,
    SolutionSetDescription, DEFAULT_MAX_CELLS,
};
pub use error::{Error, Result};
pub use grid::{build_grids, build_index_space, CellKind, IndexEntry, IndexSpace, ThresholdGrid};
pub use instance::{BoundVectors, Feasibility, InfeasibleReason, ProblemInstance};
pub use oracle::{
    coordinate_decrease_oracle, coordinate_increase_oracle, random_solvable_instance, sample_cell,
    verify_description, Counterexample, VerificationReport,
};
pub use rat::Rat;
pub use subsystem::{
    build_maximal_system, build_minimal_system, solve_box_system, BoxLinearSystem, CellSource,
    LinearConstraint, Rel, SolutionCell,
};
