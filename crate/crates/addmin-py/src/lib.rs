//! Python bindings for the addmin solver.
//!
//! Rationals cross the boundary as exact decimal strings (`"0.4"`) or
//! `"p/q"` fractions; floats are never used internally, so values survive
//! the round trip unchanged.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use addmin::enumeration as enumeration_mod;
use addmin::oracle as oracle_mod;
use addmin::render;
use addmin::{
    CellKind, Feasibility, IndexEntry, InstanceDocument, ProblemInstance, Rat, SolutionCell,
    SolutionSetDescription, VerificationReport,
};

fn to_py_err(e: addmin::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_point(coords: Vec<String>) -> PyResult<Vec<Rat>> {
    coords
        .iter()
        .map(|s| addmin::rat::parse_ratio(s))
        .collect::<addmin::Result<Vec<Rat>>>()
        .map_err(to_py_err)
}

fn point_strings(x: &[Rat]) -> Vec<String> {
    x.iter().map(Rat::to_string).collect()
}

/// One parametric solution cell: the point set `{origin + directions * t}`
/// restricted by linear constraints over the parameters.
#[pyclass(name = "Cell")]
struct PyCell {
    inner: SolutionCell,
}

#[pymethods]
impl PyCell {
    /// "min" or "max".
    #[getter]
    fn kind(&self) -> &'static str {
        match self.inner.source.kind {
            CellKind::Minimal => "min",
            CellKind::Maximal => "max",
        }
    }

    /// Index tuple entries as strings; "inf" pins a coordinate to 1 and an
    /// empty list marks a shortcut cell.
    #[getter]
    fn index(&self) -> Vec<String> {
        self.inner
            .source
            .index
            .iter()
            .map(|e| match e {
                IndexEntry::Seg(k) => k.to_string(),
                IndexEntry::Inf => "inf".to_string(),
            })
            .collect()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn origin(&self) -> Vec<String> {
        point_strings(&self.inner.origin)
    }

    #[getter]
    fn directions(&self) -> Vec<Vec<String>> {
        self.inner
            .directions
            .iter()
            .map(|row| point_strings(row))
            .collect()
    }

    #[getter]
    fn witness(&self) -> Vec<String> {
        point_strings(&self.inner.witness)
    }

    /// Constraints as (coeffs, rel, rhs) triples with rel in {"le", "lt"}.
    #[getter]
    fn constraints(&self) -> Vec<(Vec<String>, &'static str, String)> {
        self.inner
            .constraints
            .iter()
            .map(|c| {
                (
                    point_strings(&c.coeffs),
                    match c.rel {
                        addmin::Rel::Le => "le",
                        addmin::Rel::Lt => "lt",
                    },
                    c.rhs.to_string(),
                )
            })
            .collect()
    }

    /// Exact membership test against the parametric description.
    fn contains(&self, x: Vec<String>) -> PyResult<bool> {
        Ok(self.inner.contains(&parse_point(x)?))
    }

    /// Exactly `count` member points (witness, reachable corners, seeded
    /// interior points).
    #[pyo3(signature = (seed = 0, count = 5))]
    fn sample(&self, seed: u64, count: usize) -> Vec<Vec<String>> {
        oracle_mod::sample_cell(&self.inner, seed, count)
            .iter()
            .map(|p| point_strings(p))
            .collect()
    }

    fn __str__(&self) -> String {
        render::cell_set_str(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Cell({} {})",
            self.kind(),
            render::cell_set_str(&self.inner)
        )
    }
}

/// Both enumerations plus the solvability flag.
#[pyclass(name = "Description")]
struct PyDescription {
    inner: SolutionSetDescription,
}

#[pymethods]
impl PyDescription {
    #[getter]
    fn solvable(&self) -> bool {
        self.inner.solvable
    }

    #[getter]
    fn shortcuts(&self) -> Vec<&'static str> {
        self.inner.shortcuts.iter().map(|s| s.tag()).collect()
    }

    #[getter]
    fn minimal(&self) -> Vec<PyCell> {
        self.inner
            .minimal_cells
            .iter()
            .map(|c| PyCell { inner: c.clone() })
            .collect()
    }

    #[getter]
    fn maximal(&self) -> Vec<PyCell> {
        self.inner
            .maximal_cells
            .iter()
            .map(|c| PyCell { inner: c.clone() })
            .collect()
    }

    fn __str__(&self) -> String {
        render::description_text(&self.inner)
    }
}

/// Result of the sampling-based verification.
#[pyclass(name = "Report")]
struct PyReport {
    inner: VerificationReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed()
    }

    #[getter]
    fn cells_checked(&self) -> usize {
        self.inner.cells_checked
    }

    #[getter]
    fn points_checked(&self) -> usize {
        self.inner.points_checked
    }

    #[getter]
    fn counterexamples(&self) -> Vec<String> {
        self.inner
            .counterexamples
            .iter()
            .map(|c| c.to_string())
            .collect()
    }

    fn __str__(&self) -> String {
        render::report_text(&self.inner)
    }
}

/// A system of addition-min equations: matrix `A` (entries in [0,1]) and
/// positive right-hand side `b`.
#[pyclass(name = "Instance")]
struct PyInstance {
    inner: ProblemInstance,
}

#[pymethods]
impl PyInstance {
    /// Build from rows of numeral strings.
    #[new]
    fn new(a: Vec<Vec<String>>, b: Vec<String>) -> PyResult<Self> {
        let a = a
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| addmin::rat::parse_ratio(s))
                    .collect::<addmin::Result<Vec<Rat>>>()
            })
            .collect::<addmin::Result<Vec<Vec<Rat>>>>()
            .map_err(to_py_err)?;
        let b = b
            .iter()
            .map(|s| addmin::rat::parse_ratio(s))
            .collect::<addmin::Result<Vec<Rat>>>()
            .map_err(to_py_err)?;
        Ok(PyInstance {
            inner: ProblemInstance::new(a, b).map_err(to_py_err)?,
        })
    }

    /// Parse the JSON instance document format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = InstanceDocument::from_json_str(text).map_err(to_py_err)?;
        Ok(PyInstance {
            inner: doc.to_instance().map_err(to_py_err)?,
        })
    }

    fn to_json(&self) -> String {
        InstanceDocument::from_instance(&self.inner, None, None).to_json_string()
    }

    #[getter]
    fn rows(&self) -> usize {
        self.inner.rows()
    }

    #[getter]
    fn cols(&self) -> usize {
        self.inner.cols()
    }

    /// The vector `sum_j min(a_ij, x_j)`, exactly.
    fn evaluate(&self, x: Vec<String>) -> PyResult<Vec<String>> {
        let out = self.inner.evaluate(&parse_point(x)?).map_err(to_py_err)?;
        Ok(point_strings(&out))
    }

    fn is_solution(&self, x: Vec<String>) -> PyResult<bool> {
        self.inner.is_solution(&parse_point(x)?).map_err(to_py_err)
    }

    /// `(lower, upper)` bound vectors.
    fn bounds(&self) -> (Vec<String>, Vec<String>) {
        let b = self.inner.bounds();
        (point_strings(&b.lower), point_strings(&b.upper))
    }

    /// "possibly-solvable" or "infeasible: <reason>".
    fn precheck(&self) -> String {
        match self.inner.precheck() {
            Feasibility::PossiblySolvable => "possibly-solvable".to_string(),
            Feasibility::Infeasible(reason) => format!("infeasible: {reason}"),
        }
    }

    fn solvable(&self) -> PyResult<bool> {
        enumeration_mod::is_solvable(&self.inner).map_err(to_py_err)
    }

    fn minimal_cells(&self) -> PyResult<Vec<PyCell>> {
        let cells = enumeration_mod::enumerate_minimal(&self.inner).map_err(to_py_err)?;
        Ok(cells.into_iter().map(|inner| PyCell { inner }).collect())
    }

    fn maximal_cells(&self) -> PyResult<Vec<PyCell>> {
        let cells = enumeration_mod::enumerate_maximal(&self.inner).map_err(to_py_err)?;
        Ok(cells.into_iter().map(|inner| PyCell { inner }).collect())
    }

    fn describe(&self) -> PyResult<PyDescription> {
        let inner = enumeration_mod::describe_solution_set(&self.inner).map_err(to_py_err)?;
        Ok(PyDescription { inner })
    }

    fn is_minimal(&self, x: Vec<String>) -> PyResult<bool> {
        enumeration_mod::is_minimal(&self.inner, &parse_point(x)?).map_err(to_py_err)
    }

    fn is_maximal(&self, x: Vec<String>) -> PyResult<bool> {
        enumeration_mod::is_maximal(&self.inner, &parse_point(x)?).map_err(to_py_err)
    }

    fn minimal_below(&self, x: Vec<String>) -> PyResult<Vec<String>> {
        let out =
            enumeration_mod::minimal_below(&self.inner, &parse_point(x)?).map_err(to_py_err)?;
        Ok(point_strings(&out))
    }

    fn maximal_above(&self, x: Vec<String>) -> PyResult<Vec<String>> {
        let out =
            enumeration_mod::maximal_above(&self.inner, &parse_point(x)?).map_err(to_py_err)?;
        Ok(point_strings(&out))
    }

    /// Run the sampling-based verification of this instance's description.
    #[pyo3(signature = (seed = 0, trials = 64))]
    fn verify(&self, seed: u64, trials: usize) -> PyResult<PyReport> {
        let desc = enumeration_mod::describe_solution_set(&self.inner).map_err(to_py_err)?;
        Ok(PyReport {
            inner: oracle_mod::verify_description(&self.inner, &desc, seed, trials),
        })
    }

    fn __repr__(&self) -> String {
        format!("Instance({}x{})", self.inner.rows(), self.inner.cols())
    }
}

/// Draw a random solvable instance with a planted solution.
#[pyfunction]
#[pyo3(signature = (seed, m, n, step = "1/10"))]
fn generate(seed: u64, m: usize, n: usize, step: &str) -> PyResult<(PyInstance, Vec<String>)> {
    let step = addmin::rat::parse_ratio(step).map_err(to_py_err)?;
    let (inner, planted) =
        oracle_mod::random_solvable_instance(seed, m, n, &step).map_err(to_py_err)?;
    Ok((PyInstance { inner }, point_strings(&planted)))
}

/// Normalize a numeral: exact decimal string when terminating, else "p/q".
#[pyfunction]
fn normalize_numeral(token: &str) -> PyResult<String> {
    Ok(addmin::rat::parse_ratio(token)
        .map_err(to_py_err)?
        .to_string())
}

#[pymodule]
fn addmin_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_class::<PyCell>()?;
    m.add_class::<PyDescription>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_numeral, m)?)?;
    Ok(())
}
