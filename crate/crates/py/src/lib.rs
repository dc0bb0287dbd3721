//! Python module `pathbij`: paths are passed as `UDFG` strings and families
//! as `"dyck"`, `"motzkin"` or `"bicolored"`.

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use pathbij::enumeration::{count_no_short_descent, generate_paths_capped};
use pathbij::verify::run_all;
use pathbij::{
    Bijection, CountError, CountValue, Direction, Family, LatticePath, Statistic, StepIndex,
    DEFAULT_CAP,
};

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn count_err(e: CountError) -> PyErr {
    match e {
        CountError::Overflow(_) => PyOverflowError::new_err(e.to_string()),
        other => value_err(other),
    }
}

fn family(name: &str) -> PyResult<Family> {
    name.parse().map_err(PyValueError::new_err)
}

fn direction(name: &str) -> PyResult<Direction> {
    match name.to_ascii_lowercase().as_str() {
        "forward" => Ok(Direction::Forward),
        "inverse" => Ok(Direction::Inverse),
        other => Err(PyValueError::new_err(format!(
            "unknown direction {other:?} (expected forward or inverse)"
        ))),
    }
}

fn parse(text: &str, fam: Family) -> PyResult<LatticePath> {
    pathbij::parse_path(text, fam).map_err(value_err)
}

/// Applies a named map to a path string; the input family follows from the
/// map and direction.
fn apply_str(bij: Bijection, dir: Direction, text: &str) -> Result<String, String> {
    let p = pathbij::parse_path(text, bij.domain(dir)).map_err(|e| e.to_string())?;
    bij.apply(dir, &p).map(|q| q.to_string()).map_err(|e| e.to_string())
}

/// A validated lattice path.
#[pyclass(name = "Path", frozen, eq, hash, module = "pathbij", skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPath {
    inner: LatticePath,
}

#[pymethods]
impl PyPath {
    #[new]
    #[pyo3(signature = (text, family = "dyck"))]
    fn new(text: &str, family: &str) -> PyResult<Self> {
        Ok(PyPath {
            inner: parse(text, self::family(family)?)?,
        })
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.inner.family().name()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Path({:?}, family={:?})", self.inner.to_string(), self.inner.family().name())
    }

    fn heights(&self) -> Vec<i64> {
        self.inner.heights()
    }

    fn statistics<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (name, value) in self.inner.statistics().fields() {
            d.set_item(name, value)?;
        }
        Ok(d)
    }

    fn matching_downstep(&self, i: usize) -> PyResult<usize> {
        pathbij::matching_downstep(&self.inner, i).map_err(value_err)
    }

    /// Index of the associated downstep, or `None` for the appended one.
    fn associated_downstep(&self, i: usize) -> PyResult<Option<usize>> {
        match pathbij::associated_downstep(&self.inner, i).map_err(value_err)? {
            StepIndex::At(j) => Ok(Some(j)),
            StepIndex::AppendedDown => Ok(None),
        }
    }

    fn ascii(&self) -> String {
        pathbij::path::ascii_art(&self.inner)
    }
}

#[pyfunction]
#[pyo3(signature = (text, family = "dyck"))]
fn statistics<'py>(py: Python<'py>, text: &str, family: &str) -> PyResult<Bound<'py, PyDict>> {
    PyPath::new(text, family)?.statistics(py)
}

/// Applies `bij` (`t1`, `t2`, `std`, `riordan`) in `direction`.
#[pyfunction]
#[pyo3(signature = (bij, text, direction = "forward"))]
fn apply(bij: &str, text: &str, direction: &str) -> PyResult<String> {
    let bij: Bijection = bij.parse().map_err(PyValueError::new_err)?;
    apply_str(bij, self::direction(direction)?, text).map_err(PyValueError::new_err)
}

macro_rules! map_fn {
    ($name:ident, $bij:expr, $dir:expr) => {
        #[pyfunction]
        fn $name(text: &str) -> PyResult<String> {
            apply_str($bij, $dir, text).map_err(PyValueError::new_err)
        }
    };
}

map_fn!(t1_forward, Bijection::T1, Direction::Forward);
map_fn!(t1_inverse, Bijection::T1, Direction::Inverse);
map_fn!(t2_forward, Bijection::T2, Direction::Forward);
map_fn!(t2_inverse, Bijection::T2, Direction::Inverse);
map_fn!(std_bijection, Bijection::Std, Direction::Forward);
map_fn!(std_bijection_inverse, Bijection::Std, Direction::Inverse);
map_fn!(riordan_to_no_short_descent, Bijection::Riordan, Direction::Forward);

#[pyfunction]
fn restrict_motzkin_to_udu_free(text: &str) -> PyResult<String> {
    let p = parse(text, Family::Motzkin)?;
    pathbij::restrict_motzkin_to_udu_free(&p)
        .map(|q| q.to_string())
        .map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (family, n, cap = DEFAULT_CAP))]
fn generate(family: &str, n: usize, cap: u64) -> PyResult<Vec<String>> {
    let g = generate_paths_capped(self::family(family)?, n, cap).map_err(count_err)?;
    Ok(g.map(|p| p.to_string()).collect())
}

fn count(v: Result<CountValue, CountError>) -> PyResult<u128> {
    v.map(CountValue::get).map_err(count_err)
}

#[pyfunction]
fn catalan(n: usize) -> PyResult<u128> {
    count(pathbij::catalan(n))
}

#[pyfunction]
fn motzkin(n: usize) -> PyResult<u128> {
    count(pathbij::motzkin(n))
}

#[pyfunction]
fn riordan(n: usize) -> PyResult<u128> {
    count(pathbij::riordan(n))
}

#[pyfunction]
fn formula_udu(n: usize, k: usize) -> PyResult<u128> {
    count(pathbij::formula_udu(n, k))
}

#[pyfunction]
fn formula_ddu(n: usize, k: usize) -> PyResult<u128> {
    count(pathbij::formula_ddu(n, k))
}

#[pyfunction]
#[pyo3(signature = (n, cap = DEFAULT_CAP))]
fn count_uuu_free(n: usize, cap: u64) -> PyResult<u128> {
    count(pathbij::count_uuu_free(n, cap))
}

#[pyfunction]
#[pyo3(signature = (n, cap = DEFAULT_CAP))]
fn count_no_short_descents(n: usize, cap: u64) -> PyResult<u128> {
    count(count_no_short_descent(n, cap))
}

type TableRow = (usize, usize, u128, u128, bool);

/// Rows `(n, k, brute, formula, ok)` for statistic `"udu"` or `"ddu"`.
#[pyfunction]
#[pyo3(signature = (stat, n, cap = DEFAULT_CAP))]
fn distribution_table(stat: &str, n: usize, cap: u64) -> PyResult<Vec<TableRow>> {
    let stat: Statistic = stat.parse().map_err(PyValueError::new_err)?;
    let rows = pathbij::distribution_table(stat, n, cap).map_err(count_err)?;
    Ok(rows
        .iter()
        .map(|r| (r.n, r.k, r.brute.get(), r.formula.get(), r.ok()))
        .collect())
}

/// Runs the exhaustive check suite; returns `(name, passed, detail)` triples.
#[pyfunction]
#[pyo3(signature = (max_n = 8, cap = DEFAULT_CAP))]
fn verify(py: Python<'_>, max_n: usize, cap: u64) -> Vec<(String, bool, String)> {
    let outcomes = py.detach(|| run_all(max_n, cap));
    outcomes
        .into_iter()
        .map(|o| {
            let detail = o.result.clone().err().unwrap_or_default();
            (o.name.to_string(), o.passed(), detail)
        })
        .collect()
}

#[pymodule]
#[pyo3(name = "pathbij")]
fn pathbij_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPath>()?;
    m.add_function(wrap_pyfunction!(statistics, m)?)?;
    m.add_function(wrap_pyfunction!(apply, m)?)?;
    m.add_function(wrap_pyfunction!(t1_forward, m)?)?;
    m.add_function(wrap_pyfunction!(t1_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(t2_forward, m)?)?;
    m.add_function(wrap_pyfunction!(t2_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(std_bijection, m)?)?;
    m.add_function(wrap_pyfunction!(std_bijection_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(riordan_to_no_short_descent, m)?)?;
    m.add_function(wrap_pyfunction!(restrict_motzkin_to_udu_free, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(motzkin, m)?)?;
    m.add_function(wrap_pyfunction!(riordan, m)?)?;
    m.add_function(wrap_pyfunction!(formula_udu, m)?)?;
    m.add_function(wrap_pyfunction!(formula_ddu, m)?)?;
    m.add_function(wrap_pyfunction!(count_uuu_free, m)?)?;
    m.add_function(wrap_pyfunction!(count_no_short_descents, m)?)?;
    m.add_function(wrap_pyfunction!(distribution_table, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("DEFAULT_CAP", DEFAULT_CAP)?;
    Ok(())
}
