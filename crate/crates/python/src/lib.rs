//! Python bindings. Reports are returned as plain dicts built from the same
//! JSON documents the CLI prints.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use setopt::asymptotics::{check_condition_12, default_directions};
use setopt::diagnostics::{default_lambda_probe, default_transfer_lambdas};
use setopt::{report, ConeSpec, PointCloudSet, RayOptions, ScalarField, SetValuedProblem};

create_exception!(setopt_py, SetOptError, PyValueError);
create_exception!(setopt_py, InternalError, PyRuntimeError);

fn to_py(e: setopt::SetOptError) -> PyErr {
    let msg = format!("{}: {e}", e.kind());
    if e.is_internal() {
        InternalError::new_err(msg)
    } else {
        SetOptError::new_err(msg)
    }
}

fn to_dict<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn cloud(points: Vec<Vec<f64>>) -> PyResult<PointCloudSet> {
    PointCloudSet::new(points).map_err(to_py)
}

/// Polyhedral cone `{y : <w_j, y> >= 0}` with an interior order unit `q`.
#[pyclass(name = "Cone", frozen)]
struct PyCone(ConeSpec);

#[pymethods]
impl PyCone {
    #[new]
    #[pyo3(signature = (dual_generators, q, tol=None))]
    fn new(dual_generators: Vec<Vec<f64>>, q: Vec<f64>, tol: Option<f64>) -> PyResult<Self> {
        let cone = match tol {
            Some(t) => ConeSpec::with_tolerance(dual_generators, q, t),
            None => ConeSpec::new(dual_generators, q),
        };
        cone.map(PyCone).map_err(to_py)
    }

    #[staticmethod]
    fn orthant(q: Vec<f64>) -> PyResult<Self> {
        ConeSpec::nonnegative_orthant(q).map(PyCone).map_err(to_py)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn q(&self) -> Vec<f64> {
        self.0.order_unit().to_vec()
    }

    fn contains(&self, y: Vec<f64>) -> PyResult<bool> {
        self.0.contains(&y).map_err(to_py)
    }

    fn contains_interior(&self, y: Vec<f64>) -> PyResult<bool> {
        self.0.contains_interior(&y).map_err(to_py)
    }

    /// Gerstewitz scalarization `ψ(y)` in closed form.
    fn gerstewitz(&self, y: Vec<f64>) -> PyResult<f64> {
        self.0.gerstewitz(&y).map(|v| v.0).map_err(to_py)
    }

    #[pyo3(signature = (y, tol=1e-9))]
    fn gerstewitz_oracle(&self, y: Vec<f64>, tol: f64) -> PyResult<f64> {
        self.0.gerstewitz_oracle(&y, tol).map(|v| v.0).map_err(to_py)
    }

    /// `A <=^l B` for finite point sets.
    fn lower_less(&self, a: Vec<Vec<f64>>, b: Vec<Vec<f64>>) -> PyResult<bool> {
        setopt::lower_less(&cloud(a)?, &cloud(b)?, &self.0).map_err(to_py)
    }

    fn strictly_lower_less(&self, a: Vec<Vec<f64>>, b: Vec<Vec<f64>>) -> PyResult<bool> {
        setopt::strictly_lower_less(&cloud(a)?, &cloud(b)?, &self.0).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Cone(dual_generators={:?}, q={:?})", self.0.dual_generators(), self.0.order_unit())
    }
}

/// A set-valued problem on a finite grid.
#[pyclass(name = "Problem", frozen)]
struct PyProblem(SetValuedProblem);

#[pymethods]
impl PyProblem {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        SetValuedProblem::from_json(text).map(PyProblem).map_err(to_py)
    }

    /// One of the built-in examples, see `fixture_names()`.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        Self::from_json(&fixture_json(name)?)
    }

    fn to_json(&self) -> String {
        self.0.to_document().to_json_pretty()
    }

    #[getter]
    fn grid(&self) -> Vec<Vec<f64>> {
        self.0.grid().points().to_vec()
    }

    #[getter]
    fn cone(&self) -> PyCone {
        PyCone(self.0.cone().clone())
    }

    #[getter]
    fn m_f_q(&self) -> f64 {
        setopt::m_f_q(&self.0).0
    }

    /// The point cloud `F(x)` at a grid point.
    fn evaluate(&self, x: Vec<f64>) -> PyResult<Vec<Vec<f64>>> {
        self.0.evaluate(&x).map(|c| c.points().to_vec()).map_err(to_py)
    }

    fn psi_f(&self, x: Vec<f64>) -> PyResult<f64> {
        setopt::psi_f(&self.0, &x).map(|v| v.0).map_err(to_py)
    }

    /// `(x, Ψ_F(x))` for every grid point.
    fn psi_table(&self) -> Vec<(Vec<f64>, f64)> {
        let field = ScalarField::compute(&self.0);
        field.points().iter().cloned().zip(field.values().iter().map(|v| v.0)).collect()
    }

    fn colevel(&self, lam: f64) -> PyResult<Vec<Vec<f64>>> {
        setopt::colevel(&self.0, lam).map(report::sorted_points).map_err(to_py)
    }

    fn colevel_at_set(&self, points: Vec<Vec<f64>>) -> PyResult<Vec<Vec<f64>>> {
        setopt::colevel_at_set(&self.0, &cloud(points)?).map(report::sorted_points).map_err(to_py)
    }

    fn restricted_to_ball(&self, radius: f64) -> PyResult<Self> {
        self.0.restricted_to_ball(radius).map(PyProblem).map_err(to_py)
    }

    fn solve<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &setopt::solve(&self.0).map_err(to_py)?.to_json())
    }

    /// `which` is one of `all`, `srgi`, `sgicc`, `cond12`, `transfer`, `attainment`.
    #[pyo3(signature = (which="all"))]
    fn check<'py>(&self, py: Python<'py>, which: &str) -> PyResult<Bound<'py, PyAny>> {
        let p = &self.0;
        let m = setopt::m_f_q(p).0;
        let v = match which {
            "all" => setopt::weierstrass_report(p).map(|r| r.to_json()),
            "srgi" => setopt::check_srgi(p, None).map(|c| c.to_json()),
            "sgicc" => setopt::check_sgicc(p, default_lambda_probe(m)).map(|c| c.to_json()),
            "cond12" => setopt::diagnostics::condition_12_verdict(
                p,
                &default_directions(p.grid().dim()),
                &RayOptions::default(),
            )
            .map(|c| c.to_json()),
            "transfer" => setopt::check_transfer_closed(p, &default_transfer_lambdas(m)).map(|c| c.to_json()),
            "attainment" => Ok(setopt::check_attainment(p).to_json()),
            other => return Err(PyValueError::new_err(format!("unknown check {other:?}"))),
        }
        .map_err(to_py)?;
        to_dict(py, &v)
    }

    /// Ray estimate of the asymptotic function along `direction`.
    #[pyo3(signature = (direction, t_min=1.0, t_max=1e6, steps=40))]
    fn asymptotic<'py>(
        &self,
        py: Python<'py>,
        direction: Vec<f64>,
        t_min: f64,
        t_max: f64,
        steps: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let schedule = RayOptions { t_min, t_max, steps }.schedule(direction).map_err(to_py)?;
        to_dict(py, &setopt::f_g_infty(&self.0, &schedule).map_err(to_py)?.to_json())
    }

    #[pyo3(signature = (directions=None))]
    fn condition_12<'py>(&self, py: Python<'py>, directions: Option<Vec<Vec<f64>>>) -> PyResult<Bound<'py, PyAny>> {
        let dirs = directions.unwrap_or_else(|| default_directions(self.0.grid().dim()));
        let rep = check_condition_12(&self.0, &dirs, &RayOptions::default()).map_err(to_py)?;
        to_dict(py, &rep.to_json())
    }

    fn oracle<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &setopt::crossval::oracle_problem(&self.0).map_err(to_py)?.to_json())
    }

    fn __len__(&self) -> usize {
        self.0.grid().len()
    }
}

#[pyfunction]
fn fixture_names() -> Vec<&'static str> {
    setopt::fixtures::all().into_iter().map(|(name, _)| name).collect()
}

#[pyfunction]
fn fixture_json(name: &str) -> PyResult<String> {
    setopt::fixtures::all()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, doc)| doc.to_json_pretty())
        .ok_or_else(|| PyValueError::new_err(format!("unknown fixture {name:?}")))
}

#[pyfunction]
#[pyo3(signature = (seed, count=1000, tol=1e-9))]
fn oracle_random<'py>(py: Python<'py>, seed: u64, count: usize, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &setopt::crossval::oracle_random(seed, count, tol).map_err(to_py)?.to_json())
}

#[pymodule]
fn setopt_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCone>()?;
    m.add_class::<PyProblem>()?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_json, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_random, m)?)?;
    m.add("SetOptError", m.py().get_type::<SetOptError>())?;
    m.add("InternalError", m.py().get_type::<InternalError>())?;
    Ok(())
}
