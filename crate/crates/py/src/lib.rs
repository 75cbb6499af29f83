//! Python bindings for `fso_wiretap`.
//!
//! Lengths are SI (metres) throughout, as in the Rust API.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use fso_wiretap::bounds::{self, ApertureRatio, InputPower, Reconciliation};
use fso_wiretap::sweep::{self, MuStar, PowerSetting, ScenarioParams, Spacing, SweepSpec, SweepVariable};
use fso_wiretap::Error;

fn to_py(err: Error) -> PyErr {
    match err {
        Error::InvalidParameter { .. } | Error::Spec(_) | Error::ModeIndex { .. } => {
            PyValueError::new_err(err.to_string())
        }
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn reconciliation(name: &str) -> PyResult<Reconciliation> {
    match name.to_ascii_lowercase().as_str() {
        "dr" | "direct" => Ok(Reconciliation::Direct),
        "rr" | "reverse" => Ok(Reconciliation::Reverse),
        _ => Err(PyValueError::new_err(format!("unknown reconciliation `{name}`; use 'dr' or 'rr'"))),
    }
}

fn mu_star(py: Python<'_>, mu: MuStar) -> PyResult<Py<PyAny>> {
    Ok(match mu {
        MuStar::Finite(m) => m.into_pyobject(py)?.into_any().unbind(),
        MuStar::Unbounded => "unbounded".into_pyobject(py)?.into_any().unbind(),
        MuStar::NoKey => "none".into_pyobject(py)?.into_any().unbind(),
    })
}

/// Channel parameters at one link configuration.
#[pyclass(name = "ChannelPoint", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
struct PyChannelPoint(fso_wiretap::ChannelPoint);

#[pymethods]
impl PyChannelPoint {
    #[new]
    #[pyo3(signature = (eta, kappa, n_e=0.0, distance=0.0, frequency=0.0))]
    fn new(eta: f64, kappa: f64, n_e: f64, distance: f64, frequency: f64) -> PyResult<Self> {
        fso_wiretap::ChannelPoint::new(eta, kappa, n_e, distance, frequency)
            .map(Self)
            .map_err(to_py)
    }

    #[getter]
    fn eta(&self) -> f64 {
        self.0.eta
    }

    #[getter]
    fn kappa(&self) -> f64 {
        self.0.kappa
    }

    #[getter]
    fn n_e(&self) -> f64 {
        self.0.n_e
    }

    #[getter]
    fn distance(&self) -> f64 {
        self.0.distance
    }

    #[getter]
    fn frequency(&self) -> f64 {
        self.0.frequency
    }

    fn __repr__(&self) -> String {
        format!(
            "ChannelPoint(eta={:e}, kappa={:e}, n_e={:e}, distance={}, frequency={:e})",
            self.0.eta, self.0.kappa, self.0.n_e, self.0.distance, self.0.frequency
        )
    }
}

/// Lower and upper key-rate bounds in bits per channel use.
#[pyclass(name = "RateBound", frozen)]
struct PyRateBound(bounds::RateBound);

#[pymethods]
impl PyRateBound {
    #[getter]
    fn k_dr(&self) -> f64 {
        self.0.k_dr
    }

    #[getter]
    fn k_rr(&self) -> f64 {
        self.0.k_rr
    }

    #[getter]
    fn k_best(&self) -> f64 {
        self.0.k_best
    }

    #[getter]
    fn k_upper(&self) -> f64 {
        self.0.k_upper
    }

    #[getter]
    fn dr_clamped(&self) -> bool {
        self.0.dr_clamped
    }

    #[getter]
    fn rr_clamped(&self) -> bool {
        self.0.rr_clamped
    }

    fn __repr__(&self) -> String {
        format!(
            "RateBound(k_dr={}, k_rr={}, k_best={}, k_upper={})",
            self.0.k_dr, self.0.k_rr, self.0.k_best, self.0.k_upper
        )
    }
}

/// A full scenario in SI units; `mu=None` optimises the input power.
#[pyclass(name = "Scenario", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
struct PyScenario(ScenarioParams);

#[pymethods]
impl PyScenario {
    #[new]
    #[pyo3(signature = (
        wavelength=1550e-9, temperature=3.0, waist_radius=0.05, r_alice=0.05,
        r_bob=0.05, r_eve=0.05, distance=10e3, beta=1.0, mu=None
    ))]
    #[allow(clippy::too_many_arguments)]
    fn new(
        wavelength: f64,
        temperature: f64,
        waist_radius: f64,
        r_alice: f64,
        r_bob: f64,
        r_eve: f64,
        distance: f64,
        beta: f64,
        mu: Option<f64>,
    ) -> Self {
        Self(ScenarioParams {
            wavelength,
            temperature,
            waist_radius,
            r_alice,
            r_bob,
            r_eve,
            distance,
            beta,
            power: mu.map_or(PowerSetting::Optimize, PowerSetting::Fixed),
        })
    }

    fn channel(&self) -> PyResult<PyChannelPoint> {
        self.0.channel().map(PyChannelPoint).map_err(to_py)
    }

    /// Bounds with the optimal or fixed input power; returns a dict.
    fn evaluate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let p = sweep::evaluate_point(&self.0).map_err(to_py)?;
        point_dict(py, &p)
    }
}

fn point_dict<'py>(py: Python<'py>, p: &sweep::PointResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("eta", p.channel.eta)?;
    d.set_item("kappa", p.channel.kappa)?;
    d.set_item("n_e", p.channel.n_e)?;
    d.set_item("k_dr", p.bound.k_dr)?;
    d.set_item("k_rr", p.bound.k_rr)?;
    d.set_item("k_best", p.bound.k_best)?;
    d.set_item("k_upper", p.bound.k_upper)?;
    d.set_item("mu_star_dr", mu_star(py, p.mu_star_dr)?)?;
    d.set_item("mu_star_rr", mu_star(py, p.mu_star_rr)?)?;
    d.set_item("dr_clamped", p.bound.dr_clamped)?;
    d.set_item("rr_clamped", p.bound.rr_clamped)?;
    Ok(d)
}

/// Bounds at a channel point; `mu=None` evaluates the unbounded-power limit.
#[pyfunction]
#[pyo3(signature = (channel, beta=1.0, mu=None))]
fn evaluate_bounds(channel: &PyChannelPoint, beta: f64, mu: Option<f64>) -> PyResult<PyRateBound> {
    let power = mu.map_or(InputPower::Unbounded, InputPower::Fixed);
    bounds::evaluate_bounds(&channel.0, beta, power)
        .map(PyRateBound)
        .map_err(to_py)
}

/// Optimal input power for 'dr' or 'rr'; returns `(mu_star, k_at_star)`.
#[pyfunction]
fn optimal_input_power(
    py: Python<'_>,
    channel: &PyChannelPoint,
    beta: f64,
    reconciliation_kind: &str,
) -> PyResult<(Py<PyAny>, f64)> {
    let r = sweep::optimal_input_power(&channel.0, beta, reconciliation(reconciliation_kind)?).map_err(to_py)?;
    Ok((mu_star(py, r.mu_star)?, r.k_at_star))
}

/// Sweeps `variable` over `[min, max]` (SI units) around `scenario`.
///
/// Returns a list of row dicts; failed points carry an `error` key.
#[pyfunction]
#[pyo3(signature = (scenario, variable, min, max, count=200, log=true))]
fn run_sweep<'py>(
    py: Python<'py>,
    scenario: &PyScenario,
    variable: &str,
    min: f64,
    max: f64,
    count: usize,
    log: bool,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let variable = SweepVariable::parse(variable)
        .ok_or_else(|| PyValueError::new_err(format!("unknown sweep variable `{variable}`")))?;
    let spec = SweepSpec {
        variable,
        min,
        max,
        count,
        spacing: if log { Spacing::Log } else { Spacing::Linear },
        fixed: scenario.0,
    };
    let rows = py.detach(|| sweep::run_sweep(&spec)).map_err(to_py)?;
    rows.iter()
        .map(|row| {
            let d = match &row.result {
                Ok(p) => point_dict(py, p)?,
                Err(e) => {
                    let d = PyDict::new(py);
                    d.set_item("error", e.to_string())?;
                    d
                }
            };
            d.set_item("x", row.x)?;
            Ok(d)
        })
        .collect()
}

/// Threshold aperture ratio where the direct and reverse asymptotes cross.
#[pyfunction]
fn m_threshold() -> f64 {
    bounds::m_threshold()
}

/// Large-distance rate `(k_dr, k_rr, k_best, k_upper)` for aperture ratio `m`.
#[pyfunction]
fn asymptotes(m: f64) -> PyResult<(f64, f64, f64, f64)> {
    let m = ApertureRatio::new(m).map_err(to_py)?;
    Ok((
        bounds::asymptote_direct(m),
        bounds::asymptote_reverse(m),
        bounds::asymptote_best(m),
        bounds::upper_bound_asymptotic(m),
    ))
}

/// Von Neumann entropy in bits of a thermal state with `x` mean photons.
#[pyfunction]
fn entropy_g(x: f64) -> PyResult<f64> {
    fso_wiretap::gaussian::entropy_g(x).map_err(to_py)
}

#[pymodule]
fn fsowiretap(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyChannelPoint>()?;
    m.add_class::<PyRateBound>()?;
    m.add_class::<PyScenario>()?;
    m.add_function(wrap_pyfunction!(evaluate_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(optimal_input_power, m)?)?;
    m.add_function(wrap_pyfunction!(run_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(m_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotes, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_g, m)?)?;
    Ok(())
}
