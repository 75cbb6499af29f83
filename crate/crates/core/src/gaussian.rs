//! Covariance-matrix description of multimode Gaussian states.
//!
//! Quadratures are ordered `(x1, p1, ..., xN, pN)` and the vacuum has the
//! identity covariance, so a thermal mode holding `n` photons on average has
//! covariance `(2n + 1) I`.

use std::f64::consts::LN_2;
use std::fmt;

use nalgebra::{DMatrix, Matrix2};

use crate::error::{Error, Result};

/// Largest state handled; the wiretap model needs five modes.
pub const MAX_MODES: usize = 5;

/// Symplectic eigenvalues further than this below one mark an unphysical
/// state; anything closer is rounding noise and is clamped up to one.
pub const UNPHYSICAL_TOLERANCE: f64 = 1e-6;

/// Bosonic entropy `(x+1) log2(x+1) - x log2(x)` of a thermal mode with
/// mean photon number `x`, in bits.
pub fn entropy_g(x: f64) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::param("x", x, "mean photon number must be non-negative"));
    }
    Ok(g(x))
}

/// Written as `log2(1+x) + x log2(1 + 1/x)` so large arguments keep full
/// precision; callers guarantee `x >= 0`.
pub(crate) fn g(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x.is_infinite() {
        return f64::INFINITY;
    }
    (x.ln_1p() + x * (1.0 / x).ln_1p()) / LN_2
}

/// The `2N x 2N` block-diagonal form with blocks `[[0, 1], [-1, 0]]`.
pub fn symplectic_form(modes: usize) -> DMatrix<f64> {
    let mut omega = DMatrix::zeros(2 * modes, 2 * modes);
    for k in 0..modes {
        omega[(2 * k, 2 * k + 1)] = 1.0;
        omega[(2 * k + 1, 2 * k)] = -1.0;
    }
    omega
}

/// Covariance matrix of a physical Gaussian state.
#[derive(Clone, PartialEq)]
pub struct CovarianceMatrix {
    matrix: DMatrix<f64>,
}

impl fmt::Debug for CovarianceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CovarianceMatrix({} modes){}", self.modes(), self.matrix)
    }
}

impl CovarianceMatrix {
    /// Validates symmetry and the uncertainty principle.
    pub fn from_matrix(matrix: DMatrix<f64>) -> Result<Self> {
        let n = matrix.nrows();
        if n == 0 || n != matrix.ncols() || !n.is_multiple_of(2) {
            return Err(Error::Unphysical(format!(
                "expected a non-empty 2N x 2N matrix, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if n / 2 > MAX_MODES {
            return Err(Error::Unphysical(format!(
                "{} modes exceeds the supported maximum of {MAX_MODES}",
                n / 2
            )));
        }
        if matrix.iter().any(|v| !v.is_finite()) {
            return Err(Error::Unphysical("non-finite entry".into()));
        }
        let scale = matrix.amax().max(1.0);
        let asym = (&matrix - matrix.transpose()).amax();
        if asym > 1e-12 * scale {
            return Err(Error::Unphysical(format!("asymmetry {asym:e}")));
        }
        let cov = Self {
            matrix: symmetrized(matrix),
        };
        cov.symplectic_eigenvalues()?;
        Ok(cov)
    }

    fn from_trusted(matrix: DMatrix<f64>) -> Self {
        Self {
            matrix: symmetrized(matrix),
        }
    }

    pub fn vacuum(modes: usize) -> Self {
        Self::from_trusted(DMatrix::identity(2 * modes, 2 * modes))
    }

    /// Single-mode thermal state with `n` mean photons.
    pub fn thermal(n: f64) -> Result<Self> {
        if n.is_nan() || n < 0.0 || n.is_infinite() {
            return Err(Error::param("n", n, "mean photon number must be finite and non-negative"));
        }
        Ok(Self::from_trusted(DMatrix::identity(2, 2) * (2.0 * n + 1.0)))
    }

    pub fn modes(&self) -> usize {
        self.matrix.nrows() / 2
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// 2x2 block coupling modes `i` and `j`.
    pub fn block(&self, i: usize, j: usize) -> Matrix2<f64> {
        self.matrix.fixed_view::<2, 2>(2 * i, 2 * j).into_owned()
    }

    /// Mean photon number of mode `i`, `(tr(sigma_i)/2 - 1) / 2`.
    pub fn mean_photons(&self, i: usize) -> f64 {
        let b = self.block(i, i);
        ((b[(0, 0)] + b[(1, 1)]) / 2.0 - 1.0) / 2.0
    }

    fn check_mode(&self, index: usize) -> Result<()> {
        if index < self.modes() {
            Ok(())
        } else {
            Err(Error::ModeIndex {
                index,
                modes: self.modes(),
            })
        }
    }

    /// Symplectic spectrum, sorted in descending order.
    pub fn symplectic_eigenvalues(&self) -> Result<Vec<f64>> {
        symplectic_eigenvalues(self)
    }

    pub fn entropy(&self) -> Result<f64> {
        von_neumann_entropy(self)
    }
}

fn symmetrized(m: DMatrix<f64>) -> DMatrix<f64> {
    (&m + m.transpose()) * 0.5
}

/// Two-mode squeezed vacuum whose arms each carry `mu` mean photons.
pub fn tmsv_covariance(mu: f64) -> Result<CovarianceMatrix> {
    if mu.is_nan() || mu < 0.0 || mu.is_infinite() {
        return Err(Error::param("mu", mu, "mean photon number must be finite and non-negative"));
    }
    let v = 2.0 * mu + 1.0;
    let c = 2.0 * (mu * (mu + 1.0)).sqrt();
    let mut m = DMatrix::identity(4, 4) * v;
    m[(0, 2)] = c;
    m[(2, 0)] = c;
    m[(1, 3)] = -c;
    m[(3, 1)] = -c;
    Ok(CovarianceMatrix::from_trusted(m))
}

/// Mixes modes `i` and `j` on a beamsplitter of transmissivity `tau`.
///
/// Mode `i` leaves as `sqrt(tau) a_i + sqrt(1-tau) a_j` and mode `j` as
/// `-sqrt(1-tau) a_i + sqrt(tau) a_j`.
pub fn apply_beamsplitter(
    cov: &CovarianceMatrix,
    mode_i: usize,
    mode_j: usize,
    tau: f64,
) -> Result<CovarianceMatrix> {
    cov.check_mode(mode_i)?;
    cov.check_mode(mode_j)?;
    if mode_i == mode_j {
        return Err(Error::param("mode_j", mode_j as f64, "must differ from mode_i"));
    }
    if !(0.0..=1.0).contains(&tau) {
        return Err(Error::param("tau", tau, "transmissivity must lie in [0, 1]"));
    }
    let n = cov.matrix.nrows();
    let t = tau.sqrt();
    let r = (1.0 - tau).sqrt();
    let mut s = DMatrix::identity(n, n);
    for q in 0..2 {
        let (a, b) = (2 * mode_i + q, 2 * mode_j + q);
        s[(a, a)] = t;
        s[(a, b)] = r;
        s[(b, a)] = -r;
        s[(b, b)] = t;
    }
    Ok(CovarianceMatrix::from_trusted(&s * &cov.matrix * s.transpose()))
}

/// Appends an uncorrelated mode with covariance `variance * I`.
pub fn attach_mode(cov: &CovarianceMatrix, variance: f64) -> Result<CovarianceMatrix> {
    if !(variance >= 1.0 && variance.is_finite()) {
        return Err(Error::param("variance", variance, "must be at least the vacuum variance 1"));
    }
    if cov.modes() + 1 > MAX_MODES {
        return Err(Error::Unphysical(format!(
            "attaching a mode would exceed {MAX_MODES} modes"
        )));
    }
    let n = cov.matrix.nrows();
    let mut m = DMatrix::zeros(n + 2, n + 2);
    m.view_mut((0, 0), (n, n)).copy_from(&cov.matrix);
    m[(n, n)] = variance;
    m[(n + 1, n + 1)] = variance;
    Ok(CovarianceMatrix::from_trusted(m))
}

/// Reduced state on the modes listed in `keep`, in the order given.
pub fn partial_trace(cov: &CovarianceMatrix, keep: &[usize]) -> Result<CovarianceMatrix> {
    if keep.is_empty() {
        return Err(Error::Spec("partial trace must keep at least one mode".into()));
    }
    for (k, &mode) in keep.iter().enumerate() {
        cov.check_mode(mode)?;
        if keep[..k].contains(&mode) {
            return Err(Error::param("keep", mode as f64, "mode listed twice"));
        }
    }
    let idx: Vec<usize> = keep.iter().flat_map(|&m| [2 * m, 2 * m + 1]).collect();
    let sub = DMatrix::from_fn(idx.len(), idx.len(), |r, c| cov.matrix[(idx[r], idx[c])]);
    Ok(CovarianceMatrix::from_trusted(sub))
}

/// State of the remaining modes after an ideal heterodyne measurement of
/// `measured_mode`: `sigma_A - sigma_AB (sigma_B + I)^-1 sigma_AB^T`.
///
/// The result does not depend on the measurement outcome.
pub fn condition_on_heterodyne(cov: &CovarianceMatrix, measured_mode: usize) -> Result<CovarianceMatrix> {
    cov.check_mode(measured_mode)?;
    if cov.modes() < 2 {
        return Err(Error::Spec("heterodyne conditioning needs at least one remaining mode".into()));
    }
    let rest: Vec<usize> = (0..cov.modes()).filter(|&m| m != measured_mode).collect();
    let idx: Vec<usize> = rest.iter().flat_map(|&m| [2 * m, 2 * m + 1]).collect();
    let n = idx.len();
    let a = DMatrix::from_fn(n, n, |r, c| cov.matrix[(idx[r], idx[c])]);
    let ab = DMatrix::from_fn(n, 2, |r, c| cov.matrix[(idx[r], 2 * measured_mode + c)]);
    let b = cov.block(measured_mode, measured_mode) + Matrix2::identity();
    let b_inv = b
        .try_inverse()
        .ok_or_else(|| Error::Unphysical("singular measured-mode block".into()))?;
    let b_inv = DMatrix::from_column_slice(2, 2, b_inv.as_slice());
    let conditioned = a - &ab * b_inv * ab.transpose();
    Ok(CovarianceMatrix::from_trusted(conditioned))
}

/// Symplectic spectrum `nu_1 >= ... >= nu_N >= 1`.
///
/// One mode uses `sqrt(det)`. Larger states take the eigenvalues of the
/// symmetric positive matrix `-(S^1/2 Omega S^1/2)^2`, which share the
/// spectrum of `-(Omega S)^2` and come in degenerate pairs `nu^2`.
pub fn symplectic_eigenvalues(cov: &CovarianceMatrix) -> Result<Vec<f64>> {
    let modes = cov.modes();
    let raw: Vec<f64> = if modes == 1 {
        let m = &cov.matrix;
        let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
        if !(det > 0.0) {
            return Err(Error::Unphysical(format!("determinant {det:e}")));
        }
        vec![det.sqrt()]
    } else {
        let eig = cov.matrix.clone().symmetric_eigen();
        if eig.eigenvalues.iter().any(|&l| !(l > 0.0)) {
            return Err(Error::Unphysical("covariance is not positive definite".into()));
        }
        let root_vals = eig.eigenvalues.map(f64::sqrt);
        let root = &eig.eigenvectors * DMatrix::from_diagonal(&root_vals) * eig.eigenvectors.transpose();
        let omega = symplectic_form(modes);
        let m = &root * omega * &root;
        let sq = -(&m * &m);
        let sq = symmetrized(sq);
        let mut vals: Vec<f64> = sq.symmetric_eigenvalues().iter().copied().collect();
        vals.sort_by(|a, b| b.total_cmp(a));
        vals.iter().step_by(2).map(|v| v.max(0.0).sqrt()).collect()
    };

    raw.into_iter()
        .map(|nu| {
            if nu < 1.0 - UNPHYSICAL_TOLERANCE {
                Err(Error::Unphysical(format!("symplectic eigenvalue {nu} below 1")))
            } else {
                Ok(nu.max(1.0))
            }
        })
        .collect()
}

/// `sum_i g((nu_i - 1) / 2)` in bits.
pub fn von_neumann_entropy(cov: &CovarianceMatrix) -> Result<f64> {
    Ok(symplectic_eigenvalues(cov)?
        .into_iter()
        .map(|nu| g((nu - 1.0) / 2.0))
        .sum())
}
