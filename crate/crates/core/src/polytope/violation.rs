//! Quantum evaluation of correlation inequalities.
//!
//! Each coordinate `A_j A_k` is replaced by the product of the Householder
//! reflections `A_u = 𝟙 − 2 v̂_u v̂_uᵀ`. For co-contextual `u, v` the two
//! reflections commute, so every term and hence `M = Σ c · A_jA_k` is
//! symmetric. A quantum state violates `c·w + a ≥ 0` when some unit vector
//! gives `⟨M⟩ + a < 0`, i.e. when `λ_min(M) + a < 0`.

use num_traits::ToPrimitive;
use serde::Serialize;

use super::form::LinearForm;
use super::PairConfiguration;
use crate::error::{Error, Result};
use crate::geometry::{eigen_sym3, LabeledFor, Mat3, Vec3, DEFAULT_EIGEN_TOL};

/// Margins above `-VIOLATION_TOL` count as saturating, not violating, the
/// bound; this absorbs rounding in the eigensolver.
pub const VIOLATION_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuantumViolation {
    pub min_eigenvalue: f64,
    pub eigenvector: Vec3,
    /// Classical constant `a` of the form.
    pub constant: f64,
    /// `λ_min + a`; the bound is violated when this is negative.
    pub margin: f64,
    pub violated: bool,
}

/// `Σ c_(j,k) A_j A_k`, symmetrized to remove rounding asymmetry.
pub fn operator(form: &LinearForm, f: &LabeledFor, cfg: &PairConfiguration) -> Result<Mat3> {
    if form.dimension() != cfg.len() {
        return Err(Error::DimensionMismatch {
            expected: cfg.len(),
            got: form.dimension(),
        });
    }
    let mut m = Mat3::ZERO;
    for (c, (u, v)) in form.coefficients.iter().zip(&cfg.pairs) {
        let c = c.to_f64().expect("finite coefficient");
        if c == 0.0 {
            continue;
        }
        m += (f.householder(u)? * f.householder(v)?).scale(c);
    }
    Ok(m.symmetrized())
}

pub fn quantum_violation(form: &LinearForm, f: &LabeledFor, cfg: &PairConfiguration) -> Result<QuantumViolation> {
    if form.is_equality() {
        return Err(Error::Unsupported("quantum violation of an equality".into()));
    }
    let m = operator(form, f, cfg)?;
    let (min_eigenvalue, eigenvector) = eigen_sym3(&m, DEFAULT_EIGEN_TOL)?.min();
    let constant = form.constant.to_f64().expect("finite constant");
    let margin = min_eigenvalue + constant;
    Ok(QuantumViolation {
        min_eigenvalue,
        eigenvector,
        constant,
        margin,
        violated: margin < -VIOLATION_TOL,
    })
}
