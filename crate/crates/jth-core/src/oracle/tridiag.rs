//! Finite sections of J_n and eigenvalue counting by LDLᵀ inertia.
//!
//! The pivots of the shifted factorization T − xI = LDLᵀ form a Sturm
//! sequence: the number of negative pivots equals the number of eigenvalues
//! strictly below x. No eigenvectors are ever formed. Counts are taken at
//! −δ and 4 + δ rather than at the band edges, because finite sections
//! scatter near-edge spectrum just inside (0, 4); the margin is a known
//! bias for near-critical potentials.

use crate::error::{Error, Result};
use crate::potential::Potential;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Dirichlet truncation of J + P_nVP_n to the first `size` sites.
#[derive(Debug, Clone)]
pub struct TruncatedOperator {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TruncatedOperator {
    pub fn new(pot: &Potential<f64>, size: usize) -> Result<Self> {
        let min = pot.n() + 2;
        if size < min {
            return Err(Error::TruncationTooSmall { n: size, min });
        }
        let diag = (1..=size).map(|k| 2.0 + pot.v(k)).collect();
        let mut offdiag = vec![-1.0; size - 1];
        offdiag[0] = -SQRT_2;
        Ok(Self { diag, offdiag })
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Number of eigenvalues of the truncation strictly below x.
    ///
    /// An exactly-zero pivot means x hits an eigenvalue of a leading
    /// principal submatrix; the count is retried with a jittered shift.
    pub fn inertia_below(&self, x: f64) -> Result<usize> {
        let jitter = f64::EPSILON * x.abs().max(1.0);
        for attempt in 0..3 {
            let shift = x + attempt as f64 * jitter;
            if let Some(count) = self.try_inertia(shift) {
                return Ok(count);
            }
        }
        Err(Error::PivotBreakdown(3))
    }

    fn try_inertia(&self, x: f64) -> Option<usize> {
        let mut count = 0usize;
        let mut pivot = self.diag[0] - x;
        if pivot == 0.0 {
            return None;
        }
        if pivot < 0.0 {
            count += 1;
        }
        for i in 1..self.diag.len() {
            let e = self.offdiag[i - 1];
            pivot = (self.diag[i] - x) - e * e / pivot;
            if pivot == 0.0 {
                return None;
            }
            if pivot < 0.0 {
                count += 1;
            }
        }
        Some(count)
    }

    /// Gershgorin enclosure of the truncated spectrum.
    pub fn spectral_bounds(&self) -> (f64, f64) {
        let n = self.size();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i < n - 1 { self.offdiag[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo - 1.0, hi + 1.0)
    }

    /// Bisect for the k-th smallest eigenvalue (0-based) within [lo, hi].
    fn eigenvalue_by_index(&self, k: usize, mut lo: f64, mut hi: f64) -> Result<f64> {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if hi - lo < 2.0 * f64::EPSILON * mid.abs().max(1.0) {
                break;
            }
            if self.inertia_below(mid)? <= k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// Discrete spectrum of the truncation outside [0 − δ, 4 + δ],
    /// sorted ascending on each side.
    pub fn eigenvalues_outside(&self, delta: f64) -> Result<(Vec<f64>, Vec<f64>)> {
        let (glo, ghi) = self.spectral_bounds();
        let below_count = self.inertia_below(-delta)?;
        let mut below = Vec::with_capacity(below_count);
        for k in 0..below_count {
            below.push(self.eigenvalue_by_index(k, glo, -delta)?);
        }
        let at_top = self.inertia_below(4.0 + delta)?;
        let above_count = self.size() - at_top;
        let mut above = Vec::with_capacity(above_count);
        for k in 0..above_count {
            above.push(self.eigenvalue_by_index(at_top + k, 4.0 + delta, ghi)?);
        }
        Ok((below, above))
    }
}

/// Bound-state counts (below 0, above 4) of the truncated operator,
/// evaluated at the margins −δ and 4 + δ.
pub fn count_bound_states_matrix(
    pot: &Potential<f64>,
    size: usize,
    delta: f64,
) -> Result<(usize, usize)> {
    let min = (pot.n() + 2).max(500);
    if size < min {
        return Err(Error::TruncationTooSmall { n: size, min });
    }
    if delta <= 0.0 {
        return Err(Error::Domain(format!("margin δ must be positive, got {delta}")));
    }
    let op = TruncatedOperator::new(pot, size)?;
    let k = op.inertia_below(-delta)?;
    let l = size - op.inertia_below(4.0 + delta)?;
    Ok((k, l))
}
