//! Threshold Jost polynomials, critical varieties, and spectral oracles for
//! finite-rank diagonal perturbations of the half-line Jacobi operator
//!
//! ```text
//!       ⎛  2  −√2   0   0  ⋯ ⎞
//!   J = ⎜ −√2   2  −1   0  ⋯ ⎟ ,      J_n = J + P_n V P_n ,
//!       ⎜  0   −1   2  −1  ⋯ ⎟        V = diag[2μ₁, μ₂, …, μ_n, 0, …].
//!       ⎝  ⋮    ⋮   ⋮   ⋮  ⋱ ⎠
//! ```
//!
//! The continuous spectrum is [0, 4]. In the local parameter Θ of the
//! dispersion relation Θ + 1/Θ = 2 − z the Jost function of J_n becomes a
//! polynomial of degree ≤ 2n − 1; its value C_n = Q_n − Q_{n−1} at Θ = 1
//! vanishes exactly when a virtual state sits at the lower band edge, and
//! the zero set V(C_n) cuts the parameter space ℝⁿ into n + 1 components
//! on which the number of bound states below the band is constant (0
//! through n). The reflection μ ↦ −μ plays the same game at the upper edge.
//!
//! Module map:
//! - [`scalar`], [`potential`], [`theta`], [`recurrence`], [`jost`] — the
//!   exact layer: Q/q/𝒬 recurrences, Φ, and the Jost polynomial.
//! - [`classifier`] — sign-change region classification and criticality.
//! - [`oracle`] — independent spectral ground truth: Sturm root counts,
//!   tridiagonal inertia, the perturbation determinant with its threshold
//!   limits, virtual-state construction, and the cofactor linear system.
//! - [`sampler`] — plot-ready variety samples and region censuses (CSV).
//! - [`verify`] — the cross-oracle verification suites.

pub mod classifier;
pub mod error;
pub mod jost;
pub mod oracle;
pub mod potential;
pub mod recurrence;
pub mod sampler;
pub mod scalar;
pub mod theta;
pub mod verify;

pub use error::{Error, Result};
pub use potential::Potential;
pub use scalar::{Rat, Scalar, DEFAULT_TOL};
