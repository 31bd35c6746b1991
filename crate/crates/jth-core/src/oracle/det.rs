//! The perturbation determinant as a rational function of Θ.
//!
//! det_{J_n/J}(2 − Θ − 1/Θ) = j₀⁽ⁿ⁾(Θ) / j₀⁽⁰⁾(Θ) with j₀⁽⁰⁾ = (1 − Θ²)/2.
//! Generically there are simple poles at Θ = ±1; a pole disappears exactly
//! when the matching threshold Jost value vanishes, and then the determinant
//! extends continuously through the edge. The scaled limits
//! √(−z)·det → j₀⁽ⁿ⁾(1) (z ↑ 0) and √(z−4)·det → j₀⁽ⁿ⁾(−1) (z ↓ 4)
//! recover the threshold Jost functions numerically.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::jost::{eval_complex, jost_coeffs, jost_eval};
use crate::potential::Potential;
use crate::scalar::Scalar;
use crate::theta::{theta_of_z, z_of_theta};

use super::virtual_state::Edge;

/// det_{J_n/J} at the local parameter Θ ∉ {−1, 0, 1}.
///
/// At Θ = ±1 the value is the continuous extension when the corresponding
/// threshold Jost value vanishes (computed from the deflated quotient) and
/// a [`Error::DeterminantPole`] otherwise.
pub fn perturbation_det<T: Scalar>(pot: &Potential<T>, theta: &T, tol: f64) -> Result<T> {
    if theta.sign0() == 0 {
        return Err(Error::DeterminantAtZero);
    }
    let one = T::one();
    let two = T::from_i64(2);
    for sign in [1i64, -1] {
        let edge = T::from_i64(sign);
        if *theta == edge {
            let j = jost_coeffs(pot);
            let scale = j
                .coeffs()
                .iter()
                .map(|c| c.abs_val())
                .fold(T::one(), |m, a| if a > m { a } else { m });
            let value = j.eval(&edge);
            if !value.is_zero_at(&scale, tol) {
                return Err(Error::DeterminantPole(sign as f64));
            }
            // j = (Θ − edge)·g; the cofactor (1 ∓ Θ) of j₀⁽⁰⁾ cancels.
            let (g, _) = j.deflate(&edge);
            let at = g.eval(&edge);
            return Ok(if sign == 1 {
                // det = −2g/(1 + Θ) → −g(1)
                -at
            } else {
                // det = 2g/(1 − Θ) → h(−1)
                at
            });
        }
    }
    let j = jost_eval(pot, theta);
    Ok(two * j / (one - theta.clone() * theta.clone()))
}

/// Determinant at complex Θ (float potentials).
pub fn perturbation_det_complex(pot: &Potential<f64>, theta: Complex64) -> Result<Complex64> {
    if theta == Complex64::new(0.0, 0.0) {
        return Err(Error::DeterminantAtZero);
    }
    let one = Complex64::new(1.0, 0.0);
    if (theta - one).norm() == 0.0 || (theta + one).norm() == 0.0 {
        let real = perturbation_det(pot, &theta.re, crate::scalar::DEFAULT_TOL)?;
        return Ok(Complex64::new(real, 0.0));
    }
    let j = eval_complex(&jost_coeffs(pot), theta);
    Ok(2.0 * j / (one - theta * theta))
}

/// √(−z)·det (left edge, z < 0) or √(z−4)·det (right edge, z > 4); both
/// converge to the matching threshold Jost value as z approaches the edge.
pub fn threshold_scaled_det(pot: &Potential<f64>, z: f64, edge: Edge) -> Result<f64> {
    let weight = match edge {
        Edge::Left => {
            if z >= 0.0 {
                return Err(Error::Domain(format!(
                    "left-edge scaling needs z < 0, got {z}"
                )));
            }
            (-z).sqrt()
        }
        Edge::Right => {
            if z <= 4.0 {
                return Err(Error::Domain(format!(
                    "right-edge scaling needs z > 4, got {z}"
                )));
            }
            (z - 4.0).sqrt()
        }
    };
    let theta = theta_of_z(z)?;
    let det = perturbation_det(pot, &theta, crate::scalar::DEFAULT_TOL)?;
    Ok(weight * det)
}

/// Rank-one determinant through the resolvent route: the 2×2 system for the
/// m-function f₁ = ((J − z)⁻¹δ₁, δ₁) gives det_{J₁/J} = 1 + v₁f₁. The √2
/// hopping only enters squared, so the solve is exact for exact Θ. This is
/// deliberately independent of the Jost-polynomial machinery.
pub fn rank_one_det_via_m_function<T: Scalar>(pot: &Potential<T>, theta: &T) -> Result<T> {
    if pot.n() != 1 {
        return Err(Error::Domain(format!(
            "m-function determinant is the n = 1 special case, got n = {}",
            pot.n()
        )));
    }
    let z = z_of_theta(theta)?;
    let two = T::from_i64(2);
    let a = two.clone() - z; // 2 − z, the shifted diagonal
    let b = a.clone() - theta.clone(); // 2 − z − Θ, the outgoing closure
    let denom = a * b.clone() - two;
    if denom.sign0() == 0 {
        return Err(Error::DeterminantPole(theta.to_f64_lossy()));
    }
    let f1 = b / denom;
    Ok(T::one() + pot.v(1) * f1)
}
