//! The dispersion relation Θ + 1/Θ = 2 − z and its contracting branch.
//!
//! Θ(z) is the root with |Θ| ≤ 1; it maps the plane cut along the band
//! \[0, 4\] into the unit disk, with the edges z = 0 and z = 4 going to
//! Θ = +1 and Θ = −1. Strictly inside the band both roots are unimodular
//! and no branch is selected.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Contracting root of the dispersion equation for real z ∉ (0, 4).
pub fn theta_of_z(z: f64) -> Result<f64> {
    if z > 0.0 && z < 4.0 {
        return Err(Error::BranchUndefined(z));
    }
    let w = 2.0 - z;
    let s = (w * w - 4.0).max(0.0).sqrt();
    // |Θ| ≤ 1 root via the product-of-roots form, avoiding cancellation.
    Ok(if w >= 0.0 { 2.0 / (w + s) } else { 2.0 / (w - s) })
}

/// Contracting root for complex z; |Θ(z)| < 1 off the cut.
pub fn theta_of_z_complex(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re > 0.0 && z.re < 4.0 {
        return Err(Error::BranchUndefined(z.re));
    }
    let w = Complex64::new(2.0, 0.0) - z;
    let s = (w * w - Complex64::new(4.0, 0.0)).sqrt();
    let r1 = (w + s) / 2.0;
    let r2 = (w - s) / 2.0;
    Ok(if r1.norm_sqr() <= r2.norm_sqr() { r1 } else { r2 })
}

/// Inverse map z = 2 − Θ − 1/Θ; exact for exact Θ.
pub fn z_of_theta<T: Scalar>(theta: &T) -> Result<T> {
    if theta.sign0() == 0 {
        return Err(Error::ThetaPole);
    }
    Ok(T::from_i64(2) - theta.clone() - T::one() / theta.clone())
}

pub fn z_of_theta_complex(theta: Complex64) -> Result<Complex64> {
    if theta == Complex64::new(0.0, 0.0) {
        return Err(Error::ThetaPole);
    }
    Ok(Complex64::new(2.0, 0.0) - theta - theta.inv())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_i, Rat};

    #[test]
    fn band_edges() {
        assert_eq!(theta_of_z(0.0).unwrap(), 1.0);
        assert_eq!(theta_of_z(4.0).unwrap(), -1.0);
    }

    #[test]
    fn rational_pair_below_threshold() {
        // Θ = 1/2 gives 2 − 1/2 − 2 = −1/2; the contracting branch undoes it.
        assert_eq!(z_of_theta(&rat(1, 2)).unwrap(), rat(-1, 2));
        assert!((theta_of_z(-0.5).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn inverse_on_both_sides() {
        for &z in &[-10.0, -1.0, -1e-6, 4.0 + 1e-6, 5.0, 50.0] {
            let theta = theta_of_z(z).unwrap();
            assert!(theta.abs() <= 1.0);
            let back = z_of_theta(&theta).unwrap();
            assert!((back - z).abs() <= 1e-9 * z.abs().max(1.0), "z = {z}, back = {back}");
        }
        // Right side maps into (−1, 0).
        assert!(theta_of_z(5.0).unwrap() < 0.0);
    }

    #[test]
    fn inside_band_is_rejected() {
        assert!(matches!(theta_of_z(2.0), Err(Error::BranchUndefined(_))));
        assert!(matches!(theta_of_z(3.999), Err(Error::BranchUndefined(_))));
        assert!(theta_of_z(-0.0).is_ok());
    }

    #[test]
    fn theta_pole() {
        assert!(matches!(z_of_theta(&rat_i(0)), Err(Error::ThetaPole)));
    }

    #[test]
    fn complex_branch_contracts() {
        for &(re, im) in &[(2.0, 1.0), (2.0, -0.3), (-1.0, 0.5), (7.0, 2.0)] {
            let z = Complex64::new(re, im);
            let th = theta_of_z_complex(z).unwrap();
            assert!(th.norm() < 1.0, "|Θ({z})| = {}", th.norm());
            let back = z_of_theta_complex(th).unwrap();
            assert!((back - z).norm() < 1e-10);
        }
    }

    #[test]
    fn exact_inverse_of_float_branch() {
        // z(Θ) then Θ(z) round-trips on the range of the contracting branch.
        let theta: Rat = rat(-3, 5);
        let z = z_of_theta(&theta).unwrap();
        let th = theta_of_z(z.to_f64_lossy()).unwrap();
        assert!((th - (-0.6)).abs() < 1e-15);
    }
}
