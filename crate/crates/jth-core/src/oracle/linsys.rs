//! Jost function via the cofactor linear system (dense solve).
//!
//! The first n+1 components of the Jost solution satisfy a banded system
//! whose last two rows close the recursion with the exact tail values
//! Θ^{n+1} and Θⁿ. Solving it for the first unknown reproduces j₀⁽ⁿ⁾(Θ)
//! through plain Gaussian elimination — a route independent of the
//! polynomial recurrences. The rank-one case is embedded as the rank-two
//! system with v₂ = 0.

use crate::error::{Error, Result};
use crate::potential::Potential;
use crate::theta::z_of_theta;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Solve A x = b by partial-pivot elimination with row equilibration.
/// Returns None when a pivot collapses (singular to working precision).
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for i in 0..n {
        let s = a[i]
            .iter()
            .fold(0.0f64, |m, x| m.max(x.abs()))
            .max(b[i].abs());
        if s > 0.0 {
            for x in &mut a[i] {
                *x /= s;
            }
            b[i] /= s;
        }
    }
    for col in 0..n {
        let pivot_row = (col..n).max_by(|&r, &s| {
            a[r][col]
                .abs()
                .partial_cmp(&a[s][col].abs())
                .expect("pivot comparison")
        })?;
        if a[pivot_row][col].abs() < 1e-250 {
            return None;
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor != 0.0 {
                let (pivot_rows, rest) = a.split_at_mut(col + 1);
                let pivot = &pivot_rows[col];
                for (x, p) in rest[row - col - 1][col..].iter_mut().zip(&pivot[col..]) {
                    *x -= factor * p;
                }
                b[row] -= factor * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

/// j₀⁽ⁿ⁾(Θ) from the (m+1)×(m+1) cofactor system, m = max(n, 2).
///
/// Requires n ≥ 1 and 0 < |Θ| ≤ 1. Singular solves (isolated Θ) are
/// retried with a jittered Θ before reporting failure.
pub fn jost_via_linear_system(pot: &Potential<f64>, theta: f64) -> Result<f64> {
    if pot.n() == 0 {
        return Err(Error::EmptyPotential);
    }
    if theta == 0.0 {
        return Err(Error::ThetaPole);
    }
    if theta.abs() > 1.0 {
        return Err(Error::Domain(format!(
            "cofactor system expects |Θ| ≤ 1, got {theta}"
        )));
    }
    let mut th = theta;
    for _attempt in 0..3 {
        if let Some(value) = assemble_and_solve(pot, th)? {
            return Ok(value);
        }
        th += 1e-12 * th.signum();
    }
    Err(Error::SingularSystem(3))
}

fn assemble_and_solve(pot: &Potential<f64>, theta: f64) -> Result<Option<f64>> {
    let z = z_of_theta(&theta)?;
    let m = pot.n().max(2);
    let dim = m + 1;
    let mut a = vec![vec![0.0; dim]; dim];
    let mut rhs = vec![0.0; dim];
    for site in 1..=m {
        let row = site - 1;
        let left = if site <= 2 { -SQRT_2 } else { -1.0 }; // a_{site−1}
        let right = if site == 1 { -SQRT_2 } else { -1.0 }; // a_site
        a[row][site - 1] = left;
        a[row][site] = 2.0 - z + pot.v(site);
        if site < m {
            a[row][site + 1] = right;
        } else {
            rhs[row] = -right * theta.powi(site as i32 + 1);
        }
    }
    a[m][m] = 1.0;
    rhs[m] = theta.powi(m as i32);
    Ok(solve_dense(a, rhs).map(|x| x[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jost::jost_eval;

    #[test]
    fn rank_two_zero_potential() {
        let pot: Potential<f64> = vec![0.0, 0.0].into();
        let got = jost_via_linear_system(&pot, 0.5).unwrap();
        let want = jost_eval(&pot, &0.5);
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }

    #[test]
    fn rank_one_threshold_value() {
        // j₀⁽¹⁾(1) = μ₁.
        for mu in [0.25, -1.5, 3.0] {
            let pot: Potential<f64> = vec![mu].into();
            let got = jost_via_linear_system(&pot, 1.0).unwrap();
            assert!((got - mu).abs() < 1e-12, "μ₁ = {mu}, got {got}");
        }
    }

    #[test]
    fn agreement_sweep_rank_three() {
        let pot: Potential<f64> = vec![0.4, -1.2, 0.9].into();
        for i in 1..20 {
            let theta = -0.95 + i as f64 * 0.1;
            if theta.abs() < 0.05 {
                continue;
            }
            let got = jost_via_linear_system(&pot, theta).unwrap();
            let want = jost_eval(&pot, &theta);
            assert!(
                (got - want).abs() <= 1e-10,
                "Θ = {theta}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn domain_checks() {
        let pot: Potential<f64> = vec![1.0].into();
        assert!(matches!(
            jost_via_linear_system(&Potential::free(), 0.5),
            Err(Error::EmptyPotential)
        ));
        assert!(matches!(
            jost_via_linear_system(&pot, 0.0),
            Err(Error::ThetaPole)
        ));
        assert!(jost_via_linear_system(&pot, 1.5).is_err());
    }
}
