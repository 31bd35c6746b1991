//! Explicit threshold Jost solutions (virtual-state candidates).
//!
//! The Jost solution at a band edge has Ψ_k = Θ_edge^k = (±1)^k beyond the
//! perturbation support. Back-substituting the difference equation
//! a_{k−1}j_{k−1} + b_k j_k + a_k j_{k+1} = z j_k down to the boundary
//! recovers j₀; the sequence (Ψ₁, Ψ₂, …) solves J_nΨ = z_edge·Ψ exactly
//! when j₀ = 0, which is the criticality condition. The first residual row
//! of (J_n − z_edge)Ψ equals √2·j₀, so residual and j₀ vanish together.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::potential::Potential;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Which band edge: left is z = 0 (Θ = +1), right is z = 4 (Θ = −1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Edge {
    Left,
    Right,
}

impl Edge {
    pub fn z(self) -> f64 {
        match self {
            Edge::Left => 0.0,
            Edge::Right => 4.0,
        }
    }

    pub fn theta(self) -> f64 {
        match self {
            Edge::Left => 1.0,
            Edge::Right => -1.0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VirtualState {
    pub edge: Edge,
    /// Ψ₁, …, Ψ_N.
    pub components: Vec<f64>,
    /// The recovered Jost function value j₀⁽ⁿ⁾(Θ_edge).
    pub jost_value_at_zero: f64,
    /// max |((J_n − z_edge)Ψ)_r| over rows r = 1, …, N−2.
    pub residual: f64,
}

/// Hopping a_i of the half-line operator: a₀ = a₁ = −√2, a_i = −1 for i ≥ 2.
fn hop(i: usize) -> f64 {
    if i <= 1 {
        -SQRT_2
    } else {
        -1.0
    }
}

/// Build the edge Jost solution on the first `size` sites.
pub fn virtual_state(pot: &Potential<f64>, edge: Edge, size: usize) -> Result<VirtualState> {
    let start = pot.n().max(2);
    let min = start + 2;
    if size < min {
        return Err(Error::TruncationTooSmall { n: size, min });
    }
    let theta = edge.theta();
    let z = edge.z();

    // psi[k] = j_k for k = 0..=size; the tail is the exact power law.
    let mut psi = vec![0.0; size + 1];
    for (k, slot) in psi.iter_mut().enumerate().skip(start) {
        *slot = theta.powi(k as i32);
    }
    for k in (1..=start).rev() {
        let b_k = 2.0 + pot.v(k);
        psi[k - 1] = ((z - b_k) * psi[k] - hop(k) * psi[k + 1]) / hop(k - 1);
    }

    let mut residual = 0.0f64;
    for row in 1..=size - 2 {
        let mut acc = (2.0 + pot.v(row) - z) * psi[row];
        if row > 1 {
            acc += hop(row - 1) * psi[row - 1];
        }
        acc += hop(row) * psi[row + 1];
        residual = residual.max(acc.abs());
    }

    Ok(VirtualState {
        edge,
        jost_value_at_zero: psi[0],
        components: psi[1..].to_vec(),
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::c_n;
    use crate::scalar::{rat, Scalar};

    #[test]
    fn free_operator_left_edge() {
        let vs = virtual_state(&Potential::free(), Edge::Left, 50).unwrap();
        assert!(vs.jost_value_at_zero.abs() <= 1e-12);
        assert!(vs.residual <= 1e-12);
        assert!((vs.components[0] - 1.0 / SQRT_2).abs() < 1e-15);
        assert!(vs.components[1..].iter().all(|&x| x == 1.0));
    }

    #[test]
    fn free_operator_right_edge() {
        let vs = virtual_state(&Potential::free(), Edge::Right, 50).unwrap();
        assert!(vs.jost_value_at_zero.abs() <= 1e-12);
        assert!(vs.residual <= 1e-12);
        // Ψ_k = (−1)^k from site 2 on.
        for (i, &x) in vs.components.iter().enumerate().skip(1) {
            let k = i + 1;
            assert_eq!(x, if k % 2 == 0 { 1.0 } else { -1.0 }, "site {k}");
        }
    }

    #[test]
    fn recovered_value_is_the_threshold_jost_function() {
        // j₀ from back-substitution equals C_n(μ) at the left edge.
        let mu = [rat(1, 2), rat(-3, 4), rat(2, 3)];
        let exact: f64 = c_n(&Potential::new(mu.to_vec())).unwrap().to_f64_lossy();
        let pot = Potential::new(mu.to_vec()).to_f64();
        let vs = virtual_state(&pot, Edge::Left, 60).unwrap();
        assert!(
            (vs.jost_value_at_zero - exact).abs() < 1e-12,
            "recovered {} vs C_n {exact}",
            vs.jost_value_at_zero
        );
        // Off the variety the first row keeps the √2·j₀ defect.
        assert!((vs.residual - SQRT_2 * exact.abs()).abs() < 1e-12);
    }

    #[test]
    fn tail_is_exactly_one_beyond_the_support() {
        let pot: Potential<f64> = vec![0.3, -0.8, 0.11, 2.0].into();
        let vs = virtual_state(&pot, Edge::Left, 40).unwrap();
        for (i, &x) in vs.components.iter().enumerate() {
            let k = i + 1;
            if k >= 4 {
                assert_eq!(x, 1.0, "site {k}");
            }
        }
    }

    #[test]
    fn size_is_validated() {
        let pot: Potential<f64> = vec![1.0; 5].into();
        assert!(virtual_state(&pot, Edge::Left, 6).is_err());
        assert!(virtual_state(&pot, Edge::Left, 7).is_ok());
    }
}
