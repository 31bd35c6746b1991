//! The Jost function as a polynomial in the local parameter Θ.
//!
//! With the support-n potential fixed, j₀⁽ⁿ⁾(Θ) = (𝒬_n − Θ²𝒬_{n−1})/2 where
//! 𝒬₀ = 2, 𝒬₁ = 1 + v₁Θ + Θ², 𝒬_k = (1 + v_kΘ + Θ²)𝒬_{k−1} − Θ²𝒬_{k−2}.
//! For n ≥ 2 the Θ^{2n} terms cancel (both 𝒬_n and 𝒬_{n−1} are monic), so
//! the degree is at most 2n − 1, generically exactly that with leading
//! coefficient v_n/2. At n = 1 the normalization 𝒬₀ = 2 blocks the
//! cancellation and the degree is 2. The free operator has
//! j₀⁽⁰⁾(Θ) = (1 − Θ²)/2.
//!
//! Zeros in (0, 1) correspond to eigenvalues below the band, zeros in
//! (−1, 0) to eigenvalues above it, and the values at Θ = ±1 are the two
//! threshold Jost functions.

use num_complex::Complex64;

use crate::potential::Potential;
use crate::scalar::Scalar;

/// Dense polynomial in Θ; `coeffs[i]` multiplies Θ^i. Trailing exact zeros
/// are trimmed, so the degree is canonical; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaPolynomial<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> ThetaPolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map(|c| c.sign0() == 0).unwrap_or(false) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of Θ^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| T::from_i64(i as i64) * c.clone())
            .collect();
        Self::new(coeffs)
    }

    /// Coefficient map c_i ↦ (−1)^i c_i, i.e. the polynomial Θ ↦ p(−Θ).
    pub fn parity_negated(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
            .collect();
        Self::new(coeffs)
    }

    /// Euclidean division; the scalar type must be a field (both modes are).
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = rem[i].clone() / lead.clone();
            if q.sign0() != 0 {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i - d + j] = rem[i - d + j].clone() - q.clone() * dc.clone();
                }
            }
            rem[i] = T::zero();
            quot[i - d] = q;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Synthetic division by (Θ − r); returns (quotient, remainder p(r)).
    pub fn deflate(&self, r: &T) -> (Self, T) {
        if self.coeffs.is_empty() {
            return (Self::zero(), T::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quot = vec![T::zero(); d];
        let mut acc = self.coeffs[d].clone();
        for i in (0..d).rev() {
            quot[i] = acc.clone();
            acc = acc * r.clone() + self.coeffs[i].clone();
        }
        (Self::new(quot), acc)
    }

    pub fn map_to_f64(&self) -> ThetaPolynomial<f64> {
        ThetaPolynomial::new(self.coeffs.iter().map(|c| c.to_f64_lossy()).collect())
    }
}

/// Evaluate a float polynomial at complex Θ.
pub fn eval_complex(p: &ThetaPolynomial<f64>, theta: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in p.coeffs().iter().rev() {
        acc = acc * theta + c;
    }
    acc
}

/// Coefficient vector of the Jost polynomial j₀⁽ⁿ⁾(Θ).
pub fn jost_coeffs<T: Scalar>(pot: &Potential<T>) -> ThetaPolynomial<T> {
    let n = pot.n();
    let half = T::one() / T::from_i64(2);
    if n == 0 {
        return ThetaPolynomial::new(vec![half.clone(), T::zero(), -half]);
    }
    let mut prev: Vec<T> = vec![T::from_i64(2)];
    let mut curr: Vec<T> = vec![T::one(), pot.v(1), T::one()];
    for k in 2..=n {
        let vk = pot.v(k);
        let mut next = vec![T::zero(); 2 * k + 1];
        for (i, c) in curr.iter().enumerate() {
            next[i] = next[i].clone() + c.clone();
            next[i + 1] = next[i + 1].clone() + vk.clone() * c.clone();
            next[i + 2] = next[i + 2].clone() + c.clone();
        }
        for (i, c) in prev.iter().enumerate() {
            next[i + 2] = next[i + 2].clone() - c.clone();
        }
        prev = curr;
        curr = next;
    }
    let mut j = vec![T::zero(); curr.len()];
    for (i, c) in curr.iter().enumerate() {
        j[i] = j[i].clone() + c.clone();
    }
    for (i, c) in prev.iter().enumerate() {
        j[i + 2] = j[i + 2].clone() - c.clone();
    }
    ThetaPolynomial::new(j.into_iter().map(|c| c * half.clone()).collect())
}

/// Jost function value at Θ.
pub fn jost_eval<T: Scalar>(pot: &Potential<T>, theta: &T) -> T {
    jost_coeffs(pot).eval(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::{c_n, q_sequence};
    use crate::scalar::{rat, rat_i, Rat};
    use crate::theta::z_of_theta;

    fn pot(entries: &[(i64, i64)]) -> Potential<Rat> {
        Potential::new(entries.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn free_jost_polynomial() {
        let j = jost_coeffs(&Potential::<Rat>::free());
        assert_eq!(j.coeffs(), &[rat(1, 2), rat_i(0), rat(-1, 2)]);
    }

    #[test]
    fn rank_one_closed_form() {
        // (1 + v₁Θ − Θ²)/2 with v₁ = 2μ₁.
        let j = jost_coeffs(&pot(&[(3, 4)]));
        assert_eq!(j.coeffs(), &[rat(1, 2), rat(3, 4), rat(-1, 2)]);
    }

    #[test]
    fn threshold_values_rank_one() {
        let p = pot(&[(2, 5)]);
        assert_eq!(jost_eval(&p, &rat_i(1)), rat(2, 5));
        assert_eq!(jost_eval(&p, &rat_i(-1)), rat(-2, 5));
    }

    #[test]
    fn value_at_origin_is_one_half() {
        for p in [pot(&[(0, 1), (0, 1)]), pot(&[(5, 3)]), pot(&[(1, 1); 7])] {
            assert_eq!(jost_eval(&p, &rat_i(0)), rat(1, 2));
        }
    }

    #[test]
    fn zero_potential_rank_two() {
        let p = pot(&[(0, 1), (0, 1)]);
        assert_eq!(jost_eval(&p, &rat_i(1)), rat_i(0));
        assert_eq!(jost_eval(&p, &rat_i(0)), rat(1, 2));
    }

    #[test]
    fn degree_bound() {
        let p = pot(&[(3, 1), (-2, 7), (5, 2), (1, 9)]);
        let j = jost_coeffs(&p);
        assert!(j.degree().unwrap() < 2 * p.n());
        // Generic potentials achieve it.
        assert_eq!(j.degree().unwrap(), 2 * p.n() - 1);
    }

    #[test]
    fn matches_q_representation_off_zero() {
        // j₀⁽ⁿ⁾ = ½Θⁿ(q_n − Θ q_{n−1}) at z = z(Θ).
        let p = pot(&[(1, 2), (-3, 1), (4, 7)]);
        for theta in [rat(1, 3), rat(-2, 5), rat_i(2)] {
            let z = z_of_theta(&theta).unwrap();
            let q = q_sequence(&p, &z);
            let theta_pow_n = theta.clone() * theta.clone() * theta.clone();
            let via_q = theta_pow_n * (q[3].clone() - theta.clone() * q[2].clone()) / rat_i(2);
            assert_eq!(jost_eval(&p, &theta), via_q, "Θ = {theta}");
        }
    }

    #[test]
    fn symmetry_principle_as_coefficients() {
        let p = pot(&[(2, 3), (-1, 2), (5, 1), (-4, 9), (1, 6)]);
        assert_eq!(jost_coeffs(&p.reflect()), jost_coeffs(&p).parity_negated());
    }

    #[test]
    fn threshold_value_equals_c_n() {
        for p in [pot(&[(1, 1), (1, 1)]), pot(&[(-7, 3), (2, 5), (0, 1)])] {
            assert_eq!(jost_eval(&p, &rat_i(1)), c_n(&p).unwrap());
        }
    }

    #[test]
    fn division_and_deflation() {
        // (Θ² − 1) = (Θ − 1)(Θ + 1).
        let p = ThetaPolynomial::new(vec![rat_i(-1), rat_i(0), rat_i(1)]);
        let lin = ThetaPolynomial::new(vec![rat_i(-1), rat_i(1)]);
        let (q, r) = p.div_rem(&lin);
        assert!(r.is_zero());
        assert_eq!(q.coeffs(), &[rat_i(1), rat_i(1)]);

        let (q2, val) = p.deflate(&rat_i(1));
        assert_eq!(val, rat_i(0));
        assert_eq!(q2.coeffs(), &[rat_i(1), rat_i(1)]);

        let (_, nonroot) = p.deflate(&rat_i(2));
        assert_eq!(nonroot, rat_i(3));
    }

    #[test]
    fn complex_evaluation_agrees_with_real() {
        let p = jost_coeffs(&pot(&[(1, 2), (1, 3)])).map_to_f64();
        let at = eval_complex(&p, Complex64::new(0.3, 0.0));
        assert!((at.re - p.eval(&0.3)).abs() < 1e-15);
        assert_eq!(at.im, 0.0);
    }
}
