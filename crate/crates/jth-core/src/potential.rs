//! Diagonal perturbation supported on the first n lattice sites.
//!
//! The potential is stored as the parameter vector μ = (μ₁, …, μ_n); the
//! actual diagonal strengths are v₁ = 2μ₁ and v_k = μ_k for k ≥ 2, i.e.
//! V = diag[2μ₁, μ₂, …, μ_n, 0, …]. The doubled first entry compensates the
//! √2 hopping between the first two sites, so every polynomial downstream
//! has integer coefficients in μ.

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Potential<T: Scalar> {
    mu: Vec<T>,
}

impl<T: Scalar> Potential<T> {
    pub fn new(mu: Vec<T>) -> Self {
        Self { mu }
    }

    /// The free operator (empty support).
    pub fn free() -> Self {
        Self { mu: Vec::new() }
    }

    /// Support size n.
    pub fn n(&self) -> usize {
        self.mu.len()
    }

    pub fn is_free(&self) -> bool {
        self.mu.is_empty()
    }

    pub fn mu(&self) -> &[T] {
        &self.mu
    }

    /// μ_k, 1-based.
    pub fn mu_at(&self, k: usize) -> &T {
        &self.mu[k - 1]
    }

    /// Strength v_k at site k (1-based): v₁ = 2μ₁, v_k = μ_k for k ≥ 2,
    /// and 0 beyond the support.
    pub fn v(&self, k: usize) -> T {
        assert!(k >= 1, "sites are 1-based");
        if k > self.mu.len() {
            return T::zero();
        }
        if k == 1 {
            T::from_i64(2) * self.mu[0].clone()
        } else {
            self.mu[k - 1].clone()
        }
    }

    /// Spatial inversion μ ↦ −μ; pairs with Θ ↦ −Θ in the symmetry principle.
    pub fn reflect(&self) -> Self {
        Self {
            mu: self.mu.iter().cloned().map(|x| -x).collect(),
        }
    }

    /// Truncation to the first m entries (prefix of the parameter vector).
    pub fn prefix(&self, m: usize) -> Self {
        Self {
            mu: self.mu[..m].to_vec(),
        }
    }

    /// Extend by one more parameter.
    pub fn extended(&self, last: T) -> Self {
        let mut mu = self.mu.clone();
        mu.push(last);
        Self { mu }
    }

    pub fn to_f64(&self) -> Potential<f64> {
        Potential {
            mu: self.mu.iter().map(|x| x.to_f64_lossy()).collect(),
        }
    }
}

impl<T: Scalar> From<Vec<T>> for Potential<T> {
    fn from(mu: Vec<T>) -> Self {
        Self::new(mu)
    }
}
