//! Three-term recurrences: q_n(z), the threshold polynomials Q_n, the
//! threshold Jost function C_n = Q_n − Q_{n−1}, and the rational function
//! Φ_n = Q_{n−1}/Q_n − 2 whose graph is V(Q_{n+1}).
//!
//! Solutions of the Q-recurrence never have two consecutive zeros, and at an
//! interior zero Q_{m+1} = −Q_{m−1}; the classifier relies on both facts.

use crate::classifier::sign_changes;
use crate::error::{Error, Result};
use crate::potential::Potential;
use crate::scalar::Scalar;

/// Values (Q₀, …, Q_n) of the threshold polynomials at a parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct QSequence<T: Scalar> {
    values: Vec<T>,
}

impl<T: Scalar> QSequence<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Q_n, the last entry.
    pub fn last(&self) -> &T {
        self.values.last().expect("Q-sequence always holds Q₀")
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}

/// q₀ = 2, q₁ = 2 − z + v₁, q_{m+1} = (2 − z + v_{m+1})·q_m − q_{m−1}.
/// At z = 0 this equals 2·Q_m entrywise.
pub fn q_sequence<T: Scalar>(pot: &Potential<T>, z: &T) -> Vec<T> {
    let n = pot.n();
    let two = T::from_i64(2);
    let mut q = Vec::with_capacity(n + 1);
    q.push(two.clone());
    for m in 1..=n {
        let coeff = two.clone() - z.clone() + pot.v(m);
        let next = if m == 1 {
            coeff
        } else {
            coeff * q[m - 1].clone() - q[m - 2].clone()
        };
        q.push(next);
    }
    q
}

/// Q₀ = 1, Q₁ = 1 + μ₁, Q_{m+1} = (2 + μ_{m+1})·Q_m − Q_{m−1}.
pub fn big_q_sequence<T: Scalar>(pot: &Potential<T>) -> QSequence<T> {
    let n = pot.n();
    let two = T::from_i64(2);
    let mut values = Vec::with_capacity(n + 1);
    values.push(T::one());
    for m in 1..=n {
        let next = if m == 1 {
            T::one() + pot.mu_at(1).clone()
        } else {
            (two.clone() + pot.mu_at(m).clone()) * values[m - 1].clone() - values[m - 2].clone()
        };
        values.push(next);
    }
    QSequence { values }
}

/// Left-threshold Jost function C_n = Q_n − Q_{n−1}. Requires n ≥ 1.
pub fn c_n<T: Scalar>(pot: &Potential<T>) -> Result<T> {
    let n = pot.n();
    if n == 0 {
        return Err(Error::EmptyPotential);
    }
    let q = big_q_sequence(pot);
    Ok(q.values[n].clone() - q.values[n - 1].clone())
}

/// Φ_m(μ₁, …, μ_m) = Q_{m−1}/Q_m − 2 on the complement of V(Q_m).
///
/// The empty prefix is admitted with Q_{−1} = 1 (the backward extension of
/// the recurrence), so Φ₀ ≡ −1 and V(Q₁) = {Φ₀} = {−1}.
///
/// Errors with [`Error::OnVariety`] when Q_m vanishes (exactly, or within
/// the τ-band in float mode); the error carries the sign-change count of
/// (Q₀, …, Q_{m−1}) as the stratum index.
pub fn phi<T: Scalar>(prefix: &Potential<T>, tol: f64) -> Result<T> {
    let m = prefix.n();
    if m == 0 {
        return Ok(-T::one());
    }
    let q = big_q_sequence(prefix);
    let flags = zero_flags(q.values(), tol);
    if flags[m] {
        let (stratum, _) = sign_changes(&q.values()[..m], tol)?;
        return Err(Error::OnVariety { level: m, stratum });
    }
    Ok(q.values[m - 1].clone() / q.values[m].clone() - T::from_i64(2))
}

/// Zero flags for a scalar sequence under the running-scale τ-rule:
/// entry i is flagged iff |x_i| ≤ τ·max(1, max_{j≤i} |x_j|). Exact mode
/// flags exact zeros only.
pub fn zero_flags<T: Scalar>(seq: &[T], tol: f64) -> Vec<bool> {
    let mut scale = T::one();
    let mut flags = Vec::with_capacity(seq.len());
    for x in seq {
        let a = x.abs_val();
        if a > scale {
            scale = a;
        }
        flags.push(x.is_zero_at(&scale, tol));
    }
    flags
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_i, Rat, DEFAULT_TOL};

    fn pot(entries: &[(i64, i64)]) -> Potential<Rat> {
        Potential::new(entries.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn q_sequence_initial_data() {
        // v₁ = 2μ₁, so μ₁ = 1 gives q₁ = 2 + 2 = 4.
        let q = q_sequence(&pot(&[(1, 1)]), &rat_i(0));
        assert_eq!(q, vec![rat_i(2), rat_i(4)]);
    }

    #[test]
    fn q_sequence_at_z_one() {
        let q = q_sequence(&pot(&[(0, 1), (0, 1)]), &rat_i(1));
        assert_eq!(q, vec![rat_i(2), rat_i(1), rat_i(-1)]);
    }

    #[test]
    fn q2_closed_form() {
        // q₂/2 at z = 0 equals 1 + 2μ₁ + μ₂ + μ₁μ₂.
        for (m1, m2) in [(rat(1, 3), rat(-7, 2)), (rat_i(2), rat(5, 4))] {
            let p = Potential::new(vec![m1.clone(), m2.clone()]);
            let q = q_sequence(&p, &rat_i(0));
            let expected = rat_i(1) + rat_i(2) * m1.clone() + m2.clone() + m1 * m2;
            assert_eq!(q[2].clone() / rat_i(2), expected);
        }
    }

    #[test]
    fn big_q_examples() {
        assert_eq!(
            big_q_sequence(&pot(&[(1, 1), (1, 1)])).values(),
            &[rat_i(1), rat_i(2), rat_i(5)]
        );
        assert_eq!(
            big_q_sequence(&pot(&[(0, 1); 5])).values(),
            vec![rat_i(1); 6].as_slice()
        );
        assert_eq!(
            big_q_sequence(&pot(&[(-2, 1)])).values(),
            &[rat_i(1), rat_i(-1)]
        );
    }

    #[test]
    fn q_equals_twice_big_q_at_zero_energy() {
        let p = pot(&[(3, 2), (-5, 7), (0, 1), (-11, 3)]);
        let q = q_sequence(&p, &rat_i(0));
        let big = big_q_sequence(&p);
        for (a, b) in q.iter().zip(big.values()) {
            assert_eq!(a, &(rat_i(2) * b.clone()));
        }
    }

    #[test]
    fn c_n_examples() {
        assert_eq!(c_n(&pot(&[(1, 2)])).unwrap(), rat(1, 2));
        assert_eq!(c_n(&pot(&[(0, 1); 4])).unwrap(), rat_i(0));
        assert_eq!(c_n(&pot(&[(0, 1), (0, 1), (1, 1)])).unwrap(), rat_i(1));
        assert!(matches!(
            c_n(&Potential::<Rat>::free()),
            Err(Error::EmptyPotential)
        ));
    }

    #[test]
    fn c_n_is_shifted_q() {
        // Q_n with μ_n − 1 in the last slot equals C_n(μ).
        let p = pot(&[(2, 1), (-1, 3), (7, 5)]);
        let shifted = p.prefix(2).extended(rat(7, 5) - rat_i(1));
        assert_eq!(big_q_sequence(&shifted).last(), &c_n(&p).unwrap());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&pot(&[(0, 1)]), DEFAULT_TOL).unwrap(), rat_i(-1));
        assert_eq!(phi(&pot(&[(0, 1); 4]), DEFAULT_TOL).unwrap(), rat_i(-1));
        assert_eq!(
            phi(&Potential::<Rat>::free(), DEFAULT_TOL).unwrap(),
            rat_i(-1)
        );
        match phi(&pot(&[(-1, 1)]), DEFAULT_TOL) {
            Err(Error::OnVariety { level: 1, stratum: 0 }) => {}
            other => panic!("expected OnVariety, got {other:?}"),
        }
    }

    #[test]
    fn phi_float_band() {
        let p: Potential<f64> = vec![-1.0 + 1e-14].into();
        assert!(matches!(
            phi(&p, DEFAULT_TOL),
            Err(Error::OnVariety { .. })
        ));
        let p: Potential<f64> = vec![-1.0 + 1e-6].into();
        assert!(phi(&p, DEFAULT_TOL).is_ok());
    }

    #[test]
    fn interior_zero_flips_sign() {
        // Q₁ = 0 forces Q₂ = −Q₀.
        let q = big_q_sequence(&pot(&[(-1, 1), (9, 7)]));
        assert_eq!(q.values()[1], rat_i(0));
        assert_eq!(q.values()[2], -q.values()[0].clone());
    }

    #[test]
    fn zero_flags_track_running_scale() {
        let flags = zero_flags(&[1.0, 1e9, 1e-5, 1e-16], 1e-12);
        assert_eq!(flags, vec![false, false, true, true]);
    }
}
