//! Region classification of parameter vectors.
//!
//! The complement of V(Q_n) splits into n+1 unbounded connected components
//! D₀⁽ⁿ⁾, …, D_n⁽ⁿ⁾, built inductively as epigraphs/hypographs of the Φ_m;
//! shifting the last coordinate by one turns them into the components
//! G_k⁽ⁿ⁾ of the complement of the critical variety V(C_n). Membership is
//! decided by counting sign changes of the Q-sequence: Q_{m+1}/Q_m equals
//! μ_{m+1} − Φ_m, so each hypograph crossing flips the sign once. A point
//! in G_k carries exactly k eigenvalues below the band, and the reflected
//! classification of −μ counts eigenvalues above it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::potential::Potential;
use crate::recurrence::{big_q_sequence, phi, zero_flags};
use crate::scalar::Scalar;

/// Interior(k): the point lies in component k. OnVariety(k): the point lies
/// on the variety, on the stratum over the k-th component one level down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "index", rename_all = "snake_case")]
pub enum Verdict {
    Interior(usize),
    OnVariety(usize),
}

impl Verdict {
    pub fn index(&self) -> usize {
        match *self {
            Verdict::Interior(k) | Verdict::OnVariety(k) => k,
        }
    }

    pub fn is_on_variety(&self) -> bool {
        matches!(self, Verdict::OnVariety(_))
    }
}

/// Which decomposition a verdict refers to: D (complement of V(Q_n)) or
/// G (complement of V(C_n), the D-components shifted by (0, …, 0, 1)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    D,
    G,
}

/// Whose variety a constructed point should land on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PolyFamily {
    Q,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegionClassification {
    pub family: Family,
    pub n: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Joint spectral picture at both band edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpectralClassification {
    /// Eigenvalues below 0.
    pub k_left: usize,
    /// Eigenvalues above 4.
    pub l_right: usize,
    /// Virtual level at the left edge (C_n(μ) = 0).
    pub critical_left: bool,
    /// Virtual level at the right edge (C_n(−μ) = 0).
    pub critical_right: bool,
    /// False only in the doubly-critical case, where the counts are the
    /// stratum indices but no theorem certifies them.
    pub guaranteed: bool,
}

/// Sign changes of a Q-type sequence.
///
/// Interior zeros are dropped; each contributes exactly one change because
/// the neighbors satisfy Q_{m+1} = −Q_{m−1}. A final zero also counts as
/// one change (the sequence is crossing a stratum) and is flagged
/// separately in the returned boolean.
pub fn sign_changes<T: Scalar>(seq: &[T], tol: f64) -> Result<(usize, bool)> {
    let flags = zero_flags(seq, tol);
    if flags.first().copied().unwrap_or(false) {
        return Err(Error::LeadingZero);
    }
    if let Some(i) = flags.windows(2).position(|w| w[0] && w[1]) {
        return Err(Error::ConsecutiveZeros(i, i + 1));
    }
    let mut count = 0usize;
    let mut prev_sign = 0i8;
    for (x, &is_zero) in seq.iter().zip(&flags) {
        if is_zero {
            continue;
        }
        let s = x.sign0();
        if prev_sign != 0 && s != prev_sign {
            count += 1;
        }
        prev_sign = s;
    }
    let last_is_zero = flags.last().copied().unwrap_or(false);
    if last_is_zero {
        count += 1;
    }
    Ok((count, last_is_zero))
}

/// Classify a point against the decomposition of (V(Q_n))^c.
pub fn classify_d<T: Scalar>(pot: &Potential<T>, tol: f64) -> Result<RegionClassification> {
    let n = pot.n();
    if n == 0 {
        return Err(Error::EmptyPotential);
    }
    let q = big_q_sequence(pot);
    let (count, last_zero) = sign_changes(q.values(), tol)?;
    let verdict = if last_zero {
        Verdict::OnVariety(count - 1)
    } else {
        Verdict::Interior(count)
    };
    Ok(RegionClassification {
        family: Family::D,
        n,
        verdict,
    })
}

/// Classify a point against the decomposition of (V(C_n))^c; this is the
/// D-classification of (μ₁, …, μ_{n−1}, μ_n − 1).
pub fn classify_g<T: Scalar>(pot: &Potential<T>, tol: f64) -> Result<RegionClassification> {
    let n = pot.n();
    if n == 0 {
        return Err(Error::EmptyPotential);
    }
    let shifted = pot
        .prefix(n - 1)
        .extended(pot.mu_at(n).clone() - T::one());
    let mut rc = classify_d(&shifted, tol)?;
    rc.family = Family::G;
    Ok(rc)
}

/// Joint classification at both edges. The counts are certified for every
/// single-threshold situation; when both edges are simultaneously critical
/// the stratum indices are still reported but `guaranteed` is false.
pub fn classify_spectral<T: Scalar>(
    pot: &Potential<T>,
    tol: f64,
) -> Result<SpectralClassification> {
    let left = classify_g(pot, tol)?;
    let right = classify_g(&pot.reflect(), tol)?;
    let critical_left = left.verdict.is_on_variety();
    let critical_right = right.verdict.is_on_variety();
    Ok(SpectralClassification {
        k_left: left.verdict.index(),
        l_right: right.verdict.index(),
        critical_left,
        critical_right,
        guaranteed: !(critical_left && critical_right),
    })
}

/// Append the graph value of Φ_{n−1} (family Q) or Φ_{n−1} + 1 (family C)
/// to a prefix, producing a point exactly on V(Q_n), resp. V(C_n).
pub fn on_variety_point<T: Scalar>(
    prefix: &Potential<T>,
    family: PolyFamily,
    tol: f64,
) -> Result<Potential<T>> {
    let f = phi(prefix, tol)?;
    let last = match family {
        PolyFamily::Q => f,
        PolyFamily::C => f + T::one(),
    };
    Ok(prefix.extended(last))
}
