//! Independent spectral ground truth.
//!
//! Three routes to the discrete spectrum are kept deliberately separate so
//! they can cross-check each other:
//! - Sturm root counting of the Jost polynomial in Θ (exact; zeros in
//!   (0, 1) ↔ eigenvalues below 0, zeros in (−1, 0) ↔ eigenvalues above 4);
//! - LDLᵀ inertia counts of large finite sections;
//! - the cofactor linear system reproducing j₀⁽ⁿ⁾ by a dense solve.
//!
//! The √2 hopping appears only here (truncations, virtual states, dense
//! systems), always in float mode; the exact layer never touches it.

pub mod det;
pub mod linsys;
pub mod sturm;
pub mod tridiag;
pub mod virtual_state;

pub use det::{
    perturbation_det, perturbation_det_complex, rank_one_det_via_m_function,
    threshold_scaled_det,
};
pub use linsys::jost_via_linear_system;
pub use sturm::{sturm_count, SturmChain};
pub use tridiag::{count_bound_states_matrix, TruncatedOperator};
pub use virtual_state::{virtual_state, Edge, VirtualState};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jost::jost_coeffs;
use crate::potential::Potential;
use crate::scalar::{rat, rat_i, Rat, Scalar};
use crate::theta::z_of_theta;

/// Bound-state counts from the Jost polynomial: k roots in (0, 1) and
/// ℓ roots in (−1, 0), exact for rational potentials.
pub fn count_bound_states_jost(pot: &Potential<Rat>) -> Result<(usize, usize)> {
    let chain = SturmChain::new(&jost_coeffs(pot))?;
    let k = chain.count_open(&rat_i(0), &rat_i(1))?;
    let l = chain.count_open(&rat_i(-1), &rat_i(0))?;
    Ok((k, l))
}

/// Eigenvalue locations through Θ-bisection of the Sturm count, mapped by
/// the dispersion relation; Θ is isolated to width 1e−12.
pub fn bound_state_locations(pot: &Potential<Rat>) -> Result<(Vec<f64>, Vec<f64>)> {
    let chain = SturmChain::new(&jost_coeffs(pot))?;
    let width = rat(1, 1_000_000_000_000);
    let as_z = |ivs: Vec<(Rat, Rat)>| -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(ivs.len());
        for (lo, hi) in ivs {
            let mid = (lo + hi) / rat_i(2);
            out.push(z_of_theta(&mid)?.to_f64_lossy());
        }
        Ok(out)
    };
    // Θ ∈ (0, 1) maps decreasingly to z < 0; (−1, 0) increasingly to z > 4.
    let mut below = as_z(chain.isolate(&rat_i(0), &rat_i(1), &width)?)?;
    below.sort_by(f64::total_cmp);
    let mut above = as_z(chain.isolate(&rat_i(-1), &rat_i(0), &width)?)?;
    above.sort_by(f64::total_cmp);
    Ok((below, above))
}

/// The large-coupling fixture V = t·(Q_J − P_I): strength −t on the sites
/// in `minus_sites`, +t on `plus_sites`, translated through the μ
/// convention. For t > 8 the operator J + V has exactly |I| eigenvalues
/// below the band and |J| above it.
pub fn large_coupling_potential<T: Scalar>(
    minus_sites: &[usize],
    plus_sites: &[usize],
    t: T,
) -> Result<Potential<T>> {
    if let Some(site) = minus_sites.iter().find(|s| plus_sites.contains(s)) {
        return Err(Error::OverlappingSupport(*site));
    }
    if minus_sites.iter().chain(plus_sites).any(|&s| s == 0) {
        return Err(Error::Domain("sites are 1-based".into()));
    }
    let n = minus_sites
        .iter()
        .chain(plus_sites)
        .copied()
        .max()
        .unwrap_or(0);
    let mut mu = vec![T::zero(); n];
    // μ₁ = v₁/2, μ_k = v_k.
    for &site in minus_sites {
        let v = -t.clone();
        mu[site - 1] = if site == 1 { v / T::from_i64(2) } else { v };
    }
    for &site in plus_sites {
        let v = t.clone();
        mu[site - 1] = if site == 1 { v / T::from_i64(2) } else { v };
    }
    Ok(Potential::new(mu))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Sturm,
    Inertia,
    LinsysCheck,
}

/// Discrete-spectrum summary produced by one of the oracle routes.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    pub method: Method,
    /// Eigenvalues below 0.
    pub k: usize,
    /// Eigenvalues above 4.
    pub l: usize,
    pub eigenvalues_below: Vec<f64>,
    pub eigenvalues_above: Vec<f64>,
    /// Sturm: |j(Θ*)| at each located root. Inertia: bisection interval
    /// widths. Linsys-check: |linear-system − polynomial| over the probe
    /// grid.
    pub residuals: Vec<f64>,
}

/// Exact counting plus localized eigenvalues.
pub fn spectral_report_sturm(pot: &Potential<Rat>) -> Result<SpectralReport> {
    let (k, l) = count_bound_states_jost(pot)?;
    let (eigenvalues_below, eigenvalues_above) = bound_state_locations(pot)?;
    let jf = jost_coeffs(&pot.to_f64());
    let residuals = eigenvalues_below
        .iter()
        .chain(&eigenvalues_above)
        .map(|&z| {
            let theta = crate::theta::theta_of_z(z)?;
            Ok(jf.eval(&theta).abs())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectralReport {
        method: Method::Sturm,
        k,
        l,
        eigenvalues_below,
        eigenvalues_above,
        residuals,
    })
}

/// Truncated-operator counting at the ∓δ margins plus localized
/// eigenvalues of the section.
pub fn spectral_report_inertia(
    pot: &Potential<f64>,
    size: usize,
    delta: f64,
) -> Result<SpectralReport> {
    let (k, l) = count_bound_states_matrix(pot, size, delta)?;
    let op = TruncatedOperator::new(pot, size)?;
    let (eigenvalues_below, eigenvalues_above) = op.eigenvalues_outside(delta)?;
    let width = 2.0 * f64::EPSILON;
    let residuals = vec![width; eigenvalues_below.len() + eigenvalues_above.len()];
    Ok(SpectralReport {
        method: Method::Inertia,
        k,
        l,
        eigenvalues_below,
        eigenvalues_above,
        residuals,
    })
}

/// Probe grid for the linear-system agreement sweep.
pub fn linsys_probe_grid() -> Vec<f64> {
    (1..=9)
        .flat_map(|i| {
            let t = i as f64 / 10.0;
            [t, -t]
        })
        .collect()
}

/// Sturm counting plus the cofactor-system agreement residuals.
pub fn spectral_report_linsys_check(pot: &Potential<Rat>) -> Result<SpectralReport> {
    let mut report = spectral_report_sturm(pot)?;
    report.method = Method::LinsysCheck;
    let f = pot.to_f64();
    let poly = jost_coeffs(&f);
    report.residuals = linsys_probe_grid()
        .iter()
        .map(|&theta| {
            let via_system = jost_via_linear_system(&f, theta)?;
            Ok((via_system - poly.eval(&theta)).abs())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(report)
}

/// Max disagreement between the dense-solve and polynomial routes.
pub fn linsys_agreement_sweep(pot: &Potential<f64>, thetas: &[f64]) -> Result<f64> {
    let poly = jost_coeffs(pot);
    let mut worst = 0.0f64;
    for &theta in thetas {
        let got = jost_via_linear_system(pot, theta)?;
        worst = worst.max((got - poly.eval(&theta)).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::{classify_g, classify_spectral, SpectralClassification, Verdict};
    use crate::recurrence::c_n;
    use crate::scalar::DEFAULT_TOL;

    fn ints(entries: &[i64]) -> Potential<Rat> {
        Potential::new(entries.iter().map(|&p| rat_i(p)).collect())
    }

    #[test]
    fn free_operator_has_empty_discrete_spectrum() {
        assert_eq!(
            count_bound_states_jost(&Potential::<Rat>::free()).unwrap(),
            (0, 0)
        );
    }

    #[test]
    fn shallow_well_and_its_reflection() {
        let well = Potential::new(vec![rat(-1, 2)]);
        assert_eq!(count_bound_states_jost(&well).unwrap(), (1, 0));
        let barrier = well.reflect();
        assert_eq!(count_bound_states_jost(&barrier).unwrap(), (0, 1));
    }

    #[test]
    fn golden_eigenvalue_location() {
        // μ₁ = −1/2: root Θ = (√5 − 1)/2 of 1 − Θ − Θ², hence z = 2 − √5.
        let (below, above) = bound_state_locations(&Potential::new(vec![rat(-1, 2)])).unwrap();
        assert!(above.is_empty());
        assert_eq!(below.len(), 1);
        let expected = 2.0 - 5.0f64.sqrt();
        assert!((below[0] - expected).abs() < 1e-10);
    }

    #[test]
    fn three_oracles_agree_on_a_deep_well() {
        let pot = ints(&[-10, -10]);
        let jost = count_bound_states_jost(&pot).unwrap();
        let matrix = count_bound_states_matrix(&pot.to_f64(), 3000, 1e-8).unwrap();
        let sc: SpectralClassification = classify_spectral(&pot, DEFAULT_TOL).unwrap();
        assert_eq!(jost, (2, 0));
        assert_eq!(matrix, (2, 0));
        assert_eq!((sc.k_left, sc.l_right), (2, 0));
    }

    #[test]
    fn large_coupling_counts() {
        let pot = large_coupling_potential(&[1], &[], 10.0).unwrap();
        assert_eq!(pot.mu(), &[-5.0]);
        assert_eq!(
            count_bound_states_matrix(&pot, 3000, 1e-8).unwrap(),
            (1, 0)
        );

        let pot = large_coupling_potential(&[1, 3], &[2], 10.0).unwrap();
        assert_eq!(pot.mu(), &[-5.0, 10.0, -10.0]);
        assert_eq!(
            count_bound_states_matrix(&pot, 3000, 1e-8).unwrap(),
            (2, 1)
        );

        let free = large_coupling_potential::<f64>(&[], &[], 10.0).unwrap();
        assert!(free.is_free());
    }

    #[test]
    fn large_coupling_rejects_overlap() {
        assert!(matches!(
            large_coupling_potential(&[1, 2], &[2], 10.0),
            Err(Error::OverlappingSupport(2))
        ));
    }

    #[test]
    fn positive_bump_binds_above_only() {
        // μ = (0, …, 0, 1) lies in G₀ (no state below the band) while the
        // reflected point lies in G₁: one eigenvalue above it.
        let pot = ints(&[0, 0, 1]);
        assert_eq!(count_bound_states_jost(&pot).unwrap(), (0, 1));
        assert_eq!(
            count_bound_states_matrix(&pot.to_f64(), 3000, 1e-8).unwrap(),
            (0, 1)
        );
    }

    #[test]
    fn nested_degeneracy_follows_the_drop_zero_rule() {
        // (−1, 2, −1) lies on V(C₃) while its prefix already has Q₁ = 0
        // (a lower stratum). The drop-zero count says stratum 1, so the
        // point must carry exactly one eigenvalue below the band.
        let pot = ints(&[-1, 2, -1]);
        assert_eq!(c_n(&pot).unwrap(), rat_i(0));
        let g = classify_g(&pot, DEFAULT_TOL).unwrap();
        assert_eq!(g.verdict, Verdict::OnVariety(1));
        let (k, _) = count_bound_states_jost(&pot).unwrap();
        assert_eq!(k, 1);
        let vs = virtual_state(&pot.to_f64(), Edge::Left, 50).unwrap();
        assert!(vs.jost_value_at_zero.abs() < 1e-13);
    }

    #[test]
    fn sturm_report_shape() {
        let report = spectral_report_sturm(&ints(&[-5, 0, 5])).unwrap();
        assert_eq!(report.k, report.eigenvalues_below.len());
        assert_eq!(report.l, report.eigenvalues_above.len());
        assert!(report
            .eigenvalues_below
            .iter()
            .all(|&z| z < 0.0));
        assert!(report.eigenvalues_above.iter().all(|&z| z > 4.0));
        assert!(report.residuals.iter().all(|&r| r < 1e-9));
    }

    #[test]
    fn inertia_report_matches_sturm_counts() {
        let pot = ints(&[-5, 0, 5]);
        let sturm = spectral_report_sturm(&pot).unwrap();
        let inertia = spectral_report_inertia(&pot.to_f64(), 3000, 1e-8).unwrap();
        assert_eq!((sturm.k, sturm.l), (inertia.k, inertia.l));
        for (a, b) in sturm
            .eigenvalues_below
            .iter()
            .zip(&inertia.eigenvalues_below)
        {
            assert!((a - b).abs() < 1e-7, "sturm {a} vs inertia {b}");
        }
    }

    #[test]
    fn linsys_check_residuals_are_small() {
        let report = spectral_report_linsys_check(&ints(&[2, -1])).unwrap();
        assert_eq!(report.method, Method::LinsysCheck);
        assert!(report.residuals.iter().all(|&r| r <= 1e-10));
    }
}
