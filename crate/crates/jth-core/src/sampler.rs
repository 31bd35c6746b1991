//! Plot-ready samples of the nodal varieties and empirical region censuses.
//!
//! The varieties are always sampled as graphs over the prefix: for a grid
//! of prefixes (μ₁, …, μ_{n−1}) off the lower varieties, the appended last
//! coordinate Φ_{n−1} (family Q) or Φ_{n−1} + 1 (family C) lands exactly on
//! V(Q_n), resp. V(C_n), and the prefix classification labels the stratum.
//! Prefixes inside the τ-band of a lower variety are skipped and tallied,
//! never silently dropped.

use std::collections::BTreeMap;
use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::{classify_g, sign_changes, PolyFamily, Verdict};
use crate::error::{Error, Result};
use crate::potential::Potential;
use crate::recurrence::{big_q_sequence, zero_flags};

/// One sampled axis: `steps` evenly spaced points covering [min, max].
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GridAxis {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl GridAxis {
    fn value(&self, i: usize) -> f64 {
        if self.steps <= 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.steps - 1) as f64
        }
    }
}

/// A point on the sampled variety, stored as prefix ⊕ graph value.
#[derive(Debug, Clone, Serialize)]
pub struct VarietySample {
    pub prefix: Vec<f64>,
    pub last: f64,
    /// Component index of the prefix one level down (the stratum label).
    pub stratum: usize,
    pub family: PolyFamily,
}

#[derive(Debug, Clone, Serialize)]
pub struct VarietySweep {
    pub n: usize,
    pub family: PolyFamily,
    pub samples: Vec<VarietySample>,
    /// Grid prefixes inside the τ-band of a lower variety.
    pub skipped: usize,
}

/// Sample V(Q_n) or V(C_n) over a prefix grid (row-major order).
/// Plotting scope is 1 ≤ n ≤ 4 with n−1 grid axes.
pub fn sample_variety(
    n: usize,
    family: PolyFamily,
    grid: &[GridAxis],
    tol: f64,
) -> Result<VarietySweep> {
    if !(1..=4).contains(&n) {
        return Err(Error::Domain(format!("plotting scope is 1 ≤ n ≤ 4, got {n}")));
    }
    if grid.len() != n - 1 {
        return Err(Error::GridDimension {
            n,
            expected: n - 1,
            got: grid.len(),
        });
    }
    let shift = match family {
        PolyFamily::Q => 0.0,
        PolyFamily::C => 1.0,
    };
    if n == 1 {
        // V(Q₁) = {−1}, V(C₁) = {0}: a single point below the empty prefix.
        return Ok(VarietySweep {
            n,
            family,
            samples: vec![VarietySample {
                prefix: Vec::new(),
                last: -1.0 + shift,
                stratum: 0,
                family,
            }],
            skipped: 0,
        });
    }

    let total: usize = grid.iter().map(|a| a.steps).product();
    let mut samples = Vec::new();
    let mut skipped = 0usize;
    for flat in 0..total {
        let mut rest = flat;
        let mut prefix = Vec::with_capacity(n - 1);
        for axis in grid.iter().rev() {
            prefix.push(axis.value(rest % axis.steps));
            rest /= axis.steps;
        }
        prefix.reverse();

        let q = big_q_sequence(&Potential::new(prefix.clone()));
        let values = q.values();
        let flags = zero_flags(values, tol);
        if flags[1..].iter().any(|&f| f) {
            skipped += 1;
            continue;
        }
        let (stratum, _) = sign_changes(values, tol)?;
        let m = n - 1;
        let phi = values[m - 1] / values[m] - 2.0;
        samples.push(VarietySample {
            prefix,
            last: phi + shift,
            stratum,
            family,
        });
    }
    Ok(VarietySweep {
        n,
        family,
        samples,
        skipped,
    })
}

/// Empirical census of the G-components over a box.
#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub bounds: Vec<(f64, f64)>,
    pub samples: usize,
    pub seed: u64,
    /// Component index → hit count.
    pub histogram: BTreeMap<usize, usize>,
    /// Samples inside the τ-band of V(C_n).
    pub on_variety: usize,
}

/// Classify `m` uniform samples from the box through the G-decomposition.
/// Deterministic for a given seed; the draw order is fixed and the
/// classification is order-independent.
pub fn region_census(
    n: usize,
    bounds: &[(f64, f64)],
    m: usize,
    seed: u64,
    tol: f64,
) -> Result<CensusReport> {
    if n == 0 {
        return Err(Error::EmptyPotential);
    }
    if bounds.len() != n {
        return Err(Error::GridDimension {
            n,
            expected: n,
            got: bounds.len(),
        });
    }
    if m == 0 || bounds.iter().any(|(lo, hi)| lo >= hi) {
        return Err(Error::Domain(
            "census needs m ≥ 1 samples and a nondegenerate box".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Vec<f64>> = (0..m)
        .map(|_| {
            bounds
                .iter()
                .map(|&(lo, hi)| rng.gen_range(lo..hi))
                .collect()
        })
        .collect();

    let verdicts: Vec<Verdict> = points
        .into_par_iter()
        .map(|mu| classify_g(&Potential::new(mu), tol).map(|rc| rc.verdict))
        .collect::<Result<_>>()?;

    let mut histogram = BTreeMap::new();
    let mut on_variety = 0usize;
    for v in verdicts {
        match v {
            Verdict::Interior(k) => *histogram.entry(k).or_insert(0) += 1,
            Verdict::OnVariety(_) => on_variety += 1,
        }
    }
    Ok(CensusReport {
        n,
        bounds: bounds.to_vec(),
        samples: m,
        seed,
        histogram,
        on_variety,
    })
}

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV with header `mu1,...,mun,stratum,family`; floats carry 17
/// significant digits.
pub fn write_variety_csv<W: Write>(mut w: W, sweep: &VarietySweep) -> io::Result<()> {
    let names: Vec<String> = (1..=sweep.n).map(|i| format!("mu{i}")).collect();
    writeln!(w, "{},stratum,family", names.join(","))?;
    let family = match sweep.family {
        PolyFamily::Q => "Q",
        PolyFamily::C => "C",
    };
    for s in &sweep.samples {
        for x in &s.prefix {
            write!(w, "{},", fmt17(*x))?;
        }
        writeln!(w, "{},{},{}", fmt17(s.last), s.stratum, family)?;
    }
    Ok(())
}

/// CSV with a metadata comment block followed by `index,count` rows.
pub fn write_census_csv<W: Write>(mut w: W, report: &CensusReport) -> io::Result<()> {
    writeln!(w, "# n={}", report.n)?;
    writeln!(w, "# seed={}", report.seed)?;
    let box_spec: Vec<String> = report
        .bounds
        .iter()
        .map(|(lo, hi)| format!("{lo}:{hi}"))
        .collect();
    writeln!(w, "# box={}", box_spec.join(","))?;
    writeln!(w, "# samples={}", report.samples)?;
    writeln!(w, "# on_variety={}", report.on_variety)?;
    writeln!(w, "index,count")?;
    for (k, count) in &report.histogram {
        writeln!(w, "{k},{count}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::c_n;
    use crate::scalar::DEFAULT_TOL;

    fn axis(min: f64, max: f64, steps: usize) -> GridAxis {
        GridAxis { min, max, steps }
    }

    #[test]
    fn rank_one_varieties_are_points() {
        let q = sample_variety(1, PolyFamily::Q, &[], DEFAULT_TOL).unwrap();
        assert_eq!(q.samples.len(), 1);
        assert_eq!(q.samples[0].last, -1.0);
        let c = sample_variety(1, PolyFamily::C, &[], DEFAULT_TOL).unwrap();
        assert_eq!(c.samples[0].last, 0.0);
        assert_eq!(c.samples[0].stratum, 0);
    }

    #[test]
    fn hyperbola_samples_satisfy_the_equation() {
        let sweep =
            sample_variety(2, PolyFamily::Q, &[axis(-4.0, 2.0, 121)], DEFAULT_TOL).unwrap();
        assert!(sweep.samples.len() > 100);
        let mut saw = [false, false];
        for s in &sweep.samples {
            let (m1, m2) = (s.prefix[0], s.last);
            let q2 = 1.0 + 2.0 * m1 + m2 + m1 * m2;
            assert!(q2.abs() <= 1e-9 * (1.0 + m2.abs()), "Q₂ = {q2}");
            // Strata split at μ₁ = −1.
            assert_eq!(s.stratum, usize::from(m1 < -1.0));
            saw[s.stratum] = true;
            assert!(m1 != -1.0);
        }
        assert!(saw[0] && saw[1]);
    }

    #[test]
    fn family_c_is_the_shifted_graph() {
        let grid = [axis(-3.0, 3.0, 61)];
        let q = sample_variety(2, PolyFamily::Q, &grid, DEFAULT_TOL).unwrap();
        let c = sample_variety(2, PolyFamily::C, &grid, DEFAULT_TOL).unwrap();
        assert_eq!(q.samples.len(), c.samples.len());
        for (a, b) in q.samples.iter().zip(&c.samples) {
            assert_eq!(a.prefix, b.prefix);
            assert!((b.last - a.last - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn c_samples_reevaluate_to_tau_zero() {
        let sweep = sample_variety(
            3,
            PolyFamily::C,
            &[axis(-2.0, 2.0, 17), axis(-2.0, 2.0, 17)],
            DEFAULT_TOL,
        )
        .unwrap();
        for s in &sweep.samples {
            let mut mu = s.prefix.clone();
            mu.push(s.last);
            let c = c_n(&Potential::new(mu)).unwrap();
            assert!(c.abs() < 1e-9, "C₃ = {c}");
        }
    }

    #[test]
    fn lower_variety_prefixes_are_tallied() {
        // μ₁ = −1 sits on V(Q₁); a 3-point grid hits it head on.
        let sweep =
            sample_variety(2, PolyFamily::Q, &[axis(-2.0, 0.0, 3)], DEFAULT_TOL).unwrap();
        assert_eq!(sweep.skipped, 1);
        assert_eq!(sweep.samples.len(), 2);
    }

    #[test]
    fn grid_dimension_is_checked() {
        assert!(matches!(
            sample_variety(3, PolyFamily::Q, &[axis(0.0, 1.0, 2)], DEFAULT_TOL),
            Err(Error::GridDimension { expected: 2, .. })
        ));
        assert!(sample_variety(5, PolyFamily::Q, &[], DEFAULT_TOL).is_err());
    }

    #[test]
    fn census_is_deterministic_and_complete_for_n2() {
        let bounds = [(-20.0, 20.0), (-20.0, 20.0)];
        let a = region_census(2, &bounds, 10_000, 7, DEFAULT_TOL).unwrap();
        let b = region_census(2, &bounds, 10_000, 7, DEFAULT_TOL).unwrap();
        assert_eq!(a.histogram, b.histogram);
        assert_eq!(a.on_variety, b.on_variety);
        let keys: Vec<usize> = a.histogram.keys().copied().collect();
        assert_eq!(keys, vec![0, 1, 2]);
        let total: usize = a.histogram.values().sum();
        assert_eq!(total + a.on_variety, a.samples);
    }

    #[test]
    fn rank_one_census_splits_at_zero() {
        // G₀⁽¹⁾ = (0, ∞), G₁⁽¹⁾ = (−∞, 0): counts ≈ interval lengths.
        let report = region_census(1, &[(-5.0, 5.0)], 1000, 3, DEFAULT_TOL).unwrap();
        let g0 = report.histogram.get(&0).copied().unwrap_or(0) as f64;
        let g1 = report.histogram.get(&1).copied().unwrap_or(0) as f64;
        assert!((g0 - g1).abs() < 150.0, "g0 = {g0}, g1 = {g1}");
        assert_eq!(g0 as usize + g1 as usize + report.on_variety, 1000);
    }

    #[test]
    fn census_validates_input()  {
        assert!(region_census(2, &[(0.0, 1.0)], 10, 0, DEFAULT_TOL).is_err());
        assert!(region_census(1, &[(1.0, 1.0)], 10, 0, DEFAULT_TOL).is_err());
        assert!(region_census(1, &[(0.0, 1.0)], 0, 0, DEFAULT_TOL).is_err());
    }

    #[test]
    fn csv_formats() {
        let sweep = sample_variety(1, PolyFamily::C, &[], DEFAULT_TOL).unwrap();
        let mut buf = Vec::new();
        write_variety_csv(&mut buf, &sweep).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "mu1,stratum,family");
        assert_eq!(lines.next().unwrap(), "0.0000000000000000e0,0,C");

        let report = region_census(1, &[(-1.0, 1.0)], 100, 9, DEFAULT_TOL).unwrap();
        let mut buf = Vec::new();
        write_census_csv(&mut buf, &report).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("# n=1\n# seed=9\n# box=-1:1\n"));
        assert!(text.contains("index,count"));
    }
}
