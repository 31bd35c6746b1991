//! Plain-text rendering of the report documents (JSON comes from serde).

use jth_core::classifier::{RegionClassification, SpectralClassification, Verdict};
use jth_core::oracle::SpectralReport;
use jth_core::verify::SuiteOutcome;

pub fn verdict_str(v: &Verdict) -> String {
    match v {
        Verdict::Interior(k) => format!("interior component {k}"),
        Verdict::OnVariety(k) => format!("on the variety, stratum {k}"),
    }
}

pub fn classify_plain(
    mu: &str,
    n: usize,
    mode: &str,
    sc: &SpectralClassification,
    left: &RegionClassification,
    right: &RegionClassification,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("mu = {mu}  (n = {n}, mode = {mode})\n"));
    out.push_str(&format!(
        "eigenvalues below 0:  k = {}{}\n",
        sc.k_left,
        if sc.critical_left {
            "  [virtual level at z = 0]"
        } else {
            ""
        }
    ));
    out.push_str(&format!(
        "eigenvalues above 4:  l = {}{}\n",
        sc.l_right,
        if sc.critical_right {
            "  [virtual level at z = 4]"
        } else {
            ""
        }
    ));
    out.push_str(&format!(
        "counts certified: {}\n",
        if sc.guaranteed { "yes" } else { "no (doubly critical)" }
    ));
    out.push_str(&format!("G(mu):  {}\n", verdict_str(&left.verdict)));
    out.push_str(&format!("G(-mu): {}\n", verdict_str(&right.verdict)));
    out
}

pub fn spectrum_plain(report: &SpectralReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "k = {} below 0, l = {} above 4\n",
        report.k, report.l
    ));
    for z in &report.eigenvalues_below {
        out.push_str(&format!("  z = {z:.15}\n"));
    }
    for z in &report.eigenvalues_above {
        out.push_str(&format!("  z = {z:.15}\n"));
    }
    if !report.residuals.is_empty() {
        let worst = report.residuals.iter().cloned().fold(0.0f64, f64::max);
        out.push_str(&format!("max residual = {worst:.3e}\n"));
    }
    out
}

pub fn suites_plain(outcomes: &[SuiteOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        out.push_str(&o.summary_line());
        out.push('\n');
        for f in &o.failures {
            out.push_str(&format!("    {f}\n"));
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    out.push_str(&format!(
        "{} suites, {} failed\n",
        outcomes.len(),
        failed
    ));
    out
}
