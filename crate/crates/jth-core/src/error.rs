//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Both roots of the dispersion equation are unimodular inside the band.
    #[error("z = {0} lies in the continuous spectrum (0, 4); no contracting branch of Θ")]
    BranchUndefined(f64),
    #[error("Θ = 0 has no finite spectral parameter z")]
    ThetaPole,
    #[error("operation requires a nonempty potential (n ≥ 1)")]
    EmptyPotential,
    /// The point sits on the affine variety V(Q_level); `stratum` is the
    /// sign-change count of the Q-sequence up to (not including) that level.
    #[error("point lies on V(Q_{level}); prefix stratum {stratum}")]
    OnVariety { level: usize, stratum: usize },
    #[error("sign sequence starts with zero")]
    LeadingZero,
    #[error("consecutive zeros at positions {0} and {1} violate the Q-sequence structure")]
    ConsecutiveZeros(usize, usize),
    #[error("root counting needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("perturbation determinant has a pole at Θ = {0}")]
    DeterminantPole(f64),
    #[error("Θ = 0 is excluded from the determinant domain")]
    DeterminantAtZero,
    #[error("{0}")]
    Domain(String),
    #[error("truncation size {n} too small; need at least {min}")]
    TruncationTooSmall { n: usize, min: usize },
    #[error("LDLᵀ pivot breakdown persisted after {0} jittered retries")]
    PivotBreakdown(usize),
    #[error("linear system stayed singular after {0} jittered retries")]
    SingularSystem(usize),
    #[error("support sets overlap at site {0}")]
    OverlappingSupport(usize),
    #[error("grid has {got} axes; dimension n = {n} needs {expected}")]
    GridDimension {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("cannot parse '{0}' as a rational number")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
