use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("every amplitude is zero")]
    AllZero,

    #[error("a symmetric state needs at least two amplitudes (one qubit), got {0}")]
    TooFewAmplitudes(usize),

    #[error("amplitude vector has norm {norm}, too far from 1 to renormalize")]
    NotNormalized { norm: f64 },

    #[error("non-finite amplitude at index {0}")]
    NonFinite(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("{what} = {value} outside the supported range {range}")]
    Range {
        what: &'static str,
        value: usize,
        range: &'static str,
    },

    #[error("matrix exponential did not converge (unitarity defect {defect:e})")]
    ExpmNoConvergence { defect: f64 },

    #[error("root finding failed: relative residual {residual:e} exceeds tolerance {tol:e}")]
    RootFindingFailed { residual: f64, tol: f64 },

    #[error("permanent size {0} exceeds the limit of 24")]
    SizeLimit(usize),

    #[error("closed form only available for N in {{2, 3, 4}}, got N = {0}")]
    UnsupportedDimension(usize),

    #[error("a star sits at infinity; rotate the chart first")]
    StarAtInfinity,

    #[error("stars {i} and {j} are {distance:e} apart (chordal), below the guard {guard:e}")]
    StarsTooClose {
        i: usize,
        j: usize,
        distance: f64,
        guard: f64,
    },

    #[error("rotation target is antipodal to star {0}")]
    DegenerateRotation(usize),

    #[error("finite-difference step must be positive and finite, got {0}")]
    InvalidStep(f64),
}
