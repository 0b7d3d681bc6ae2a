//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the numerical kernels, solvers and front ends.
#[derive(Error, Debug)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix entries must be finite: {0}")]
    NonFiniteEntry(String),
    #[error("matrix is numerically singular (pivot {pivot:.3e} below threshold {threshold:.3e})")]
    SingularMatrix { pivot: f64, threshold: f64 },
    #[error("SVD failed to converge")]
    ConvergenceFailure,
    #[error("iterate became numerically singular at step {0}; eigenvalue on the splitting boundary suspected")]
    SingularIterate(usize),
    #[error("iteration did not converge within {0} steps")]
    MaxIterExceeded(usize),
    #[error("E matrix is numerically singular")]
    SingularE,
    #[error("stacked QR factor is rank deficient at step {0}")]
    RankDeficientStack(usize),
    #[error("spectrum is not stable for the requested time domain")]
    UnstableSpectrum,
    #[error("Sylvester coefficient spectra overlap; solver did not converge")]
    SpectraOverlap,
    #[error("Hamiltonian matrix has eigenvalues on the imaginary axis")]
    HamiltonianAxisEigenvalues,
    #[error("invariant subspace dimension {got} does not match expected {expected}")]
    SubspaceDimensionMismatch { got: usize, expected: usize },
    #[error("invalid interval: {0}")]
    IntervalInvalid(String),
    #[error("eigenvalue detected on the splitting boundary (imaginary axis or unit circle)")]
    AxisEigenvalue,
    #[error("Sylvester solve inside the decomposition failed: {0}")]
    SylvesterFailure(String),
    #[error("splitting of the infinite spectral part failed: {0}")]
    InfiniteSplitFailure(String),
    #[error("requested order {requested} exceeds the numerical rank {rank}")]
    OrderTooLarge { requested: usize, rank: usize },
    #[error("eigenvalue detected on the modal region boundary")]
    RegionBoundaryEigenvalue,
    #[error("modal region selects no eigenvalues")]
    EmptySelection,
    #[error("Hankel singular values {0} and {1} coincide at the truncation order; the construction is not defined")]
    RepeatedSigmaAtCut(usize, usize),
    #[error("gamma = {0} is infeasible for the H-infinity Riccati pair")]
    GammaInfeasible(f64),
    #[error("unknown second-order balancing formula `{0}`")]
    FormulaUnknown(String),
    #[error("parameter {mu} outside the spline domain [{lo}, {hi}]")]
    MuOutOfDomain { mu: f64, lo: f64, hi: f64 },
    #[error("basis compression removed every column")]
    CompressionRankZero,
    #[error("transfer function is singular at the evaluation point")]
    SingularAtFrequency,
    #[error("time stepping matrix is singular")]
    SolverStepSingular,
    #[error("unknown option key `{0}`")]
    UnknownOptionKey(String),
    #[error("option key `{key}` expects {expected}")]
    OptionTypeMismatch { key: String, expected: String },
    #[error("invalid manifest: {0}")]
    Manifest(String),
    #[error("matrix market parse error: {0}")]
    MatrixMarket(String),
    #[error("invalid input table: {0}")]
    InputTable(String),
    #[error("second-order systems must be continuous-time")]
    SecondOrderDiscrete,
    #[error("method `{method}` does not support {what}")]
    Unsupported { method: String, what: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
