//! Crate-wide error type with CLI exit-code classification.

use thiserror::Error;

use crate::params::FieldLabel;

#[derive(Debug, Error)]
pub enum Error {
    #[error("negative rate: {name} = {value}")]
    NegativeRate { name: String, value: f64 },

    #[error("bus coupling too strong for bin splitting on {label:?}: kappa = {kappa} >= sqrt(8)*g = {limit}")]
    OvercoupledForSplitting {
        label: FieldLabel,
        kappa: f64,
        limit: f64,
    },

    #[error("energy mismatch: 2*omega0_pump - omega0_signal - omega0_idler = {mismatch} exceeds tolerance {tolerance}")]
    EnergyMismatch { mismatch: f64, tolerance: f64 },

    #[error("transfer-function poles degenerate for {label:?}: separation {separation}")]
    DegeneratePoles { label: FieldLabel, separation: f64 },

    #[error("quadrature window too narrow: edge magnitude {edge_ratio} of max exceeds 1e-8 after {extensions} extensions")]
    QuadratureWindowTooNarrow { edge_ratio: f64, extensions: usize },

    #[error("grid too coarse: step {step} exceeds linewidth/8 = {max_step}")]
    GridTooCoarse { step: f64, max_step: f64 },

    #[error("grid steps differ between axes: {step_i} vs {step_s}")]
    GridStepMismatch { step_i: f64, step_s: f64 },

    #[error("field is numerically zero (norm {norm}); nothing to normalize")]
    ZeroField { norm: f64 },

    #[error("SVD failed to converge")]
    SvdFailure,

    #[error("herald filter misses the JSA support (weight {weight})")]
    ZeroHerald { weight: f64 },

    #[error("bin modes overlap too strongly for qubit extraction: |<m|p>|^2 = {overlap_sq}")]
    NonOrthogonalBins { overlap_sq: f64 },

    #[error("invalid pump spec: {0}")]
    InvalidPump(String),

    #[error("invalid sweep spec: {0}")]
    InvalidSweep(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// CLI exit code: 1 for configuration problems, 2 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NegativeRate { .. }
            | Error::OvercoupledForSplitting { .. }
            | Error::EnergyMismatch { .. }
            | Error::GridTooCoarse { .. }
            | Error::GridStepMismatch { .. }
            | Error::InvalidPump(_)
            | Error::InvalidSweep(_)
            | Error::Config(_)
            | Error::Io(_) => 1,
            Error::DegeneratePoles { .. }
            | Error::QuadratureWindowTooNarrow { .. }
            | Error::ZeroField { .. }
            | Error::SvdFailure
            | Error::ZeroHerald { .. }
            | Error::NonOrthogonalBins { .. } => 2,
        }
    }

    /// Short machine-readable code, used in sweep error columns.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NegativeRate { .. } => "NegativeRate",
            Error::OvercoupledForSplitting { .. } => "OvercoupledForSplitting",
            Error::EnergyMismatch { .. } => "EnergyMismatch",
            Error::DegeneratePoles { .. } => "DegeneratePoles",
            Error::QuadratureWindowTooNarrow { .. } => "QuadratureWindowTooNarrow",
            Error::GridTooCoarse { .. } => "GridTooCoarse",
            Error::GridStepMismatch { .. } => "GridStepMismatch",
            Error::ZeroField { .. } => "ZeroField",
            Error::SvdFailure => "SvdFailure",
            Error::ZeroHerald { .. } => "ZeroHerald",
            Error::NonOrthogonalBins { .. } => "NonOrthogonalBins",
            Error::InvalidPump(_) => "InvalidPump",
            Error::InvalidSweep(_) => "InvalidSweep",
            Error::Config(_) => "Config",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
