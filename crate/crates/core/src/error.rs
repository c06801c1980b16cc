use thiserror::Error;

/// Errors produced by the quadrature routines.
#[derive(Debug, Clone, Error)]
pub enum QuadError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("argument {x} outside domain [{lo}, {hi}]")]
    Domain { x: f64, lo: f64, hi: f64 },

    #[error("invalid interval: a = {a} must be less than b = {b}")]
    InvalidInterval { a: f64, b: f64 },

    #[error("oscillator is not increasing on the panel: g({a}) = {ga} >= g({b}) = {gb}")]
    NotIncreasing { a: f64, b: f64, ga: f64, gb: f64 },

    #[error("oscillator is not monotone: node image {index} does not increase")]
    NotMonotone { index: usize },

    #[error("stationary point detected near x = {x} (|g'| = {gprime_abs:.3e})")]
    StationaryPoint { x: f64, gprime_abs: f64 },

    #[error("oscillator is not monotone on [{a}, {b}]; split the interval first")]
    SplitRequired { a: f64, b: f64 },

    #[error("function evaluation failed at x = {x}: non-finite result")]
    Evaluation { x: f64 },

    #[error("wavenumber {ktilde:.3e} below cutoff; use the non-oscillatory fallback weights")]
    FallbackRequired { ktilde: f64 },

    #[error("interpolation nodes invalid: {0}")]
    InvalidNodes(String),

    #[error("reference integrator failed to converge within {max_panels} sub-panels")]
    OracleFailure { max_panels: usize },
}

pub type Result<T> = std::result::Result<T, QuadError>;
