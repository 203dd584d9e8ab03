use num_complex::Complex64;
use thiserror::Error;

/// Failures of the exact-arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExactError {
    #[error("invalid numeric literal `{0}`")]
    Literal(String),
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("pole at λ = {re}{im:+}i", re = .0.re, im = .0.im)]
    Pole(Complex64),
    #[error("polynomial must have degree at least 1 to have roots")]
    ConstantPolynomial,
    #[error("root finder did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence {
        best: Vec<Complex64>,
        residual: f64,
        iterations: usize,
    },
}

/// Validation failures when building a [`crate::network::Network`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NetworkError {
    #[error("network has no edges")]
    NoEdges,
    #[error("graph is not connected (vertex `{0}` unreachable from `{1}`)")]
    Disconnected(String, String),
    #[error("terminals must differ (both are `{0}`)")]
    SameTerminals(String),
    #[error("terminal `{0}` is not a vertex of any edge")]
    UnknownTerminal(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("edge {0}-{1}: R, L and D are all zero")]
    ZeroRlc(String, String),
    #[error("edge {0}-{1}: negative {2}")]
    NegativeParameter(String, String, &'static str),
    #[error("edge {0}-{1}: capacitance must be positive")]
    NonPositiveCapacitance(String, String),
    #[error("edge {0}-{1}: raw weight is the zero function")]
    ZeroWeight(String, String),
    #[error("edge {0}-{1}: raw weights are only allowed in raw mode")]
    RawInStrictMode(String, String),
}

/// Crate-level error.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error("edge {0}-{1} has a non-positive weight; the ordered-field solution is not defined")]
    NonPositiveWeight(String, String),
    #[error("effective admittance vanished; impedance is undefined")]
    ZeroAdmittance,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
