use thiserror::Error;

/// Errors produced by the library.
///
/// The variants are grouped by the way a caller is expected to react:
/// invalid input (`Domain`, `NotCoprime`, `Overflow`), a request outside the
/// covered formulas (`Uncovered`, `Unsupported`), a numeric routine that did
/// not reach its target (`Convergence`, `Resolution`), and `Internal` for
/// broken invariants.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("weights are not coprime: gcd = {gcd}")]
    NotCoprime { gcd: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("uncovered case: {0}")]
    Uncovered(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error(
        "quadrature did not reach tolerance {tol:e}: estimated error {achieved:e} after {evaluations} evaluations"
    )]
    Convergence {
        tol: f64,
        achieved: f64,
        evaluations: usize,
    },

    #[error("phase unwrapping residual {residual:.4} exceeds 0.01 with {samples} samples; increase the sample count")]
    Resolution { residual: f64, samples: usize },

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
