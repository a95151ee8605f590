use num_complex::Complex64;

pub type Result<T> = std::result::Result<T, Error>;

/// Library-wide error type.
///
/// Validation-style failures (`Domain`, `Geometry`, `Data`, `Config`) map to
/// CLI exit code 2; numerical failures (`OrderRange`, `SeriesNonConvergence`,
/// `QuadratureNonConvergence`, `ResonanceNotFound`) map to exit code 3.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("order {order} outside the stable recurrence range for |z| = {z_abs:.3e} (dynamic range > 1e280)")]
    OrderRange { order: usize, z_abs: f64 },

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error(
        "multipole series not converged at n_max = {n_max}: tail {tail:.3e} exceeds {tol:.3e} x |sum|"
    )]
    SeriesNonConvergence { n_max: usize, tail: f64, tol: f64 },

    #[error(
        "quadrature not converged after {subdivisions} subdivisions: error {abs_error:.3e}, best estimate {best}"
    )]
    QuadratureNonConvergence {
        best: Complex64,
        abs_error: f64,
        subdivisions: usize,
    },

    #[error("no Re eps(omega) = -2 crossing inside [{lo:.6e}, {hi:.6e}] rad/s")]
    ResonanceNotFound { lo: f64, hi: f64 },

    #[error("invalid data: {0}")]
    Data(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Exit code the CLI reports for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Geometry(_) | Error::Data(_) | Error::Config(_) => 2,
            Error::OrderRange { .. }
            | Error::SeriesNonConvergence { .. }
            | Error::QuadratureNonConvergence { .. }
            | Error::ResonanceNotFound { .. } => 3,
            Error::Io(_) => 1,
        }
    }
}
