use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `C(0,3)` is the unknot, which carries no hyperbolic structure.
    #[error("n = 0 is excluded: C(0,3) is the unknot and its complement is not hyperbolic")]
    ZeroTwist,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("polynomial has a degenerate leading coefficient")]
    DegenerateLeading,

    #[error("root finder did not converge after {iterations} iterations (worst residual {residual:e})")]
    RootsNoConvergence {
        iterations: usize,
        best: Vec<Complex64>,
        residual: f64,
    },

    #[error("degenerate representation at x = {x}: the involution radicand vanishes")]
    DegenerateRepresentation { x: Complex64 },

    #[error("longitude modulus undefined at alpha = {alpha}, x = {x}")]
    LongitudePole { alpha: f64, x: Complex64 },

    #[error("no branch of P_{{2n}} with n = {n} qualifies as geometric")]
    NoQualifyingBranch { n: i64 },

    #[error("branch {branch} never reaches the real axis from below: no Euclidean angle")]
    NoEuclideanAngle { branch: usize },

    #[error("branch tracking failed: {0}")]
    Tracking(String),

    #[error("quadrature did not reach tolerance {tol:e} (estimate {estimate:e})")]
    Quadrature { tol: f64, estimate: f64 },
}
