//! Polynomial arithmetic: exact Laurent-bivariate integers, complex
//! univariate polynomials, root finding and discriminants.

mod cpoly;
mod laurent;
mod resultant;
mod roots;

pub use cpoly::{ComplexPoly, TRIM_THRESHOLD};
pub use laurent::{laurent_mul, LaurentBivariate, Monomial};
pub use resultant::{determinant, discriminant_x, resultant, sylvester_matrix};
pub use roots::{
    all_roots, all_roots_eval, all_roots_with, residual_scale, RootConfig, RootEval, RootSet,
    DEFAULT_ROOT_TOL,
};

use num_complex::Complex64;

/// Numeric image of `p` at `M = e^{iα/2}`.
pub fn specialize(p: &LaurentBivariate, alpha: f64) -> ComplexPoly {
    p.specialize(alpha)
}

/// `M = e^{iα/2}`.
pub fn meridian_eigenvalue(alpha: f64) -> Complex64 {
    Complex64::from_polar(1.0, alpha / 2.0)
}
