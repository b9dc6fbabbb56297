//! Hyperbolic cone-manifold volumes for the two-bridge knots `C(2n,3)`.
//!
//! The pipeline is:
//!
//! 1. [`rmpoly`] builds the Riley–Mednykh polynomial `P_{2n}(x, M)` exactly
//!    from a three-term recursion in `n`.
//! 2. [`geometry`] specializes it at `M = e^{iα/2}`, tracks its roots as the
//!    cone angle `α` grows, picks the geometric branch and the Euclidean angle
//!    `α₀` where that branch hits the real axis.
//! 3. The volume of `X_{2n}(α)` is the integral of `log |L|` from `α` to `α₀`
//!    along the geometric branch, `L` being the longitude eigenvalue.
//!
//! [`holonomy`] is an independent brute-force check: it builds the explicit
//! `SL(2,C)` matrices of the representation and verifies every closed-form
//! identity the pipeline relies on.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod holonomy;
pub mod rmpoly;

pub use error::{Error, Result};
