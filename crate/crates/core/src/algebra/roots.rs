//! Simultaneous root finding (Aberth–Ehrlich) with Newton polishing.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::Zero;

use super::ComplexPoly;
use crate::{Error, Result};

/// Default residual tolerance for polished roots.
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug)]
pub struct RootConfig {
    pub tol: f64,
    pub max_iterations: usize,
    pub polish_iterations: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self {
            tol: DEFAULT_ROOT_TOL,
            max_iterations: 500,
            polish_iterations: 50,
        }
    }
}

impl RootConfig {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }
}

/// All roots of a polynomial, with multiplicity, and `|p(root)|` for each.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Index of the root closest to `z`.
    pub fn nearest(&self, z: Complex64) -> Option<usize> {
        self.roots
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - z).norm().total_cmp(&(b.1 - z).norm()))
            .map(|(i, _)| i)
    }
}

/// Magnitude a residual at `x` is measured against: the largest
/// coefficient, or the Horner evaluation scale when `|x| > 1` makes that
/// larger.
pub fn residual_scale(p: &ComplexPoly, x: Complex64) -> f64 {
    p.max_abs_coeff().max(p.eval_scale(x))
}

/// Something roots can be refined against: a value with derivative, and the
/// magnitude rounding errors in that value are measured against.
pub trait RootEval {
    fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64);
    fn scale(&self, z: Complex64) -> f64;
}

impl RootEval for ComplexPoly {
    fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        ComplexPoly::eval_with_derivative(self, z)
    }

    fn scale(&self, z: Complex64) -> f64 {
        residual_scale(self, z)
    }
}

pub fn all_roots(p: &ComplexPoly, tol: f64) -> Result<RootSet> {
    all_roots_with(p, &RootConfig::with_tol(tol))
}

pub fn all_roots_with(p: &ComplexPoly, cfg: &RootConfig) -> Result<RootSet> {
    all_roots_eval(p, p, cfg)
}

/// Roots of `p`, iterated and checked against `eval`, which must evaluate
/// the same polynomial (possibly by a better conditioned route). `p` itself
/// only supplies the degree and the starting points.
pub fn all_roots_eval<E: RootEval>(p: &ComplexPoly, eval: &E, cfg: &RootConfig) -> Result<RootSet> {
    if p.is_zero() {
        return Err(Error::DegenerateLeading);
    }
    let d = p.degree();
    if d == 0 {
        return Err(Error::InvalidArgument(
            "root finding needs degree >= 1".into(),
        ));
    }
    let mut z = if d == 1 {
        let c = p.coeffs();
        vec![-c[0] / c[1]]
    } else {
        initial_guesses(p)
    };
    let mut done = vec![d == 1; d];
    let mut iterations = 0;
    while iterations < cfg.max_iterations && done.iter().any(|f| !f) {
        iterations += 1;
        for k in 0..d {
            if done[k] {
                continue;
            }
            let zk = z[k];
            let (pv, dv) = eval.eval_with_derivative(zk);
            if pv.is_zero() {
                done[k] = true;
                continue;
            }
            let ratio = pv / dv;
            let repulsion: Complex64 = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &zj)| {
                    let diff = zk - zj;
                    if diff.is_zero() {
                        Complex64::zero()
                    } else {
                        diff.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] = zk - step;
                if step.norm() <= 4.0 * f64::EPSILON * (1.0 + zk.norm()) {
                    done[k] = true;
                }
            } else {
                // Perturb a root sitting on a critical point.
                z[k] = zk + Complex64::from_polar(1e-8 * (1.0 + zk.norm()), k as f64);
            }
        }
    }

    let residuals = polish(eval, &mut z, cfg.polish_iterations);
    let worst = z
        .iter()
        .zip(&residuals)
        .map(|(&r, &res)| res / eval.scale(r))
        .fold(0.0, f64::max);
    if worst.is_nan() || worst > cfg.tol {
        return Err(Error::RootsNoConvergence {
            iterations,
            best: z,
            residual: worst,
        });
    }
    Ok(RootSet {
        roots: z,
        residuals,
    })
}

/// Starting points on a circle whose radius is the geometric mean of the
/// root magnitudes, rotated off the real axis.
fn initial_guesses(p: &ComplexPoly) -> Vec<Complex64> {
    let d = p.degree();
    let c = p.coeffs();
    let lead = p.leading().norm();
    let c0 = c[0].norm();
    let mut radius = if c0 > 0.0 {
        (c0 / lead).powf(1.0 / d as f64)
    } else {
        // Fall back to the Cauchy bound when x = 0 is a root.
        1.0 + c[..d].iter().map(|a| a.norm() / lead).fold(0.0, f64::max)
    };
    if !radius.is_finite() || radius == 0.0 {
        radius = 1.0;
    }
    (0..d)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / d as f64 + 0.4))
        .collect()
}

/// Newton refinement of each root in place. A step is kept only while the
/// residual does not increase and the iterate stays closer to its start than
/// to any other root, so nearby roots are never merged.
fn polish<E: RootEval>(p: &E, z: &mut [Complex64], iterations: usize) -> Vec<f64> {
    let start = z.to_vec();
    let mut residuals = Vec::with_capacity(z.len());
    for k in 0..z.len() {
        let separation = start
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, &w)| (w - start[k]).norm())
            .fold(f64::INFINITY, f64::min);
        let mut best = z[k];
        let mut best_res = p.eval_with_derivative(best).0.norm();
        let mut x = best;
        for _ in 0..iterations {
            if best_res == 0.0 {
                break;
            }
            let (v, d) = p.eval_with_derivative(x);
            let step = v / d;
            if !step.is_finite() {
                break;
            }
            x -= step;
            if (x - start[k]).norm() > 0.25 * separation {
                break;
            }
            let res = p.eval_with_derivative(x).0.norm();
            if res <= best_res {
                best = x;
                best_res = res;
            }
            if step.norm() <= 2.0 * f64::EPSILON * x.norm().max(f64::MIN_POSITIVE) {
                break;
            }
        }
        z[k] = best;
        residuals.push(best_res);
    }
    residuals
}
