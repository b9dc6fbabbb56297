//! Location of the Euclidean angle `α₀`, where the geometric root meets its
//! conjugate on the real axis.

use num_complex::Complex64;
use num_traits::Zero;

use super::tracking::{RootBranch, TrackConfig};
use crate::algebra::discriminant_x;
use crate::rmpoly::{recursion_jet, RMPolynomial};
use crate::{Error, Result};

/// Bisection stops once the bracket is this narrow.
pub const ALPHA0_BISECTION_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Alpha0 {
    pub alpha0: f64,
    /// The (real) double root at `α₀`.
    pub x0: Complex64,
    /// Upper end of the final bisection bracket.
    pub bisection: f64,
    /// Whether Newton on the double-root system refined the bisection value.
    pub polished: bool,
}

/// Root of `P_{2n}` at `alpha` nearest `guess` among those not strictly in
/// the upper half-plane.
pub(crate) fn lower_root_near(
    rm: &RMPolynomial,
    alpha: f64,
    guess: Complex64,
    cfg: &TrackConfig,
) -> Result<Complex64> {
    let roots = rm.roots_at(alpha, cfg.root_tol)?;
    roots
        .roots
        .iter()
        .copied()
        .filter(|r| r.im <= cfg.real_axis_tol * (1.0 + r.norm()))
        .min_by(|a, b| (a - guess).norm().total_cmp(&(b - guess).norm()))
        .ok_or_else(|| Error::Tracking(format!("no lower half-plane root at alpha = {alpha}")))
}

/// Bisects on "the branch is still strictly below the real axis" between
/// the last complex sample and the first real one, then refines with Newton
/// on `P = ∂P/∂x = 0` in `(x, α)`.
pub fn find_alpha0(rm: &RMPolynomial, branch: &RootBranch, cfg: &TrackConfig) -> Result<Alpha0> {
    let exit = branch
        .lower_half_plane_exit(cfg)
        .ok_or(Error::NoEuclideanAngle { branch: branch.id })?;
    let before = branch.samples[exit - 1];
    let mut lo = before.alpha;
    let mut x_lo = before.x;
    let mut hi = branch.samples[exit].alpha;
    while hi - lo > ALPHA0_BISECTION_TOL {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let x = lower_root_near(rm, mid, x_lo, cfg)?;
        if cfg.is_real(x) {
            hi = mid;
        } else {
            lo = mid;
            x_lo = x;
        }
    }

    let guess = Complex64::new(x_lo.re, 0.0);
    if let Some((x, a)) = polish_double_root(rm, guess, Complex64::new(hi, 0.0)) {
        if (a.re - hi).abs() <= 1e-8 && a.im.abs() <= 1e-10 && (x - guess).norm() <= 1e-4 {
            return Ok(Alpha0 {
                alpha0: a.re,
                x0: Complex64::new(x.re, 0.0),
                bisection: hi,
                polished: true,
            });
        }
    }
    Ok(Alpha0 {
        alpha0: hi,
        x0: Complex64::new(x_lo.re, 0.0),
        bisection: hi,
        polished: false,
    })
}

/// Newton iteration for a double root: solves `P(x, α) = 0`,
/// `∂P/∂x (x, α) = 0` with `α` allowed to be complex.
pub fn polish_double_root(
    rm: &RMPolynomial,
    mut x: Complex64,
    mut alpha: Complex64,
) -> Option<(Complex64, Complex64)> {
    for _ in 0..50 {
        let jet = recursion_jet(rm.n, alpha, x).ok()?;
        let (f, fx, fxx, fa, fxa) = (jet.p, jet.px, jet.pxx, jet.pa, jet.pxa);
        // [fx fa; fxx fxa] [dx; da] = -[f; fx]
        let det = fx * fxa - fa * fxx;
        if det.is_zero() || !det.is_finite() {
            return None;
        }
        let dx = (-f * fxa + fa * fx) / det;
        let da = (-fx * fx + fxx * f) / det;
        x += dx;
        alpha += da;
        if !x.is_finite() || !alpha.is_finite() {
            return None;
        }
        if dx.norm() <= 4.0 * f64::EPSILON * (1.0 + x.norm())
            && da.norm() <= 4.0 * f64::EPSILON * (1.0 + alpha.norm())
        {
            return Some((x, alpha));
        }
    }
    Some((x, alpha))
}

/// `disc_x P_{2n}(x, e^{iα/2})`.
pub fn discriminant_at(rm: &RMPolynomial, alpha: f64) -> Result<Complex64> {
    discriminant_x(&rm.specialize(alpha))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscriminantCheck {
    pub at: f64,
    pub left: f64,
    pub right: f64,
    /// `|D(α₀)| / max(|D(α₀ − δ)|, |D(α₀ + δ)|)`.
    pub relative: f64,
}

impl DiscriminantCheck {
    pub fn locally_minimal(&self) -> bool {
        self.at <= self.left && self.at <= self.right
    }
}

/// Compares `|D|` at `alpha0` against its neighbours at `± delta`.
pub fn discriminant_check(rm: &RMPolynomial, alpha0: f64, delta: f64) -> Result<DiscriminantCheck> {
    let at = discriminant_at(rm, alpha0)?.norm();
    let left = discriminant_at(rm, alpha0 - delta)?.norm();
    let right = discriminant_at(rm, (alpha0 + delta).min(std::f64::consts::PI))?.norm();
    Ok(DiscriminantCheck {
        at,
        left,
        right,
        relative: at / left.max(right),
    })
}

/// Minimizes `|D(α)|` over `[center − half_width, center + half_width]` by
/// golden-section search.
pub fn alpha0_from_discriminant(rm: &RMPolynomial, center: f64, half_width: f64) -> Result<f64> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let f = |a: f64| discriminant_at(rm, a).map(|d| d.norm());
    let (mut a, mut b) = (center - half_width, (center + half_width).min(std::f64::consts::PI));
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    while b - a > 1e-13 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmpoly::build_rm;

    #[test]
    fn figure_eight_double_root() {
        // P_{-2} ∝ x² + (2cos α − 1)x + 1 has a double root x = 1 at α = 2π/3.
        let rm = build_rm(-1).unwrap();
        let start = Complex64::new(0.99, 0.0);
        let (x, a) = polish_double_root(&rm, start, Complex64::new(2.09, 0.0)).unwrap();
        let exact = 2.0 * std::f64::consts::PI / 3.0;
        assert!((a.re - exact).abs() < 1e-12, "{a}");
        assert!(a.im.abs() < 1e-12);
        assert!((x - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        let g = alpha0_from_discriminant(&rm, 2.09, 0.01).unwrap();
        assert!((g - exact).abs() < 1e-9);
    }
}
