//! The Riley–Mednykh polynomial `P_{2n}(x, M)` of `C(2n,3)`.
//!
//! `P_{2n}` is built exactly from the three-term recursion
//!
//! ```text
//! P_{2n} = Q · P_{2(n-1)} − M⁸ · P_{2(n-2)}    n > 1
//! P_{2n} = Q · P_{2(n+1)} − M⁸ · P_{2(n+2)}    n < -1
//! ```
//!
//! seeded by `{P_0 = 1, P_2}` for positive `n` and `{P_0 = M⁻², P_{-2}}` for
//! negative `n`. The recursion is the Cayley–Hamilton relation for
//! `tr(S U^k c)` with `tr U = Q / M⁴`, so
//! `P_{2n} = M^e · tr(S W c) / tr(S c)` where `e` is
//! [`normalization_exponent`].

use num_complex::Complex64;

use crate::algebra::{all_roots_eval, ComplexPoly, LaurentBivariate, RootConfig, RootEval, RootSet};
use crate::{Error, Result};

/// `Q = −M⁴x³ + (−2M⁶ + 2M⁴ − 2M²)x² + (−M⁸ + 2M⁶ − 3M⁴ + 2M² − 1)x + 2M⁴`.
pub fn build_q() -> LaurentBivariate {
    LaurentBivariate::from_terms([
        (3, 4, -1),
        (2, 6, -2),
        (2, 4, 2),
        (2, 2, -2),
        (1, 8, -1),
        (1, 6, 2),
        (1, 4, -3),
        (1, 2, 2),
        (1, 0, -1),
        (0, 4, 2),
    ])
}

/// `P_2 = −M⁴x³ + (−2M⁶ + M⁴ − 2M²)x² + (−M⁸ + M⁶ − 2M⁴ + M² − 1)x + M⁴`.
pub fn seed_p2() -> LaurentBivariate {
    LaurentBivariate::from_terms([
        (3, 4, -1),
        (2, 6, -2),
        (2, 4, 1),
        (2, 2, -2),
        (1, 8, -1),
        (1, 6, 1),
        (1, 4, -2),
        (1, 2, 1),
        (1, 0, -1),
        (0, 4, 1),
    ])
}

/// `P_{-2} = M²x² + (M⁴ − M² + 1)x + M²`.
pub fn seed_pm2() -> LaurentBivariate {
    LaurentBivariate::from_terms([(2, 2, 1), (1, 4, 1), (1, 2, -1), (1, 0, 1), (0, 2, 1)])
}

/// `P_0`, which depends on the direction of the recursion: `1` for `n > 0`
/// and `M⁻²` for `n < 0`.
pub fn seed_p0(positive: bool) -> LaurentBivariate {
    if positive {
        LaurentBivariate::one()
    } else {
        LaurentBivariate::monomial(1, 0, -2)
    }
}

/// Power of `M` relating `P_{2n}` to the holonomy trace:
/// `P_{2n} = M^e · tr(S W c) / tr(S c)`, with `e = 4n` for `n > 0` and
/// `e = −4n − 2` for `n < 0`.
pub fn normalization_exponent(n: i64) -> Result<i32> {
    check_n(n)?;
    let e = if n > 0 { 4 * n } else { -4 * n - 2 };
    i32::try_from(e).map_err(|_| Error::InvalidArgument(format!("n = {n} is too large")))
}

/// Degree in `x`: `3n` for `n ≥ 1`, `−(3n + 1)` for `n ≤ −1`.
pub fn expected_degree(n: i64) -> Result<u32> {
    check_n(n)?;
    let d = if n > 0 { 3 * n } else { -(3 * n + 1) };
    u32::try_from(d).map_err(|_| Error::InvalidArgument(format!("n = {n} is too large")))
}

fn check_n(n: i64) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroTwist)
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMPolynomial {
    pub n: i64,
    pub poly: LaurentBivariate,
}

impl RMPolynomial {
    pub fn degree_x(&self) -> u32 {
        self.poly.degree_x().unwrap_or(0)
    }

    pub fn specialize(&self, alpha: f64) -> ComplexPoly {
        self.poly.specialize(alpha)
    }

    /// `P_{2n}(x, M)` evaluated directly.
    pub fn eval(&self, x: Complex64, m: Complex64) -> Complex64 {
        self.poly.specialize_m(m).eval(x)
    }

    /// Evaluator running the recursion numerically at fixed `M`.
    pub fn recursion_eval(&self, m: Complex64) -> RecursionEval {
        RecursionEval::new(self.n, m)
    }

    /// Roots in `x` at `M = e^{iα/2}`, refined against the recursion.
    pub fn roots_at(&self, alpha: f64, tol: f64) -> Result<RootSet> {
        let m = Complex64::from_polar(1.0, alpha / 2.0);
        all_roots_eval(&self.poly.specialize_m(m), &self.recursion_eval(m), &RootConfig::with_tol(tol))
    }
}

/// `P_{2n}(x, M)` at fixed `M`, computed by running the three-term recursion
/// on numbers rather than expanding it. The expanded coefficients grow
/// quickly with `|n|` and cancel badly for `|x| > 1`; the recursion does not.
#[derive(Clone, Debug)]
pub struct RecursionEval {
    steps: usize,
    m8: Complex64,
    q: ComplexPoly,
    p0: ComplexPoly,
    p1: ComplexPoly,
}

impl RecursionEval {
    pub fn new(n: i64, m: Complex64) -> Self {
        let positive = n > 0;
        let seed = if positive { seed_p2() } else { seed_pm2() };
        Self {
            steps: n.unsigned_abs() as usize,
            m8: m.powi(8),
            q: build_q().specialize_m(m),
            p0: seed_p0(positive).specialize_m(m),
            p1: seed.specialize_m(m),
        }
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.eval_with_derivative(x).0
    }
}

/// `P` with its partial derivatives in `x` and `α` at one point, where
/// `M = e^{iα/2}`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Jet {
    pub p: Complex64,
    pub px: Complex64,
    pub pxx: Complex64,
    pub pa: Complex64,
    pub pxa: Complex64,
}

impl Jet {
    fn of(poly: &LaurentBivariate, m: Complex64, x: Complex64) -> Self {
        let f = poly.specialize_m(m);
        let fa = poly.specialize_dalpha_m(m);
        let (p, px) = f.eval_with_derivative(x);
        let (pa, pxa) = fa.eval_with_derivative(x);
        Self {
            p,
            px,
            pxx: f.derivative().derivative().eval(x),
            pa,
            pxa,
        }
    }
}

/// Runs the recursion on [`Jet`]s at `M = e^{iα/2}` (complex `α` allowed).
pub fn recursion_jet(n: i64, alpha: Complex64, x: Complex64) -> Result<Jet> {
    check_n(n)?;
    let m = (Complex64::new(0.0, 0.5) * alpha).exp();
    let positive = n > 0;
    let q = Jet::of(&build_q(), m, x);
    let mut a = Jet::of(&seed_p0(positive), m, x);
    let mut b = Jet::of(&if positive { seed_p2() } else { seed_pm2() }, m, x);
    let m8 = m.powi(8);
    // d(M⁸)/dα
    let m8a = Complex64::new(0.0, 4.0) * m8;
    for _ in 1..n.unsigned_abs() {
        let next = Jet {
            p: q.p * b.p - m8 * a.p,
            px: q.px * b.p + q.p * b.px - m8 * a.px,
            pxx: q.pxx * b.p + 2.0 * q.px * b.px + q.p * b.pxx - m8 * a.pxx,
            pa: q.pa * b.p + q.p * b.pa - m8a * a.p - m8 * a.pa,
            pxa: q.pxa * b.p + q.pa * b.px + q.px * b.pa + q.p * b.pxa
                - m8a * a.px
                - m8 * a.pxa,
        };
        a = b;
        b = next;
    }
    Ok(b)
}

impl RootEval for RecursionEval {
    fn eval_with_derivative(&self, x: Complex64) -> (Complex64, Complex64) {
        let (q, dq) = self.q.eval_with_derivative(x);
        let mut a = self.p0.eval_with_derivative(x);
        let mut b = self.p1.eval_with_derivative(x);
        for _ in 1..self.steps {
            let next = (q * b.0 - self.m8 * a.0, dq * b.0 + q * b.1 - self.m8 * a.1);
            a = b;
            b = next;
        }
        b
    }

    /// The same recursion on absolute values, which bounds the size of the
    /// intermediate terms.
    fn scale(&self, x: Complex64) -> f64 {
        let q = self.q.eval_scale(x);
        let m8 = self.m8.norm();
        let mut a = self.p0.eval_scale(x);
        let mut b = self.p1.eval_scale(x);
        for _ in 1..self.steps {
            let next = q * b + m8 * a;
            a = b;
            b = next;
        }
        b
    }
}

/// `[P_0, P_{±2}, …, P_{2n}]`, every intermediate of the recursion.
pub fn build_sequence(n: i64) -> Result<Vec<LaurentBivariate>> {
    check_n(n)?;
    let positive = n > 0;
    let steps = n.unsigned_abs() as usize;
    let q = build_q();
    let m8 = LaurentBivariate::monomial(1, 0, 8);
    let mut seq = Vec::with_capacity(steps + 1);
    seq.push(seed_p0(positive));
    seq.push(if positive { seed_p2() } else { seed_pm2() });
    for k in 2..=steps {
        let next = &(&q * &seq[k - 1]) - &(&m8 * &seq[k - 2]);
        seq.push(next);
    }
    Ok(seq)
}

pub fn build_rm(n: i64) -> Result<RMPolynomial> {
    let poly = build_sequence(n)?.pop().expect("sequence has at least two entries");
    Ok(RMPolynomial { n, poly })
}

/// `P_{2n}` specialized at `M = e^{iα/2}`.
pub fn rm_numeric(n: i64, alpha: f64) -> Result<ComplexPoly> {
    if !(0.0..=std::f64::consts::PI).contains(&alpha) {
        return Err(Error::InvalidArgument(format!(
            "alpha = {alpha} is outside [0, pi]"
        )));
    }
    Ok(build_rm(n)?.specialize(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::all_roots;

    #[test]
    fn n_zero_is_rejected() {
        assert_eq!(build_rm(0), Err(Error::ZeroTwist));
        assert!(rm_numeric(0, 1.0).is_err());
        assert!(expected_degree(0).is_err());
    }

    #[test]
    fn seeds_are_reproduced() {
        assert_eq!(build_rm(1).unwrap().poly, seed_p2());
        assert_eq!(build_rm(-1).unwrap().poly, seed_pm2());
    }

    #[test]
    fn q_coefficients() {
        let q = build_q();
        assert_eq!(q.x_coefficient(3).into_iter().collect::<Vec<_>>(), vec![(4, (-1).into())]);
        assert_eq!(q.x_coefficient(0).into_iter().collect::<Vec<_>>(), vec![(4, 2.into())]);
        // At M = 1: -x^3 + (-2 + 2 - 2)x^2 + (-1 + 2 - 3 + 2 - 1)x + 2.
        let at_one = q.specialize(0.0);
        assert_eq!(at_one, ComplexPoly::from_real(&[2.0, -1.0, -2.0, -1.0]));
    }

    #[test]
    fn specializations_at_m_one() {
        assert_eq!(
            rm_numeric(1, 0.0).unwrap(),
            ComplexPoly::from_real(&[1.0, -2.0, -3.0, -1.0])
        );
        assert_eq!(
            rm_numeric(-1, 0.0).unwrap(),
            ComplexPoly::from_real(&[1.0, 1.0, 1.0])
        );
        let p0 = seed_p0(true).specialize(1.234);
        assert_eq!(p0, ComplexPoly::from_real(&[1.0]));
    }

    #[test]
    fn alpha_range_checked() {
        assert!(rm_numeric(1, -0.1).is_err());
        assert!(rm_numeric(1, 3.2).is_err());
        assert!(rm_numeric(1, std::f64::consts::PI).is_ok());
    }

    #[test]
    fn degree_law() {
        for n in (-8..=8).filter(|&n| n != 0) {
            let p = build_rm(n).unwrap();
            assert_eq!(p.degree_x(), expected_degree(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn normalization_exponents() {
        assert_eq!(normalization_exponent(1).unwrap(), 4);
        assert_eq!(normalization_exponent(3).unwrap(), 12);
        assert_eq!(normalization_exponent(-1).unwrap(), 2);
        assert_eq!(normalization_exponent(-3).unwrap(), 10);
    }

    #[test]
    fn seed_consistency_at_m_one() {
        // Roots of P_4(x, 1) against roots of the numerically formed
        // Q(x,1)·P_2(x,1) − P_0.
        let exact = build_rm(2).unwrap().specialize(0.0);
        let q = build_q().specialize(0.0);
        let p2 = seed_p2().specialize(0.0);
        let numeric = &(&q * &p2) - &ComplexPoly::from_real(&[1.0]);
        let a = all_roots(&exact, 1e-12).unwrap();
        let b = all_roots(&numeric, 1e-12).unwrap();
        for r in &a.roots {
            let j = b.nearest(*r).unwrap();
            assert!((b.roots[j] - r).norm() < 1e-10);
        }
    }
}
