//! Exact integer polynomials in `x` and `M`, Laurent in `M`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::ComplexPoly;

/// Exponent pair `(x-exponent, M-exponent)`.
pub type Monomial = (u32, i32);

/// Polynomial with arbitrary-width integer coefficients in `x` (nonnegative
/// exponents) and `M` (any integer exponent).
///
/// Zero coefficients are never stored, so two values are equal iff their
/// term maps are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentBivariate {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentBivariate {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `coeff · x^x_exp · M^m_exp`.
    pub fn monomial(coeff: impl Into<BigInt>, x_exp: u32, m_exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term((x_exp, m_exp), coeff.into());
        p
    }

    /// Builds a polynomial from `(x_exp, m_exp, coeff)` triples; repeated
    /// monomials are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (xe, me, c) in terms {
            p.add_term((xe, me), c.into());
        }
        p
    }

    fn add_term(&mut self, key: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x_exp: u32, m_exp: i32) -> BigInt {
        self.terms
            .get(&(x_exp, m_exp))
            .cloned()
            .unwrap_or_default()
    }

    /// Terms in ascending `(x_exp, m_exp)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    /// Terms sorted by x-exponent descending, then M-exponent descending.
    pub fn terms_desc(&self) -> Vec<(u32, i32, BigInt)> {
        self.terms
            .iter()
            .rev()
            .map(|(&(xe, me), c)| (xe, me, c.clone()))
            .collect()
    }

    /// Degree in `x`; `None` for the zero polynomial.
    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(xe, _)| xe).max()
    }

    /// Smallest and largest M-exponent present.
    pub fn m_range(&self) -> Option<(i32, i32)> {
        let min = self.terms.keys().map(|&(_, me)| me).min()?;
        let max = self.terms.keys().map(|&(_, me)| me).max()?;
        Some((min, max))
    }

    /// Coefficient of `x^x_exp` as a Laurent polynomial in `M`, keyed by
    /// M-exponent.
    pub fn x_coefficient(&self, x_exp: u32) -> BTreeMap<i32, BigInt> {
        self.terms
            .range((x_exp, i32::MIN)..=(x_exp, i32::MAX))
            .map(|(&(_, me), c)| (me, c.clone()))
            .collect()
    }

    /// Multiplies by `M^k`.
    pub fn shift_m(&self, k: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(xe, me), c)| ((xe, me + k), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `M ↦ M^{-1}`.
    pub fn invert_m(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(xe, me), c)| ((xe, -me), c.clone()))
                .collect(),
        }
    }

    /// Largest absolute coefficient, as an `f64` (saturating).
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms
            .values()
            .map(|c| big_to_f64(c).abs())
            .fold(0.0, f64::max)
    }

    /// Numeric specialization at `M = e^{iα/2}`.
    pub fn specialize(&self, alpha: f64) -> ComplexPoly {
        // M^b = e^{i b α / 2} directly, without accumulating powers.
        self.specialize_with(|me| Complex64::from_polar(1.0, 0.5 * me as f64 * alpha))
    }

    /// Numeric specialization at an arbitrary nonzero `M`.
    pub fn specialize_m(&self, m: Complex64) -> ComplexPoly {
        self.specialize_with(|me| m.powi(me))
    }

    /// `∂/∂α` of the specialization at `M = e^{iα/2}`, where `α` may be
    /// complex: each `M^b` contributes `(i b / 2) M^b`.
    pub fn specialize_dalpha_m(&self, m: Complex64) -> ComplexPoly {
        self.specialize_with(|me| Complex64::new(0.0, 0.5 * me as f64) * m.powi(me))
    }

    fn specialize_with(&self, m_pow: impl Fn(i32) -> Complex64) -> ComplexPoly {
        let deg = self.degree_x().unwrap_or(0) as usize;
        let mut coeffs = vec![Complex64::zero(); deg + 1];
        for (&(xe, me), c) in &self.terms {
            coeffs[xe as usize] += m_pow(me) * big_to_f64(c);
        }
        ComplexPoly::from_raw(coeffs)
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

impl Add for &LaurentBivariate {
    type Output = LaurentBivariate;

    fn add(self, rhs: &LaurentBivariate) -> LaurentBivariate {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentBivariate {
    type Output = LaurentBivariate;

    fn sub(self, rhs: &LaurentBivariate) -> LaurentBivariate {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentBivariate {
    type Output = LaurentBivariate;

    fn neg(self) -> LaurentBivariate {
        LaurentBivariate {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentBivariate {
    type Output = LaurentBivariate;

    fn mul(self, rhs: &LaurentBivariate) -> LaurentBivariate {
        laurent_mul(self, rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentBivariate {
            type Output = LaurentBivariate;
            fn $m(self, rhs: LaurentBivariate) -> LaurentBivariate {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Exact product: convolution of the two term maps.
pub fn laurent_mul(a: &LaurentBivariate, b: &LaurentBivariate) -> LaurentBivariate {
    let mut out = LaurentBivariate::zero();
    for (&(xa, ma), ca) in &a.terms {
        for (&(xb, mb), cb) in &b.terms {
            out.add_term((xa + xb, ma + mb), ca * cb);
        }
    }
    out
}

impl fmt::Display for LaurentBivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (xe, me, c)) in self.terms_desc().into_iter().enumerate() {
            let neg = c < BigInt::zero();
            let mag = if neg { -c } else { c };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag == BigInt::from(1);
            let mut parts = Vec::new();
            if !unit || (xe == 0 && me == 0) {
                parts.push(mag.to_string());
            }
            match xe {
                0 => {}
                1 => parts.push("x".to_string()),
                _ => parts.push(format!("x^{xe}")),
            }
            match me {
                0 => {}
                1 => parts.push("M".to_string()),
                _ => parts.push(format!("M^{me}")),
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_product_adds_exponents() {
        let a = LaurentBivariate::monomial(1, 1, 1);
        let b = LaurentBivariate::monomial(1, 1, -1);
        let p = &a * &b;
        assert_eq!(p, LaurentBivariate::monomial(1, 2, 0));
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = LaurentBivariate::from_terms([(1, 2, 3), (0, -2, 1)]);
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
        let b = LaurentBivariate::from_terms([(1, 2, 3), (1, 2, -3)]);
        assert!(b.is_zero());
    }

    #[test]
    fn m_range_and_degree() {
        let p = LaurentBivariate::from_terms([(3, 4, -1), (0, -2, 1), (1, 8, 5)]);
        assert_eq!(p.degree_x(), Some(3));
        assert_eq!(p.m_range(), Some((-2, 8)));
        assert_eq!(LaurentBivariate::zero().degree_x(), None);
    }

    #[test]
    fn coefficients_do_not_overflow() {
        let big = LaurentBivariate::monomial(i64::MAX, 0, 0);
        let sq = &big * &big;
        let expected = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        assert_eq!(sq.coeff(0, 0), expected);
    }

    #[test]
    fn specialize_at_unit_m_is_coefficient_sum() {
        let p = LaurentBivariate::from_terms([(2, 4, 1), (2, -2, 2), (0, 0, -1)]);
        let c = p.specialize(0.0);
        assert_eq!(c.degree(), 2);
        assert!((c.coeffs()[2] - Complex64::new(3.0, 0.0)).norm() < 1e-15);
        assert!((c.coeffs()[0] + 1.0).norm() < 1e-15);
    }

    #[test]
    fn display_orders_terms() {
        let p = LaurentBivariate::from_terms([(0, -2, 1), (1, 2, -3), (1, 0, 1)]);
        assert_eq!(p.to_string(), "-3*x*M^2 + x + M^-2");
    }
}
