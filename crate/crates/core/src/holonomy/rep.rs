//! Explicit `SL(2,C)` images of the knot group `⟨s, t | s w t⁻¹ w⁻¹⟩`,
//! `w = (t s⁻¹ t s t⁻¹ s)^n`.

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::Mat2;
use crate::{Error, Result};

/// Below this magnitude the radicand of the involution `c` is treated as
/// zero (the representation is abelian).
const RADICAND_FLOOR: f64 = 1e-14;

/// Word products are renormalized to unit determinant every this many
/// letters.
const RENORMALIZE_EVERY: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    S,
    SInv,
    T,
    TInv,
}

impl Letter {
    pub fn inverse(self) -> Self {
        match self {
            Letter::S => Letter::SInv,
            Letter::SInv => Letter::S,
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
        }
    }
}

/// The group elements the oracle knows how to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordKind {
    /// `w = (t s⁻¹ t s t⁻¹ s)^n`.
    W,
    /// `w` with its letters reversed.
    WStar,
    /// The longitude `w w* s^{−4n}`.
    Longitude,
}

const BLOCK: [Letter; 6] = [Letter::T, Letter::SInv, Letter::T, Letter::S, Letter::TInv, Letter::S];

/// Letters of `w` for the given (nonzero) `n`.
pub fn twist_word(n: i64) -> Vec<Letter> {
    let block: Vec<Letter> = if n >= 0 {
        BLOCK.to_vec()
    } else {
        BLOCK.iter().rev().map(|l| l.inverse()).collect()
    };
    block
        .iter()
        .copied()
        .cycle()
        .take(block.len() * n.unsigned_abs() as usize)
        .collect()
}

pub fn reversed(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().copied().collect()
}

pub fn inverse_word(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| l.inverse()).collect()
}

/// Letters of `w w* s^{−4n}`.
pub fn longitude_word(n: i64) -> Vec<Letter> {
    let w = twist_word(n);
    let mut out = w.clone();
    out.extend(reversed(&w));
    let s_letter = if n > 0 { Letter::SInv } else { Letter::S };
    out.extend(std::iter::repeat_n(s_letter, 4 * n.unsigned_abs() as usize));
    out
}

/// A point `(M, x)` of the representation variety together with its
/// matrices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RepPoint {
    pub m: Complex64,
    pub x: Complex64,
    pub s: Mat2,
    pub t: Mat2,
    /// The involution with `c S c⁻¹ = T⁻¹` and `c² = −I`.
    pub c: Mat2,
    /// `U = T S⁻¹ T S T⁻¹ S`, the image of one block of `w`.
    pub u: Mat2,
}

/// Representation at cone angle `alpha` (`M = e^{iα/2}`).
pub fn make_rep(alpha: f64, x: Complex64) -> Result<RepPoint> {
    make_rep_m(Complex64::from_polar(1.0, alpha / 2.0), x)
}

/// Representation at an arbitrary nonzero meridian eigenvalue `m`.
pub fn make_rep_m(m: Complex64, x: Complex64) -> Result<RepPoint> {
    let mi = m.inv();
    let (one, zero) = (Complex64::one(), Complex64::zero());
    let s = Mat2::new(m, one, zero, mi);
    let t = Mat2::new(m, zero, Complex64::new(2.0, 0.0) - m * m - mi * mi - x, mi);
    let m2 = m * m;
    let radicand = -one + m2 * 2.0 - m2 * m2 - m2 * x;
    if radicand.norm() < RADICAND_FLOOR {
        return Err(Error::DegenerateRepresentation { x });
    }
    let r = radicand.sqrt();
    let c = Mat2::new(zero, -m / r, r / m, zero);
    let mut rep = RepPoint {
        m,
        x,
        s,
        t,
        c,
        u: Mat2::identity(),
    };
    rep.u = rep.evaluate(&BLOCK);
    Ok(rep)
}

impl RepPoint {
    pub fn letter(&self, l: Letter) -> Mat2 {
        match l {
            Letter::S => self.s,
            Letter::SInv => self.s.inverse(),
            Letter::T => self.t,
            Letter::TInv => self.t.inverse(),
        }
    }

    /// Product of the letters, left to right, renormalized to unit
    /// determinant every few letters.
    pub fn evaluate(&self, word: &[Letter]) -> Mat2 {
        let mut acc = Mat2::identity();
        for (i, &l) in word.iter().enumerate() {
            acc = acc * self.letter(l);
            if (i + 1) % RENORMALIZE_EVERY == 0 {
                acc = acc.renormalized();
            }
        }
        acc.renormalized()
    }

    /// `Ũ`, the image of the reversed block `s t⁻¹ s t s⁻¹ t`.
    pub fn u_tilde(&self) -> Mat2 {
        self.evaluate(&reversed(&BLOCK))
    }
}

/// `Ũ` built from `U` alone: entries of `U` at `M⁻¹`, arranged as
/// `[[ũ22, ũ12], [ũ21, ũ11]]`.
pub fn u_tilde_by_swap(rep: &RepPoint) -> Result<Mat2> {
    let flipped = make_rep_m(rep.m.inv(), rep.x)?;
    let u = flipped.u;
    Ok(Mat2::new(u.a22, u.a12, u.a21, u.a11))
}

pub fn word_matrix(rep: &RepPoint, n: i64, which: WordKind) -> Result<Mat2> {
    if n == 0 {
        return Err(Error::ZeroTwist);
    }
    // Powers of the one-block matrix: multiplying out all 6|n| letters
    // would lose about ε · ∏‖letter‖ to cancellation.
    let block = twist_word(n.signum());
    let k = n.unsigned_abs() as i64;
    let w = rep.evaluate(&block).pow(k);
    Ok(match which {
        WordKind::W => w,
        WordKind::WStar => rep.evaluate(&reversed(&block)).pow(k),
        WordKind::Longitude => {
            let w_star = rep.evaluate(&reversed(&block)).pow(k);
            w * w_star * rep.s.pow(-4 * n)
        }
    })
}

/// `tr(S W c)`; it vanishes exactly when `(M, x)` gives a representation.
pub fn trace_swc(rep: &RepPoint, n: i64) -> Result<Complex64> {
    let w = word_matrix(rep, n, WordKind::W)?;
    Ok((rep.s * w * rep.c).trace())
}

/// `tr(S c)`, the common factor of every `tr(S U^k c)`.
pub fn trace_sc(rep: &RepPoint) -> Complex64 {
    (rep.s * rep.c).trace()
}

/// `M^e · tr(S W c) / tr(S c)` with `e` the recursion's normalization; equal
/// to `P_{2n}(x, M)`.
pub fn normalized_trace(rep: &RepPoint, n: i64) -> Result<Complex64> {
    let e = crate::rmpoly::normalization_exponent(n)?;
    Ok(rep.m.powi(e) * trace_swc(rep, n)? / trace_sc(rep))
}

/// Max-norm of `S W T⁻¹ W⁻¹ + (S W c)²`, which vanishes identically.
pub fn verify_involution_identity(rep: &RepPoint, n: i64) -> Result<f64> {
    Ok(involution_terms(rep, n)?.0)
}

/// The deviation of the involution identity together with the size of its
/// two terms, `max(1, ‖S W T⁻¹ W⁻¹‖, ‖S W c‖²)`, which bounds what rounding
/// can leave behind.
pub fn involution_terms(rep: &RepPoint, n: i64) -> Result<(f64, f64)> {
    let w = word_matrix(rep, n, WordKind::W)?;
    let lhs = rep.s * w * rep.t.inverse() * w.sl_inverse();
    let swc = rep.s * w * rep.c;
    let size = lhs.max_norm().max(swc.max_norm().powi(2)).max(1.0);
    Ok(((lhs + swc * swc).max_norm(), size))
}

/// Max-norm of `S W T⁻¹ W⁻¹ − I`; zero exactly at representations.
pub fn relator_deviation(rep: &RepPoint, n: i64) -> Result<f64> {
    let w = word_matrix(rep, n, WordKind::W)?;
    Ok((rep.s * w * rep.t.inverse() * w.sl_inverse() - Mat2::identity()).max_norm())
}

/// `L = ρ(l)₁₁`, the longitude's upper-left entry.
pub fn longitude_entry(rep: &RepPoint, n: i64) -> Result<Complex64> {
    Ok(word_matrix(rep, n, WordKind::Longitude)?.a11)
}

/// `u21 · L + ũ21 · M^{−4n}`, which vanishes at representations.
pub fn longitude_relation_residual(rep: &RepPoint, n: i64) -> Result<Complex64> {
    let l = longitude_entry(rep, n)?;
    let ut = u_tilde_by_swap(rep)?;
    let k = i32::try_from(-4 * n).map_err(|_| Error::InvalidArgument("n too large".into()))?;
    Ok(rep.u.a21 * l + ut.a21 * rep.m.powi(k))
}

/// Complex length `γ` with `tr ρ(l) = 2 cosh(γ/2)`, taken as `2 log L`
/// (principal branch; `γ` is only defined modulo `4πi`).
pub fn complex_length(rep: &RepPoint, n: i64) -> Result<Complex64> {
    Ok(longitude_entry(rep, n)?.ln() * 2.0)
}
