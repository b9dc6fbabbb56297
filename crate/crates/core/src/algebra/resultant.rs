//! Sylvester resultants and discriminants evaluated numerically.

use num_complex::Complex64;
use num_traits::Zero;

use super::ComplexPoly;
use crate::{Error, Result};

/// Sylvester matrix of `p` (degree m) and `q` (degree k), size m + k, with
/// coefficients listed highest degree first.
pub fn sylvester_matrix(p: &ComplexPoly, q: &ComplexPoly) -> Vec<Vec<Complex64>> {
    let m = p.degree();
    let k = q.degree();
    let size = m + k;
    let mut rows = Vec::with_capacity(size);
    for (src, count) in [(p, k), (q, m)] {
        let hi_first: Vec<Complex64> = src.coeffs().iter().rev().copied().collect();
        for shift in 0..count {
            let mut row = vec![Complex64::zero(); size];
            row[shift..shift + hi_first.len()].copy_from_slice(&hi_first);
            rows.push(row);
        }
    }
    rows
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(mut a: Vec<Vec<Complex64>>) -> Complex64 {
    let n = a.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .unwrap_or(col);
        if a[pivot][col].is_zero() {
            return Complex64::zero();
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let head = a[col][col];
        det *= head;
        let (top, bottom) = a.split_at_mut(col + 1);
        let prow = &top[col];
        for row in bottom.iter_mut() {
            let f = row[col] / head;
            if f.is_zero() {
                continue;
            }
            for j in col..n {
                row[j] -= f * prow[j];
            }
        }
    }
    det
}

/// `Res(p, q) = lead(p)^deg(q) · ∏ q(r_i)` over the roots `r_i` of `p`.
pub fn resultant(p: &ComplexPoly, q: &ComplexPoly) -> Complex64 {
    determinant(sylvester_matrix(p, q))
}

/// Discriminant with respect to `x`, normalized as
/// `disc(p) = (−1)^(d(d−1)/2) · Res(p, p′) / lead(p)`,
/// so that `disc(ax² + bx + c) = b² − 4ac` and
/// `disc(p) = lead^(2d−2) ∏_{i<j} (r_i − r_j)²`.
pub fn discriminant_x(p: &ComplexPoly) -> Result<Complex64> {
    let d = p.degree();
    if d < 2 {
        return Err(Error::InvalidArgument(
            "discriminant needs degree >= 2".into(),
        ));
    }
    let lead = p.leading();
    if lead.is_zero() || !lead.is_finite() {
        return Err(Error::DegenerateLeading);
    }
    let res = resultant(p, &p.derivative());
    let sign = if (d * (d - 1) / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(res * sign / lead)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_convention() {
        let p = ComplexPoly::from_real(&[-1.0, 0.0, 1.0]);
        let d = discriminant_x(&p).unwrap();
        assert!((d - Complex64::new(4.0, 0.0)).norm() < 1e-14);
        // b^2 - 4ac for 3x^2 + 5x - 2
        let q = ComplexPoly::from_real(&[-2.0, 5.0, 3.0]);
        let d = discriminant_x(&q).unwrap();
        assert!((d - Complex64::new(49.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn double_root_vanishes() {
        let p = ComplexPoly::from_real(&[1.0, -2.0, 1.0]);
        assert!(discriminant_x(&p).unwrap().norm() < 1e-14);
    }

    #[test]
    fn cubic_matches_closed_form() {
        // x^3 + 3x^2 + 2x - 1: b²c² − 4ac³ − 4b³d − 27a²d² + 18abcd = −23
        let p = ComplexPoly::from_real(&[-1.0, 2.0, 3.0, 1.0]);
        let d = discriminant_x(&p).unwrap();
        assert!((d - Complex64::new(-23.0, 0.0)).norm() < 1e-12, "{d}");
    }

    #[test]
    fn resultant_of_coprime_linears() {
        // Res(x - 2, x - 5) = q(2) = -3
        let p = ComplexPoly::from_real(&[-2.0, 1.0]);
        let q = ComplexPoly::from_real(&[-5.0, 1.0]);
        assert!((resultant(&p, &q) - Complex64::new(-3.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn rejects_low_degree() {
        let p = ComplexPoly::from_real(&[1.0, 1.0]);
        assert!(discriminant_x(&p).is_err());
    }
}
