use num_complex::Complex64;

use crate::{Error, Result};

/// Below this magnitude `M^{±2} + x` is treated as a zero of the longitude
/// ratio.
const POLE_FLOOR: f64 = 1e-14;

/// Closed form of the longitude eigenvalue at a root `x` of `P_{2n}`:
/// `L = −M^{−4n−2} (M⁻² + x) / (M² + x)`.
pub fn longitude_closed_form(n: i64, m: Complex64, x: Complex64) -> Result<Complex64> {
    let m2 = m * m;
    let den = m2 + x;
    if den.norm() < POLE_FLOOR {
        return Err(Error::LongitudePole {
            alpha: 2.0 * m.arg(),
            x,
        });
    }
    let k = i32::try_from(-4 * n - 2).map_err(|_| Error::InvalidArgument("n too large".into()))?;
    Ok(-m.powi(k) * (m2.inv() + x) / den)
}

/// `log |(M⁻² + x) / (M² + x)|` at `M = e^{iα/2}`, i.e. `log |L|`; the
/// unit-modulus prefactor of `L` drops out.
///
/// Positive when `Im x < 0`, negative when `Im x > 0`, zero for real `x`.
pub fn log_abs_l(alpha: f64, x: Complex64) -> Result<f64> {
    let m2 = Complex64::from_polar(1.0, alpha);
    let num = m2.conj() + x;
    let den = m2 + x;
    if den.norm() < POLE_FLOOR || num.norm() < POLE_FLOOR {
        return Err(Error::LongitudePole { alpha, x });
    }
    // Expanded form keeps the sign exact for real x:
    // |M⁻² + x|² − |M² + x|² = −4 sin α · Im x.
    let (c, s) = (alpha.cos(), alpha.sin());
    let re = c + x.re;
    let num2 = re * re + (x.im - s) * (x.im - s);
    let den2 = re * re + (x.im + s) * (x.im + s);
    Ok(0.5 * (num2 / den2).ln())
}
