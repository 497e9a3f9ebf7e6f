//! Numerical check of the shift expansion of Airy functions.
//!
//! For any Airy solution `chi`,
//! `chi(x0 + h) = chi(x0) X1 + eps^{1/3} chi'(x0) X2` with `x0 = eps^{-2/3} rho(t)`
//! and `h = eps^{1/3} (rho(t + eps) - rho(t)) / eps`. Using `chi = Ai` and
//! `chi = Bi` gives two equations for `X1`, `X2`.

use crate::error::{Error, Result};
use crate::numerics::airy_scaled;

/// Solves for `(X1, X2)` at the forward shift `t + eps`.
///
/// To leading order `X1 = cosh(sqrt(rho) rt)` and `X2 = sinh(sqrt(rho) rt) / sqrt(rho)`,
/// where `rt` is the forward difference quotient of `rho`.
pub fn airy_shift_check(rho_fn: impl Fn(f64) -> f64, t: f64, eps: f64) -> Result<(f64, f64)> {
    let r0 = rho_fn(t);
    if r0 == 0.0 || !r0.is_finite() {
        return Err(Error::Domain(format!("shift check needs rho(t) != 0, got {r0}")));
    }
    let rt = (rho_fn(t + eps) - r0) / eps;
    let e13 = eps.cbrt();
    let x0 = r0 / (e13 * e13);
    let p0 = airy_scaled(x0);
    let p1 = airy_scaled(x0 + e13 * rt);
    let w = p0.ai * p0.bi_prime - p0.ai_prime * p0.bi;
    let size = (p0.ai * p0.bi_prime).abs() + (p0.ai_prime * p0.bi).abs();
    if (w / size).to_f64().abs() < 1e-10 {
        return Err(Error::Conditioning(format!("Airy Wronskian degenerate at x = {x0}")));
    }
    let x1 = (p1.ai * p0.bi_prime - p1.bi * p0.ai_prime) / w;
    let x2 = (p0.ai * p1.bi - p0.bi * p1.ai) / (w * e13);
    Ok((x1.to_f64(), x2.to_f64()))
}

/// Leading-order values of `(X1, X2)` for given `rho` and difference quotient `rt`.
pub fn shift_leading_order(rho: f64, rt: f64) -> (f64, f64) {
    if rho > 0.0 {
        let s = rho.sqrt();
        ((s * rt).cosh(), (s * rt).sinh() / s)
    } else if rho < 0.0 {
        let s = (-rho).sqrt();
        ((s * rt).cos(), (s * rt).sin() / s)
    } else {
        (1.0, rt)
    }
}
