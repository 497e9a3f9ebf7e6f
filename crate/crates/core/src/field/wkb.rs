//! Outer WKB solution of the initial value problem and its normalizing constants.

use super::external::phase_integral;
use super::FieldContext;
use crate::error::{Error, Result};
use crate::langer::CoefficientModel;
use crate::numerics::{integrate_log_left, log_gamma, ScaledReal};
use crate::recurrence::RecurrenceCoefficients;
use serde::Serialize;
use std::f64::consts::PI;

/// Local WKB data at `(t, y)` built from `a(t, eps) = a q_hat_eps(t)` and `b(t, eps) = b q_eps(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WkbPhases {
    /// `sqrt((y - b)^2 - 4a^2)`, carrying the sign of `y - b` so that `h2_plus` is the dominant root.
    pub h1: f64,
    /// `y - b + h1`.
    pub h2_plus: f64,
    /// `y - b - h1`, formed as `4a^2 / h2_plus` to avoid cancellation.
    pub h2_minus: f64,
    /// `ln |h2_plus|`.
    pub s0_prime_plus: f64,
    /// `t`-derivative of `-(1/4) ln h1^2 + (1/2) ln h2_plus + (1/2) int b' / h1`.
    pub s1_prime_plus: f64,
}

impl WkbPhases {
    pub fn new(model: &CoefficientModel, t: f64, y: f64, eps: f64) -> Result<Self> {
        let a = model.a_t(t, eps);
        let b = model.b_t(t, eps);
        let d = (y - b).powi(2) - 4.0 * a * a;
        if !(d > 0.0) {
            return Err(Error::Domain(format!("y = {y} is inside the band at t = {t}")));
        }
        let h1 = (y - b).signum() * d.sqrt();
        let h2_plus = y - b + h1;
        let h2_minus = 4.0 * a * a / h2_plus;
        let (db, da) = coefficient_slopes(model, t, eps);
        let dd = -2.0 * (y - b) * db - 8.0 * a * da;
        let dh1 = dd / (2.0 * h1);
        let s1_prime_plus = -0.25 * dd / d + 0.5 * (dh1 - db) / h2_plus + 0.5 * db / h1;
        Ok(WkbPhases { h1, h2_plus, h2_minus, s0_prime_plus: h2_plus.abs().ln(), s1_prime_plus })
    }
}

/// `(b'(t, eps), a'(t, eps))`.
fn coefficient_slopes(model: &CoefficientModel, t: f64, eps: f64) -> (f64, f64) {
    let db = model.b_t(t, eps) / (model.alpha * (t + eps * model.c()));
    let da = model.a_t(t, eps) / (model.alpha * (t + eps * model.s1));
    (db, da)
}

/// Dominant WKB solution `(h2+ / h1)^{1/2} exp(int_0^t b' / 2 h1) exp((1/eps) int_0^t ln h2+)` at `t = n eps`.
///
/// `psi(n) / psi(0)` approximates the monic scaled recurrence solution.
pub fn wkb_psi_plus(ctx: &FieldContext, n: usize, y: f64) -> Result<ScaledReal> {
    let (m, eps) = (&ctx.model, ctx.eps);
    if !(eps > 0.0) {
        return Err(Error::Domain("the WKB solution needs eps > 0".into()));
    }
    let t = n as f64 * eps;
    let w = WkbPhases::new(m, t, y, eps)?;
    WkbPhases::new(m, 0.0, y, eps)?;
    let drift = |u: f64| {
        let ph = WkbPhases::new(m, u, y, eps).map(|p| p.h1).unwrap_or(f64::NAN);
        coefficient_slopes(m, u, eps).0 / (2.0 * ph)
    };
    let phase = |u: f64| WkbPhases::new(m, u, y, eps).map(|p| p.s0_prime_plus).unwrap_or(f64::NAN);
    let (i1, i0) = if n == 0 {
        (0.0, 0.0)
    } else {
        (integrate_log_left(drift, 0.0, t, ctx.spec)?, integrate_log_left(phase, 0.0, t, ctx.spec)?)
    };
    let sign = if w.h2_plus < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    Ok(ScaledReal::exp(i0 / eps + i1) * ((w.h2_plus / w.h1).sqrt() * sign))
}

/// `ln kappa(n)` from the Gamma-function form of the product.
fn ln_kappa_n(model: &CoefficientModel, n: usize) -> Result<f64> {
    let c = model.c();
    let x = n as f64 + c;
    let f = |v: f64| v * v.ln() - v;
    Ok((f(x) - f(c) - log_gamma(n as f64 + model.s1 + 1.0)? + log_gamma(model.s1 + 1.0)?) / model.alpha)
}

/// `kappa(n) = exp(int_0^n ln q_hat(v + 1/2) dv) / prod_{i<=n} q_hat(i)`, with the product taken term by term.
pub fn kappa_n(model: &CoefficientModel, n: usize) -> f64 {
    let c = model.c();
    let f = |v: f64| v * v.ln() - v;
    let integral = (f(n as f64 + c) - f(c)) / model.alpha;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for i in 1..=n {
        let term = model.q_hat(i as f64).ln() - comp;
        let next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    (integral - sum).exp()
}

/// `lim kappa(n) = e^{c/alpha} Gamma(s1 + 1)^{1/alpha} / ((2 pi)^{1/(2 alpha)} c^{c/alpha})` with `c = s1 + 1/2`.
pub fn kappa_limit(model: &CoefficientModel) -> Result<f64> {
    let (c, al) = (model.c(), model.alpha);
    Ok((c / al + log_gamma(model.s1 + 1.0)? / al - (2.0 * PI).ln() / (2.0 * al) - c / al * c.ln()).exp())
}

/// `prod_{i<=n} a q_hat(i) / a1(i)` for a comparison recurrence in the model variable.
pub fn kappa1_partial(model: &CoefficientModel, comparison: &RecurrenceCoefficients, n: usize) -> Result<f64> {
    Ok(log_ratio_sum(model, comparison, 1, n)?.exp())
}

fn log_ratio_sum(model: &CoefficientModel, comparison: &RecurrenceCoefficients, from: usize, to: usize) -> Result<f64> {
    let mut sum = 0.0;
    for i in from..=to {
        let a1 = comparison.a1(i);
        if !(a1 > 0.0) {
            return Err(Error::Domain(format!("{}: a1({i}) = {a1} is not positive", comparison.description)));
        }
        sum += (model.a * model.q_hat(i as f64) / a1).ln();
    }
    Ok(sum)
}

/// Limits of `kappa(n)` and `kappa_1(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct KappaConstants {
    pub kappa: f64,
    pub kappa1: f64,
    /// Difference between the last two extrapolation levels for `kappa1`.
    pub kappa1_error: f64,
}

/// `kappa` in closed form and `kappa_1` as the limit of its partial products.
///
/// The log partial sums behave like `L - d1/M - d2/M^2 + ...`, so two
/// Richardson steps on `M, 2M, 4M` give the limit; `M` grows until the
/// steps agree to `1e-12`.
pub fn kappa_constants(model: &CoefficientModel, comparison: Option<&RecurrenceCoefficients>) -> Result<KappaConstants> {
    let kappa = kappa_limit(model)?;
    let Some(cmp) = comparison else {
        return Ok(KappaConstants { kappa, kappa1: 1.0, kappa1_error: 0.0 });
    };
    let mut m = 2048;
    let mut l1 = log_ratio_sum(model, cmp, 1, m)?;
    loop {
        let l2 = l1 + log_ratio_sum(model, cmp, m + 1, 2 * m)?;
        let l4 = l2 + log_ratio_sum(model, cmp, 2 * m + 1, 4 * m)?;
        let r1a = 2.0 * l2 - l1;
        let r1b = 2.0 * l4 - l2;
        let r2 = (4.0 * r1b - r1a) / 3.0;
        let err = (r2 - r1b).abs();
        if err < 1e-12 || m >= 1 << 16 {
            return Ok(KappaConstants { kappa, kappa1: r2.exp(), kappa1_error: err * r2.exp() });
        }
        l1 = l4;
        m *= 4;
    }
}

/// Outer approximation of the orthonormal `p_n` in the scaled variable:
/// `kappa(n) kappa_1(n) (y^2 / ((y - b(t_n))^2 - 4 a(t_n + eps/2)^2))^{1/4} exp((1/eps) int_0^{t_n} ln(z + sqrt(z^2 - 1)))`.
///
/// `y` must lie outside the band for every `u` in `[0, t_n]`.
pub fn wkb_outer(ctx: &FieldContext, n: usize, y: f64) -> Result<ScaledReal> {
    let (m, eps) = (&ctx.model, ctx.eps);
    if !(eps > 0.0) {
        return Err(Error::Domain("the outer solution needs eps > 0".into()));
    }
    let t = n as f64 * eps;
    let (z0, z1) = (m.z(0.0, y, eps), m.z(t, y, eps));
    let outside = (z0 > 1.0 && z1 > 1.0) || (z0 < -1.0 && z1 < -1.0);
    if !outside {
        return Err(Error::Domain(format!("y = {y} meets the band before t = {t}")));
    }
    let phase = phase_integral(m, y, eps, t, ctx.spec)?;
    let q = m.q_eps(t, eps);
    let amp = (y * y / ((y - m.b * q).powi(2) - 4.0 * m.a * m.a * q * q)).powf(0.25);
    let ln_k1 = match &ctx.comparison {
        Some(c) => log_ratio_sum(m, c, 1, n)?,
        None => 0.0,
    };
    let sign = if z1 < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    Ok(ScaledReal::exp(phase / eps + ln_kappa_n(m, n)? + ln_k1) * (amp * sign))
}
