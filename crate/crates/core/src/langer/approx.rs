//! Airy-type approximate solutions and their residual in the difference equation.

use super::model::{CoefficientModel, Edge};
use super::phase::{rho_edge, TurningPoint};
use crate::error::{Error, Result};
use crate::numerics::{airy_scaled, QuadratureSpec, ScaledReal};

/// Which Airy function multiplies the amplitude.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Approximant {
    /// `g Ai(eps^{-2/3} rho)`.
    Psi1,
    /// `g Bi(eps^{-2/3} rho)`.
    Psi2,
}

/// Amplitude `g = (rho / (a(t + eps/2)^2 (z^2 - 1)))^{1/4}` for the given edge.
///
/// Within the series zone around the turning point the ratio `rho / (z^2 - 1)`
/// is taken from the local expansion, which stays finite at `t_p`; `rho` is
/// ignored there.
pub fn amplitude_g_edge(model: &CoefficientModel, edge: Edge, t: f64, y: f64, eps: f64, rho: f64) -> Result<f64> {
    let tpd = TurningPoint::locate(model, edge, y, eps)?;
    let ratio = if tpd.near(t) {
        tpd.ratio_series(t)
    } else {
        let z = model.z_edge(edge, t, y, eps);
        if z <= -1.0 {
            return Err(Error::Domain(format!("amplitude past the opposite band edge at t = {t}")));
        }
        rho / (z * z - 1.0)
    };
    if !(ratio > 0.0) {
        return Err(Error::Domain(format!("rho = {rho} has the wrong sign for t = {t}, y = {y}")));
    }
    let aq = model.a * model.q_eps(t, eps);
    Ok((ratio / (aq * aq)).powf(0.25))
}

/// Amplitude for the upper turning point.
pub fn amplitude_g(model: &CoefficientModel, t: f64, y: f64, eps: f64, rho: f64) -> Result<f64> {
    amplitude_g_edge(model, Edge::Plus, t, y, eps, rho)
}

fn approximant_parts(
    model: &CoefficientModel,
    t: f64,
    y: f64,
    eps: f64,
    spec: QuadratureSpec,
) -> Result<(f64, f64)> {
    let rho = rho_edge(model, Edge::Plus, t, y, eps, spec)?;
    let g = amplitude_g(model, t, y, eps, rho)?;
    Ok((g, rho))
}

/// `psi_1 = g Ai(eps^{-2/3} rho_1)` or `psi_2 = g Bi(eps^{-2/3} rho_1)`, exponent-carried.
pub fn airy_approximant(
    model: &CoefficientModel,
    t: f64,
    y: f64,
    eps: f64,
    which: Approximant,
    spec: QuadratureSpec,
) -> Result<ScaledReal> {
    let (g, rho) = approximant_parts(model, t, y, eps, spec)?;
    let p = airy_scaled(rho / eps.powf(2.0 / 3.0));
    Ok(match which {
        Approximant::Psi1 => p.ai,
        Approximant::Psi2 => p.bi,
    } * g)
}

/// Residual of an Airy approximant in the difference equation, with the
/// normalizer that makes `|beta| / (eps^2 normalizer)` bounded.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Residual {
    pub beta: f64,
    /// `sup |Ai(eps^{-2/3} rho(u))| + eps^{1/3} |Ai'(eps^{-2/3} rho(u))|` over `u` in `(t - eps, t + eps)`.
    pub normalizer: f64,
}

/// `beta = a(t + eps) psi(t + eps) + a(t) psi(t - eps) - 2 a(t + eps/2) cosh k(t) psi(t)`.
pub fn residual_beta(
    model: &CoefficientModel,
    t: f64,
    y: f64,
    eps: f64,
    which: Approximant,
    spec: QuadratureSpec,
) -> Result<Residual> {
    if !(t - eps > 0.0) {
        return Err(Error::Domain(format!("residual needs t - eps > 0, got t = {t}, eps = {eps}")));
    }
    let psi = |u: f64| airy_approximant(model, u, y, eps, which, spec);
    let beta = psi(t + eps)? * model.a_t(t + eps, eps) + psi(t - eps)? * model.a_t(t, eps)
        - psi(t)? * (2.0 * model.a * model.q_eps(t, eps) * model.z(t, y, eps));
    let e23 = eps.powf(2.0 / 3.0);
    let e13 = eps.cbrt();
    let mut sup: f64 = 0.0;
    let samples = 20;
    for i in 0..=samples {
        let u = t - eps + 2.0 * eps * i as f64 / samples as f64;
        let rho = rho_edge(model, Edge::Plus, u, y, eps, spec)?;
        let p = airy_scaled(rho / e23);
        let (v, d) = match which {
            Approximant::Psi1 => (p.ai, p.ai_prime),
            Approximant::Psi2 => (p.bi, p.bi_prime),
        };
        sup = sup.max(v.abs().to_f64() + e13 * d.abs().to_f64());
    }
    Ok(Residual { beta: beta.to_f64(), normalizer: sup })
}
