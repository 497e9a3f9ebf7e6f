//! Outer, Airy and two-turning-point asymptotics of the family polynomials.
//!
//! All values approximate `normalization * p_N(lambda_N y)` and carry their
//! exponent, so `N` in the thousands is fine.

use super::FamilySpec;
use crate::error::{Error, Result};
use crate::field::{gamma_phase, phase_integral, FieldContext};
use crate::langer::{amplitude_g_edge, rho_edge, Edge, ModelCase};
use crate::numerics::{airy_scaled, ScaledReal};
use serde::Serialize;
use std::f64::consts::{PI, SQRT_2};

/// Half-width, in scaled units, of the neighborhood where the one-edge Airy
/// form is offered.
const AIRY_WINDOW: f64 = 0.2;

/// Closed forms lose digits to cancellation this close to an edge.
const CLOSED_FORM_GAP: f64 = 1e-3;

/// `(-1)^n`.
fn parity(n: usize) -> i8 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Log of the normalization shared by every region:
/// `kappa_tilde kappa_1 normalization |X|^{-s1}` with
/// `kappa_tilde = Gamma(s1+1)^{1/alpha} a^{s1+1/2} / ((2 pi)^{1/2alpha} (N+c)^{1/2alpha})`.
fn ln_common(spec: &FamilySpec, n: usize, y: f64) -> f64 {
    let m = &spec.model;
    let (c, al) = (m.c(), m.alpha);
    let nc = spec.n_shifted(n);
    let ln_kappa_tilde = spec.kappa.ln() - c / al * (1.0 - c.ln()) + c * m.a.ln() - nc.ln() / (2.0 * al);
    let x = spec.lambda_n(n) * y.abs();
    ln_kappa_tilde + spec.kappa1.ln() + spec.normalization.ln() - m.s1 * x.ln()
}

/// Langer variable in the family's scaling, `rho_tilde`, at scaled `y`.
///
/// `Edge::Plus` is the upper-edge variable, `Edge::Minus` the lower-edge one.
/// Positive values lie on the growth side. The Airy argument is
/// `lambda_N^p rho_tilde` with `p` from [`FamilySpec::airy_exponent`].
pub fn rho_hat(spec: &FamilySpec, y: f64, edge: Edge) -> Result<f64> {
    use super::FamilyKind::*;
    let gap = (y - spec.edge(edge)).abs();
    if gap > CLOSED_FORM_GAP {
        match (spec.kind, edge) {
            (Hermite, Edge::Plus) if y > 0.0 => return Ok(hermite_rho(y)),
            (Hermite, Edge::Minus) if y < 0.0 => return Ok(hermite_rho(-y)),
            (Laguerre { .. }, Edge::Plus) if y > 0.0 => return Ok(laguerre_rho(y)),
            _ => {}
        }
    }
    let rho = rho_edge(&spec.model, edge, 1.0, spec.variable_scale * y, 0.0, spec.quad)?;
    Ok(rho * spec.rho_scale())
}

fn hermite_rho(y: f64) -> f64 {
    if y > 1.0 {
        (0.75 * (y * (y * y - 1.0).sqrt() - y.acosh())).powf(2.0 / 3.0)
    } else {
        -(0.75 * (y.acos() - y * (1.0 - y * y).sqrt())).powf(2.0 / 3.0)
    }
}

fn laguerre_rho(y: f64) -> f64 {
    if y > 1.0 {
        (0.75 * ((y * y - y).sqrt() - 0.5 * (2.0 * y - 1.0).acosh())).powf(2.0 / 3.0)
    } else {
        -(0.75 * (0.5 * (2.0 * y - 1.0).acos() - (y - y * y).sqrt())).powf(2.0 / 3.0)
    }
}

/// Outer asymptotic, valid off the band hull:
/// `kappa_tilde kappa_1 D^{-1/4} e^{(N+c) E(y)} / X^{s1}` with
/// `D = (y - b)^2 - 4a^2` and `E(y) = int_0^1 acosh |z(u)| du` in model units.
///
/// Below the hull the value carries the sign `(-1)^N`.
pub fn asym_outer(spec: &FamilySpec, n: usize, y: f64) -> Result<ScaledReal> {
    let (lo, hi) = spec.band_hull();
    if !(y > hi || y < lo) {
        return Err(Error::Domain(format!("y = {y} lies in the band hull [{lo}, {hi}] of {}", spec.name())));
    }
    let m = &spec.model;
    let ym = spec.variable_scale * y;
    let e = phase_integral(m, ym, 0.0, 1.0, spec.quad)?;
    let d = (ym - m.b).powi(2) - 4.0 * m.a * m.a;
    let ln = ln_common(spec, n, y) - 0.25 * d.ln() + spec.n_shifted(n) * e;
    let sign = if y < 0.0 { parity(n) } else { 1 };
    Ok(ScaledReal::exp(ln) * f64::from(sign))
}

/// Airy form near one edge: the value is `prefactor * Ai(arg)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct AiryParts {
    pub prefactor: ScaledReal,
    /// `lambda_N^p rho_tilde(y)`.
    pub arg: f64,
}

impl AiryParts {
    pub fn value(&self) -> ScaledReal {
        self.prefactor * airy_scaled(self.arg).ai
    }
}

/// Prefactor and argument of the one-edge Airy form
/// `2 sqrt(pi) kappa_tilde kappa_1 (N+c)^{1/6} (rho_hat / D)^{1/4} e^{(N+c) A (|y|/2a)^alpha} / X^{s1} Ai(arg)`.
///
/// The lower edge is available when the band straddles the origin; there the
/// value carries the sign `(-1)^N`.
pub fn airy_parts(spec: &FamilySpec, n: usize, y: f64, edge: Edge) -> Result<AiryParts> {
    let m = &spec.model;
    let field_a = match (edge, m.case()) {
        (Edge::Plus, _) => spec.field_constant,
        (Edge::Minus, ModelCase::Case1 | ModelCase::Case1a) => spec.field_constant_lower.unwrap_or(spec.field_constant),
        (Edge::Minus, c) => {
            return Err(Error::Unsupported(format!("no single-edge Airy form at the lower edge in {c:?}")));
        }
    };
    let e0 = spec.edge(edge);
    if (y - e0).abs() > AIRY_WINDOW || y == 0.0 {
        return Err(Error::Domain(format!("y = {y} is outside the Airy window {e0} +- {AIRY_WINDOW}")));
    }
    let ym = spec.variable_scale * y;
    let rho_t = rho_hat(spec, y, edge)?;
    let rho = rho_t / spec.rho_scale();
    let amp = amplitude_g_edge(m, edge, 1.0, ym, 0.0, rho)? / SQRT_2;
    let nc = spec.n_shifted(n);
    let arg = spec.lambda_n(n).powf(spec.airy_exponent()) * rho_t;
    let growth = nc * field_a * (ym.abs() / (2.0 * m.a)).powf(m.alpha);
    let ln = ln_common(spec, n, y) + (2.0 * PI.sqrt()).ln() + nc.ln() / 6.0 + amp.ln() + growth;
    let sign = if edge == Edge::Minus { parity(n) } else { 1 };
    Ok(AiryParts { prefactor: ScaledReal::exp(ln) * f64::from(sign), arg })
}

/// One-edge Airy main term at scaled `y` near the given edge.
///
/// For a band detached from the origin the lower edge is served by
/// [`asym_oscillatory_band`], which is uniform there.
pub fn asym_airy(spec: &FamilySpec, n: usize, y: f64, edge: Edge) -> Result<ScaledReal> {
    if edge == Edge::Minus && spec.model.case() == ModelCase::Case3 {
        let e0 = spec.edge(edge);
        if (y - e0).abs() > AIRY_WINDOW {
            return Err(Error::Domain(format!("y = {y} is outside the Airy window {e0} +- {AIRY_WINDOW}")));
        }
        return asym_oscillatory_band(spec, n, y);
    }
    Ok(airy_parts(spec, n, y, edge)?.value())
}

/// Two-turning-point phase `(1/eps) Gamma_eps(y)` at `eps = 1/N`, `t = 1`.
pub fn band_phase(spec: &FamilySpec, n: usize, y: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("the band phase needs N >= 1".into()));
    }
    let ctx = FieldContext::new(spec.model, 1.0 / n as f64, 1.0)?;
    gamma_phase(&ctx, spec.variable_scale * y)
}

/// Two-turning-point form: the value is
/// `prefactor [sin(phase) Ai(arg) + cos(phase) Bi(arg)]`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BandParts {
    pub prefactor: ScaledReal,
    /// `lambda_N^p rho_tilde_2(y)`.
    pub arg: f64,
    pub phase: f64,
}

impl BandParts {
    pub fn value(&self) -> ScaledReal {
        let p = airy_scaled(self.arg);
        self.prefactor * (p.ai * self.phase.sin() + p.bi * self.phase.cos())
    }

    /// `|prefactor| sqrt(Ai^2 + Bi^2)`, the size of the oscillation.
    pub fn envelope(&self) -> ScaledReal {
        let p = airy_scaled(self.arg);
        self.prefactor.abs() * (p.ai * p.ai + p.bi * p.bi).sqrt()
    }
}

/// Prefactor, argument and phase of the band and saturated-region form for a
/// band detached from the origin:
/// `(-1)^N 2 sqrt(pi) kappa_tilde kappa_1 (N+c)^{1/6} |rho_2 / D|^{1/4} e^{(N+c) A (y/2a)^alpha} / X^{s1}`,
/// `arg = lambda_N^p rho_tilde_2(y)` and `phase = (1/eps) Gamma_eps(y)`.
pub fn band_parts(spec: &FamilySpec, n: usize, y: f64) -> Result<BandParts> {
    let m = &spec.model;
    if m.case() != ModelCase::Case3 {
        return Err(Error::Unsupported(format!("{} has no saturated region", spec.name())));
    }
    let top = spec.edge(Edge::Plus);
    if !(y > 0.0 && y < top) {
        return Err(Error::Domain(format!("y = {y} is outside (0, {top})")));
    }
    let ym = spec.variable_scale * y;
    let rho_t = rho_hat(spec, y, Edge::Minus)?;
    let rho = rho_t / spec.rho_scale();
    let amp = amplitude_g_edge(m, Edge::Minus, 1.0, ym, 0.0, rho)? / SQRT_2;
    let nc = spec.n_shifted(n);
    let arg = spec.lambda_n(n).powf(spec.airy_exponent()) * rho_t;
    let phase = band_phase(spec, n, y)?;
    let growth = nc * spec.field_constant * (ym / (2.0 * m.a)).powf(m.alpha);
    let ln = ln_common(spec, n, y) + (2.0 * PI.sqrt()).ln() + nc.ln() / 6.0 + amp.ln() + growth;
    Ok(BandParts { prefactor: ScaledReal::exp(ln) * f64::from(parity(n)), arg, phase })
}

/// Band and saturated-region asymptotic, see [`band_parts`].
pub fn asym_oscillatory_band(spec: &FamilySpec, n: usize, y: f64) -> Result<ScaledReal> {
    Ok(band_parts(spec, n, y)?.value())
}
