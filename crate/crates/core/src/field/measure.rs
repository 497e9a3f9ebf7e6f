//! Equilibrium measure, constraint measure and the two-turning-point phase.

use super::{end_kind, FieldContext};
use crate::error::{Error, Result};
use crate::langer::{rho_edge, CoefficientModel, Edge, ModelCase};
use crate::numerics::{integrate, integrate_endpoints, EndpointKind, QuadratureSpec};
use serde::Serialize;
use std::f64::consts::PI;

/// Density value with a flag telling whether `y` lies in the support.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Density {
    pub value: f64,
    pub in_support: bool,
}

/// Both sides of the identity between a Langer variable and the equilibrium measure.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MeasureIdentity {
    /// `(2/3) (-rho)^{3/2}` by quadrature of the phase.
    pub lhs: f64,
    /// `pi t` times the equilibrium mass between `y` and the band edge.
    pub rhs: f64,
}

/// Inner quadrature is kept tighter than the outer one so the density is
/// smooth enough for adaptive integration in `y`.
fn inner_spec(spec: QuadratureSpec) -> QuadratureSpec {
    QuadratureSpec::with_tol(spec.abs_tol.min(1e-13), spec.rel_tol.min(1e-13))
}

/// Range of `w = q_eps(p)`, `p` in `[0, t]`, for which `y` lies inside the band at `p`.
fn w_range(ctx: &FieldContext, y: f64) -> Option<(f64, f64)> {
    let m = &ctx.model;
    let (fp, fm) = (m.edge_factor(Edge::Plus), m.edge_factor(Edge::Minus));
    let lower = if y > 0.0 {
        y / fp
    } else if y < 0.0 {
        if fm < 0.0 {
            y / fm
        } else {
            return None;
        }
    } else {
        0.0
    };
    let mut hi = m.q_eps(ctx.t, ctx.eps);
    if fm > 0.0 && y > 0.0 {
        hi = hi.min(y / fm);
    }
    let lo = lower.max(m.q_eps(0.0, ctx.eps));
    (lo < hi).then_some((lo, hi))
}

/// Density of the equilibrium measure `nu_t` at `y`:
/// `(1 / pi t) int (1 + eps c) alpha w^{alpha-1} dw / sqrt(((b+2a) w - y)(y - (b-2a) w))`
/// over the `w` for which `y` is inside the band.
pub fn equilibrium_density(ctx: &FieldContext, y: f64) -> Result<Density> {
    let m = &ctx.model;
    if y == 0.0 && m.alpha <= 1.0 && ctx.eps == 0.0 {
        return Err(Error::Domain("density is unbounded at y = 0 for alpha <= 1".into()));
    }
    let Some((lo, hi)) = w_range(ctx, y) else {
        return Ok(Density { value: 0.0, in_support: false });
    };
    let (fp, fm) = (m.edge_factor(Edge::Plus), m.edge_factor(Edge::Minus));
    let scale = (1.0 + ctx.eps * m.c()) * m.alpha;
    let alpha = m.alpha;
    let (wp, wm) = (y / fp, if fm != 0.0 { y / fm } else { f64::NAN });
    // Distance `w - root`, exact when the root is an endpoint of the range.
    let off = |w: f64, from_lo: f64, from_hi: f64, root: f64| {
        if root == lo {
            from_lo
        } else if root == hi {
            -from_hi
        } else {
            w - root
        }
    };
    let g = |w: f64, from_lo: f64, from_hi: f64| {
        let f1 = fp * off(w, from_lo, from_hi, wp);
        let f2 = if fm != 0.0 { -fm * off(w, from_lo, from_hi, wm) } else { y };
        let d = f1 * f2;
        if d <= 0.0 {
            0.0
        } else {
            w.powf(alpha - 1.0) / d.sqrt()
        }
    };
    let len = hi - lo;
    let spec = inner_spec(ctx.spec);
    let left = if end_kind(lo) == EndpointKind::Log {
        integrate_endpoints(|w| g(w, w - lo, hi - w), lo, lo + 0.5 * len, EndpointKind::Log, EndpointKind::Regular, spec)?
    } else {
        integrate(|v: f64| 2.0 * v * g(lo + v * v, v * v, len - v * v), 0.0, (0.5 * len).sqrt(), spec)?
    };
    let right = integrate(|v: f64| 2.0 * v * g(hi - v * v, len - v * v, v * v), 0.0, (0.5 * len).sqrt(), spec)?;
    let i = left + right;
    Ok(Density { value: scale * i / (PI * ctx.t), in_support: true })
}

/// Support `[lo, hi]` of `nu_t`.
pub fn density_support(ctx: &FieldContext) -> (f64, f64) {
    let m = &ctx.model;
    let lo = if m.edge_factor(Edge::Minus) < 0.0 {
        m.gamma(Edge::Minus, ctx.t, ctx.eps)
    } else {
        m.gamma(Edge::Minus, 0.0, ctx.eps).max(0.0)
    };
    (lo, m.gamma(Edge::Plus, ctx.t, ctx.eps))
}

/// `int_lo^hi d nu_t`, split where the density has kinks or endpoint singularities.
pub fn integrate_density(ctx: &FieldContext, lo: f64, hi: f64) -> Result<f64> {
    if lo > hi {
        return Err(Error::Domain(format!("bad density interval [{lo}, {hi}]")));
    }
    let m = &ctx.model;
    let mut cuts = vec![lo, hi, 0.0];
    for (edge, t) in [(Edge::Plus, 0.0), (Edge::Minus, 0.0), (Edge::Minus, ctx.t)] {
        cuts.push(m.gamma(edge, t, ctx.eps));
    }
    cuts.retain(|&c| c >= lo && c <= hi);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let spec = ctx.spec;
    let f = |y: f64| equilibrium_density(ctx, y).map(|d| d.value).unwrap_or(f64::NAN);
    let mut total = 0.0;
    for w in cuts.windows(2) {
        total += integrate_endpoints(f, w[0], w[1], end_kind(w[0]), end_kind(w[1]), spec)?;
    }
    Ok(total)
}

/// Total mass of `nu_t`; equals one.
pub fn equilibrium_mass(ctx: &FieldContext) -> Result<f64> {
    let (lo, hi) = density_support(ctx);
    integrate_density(ctx, lo, hi)
}

/// `c_alpha = (alpha / pi) int_{b-2a}^{b+2a} u^{-alpha} du / sqrt(4a^2 - (u-b)^2)`,
/// evaluated as `(alpha / pi) int_0^pi (b + 2a cos th)^{-alpha} d th`.
pub fn c_alpha(model: &CoefficientModel, spec: QuadratureSpec) -> Result<f64> {
    if model.case() != ModelCase::Case3 {
        return Err(Error::Unsupported(format!("c_alpha needs b > 2a, got {:?}", model.case())));
    }
    let (a, b, alpha) = (model.a, model.b, model.alpha);
    let f = |th: f64| (b + 2.0 * a * th.cos()).powf(-alpha);
    Ok(alpha / PI * integrate(f, 0.0, PI, spec)?)
}

/// Density of the constraint measure, `(1 + eps c) c_alpha y^{alpha-1} / t`.
///
/// At `t = 1` the prefactor is `q_hat(N + 1/2)^alpha / N` with `eps = 1/N`.
pub fn constraint_density(ctx: &FieldContext, y: f64) -> Result<f64> {
    let m = &ctx.model;
    let ca = c_alpha(m, ctx.spec)?;
    if !(y > m.gamma(Edge::Plus, 0.0, ctx.eps)) {
        return Err(Error::Domain(format!("constraint density needs y above the initial band, got {y}")));
    }
    Ok((1.0 + ctx.eps * m.c()) * ca * y.powf(m.alpha - 1.0) / ctx.t)
}

/// `(1/eps) Gamma_eps(y) = int_{b-2a}^{b+2a} q_hat^{-1}(q_hat(1/eps + 1/2) y / u) du / sqrt(4a^2 - (u-b)^2)`.
pub fn gamma_phase(ctx: &FieldContext, y: f64) -> Result<f64> {
    let m = &ctx.model;
    if m.case() != ModelCase::Case3 {
        return Err(Error::Unsupported(format!("gamma phase needs b > 2a, got {:?}", m.case())));
    }
    if !(y > 0.0) || !(ctx.eps > 0.0) {
        return Err(Error::Domain(format!("gamma phase needs y > 0 and eps > 0, got y = {y}, eps = {}", ctx.eps)));
    }
    let big = 1.0 / ctx.eps + m.c();
    let (a, b, alpha, s1) = (m.a, m.b, m.alpha, m.s1);
    let f = |th: f64| big * (y / (b + 2.0 * a * th.cos())).powf(alpha) - s1;
    integrate(f, 0.0, PI, ctx.spec)
}

/// Langer variable versus equilibrium mass at a band point `(t, y)`.
///
/// `Edge::Plus`: `(2/3)(-rho_1)^{3/2}` against `pi t nu_t([y, gamma^+])`.
/// `Edge::Minus`: `(2/3)(-rho_2)^{3/2}` against `pi t nu_t([gamma^-, y])`, or
/// against `pi t (sigma - nu_t)([gamma^-, y])` when the band is detached from the origin.
pub fn measure_rho_identity(ctx: &FieldContext, y: f64, edge: Edge) -> Result<MeasureIdentity> {
    let m = &ctx.model;
    let rho = rho_edge(m, edge, ctx.t, y, ctx.eps, ctx.spec)?;
    if rho > 0.0 {
        return Err(Error::Domain(format!("y = {y} is outside the band at t = {}", ctx.t)));
    }
    let lhs = 2.0 / 3.0 * (-rho).powf(1.5);
    let g = m.gamma(edge, ctx.t, ctx.eps);
    let mass = match (edge, m.case()) {
        (Edge::Plus, _) => integrate_density(ctx, y, g)?,
        (Edge::Minus, ModelCase::Case3) => {
            let ca = c_alpha(m, ctx.spec)?;
            let sigma = (1.0 + ctx.eps * m.c()) * ca * (y.powf(m.alpha) - g.powf(m.alpha)) / (m.alpha * ctx.t);
            sigma - integrate_density(ctx, g, y)?
        }
        (Edge::Minus, _) => integrate_density(ctx, g, y)?,
    };
    Ok(MeasureIdentity { lhs, rhs: PI * ctx.t * mass })
}
