//! External field `Q`, its leading constants, and the potential `V^t`.

use super::{end_kind, FieldContext};
use crate::error::{Error, Result};
use crate::langer::{CoefficientModel, Edge, ModelCase};
use crate::numerics::{integrate, integrate_endpoints, EndpointKind, QuadratureSpec};

/// `Q(y, eps) = |y| int_{q_eps(0)}^{y / (b +- 2a)} q_eps^{-1}(w) / w dw / sqrt((y - b w)^2 - 4 a^2 w^2)`.
///
/// The upper edge is used for `y > 0` and the lower edge for `y < 0`
/// (symmetric or straddling band only).
pub fn external_q(ctx: &FieldContext, y: f64) -> Result<f64> {
    let m = &ctx.model;
    let edge = side_of(m, y)?;
    let w_hi = y / m.edge_factor(edge);
    let w_lo = m.q_eps(0.0, ctx.eps);
    if !(w_hi > w_lo) {
        return Err(Error::Domain(format!("y = {y} lies inside the initial band")));
    }
    let eps = ctx.eps;
    let (fe, fo) = (m.edge_factor(edge), m.edge_factor(other(edge)));
    // `from_hi = w_hi - w` keeps the vanishing factor `y - fe w = fe (w_hi - w)` exact.
    let f = |w: f64, from_hi: f64| {
        let d = fe * from_hi * (y - fo * w);
        if d <= 0.0 {
            0.0
        } else {
            m.q_eps_inv(w, eps) / (w * d.sqrt())
        }
    };
    let mid = 0.5 * (w_lo + w_hi);
    let half = QuadratureSpec { abs_tol: 0.5 * ctx.spec.abs_tol, ..ctx.spec };
    let left = integrate_endpoints(|w| f(w, w_hi - w), w_lo, mid, end_kind(w_lo), EndpointKind::Regular, half)?;
    let right = integrate(|v: f64| 2.0 * v * f(w_hi - v * v, v * v), 0.0, (w_hi - mid).sqrt(), half)?;
    Ok(y.abs() * (left + right))
}

fn other(edge: Edge) -> Edge {
    match edge {
        Edge::Plus => Edge::Minus,
        Edge::Minus => Edge::Plus,
    }
}

fn side_of(m: &CoefficientModel, y: f64) -> Result<Edge> {
    if y > 0.0 {
        Ok(Edge::Plus)
    } else if y < 0.0 && matches!(m.case(), ModelCase::Case1 | ModelCase::Case1a) {
        Ok(Edge::Minus)
    } else {
        Err(Error::Domain(format!("external field undefined at y = {y} for {:?}", m.case())))
    }
}

/// Leading constant `A` in `Q(y, 0) = A (|y| / 2a)^alpha`.
///
/// `Edge::Plus` gives the constant for `y > 0` in every case; `Edge::Minus`
/// the one for `y < 0`, which exists only when the band straddles the origin.
pub fn field_constant_a(model: &CoefficientModel, edge: Edge, spec: QuadratureSpec) -> Result<f64> {
    let r = model.b / (2.0 * model.a);
    let (shift, top) = match (edge, model.case()) {
        (Edge::Plus, _) => (-r, 1.0 / (1.0 + r)),
        (Edge::Minus, ModelCase::Case1 | ModelCase::Case1a) => (r, 1.0 / (1.0 - r)),
        (Edge::Minus, c) => return Err(Error::Unsupported(format!("no lower field constant in {c:?}"))),
    };
    let alpha = model.alpha;
    let f = |u: f64| {
        let z = 1.0 / u + shift;
        u.powf(alpha - 1.0) * z.max(1.0).acosh()
    };
    Ok(alpha * integrate_endpoints(f, 0.0, top, EndpointKind::Log, EndpointKind::Sqrt, spec)?)
}

/// `(1/t) int_0^t Re ln(z + sqrt(z^2 - 1)) du + l_t` with `z = y / (2a q_eps(u)) - b / 2a`.
///
/// The real part is `acosh |z|` off the band and zero inside it; the
/// integral is split where `|z| = 1`.
pub fn potential_v(ctx: &FieldContext, y: f64) -> Result<f64> {
    Ok(phase_integral(&ctx.model, y, ctx.eps, ctx.t, ctx.spec)? / ctx.t + ctx.l_t())
}

/// `int_0^t acosh |z(u)| du` over the part of `[0, t]` where `|z| > 1`.
pub(crate) fn phase_integral(model: &CoefficientModel, y: f64, eps: f64, t: f64, spec: QuadratureSpec) -> Result<f64> {
    let mut cuts = vec![0.0, t];
    for edge in [Edge::Plus, Edge::Minus] {
        if let Some(tp) = model.turning_point(edge, y, eps) {
            if tp > 0.0 && tp < t {
                cuts.push(tp);
            }
        }
    }
    cuts.sort_by(f64::total_cmp);
    let f = |u: f64| {
        let z = model.z(u, y, eps).abs();
        if z > 1.0 {
            z.acosh()
        } else {
            0.0
        }
    };
    let mut total = 0.0;
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if hi <= lo || model.z(0.5 * (lo + hi), y, eps).abs() <= 1.0 {
            continue;
        }
        total += integrate_endpoints(f, lo, hi, end_kind(lo), EndpointKind::Sqrt, spec)?;
    }
    Ok(total)
}
