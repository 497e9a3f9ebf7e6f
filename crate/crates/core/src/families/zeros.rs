//! Zero predictions from the Airy zeros and from the saturated-region phase.

use super::{FamilyKind, FamilySpec};
use crate::error::{Error, Result};
use crate::langer::{Edge, ModelCase};
use crate::numerics::airy_zero;
use serde::Serialize;
use std::f64::consts::PI;

/// Which group of zeros a prediction belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroEdge {
    /// `k`-th largest zero, near the upper band edge.
    Upper,
    /// `k`-th smallest zero, near the lower band edge of a band straddling the origin.
    Lower,
    /// `k`-th smallest zero, inside the saturated region.
    Saturated,
}

/// Predicted `k`-th zero of the degree-`N` polynomial, in scaled units.
///
/// At an Airy edge `e = b +- 2a` (model units) the zero is
/// `e + sgn a^{1/3} ai_k |e|^{2/3} / (alpha (N + c))^{2/3}`, which makes
/// `(N + c)^{2/3} rho_hat(y)` hit the Airy zero to leading order. In the
/// saturated region of the Meixner family it is `((2k - 1) pi + beta) / (2 lambda_N)`.
pub fn predict_zero(spec: &FamilySpec, n: usize, k: usize, edge: ZeroEdge) -> Result<f64> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!("zero index {k} outside 1..={n}")));
    }
    let m = &spec.model;
    let nc = spec.n_shifted(n);
    let airy_edge = |e: f64, dir: f64| -> Result<f64> {
        let ai = airy_zero(k)?;
        let ym = dir * (e + m.a.cbrt() * ai * e.powf(2.0 / 3.0) / (m.alpha * nc).powf(2.0 / 3.0));
        Ok(ym / spec.variable_scale)
    };
    match (edge, m.case()) {
        (ZeroEdge::Upper, _) => airy_edge(m.edge_factor(Edge::Plus), 1.0),
        (ZeroEdge::Lower, ModelCase::Case1 | ModelCase::Case1a) => airy_edge(-m.edge_factor(Edge::Minus), -1.0),
        (ZeroEdge::Saturated, ModelCase::Case3) => match spec.kind {
            FamilyKind::Meixner { beta, .. } => Ok(((2 * k - 1) as f64 * PI + beta) / (2.0 * spec.lambda_n(n))),
            _ => Err(Error::Unsupported(format!("no saturated zero formula for {}", spec.name()))),
        },
        (e, c) => Err(Error::Unsupported(format!("no {e:?} zero prediction for {} ({c:?})", spec.name()))),
    }
}
