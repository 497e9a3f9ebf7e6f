//! Phase `k^2` and the Langer variables attached to each turning point.

use super::model::{CoefficientModel, Edge, ModelCase};
use crate::error::{Error, Result};
use crate::numerics::{integrate, EndpointSingularity, QuadratureSpec};

/// Below this relative distance to the turning point the Langer variable
/// comes from its local expansion instead of quadrature.
pub(crate) const SERIES_ZONE: f64 = 1e-5;

/// `acosh(z)^2` for `z >= 1` and `-acos(z)^2` for `|z| < 1`.
pub fn k_squared_of_z(z: f64) -> Result<f64> {
    if z >= 1.0 {
        Ok(z.acosh().powi(2))
    } else if z > -1.0 {
        Ok(-z.acos().powi(2))
    } else {
        Err(Error::Domain(format!("z = {z} lies beyond the opposite band edge")))
    }
}

/// `k^2(t, y, eps)` for the upper turning point: positive where the solution
/// grows, negative inside the band.
pub fn k_squared(model: &CoefficientModel, t: f64, y: f64, eps: f64) -> Result<f64> {
    k_squared_of_z(model.z(t, y, eps))
}

/// Local data at a turning point: slope `A = |z'(t_p)|`, half curvature
/// `B = z''(t_p) / 2` and the growth direction.
#[derive(Clone, Copy, Debug)]
pub(crate) struct TurningPoint {
    pub tp: f64,
    pub slope: f64,
    pub half_curv: f64,
    /// `+1` when `z > 1` for `t > t_p`, `-1` when `z > 1` for `t < t_p`.
    pub dir: f64,
}

impl TurningPoint {
    pub fn locate(model: &CoefficientModel, edge: Edge, y: f64, eps: f64) -> Result<Self> {
        let tp = model.turning_point(edge, y, eps).ok_or_else(|| {
            Error::Domain(format!("no {edge:?} turning point for y = {y} in a {:?} model", model.case()))
        })?;
        let (d1, d2) = model.z_edge_derivs(edge, tp, y, eps);
        Ok(TurningPoint { tp, slope: d1.abs(), half_curv: 0.5 * d2, dir: d1.signum() })
    }

    /// Signed distance into the growth side.
    pub fn s(&self, t: f64) -> f64 {
        self.dir * (t - self.tp)
    }

    pub fn near(&self, t: f64) -> bool {
        (t - self.tp).abs() <= SERIES_ZONE * self.tp.max(f64::MIN_POSITIVE)
    }

    fn curvature_term(&self) -> f64 {
        self.half_curv / (2.0 * self.slope) - self.slope / 12.0
    }

    /// Langer variable from its expansion `(2A)^{1/3} S (1 + (2/5) C S)`.
    pub fn rho_series(&self, t: f64) -> f64 {
        let s = self.s(t);
        (2.0 * self.slope).cbrt() * s * (1.0 + 0.4 * self.curvature_term() * s)
    }

    /// `rho / (z^2 - 1)` from the expansions of both, finite at `t_p`.
    pub fn ratio_series(&self, t: f64) -> f64 {
        let s = self.s(t);
        let w = self.slope * s + self.half_curv * s * s;
        let rho_over_s = (2.0 * self.slope).cbrt() * (1.0 + 0.4 * self.curvature_term() * s);
        let w_over_s = self.slope + self.half_curv * s;
        rho_over_s / (w_over_s * (2.0 + w))
    }
}

/// Langer variable for either edge.
///
/// `(2/3) rho^{3/2}` is the integral of `acosh z` from `t` to the turning
/// point on the growth side, and `(2/3) (-rho)^{3/2}` is the integral of
/// `acos z` on the oscillating side. The sign of `rho` is positive on the
/// growth side.
pub fn rho_edge(model: &CoefficientModel, edge: Edge, t: f64, y: f64, eps: f64, spec: QuadratureSpec) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("rho needs t > 0, got {t}")));
    }
    let tpd = TurningPoint::locate(model, edge, y, eps)?;
    if tpd.near(t) {
        return Ok(tpd.rho_series(t));
    }
    let tp = tpd.tp;
    let growth = tpd.s(t) > 0.0;
    let z_end = model.z_edge(edge, t, y, eps);
    if !growth && z_end <= -1.0 {
        return Err(Error::Domain(format!(
            "t = {t} lies past the opposite band edge for y = {y} ({edge:?} phase)"
        )));
    }
    let f = |u: f64| {
        let z = model.z_edge(edge, u, y, eps);
        if growth {
            z.max(1.0).acosh()
        } else {
            z.clamp(-1.0, 1.0).acos()
        }
    };
    let (lo, hi, sing) = if t < tp {
        (t, tp, EndpointSingularity::SqrtRight)
    } else {
        (tp, t, EndpointSingularity::SqrtLeft)
    };
    let i = integrate(f, lo, hi, spec.singularity(sing))?;
    let mag = (1.5 * i).powf(2.0 / 3.0);
    Ok(if growth { mag } else { -mag })
}

/// Langer variable of the upper turning point.
pub fn rho1(model: &CoefficientModel, t: f64, y: f64, eps: f64, spec: QuadratureSpec) -> Result<f64> {
    rho_edge(model, Edge::Plus, t, y, eps, spec)
}

/// Langer variable of the lower turning point (`y < 0` with `b < 2a`, or `y > 0` with `b > 2a`).
pub fn rho2(model: &CoefficientModel, t: f64, y: f64, eps: f64, spec: QuadratureSpec) -> Result<f64> {
    match model.case() {
        ModelCase::Case1a | ModelCase::Case1 if y < 0.0 => {}
        ModelCase::Case3 if y > 0.0 => {}
        c => {
            return Err(Error::Unsupported(format!("no lower turning point for y = {y} in {c:?}")));
        }
    }
    rho_edge(model, Edge::Minus, t, y, eps, spec)
}
