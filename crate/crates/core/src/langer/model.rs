//! Model coefficients built from `q(t) = (t + s1)^{1/alpha}`.

use crate::error::{Error, Result};
use serde::Serialize;

/// Sign pattern of the band edges `b - 2a` and `b + 2a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModelCase {
    /// `b = 0`: symmetric band.
    Case1a,
    /// `0 < b < 2a`: band straddles the origin.
    Case1,
    /// `b = 2a`: band edge pinned at the origin.
    Case2,
    /// `b > 2a`: band detached from the origin, with a saturated region below it.
    Case3,
}

/// Which band edge a turning point belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Edge {
    /// Upper edge `(b + 2a) q`.
    Plus,
    /// Lower edge `(b - 2a) q`.
    Minus,
}

/// Recurrence model `a(n) = a q(n)`, `b(n) = b q(n + 1/2)` with `q(t) = (t + s1)^{1/alpha}`.
///
/// The `eps` forms rescale time so that `t = 1` corresponds to `n = 1/eps`:
/// `q_eps(t) = ((t + eps c) / (1 + eps c))^{1/alpha}` with `c = s1 + 1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CoefficientModel {
    pub a: f64,
    pub b: f64,
    pub alpha: f64,
    pub s1: f64,
}

impl CoefficientModel {
    /// Validates `a > 0`, `b >= 0`, `alpha > 0` and `s1 > -1/2`.
    pub fn new(a: f64, b: f64, alpha: f64, s1: f64) -> Result<Self> {
        let ok = a > 0.0 && b >= 0.0 && alpha > 0.0 && s1 > -0.5 && [a, b, alpha, s1].iter().all(|v| v.is_finite());
        if !ok {
            return Err(Error::Domain(format!("invalid model a={a} b={b} alpha={alpha} s1={s1}")));
        }
        Ok(CoefficientModel { a, b, alpha, s1 })
    }

    /// `s1 + 1/2`.
    pub fn c(&self) -> f64 {
        self.s1 + 0.5
    }

    pub fn case(&self) -> ModelCase {
        let tol = 1e-13 * self.a;
        if self.b <= tol {
            ModelCase::Case1a
        } else if (self.b - 2.0 * self.a).abs() <= tol {
            ModelCase::Case2
        } else if self.b < 2.0 * self.a {
            ModelCase::Case1
        } else {
            ModelCase::Case3
        }
    }

    /// `(t + s1)^{1/alpha}`.
    pub fn q_hat(&self, t: f64) -> f64 {
        (t + self.s1).powf(1.0 / self.alpha)
    }

    /// `q_hat(t / eps) / q_hat(1/eps + 1/2)`; reduces to `t^{1/alpha}` at `eps = 0`.
    pub fn q_hat_eps(&self, t: f64, eps: f64) -> f64 {
        ((t + eps * self.s1) / (1.0 + eps * self.c())).powf(1.0 / self.alpha)
    }

    /// `q_hat_eps(t + eps/2)`.
    pub fn q_eps(&self, t: f64, eps: f64) -> f64 {
        let ec = eps * self.c();
        ((t + ec) / (1.0 + ec)).powf(1.0 / self.alpha)
    }

    /// Inverse of [`q_eps`](Self::q_eps) in `t`.
    pub fn q_eps_inv(&self, w: f64, eps: f64) -> f64 {
        let ec = eps * self.c();
        (1.0 + ec) * w.powf(self.alpha) - ec
    }

    /// `a(t, eps) = a q_hat_eps(t)`.
    pub fn a_t(&self, t: f64, eps: f64) -> f64 {
        self.a * self.q_hat_eps(t, eps)
    }

    /// `b(t, eps) = b q_eps(t)`.
    pub fn b_t(&self, t: f64, eps: f64) -> f64 {
        self.b * self.q_eps(t, eps)
    }

    /// Band edge `gamma^{+-}(t, eps) = (b +- 2a) q_eps(t)`.
    pub fn gamma(&self, edge: Edge, t: f64, eps: f64) -> f64 {
        self.edge_factor(edge) * self.q_eps(t, eps)
    }

    /// `b + 2a` or `b - 2a`.
    pub fn edge_factor(&self, edge: Edge) -> f64 {
        match edge {
            Edge::Plus => self.b + 2.0 * self.a,
            Edge::Minus => self.b - 2.0 * self.a,
        }
    }

    /// `z = (y - b(t)) / (2 a(t + eps/2))`, so that `cosh k = z`.
    pub fn z(&self, t: f64, y: f64, eps: f64) -> f64 {
        y / (2.0 * self.a * self.q_eps(t, eps)) - self.b / (2.0 * self.a)
    }

    /// Phase variable for an edge: `z` for the upper edge, `-z` for the lower.
    pub fn z_edge(&self, edge: Edge, t: f64, y: f64, eps: f64) -> f64 {
        match edge {
            Edge::Plus => self.z(t, y, eps),
            Edge::Minus => -self.z(t, y, eps),
        }
    }

    /// First and second `t`-derivatives of [`z_edge`](Self::z_edge).
    pub fn z_edge_derivs(&self, edge: Edge, t: f64, y: f64, eps: f64) -> (f64, f64) {
        let r = t + eps * self.c();
        let zz = y / (2.0 * self.a * self.q_eps(t, eps));
        let ia = 1.0 / self.alpha;
        let d1 = -zz * ia / r;
        let d2 = zz * ia * (ia + 1.0) / (r * r);
        match edge {
            Edge::Plus => (d1, d2),
            Edge::Minus => (-d1, -d2),
        }
    }

    /// Turning point `t_p` where `z_edge = 1`, if `y` lies on the right side of the origin for that edge.
    pub fn turning_point(&self, edge: Edge, y: f64, eps: f64) -> Option<f64> {
        let f = self.edge_factor(edge);
        if f == 0.0 {
            return None;
        }
        let w = y / f;
        if !(w > 0.0) {
            return None;
        }
        let tp = self.q_eps_inv(w, eps);
        (tp > 0.0).then_some(tp)
    }
}

/// Where `y` sits relative to the band at time `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Region {
    OuterGrowth,
    AiryBandPlus,
    Oscillatory,
    AiryBandMinus,
    Saturated,
}

/// Turning points and region of `y` for one `(y, eps)` pair.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LangerData {
    pub y: f64,
    pub eps: f64,
    pub tp_plus: Option<f64>,
    pub tp_minus: Option<f64>,
    pub region: Region,
}

impl LangerData {
    /// Classifies `y` at time `t`; the Airy bands are the `edge_width`-relative
    /// neighborhoods of each band edge.
    pub fn new(model: &CoefficientModel, t: f64, y: f64, eps: f64, edge_width: f64) -> Self {
        let tp_plus = model.turning_point(Edge::Plus, y, eps);
        let has_minus = match model.case() {
            ModelCase::Case3 => y > 0.0,
            ModelCase::Case1 | ModelCase::Case1a => y < 0.0,
            ModelCase::Case2 => false,
        };
        let tp_minus = if has_minus { model.turning_point(Edge::Minus, y, eps) } else { None };
        let gp = model.gamma(Edge::Plus, t, eps);
        let gm = model.gamma(Edge::Minus, t, eps);
        let w = edge_width * (gp - gm).abs();
        let region = if (y - gp).abs() < w {
            Region::AiryBandPlus
        } else if (y - gm).abs() < w {
            Region::AiryBandMinus
        } else if y > gp {
            Region::OuterGrowth
        } else if y < gm && model.case() == ModelCase::Case3 {
            Region::Saturated
        } else if y < gm {
            Region::OuterGrowth
        } else {
            Region::Oscillatory
        };
        LangerData { y, eps, tp_plus, tp_minus, region }
    }
}
