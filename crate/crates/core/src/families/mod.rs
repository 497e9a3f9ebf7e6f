//! Six classical orthogonal polynomial families cast in the coefficient
//! model, with asymptotic evaluators for every region and zero predictors.
//!
//! Evaluators take `y` in each family's scaled units: the polynomial is
//! evaluated at `x = lambda_N y`, which places the band edges at `O(1)`
//! positions (`[-1, 1]` for Hermite, `[0, 1]` for Laguerre, dual Hahn and
//! Wilson, `[0, b + 2a]` for Meixner).

mod asym;
mod table;
mod zeros;

pub use asym::{
    airy_parts, asym_airy, asym_oscillatory_band, asym_outer, band_parts, band_phase, rho_hat, AiryParts, BandParts,
};
pub use table::{build_error_table, exact_value, fit_slope, local_scale, region_value, ErrorRow, ErrorTable, Region};
pub use zeros::{predict_zero, ZeroEdge};


use crate::error::{Error, Result};
use crate::field::{field_constant_a, kappa_constants, kappa_limit};
use crate::langer::{CoefficientModel, Edge, ModelCase};
use crate::numerics::{gamma, log_gamma, QuadratureSpec};
use crate::recurrence::RecurrenceCoefficients;
use serde::Serialize;

/// Family selector with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyKind {
    Hermite,
    /// Meixner-Pollaczek, `delta >= 0`, `eta > 0`.
    MeixnerPollaczek { delta: f64, eta: f64 },
    /// Laguerre, `alpha > -1`.
    Laguerre { alpha: f64 },
    /// Meixner, `0 < c < 1`, `beta > 0`.
    Meixner { c: f64, beta: f64 },
    /// Continuous dual Hahn, positive parameters with `a + b + c > 3/2`.
    ContDualHahn { a: f64, b: f64, c: f64 },
    /// Wilson, positive real parameters with `a + b + c + d > 1`.
    Wilson { a: f64, b: f64, c: f64, d: f64 },
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Hermite => "hermite",
            FamilyKind::MeixnerPollaczek { .. } => "meixner_pollaczek",
            FamilyKind::Laguerre { .. } => "laguerre",
            FamilyKind::Meixner { .. } => "meixner",
            FamilyKind::ContDualHahn { .. } => "cont_dual_hahn",
            FamilyKind::Wilson { .. } => "wilson",
        }
    }

    /// The parameter sets used throughout the tests and the verification suite.
    pub fn defaults() -> [FamilyKind; 6] {
        [
            FamilyKind::Hermite,
            FamilyKind::MeixnerPollaczek { delta: 1.0, eta: 2.0 },
            FamilyKind::Laguerre { alpha: 0.5 },
            FamilyKind::Meixner { c: 0.25, beta: 1.0 },
            FamilyKind::ContDualHahn { a: 1.0, b: 1.0, c: 1.0 },
            FamilyKind::Wilson { a: 0.5, b: 0.5, c: 0.5, d: 0.5 },
        ]
    }

    fn validate(&self) -> Result<()> {
        let pos = |v: f64| v > 0.0 && v.is_finite();
        let ok = match *self {
            FamilyKind::Hermite => true,
            FamilyKind::MeixnerPollaczek { delta, eta } => delta >= 0.0 && delta.is_finite() && pos(eta),
            FamilyKind::Laguerre { alpha } => alpha > -1.0 && alpha.is_finite(),
            FamilyKind::Meixner { c, beta } => c > 0.0 && c < 1.0 && pos(beta),
            FamilyKind::ContDualHahn { a, b, c } => pos(a) && pos(b) && pos(c) && a + b + c > 1.5,
            FamilyKind::Wilson { a, b, c, d } => pos(a) && pos(b) && pos(c) && pos(d) && a + b + c + d > 1.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("parameters outside the family domain: {self:?}")))
        }
    }
}

/// A family with its coefficient model and the constants of its asymptotics.
#[derive(Clone, Debug, Serialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub model: CoefficientModel,
    /// `s1` of the model.
    pub s1: f64,
    /// `alpha` of the model.
    pub alpha_model: f64,
    /// Leading field constant `A` for `y > 0`.
    pub field_constant: f64,
    /// Field constant for `y < 0`, present when the band straddles the origin.
    pub field_constant_lower: Option<f64>,
    /// Limit of the direct-product normalization `kappa(n)`.
    pub kappa: f64,
    /// Limit of `prod a q_hat(i) / a1(i)` against the exact coefficients.
    pub kappa1: f64,
    /// Factor taking the recurrence polynomial `p_n` (with `p_0 = 1`) to the
    /// orthonormal polynomial of the weight.
    pub normalization: f64,
    /// The recurrence runs in `x + shift`, `x` the family's own variable.
    pub shift: f64,
    /// Model units per scaled unit: `y_model = variable_scale * y`.
    pub variable_scale: f64,
    /// Tolerances for the Langer-variable and phase quadratures.
    #[serde(skip)]
    pub quad: QuadratureSpec,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind) -> Result<Self> {
        kind.validate()?;
        let model = family_model(&kind)?;
        let spec = QuadratureSpec::with_tol(1e-13, 1e-13);
        let field_constant = field_constant_a(&model, Edge::Plus, spec)?;
        let field_constant_lower = match model.case() {
            ModelCase::Case1 | ModelCase::Case1a => Some(field_constant_a(&model, Edge::Minus, spec)?),
            _ => None,
        };
        let kappa = kappa_limit(&model)?;
        let kappa1 = match kappa1_closed_form(&kind)? {
            Some(k) => k,
            None => kappa_constants(&model, Some(&coefficients_of(&kind)))?.kappa1,
        };
        let (normalization, shift, variable_scale) = match kind {
            FamilyKind::Hermite => (std::f64::consts::PI.powf(-0.25), 0.0, 2f64.sqrt()),
            FamilyKind::MeixnerPollaczek { .. } => (1.0, 0.0, 2.0),
            FamilyKind::Laguerre { alpha } => ((-0.5 * log_gamma(alpha + 1.0)?).exp(), 0.0, 4.0),
            FamilyKind::Meixner { c, beta } => ((1.0 - c).powf(0.5 * beta), 0.5 * beta, 1.0),
            FamilyKind::ContDualHahn { .. } => (1.0, 0.0, 4.0),
            FamilyKind::Wilson { .. } => (1.0, 0.0, 1.0),
        };
        Ok(FamilySpec {
            kind,
            model,
            s1: model.s1,
            alpha_model: model.alpha,
            field_constant,
            field_constant_lower,
            kappa,
            kappa1,
            normalization,
            shift,
            variable_scale,
            quad: QuadratureSpec::with_tol(1e-12, 1e-12),
        })
    }

    /// Replaces the evaluator quadrature tolerance (absolute and relative).
    pub fn with_tolerance(mut self, tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Error::Domain(format!("tolerance must lie in (0, 1), got {tol}")));
        }
        self.quad = QuadratureSpec::with_tol(tol, tol);
        Ok(self)
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    /// `N + s1 + 1/2`.
    pub fn n_shifted(&self, n: usize) -> f64 {
        n as f64 + self.model.c()
    }

    /// Argument scaling `lambda_N`: `x = lambda_N y`.
    pub fn lambda_n(&self, n: usize) -> f64 {
        self.n_shifted(n).powf(1.0 / self.model.alpha) * self.variable_scale
    }

    /// Exponent `p` with the Airy argument written `lambda_N^p rho_tilde`.
    pub fn airy_exponent(&self) -> f64 {
        match self.kind {
            FamilyKind::Hermite => 4.0 / 3.0,
            FamilyKind::ContDualHahn { .. } | FamilyKind::Wilson { .. } => 1.0 / 3.0,
            _ => 2.0 / 3.0,
        }
    }

    /// `rho_tilde / rho_hat`, independent of `N`.
    pub fn rho_scale(&self) -> f64 {
        let n = self.n_shifted(0);
        n.powf(2.0 / 3.0) / self.lambda_n(0).powf(self.airy_exponent())
    }

    /// Band edge in scaled units.
    pub fn edge(&self, edge: Edge) -> f64 {
        self.model.edge_factor(edge) / self.variable_scale
    }

    /// Smallest interval in scaled units containing every zero for every `N`.
    pub fn band_hull(&self) -> (f64, f64) {
        (self.edge(Edge::Minus).min(0.0), self.edge(Edge::Plus))
    }

    /// Exact recurrence coefficients in the family variable (plus `shift`).
    pub fn coefficients(&self) -> RecurrenceCoefficients {
        coefficients_of(&self.kind)
    }

    /// Largest scaled gaps `|a1^2 - a^2|` and `|b1 - b|` over `n <= N`, with
    /// both coefficient sets divided by `q_hat(N + 1/2)`.
    pub fn coefficient_gap(&self, n: usize) -> (f64, f64) {
        let exact = self.coefficients();
        let m = &self.model;
        let lam = self.n_shifted(n).powf(1.0 / m.alpha);
        let mut ga: f64 = 0.0;
        let mut gb: f64 = (exact.b1(0) - m.b * m.q_hat(0.5)).abs();
        for i in 1..=n {
            let a_model = m.a * m.q_hat(i as f64);
            ga = ga.max((exact.a1(i).powi(2) - a_model * a_model).abs());
            gb = gb.max((exact.b1(i) - m.b * m.q_hat(i as f64 + 0.5)).abs());
        }
        (ga / (lam * lam), gb / lam)
    }
}

/// Exact coefficients `a1(n)`, `b1(n)` of the family.
pub fn family_coefficients(spec: &FamilySpec) -> RecurrenceCoefficients {
    spec.coefficients()
}

fn family_model(kind: &FamilyKind) -> Result<CoefficientModel> {
    match *kind {
        FamilyKind::Hermite => CoefficientModel::new(0.5f64.sqrt(), 0.0, 2.0, 0.0),
        FamilyKind::MeixnerPollaczek { delta, eta } => {
            CoefficientModel::new((delta * delta + 1.0).sqrt(), 2.0 * delta, 1.0, 0.5 * (eta - 1.0))
        }
        FamilyKind::Laguerre { alpha } => CoefficientModel::new(1.0, 2.0, 1.0, 0.5 * alpha),
        FamilyKind::Meixner { c, beta } => CoefficientModel::new(c.sqrt() / (1.0 - c), (1.0 + c) / (1.0 - c), 1.0, 0.5 * (beta - 1.0)),
        FamilyKind::ContDualHahn { a, b, c } => CoefficientModel::new(1.0, 2.0, 0.5, 0.25 * (2.0 * (a + b + c) - 3.0)),
        FamilyKind::Wilson { a, b, c, d } => CoefficientModel::new(0.25, 0.5, 0.5, 0.5 * (a + b + c + d - 2.0)),
    }
}

fn coefficients_of(kind: &FamilyKind) -> RecurrenceCoefficients {
    let name = kind.name();
    match *kind {
        FamilyKind::Hermite => RecurrenceCoefficients::new(|n| (0.5 * n as f64).sqrt(), |_| 0.0, name),
        FamilyKind::MeixnerPollaczek { delta, eta } => {
            let s = (delta * delta + 1.0).sqrt();
            RecurrenceCoefficients::new(
                move |n| {
                    let n = n as f64;
                    s * (n * (n + eta - 1.0)).sqrt()
                },
                move |n| 2.0 * delta * (n as f64 + 0.5 * eta),
                name,
            )
        }
        FamilyKind::Laguerre { alpha } => RecurrenceCoefficients::new(
            move |n| {
                let n = n as f64;
                (n * (n + alpha)).sqrt()
            },
            move |n| 2.0 * n as f64 + alpha + 1.0,
            name,
        ),
        FamilyKind::Meixner { c, beta } => {
            let (sa, sb) = (c.sqrt() / (1.0 - c), (1.0 + c) / (1.0 - c));
            RecurrenceCoefficients::new(
                move |n| {
                    let n = n as f64;
                    sa * (n * (n + beta - 1.0)).sqrt()
                },
                move |n| sb * (n as f64 + 0.5 * beta),
                name,
            )
        }
        FamilyKind::ContDualHahn { a, b, c } => {
            let up = move |n: f64| (n + a + b) * (n + a + c);
            let down = move |n: f64| n * (n + b + c - 1.0);
            RecurrenceCoefficients::new(
                move |n| {
                    let n = n as f64;
                    (up(n - 1.0) * down(n)).sqrt()
                },
                move |n| {
                    let n = n as f64;
                    up(n) + down(n) - a * a
                },
                name,
            )
        }
        FamilyKind::Wilson { a, b, c, d } => {
            let s = a + b + c + d;
            let up = move |n: f64| (n + s - 1.0) * (n + a + b) * (n + a + c) * (n + a + d) / ((2.0 * n + s - 1.0) * (2.0 * n + s));
            // The factor `n` is written out at `n = 0`, where `2n + s - 2` may vanish.
            let down = move |n: f64| {
                if n == 0.0 {
                    0.0
                } else {
                    n * (n + b + c - 1.0) * (n + b + d - 1.0) * (n + c + d - 1.0) / ((2.0 * n + s - 1.0) * (2.0 * n + s - 2.0))
                }
            };
            RecurrenceCoefficients::new(
                move |n| {
                    let n = n as f64;
                    (up(n - 1.0) * down(n)).sqrt()
                },
                move |n| {
                    let n = n as f64;
                    up(n) + down(n) - a * a
                },
                name,
            )
        }
    }
}

/// `kappa_1` as a Gamma-function ratio, where one is known.
pub fn kappa1_closed_form(kind: &FamilyKind) -> Result<Option<f64>> {
    let g = |x: f64| gamma(x);
    Ok(match *kind {
        FamilyKind::Hermite => Some(1.0),
        FamilyKind::MeixnerPollaczek { eta, .. } => Some(g(eta)?.sqrt() / g(0.5 * (eta + 1.0))?),
        FamilyKind::Laguerre { alpha } => Some(g(alpha + 1.0)?.sqrt() / g(0.5 * alpha + 1.0)?),
        FamilyKind::Meixner { beta, .. } => Some(g(beta)?.sqrt() / g(0.5 * (beta + 1.0))?),
        FamilyKind::ContDualHahn { a, b, c } => {
            let s = a + b + c;
            Some((g(a + b)? * g(a + c)? * g(b + c)?).sqrt() / g(0.25 * (2.0 * s + 1.0))?.powi(2))
        }
        FamilyKind::Wilson { .. } => None,
    })
}
