//! External field, logarithmic potential, equilibrium and constraint
//! measures, and the outer WKB solution of the initial value problem.
//!
//! Everything here is computed by quadrature from the model coefficients
//! `a q_eps(t)`, `b q_eps(t)`; closed forms only appear in tests.

mod external;
mod measure;
mod wkb;

pub use external::{external_q, field_constant_a, potential_v};
pub use measure::{
    c_alpha, constraint_density, density_support, equilibrium_density, equilibrium_mass, gamma_phase,
    integrate_density, measure_rho_identity, Density, MeasureIdentity,
};
pub(crate) use external::phase_integral;
pub use wkb::{kappa1_partial, kappa_constants, kappa_limit, kappa_n, wkb_outer, wkb_psi_plus, KappaConstants, WkbPhases};

use crate::error::{Error, Result};
use crate::langer::CoefficientModel;
use crate::numerics::{integrate_log_left, EndpointKind, QuadratureSpec};
use crate::recurrence::RecurrenceCoefficients;

/// Model, scaling `eps` and time horizon `t`, with the mean `l_t` of
/// `ln a q_eps` over `[0, t]` computed once.
#[derive(Clone, Debug)]
pub struct FieldContext {
    pub model: CoefficientModel,
    pub eps: f64,
    pub t: f64,
    pub spec: QuadratureSpec,
    /// Exact recurrence the model is compared with, in the model's variable
    /// before `eps` scaling. `None` means the model recurrence itself.
    pub comparison: Option<RecurrenceCoefficients>,
    l_t: f64,
}

impl FieldContext {
    pub fn new(model: CoefficientModel, eps: f64, t: f64) -> Result<Self> {
        Self::with_spec(model, eps, t, QuadratureSpec::with_tol(1e-12, 1e-12))
    }

    pub fn with_spec(model: CoefficientModel, eps: f64, t: f64, spec: QuadratureSpec) -> Result<Self> {
        if !(eps >= 0.0 && eps.is_finite()) {
            return Err(Error::Domain(format!("eps must be >= 0, got {eps}")));
        }
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Domain(format!("time horizon must be > 0, got {t}")));
        }
        let f = |u: f64| (model.a * model.q_eps(u, eps)).ln();
        let l_t = integrate_log_left(f, 0.0, t, spec)? / t;
        Ok(FieldContext { model, eps, t, spec, comparison: None, l_t })
    }

    /// Attaches the exact recurrence used for `kappa_1`.
    pub fn with_comparison(mut self, coeffs: RecurrenceCoefficients) -> Self {
        self.comparison = Some(coeffs);
        self
    }

    /// `(1/t) int_0^t ln(a q_eps(u)) du`.
    pub fn l_t(&self) -> f64 {
        self.l_t
    }
}

/// Endpoint treatment: integrable singularities sitting at the origin get the
/// exponential map, those at band edges or turning points are square-root type.
pub(crate) fn end_kind(x: f64) -> EndpointKind {
    if x == 0.0 {
        EndpointKind::Log
    } else {
        EndpointKind::Sqrt
    }
}
