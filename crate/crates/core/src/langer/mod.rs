//! Discrete Langer transformation near turning points.
//!
//! For the difference equation
//! `a(t + eps) psi(t + eps) + a(t) psi(t - eps) = (y - b(t)) psi(t)`
//! with slowly varying model coefficients, the approximants
//! `g Ai(eps^{-2/3} rho)` and `g Bi(eps^{-2/3} rho)` are uniformly valid
//! through a simple turning point.

mod approx;
mod model;
mod phase;
mod shift;

pub use approx::{airy_approximant, amplitude_g, amplitude_g_edge, residual_beta, Approximant, Residual};
pub use model::{CoefficientModel, Edge, LangerData, ModelCase, Region};
pub use phase::{k_squared, k_squared_of_z, rho1, rho2, rho_edge};
pub use shift::{airy_shift_check, shift_leading_order};
