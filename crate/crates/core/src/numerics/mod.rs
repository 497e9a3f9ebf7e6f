//! Scalar special functions, extended-exponent arithmetic and quadrature.

mod airy;
mod gamma;
mod quad;
mod scaled;

pub use airy::{airy, airy_scaled, airy_zero, AiryPair, ScaledAiryPair, AI0, MAX_ZERO_INDEX, MINUS_AIP0};
pub use gamma::{gamma, log_gamma};
pub use quad::{integrate, integrate_log_left, integrate_endpoints, integrate_sqrt_both, EndpointKind, EndpointSingularity, QuadratureSpec};
pub use scaled::ScaledReal;
