//! Adaptive quadrature with square-root endpoint behavior.

use turnpoint::numerics::{integrate, integrate_sqrt_both, EndpointSingularity, QuadratureSpec};

fn main() {
    let spec = QuadratureSpec::with_tol(1e-13, 1e-13);
    let smooth = integrate(|x: f64| x.exp(), 0.0, 1.0, spec).unwrap();
    println!("int_0^1 e^x        = {smooth:.15} (exact {:.15})", std::f64::consts::E - 1.0);
    let left = integrate(|x: f64| (1.0 - x).sqrt(), 0.0, 1.0, spec.singularity(EndpointSingularity::SqrtRight)).unwrap();
    println!("int_0^1 sqrt(1-x)  = {left:.15} (exact {:.15})", 2.0 / 3.0);
    let semicircle = integrate_sqrt_both(|x: f64| (1.0 - x * x).sqrt(), -1.0, 1.0, spec).unwrap();
    println!("int_-1^1 sqrt(1-x^2) = {semicircle:.15} (exact {:.15})", std::f64::consts::FRAC_PI_2);
}
