//! Langer variables across a turning point and the residual of the Airy
//! approximant in the difference equation.

use turnpoint::langer::{amplitude_g, residual_beta, rho1, Approximant, CoefficientModel, Edge, LangerData};
use turnpoint::numerics::QuadratureSpec;

fn main() {
    let spec = QuadratureSpec::with_tol(1e-12, 1e-12);
    let model = CoefficientModel::new(1.0, 2.0, 1.0, 0.25).unwrap();
    let y = 3.0;
    let tp = model.turning_point(Edge::Plus, y, 0.0).unwrap();
    println!("turning point for y = {y}: t = {tp:.6}");
    for t in [0.4, 0.6, tp, 1.0, 1.5] {
        let rho = rho1(&model, t, y, 0.0, spec).unwrap();
        let g = amplitude_g(&model, t, y, 0.0, rho).unwrap();
        let region = LangerData::new(&model, t, y, 0.0, 0.05).region;
        println!("t = {t:.4}: rho = {rho:+.8}  g = {g:.6}  {region:?}");
    }
    for eps in [1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4, 3.125e-4, 1.5625e-4] {
        let r = residual_beta(&model, 1.0, y, eps, Approximant::Psi1, spec).unwrap();
        println!("eps = {eps:.1e}: |beta| / (eps^2 sup) = {:.4}", r.beta.abs() / (eps * eps * r.normalizer));
    }
}
