//! Equilibrium measure, external field and normalization constants of a
//! coefficient model.

use turnpoint::field::{
    density_support, equilibrium_density, equilibrium_mass, external_q, field_constant_a, kappa_constants, FieldContext,
};
use turnpoint::langer::{CoefficientModel, Edge};
use turnpoint::numerics::QuadratureSpec;

fn main() {
    let spec = QuadratureSpec::with_tol(1e-12, 1e-12);
    let model = CoefficientModel::new(2.0 / 3.0, 5.0 / 3.0, 1.0, 0.0).unwrap();
    let ctx = FieldContext::new(model, 0.0, 1.0).unwrap();
    let (lo, hi) = density_support(&ctx);
    println!("support [{lo:.4}, {hi:.4}], mass {:.12}", equilibrium_mass(&ctx).unwrap());
    for y in [0.1, 0.5, 1.5, 2.5, 3.5] {
        let d = equilibrium_density(&ctx, y).unwrap();
        println!("y = {y}: density {:.6} (in support {})", d.value, d.in_support);
    }
    println!("external field at y = 4: {:.10}", external_q(&ctx, 4.0).unwrap());
    println!("field constant A = {:.12}", field_constant_a(&model, Edge::Plus, spec).unwrap());
    let k = kappa_constants(&model, None).unwrap();
    println!("kappa = {:.12}, kappa_1 = {:.12} (+- {:.1e})", k.kappa, k.kappa1, k.kappa1_error);
}
