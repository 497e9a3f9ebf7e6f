//! Exact recurrence values far outside the `f64` range, zeros by Sturm
//! bisection and the Gauss rule they define.

use turnpoint::families::{FamilyKind, FamilySpec};
use turnpoint::recurrence::{eval_orthonormal_at, gauss_rule, polynomial_zeros};

fn main() {
    let spec = FamilySpec::new(FamilyKind::Laguerre { alpha: 0.5 }).unwrap();
    let coeffs = spec.coefficients();
    for n in [100, 1_000, 10_000, 100_000] {
        let x = 1.2 * spec.lambda_n(n);
        let v = eval_orthonormal_at(&coeffs, n, x).unwrap();
        println!("p_{n}({x:.1}) = {v}  (log2 |p| = {:.1})", v.log2_abs());
    }
    let z = polynomial_zeros(&coeffs, 400).unwrap();
    let lam = spec.lambda_n(400);
    println!("largest zeros of p_400 / lambda_N: {:.6?}", z[397..].iter().map(|x| x / lam).collect::<Vec<_>>());
    let rule = gauss_rule(&coeffs, 20).unwrap();
    let mean: f64 = rule.iter().map(|(x, w)| w * x).sum();
    println!("20-point rule: sum w = {:.15}, mean = {mean:.12} (exact 1.5)", rule.iter().map(|r| r.1).sum::<f64>());
}
