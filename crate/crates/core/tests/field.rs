#![allow(clippy::excessive_precision)]

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;
use turnpoint::field::*;
use turnpoint::langer::{rho1, CoefficientModel, Edge};
use turnpoint::numerics::{gamma, QuadratureSpec};
use turnpoint::recurrence::RecurrenceCoefficients;

fn spec() -> QuadratureSpec {
    QuadratureSpec::with_tol(1e-13, 1e-13)
}

fn hermite() -> CoefficientModel {
    CoefficientModel::new(1.0 / 2f64.sqrt(), 0.0, 2.0, 0.0).unwrap()
}

fn laguerre() -> CoefficientModel {
    CoefficientModel::new(1.0, 2.0, 1.0, 0.25).unwrap()
}

fn meixner() -> CoefficientModel {
    CoefficientModel::new(2.0 / 3.0, 5.0 / 3.0, 1.0, 0.0).unwrap()
}

fn straddling() -> CoefficientModel {
    CoefficientModel::new(1.0, 1.0, 1.0, 0.5).unwrap()
}

#[test]
fn field_constants_match_closed_forms() {
    let a = |m: CoefficientModel, e| field_constant_a(&m, e, spec()).unwrap();
    assert!((a(hermite(), Edge::Plus) - 1.0).abs() < 1e-9);
    assert!((a(hermite(), Edge::Minus) - 1.0).abs() < 1e-9);
    assert!((a(laguerre(), Edge::Plus) - 1.0).abs() < 1e-9);
    let cdh = CoefficientModel::new(0.25, 0.5, 0.5, 0.25).unwrap();
    assert!((a(cdh, Edge::Plus) - PI / 2f64.sqrt()).abs() < 1e-9);
    let cubic = CoefficientModel::new(0.5, 0.0, 3.0, 0.0).unwrap();
    let expect = gamma(1.5).unwrap() * PI.sqrt() / (2.0 * gamma(2.0).unwrap());
    assert!((a(cubic, Edge::Plus) - expect).abs() < 1e-9);
    assert!(field_constant_a(&laguerre(), Edge::Minus, spec()).is_err());
}

#[test]
fn c_alpha_values() {
    assert!((c_alpha(&meixner(), spec()).unwrap() - 1.0).abs() < 1e-12);
    let vals: Vec<f64> = [1.0, 2.0, 4.0]
        .iter()
        .map(|d| c_alpha(&CoefficientModel::new(1.0, 2.0 + d, 1.5, 0.0).unwrap(), spec()).unwrap())
        .collect();
    assert!(vals[0] > vals[1] && vals[1] > vals[2] && vals[2] > 0.0);
    assert!(c_alpha(&hermite(), spec()).is_err());
}

#[test]
fn hermite_field_is_half_square() {
    let ctx = FieldContext::new(hermite(), 0.0, 1.0).unwrap();
    for i in 0..=18 {
        let y = 0.2 + 0.1 * i as f64;
        assert!((external_q(&ctx, y).unwrap() - y * y / 2.0).abs() < 1e-8, "y = {y}");
        assert!((external_q(&ctx, -y).unwrap() - y * y / 2.0).abs() < 1e-8, "y = {}", -y);
    }
    assert!(external_q(&ctx, 1e-4).unwrap() < 1e-8);
    assert!(external_q(&ctx, 0.0).is_err());
}

#[test]
fn field_increases_and_outgrows_log() {
    for m in [hermite(), laguerre(), meixner(), straddling()] {
        let ctx = FieldContext::new(m, 0.0, 1.0).unwrap();
        let qs: Vec<f64> = (1..=20).map(|i| external_q(&ctx, 0.25 * i as f64).unwrap()).collect();
        assert!(qs.windows(2).all(|w| w[1] > w[0]), "{m:?}");
        let big = |y: f64| external_q(&ctx, y).unwrap() - y.ln();
        assert!(big(100.0) > big(10.0) && big(10.0) > big(5.0));
    }
}

/// `Q = A (1 + eps c)(y/2a)^alpha - eps k (1 + r)` with `r = O(eps)` for these models.
#[test]
fn field_expansion_remainder_scales_with_eps() {
    for m in [hermite(), straddling(), laguerre(), meixner()] {
        let a = field_constant_a(&m, Edge::Plus, spec()).unwrap();
        let c = m.c();
        let r = |eps: f64, y: f64| {
            let ctx = FieldContext::with_spec(m, eps, 1.0, QuadratureSpec::with_tol(1e-14, 1e-14)).unwrap();
            let k = c / m.alpha + c * (m.q_hat(1.0 / eps + 0.5) * y / (m.a * c.powf(1.0 / m.alpha))).ln();
            (a * (1.0 + eps * c) * (y / (2.0 * m.a)).powf(m.alpha) - external_q(&ctx, y).unwrap()) / (eps * k) - 1.0
        };
        for y in [1.0, 2.5] {
            let rs: Vec<f64> = [1e-2, 5e-3, 2.5e-3].iter().map(|&e| r(e, y)).collect();
            for (w, e) in rs.windows(2).zip([1e-2, 5e-3]) {
                let ratio = w[0] / w[1];
                assert!((1.6..=2.6).contains(&ratio), "{m:?} y={y} ratio {ratio}");
                assert!(w[0].abs() < 0.2 * e, "{m:?} y={y} r={}", w[0]);
            }
        }
    }
}

#[test]
fn log_mean_matches_closed_form() {
    for (m, eps, t) in [(hermite(), 0.0, 1.0), (laguerre(), 0.01, 0.7), (meixner(), 0.003, 1.4)] {
        let ctx = FieldContext::new(m, eps, t).unwrap();
        let ec = eps * m.c();
        let f = |x: f64| if x == 0.0 { 0.0 } else { x * x.ln() };
        let expect = m.a.ln() + ((f(t + ec) - f(ec) - t) / m.alpha - t / m.alpha * (1.0 + ec).ln()) / t;
        assert!((ctx.l_t() - expect).abs() < 1e-11, "{m:?}");
    }
}

#[test]
fn potential_reference_value() {
    let ctx = FieldContext::new(hermite(), 0.0, 1.0).unwrap();
    assert!((potential_v(&ctx, 2.0).unwrap() - 0.620586434366475321722304540041).abs() < 1e-9);
}

#[test]
fn potential_grows_like_log() {
    let ctx = FieldContext::new(hermite(), 0.0, 1.0).unwrap();
    assert!((potential_v(&ctx, 1e4).unwrap() - 1e4f64.ln()).abs() < 1e-3);
}

/// Above the band `Q - t (V - l_t)` is `(2/3) rho_1^{3/2}`; on the band it vanishes.
#[test]
fn field_potential_identities() {
    for (m, eps, t) in [(straddling(), 0.01, 1.0), (hermite(), 0.0, 0.8), (meixner(), 0.005, 1.0)] {
        let ctx = FieldContext::new(m, eps, t).unwrap();
        let gp = m.gamma(Edge::Plus, t, eps);
        for y in [1.05 * gp, 1.5 * gp] {
            let rho = rho1(&m, t, y, eps, spec()).unwrap();
            let lhs = external_q(&ctx, y).unwrap() - t * (potential_v(&ctx, y).unwrap() - ctx.l_t());
            assert!((lhs - 2.0 / 3.0 * rho.powf(1.5)).abs() < 1e-7, "{m:?} y={y}");
        }
        let (lo, _) = density_support(&ctx);
        for y in [0.3 * gp, 0.8 * gp, 0.5 * (lo.max(0.0) + gp)] {
            let gap = external_q(&ctx, y).unwrap() - t * (potential_v(&ctx, y).unwrap() - ctx.l_t());
            assert!(gap.abs() < 1e-9, "{m:?} y={y} gap={gap}");
        }
    }
}

#[test]
fn hermite_density_is_semicircle() {
    let ctx = FieldContext::new(hermite(), 0.0, 1.0).unwrap();
    let a = hermite().a;
    for i in 0..50 {
        let y = -2.0 * a + 4.0 * a * (i as f64 + 0.5) / 50.0;
        let d = equilibrium_density(&ctx, y).unwrap();
        let expect = (4.0 * a * a - y * y).sqrt() / (2.0 * PI * a * a);
        assert!(d.in_support && (d.value - expect).abs() < 1e-8, "y = {y}");
    }
    assert!((equilibrium_density(&ctx, 0.0).unwrap().value - 2f64.sqrt() / PI).abs() < 1e-12);
    let out = equilibrium_density(&ctx, 2.0).unwrap();
    assert!(!out.in_support && out.value == 0.0);
}

#[test]
fn equilibrium_measure_has_unit_mass() {
    let cdh = CoefficientModel::new(0.25, 0.5, 0.5, 0.25).unwrap();
    for m in [hermite(), laguerre(), meixner(), straddling(), cdh] {
        for (t, eps) in [(1.0, 0.0), (0.6, 0.0), (1.0, 0.01), (1.5, 0.002)] {
            let ctx = FieldContext::new(m, eps, t).unwrap();
            let mass = equilibrium_mass(&ctx).unwrap();
            assert!((mass - 1.0).abs() < 1e-8, "{m:?} t={t} eps={eps} mass={mass}");
        }
    }
}

#[test]
fn constraint_bounds_density_and_is_attained_on_saturated_part() {
    let m = meixner();
    for eps in [0.0, 0.01] {
        let ctx = FieldContext::new(m, eps, 1.0).unwrap();
        let gm = m.gamma(Edge::Minus, 1.0, eps);
        let gp = m.gamma(Edge::Plus, 1.0, eps);
        for i in 1..40 {
            let y = gp * i as f64 / 40.0;
            let nu = equilibrium_density(&ctx, y).unwrap().value;
            let sigma = constraint_density(&ctx, y).unwrap();
            assert!(nu <= sigma + 1e-10, "y={y}");
            if y < gm - 1e-3 {
                assert!((nu - sigma).abs() < 1e-9, "y={y}");
            }
        }
    }
    assert!(constraint_density(&FieldContext::new(hermite(), 0.0, 1.0).unwrap(), 0.5).is_err());
}

#[test]
fn gamma_phase_closed_form() {
    let m = meixner();
    for n in [10.0, 100.0, 1000.0] {
        let ctx = FieldContext::new(m, 1.0 / n, 1.0).unwrap();
        for y in [0.05, 0.2, 0.3] {
            let g = gamma_phase(&ctx, y).unwrap();
            assert!((g - (n + 0.5) * PI * y).abs() < 1e-7 * g.max(1.0));
        }
    }
    let m = CoefficientModel::new(0.5, 3.0, 2.0, 0.3).unwrap();
    let ctx = FieldContext::new(m, 0.01, 1.0).unwrap();
    let ca = c_alpha(&m, spec()).unwrap();
    let mut last = f64::NEG_INFINITY;
    for i in 1..20 {
        let y = 2.0 * i as f64 / 20.0;
        let g = gamma_phase(&ctx, y).unwrap();
        let expect = (100.0 + m.c()) * PI / m.alpha * ca * y * y - PI * m.s1;
        assert!((g - expect).abs() < 1e-7 * expect.abs().max(1.0));
        assert!(g > last);
        last = g;
    }
}

#[test]
fn langer_variable_matches_equilibrium_mass() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for m in [hermite(), straddling(), laguerre(), meixner()] {
        for _ in 0..10 {
            let t = rng.gen_range(0.5..1.5);
            let eps = if rng.gen_bool(0.5) { 0.0 } else { 0.01 };
            let ctx = FieldContext::new(m, eps, t).unwrap();
            let gp = m.gamma(Edge::Plus, t, eps);
            let lo = m.gamma(Edge::Minus, t, eps).max(0.0);
            let y = lo + (gp - lo) * rng.gen_range(0.05..0.95);
            let id = measure_rho_identity(&ctx, y, Edge::Plus).unwrap();
            assert!((id.lhs - id.rhs).abs() < 1e-6, "{m:?} t={t} y={y} {id:?}");
        }
    }
}

#[test]
fn lower_langer_variable_matches_measure() {
    let ctx = FieldContext::new(straddling(), 0.0, 1.0).unwrap();
    for y in [-0.2, -0.4, -0.55] {
        let id = measure_rho_identity(&ctx, y, Edge::Minus).unwrap();
        assert!((id.lhs - id.rhs).abs() < 1e-8, "{id:?}");
    }
    let ctx = FieldContext::new(meixner(), 0.01, 1.0).unwrap();
    for y in [0.5, 1.0, 2.0] {
        let id = measure_rho_identity(&ctx, y, Edge::Minus).unwrap();
        assert!((id.lhs - id.rhs).abs() < 1e-8, "{id:?}");
    }
    assert!(measure_rho_identity(&ctx, 3.5, Edge::Plus).is_err());
}

fn hermite_recurrence() -> RecurrenceCoefficients {
    RecurrenceCoefficients::new(|n| (n as f64 / 2.0).sqrt(), |_| 0.0, "hermite")
}

fn laguerre_recurrence(alpha: f64) -> RecurrenceCoefficients {
    RecurrenceCoefficients::new(
        move |n| {
            let n = n as f64;
            (n * (n + alpha)).sqrt()
        },
        move |n| 2.0 * n as f64 + alpha + 1.0,
        "laguerre",
    )
}

#[test]
fn outer_solution_tracks_recurrence() {
    use turnpoint::recurrence::{eval_monic_tilde, eval_orthonormal_at};
    let m = hermite();
    let n = 100;
    let eps = 1.0 / n as f64;
    let scaled = hermite_recurrence().rescaled(m.q_hat(n as f64 + 0.5));
    let ctx = FieldContext::new(m, eps, 1.0).unwrap().with_comparison(hermite_recurrence());
    for y in [1.5, 2.0, -1.5] {
        let exact = eval_orthonormal_at(&scaled, n, y).unwrap();
        let approx = wkb_outer(&ctx, n, y).unwrap();
        assert!(approx.rel_diff(exact) <= 5.0 / n as f64, "y = {y}");
        let tilde = eval_monic_tilde(&scaled, n, y).unwrap();
        let psi = wkb_psi_plus(&ctx, n, y).unwrap() / wkb_psi_plus(&ctx, 0, y).unwrap();
        assert!(psi.rel_diff(tilde[n]) <= 5.0 / n as f64, "y = {y}");
    }
    let p0 = wkb_psi_plus(&ctx, 0, 1.5).unwrap();
    assert!(((p0 / p0).to_f64() - 1.0).abs() < 1e-15);
    assert!((wkb_outer(&ctx, 0, 1.5).unwrap().to_f64() - 1.0).abs() < 5.0 / n as f64);
    assert!(wkb_outer(&ctx, n, 1.0).is_err());
}

#[test]
fn kappa_limits() {
    let k = kappa_constants(&hermite(), Some(&hermite_recurrence())).unwrap();
    assert!((k.kappa - (0.25f64.exp() / PI.powf(0.25))).abs() < 1e-12);
    assert!((k.kappa1 - 1.0).abs() < 1e-11);
    for m in [hermite(), laguerre()] {
        let lim = kappa_limit(&m).unwrap();
        let d1 = (kappa_n(&m, 1000) - lim).abs();
        let d2 = (kappa_n(&m, 10_000) - lim).abs();
        assert!(d2 < 0.05 / 1e4 && d1 / d2 > 8.0 && d1 / d2 < 12.0, "{m:?} {d1} {d2}");
    }
    for alpha in [0.5, 1.0, 2.5] {
        let m = CoefficientModel::new(1.0, 2.0, 1.0, alpha / 2.0).unwrap();
        let k = kappa_constants(&m, Some(&laguerre_recurrence(alpha))).unwrap();
        let expect = gamma(alpha + 1.0).unwrap().sqrt() / gamma(alpha / 2.0 + 1.0).unwrap();
        assert!((k.kappa1 - expect).abs() < 1e-8, "alpha={alpha}");
    }
}

#[test]
fn kappa1_partial_products_settle() {
    let m = laguerre();
    let c = laguerre_recurrence(0.5);
    let p: Vec<f64> = [100, 200, 400].iter().map(|&n| kappa1_partial(&m, &c, n).unwrap()).collect();
    let (d1, d2) = ((p[1] - p[0]).abs(), (p[2] - p[1]).abs());
    assert!(d2 < d1 && (d1 / d2 - 2.0).abs() < 0.1);
}

proptest! {
    #[test]
    fn wkb_root_product(a in 0.1f64..2.0, b in 0.0f64..3.0, t in 0.05f64..2.0, dy in 0.01f64..5.0) {
        let m = CoefficientModel::new(a, b, 1.0, 0.2).unwrap();
        let y = m.gamma(Edge::Plus, t, 0.01) * 1.0001 + dy;
        let w = WkbPhases::new(&m, t, y, 0.01).unwrap();
        let at = m.a_t(t, 0.01);
        prop_assert!((w.h2_plus * w.h2_minus / (4.0 * at * at) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn density_is_nonnegative(y in -1.5f64..1.5, t in 0.3f64..1.5) {
        let ctx = FieldContext::new(straddling(), 0.0, t).unwrap();
        prop_assume!(y.abs() > 1e-6);
        let d = equilibrium_density(&ctx, y).unwrap();
        prop_assert!(d.value >= 0.0);
        prop_assert_eq!(d.in_support, d.value > 0.0);
    }
}
