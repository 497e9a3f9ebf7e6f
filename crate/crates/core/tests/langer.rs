#![allow(clippy::excessive_precision)]

use proptest::prelude::*;
use std::f64::consts::SQRT_2;
use turnpoint::langer::*;
use turnpoint::numerics::QuadratureSpec;

fn spec() -> QuadratureSpec {
    QuadratureSpec::with_tol(1e-13, 1e-13)
}

fn hermite() -> CoefficientModel {
    CoefficientModel::new(1.0 / SQRT_2, 0.0, 2.0, 0.0).unwrap()
}

fn laguerre() -> CoefficientModel {
    CoefficientModel::new(1.0, 2.0, 1.0, 0.25).unwrap()
}

fn detached() -> CoefficientModel {
    CoefficientModel::new(2.0 / 3.0, 5.0 / 3.0, 1.0, 0.0).unwrap()
}

/// Langer variables at `t = 1`, `eps = 0` from 40-digit quadrature.
#[test]
fn rho_oracles() {
    let cases = [
        (hermite(), Edge::Plus, 1.5, 0.122_051_235_568_829_684),
        (hermite(), Edge::Plus, 0.8, -0.828_841_912_819_499_508),
        (laguerre(), Edge::Plus, 5.0, 0.379_099_435_645_563_127),
        (laguerre(), Edge::Plus, 2.0, -0.901_671_381_839_551_751),
        (detached(), Edge::Minus, 0.2, 0.336_630_547_269_343_077),
        (detached(), Edge::Minus, 1.5, -2.204_986_854_201_918_767),
    ];
    for (m, edge, y, want) in cases {
        let got = rho_edge(&m, edge, 1.0, y, 0.0, spec()).unwrap();
        assert!((got - want).abs() < 1e-11 * want.abs(), "{edge:?} y = {y}: {got} vs {want}");
    }
}

#[test]
fn rho1_and_rho2_select_edges() {
    let m = detached();
    assert_eq!(rho1(&m, 1.0, 1.5, 0.0, spec()).unwrap(), rho_edge(&m, Edge::Plus, 1.0, 1.5, 0.0, spec()).unwrap());
    assert_eq!(rho2(&m, 1.0, 0.2, 0.0, spec()).unwrap(), rho_edge(&m, Edge::Minus, 1.0, 0.2, 0.0, spec()).unwrap());
    assert!(rho2(&laguerre(), 1.0, 2.0, 0.0, spec()).is_err());
    assert!(rho2(&hermite(), 1.0, 0.5, 0.0, spec()).is_err());
    assert!(rho2(&hermite(), 1.0, -0.5, 0.0, spec()).is_ok());
}

#[test]
fn k_squared_branches() {
    assert!((k_squared_of_z(2.0).unwrap() - 2f64.acosh().powi(2)).abs() < 1e-15);
    assert!((k_squared_of_z(0.0).unwrap() + (std::f64::consts::FRAC_PI_2).powi(2)).abs() < 1e-15);
    assert_eq!(k_squared_of_z(1.0).unwrap(), 0.0);
    assert!(k_squared_of_z(-1.5).is_err());
    let m = laguerre();
    assert_eq!(k_squared(&m, 1.0, 5.0, 0.0).unwrap(), k_squared_of_z(m.z(1.0, 5.0, 0.0)).unwrap());
}

#[test]
fn series_zone_is_continuous() {
    // Either side of the switch between the local expansion and quadrature.
    let m = hermite();
    let y = 1.0;
    let tp = m.turning_point(Edge::Plus, y, 0.0).unwrap();
    for d in [0.9e-5, 1.1e-5] {
        for s in [-1.0, 1.0] {
            let t = tp * (1.0 + s * d);
            let r = rho_edge(&m, Edge::Plus, t, y, 0.0, spec()).unwrap();
            let slope = (2.0 * m.z_edge_derivs(Edge::Plus, tp, y, 0.0).0.abs()).cbrt();
            let lin = slope * (tp - t);
            assert!((r - lin).abs() < 1e-4 * lin.abs(), "t = {t}: {r} vs {lin}");
        }
    }
}

#[test]
fn amplitude_is_finite_at_the_turning_point() {
    let m = laguerre();
    let y = 4.0;
    let tp = m.turning_point(Edge::Plus, y, 0.0).unwrap();
    let g0 = amplitude_g(&m, tp, y, 0.0, 0.0).unwrap();
    let t = tp * (1.0 + 1e-3);
    let r = rho1(&m, t, y, 0.0, spec()).unwrap();
    let g1 = amplitude_g(&m, t, y, 0.0, r).unwrap();
    assert!(g0.is_finite() && (g1 / g0 - 1.0).abs() < 1e-2);
}

#[test]
fn amplitude_closed_form_off_the_turning_point() {
    let m = hermite();
    let (t, y) = (1.0, 1.5);
    let r = rho1(&m, t, y, 0.0, spec()).unwrap();
    let z = m.z(t, y, 0.0);
    let want = (r / ((m.a * m.q_eps(t, 0.0)).powi(2) * (z * z - 1.0))).powf(0.25);
    assert!((amplitude_g(&m, t, y, 0.0, r).unwrap() - want).abs() < 1e-14);
    assert!(amplitude_g(&m, t, y, 0.0, -r).is_err());
}

#[test]
fn residual_scales_like_eps_squared() {
    // |beta| / (eps^2 normalizer) stays bounded as eps shrinks.
    let m = laguerre();
    let ratio = |eps: f64| {
        let r = residual_beta(&m, 1.0, 3.5, eps, Approximant::Psi1, spec()).unwrap();
        r.beta.abs() / (eps * eps * r.normalizer)
    };
    let (r1, r2) = (ratio(1e-2), ratio(2.5e-3));
    assert!(r1 < 10.0 && r2 < 10.0, "{r1} {r2}");
    assert!(r2 < 2.0 * r1, "{r1} {r2}");
}

#[test]
fn approximants_carry_their_exponent() {
    let m = hermite();
    let a = airy_approximant(&m, 1.0, 1.5, 1e-4, Approximant::Psi1, spec()).unwrap();
    let b = airy_approximant(&m, 1.0, 1.5, 1e-4, Approximant::Psi2, spec()).unwrap();
    assert!(a.exponent() < -10 && b.exponent() > 10);
}

#[test]
fn shift_expansion_leading_order() {
    let m = hermite();
    let rho = |t: f64| rho1(&m, t, 1.5, 0.0, spec()).unwrap();
    for eps in [1e-2, 1e-3] {
        let (x1, x2) = airy_shift_check(rho, 0.9, eps).unwrap();
        let rt = (rho(0.9 + eps) - rho(0.9)) / eps;
        let (l1, l2) = shift_leading_order(rho(0.9), rt);
        assert!((x1 - l1).abs() < 5.0 * eps && (x2 - l2).abs() < 5.0 * eps, "eps = {eps}");
    }
    assert!(airy_shift_check(|_| 0.0, 1.0, 1e-3).is_err());
}

#[test]
fn region_classification() {
    let m = detached();
    let cls = |y: f64| LangerData::new(&m, 1.0, y, 0.0, 0.05).region;
    assert_eq!(cls(4.0), Region::OuterGrowth);
    assert_eq!(cls(3.0), Region::AiryBandPlus);
    assert_eq!(cls(1.5), Region::Oscillatory);
    assert_eq!(cls(1.0 / 3.0), Region::AiryBandMinus);
    assert_eq!(cls(0.1), Region::Saturated);
    let h = LangerData::new(&hermite(), 1.0, -2.0, 0.0, 0.05);
    assert_eq!(h.region, Region::OuterGrowth);
    assert!(h.tp_minus.is_some() && h.tp_plus.is_none());
}

#[test]
fn model_validation_and_cases() {
    assert!(CoefficientModel::new(0.0, 1.0, 1.0, 0.0).is_err());
    assert!(CoefficientModel::new(1.0, 1.0, 1.0, -0.5).is_err());
    assert_eq!(hermite().case(), ModelCase::Case1a);
    assert_eq!(laguerre().case(), ModelCase::Case2);
    assert_eq!(detached().case(), ModelCase::Case3);
    assert_eq!(CoefficientModel::new(1.0, 1.0, 1.0, 0.0).unwrap().case(), ModelCase::Case1);
}

proptest! {
    #[test]
    fn rho_sign_follows_z(y in 0.05f64..4.0, t in 0.2f64..2.0) {
        let m = laguerre();
        let z = m.z(t, y, 0.0);
        prop_assume!((z - 1.0).abs() > 1e-6 && z > -1.0);
        let r = rho1(&m, t, y, 0.0, spec()).unwrap();
        prop_assert_eq!(r > 0.0, z > 1.0);
    }

    #[test]
    fn rho_increases_with_y(y in 0.3f64..3.0, dy in 1e-3f64..0.5) {
        let m = hermite();
        let r0 = rho1(&m, 1.0, y, 0.0, spec()).unwrap();
        let r1 = rho1(&m, 1.0, y + dy, 0.0, spec()).unwrap();
        prop_assert!(r1 > r0);
    }

    #[test]
    fn hermite_growth_side_closed_form(y in 1.5f64..6.0) {
        // With w = y / sqrt(2): rho = ((3/2) (w sqrt(w^2 - 1) - acosh w))^{2/3}.
        let m = hermite();
        let r = rho1(&m, 1.0, y, 0.0, spec()).unwrap();
        let w = y / SQRT_2;
        let want = (1.5 * (w * (w * w - 1.0).sqrt() - w.acosh())).powf(2.0 / 3.0);
        prop_assert!((r - want).abs() < 1e-10 * want.max(1e-3), "{} vs {}", r, want);
    }
}
