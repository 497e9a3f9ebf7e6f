#![allow(clippy::excessive_precision)]

use proptest::prelude::*;
use turnpoint::numerics::ScaledReal;
use turnpoint::recurrence::*;

fn hermite() -> RecurrenceCoefficients {
    RecurrenceCoefficients::new(|n| (n as f64 / 2.0).sqrt(), |_| 0.0, "hermite")
}

fn laguerre(alpha: f64) -> RecurrenceCoefficients {
    RecurrenceCoefficients::new(
        move |n| (n as f64 * (n as f64 + alpha)).sqrt(),
        move |n| 2.0 * n as f64 + alpha + 1.0,
        "laguerre",
    )
}

/// `(sign, mantissa, exponent)` from 40-digit evaluations of the closed forms.
fn check(got: ScaledReal, sign: i8, mantissa: f64, exponent: i64, tol: f64) {
    assert_eq!(got.sign(), sign, "{got:?}");
    let want = ScaledReal::from_fields(sign, mantissa, exponent);
    assert!(got.rel_diff(want) < tol, "{got:?} vs {want:?}");
}

#[test]
fn hermite_oracles() {
    let c = hermite();
    check(eval_orthonormal_at(&c, 1000, 10.0).unwrap(), -1, 1.160923912595574933, 69, 1e-11);
    check(eval_orthonormal_at(&c, 10000, 2.0).unwrap(), 1, 1.313887625528732193, -1, 1e-10);
    check(eval_orthonormal_at(&c, 500, 0.3).unwrap(), -1, 1.576871890882077629, -3, 1e-11);
    check(eval_orthonormal_at(&c, 20000, 250.0).unwrap(), 1, 1.580867542229315247, 38029, 1e-11);
}

#[test]
fn laguerre_oracles() {
    let c = laguerre(0.5);
    check(eval_orthonormal_at(&c, 300, 1500.0).unwrap(), 1, 1.953649378936589839, 1006, 1e-12);
    check(eval_orthonormal_at(&c, 300, 7.0).unwrap(), -1, 1.727451949522636248, -1, 1e-10);
}

#[test]
fn degree_one_hundred_thousand_stays_finite() {
    let v = eval_orthonormal_at(&hermite(), 100_000, 1000.0).unwrap();
    assert!(v.mantissa().is_finite() && v.exponent() > 1024);
}

#[test]
fn sequence_matches_single_value() {
    let c = laguerre(1.5);
    let all = eval_orthonormal(&c, 60, 12.0).unwrap();
    assert_eq!(all.len(), 61);
    assert_eq!(all[60], eval_orthonormal_at(&c, 60, 12.0).unwrap());
}

#[test]
fn leading_coefficient_of_hermite() {
    // k_n = sqrt(2^n / n!)
    let k = leading_coefficient(&hermite(), 30);
    let want = (30.0 * 2f64.ln() - (1..=30).map(|i| (i as f64).ln()).sum::<f64>()) / 2.0;
    assert!((k.ln_abs() - want).abs() < 1e-12);
}

#[test]
fn tilde_sequence_is_scaled_monic() {
    // tp_n = 2^n p_n / k_n
    let c = laguerre(0.5);
    let y = 3.7;
    let tp = eval_monic_tilde(&c, 25, y).unwrap();
    let p = eval_orthonormal(&c, 25, y).unwrap();
    for n in 0..=25 {
        let want = (p[n] / leading_coefficient(&c, n)).ldexp(n as i64);
        assert!(tp[n].rel_diff(want) < 1e-11, "n = {n}");
    }
}

#[test]
fn hermite_zeros_of_degree_five() {
    let r = (2.5f64 - 10f64.sqrt() / 2.0).sqrt();
    let s = (2.5f64 + 10f64.sqrt() / 2.0).sqrt();
    let z = polynomial_zeros(&hermite(), 5).unwrap();
    for (got, want) in z.iter().zip([-s, -r, 0.0, r, s]) {
        assert!((got - want).abs() < 1e-11, "{got} vs {want}");
    }
    assert!((polynomial_zero(&hermite(), 5, 3).unwrap() - r).abs() < 1e-11);
    assert!(polynomial_zero(&hermite(), 5, 5).is_err());
}

#[test]
fn gauss_rule_integrates_moments() {
    // Normalized Hermite weight: E[x^2] = 1/2, E[x^4] = 3/4, E[x^10] = 945/32.
    let rule = gauss_rule(&hermite(), 8).unwrap();
    let moment = |k: i32| rule.iter().map(|(x, w)| w * x.powi(k)).sum::<f64>();
    assert!((moment(0) - 1.0).abs() < 1e-12);
    assert!(moment(1).abs() < 1e-12);
    assert!((moment(2) - 0.5).abs() < 1e-12);
    assert!((moment(4) - 0.75).abs() < 1e-12);
    assert!((moment(10) - 945.0 / 32.0).abs() < 1e-9);
}

#[test]
fn sturm_count_brackets_zeros() {
    let c = laguerre(0.5);
    let z = polynomial_zeros(&c, 40).unwrap();
    for (k, w) in z.windows(2).enumerate() {
        assert_eq!(sturm_count(&c, 40, 0.5 * (w[0] + w[1])), k + 1);
    }
    assert_eq!(sturm_count(&c, 40, z[0] - 1e-3), 0);
    assert_eq!(sturm_count(&c, 40, z[39] + 1.0), 40);
}

#[test]
fn casorati_of_a_sequence_with_itself_vanishes() {
    let c = hermite();
    let u = eval_orthonormal(&c, 10, 0.7).unwrap();
    let v = eval_orthonormal(&c, 10, -0.2).unwrap();
    assert!(casorati(&u, &u, |_, _| 1.0, 0.1, 5).unwrap().is_zero());
    let w1 = casorati(&u, &v, |_, _| 1.0, 0.1, 5).unwrap();
    let w2 = casorati(&v, &u, |_, _| 1.0, 0.1, 5).unwrap();
    assert_eq!(w1, -w2);
    assert!(casorati(&u, &v, |_, _| 1.0, 0.1, 11).is_err());
}

#[test]
fn rescaling_moves_zeros() {
    let c = hermite();
    let s = c.rescaled(4.0);
    let z = polynomial_zeros(&c, 12).unwrap();
    let zs = polynomial_zeros(&s, 12).unwrap();
    for (a, b) in z.iter().zip(&zs) {
        assert!((a / 4.0 - b).abs() < 1e-11);
    }
}

proptest! {
    #[test]
    fn matches_plain_recurrence(alpha in -0.9f64..5.0, x in 0.0f64..60.0, n in 0usize..40) {
        let c = laguerre(alpha);
        let (mut prev, mut cur) = (0.0, 1.0);
        for k in 0..n {
            let next = ((x - c.b1(k)) * cur - if k == 0 { 0.0 } else { c.a1(k) * prev }) / c.a1(k + 1);
            prev = cur;
            cur = next;
        }
        let got = eval_orthonormal_at(&c, n, x).unwrap().to_f64();
        prop_assert!((got - cur).abs() <= 1e-9 * cur.abs().max(1.0), "{} vs {}", got, cur);
    }

    #[test]
    fn zeros_interlace(n in 2usize..30, alpha in -0.5f64..3.0) {
        let c = laguerre(alpha);
        let lo = polynomial_zeros(&c, n - 1).unwrap();
        let hi = polynomial_zeros(&c, n).unwrap();
        for k in 0..n - 1 {
            prop_assert!(hi[k] < lo[k] && lo[k] < hi[k + 1]);
        }
    }

    #[test]
    fn value_vanishes_at_zeros(n in 1usize..25) {
        let c = hermite();
        for x in polynomial_zeros(&c, n).unwrap() {
            let v = eval_orthonormal_at(&c, n, x).unwrap().to_f64().abs();
            let scale = eval_orthonormal(&c, n, x).unwrap().iter().map(|p| p.to_f64().abs()).fold(1.0, f64::max);
            prop_assert!(v < 1e-9 * scale * n as f64);
        }
    }
}
