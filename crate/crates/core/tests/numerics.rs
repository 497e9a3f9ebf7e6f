#![allow(clippy::excessive_precision)]

//! Special functions, scaled arithmetic and quadrature against frozen
//! high-precision reference values.

use proptest::prelude::*;
use turnpoint::numerics::*;

/// (x, Ai, Ai', Bi, Bi') at 40 digits, rounded to 20.
const AIRY_REF: [(f64, f64, f64, f64, f64); 22] = [
    (-60.0, 0.07778782447711558377, 1.4503455958642243777, -0.1871968328829833155, 0.60176234991628520368),
    (-25.0, 0.16352657883042946949, 0.96237885138769741004, -0.19214681569037802376, 0.81571971575460585788),
    (-12.5, -0.27627456138116024823, -0.41933133041950516441, 0.1170333672573927766, -0.97451653616717407216),
    (-9.5, 0.31910324771912820138, -0.108095318811871239, 0.037785432489466502266, 0.98471407000211970392),
    (-8.9, -0.11726630637175180866, -0.91289275742525020261, 0.30483241336496308114, -0.34136475372177978421),
    (-7.3, 0.33577037051514727697, -0.18009580448329365985, 0.070874113769896473903, 0.90998427043632458172),
    (-5.0, 0.35076100902411431979, 0.32719281855444313679, -0.13836913490160057685, 0.77841177300189924609),
    (-3.01, -0.3819030899627158014, 0.30315367855755569325, -0.19150407676494617407, -0.6814679631922765956),
    (-2.99, -0.37561185542128950227, 0.32588160946293031222, -0.20501569171013889052, -0.66957163085827301966),
    (-1.0, 0.5355608832923521188, -0.010160567116645209395, 0.10399738949694461189, 0.59237562642279235082),
    (0.0, 0.35502805388781723926, -0.25881940379280679841, 0.61492662744600073515, 0.44828835735382635791),
    (0.5, 0.23169360648083348977, -0.22491053266468389314, 0.8542770431031554933, 0.54457256414059230183),
    (1.0, 0.13529241631288141552, -0.15914744129679321279, 1.2074235949528712594, 0.93243593339277563296),
    (2.4, 0.018556093622975470043, -0.030439520128972596664, 5.6157706541205966595, 7.9417858797353177833),
    (2.6, 0.01328928252967148217, -0.02256131088610874455, 7.5100876980822733602, 11.202445467843922664),
    (4.4, 0.0004099735863869618427, -0.00088189208649176743161, 185.42754839855772216, 377.54334370077818952),
    (4.6, 0.00026543212392445045001, -0.00058291417781033360493, 280.03639880129124647, 584.22732232556525377),
    (7.0, 7.4921288639971670808e-7, -2.0081508947387919912e-6, 80327.790709430247005, 209552.67087397131951),
    (10.0, 1.1047532552898685934e-10, -3.5206336767389236366e-10, 455641153.548225141, 1429236134.4828657761),
    (10.5, 2.2022745192834016435e-11, -7.1876967814515670913e-11, 2230554441.1366952292, 7173692245.2832991801),
    (20.0, 1.6916728686705403136e-27, -7.5863916257483549605e-27, 2.1037650496511038145e+25, 9.3818393361339643491e+25),
    (50.0, 4.5849417240748284783e-104, -3.2443318198287992961e-103, 4.9090996994442193288e+101, 3.4687987795459767244e+102),
];

fn close(got: f64, want: f64, rel: f64) -> bool {
    (got - want).abs() <= rel * want.abs().max(1e-300)
}

#[test]
fn airy_matches_reference_values() {
    for &(x, ai, aip, bi, bip) in AIRY_REF.iter() {
        let p = airy(x);
        // oscillatory region: absolute error relative to the local amplitude
        let scale = if x < 0.0 { (ai * ai + bi * bi).sqrt() } else { 0.0 };
        let ok = |g: f64, w: f64| close(g, w, 2e-13) || (g - w).abs() <= 2e-13 * scale.max(w.abs());
        let dscale = if x < 0.0 { (aip * aip + bip * bip).sqrt() } else { 0.0 };
        let okd = |g: f64, w: f64| close(g, w, 2e-13) || (g - w).abs() <= 2e-13 * dscale.max(w.abs());
        assert!(ok(p.ai, ai), "Ai({x}) = {} vs {ai}", p.ai);
        assert!(ok(p.bi, bi), "Bi({x}) = {} vs {bi}", p.bi);
        assert!(okd(p.ai_prime, aip), "Ai'({x}) = {} vs {aip}", p.ai_prime);
        assert!(okd(p.bi_prime, bip), "Bi'({x}) = {} vs {bip}", p.bi_prime);
    }
}

#[test]
fn airy_scaled_far_out() {
    // (x, ln Ai, ln Bi, ln(-Ai'), ln Bi')
    let refs = [
        (100.0, -669.08357542530962671, 664.9431134221567873, -666.78074051953755444, 667.2454483273715642),
        (300.0, -3466.7930929238949653, 3462.1033246259445571, -3463.9411535809868915, 3464.9551677438037937),
        (1000.0, -21084.843522026386834, 21079.55176732064267, -21081.389636481389107, 21083.00563705425208),
    ];
    for (x, lai, lbi, laip, lbip) in refs {
        let p = airy_scaled(x);
        for (got, want) in [(p.ai, lai), (p.bi, lbi), (p.ai_prime, laip), (p.bi_prime, lbip)] {
            assert!((got.ln_abs() - want).abs() <= 1e-13 * want.abs(), "x={x}: {} vs {want}", got.ln_abs());
        }
        assert!(p.ai_prime.sign() < 0);
    }
}

#[test]
fn wronskian_on_thousand_points() {
    let mut worst: f64 = 0.0;
    for i in 0..1000 {
        let x = -10.0 + 15.0 * i as f64 / 999.0;
        let p = airy(x);
        worst = worst.max((p.ai * p.bi_prime - p.ai_prime * p.bi - std::f64::consts::FRAC_1_PI).abs());
    }
    assert!(worst <= 1e-12, "worst Wronskian error {worst:e}");
}

#[test]
fn wronskian_out_to_fifteen() {
    for i in 0..=300 {
        let x = -15.0 + 30.0 * i as f64 / 300.0;
        let p = airy_scaled(x);
        let w = (p.ai * p.bi_prime - p.ai_prime * p.bi).to_f64();
        assert!((w - std::f64::consts::FRAC_1_PI).abs() < 1e-12, "x={x} w={w}");
    }
}

#[test]
fn airy_differential_equation_residual() {
    let h = 1e-4;
    for i in 0..=120 {
        let x = -8.0 + 12.0 * i as f64 / 120.0;
        let d2 = (airy(x + h).ai - 2.0 * airy(x).ai + airy(x - h).ai) / (h * h);
        assert!((d2 - x * airy(x).ai).abs() < 1e-6, "x={x}");
    }
}

#[test]
fn airy_zeros_reference() {
    let refs = [
        (1, -2.3381074104597670385),
        (2, -4.0879494441309706166),
        (3, -5.5205598280955510591),
        (4, -6.7867080900717589988),
        (5, -7.9441335871208531231),
        (10, -12.8287767528657572),
        (20, -20.53733290767756636),
        (50, -38.021008677255254433),
        (51, -38.528808305094248823),
        (100, -60.455557274116698707),
        (1000, -281.03151961252155284),
    ];
    for (k, z) in refs {
        let got = airy_zero(k).unwrap();
        assert!((got - z).abs() <= 1e-10, "k={k}: {got} vs {z}");
    }
}

#[test]
fn airy_zero_ordering_and_range() {
    let zs: Vec<f64> = (1..=21).map(|k| airy_zero(k).unwrap()).collect();
    assert!(zs[0] < 0.0);
    for w in zs.windows(2) {
        assert!(w[1] < w[0]);
    }
    assert!(airy_zero(0).is_err());
    assert!(matches!(airy_zero(MAX_ZERO_INDEX + 1), Err(turnpoint::Error::Unsupported(_))));
}

#[test]
fn log_gamma_reference() {
    let refs = [
        (1e-8, 18.420680738180208884),
        (0.1, 2.252712651734205902),
        (0.5, 0.57236494292470008707),
        (0.9999, 0.000057729791561193862808),
        (1.5, -0.12078223763524522235),
        (2.5, 0.28468287047291915963),
        (3.3, 0.98709857789473440406),
        (4.7, 2.7364051463155669376),
        (9.9, 12.577179904219879684),
        (10.0, 12.801827480081469611),
        (25.5, 56.389167643719946744),
        (1000.0, 5905.2204232091812118),
        (1e6, 12815504.56914761166),
    ];
    for (x, want) in refs {
        let got = log_gamma(x).unwrap();
        assert!(close(got, want, 1e-12), "lgamma({x}) = {got} vs {want}");
    }
}

#[test]
fn quadrature_examples() {
    let spec = QuadratureSpec::default();
    assert!((integrate(|u| u, 0.0, 1.0, spec).unwrap() - 0.5).abs() <= 1e-12);
    let left = spec.singularity(EndpointSingularity::SqrtLeft);
    assert!((integrate(f64::sqrt, 0.0, 1.0, left).unwrap() - 2.0 / 3.0).abs() <= 1e-10);
    // closed form u acosh u - sqrt(u^2 - 1) at 1.2 minus at 1
    let v = integrate(f64::acosh, 1.0, 1.2, left).unwrap();
    assert!((v - 0.083510046386654403907).abs() <= 1e-12, "{v}");
    let right = spec.singularity(EndpointSingularity::SqrtRight);
    let w = integrate(|u: f64| 1.0 / (1.0 - u).sqrt(), 0.0, 1.0, right).unwrap();
    assert!((w - 2.0).abs() <= 1e-10);
    let arcsine = integrate_sqrt_both(|u: f64| 1.0 / (u * (1.0 - u)).sqrt(), 0.0, 1.0, spec).unwrap();
    assert!((arcsine - std::f64::consts::PI).abs() <= 1e-10);
}

#[test]
fn quadrature_rejects_bad_input() {
    assert!(integrate(|u| u, 1.0, 0.0, QuadratureSpec::default()).is_err());
    let bad = QuadratureSpec { abs_tol: 0.0, ..Default::default() };
    assert!(integrate(|u| u, 0.0, 1.0, bad).is_err());
    assert!(integrate(|u: f64| 1.0 / (u - 0.5), 0.0, 1.0, QuadratureSpec::default()).is_err());
}

proptest! {
    #[test]
    fn scaled_round_trip(bits in any::<u64>(), shift in -900i64..900) {
        let x = f64::from_bits(bits);
        prop_assume!(x.is_finite());
        let s = ScaledReal::from_f64(x);
        prop_assert_eq!(s.to_f64(), x);
        prop_assert_eq!((s.ldexp(shift).ldexp(-shift) * ScaledReal::ONE).to_f64(), x);
        if x != 0.0 {
            prop_assert!(s.mantissa() >= 1.0 && s.mantissa() < 2.0);
        }
    }

    #[test]
    fn scaled_product_independent_of_exponent(a in -1e3f64..1e3, b in -1e3f64..1e3, e in -100_000i64..100_000) {
        let plain = ScaledReal::from_f64(a) * ScaledReal::from_f64(b);
        let shifted = ScaledReal::from_f64(a).ldexp(e) * ScaledReal::from_f64(b).ldexp(-e);
        prop_assert_eq!(plain, shifted);
        let sum = ScaledReal::from_f64(a).ldexp(e) + ScaledReal::from_f64(b).ldexp(e);
        prop_assert!((sum.ldexp(-e).to_f64() - (a + b)).abs() <= 1e-15 * (a.abs() + b.abs()));
    }

    #[test]
    fn integrate_is_linear(al in -3.0f64..3.0, be in -3.0f64..3.0, w in 0.5f64..4.0) {
        let spec = QuadratureSpec::default();
        let f = |u: f64| (w * u).sin();
        let g = |u: f64| (u * u + 1.0).ln();
        let lhs = integrate(|u| al * f(u) + be * g(u), 0.0, 2.0, spec).unwrap();
        let rhs = al * integrate(f, 0.0, 2.0, spec).unwrap() + be * integrate(g, 0.0, 2.0, spec).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn log_gamma_recurrence(x in 0.01f64..50.0) {
        let d = log_gamma(x + 1.0).unwrap() - log_gamma(x).unwrap() - x.ln();
        prop_assert!(d.abs() < 1e-12 * (1.0 + log_gamma(x + 1.0).unwrap().abs()));
    }
}
