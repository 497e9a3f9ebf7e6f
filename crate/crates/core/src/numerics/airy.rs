//! Airy functions of real argument and the zeros of `Ai`.
//!
//! Evaluation strategy by region:
//!
//! * `-3 <= x <= 2`: Maclaurin series for all four functions.
//! * `x > 2`: `Ai`, `Ai'` from the Bessel `K` integral
//!   `K_nu(z) e^z = int_0^inf exp(-z (cosh t - 1)) cosh(nu t) dt` by the
//!   trapezoid rule, which converges geometrically for this integrand.
//!   `Bi`, `Bi'` from the Maclaurin series (all terms positive) up to 10,
//!   then the exponential asymptotic series.
//! * `-9 < x < -3`: Taylor stepping of `y'' = x y` starting from `x = -3`.
//! * `x <= -9`: oscillatory asymptotic series.
//!
//! Exponential factors `e^{±zeta}` are kept apart so [`airy_scaled`] can
//! return values far outside the `f64` range.

use super::ScaledReal;
use crate::error::{Error, Result};
use std::f64::consts::{FRAC_PI_4, PI};

/// `Ai(0)`.
pub const AI0: f64 = 0.355_028_053_887_817_239_26;
/// `-Ai'(0)`.
pub const MINUS_AIP0: f64 = 0.258_819_403_792_806_798_41;
const SQRT3: f64 = 1.732_050_807_568_877_293_5;
/// Largest zero index accepted by [`airy_zero`].
pub const MAX_ZERO_INDEX: usize = 100_000;

/// `Ai`, `Bi` and their derivatives at one point.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct AiryPair {
    pub ai: f64,
    pub bi: f64,
    pub ai_prime: f64,
    pub bi_prime: f64,
}

/// Same as [`AiryPair`] with extended exponent, for large positive arguments.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledAiryPair {
    pub ai: ScaledReal,
    pub bi: ScaledReal,
    pub ai_prime: ScaledReal,
    pub bi_prime: ScaledReal,
}

/// Values with detached exponentials: `Ai = ai * e^{ai_log}` and so on.
struct Raw {
    ai: f64,
    aip: f64,
    ai_log: f64,
    bi: f64,
    bip: f64,
    bi_log: f64,
}

/// Evaluates `Ai`, `Bi`, `Ai'`, `Bi'` at `x`.
///
/// `Bi` overflows to infinity and `Ai` underflows to zero beyond roughly
/// `x = 104`; use [`airy_scaled`] there.
pub fn airy(x: f64) -> AiryPair {
    let r = raw(x);
    let (ea, eb) = (r.ai_log.exp(), r.bi_log.exp());
    AiryPair { ai: r.ai * ea, bi: r.bi * eb, ai_prime: r.aip * ea, bi_prime: r.bip * eb }
}

/// Exponent-carrying variant of [`airy`].
pub fn airy_scaled(x: f64) -> ScaledAiryPair {
    let r = raw(x);
    let ea = ScaledReal::exp(r.ai_log);
    let eb = ScaledReal::exp(r.bi_log);
    ScaledAiryPair {
        ai: ea * r.ai,
        bi: eb * r.bi,
        ai_prime: ea * r.aip,
        bi_prime: eb * r.bip,
    }
}

fn raw(x: f64) -> Raw {
    assert!(x.is_finite(), "airy called with {x}");
    if (-3.0..=2.0).contains(&x) {
        let (ai, aip, bi, bip) = maclaurin(x);
        return Raw { ai, aip, ai_log: 0.0, bi, bip, bi_log: 0.0 };
    }
    if x > 2.0 {
        let zeta = 2.0 / 3.0 * x * x.sqrt();
        let (ai, aip) = if x < 10.0 { ai_bessel_k(x, zeta) } else { ai_asymptotic(x, zeta) };
        let (bi, bip, bi_log) = if x <= 10.0 {
            let (_, _, bi, bip) = maclaurin(x);
            (bi, bip, 0.0)
        } else {
            let (bi, bip) = bi_asymptotic(x, zeta);
            (bi, bip, zeta)
        };
        return Raw { ai, aip, ai_log: -zeta, bi, bip, bi_log };
    }
    let (ai, aip, bi, bip) = if x > -9.0 { taylor_march(x) } else { oscillatory(-x) };
    Raw { ai, aip, ai_log: 0.0, bi, bip, bi_log: 0.0 }
}

/// Maclaurin series; accurate to a few ulps of `max(|Ai|, |Bi|)` on `[-3, 10]`.
fn maclaurin(x: f64) -> (f64, f64, f64, f64) {
    let x3 = x * x * x;
    let (mut f, mut g, mut fp, mut gp) = (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
    let (mut tf, mut tg, mut tfp, mut tgp) = (1.0_f64, x, 0.5 * x * x, 1.0_f64);
    let mut k = 0.0_f64;
    loop {
        f += tf;
        g += tg;
        fp += tfp;
        gp += tgp;
        let scale = f.abs() + g.abs() + fp.abs() + gp.abs() + 1e-300;
        if tf.abs() + tg.abs() + tfp.abs() + tgp.abs() <= 1e-18 * scale {
            break;
        }
        tf *= x3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0));
        tg *= x3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0));
        tfp *= x3 / ((3.0 * k + 3.0) * (3.0 * k + 5.0));
        tgp *= x3 / ((3.0 * k + 3.0) * (3.0 * k + 1.0));
        k += 1.0;
    }
    (
        AI0 * f - MINUS_AIP0 * g,
        AI0 * fp - MINUS_AIP0 * gp,
        SQRT3 * (AI0 * f + MINUS_AIP0 * g),
        SQRT3 * (AI0 * fp + MINUS_AIP0 * gp),
    )
}

/// `Ai e^{zeta}` and `Ai' e^{zeta}` from `K_{1/3}` and `K_{2/3}`.
fn ai_bessel_k(x: f64, zeta: f64) -> (f64, f64) {
    let h = (0.6 / zeta.sqrt()).min(0.25);
    let (mut k13, mut k23) = (0.5, 0.5);
    let mut j = 1.0;
    loop {
        let t = j * h;
        let w = (-zeta * (t.cosh() - 1.0)).exp();
        let a = w * (t / 3.0).cosh();
        let b = w * (2.0 * t / 3.0).cosh();
        k13 += a;
        k23 += b;
        if b < 1e-18 * k23 {
            break;
        }
        j += 1.0;
    }
    k13 *= h;
    k23 *= h;
    ((x / 3.0).sqrt() * k13 / PI, -x / (PI * SQRT3) * k23)
}

/// Coefficients `u_k`, `v_k` of the Airy asymptotic expansions.
fn uv(k: usize) -> (f64, f64) {
    let mut u = 1.0;
    for j in 1..=k {
        let j = j as f64;
        u *= (6.0 * j - 5.0) * (6.0 * j - 3.0) * (6.0 * j - 1.0) / ((2.0 * j - 1.0) * 216.0 * j);
    }
    let kf = k as f64;
    let v = if k == 0 { 1.0 } else { -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u };
    (u, v)
}

/// Sums `sum_k s^k u_k / zeta^k` and the same with `v_k`, stopping at the smallest term.
fn asym_sums(zeta: f64, alternate: bool) -> (f64, f64) {
    let (mut su, mut sv) = (0.0, 0.0);
    let mut last = f64::INFINITY;
    let mut p = 1.0;
    for k in 0..60 {
        let (u, v) = uv(k);
        let sgn = if alternate && k % 2 == 1 { -1.0 } else { 1.0 };
        let tu = sgn * u * p;
        let tv = sgn * v * p;
        if tu.abs() > last {
            break;
        }
        su += tu;
        sv += tv;
        last = tu.abs();
        if last < 1e-18 {
            break;
        }
        p /= zeta;
    }
    (su, sv)
}

fn ai_asymptotic(x: f64, zeta: f64) -> (f64, f64) {
    let (su, sv) = asym_sums(zeta, true);
    let q = x.powf(0.25);
    let c = 0.5 / PI.sqrt();
    (c * su / q, -c * q * sv)
}

fn bi_asymptotic(x: f64, zeta: f64) -> (f64, f64) {
    let (su, sv) = asym_sums(zeta, false);
    let q = x.powf(0.25);
    let c = 1.0 / PI.sqrt();
    (c * su / q, c * q * sv)
}

/// Asymptotic forms for `Ai(-z)`, `Ai'(-z)`, `Bi(-z)`, `Bi'(-z)` with `z >= 9`.
fn oscillatory(z: f64) -> (f64, f64, f64, f64) {
    let zeta = 2.0 / 3.0 * z * z.sqrt();
    let (mut ue, mut uo, mut ve, mut vo) = (0.0, 0.0, 0.0, 0.0);
    let mut p = 1.0;
    let mut last = f64::INFINITY;
    for k in 0..60 {
        let (u, v) = uv(k);
        let tu = u * p;
        if tu.abs() > last {
            break;
        }
        last = tu.abs();
        // sign pattern (-1)^{floor(k/2)} for the even and odd subseries
        let s = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            ue += s * tu;
            ve += s * v * p;
        } else {
            uo += s * tu;
            vo += s * v * p;
        }
        if last < 1e-18 {
            break;
        }
        p /= zeta;
    }
    let (sn, cs) = (zeta - FRAC_PI_4).sin_cos();
    let c = 1.0 / PI.sqrt();
    let q = z.powf(0.25);
    let ai = c / q * (cs * ue + sn * uo);
    let aip = c * q * (sn * ve - cs * vo);
    let bi = c / q * (-sn * ue + cs * uo);
    let bip = c * q * (cs * ve + sn * vo);
    (ai, aip, bi, bip)
}

/// One Taylor step of `y'' = x y` from `x0` by `h`, for a pair of solutions.
fn taylor_step(x0: f64, h: f64, y: [f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for s in 0..2 {
        let (y0, y1) = (y[2 * s], y[2 * s + 1]);
        let mut c = [0.0_f64; 80];
        c[0] = y0;
        c[1] = y1;
        c[2] = 0.5 * x0 * y0;
        let (mut val, mut der) = (y0 + y1 * h + c[2] * h * h, y1 + 2.0 * c[2] * h);
        let mut hp = h * h;
        for k in 1..77 {
            c[k + 2] = (x0 * c[k] + c[k - 1]) / (((k + 1) * (k + 2)) as f64);
            let kk = k + 2;
            der += kk as f64 * c[kk] * hp;
            hp *= h;
            let t = c[kk] * hp;
            val += t;
            if t.abs() < 1e-19 * val.abs().max(1e-300) && k > 8 {
                break;
            }
        }
        out[2 * s] = val;
        out[2 * s + 1] = der;
    }
    out
}

/// Integrates the Airy equation leftward from `x = -3`.
fn taylor_march(x: f64) -> (f64, f64, f64, f64) {
    let start = -3.0;
    let (ai, aip, bi, bip) = maclaurin(start);
    let n = ((start - x) / 0.75).ceil().max(1.0) as usize;
    let h = (x - start) / n as f64;
    let mut y = [ai, aip, bi, bip];
    for i in 0..n {
        y = taylor_step(start + i as f64 * h, h, y);
    }
    (y[0], y[1], y[2], y[3])
}

/// Asymptotic estimate of the `k`-th zero of `Ai`.
fn zero_seed(k: usize) -> f64 {
    let t = 3.0 * PI * (4.0 * k as f64 - 1.0) / 8.0;
    let t2 = t * t;
    -t.powf(2.0 / 3.0) * (1.0 + 5.0 / 48.0 / t2 - 5.0 / 36.0 / (t2 * t2))
}

/// The `k`-th zero of `Ai`, counting from the one closest to the origin.
///
/// Errors for `k = 0` or `k` above [`MAX_ZERO_INDEX`].
pub fn airy_zero(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("Airy zero index starts at 1".into()));
    }
    if k > MAX_ZERO_INDEX {
        return Err(Error::Unsupported(format!(
            "Airy zero index {k} above supported maximum {MAX_ZERO_INDEX}"
        )));
    }
    let seed = zero_seed(k);
    let ai = |x: f64| airy(x).ai;
    let (mut lo, mut hi) = if k <= 50 {
        let (lo, hi) = (seed - 0.15, seed + 0.15);
        if ai(lo).signum() == ai(hi).signum() {
            return Err(Error::NonConvergence { estimate: seed, error: 0.15 });
        }
        (lo, hi)
    } else {
        (f64::NEG_INFINITY, f64::INFINITY)
    };
    let mut x = seed;
    for _ in 0..60 {
        let p = airy(x);
        if p.ai == 0.0 {
            return Ok(x);
        }
        if lo.is_finite() {
            if p.ai.signum() == ai(lo).signum() {
                lo = x;
            } else {
                hi = x;
            }
        }
        let mut next = x - p.ai / p.ai_prime;
        if lo.is_finite() && !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let done = (next - x).abs() <= 1e-15 * x.abs();
        x = next;
        if done {
            return Ok(x);
        }
    }
    Err(Error::NonConvergence { estimate: x, error: (hi - lo).abs() })
}
