//! Exact evaluation of three-term recurrences.
//!
//! Orthonormal polynomials satisfy
//! `a1(n+1) p_{n+1} = (x - b1(n)) p_n - a1(n) p_{n-1}` with `p_0 = 1`.
//! Values are carried with a shared running binary exponent that is
//! renormalized at every step, so `N = 10^5` does not overflow.

use crate::error::{Error, Result};
use crate::numerics::ScaledReal;
use rayon::prelude::*;
use std::fmt;
use std::sync::Arc;

type CoeffFn = Arc<dyn Fn(usize) -> f64 + Send + Sync>;

/// Recurrence coefficients `a1(n) > 0` for `n >= 1` and real `b1(n)` for `n >= 0`.
#[derive(Clone)]
pub struct RecurrenceCoefficients {
    a1: CoeffFn,
    b1: CoeffFn,
    pub description: String,
}

impl fmt::Debug for RecurrenceCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RecurrenceCoefficients({})", self.description)
    }
}

impl RecurrenceCoefficients {
    pub fn new<A, B>(a1: A, b1: B, description: impl Into<String>) -> Self
    where
        A: Fn(usize) -> f64 + Send + Sync + 'static,
        B: Fn(usize) -> f64 + Send + Sync + 'static,
    {
        RecurrenceCoefficients { a1: Arc::new(a1), b1: Arc::new(b1), description: description.into() }
    }

    /// Off-diagonal coefficient; only meaningful for `n >= 1`.
    pub fn a1(&self, n: usize) -> f64 {
        (self.a1)(n)
    }

    pub fn b1(&self, n: usize) -> f64 {
        (self.b1)(n)
    }

    /// Coefficients of the recurrence in the variable `y = x / scale`.
    pub fn rescaled(&self, scale: f64) -> Self {
        let (a, b) = (self.a1.clone(), self.b1.clone());
        RecurrenceCoefficients::new(
            move |n| a(n) / scale,
            move |n| b(n) / scale,
            format!("{} / {scale}", self.description),
        )
    }

    fn check(&self, n: usize) -> Result<()> {
        let a = self.a1(n);
        if a > 0.0 && a.is_finite() {
            Ok(())
        } else {
            Err(Error::Domain(format!("{}: a1({n}) = {a} is not positive", self.description)))
        }
    }
}

/// A pair of consecutive values sharing one binary exponent.
struct Window {
    prev: f64,
    cur: f64,
    exp: i64,
}

impl Window {
    fn renormalize(&mut self) {
        let m = self.prev.abs().max(self.cur.abs());
        if m == 0.0 || !m.is_finite() {
            return;
        }
        let k = ScaledReal::from_f64(m).exponent();
        let s = ScaledReal::from_parts(1.0, -k).to_f64();
        self.prev *= s;
        self.cur *= s;
        self.exp += k;
    }

    fn value(&self) -> ScaledReal {
        ScaledReal::from_parts(self.cur, self.exp)
    }
}

/// Runs the orthonormal recurrence and hands every `p_n` to `sink`.
fn run_orthonormal(
    coeffs: &RecurrenceCoefficients,
    n_max: usize,
    x: f64,
    mut sink: impl FnMut(ScaledReal),
) -> Result<()> {
    sink(ScaledReal::ONE);
    if n_max == 0 {
        return Ok(());
    }
    coeffs.check(1)?;
    let mut w = Window { prev: 1.0, cur: (x - coeffs.b1(0)) / coeffs.a1(1), exp: 0 };
    sink(w.value());
    for n in 1..n_max {
        coeffs.check(n + 1)?;
        let next = ((x - coeffs.b1(n)) * w.cur - coeffs.a1(n) * w.prev) / coeffs.a1(n + 1);
        w.prev = w.cur;
        w.cur = next;
        w.renormalize();
        sink(w.value());
    }
    Ok(())
}

/// `p_0, ..., p_N` of the orthonormal recurrence at `x`.
pub fn eval_orthonormal(coeffs: &RecurrenceCoefficients, n: usize, x: f64) -> Result<Vec<ScaledReal>> {
    let mut out = Vec::with_capacity(n + 1);
    run_orthonormal(coeffs, n, x, |v| out.push(v))?;
    Ok(out)
}

/// `p_N` alone, without storing the sequence.
pub fn eval_orthonormal_at(coeffs: &RecurrenceCoefficients, n: usize, x: f64) -> Result<ScaledReal> {
    let mut last = ScaledReal::ONE;
    run_orthonormal(coeffs, n, x, |v| last = v)?;
    Ok(last)
}

/// The sequence with `tp_0 = 1`, `tp_1 = 2 (y - b1(0))` and
/// `tp_{n+1} = 2 (y - b1(n)) tp_n - 4 a1(n)^2 tp_{n-1}`.
///
/// `coeffs` must already be in the scaled variable, i.e. `a1(n)` stands for
/// `a1(n eps, eps)`.
pub fn eval_monic_tilde(coeffs: &RecurrenceCoefficients, n: usize, y: f64) -> Result<Vec<ScaledReal>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(ScaledReal::ONE);
    if n == 0 {
        return Ok(out);
    }
    let mut w = Window { prev: 1.0, cur: 2.0 * (y - coeffs.b1(0)), exp: 0 };
    out.push(w.value());
    for k in 1..n {
        coeffs.check(k)?;
        let a = coeffs.a1(k);
        let next = 2.0 * (y - coeffs.b1(k)) * w.cur - 4.0 * a * a * w.prev;
        w.prev = w.cur;
        w.cur = next;
        w.renormalize();
        out.push(w.value());
    }
    Ok(out)
}

/// Leading coefficient `k_n = 1 / prod_{i<=n} a1(i)` of the orthonormal `p_n`.
pub fn leading_coefficient(coeffs: &RecurrenceCoefficients, n: usize) -> ScaledReal {
    (1..=n).fold(ScaledReal::ONE, |acc, i| acc / coeffs.a1(i))
}

/// Number of eigenvalues below `x` of the leading `n x n` Jacobi matrix.
///
/// Uses the `LDL^T` pivot signs; exact zero pivots are replaced by a tiny
/// negative number.
pub fn sturm_count(coeffs: &RecurrenceCoefficients, n: usize, x: f64) -> usize {
    let pivmin = f64::MIN_POSITIVE * 1e3;
    let mut count = 0;
    let mut d = coeffs.b1(0) - x;
    for i in 0..n {
        if i > 0 {
            let a = coeffs.a1(i);
            d = coeffs.b1(i) - x - a * a / d;
        }
        if d == 0.0 || d.abs() < pivmin {
            d = -pivmin;
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

fn gershgorin(coeffs: &RecurrenceCoefficients, n: usize) -> (f64, f64) {
    let (mut bmin, mut bmax, mut amax) = (f64::INFINITY, f64::NEG_INFINITY, 0.0_f64);
    for i in 0..n {
        bmin = bmin.min(coeffs.b1(i));
        bmax = bmax.max(coeffs.b1(i));
        if i >= 1 {
            amax = amax.max(coeffs.a1(i));
        }
    }
    (bmin - 2.0 * amax, bmax + 2.0 * amax)
}

fn bisect_index(coeffs: &RecurrenceCoefficients, n: usize, k: usize, lo: f64, hi: f64, tol: f64) -> f64 {
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(coeffs, n, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

fn bracket(coeffs: &RecurrenceCoefficients, n: usize) -> Result<(f64, f64, f64)> {
    if n == 0 {
        return Err(Error::Domain("polynomial_zeros needs N >= 1".into()));
    }
    for i in 1..n {
        coeffs.check(i)?;
    }
    let (lo, hi) = gershgorin(coeffs, n);
    let scale = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
    Ok((lo, hi, 4.0 * f64::EPSILON * scale))
}

/// The `N` zeros of `p_N` in ascending order, by Sturm-count bisection.
pub fn polynomial_zeros(coeffs: &RecurrenceCoefficients, n: usize) -> Result<Vec<f64>> {
    let (lo, hi, tol) = bracket(coeffs, n)?;
    Ok((0..n).into_par_iter().map(|k| bisect_index(coeffs, n, k, lo, hi, tol)).collect())
}

/// The zero of `p_N` with ascending index `k` (0-based).
pub fn polynomial_zero(coeffs: &RecurrenceCoefficients, n: usize, k: usize) -> Result<f64> {
    if k >= n {
        return Err(Error::Domain(format!("zero index {k} out of range for N = {n}")));
    }
    let (lo, hi, tol) = bracket(coeffs, n)?;
    Ok(bisect_index(coeffs, n, k, lo, hi, tol))
}

/// Gauss rule `(node, weight)` with Christoffel weights `1 / sum_{j<N} p_j(x)^2`.
pub fn gauss_rule(coeffs: &RecurrenceCoefficients, n: usize) -> Result<Vec<(f64, f64)>> {
    polynomial_zeros(coeffs, n)?
        .into_iter()
        .map(|x| {
            let ps = eval_orthonormal(coeffs, n - 1, x)?;
            let s: f64 = ps.iter().map(|p| p.to_f64().powi(2)).sum();
            Ok((x, 1.0 / s))
        })
        .collect()
}

/// Discrete Wronskian `a1(n eps, eps) (u_n v_{n-1} - u_{n-1} v_n)`.
pub fn casorati(
    u: &[ScaledReal],
    v: &[ScaledReal],
    a1: impl Fn(f64, f64) -> f64,
    eps: f64,
    n: usize,
) -> Result<ScaledReal> {
    if n == 0 || n >= u.len() || n >= v.len() {
        return Err(Error::Domain(format!("casorati index {n} outside sequences")));
    }
    Ok((u[n] * v[n - 1] - u[n - 1] * v[n]) * a1(n as f64 * eps, eps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hermite() -> RecurrenceCoefficients {
        RecurrenceCoefficients::new(|n| (n as f64 / 2.0).sqrt(), |_| 0.0, "hermite")
    }

    #[test]
    fn first_steps() {
        let p = eval_orthonormal(&hermite(), 2, 0.3).unwrap();
        assert_eq!(p[0], ScaledReal::ONE);
        assert!((p[1].to_f64() - 2f64.sqrt() * 0.3).abs() < 1e-15);
        assert!((p[2].to_f64() - (2f64.sqrt() * 0.09 - 1.0 / 2f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn zeros_small_cases() {
        let z = polynomial_zeros(&hermite(), 3).unwrap();
        let r = 1.5f64.sqrt();
        assert!((z[0] + r).abs() < 1e-11 && z[1].abs() < 1e-11 && (z[2] - r).abs() < 1e-11);
    }

    #[test]
    fn nonpositive_a1_is_rejected() {
        let c = RecurrenceCoefficients::new(|_| 0.0, |_| 0.0, "degenerate");
        assert!(eval_orthonormal(&c, 3, 0.0).is_err());
    }
}
