//! Globally adaptive Gauss-Legendre quadrature with endpoint substitutions.

use crate::error::{Error, Result};
use std::collections::BinaryHeap;
use std::sync::OnceLock;

/// Behavior of the integrand at an endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EndpointSingularity {
    #[default]
    None,
    /// Square-root type behavior at `lo`; handled by `u = lo + v^2`.
    SqrtLeft,
    /// Square-root type behavior at `hi`; handled by `u = hi - v^2`.
    SqrtRight,
}

/// Tolerances and limits for [`integrate`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    pub endpoint_singularity: EndpointSingularity,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 2000,
            endpoint_singularity: EndpointSingularity::None,
        }
    }
}

impl QuadratureSpec {
    pub fn with_tol(abs_tol: f64, rel_tol: f64) -> Self {
        QuadratureSpec { abs_tol, rel_tol, ..Default::default() }
    }

    pub fn singularity(mut self, s: EndpointSingularity) -> Self {
        self.endpoint_singularity = s;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0 && self.max_subdivisions >= 1) {
            return Err(Error::Domain(format!("invalid quadrature spec {self:?}")));
        }
        Ok(())
    }
}

/// Nodes and weights of the 15-point Gauss-Legendre rule on `[-1, 1]`.
fn gl15() -> &'static [(f64, f64); 15] {
    static RULE: OnceLock<[(f64, f64); 15]> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = 15;
        let mut rule = [(0.0, 0.0); 15];
        for (i, slot) in rule.iter_mut().enumerate() {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            *slot = (x, 2.0 / ((1.0 - x * x) * dp * dp));
        }
        rule
    })
}

fn panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
    h * gl15().iter().map(|&(x, w)| w * f(c + h * x)).sum::<f64>()
}

struct Segment {
    a: f64,
    b: f64,
    left: f64,
    right: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Segment {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&o.err)
    }
}

fn segment<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64) -> Segment {
    let m = 0.5 * (a + b);
    let (left, right) = (panel(f, a, m), panel(f, m, b));
    Segment { a, b, left, right, err: (whole - left - right).abs() }
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, spec: &QuadratureSpec) -> Result<f64> {
    let whole = panel(f, lo, hi);
    let mut heap = BinaryHeap::new();
    heap.push(segment(f, lo, hi, whole));
    let mut splits = 0;
    loop {
        let (mut total, mut err) = (0.0, 0.0);
        for s in heap.iter() {
            total += s.left + s.right;
            err += s.err;
        }
        if !total.is_finite() || err.is_nan() {
            return Err(Error::Domain(format!("non-finite integrand on [{lo}, {hi}]")));
        }
        if err <= spec.abs_tol.max(spec.rel_tol * total.abs()) {
            return Ok(total);
        }
        if splits >= spec.max_subdivisions {
            return Err(Error::NonConvergence { estimate: total, error: err });
        }
        let s = heap.pop().expect("heap never empty");
        let m = 0.5 * (s.a + s.b);
        if m <= s.a || m >= s.b {
            // interval exhausted at machine resolution; accept what we have
            heap.push(Segment { err: 0.0, ..s });
            splits += 1;
            continue;
        }
        heap.push(segment(f, s.a, m, s.left));
        heap.push(segment(f, m, s.b, s.right));
        splits += 1;
    }
}

/// Integrates `f` over `[lo, hi]` to within `max(abs_tol, rel_tol |I|)`.
///
/// With a square-root endpoint singularity the variable is changed to
/// `u = endpoint ± v^2` first, which also removes inverse square-root
/// singularities. Returns `NonConvergence` with the best estimate when the
/// subdivision budget runs out. An empty interval integrates to zero.
pub fn integrate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, spec: QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    if !(lo.is_finite() && hi.is_finite()) || lo > hi {
        return Err(Error::Domain(format!("bad integration interval [{lo}, {hi}]")));
    }
    if lo == hi {
        return Ok(0.0);
    }
    let len = hi - lo;
    match spec.endpoint_singularity {
        EndpointSingularity::None => adaptive(&f, lo, hi, &spec),
        EndpointSingularity::SqrtLeft => {
            let g = |v: f64| 2.0 * v * f((lo + v * v).min(hi));
            adaptive(&g, 0.0, len.sqrt(), &spec)
        }
        EndpointSingularity::SqrtRight => {
            let g = |v: f64| 2.0 * v * f((hi - v * v).max(lo));
            adaptive(&g, 0.0, len.sqrt(), &spec)
        }
    }
}

/// Integrates with square-root singularities at both endpoints by splitting at the midpoint.
pub fn integrate_sqrt_both<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, spec: QuadratureSpec) -> Result<f64> {
    let mid = 0.5 * (lo + hi);
    let half = QuadratureSpec { abs_tol: 0.5 * spec.abs_tol, ..spec };
    let l = integrate(&f, lo, mid, half.singularity(EndpointSingularity::SqrtLeft))?;
    let r = integrate(&f, mid, hi, half.singularity(EndpointSingularity::SqrtRight))?;
    Ok(l + r)
}

/// Integral of `f` over the `d`-long piece next to `anchor`, on the side
/// given by `dir`, mapped by `u = anchor + dir d e^{-s}` and summed in panels
/// of `s` until a panel contributes less than the absolute tolerance.
fn exp_tail<F: Fn(f64) -> f64>(f: &F, anchor: f64, d: f64, dir: f64, spec: QuadratureSpec) -> Result<f64> {
    let plain = QuadratureSpec { endpoint_singularity: EndpointSingularity::None, ..spec };
    let g = |s: f64| {
        let w = d * (-s).exp();
        let u = anchor + dir * w;
        if w == 0.0 || u == anchor {
            0.0
        } else {
            f(u) * w
        }
    };
    let width = 4.0;
    let mut total = 0.0;
    for k in 0..200 {
        let s0 = k as f64 * width;
        let part = integrate(g, s0, s0 + width, QuadratureSpec { abs_tol: 0.1 * spec.abs_tol, ..plain })?;
        total += part;
        if part.abs() < 0.01 * spec.abs_tol && k >= 2 {
            return Ok(total);
        }
    }
    Err(Error::NonConvergence { estimate: total, error: spec.abs_tol })
}

/// Integrates `f` with an integrable logarithmic or algebraic singularity at `lo`.
///
/// The half `[lo, (lo + hi) / 2]` is mapped exponentially onto a half line.
pub fn integrate_log_left<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, spec: QuadratureSpec) -> Result<f64> {
    if lo == hi {
        return Ok(0.0);
    }
    let d = 0.5 * (hi - lo);
    let plain = QuadratureSpec { endpoint_singularity: EndpointSingularity::None, ..spec };
    Ok(integrate(&f, lo + d, hi, plain)? + exp_tail(&f, lo, d, 1.0, spec)?)
}

/// Treatment of one endpoint in [`integrate_endpoints`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndpointKind {
    Regular,
    /// Square-root or inverse square-root behavior; `u = end ± v^2`.
    Sqrt,
    /// Logarithmic or any integrable power behavior; exponential map onto a half line.
    /// Accurate only when the endpoint is zero or the integrand is insensitive
    /// to rounding of `u` near the endpoint.
    Log,
}

/// Integrates over `[lo, hi]` with a separate substitution on each half.
pub fn integrate_endpoints<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    left: EndpointKind,
    right: EndpointKind,
    spec: QuadratureSpec,
) -> Result<f64> {
    if !(lo.is_finite() && hi.is_finite()) || lo > hi {
        return Err(Error::Domain(format!("bad integration interval [{lo}, {hi}]")));
    }
    if lo == hi {
        return Ok(0.0);
    }
    let mid = 0.5 * (lo + hi);
    let half = QuadratureSpec { abs_tol: 0.5 * spec.abs_tol, endpoint_singularity: EndpointSingularity::None, ..spec };
    let l = match left {
        EndpointKind::Regular => integrate(&f, lo, mid, half)?,
        EndpointKind::Sqrt => integrate(&f, lo, mid, half.singularity(EndpointSingularity::SqrtLeft))?,
        EndpointKind::Log => exp_tail(&f, lo, mid - lo, 1.0, half)?,
    };
    let r = match right {
        EndpointKind::Regular => integrate(&f, mid, hi, half)?,
        EndpointKind::Sqrt => integrate(&f, mid, hi, half.singularity(EndpointSingularity::SqrtRight))?,
        EndpointKind::Log => exp_tail(&f, hi, hi - mid, -1.0, half)?,
    };
    Ok(l + r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl15_integrates_degree_29_exactly() {
        let s: f64 = gl15().iter().map(|&(x, w)| w * x.powi(28)).sum();
        assert!((s - 2.0 / 29.0).abs() < 1e-15);
        let w: f64 = gl15().iter().map(|p| p.1).sum();
        assert!((w - 2.0).abs() < 1e-15);
    }

    #[test]
    fn linear_and_sqrt() {
        let spec = QuadratureSpec::default();
        assert!((integrate(|u| u, 0.0, 1.0, spec).unwrap() - 0.5).abs() < 1e-12);
        let s = spec.singularity(EndpointSingularity::SqrtLeft);
        assert!((integrate(f64::sqrt, 0.0, 1.0, s).unwrap() - 2.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn budget_exhaustion_reports_estimate() {
        let spec = QuadratureSpec { max_subdivisions: 1, abs_tol: 1e-15, rel_tol: 1e-15, ..Default::default() };
        match integrate(|u: f64| (1.0 / u).sin(), 1e-3, 1.0, spec) {
            Err(Error::NonConvergence { estimate, error }) => {
                assert!(estimate.is_finite() && error > 0.0);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn log_singularity() {
        let v = integrate_log_left(f64::ln, 0.0, 1.0, QuadratureSpec::default()).unwrap();
        assert!((v + 1.0).abs() < 1e-10);
    }
}
