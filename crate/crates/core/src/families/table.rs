//! Asymptotic-versus-recurrence error tables with a fitted decay rate.

use super::{airy_parts, asym_airy, asym_oscillatory_band, asym_outer, band_parts, FamilySpec};
use crate::error::{Error, Result};
use crate::langer::{Edge, ModelCase};
use crate::numerics::{airy_scaled, ScaledReal};
use crate::recurrence::eval_orthonormal_at;
use rayon::prelude::*;
use serde::Serialize;
use std::str::FromStr;

/// Region whose evaluator a table exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    Outer,
    AiryPlus,
    AiryMinus,
    Band,
    Saturated,
}

impl FromStr for Region {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "outer" => Ok(Region::Outer),
            "airy-plus" => Ok(Region::AiryPlus),
            "airy-minus" => Ok(Region::AiryMinus),
            "band" => Ok(Region::Band),
            "saturated" => Ok(Region::Saturated),
            _ => Err(Error::Usage(format!(
                "unknown region '{s}' (expected outer, airy-plus, airy-minus, band or saturated)"
            ))),
        }
    }
}

/// One `(N, y)` cell.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ErrorRow {
    pub n: usize,
    pub y: f64,
    pub exact: ScaledReal,
    pub asym: ScaledReal,
    /// `|asym - exact|` over the local size of the function: `|exact|` where
    /// it does not oscillate, the oscillation envelope where it does.
    pub rel_dev: f64,
}

/// Rows sorted by `(N, y)` and the least-squares slope of `ln rel_dev` against `ln N`.
#[derive(Clone, Debug, Serialize)]
pub struct ErrorTable {
    pub family: String,
    pub region: Region,
    pub rows: Vec<ErrorRow>,
    /// NaN with fewer than two usable `N`.
    pub slope: f64,
    /// NaN with fewer than three usable `N`.
    pub slope_stderr: f64,
    /// `max N rel_dev` over the rows.
    pub max_scaled_dev: f64,
}

/// Family value `normalization * p_N(lambda_N y)` from the recurrence.
pub fn exact_value(spec: &FamilySpec, n: usize, y: f64) -> Result<ScaledReal> {
    let p = eval_orthonormal_at(&spec.coefficients(), n, spec.lambda_n(n) * y)?;
    Ok(p * spec.normalization)
}

/// Asymptotic value for a region, checking that `y` belongs to it.
pub fn region_value(spec: &FamilySpec, region: Region, n: usize, y: f64) -> Result<ScaledReal> {
    let case3 = spec.model.case() == ModelCase::Case3;
    let lower = spec.edge(Edge::Minus);
    match region {
        Region::Outer => asym_outer(spec, n, y),
        Region::AiryPlus => asym_airy(spec, n, y, Edge::Plus),
        Region::AiryMinus => asym_airy(spec, n, y, Edge::Minus),
        Region::Band | Region::Saturated if !case3 => {
            Err(Error::Usage(format!("{} has no {region:?} region", spec.name())))
        }
        Region::Band if y <= lower => Err(Error::Domain(format!("y = {y} lies below the band"))),
        Region::Saturated if y >= lower => Err(Error::Domain(format!("y = {y} lies above the saturated region"))),
        Region::Band | Region::Saturated => asym_oscillatory_band(spec, n, y),
    }
}

/// Local size used to normalize deviations, see [`ErrorRow::rel_dev`].
pub fn local_scale(spec: &FamilySpec, region: Region, n: usize, y: f64, exact: ScaledReal) -> Result<ScaledReal> {
    let case3 = spec.model.case() == ModelCase::Case3;
    let airy = |edge: Edge| -> Result<ScaledReal> {
        let p = airy_parts(spec, n, y, edge)?;
        if p.arg >= 0.0 {
            return Ok(exact.abs());
        }
        let v = airy_scaled(p.arg);
        Ok(p.prefactor.abs() * (v.ai * v.ai + v.bi * v.bi).sqrt())
    };
    match region {
        Region::Outer => Ok(exact.abs()),
        Region::AiryPlus => airy(Edge::Plus),
        Region::AiryMinus if !case3 => airy(Edge::Minus),
        Region::AiryMinus | Region::Band | Region::Saturated => Ok(band_parts(spec, n, y)?.envelope()),
    }
}

/// Evaluates every `(N, y)` cell in parallel and fits the decay rate.
pub fn build_error_table(spec: &FamilySpec, ns: &[usize], ys: &[f64], region: Region) -> Result<ErrorTable> {
    let cells: Vec<(usize, f64)> = ns.iter().flat_map(|&n| ys.iter().map(move |&y| (n, y))).collect();
    let mut rows = cells
        .par_iter()
        .map(|&(n, y)| {
            let exact = exact_value(spec, n, y)?;
            let asym = region_value(spec, region, n, y)?;
            let scale = local_scale(spec, region, n, y, exact)?;
            let rel_dev = ((asym - exact) / scale).to_f64().abs();
            Ok(ErrorRow { n, y, exact, asym, rel_dev })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.n.cmp(&b.n).then(a.y.total_cmp(&b.y)));
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.rel_dev)).collect();
    let (slope, slope_stderr) = fit_slope(&pts);
    let max_scaled_dev = rows.iter().map(|r| r.n as f64 * r.rel_dev).fold(0.0, f64::max);
    Ok(ErrorTable { family: spec.name().to_string(), region, rows, slope, slope_stderr, max_scaled_dev })
}

/// Slope and standard error of `ln r` against `ln N`, after averaging `ln r`
/// over points sharing the same `N`. Non-positive `r` are skipped.
pub fn fit_slope(points: &[(f64, f64)]) -> (f64, f64) {
    let mut groups: Vec<(f64, f64, usize)> = Vec::new();
    for &(n, r) in points {
        if !(r > 0.0 && r.is_finite() && n > 0.0) {
            continue;
        }
        match groups.iter_mut().find(|g| g.0 == n) {
            Some(g) => {
                g.1 += r.ln();
                g.2 += 1;
            }
            None => groups.push((n, r.ln(), 1)),
        }
    }
    let xy: Vec<(f64, f64)> = groups.iter().map(|&(n, s, k)| (n.ln(), s / k as f64)).collect();
    let m = xy.len();
    if m < 2 {
        return (f64::NAN, f64::NAN);
    }
    let mf = m as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / mf;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / mf;
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    if m < 3 {
        return (slope, f64::NAN);
    }
    let ssr: f64 = xy.iter().map(|p| (p.1 - my - slope * (p.0 - mx)).powi(2)).sum();
    (slope, (ssr / (mf - 2.0) / sxx).sqrt())
}
