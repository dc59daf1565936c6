//! Pre-Schwarzian criteria for the image to be a radial John disk.
//!
//! With `k = (K-1)/(K+1)`:
//!
//! * (a) `limsup (1-|z|^2) Re(z P_f(z)) < 1 + k`
//! * (b) `limsup (1-|z|^2) |T_h(z)| < 2`, `h` univalent
//! * corollary: `sup (1-|z|^2) |T_h(z)| < 2`, `h` univalent
//!
//! The limsup is proxied by the largest per-radius maximum over the last
//! three rungs of the radius ladder.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::map::HarmonicMap;
use crate::par;
use crate::series::Complex;

use super::report::{CriterionReport, Quantity, ReportValue, Verdict};
use super::{qc_grid, AnalysisParams};

/// Above this `K`, `k > 1/2` and criterion (a) is evaluated with a warning.
pub const K_WARN_THRESHOLD: f64 = 3.0;

const TAIL_RUNGS: usize = 3;
const MIN_RUNGS: usize = 6;

fn check_radii(map: &HarmonicMap, radii: &[f64]) -> Result<()> {
    if radii.len() < MIN_RUNGS {
        return Err(Error::InvalidParameter(format!(
            "limsup criteria need at least {MIN_RUNGS} radii, got {}",
            radii.len()
        )));
    }
    let cap = map.reliable_radius().min(1.0 - 1e-15);
    if radii.windows(2).any(|w| w[1] <= w[0]) || radii[0] <= 0.0 || radii[radii.len() - 1] > cap {
        return Err(Error::InvalidParameter(format!(
            "radii must increase inside (0, {cap}]"
        )));
    }
    Ok(())
}

/// `max_theta weight(r e^{i theta})` for each radius.
fn radial_maxima<F>(radii: &[f64], n_theta: usize, weight: F) -> Result<Vec<(f64, f64)>>
where
    F: Fn(Complex) -> Result<f64> + Sync + Send,
{
    let mut curve = Vec::with_capacity(radii.len());
    for &r in radii {
        let zs: Vec<Complex> = (0..n_theta)
            .map(|j| Complex::from_polar(r, TAU * j as f64 / n_theta as f64))
            .collect();
        let vals = par::try_map(&zs, |&z| weight(z))?;
        curve.push((r, par::max(&vals)));
    }
    Ok(curve)
}

fn tail_max(curve: &[(f64, f64)]) -> f64 {
    let tail: Vec<f64> = curve[curve.len() - TAIL_RUNGS..].iter().map(|p| p.1).collect();
    par::max(&tail)
}

fn sufficient(value: f64, threshold: f64, margin: f64) -> Verdict {
    if value < threshold - margin {
        Verdict::SufficientConditionMet
    } else {
        Verdict::Inconclusive
    }
}

/// Criterion (a). `K` comes from `claimed_K` or the grid estimate.
pub fn limsup_criterion_a(map: &HarmonicMap, radii: &[f64], params: &AnalysisParams) -> Result<CriterionReport> {
    map.require_sh0()?;
    check_radii(map, radii)?;
    let (k_big, k_source) = match map.claimed_k() {
        Some(k) => (k, "claimed"),
        None => (map.qc_constant_estimate(&qc_grid(map).points())?, "grid_estimate"),
    };
    let k = (k_big - 1.0) / (k_big + 1.0);
    let curve = radial_maxima(radii, params.n_theta, |z| {
        let p = map.pre_schwarzian(z)?;
        Ok((1.0 - z.norm_sqr()) * (z * p).re)
    })?;
    let value = tail_max(&curve);
    let threshold = 1.0 + k;
    let mut report = CriterionReport::new(
        map.name(),
        Quantity::LimsupA,
        ReportValue::Scalar(value),
        sufficient(value, threshold, params.margin),
    )
    .param("K", k_big)
    .param("K_source", k_source)
    .param("k", k)
    .param("margin", params.margin)
    .param("n_theta", params.n_theta)
    .param("rungs", radii.len())
    .param("r_last", radii[radii.len() - 1]);
    if k_big > K_WARN_THRESHOLD {
        report.warnings.push(format!(
            "K = {k_big} > 3, so k > 1/2; criterion (a) evaluated with threshold 1 + k anyway"
        ));
    }
    report.threshold = Some(threshold);
    report.curve = curve;
    Ok(report)
}

/// Univalence of `h` gates (b) and the corollary. `Some(false)` yields an
/// inconclusive report rather than an error.
fn h_univalence(map: &HarmonicMap) -> Result<bool> {
    map.h_univalent()
        .ok_or_else(|| Error::HUnivalenceUnknown(map.name().to_string()))
}

pub fn limsup_criterion_b(map: &HarmonicMap, radii: &[f64], params: &AnalysisParams) -> Result<CriterionReport> {
    map.require_sh0()?;
    let univalent = h_univalence(map)?;
    check_radii(map, radii)?;
    let curve = radial_maxima(radii, params.n_theta, |z| {
        Ok((1.0 - z.norm_sqr()) * map.analytic_pre_schwarzian(z)?.norm())
    })?;
    let value = tail_max(&curve);
    let threshold = 2.0;
    let verdict = if univalent {
        sufficient(value, threshold, params.margin)
    } else {
        Verdict::Inconclusive
    };
    let mut report = CriterionReport::new(map.name(), Quantity::LimsupB, ReportValue::Scalar(value), verdict)
        .param("margin", params.margin)
        .param("n_theta", params.n_theta)
        .param("rungs", radii.len())
        .param("r_last", radii[radii.len() - 1]);
    if !univalent {
        report
            .warnings
            .push("h is not univalent; criterion (b) does not apply".into());
    }
    report.threshold = Some(threshold);
    report.curve = curve;
    Ok(report)
}

/// Global supremum of `(1-|z|^2) |T_h(z)|` over `grid`.
pub fn sup_criterion_corollary(
    map: &HarmonicMap,
    grid: &[Complex],
    params: &AnalysisParams,
) -> Result<CriterionReport> {
    map.require_sh0()?;
    let univalent = h_univalence(map)?;
    if grid.is_empty() {
        return Err(Error::InvalidParameter("empty grid".into()));
    }
    let vals = par::try_map(grid, |&z| {
        Ok::<f64, Error>((1.0 - z.norm_sqr()) * map.analytic_pre_schwarzian(z)?.norm())
    })?;
    let (at, value) = par::argmax(&vals).expect("grid is non-empty");
    let threshold = 2.0;
    let verdict = if univalent {
        sufficient(value, threshold, params.margin)
    } else {
        Verdict::Inconclusive
    };
    let mut report = CriterionReport::new(map.name(), Quantity::SupCorollary, ReportValue::Scalar(value), verdict)
        .param("margin", params.margin)
        .param("grid_points", grid.len())
        .param("argmax_re", grid[at].re)
        .param("argmax_im", grid[at].im);
    if !univalent {
        report
            .warnings
            .push("h is not univalent; the corollary does not apply".into());
    }
    report.threshold = Some(threshold);
    Ok(report)
}
