//! Pointwise inequalities that every map of the class satisfies.
//!
//! * Schwarz-Pick for the dilatation: `|omega'| <= (1-|omega|^2)/(1-|z|^2)`
//! * `|omega| <= k = (K-1)/(K+1)`
//! * `(2/(1+K)) |h'| <= ||D_f|| <= (2K/(1+K)) |h'|`
//! * distance lower bound: `d(f(z)) >= ||D_f(z)|| (1-|z|^2) / (16 K)`

use crate::error::{Error, Result};
use crate::map::HarmonicMap;
use crate::par;
use crate::series::Complex;

use super::domain::DomainApprox;
use super::report::{CriterionReport, Quantity, ReportValue, Verdict};
use super::AnalysisParams;

const SCHWARZ_PICK_SLACK: f64 = 1e-10;
const DILATATION_SLACK: f64 = 1e-10;
const SANDWICH_SLACK: f64 = 1e-12;

fn holds(ok: bool) -> Verdict {
    if ok {
        Verdict::SufficientConditionMet
    } else {
        Verdict::Violated
    }
}

fn first_failure(grid: &[Complex], slack: &[f64]) -> Option<Complex> {
    slack.iter().position(|&s| s < 0.0).map(|i| grid[i])
}

fn finish(mut report: CriterionReport, grid: &[Complex], slack: &[f64]) -> CriterionReport {
    if let Some(z) = first_failure(grid, slack) {
        report
            .warnings
            .push(format!("first failure at z = {} + {}i", z.re, z.im));
    }
    report.param("grid_points", grid.len())
}

/// Value is the smallest slack `rhs - lhs` over the grid.
pub fn schwarz_pick_check(map: &HarmonicMap, grid: &[Complex]) -> Result<CriterionReport> {
    let slack = par::try_map(grid, |&z| {
        let w = map.dilatation(z)?;
        let dw = map.dilatation_derivative(z)?;
        Ok::<f64, Error>((1.0 - w.norm_sqr()) / (1.0 - z.norm_sqr()) + SCHWARZ_PICK_SLACK - dw.norm())
    })?;
    let min = par::min(&slack);
    let r = CriterionReport::new(
        map.name(),
        Quantity::SchwarzPick,
        ReportValue::Scalar(min),
        holds(min >= 0.0),
    );
    Ok(finish(r, grid, &slack))
}

fn k_for(map: &HarmonicMap, grid: &[Complex]) -> Result<(f64, &'static str)> {
    Ok(match map.claimed_k() {
        Some(k) => (k, "claimed"),
        None => (map.qc_constant_estimate(grid)?, "grid_estimate"),
    })
}

pub fn dilatation_bound_check(map: &HarmonicMap, grid: &[Complex]) -> Result<CriterionReport> {
    let (k_big, src) = k_for(map, grid)?;
    let k = (k_big - 1.0) / (k_big + 1.0);
    let slack = par::try_map(grid, |&z| {
        Ok::<f64, Error>(k + DILATATION_SLACK - map.dilatation(z)?.norm())
    })?;
    let min = par::min(&slack);
    let r = CriterionReport::new(
        map.name(),
        Quantity::DilatationBound,
        ReportValue::Scalar(min),
        holds(min >= 0.0),
    )
    .param("K", k_big)
    .param("K_source", src);
    Ok(finish(r, grid, &slack))
}

pub fn sandwich_check(map: &HarmonicMap, grid: &[Complex]) -> Result<CriterionReport> {
    let (k_big, src) = k_for(map, grid)?;
    let lo = 2.0 / (1.0 + k_big);
    let hi = 2.0 * k_big / (1.0 + k_big);
    let slack = par::map(grid, |&z| {
        let a = map.h_jet(z).d1.norm();
        let d = map.dnorm(z);
        (d - lo * a).min(hi * a + SANDWICH_SLACK - d)
    });
    let min = par::min(&slack);
    let r = CriterionReport::new(
        map.name(),
        Quantity::DilatationSandwich,
        ReportValue::Scalar(min),
        holds(min >= 0.0),
    )
    .param("K", k_big)
    .param("K_source", src);
    Ok(finish(r, grid, &slack))
}

/// Distance lower bound on the sampled domain `f(r_b D)`.
///
/// The domain is the image of `D` under `F(zeta) = f(r_b zeta)`, for which
/// `||D_F(zeta)|| (1-|zeta|^2) = ||D_f(z)|| (r_b^2 - |z|^2) / r_b`. This is the
/// bound checked, with `tol_geom` absorbing polyline discretization. The
/// report value is the smallest ratio `d / bound`; the smallest ratio against
/// the unscaled `||D_f(z)|| (1-|z|^2) / (16K)` is recorded as `min_ratio_unscaled`.
pub fn lemma_d_check(
    map: &HarmonicMap,
    dom: &DomainApprox,
    grid: &[Complex],
    params: &AnalysisParams,
) -> Result<CriterionReport> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("empty grid".into()));
    }
    let r_b = dom.r_b();
    if let Some(z) = grid.iter().find(|z| z.norm() >= r_b) {
        return Err(Error::InvalidParameter(format!("grid point {z} outside r_b = {r_b}")));
    }
    let (k_big, src) = k_for(map, grid)?;
    let rows = par::try_map(grid, |&z| {
        let d = dom.checked_distance(map.value(z))?;
        let scale = map.dnorm(z) / (16.0 * k_big);
        let bound = scale * (r_b * r_b - z.norm_sqr()) / r_b;
        let unscaled = scale * (1.0 - z.norm_sqr());
        Ok::<(f64, f64, f64), Error>((d, bound, unscaled))
    })?;
    let slack: Vec<f64> = rows.iter().map(|&(d, b, _)| d - b + params.tol_geom).collect();
    let ratios: Vec<f64> = rows.iter().map(|&(d, b, _)| d / b).collect();
    let unscaled: Vec<f64> = rows.iter().map(|&(d, _, u)| d / u).collect();
    let min_slack = par::min(&slack);
    let r = CriterionReport::new(
        map.name(),
        Quantity::LemmaD,
        ReportValue::Scalar(par::min(&ratios)),
        holds(min_slack >= 0.0),
    )
    .param("K", k_big)
    .param("K_source", src)
    .param("r_b", r_b)
    .param("boundary_m", dom.boundary().len())
    .param("tol_geom", params.tol_geom)
    .param("min_ratio_unscaled", par::min(&unscaled));
    Ok(finish(r, grid, &slack))
}
