//! Least-squares and upper-envelope fits.

use crate::error::{Error, Result};
use crate::hyperbolic::{arc_length_i, BoxSpec};
use crate::map::{HarmonicMap, PolarGrid};
use crate::par;
use crate::series::Complex;

use super::domain::DomainApprox;
use super::john::image_diameter;
use super::AnalysisParams;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
}

/// Ordinary least squares `y = intercept + slope x`. Needs two distinct `x`.
pub fn least_squares(xs: &[f64], ys: &[f64]) -> Option<LineFit> {
    let n = xs.len();
    if n < 2 || ys.len() != n {
        return None;
    }
    let mx = xs.iter().sum::<f64>() / n as f64;
    let my = ys.iter().sum::<f64>() / n as f64;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx <= 0.0 {
        return None;
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    Some(LineFit {
        slope,
        intercept: my - slope * mx,
    })
}

/// Upper-envelope power law `y <= log C + delta x` in log-log coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnvelopeFit {
    pub c_hat: f64,
    pub delta_hat: f64,
    /// Least-squares intercept before lifting to the envelope.
    pub intercept: f64,
    pub bins_used: usize,
    pub n_points: usize,
    /// Largest bin-maximum residual above the least-squares line.
    pub max_residual: f64,
    pub rms_residual: f64,
}

/// Bins points uniformly in `x`, keeps the highest `y` per bin, fits a
/// line through the bin maxima and lifts the intercept so the line bounds
/// every bin maximum.
pub fn envelope_fit(points: &[(f64, f64)], n_bins: usize) -> Result<EnvelopeFit> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .copied()
        .filter(|(x, y)| x.is_finite() && y.is_finite())
        .collect();
    let (lo, hi) = pts
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(x, _)| {
            (lo.min(x), hi.max(x))
        });
    if n_bins < 2 || pts.len() < 2 || hi <= lo {
        return Err(Error::InvalidParameter(
            "envelope fit needs at least two bins and a non-degenerate separation range".into(),
        ));
    }
    let width = (hi - lo) / n_bins as f64;
    let mut best: Vec<Option<(f64, f64)>> = vec![None; n_bins];
    for &(x, y) in &pts {
        let b = (((x - lo) / width) as usize).min(n_bins - 1);
        match best[b] {
            Some((_, by)) if y <= by => {}
            _ => best[b] = Some((x, y)),
        }
    }
    let (xs, ys): (Vec<f64>, Vec<f64>) = best.into_iter().flatten().unzip();
    let line = least_squares(&xs, &ys)
        .ok_or_else(|| Error::InvalidParameter("envelope fit needs two occupied bins".into()))?;
    let residuals: Vec<f64> = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| y - (line.intercept + line.slope * x))
        .collect();
    let max_residual = par::max(&residuals);
    let rms_residual = (residuals.iter().map(|r| r * r).sum::<f64>() / residuals.len() as f64).sqrt();
    Ok(EnvelopeFit {
        c_hat: (line.intercept + max_residual.max(0.0)).exp(),
        delta_hat: line.slope,
        intercept: line.intercept,
        bins_used: xs.len(),
        n_points: pts.len(),
        max_residual,
        rms_residual,
    })
}

/// Every `stride`-th pair `(i, j)`, `i < j`, so that about `n_pairs` remain.
fn spread_pairs(n: usize, n_pairs: usize) -> Vec<(usize, usize)> {
    let total = n * n.saturating_sub(1) / 2;
    let stride = (total / n_pairs.max(1)).max(1);
    let mut out = Vec::with_capacity(total / stride + 1);
    let mut idx = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            if idx.is_multiple_of(stride) && out.len() < n_pairs {
                out.push((i, j));
            }
            idx += 1;
        }
    }
    out
}

fn holder_points(map: &HarmonicMap, samples: &[Complex], scale: f64, dist: f64, n_pairs: usize) -> Vec<(f64, f64)> {
    let images: Vec<Complex> = par::map(samples, |&z| map.value(z));
    let pairs = spread_pairs(samples.len(), n_pairs);
    pairs
        .iter()
        .filter_map(|&(i, j)| {
            let sep = (samples[i] - samples[j]).norm();
            let img = (images[i] - images[j]).norm();
            (sep > 1e-15 && img > 0.0).then(|| ((sep / scale).ln(), (img / dist).ln()))
        })
        .collect()
}

fn require_pairs(n_pairs: usize) -> Result<()> {
    if n_pairs == 0 {
        Err(Error::InvalidParameter("n_pairs must be positive".into()))
    } else {
        Ok(())
    }
}

/// Envelope of `|f(z1) - f(z2)| / d(f(z))` against `|z1 - z2| / (1 - |z|)`
/// over pairs sampled from `B(z)`.
pub fn holder_fit(
    map: &HarmonicMap,
    z: Complex,
    dom: &DomainApprox,
    n_pairs: usize,
    params: &AnalysisParams,
) -> Result<EnvelopeFit> {
    require_pairs(n_pairs)?;
    map.require_sh0()?;
    let spec = BoxSpec::new(z, params.box_r_max.min(dom.r_b()))?;
    let samples = spec.sample(params.box_n_r, params.box_n_theta)?;
    let dist = dom.checked_distance(map.value(z))?;
    let pts = holder_points(map, &samples, 1.0 - z.norm(), dist, n_pairs);
    envelope_fit(&pts, params.n_bins)
}

/// Global form at `z = 0`: pairs from a polar grid over the whole disk.
pub fn holder_fit_global(
    map: &HarmonicMap,
    dom: &DomainApprox,
    n_pairs: usize,
    params: &AnalysisParams,
) -> Result<EnvelopeFit> {
    require_pairs(n_pairs)?;
    map.require_sh0()?;
    let grid = PolarGrid::new(params.box_n_r, params.box_n_theta, params.box_r_max.min(dom.r_b()));
    // the centre only once
    let samples: Vec<Complex> = grid.points().into_iter().skip(params.box_n_theta - 1).collect();
    let dist = dom.checked_distance(dom.center_image())?;
    let pts = holder_points(map, &samples, 1.0, dist, n_pairs);
    envelope_fit(&pts, params.n_bins)
}

/// Envelope of `diam f(B(z1)) / diam f(B(z2))` against `l(I(z1)) / l(I(z2))`.
pub fn diam_ratio_fit(
    map: &HarmonicMap,
    z_pairs: &[(Complex, Complex)],
    dom: &DomainApprox,
    params: &AnalysisParams,
) -> Result<EnvelopeFit> {
    map.require_sh0()?;
    if let Some(&(a, b)) = z_pairs.iter().find(|(a, b)| b.norm() > a.norm()) {
        return Err(Error::InvalidParameter(format!("pair ({a}, {b}) has |z2| > |z1|")));
    }
    let r_max = params.box_r_max.min(dom.r_b());
    let mut centers: Vec<Complex> = Vec::new();
    for &(a, b) in z_pairs {
        for z in [a, b] {
            if !centers.contains(&z) {
                centers.push(z);
            }
        }
    }
    let diams = par::try_map(&centers, |&z| {
        let spec = BoxSpec::new(z, r_max)?;
        let samples = spec.sample(params.box_n_r, params.box_n_theta)?;
        Ok::<f64, Error>(image_diameter(map, &samples))
    })?;
    let diam_of = |z: Complex| diams[centers.iter().position(|&c| c == z).expect("collected above")];
    let pts: Vec<(f64, f64)> = z_pairs
        .iter()
        .map(|&(a, b)| {
            let x = (arc_length_i(a) / arc_length_i(b)).ln();
            let y = (diam_of(a) / diam_of(b)).ln();
            (x, y)
        })
        .collect();
    envelope_fit(&pts, params.n_bins)
}
