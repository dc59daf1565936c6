//! Radial John constant and the equivalent conditions on `f(B(z))` and on
//! the radial decay of `||D_f||`.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::hyperbolic::{hyp_distance, BoxSpec};
use crate::map::HarmonicMap;
use crate::par;
use crate::series::Complex;

use super::domain::DomainApprox;
use super::fit::least_squares;
use super::AnalysisParams;

/// Per-direction maxima of `sigma(w) / d(w)` along `f([0, r_b e^{i theta}])`.
#[derive(Clone, Debug, PartialEq)]
pub struct JohnProfile {
    pub r_b: f64,
    pub thetas: Vec<f64>,
    pub per_direction: Vec<f64>,
    pub c_hat: f64,
}

/// Walks each radial image curve inward from `f(r_b e^{i theta})`,
/// accumulating polygonal arclength `sigma`, and records the largest
/// `sigma / d` seen. The endpoint itself, where both vanish, is skipped.
pub fn radial_john_profile(
    map: &HarmonicMap,
    r_b: f64,
    n_dir: usize,
    n_t: usize,
    boundary_m: usize,
) -> Result<JohnProfile> {
    if n_dir < 16 || n_t < 64 {
        return Err(Error::InvalidParameter(format!(
            "radial John constant needs n_dir >= 16 and n_t >= 64 (got {n_dir}, {n_t})"
        )));
    }
    map.require_sh0()?;
    let dom = DomainApprox::new(map, r_b, boundary_m)?;
    let thetas: Vec<f64> = (0..n_dir).map(|d| TAU * d as f64 / n_dir as f64).collect();
    let per_direction = par::try_map(&thetas, |&theta| {
        let dir = Complex::from_polar(1.0, theta);
        let mut prev = map.value(dir * r_b);
        let mut sigma = 0.0;
        let mut worst = 0.0f64;
        for i in 1..=n_t {
            let t = r_b * (1.0 - i as f64 / n_t as f64);
            let w = map.value(dir * t);
            sigma += (w - prev).norm();
            prev = w;
            let d = dom.checked_distance(w)?;
            worst = worst.max(sigma / d);
        }
        Ok::<f64, Error>(worst)
    })?;
    let c_hat = par::max(&per_direction);
    Ok(JohnProfile {
        r_b,
        thetas,
        per_direction,
        c_hat,
    })
}

pub fn radial_john_constant(map: &HarmonicMap, r_b: f64, n_dir: usize, n_t: usize, boundary_m: usize) -> Result<f64> {
    radial_john_profile(map, r_b, n_dir, n_t, boundary_m).map(|p| p.c_hat)
}

/// Largest pairwise distance between images of `samples`.
pub fn image_diameter(map: &HarmonicMap, samples: &[Complex]) -> f64 {
    let images: Vec<Complex> = samples.iter().map(|&z| map.value(z)).collect();
    let idx: Vec<usize> = (0..images.len()).collect();
    let rows = par::map(&idx, |&i| {
        images[i + 1..]
            .iter()
            .map(|w| (images[i] - w).norm())
            .fold(0.0, f64::max)
    });
    par::max(&rows).max(0.0)
}

/// `diam f(B(z)) / d(f(z))`, with `B(z)` clipped at
/// `min(box_r_max, r_b)`.
pub fn diam_over_dist(map: &HarmonicMap, z: Complex, dom: &DomainApprox, params: &AnalysisParams) -> Result<f64> {
    let spec = BoxSpec::new(z, params.box_r_max.min(dom.r_b()))?;
    let samples = spec.sample(params.box_n_r, params.box_n_theta)?;
    let d = dom.checked_distance(map.value(z))?;
    Ok(image_diameter(map, &samples) / d)
}

/// For each radius, the largest `diam_over_dist` over `n_dir` directions.
pub fn diam_over_dist_sweep(
    map: &HarmonicMap,
    dom: &DomainApprox,
    radii: &[f64],
    n_dir: usize,
    params: &AnalysisParams,
) -> Result<Vec<(f64, f64)>> {
    map.require_sh0()?;
    let mut out = Vec::with_capacity(radii.len());
    for &r in radii {
        let zs: Vec<Complex> = (0..n_dir)
            .map(|d| Complex::from_polar(r, TAU * d as f64 / n_dir as f64))
            .collect();
        let vals = par::try_map(&zs, |&z| diam_over_dist(map, z, dom, params))?;
        out.push((r, par::max(&vals)));
    }
    Ok(out)
}

/// Largest value over the last half of `values`, relative to the first value
/// of that half. Bounded sequences stay near 1.
pub fn envelope_growth(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 1.0;
    }
    let tail = &values[values.len() / 2..];
    par::max(tail) / tail[0]
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecayFit {
    pub m_hat: f64,
    pub delta_hat: f64,
    pub slope: f64,
    pub intercept: f64,
    pub max_residual: f64,
}

/// Fits `log ||D_f(t zeta)|| ~ a + s log(1 - t)` over `radii`; the decay
/// exponent is `s + 1` and `M = exp(max residual)`.
pub fn decay_exponent(map: &HarmonicMap, zeta: Complex, radii: &[f64]) -> Result<DecayFit> {
    if radii.len() < 8 {
        return Err(Error::InvalidParameter(format!(
            "decay fit needs at least 8 radii, got {}",
            radii.len()
        )));
    }
    if radii.windows(2).any(|w| w[1] <= w[0])
        || radii[0] <= 0.0
        || radii[radii.len() - 1] >= map.reliable_radius().min(1.0 - 1e-15)
    {
        return Err(Error::InvalidParameter(
            "decay radii must increase inside (0, reliable_radius)".into(),
        ));
    }
    let dir = zeta / zeta.norm();
    let xs: Vec<f64> = radii.iter().map(|t| (1.0 - t).ln()).collect();
    let ys: Vec<f64> = radii.iter().map(|&t| map.dnorm(dir * t).ln()).collect();
    let line = least_squares(&xs, &ys).expect("radii are distinct");
    let residuals: Vec<f64> = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| y - (line.intercept + line.slope * x))
        .collect();
    let max_residual = par::max(&residuals).max(0.0);
    Ok(DecayFit {
        m_hat: max_residual.exp(),
        delta_hat: line.slope + 1.0,
        slope: line.slope,
        intercept: line.intercept,
        max_residual,
    })
}

/// Smallest `alpha >= 0` under which both sides of
/// `(1/2) ||D_f(z1)|| e^{-(1+alpha) lambda} <= ||D_f(z2)|| <= 2 ||D_f(z1)|| e^{(1+alpha) lambda}`
/// hold for every pair. Pairs closer than `1e-9` hyperbolically are skipped.
pub fn growth_alpha_estimate(map: &HarmonicMap, pairs: &[(Complex, Complex)]) -> f64 {
    let vals = par::map(pairs, |&(a, b)| {
        let lambda = hyp_distance(a, b);
        if lambda < 1e-9 {
            return 0.0;
        }
        let lr = (map.dnorm(b) / map.dnorm(a)).ln().abs();
        (lr - std::f64::consts::LN_2) / lambda - 1.0
    });
    par::max(&vals).max(0.0)
}
