//! Empirical verification of radial John behaviour.
//!
//! Every estimator here is a deterministic sweep over grids. Sufficient
//! criteria report [`Verdict::SufficientConditionMet`] or
//! [`Verdict::Inconclusive`], never a negative verdict; only inequalities that
//! hold unconditionally for the class (Schwarz-Pick, the `|h'|` sandwich,
//! the distance lower bound) can come back [`Verdict::Violated`].

mod criteria;
mod domain;
mod fit;
mod inequalities;
mod john;
mod report;

pub use criteria::{limsup_criterion_a, limsup_criterion_b, sup_criterion_corollary, K_WARN_THRESHOLD};
pub use domain::{point_segment_distance, DomainApprox};
pub use fit::{diam_ratio_fit, envelope_fit, holder_fit, holder_fit_global, least_squares, EnvelopeFit, LineFit};
pub use inequalities::{dilatation_bound_check, lemma_d_check, sandwich_check, schwarz_pick_check};
pub use john::{
    decay_exponent, diam_over_dist, diam_over_dist_sweep, envelope_growth, growth_alpha_estimate, image_diameter,
    radial_john_constant, radial_john_profile, DecayFit, JohnProfile,
};
pub use report::{CriterionReport, Quantity, ReportValue, Verdict};

use crate::map::{HarmonicMap, PolarGrid};

/// Tunables shared by the estimators.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalysisParams {
    /// Angles per radius in the criterion sweeps.
    pub n_theta: usize,
    /// Radial samples per box `B(z)`.
    pub box_n_r: usize,
    /// Angular samples per box `B(z)`.
    pub box_n_theta: usize,
    /// Outer clipping radius for box sampling.
    pub box_r_max: f64,
    /// Vertices of the boundary polyline.
    pub boundary_m: usize,
    /// Strictness margin on the criterion thresholds.
    pub margin: f64,
    /// Absolute slack for comparisons against polyline distances.
    pub tol_geom: f64,
    /// Log-spaced separation bins for envelope fits.
    pub n_bins: usize,
}

impl Default for AnalysisParams {
    fn default() -> Self {
        Self {
            n_theta: 64,
            box_n_r: 16,
            box_n_theta: 32,
            box_r_max: crate::hyperbolic::DEFAULT_BOX_R_MAX,
            boundary_m: 4096,
            margin: 0.05,
            tol_geom: 1e-3,
            n_bins: 16,
        }
    }
}

/// Default boundary sampling radius.
pub const DEFAULT_R_B: f64 = 0.999;

/// `r_j = 1 - 2^{-j} (1 - r_start)` for `j = 0..rungs`.
pub fn geometric_ladder(r_start: f64, rungs: usize) -> Vec<f64> {
    (0..rungs)
        .map(|j| 1.0 - (1.0 - r_start) * 0.5f64.powi(j as i32))
        .collect()
}

/// Eight rungs from `1 - 2^-5` to `1 - 2^-12`; the limsup proxy ladder.
pub fn limsup_ladder() -> Vec<f64> {
    geometric_ladder(1.0 - 0.5f64.powi(5), 8)
}

/// Drops rungs beyond the map's reliable radius.
pub fn cap_ladder(ladder: &[f64], map: &HarmonicMap) -> Vec<f64> {
    let cap = map.reliable_radius();
    ladder.iter().copied().filter(|&r| r < cap || cap >= 1.0).collect()
}

/// Ladder for `diam f(B(z)) / d(f(z))` sweeps: geometric from 1/2, stopping
/// while `1 - r` is at least three times the gap `1 - min(r_b, box_r_max)`.
pub fn box_ladder(r_b: f64, box_r_max: f64) -> Vec<f64> {
    let clip = r_b.min(box_r_max);
    let mut out = Vec::new();
    let mut gap = 0.5;
    while gap >= 3.0 * (1.0 - clip) && out.len() < 30 {
        out.push(1.0 - gap);
        gap *= 0.5;
    }
    out
}

/// Grid used for `K` estimates when a map carries no claimed `K`:
/// 40 x 64 points out to `min(0.999, reliable_radius)`.
pub fn qc_grid(map: &HarmonicMap) -> PolarGrid {
    PolarGrid::new(40, 64, 0.999f64.min(map.reliable_radius()))
}
