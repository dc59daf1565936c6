//! Hyperbolic metric of the disk and the boxes `B(z)`, arcs `I(z)`.
//!
//! `B(z) = { zeta : |z| <= |zeta| < 1, |arg z - arg zeta| <= pi (1 - |z|) }`
//! and `I(z)` is the arc of the unit circle with the same angular window.
//! Angular differences are circular: reduced modulo `2 pi` into `[0, pi]`.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::series::Complex;

/// Slack absorbing rounding when testing membership of points sampled on
/// the box edges.
const EDGE_TOL: f64 = 1e-12;

/// Default outer clipping radius for box sampling.
pub const DEFAULT_BOX_R_MAX: f64 = 0.995;

/// Poincaré distance `atanh |(z1 - z2) / (1 - conj(z1) z2)|`.
///
/// Evaluated as `asinh(|z1 - z2| / sqrt((1 - |z1|^2)(1 - |z2|^2)))`, which is
/// the same quantity without the cancellation in `1 - conj(z1) z2`.
pub fn hyp_distance(z1: Complex, z2: Complex) -> f64 {
    let gap = |z: Complex| {
        let r = z.norm();
        (1.0 - r) * (1.0 + r)
    };
    let num = (z1 - z2).norm();
    if num == 0.0 {
        return 0.0;
    }
    (num / (gap(z1) * gap(z2)).sqrt()).asinh()
}

/// Pseudo-hyperbolic distance `|(z1 - z2) / (1 - conj(z1) z2)|`.
pub fn pseudo_distance(z1: Complex, z2: Complex) -> f64 {
    ((z1 - z2) / (1.0 - z1.conj() * z2)).norm()
}

/// Disk automorphism `phi_a(z) = (z - a) / (1 - conj(a) z)`.
pub fn mobius(a: Complex, z: Complex) -> Complex {
    (z - a) / (1.0 - a.conj() * z)
}

/// Circular distance between two angles, in `[0, pi]`.
pub fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    if d > PI {
        TAU - d
    } else {
        d
    }
}

/// Angular half-width `pi (1 - |z|)` of `B(z)` and `I(z)`.
pub fn half_width(z: Complex) -> f64 {
    PI * (1.0 - z.norm())
}

/// Euclidean length of `I(z)`: `min(2 pi, 2 pi (1 - |z|))`.
pub fn arc_length_i(z: Complex) -> f64 {
    (TAU * (1.0 - z.norm())).min(TAU)
}

/// The box `B(center)`, sampled only up to radius `r_max`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoxSpec {
    center: Complex,
    r_max: f64,
}

impl BoxSpec {
    pub fn new(center: Complex, r_max: f64) -> Result<Self> {
        let r = center.norm();
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::InvalidParameter(format!("box center modulus {r} not in (0,1)")));
        }
        if !(r_max > r && r_max < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "box clipping radius {r_max} not in (|center|, 1) = ({r}, 1)"
            )));
        }
        Ok(Self { center, r_max })
    }

    pub fn center(&self) -> Complex {
        self.center
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn half_width(&self) -> f64 {
        half_width(self.center)
    }

    /// Membership in the unclipped `B(center)`.
    pub fn contains(&self, zeta: Complex) -> bool {
        let r = zeta.norm();
        let r0 = self.center.norm();
        if r < r0 - EDGE_TOL || r >= 1.0 {
            return false;
        }
        if r == 0.0 {
            return self.half_width() >= PI;
        }
        angle_gap(self.center.arg(), zeta.arg()) <= self.half_width() + EDGE_TOL
    }

    /// `n_r x n_theta` tensor grid: radii uniform in `[|center|, r_max]`,
    /// angles uniform over the full window centered at `arg center`.
    /// Ordered radius-major.
    pub fn sample(&self, n_r: usize, n_theta: usize) -> Result<Vec<Complex>> {
        if n_r < 2 || n_theta < 2 {
            return Err(Error::InvalidParameter(format!(
                "box sampling needs n_r, n_theta >= 2 (got {n_r}, {n_theta})"
            )));
        }
        let r0 = self.center.norm();
        let width = (2.0 * self.half_width()).min(TAU);
        let theta0 = self.center.arg() - width / 2.0;
        let mut out = Vec::with_capacity(n_r * n_theta);
        for i in 0..n_r {
            let r = r0 + (self.r_max - r0) * i as f64 / (n_r - 1) as f64;
            for j in 0..n_theta {
                let t = theta0 + width * j as f64 / (n_theta - 1) as f64;
                out.push(Complex::from_polar(r, t));
            }
        }
        Ok(out)
    }
}

/// Free-function form of [`BoxSpec::contains`].
pub fn box_contains(spec: &BoxSpec, zeta: Complex) -> bool {
    spec.contains(zeta)
}

/// Free-function form of [`BoxSpec::sample`].
pub fn sample_box(spec: &BoxSpec, n_r: usize, n_theta: usize) -> Result<Vec<Complex>> {
    spec.sample(n_r, n_theta)
}
