use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::map::{BoundaryHint, HarmonicMap};
use crate::series::Complex;

/// Closed polyline `f(r_b e^{i theta_j})`, `theta_j = 2 pi j / M`, standing
/// in for the boundary of `f(D)`.
#[derive(Clone, Debug)]
pub struct DomainApprox {
    boundary: Vec<Complex>,
    chunks: Vec<Chunk>,
    r_b: f64,
    center_image: Complex,
    hint: Option<BoundaryHint>,
}

/// Run of consecutive segments with its bounding box.
#[derive(Clone, Copy, Debug)]
struct Chunk {
    start: usize,
    end: usize,
    lo: Complex,
    hi: Complex,
}

impl Chunk {
    fn lower_bound(&self, w: Complex) -> f64 {
        let dx = (self.lo.re - w.re).max(w.re - self.hi.re).max(0.0);
        let dy = (self.lo.im - w.im).max(w.im - self.hi.im).max(0.0);
        dx.hypot(dy)
    }
}

const CHUNK_SEGMENTS: usize = 32;

pub const MIN_BOUNDARY_POINTS: usize = 64;

impl DomainApprox {
    pub fn new(map: &HarmonicMap, r_b: f64, m: usize) -> Result<Self> {
        if m < MIN_BOUNDARY_POINTS {
            return Err(Error::InvalidParameter(format!(
                "boundary polyline needs at least {MIN_BOUNDARY_POINTS} points, got {m}"
            )));
        }
        if !(r_b > 0.0 && r_b < 1.0) {
            return Err(Error::InvalidParameter(format!("r_b = {r_b} not in (0,1)")));
        }
        if r_b > map.reliable_radius() {
            return Err(Error::InvalidParameter(format!(
                "r_b = {r_b} exceeds the reliable radius {} of `{}`",
                map.reliable_radius(),
                map.name()
            )));
        }
        let boundary: Vec<Complex> = (0..m)
            .map(|j| map.value(Complex::from_polar(r_b, TAU * j as f64 / m as f64)))
            .collect();
        let chunks = (0..m)
            .step_by(CHUNK_SEGMENTS)
            .map(|start| {
                let end = (start + CHUNK_SEGMENTS).min(m);
                let (mut lo, mut hi) = (boundary[start], boundary[start]);
                for i in start..=end {
                    let p = boundary[i % m];
                    lo = Complex::new(lo.re.min(p.re), lo.im.min(p.im));
                    hi = Complex::new(hi.re.max(p.re), hi.im.max(p.im));
                }
                Chunk { start, end, lo, hi }
            })
            .collect();
        Ok(Self {
            boundary,
            chunks,
            r_b,
            center_image: map.value(Complex::new(0.0, 0.0)),
            hint: map.boundary_hint(),
        })
    }

    pub fn boundary(&self) -> &[Complex] {
        &self.boundary
    }

    pub fn r_b(&self) -> f64 {
        self.r_b
    }

    pub fn center_image(&self) -> Complex {
        self.center_image
    }

    /// Distance to the closed polyline, tightened by the analytic hint when
    /// the map carries one.
    pub fn boundary_distance(&self, w: Complex) -> f64 {
        let poly = self.polyline_distance(w);
        match self.hint {
            Some(BoundaryHint::HorizontalStrip { half_width }) => poly.min((half_width - w.im.abs()).max(0.0)),
            None => poly,
        }
    }

    /// Exact distance to the polyline; chunks whose bounding box is farther
    /// than the best segment so far are skipped.
    pub fn polyline_distance(&self, w: Complex) -> f64 {
        let n = self.boundary.len();
        let bounds: Vec<f64> = self.chunks.iter().map(|c| c.lower_bound(w)).collect();
        let mut order: Vec<usize> = (0..self.chunks.len()).collect();
        order.sort_by(|&a, &b| bounds[a].total_cmp(&bounds[b]));
        let mut best = f64::INFINITY;
        for ci in order {
            if bounds[ci] >= best {
                break;
            }
            let c = self.chunks[ci];
            for i in c.start..c.end {
                best = best.min(point_segment_distance(w, self.boundary[i], self.boundary[(i + 1) % n]));
            }
        }
        best
    }

    /// [`boundary_distance`](Self::boundary_distance), failing below `1e-12`.
    pub fn checked_distance(&self, w: Complex) -> Result<f64> {
        let d = self.boundary_distance(w);
        if d < 1e-12 {
            Err(Error::DegenerateBoundary {
                re: w.re,
                im: w.im,
                distance: d,
            })
        } else {
            Ok(d)
        }
    }
}

pub fn point_segment_distance(p: Complex, a: Complex, b: Complex) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a) * ab.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}
