//! SVG 1.1 plots with deterministic byte output.

use std::fmt::Write as _;

use crate::series::Complex;

const WIDTH: f64 = 480.0;
const HEIGHT: f64 = 360.0;
const PAD: f64 = 24.0;

fn coord(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn header(out: &mut String) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = WIDTH,
        h = HEIGHT
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
}

/// Affine map of a data box onto the drawing area, `y` pointing up.
struct Frame {
    x0: f64,
    y0: f64,
    scale_x: f64,
    scale_y: f64,
}

impl Frame {
    fn new(x0: f64, x1: f64, y0: f64, y1: f64, equal: bool) -> Self {
        let (w, h) = (WIDTH - 2.0 * PAD, HEIGHT - 2.0 * PAD);
        let (dx, dy) = ((x1 - x0).max(1e-12), (y1 - y0).max(1e-12));
        let (mut sx, mut sy) = (w / dx, h / dy);
        let (mut x0, mut y0) = (x0, y0);
        if equal {
            let s = sx.min(sy);
            x0 -= (w / s - dx) / 2.0;
            y0 -= (h / s - dy) / 2.0;
            sx = s;
            sy = s;
        }
        Self {
            x0,
            y0,
            scale_x: sx,
            scale_y: sy,
        }
    }

    fn point(&self, x: f64, y: f64) -> String {
        let px = PAD + (x - self.x0) * self.scale_x;
        let py = HEIGHT - PAD - (y - self.y0) * self.scale_y;
        format!("{},{}", coord(px), coord(py))
    }

    fn polyline(&self, out: &mut String, pts: &[(f64, f64)], stroke: &str, closed: bool, dash: bool) {
        let tag = if closed { "polygon" } else { "polyline" };
        let body: Vec<String> = pts.iter().map(|&(x, y)| self.point(x, y)).collect();
        let dash = if dash { r#" stroke-dasharray="6,4""# } else { "" };
        let _ = writeln!(
            out,
            r#"<{tag} points="{}" fill="none" stroke="{stroke}" stroke-width="1"{dash}/>"#,
            body.join(" ")
        );
    }
}

fn bounds(pts: impl Iterator<Item = (f64, f64)>) -> (f64, f64, f64, f64) {
    pts.fold(
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY),
        |(a, b, c, d), (x, y)| (a.min(x), b.max(x), c.min(y), d.max(y)),
    )
}

/// Boundary polyline of the sampled image plus radial image curves.
pub fn image_domain(boundary: &[Complex], curves: &[Vec<Complex>]) -> String {
    let xy = |w: &Complex| (w.re, w.im);
    let (x0, x1, y0, y1) = bounds(boundary.iter().chain(curves.iter().flatten()).map(xy));
    let frame = Frame::new(x0, x1, y0, y1, true);
    let mut out = String::new();
    header(&mut out);
    let b: Vec<(f64, f64)> = boundary.iter().map(xy).collect();
    frame.polyline(&mut out, &b, "black", true, false);
    for c in curves {
        let pts: Vec<(f64, f64)> = c.iter().map(xy).collect();
        frame.polyline(&mut out, &pts, "steelblue", false, false);
    }
    out.push_str("</svg>\n");
    out
}

/// Criterion curves against `r` with horizontal threshold lines.
pub fn criteria(curves: &[(&str, &[(f64, f64)])], thresholds: &[f64]) -> String {
    const COLORS: [&str; 4] = ["firebrick", "steelblue", "darkgreen", "purple"];
    let y_hi = curves
        .iter()
        .flat_map(|(_, c)| c.iter().map(|p| p.1))
        .chain(thresholds.iter().copied())
        .fold(0.0f64, f64::max)
        * 1.1;
    let y_lo = curves
        .iter()
        .flat_map(|(_, c)| c.iter().map(|p| p.1))
        .fold(0.0f64, f64::min);
    let frame = Frame::new(0.0, 1.0, y_lo, y_hi.max(1e-9), false);
    let mut out = String::new();
    header(&mut out);
    frame.polyline(&mut out, &[(0.0, 0.0), (1.0, 0.0)], "gray", false, false);
    frame.polyline(&mut out, &[(0.0, y_lo), (0.0, y_hi)], "gray", false, false);
    for &t in thresholds {
        frame.polyline(&mut out, &[(0.0, t), (1.0, t)], "gray", false, true);
    }
    for (i, (label, c)) in curves.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        frame.polyline(&mut out, c, color, false, false);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="12" fill="{color}">{label}</text>"#,
            coord(PAD + 8.0),
            coord(PAD + 14.0 * (i as f64 + 1.0))
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_well_formed() {
        let circle: Vec<Complex> = (0..64).map(|j| Complex::from_polar(1.0, j as f64 * 0.1)).collect();
        let a = image_domain(&circle, &[circle[..8].to_vec()]);
        assert_eq!(a, image_domain(&circle, &[circle[..8].to_vec()]));
        assert!(a.starts_with("<?xml") && a.ends_with("</svg>\n"));
        assert_eq!(a.matches("<polygon").count(), 1);
        let curve = [(0.5, 1.0), (0.9, 1.8)];
        let c = criteria(&[("M_b", &curve)], &[2.0]);
        assert_eq!(c.matches("stroke-dasharray").count(), 1);
    }
}
