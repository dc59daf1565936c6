//! Estimators checked against values computed independently from closed
//! forms.

use std::f64::consts::FRAC_PI_4;

use qcharm::analyzer::{
    diam_over_dist, holder_fit, radial_john_constant, sup_criterion_corollary, AnalysisParams, DomainApprox,
};
use qcharm::corpus::{identity_map, log_shear, log_shear_series, strip_map};
use qcharm::{Complex, PolarGrid};

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

#[test]
fn strip_closed_forms() {
    let f = strip_map().map;
    for z in [c(0.3, 0.1), c(-0.7, 0.2), c(0.05, -0.9)] {
        let q = c(1.0, 0.0) - z * z;
        assert!((f.jacobian(z) - 1.0 / q.norm_sqr()).abs() < 1e-12 * f.jacobian(z));
        let th = 2.0 * z / q;
        assert!((f.analytic_pre_schwarzian(z).unwrap() - th).norm() < 1e-12 * th.norm());
        let w = f.value(z);
        assert!(w.im.abs() < FRAC_PI_4);
        assert!((w - z.atanh()).norm() < 1e-12);
    }
}

#[test]
fn logshear_closed_forms() {
    let k = 1.0 / 3.0;
    let f = log_shear(k).unwrap().map;
    for z in [c(0.3, 0.1), c(-0.7, 0.2), c(0.5, -0.8)] {
        assert!((f.dilatation(z).unwrap() - k * z).norm() < 1e-14);
        let j = (1.0 - k * k * z.norm_sqr()) / (c(1.0, 0.0) - k * z).norm_sqr();
        assert!((f.jacobian(z) - j).abs() < 1e-13);
        let th = k / (c(1.0, 0.0) - k * z);
        assert!((f.analytic_pre_schwarzian(z).unwrap() - th).norm() < 1e-13);
    }
}

#[test]
fn series_twin_matches_closed_form() {
    let k = 1.0 / 3.0;
    let exact = log_shear(k).unwrap().map;
    let series = log_shear_series(k).unwrap().map;
    for z in PolarGrid::new(12, 16, 0.9).points() {
        assert!((exact.value(z) - series.value(z)).norm() < 1e-12);
        assert!((exact.pre_schwarzian(z).unwrap() - series.pre_schwarzian(z).unwrap()).norm() < 1e-10);
    }
}

#[test]
fn strip_john_constant_from_real_ray() {
    // Along the real ray sigma(0) = atanh r_b while d(0) = pi/4, so the
    // constant is at least atanh(r_b) / (pi/4).
    let f = strip_map().map;
    for r_b in [0.99f64, 0.999, 0.9999] {
        let oracle = r_b.atanh() / FRAC_PI_4;
        let c_hat = radial_john_constant(&f, r_b, 16, 256, 4096).unwrap();
        assert!(
            c_hat >= oracle - 1e-6 && c_hat <= oracle * 1.02,
            "{r_b}: {c_hat} vs {oracle}"
        );
    }
}

#[test]
fn disk_john_constant_is_one() {
    let f = identity_map().map;
    let c_hat = radial_john_constant(&f, 0.999, 16, 256, 4096).unwrap();
    // chord sagitta of the 4096-gon is below 3e-7
    assert!((c_hat - 1.0).abs() < 1e-6, "{c_hat}");
}

#[test]
fn disk_box_ratio_brute_force() {
    let f = identity_map().map;
    let p = AnalysisParams::default();
    let dom = DomainApprox::new(&f, 0.999, 4096).unwrap();
    for r in [0.5, 0.75, 0.9] {
        let z = c(r, 0.0);
        // Box corners at |z| and at the clip radius, +-pi(1-r) off axis.
        let hw = std::f64::consts::PI * (1.0 - r);
        let corners = [
            Complex::from_polar(r, hw),
            Complex::from_polar(r, -hw),
            Complex::from_polar(0.995, hw),
            Complex::from_polar(0.995, -hw),
        ];
        let diam = corners
            .iter()
            .flat_map(|a| corners.iter().map(move |b| (a - b).norm()))
            .fold(0.0, f64::max);
        let ratio = diam_over_dist(&f, z, &dom, &p).unwrap();
        // the 4096-gon lies between radii 0.999 cos(pi/4096) and 0.999
        let (d_in, d_out) = (0.999 * (std::f64::consts::PI / 4096.0).cos() - r, 0.999 - r);
        assert!(ratio >= diam / d_out - 1e-9, "{r}: {ratio} vs {}", diam / d_out);
        assert!(ratio <= 2.0 * 0.995 / d_in + 1e-9, "{r}: {ratio}");
    }
}

#[test]
fn identity_holder_exponent_is_one() {
    let f = identity_map().map;
    let p = AnalysisParams::default();
    let dom = DomainApprox::new(&f, 0.999, 4096).unwrap();
    for r in [0.75, 0.9] {
        let fit = holder_fit(&f, c(r, 0.0), &dom, 2000, &p).unwrap();
        assert!((fit.delta_hat - 1.0).abs() < 1e-9, "{r}: {}", fit.delta_hat);
    }
}

#[test]
fn logshear_sup_criterion_against_one_dimensional_maximum() {
    // (1-r^2) k / (1-kr) peaks on the positive axis at r = (1 - sqrt(1-k^2)) / k.
    let k = 1.0 / 3.0;
    let f = log_shear(k).unwrap().map;
    let profile = |r: f64| (1.0 - r * r) * k / (1.0 - k * r);
    let r_star = (1.0 - (1.0 - k * k).sqrt()) / k;
    let oracle = profile(r_star);
    let brute = (0..=100_000).map(|i| profile(i as f64 / 100_000.0)).fold(0.0, f64::max);
    assert!((brute - oracle).abs() < 1e-10);
    let grid = PolarGrid::new(40, 64, 0.999).points();
    let report = sup_criterion_corollary(&f, &grid, &AnalysisParams::default()).unwrap();
    let sup = report.value.scalar().unwrap();
    assert!(sup <= oracle + 1e-12 && sup > oracle - 1e-3, "{sup} vs {oracle}");
}

#[test]
fn disk_box_ratio_at_one_half() {
    let f = identity_map().map;
    let dom = DomainApprox::new(&f, 0.999, 4096).unwrap();
    let ratio = diam_over_dist(&f, c(0.5, 0.0), &dom, &AnalysisParams::default()).unwrap();
    // the half annulus reaches +-i at the clip radius
    let oracle = 2.0 * 0.995 / (0.999 - 0.5);
    assert!((ratio - oracle).abs() < 1e-3 * oracle, "{ratio} vs {oracle}");
    assert!((ratio - 3.86).abs() < 0.05 * 3.86);
}

#[test]
fn disk_diameter_ratio_envelope_covers_annulus_pair() {
    let f = identity_map().map;
    let p = AnalysisParams::default();
    let dom = DomainApprox::new(&f, 0.999, 4096).unwrap();
    let radii = [0.5, 0.6, 0.7, 0.8, 0.9, 0.95];
    let pairs: Vec<(Complex, Complex)> = radii
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| radii[..i].iter().map(move |&b| (c(a, 0.0), c(b, 0.0))))
        .collect();
    let fit = qcharm::analyzer::diam_ratio_fit(&f, &pairs, &dom, &p).unwrap();
    // B(0.9) spans 0.18 pi of angle from radius 0.9 to 0.995; B(0.5) is the half annulus.
    let hw = 0.1 * std::f64::consts::PI;
    let far = (Complex::from_polar(0.995, hw) - Complex::from_polar(0.995, -hw)).norm();
    let near = (Complex::from_polar(0.9, hw) - Complex::from_polar(0.995, -hw)).norm();
    let diam_ratio = far.max(near) / (2.0 * 0.995);
    assert!(diam_ratio <= fit.c_hat * 0.2f64.powf(fit.delta_hat) * (1.0 + 1e-9));
}

#[test]
fn shear_john_constant_is_stable() {
    let f = log_shear(1.0 / 3.0).unwrap().map;
    let a = radial_john_constant(&f, 0.99, 16, 256, 4096).unwrap();
    let b = radial_john_constant(&f, 0.999, 16, 256, 4096).unwrap();
    assert!(a.is_finite() && (b - a).abs() < 0.1 * a, "{a} vs {b}");
}

#[test]
fn strip_box_diameter_is_unbounded() {
    // B(r) touches the boundary arc near 1, where the strip map is unbounded.
    // An odd angle count samples the ray through arg z.
    // The clipped ratio grows like log(1/(1 - clip)) / (pi/4), while the disk stays bounded.
    let strip = strip_map().map;
    let disk = identity_map().map;
    let z = c(0.9, 0.0);
    let ratio = |map: &qcharm::HarmonicMap, clip: f64| {
        let dom = DomainApprox::new(map, 0.9999999, 4096).unwrap();
        let p = AnalysisParams {
            box_r_max: clip,
            box_n_theta: 33,
            ..AnalysisParams::default()
        };
        diam_over_dist(map, z, &dom, &p).unwrap()
    };
    let s: Vec<f64> = [0.99, 0.9999, 0.999999]
        .iter()
        .map(|&clip| ratio(&strip, clip))
        .collect();
    let d: Vec<f64> = [0.99, 0.9999, 0.999999]
        .iter()
        .map(|&clip| ratio(&disk, clip))
        .collect();
    for w in s.windows(2) {
        let step = w[1] - w[0];
        let oracle = 0.5 * 100f64.ln() / FRAC_PI_4;
        assert!((step - oracle).abs() < 0.1 * oracle, "{s:?}");
    }
    assert!((d[2] - d[0]).abs() < 0.02 * d[0], "{d:?}");
}
