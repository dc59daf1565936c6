//! Command bodies. Each returns its files and stdout lines; the caller
//! does the I/O.

use std::f64::consts::TAU;

use crate::analyzer::growth_alpha_estimate;
use crate::analyzer::{
    box_ladder, cap_ladder, decay_exponent, diam_over_dist_sweep, diam_ratio_fit, envelope_growth, holder_fit,
    holder_fit_global, limsup_criterion_a, limsup_criterion_b, limsup_ladder, radial_john_profile,
    sup_criterion_corollary, CriterionReport, DomainApprox, EnvelopeFit, ReportValue,
};
use crate::corpus;
use crate::map::{HarmonicMap, PolarGrid};
use crate::par;
use crate::series::Complex;

use super::config::RunConfig;
use super::format::{num, summary_line, Csv};
use super::spec::ResolvedMap;
use super::{svg, CliError};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Outcome {
    /// `(file name, contents)` in write order.
    pub files: Vec<(String, String)>,
    pub lines: Vec<String>,
    pub warnings: Vec<String>,
}

/// Minimum radius of a ray base point for the local distortion fits.
const SWEEP_MIN_BASE: f64 = 0.75;
/// Directions used for the diameter-ratio pairs.
const RATIO_DIRECTIONS: usize = 4;
/// Vertices kept per curve in `image_domain.svg`.
const SVG_CURVE_POINTS: usize = 64;

fn clip(value: f64, map: &HarmonicMap, what: &str, warnings: &mut Vec<String>) -> f64 {
    let cap = map.reliable_radius();
    if value > cap {
        warnings.push(format!(
            "{what} = {value} clipped to the reliable radius {cap} of `{}`",
            map.name()
        ));
        cap
    } else {
        value
    }
}

fn directions(n: usize) -> Vec<f64> {
    (0..n).map(|d| TAU * d as f64 / n as f64).collect()
}

fn image_svg(map: &HarmonicMap, dom: &DomainApprox, n_dir: usize) -> String {
    let step = (dom.boundary().len() / 1024).max(1);
    let boundary: Vec<Complex> = dom.boundary().iter().step_by(step).copied().collect();
    let curves: Vec<Vec<Complex>> = directions(n_dir)
        .iter()
        .map(|&t| {
            let dir = Complex::from_polar(dom.r_b(), t);
            (0..=SVG_CURVE_POINTS)
                .map(|i| map.value(dir * (i as f64 / SVG_CURVE_POINTS as f64)))
                .collect()
        })
        .collect();
    svg::image_domain(&boundary, &curves)
}

pub fn analyze(resolved: &ResolvedMap, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let map = &resolved.map;
    let mut out = Outcome::default();
    let r_max = clip(cfg.r_max, map, "r_max", &mut out.warnings);
    let pts = PolarGrid::new(cfg.n_r, cfg.n_theta, r_max).points();
    let k_hat = map.qc_constant_estimate(&pts)?;
    let samples = par::try_map(&pts, |&z| map.sample(z))?;
    let mut csv = Csv::new(&[
        "z_re", "z_im", "J", "|omega|", "Dnorm", "lnorm", "P_re", "P_im", "Th_abs",
    ]);
    for s in &samples {
        csv.nums(&[
            s.z.re,
            s.z.im,
            s.jacobian,
            s.dilatation_abs,
            s.dnorm,
            s.lnorm,
            s.pre_schwarzian.re,
            s.pre_schwarzian.im,
            s.analytic_pre_schwarzian_abs,
        ]);
    }
    out.files.push(("analyze.csv".into(), csv.into_string()));

    let coarse = PolarGrid::new(cfg.n_r.min(10), cfg.n_theta.min(16), r_max).points();
    let pairs: Vec<(Complex, Complex)> = coarse
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| coarse[i + 1..].iter().map(move |&b| (a, b)))
        .collect();
    let alpha = growth_alpha_estimate(map, &pairs);
    let max_omega = samples.iter().map(|s| s.dilatation_abs).fold(0.0, f64::max);
    out.lines.push(summary_line(
        "SUMMARY",
        &[
            ("map", map.name().to_string()),
            ("points", samples.len().to_string()),
            ("r_max", num(r_max)),
            ("K_hat", num(k_hat)),
            ("max_omega", num(max_omega)),
            ("sense_preserving", map.is_sense_preserving_on(&pts).to_string()),
            ("alpha_hat", num(alpha)),
        ],
    ));
    if cfg.emit_svg {
        let r_b = clip(cfg.r_b, map, "r_b", &mut out.warnings);
        let dom = DomainApprox::new(map, r_b, cfg.boundary_m)?;
        out.files
            .push(("image_domain.svg".into(), image_svg(map, &dom, cfg.n_dir)));
    }
    Ok(out)
}

/// Radii for the decay fit: the limsup ladder, or eight evenly spaced radii
/// below the reliable radius when the ladder does not fit.
fn decay_radii(map: &HarmonicMap) -> Vec<f64> {
    let ladder = cap_ladder(&limsup_ladder(), map);
    if ladder.len() >= 8 {
        return ladder;
    }
    let cap = map.reliable_radius();
    (0..8).map(|i| cap * (0.5 + 0.45 * i as f64 / 7.0)).collect()
}

fn range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

pub fn john(resolved: &ResolvedMap, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let map = &resolved.map;
    let params = cfg.params();
    let mut out = Outcome::default();
    let r_b = clip(cfg.r_b, map, "r_b", &mut out.warnings);
    let profile = radial_john_profile(map, r_b, cfg.n_dir, cfg.n_t, cfg.boundary_m)?;
    let dom = DomainApprox::new(map, r_b, cfg.boundary_m)?;
    let ladder = box_ladder(r_b, params.box_r_max);
    if ladder.is_empty() {
        out.warnings
            .push(format!("no box radii fit below r_b = {r_b}; diam/dist view skipped"));
    }
    let sweep = diam_over_dist_sweep(map, &dom, &ladder, cfg.n_dir, &params)?;
    let radii = decay_radii(map);
    let decays = par::try_map(&profile.thetas, |&t| {
        decay_exponent(map, Complex::from_polar(1.0, t), &radii)
    })?;

    let mut csv = Csv::new(&["view", "index", "theta", "r", "value"]);
    for (i, (&t, &c)) in profile.thetas.iter().zip(&profile.per_direction).enumerate() {
        csv.row(["john_c".into(), i.to_string(), num(t), num(r_b), num(c)]);
    }
    for (i, &(r, v)) in sweep.iter().enumerate() {
        csv.row(["diam_over_dist".into(), i.to_string(), String::new(), num(r), num(v)]);
    }
    for (i, (&t, d)) in profile.thetas.iter().zip(&decays).enumerate() {
        csv.row([
            "decay_delta".into(),
            i.to_string(),
            num(t),
            String::new(),
            num(d.delta_hat),
        ]);
        csv.row(["decay_m".into(), i.to_string(), num(t), String::new(), num(d.m_hat)]);
    }
    out.files.push(("john.csv".into(), csv.into_string()));

    let (d_lo, d_hi) = range(decays.iter().map(|d| d.delta_hat));
    let ratio_vals: Vec<f64> = sweep.iter().map(|p| p.1).collect();
    let (ratio_max, growth) = if ratio_vals.is_empty() {
        ("n/a".to_string(), "n/a".to_string())
    } else {
        (num(par::max(&ratio_vals)), num(envelope_growth(&ratio_vals)))
    };
    out.lines.push(summary_line(
        "SUMMARY",
        &[
            ("map", map.name().to_string()),
            ("r_b", num(r_b)),
            ("c_hat", num(profile.c_hat)),
            ("diam_over_dist_max", ratio_max),
            ("diam_over_dist_growth", growth),
            ("delta_min", num(d_lo)),
            ("delta_max", num(d_hi)),
        ],
    ));
    if cfg.emit_svg {
        out.files
            .push(("image_domain.svg".into(), image_svg(map, &dom, cfg.n_dir)));
    }
    Ok(out)
}

fn scalar(r: &CriterionReport) -> f64 {
    match r.value {
        ReportValue::Scalar(v) => v,
        ReportValue::Pair(a, _) => a,
    }
}

fn report_lines(out: &mut Outcome, r: &CriterionReport) {
    let mut fields = vec![
        ("value", num(scalar(r))),
        ("threshold", r.threshold.map(num).unwrap_or_else(|| "n/a".into())),
        ("verdict", r.verdict.as_str().to_string()),
    ];
    fields.extend(r.parameters.iter().map(|(k, v)| {
        let v = v.parse::<f64>().map(num).unwrap_or_else(|_| v.clone());
        (k.as_str(), v)
    }));
    out.lines
        .push(summary_line(&format!("CRITERION {}", r.quantity.as_str()), &fields));
    out.warnings.extend(r.warnings.iter().cloned());
}

/// The limsup ladder, or the ladder scaled by the reliable radius when fewer
/// than six rungs fit below it.
fn criteria_radii(map: &HarmonicMap, warnings: &mut Vec<String>) -> Vec<f64> {
    let ladder = cap_ladder(&limsup_ladder(), map);
    if ladder.len() >= 6 {
        return ladder;
    }
    let cap = map.reliable_radius();
    warnings.push(format!(
        "`{}` is reliable only on |z| < {cap}; limsup proxies use the ladder scaled by {cap}",
        map.name()
    ));
    limsup_ladder().iter().map(|r| r * cap).collect()
}

pub fn criteria(resolved: &ResolvedMap, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let map = &resolved.map;
    let params = cfg.params();
    let mut out = Outcome::default();
    let radii = criteria_radii(map, &mut out.warnings);
    let a = limsup_criterion_a(map, &radii, &params)?;
    let b = limsup_criterion_b(map, &radii, &params)?;
    let r_last = radii[radii.len() - 1];
    let cor = sup_criterion_corollary(map, &PolarGrid::new(cfg.n_r, cfg.n_theta, r_last).points(), &params)?;

    let mut csv = Csv::new(&["quantity", "r", "value", "threshold", "verdict"]);
    for (label, report) in [("M_a", &a), ("M_b", &b)] {
        for &(r, m) in &report.curve {
            csv.row([label.to_string(), num(r), num(m), String::new(), String::new()]);
        }
    }
    for report in [&a, &b, &cor] {
        csv.row([
            report.quantity.as_str().to_string(),
            String::new(),
            num(scalar(report)),
            report.threshold.map(num).unwrap_or_default(),
            report.verdict.as_str().to_string(),
        ]);
    }
    if resolved.assumed_h_univalent {
        csv.row([
            "assumption".into(),
            String::new(),
            "h_univalent".into(),
            String::new(),
            "assumed".into(),
        ]);
        out.lines.push("ASSUMPTION h_univalent=assumed".into());
    }
    out.files.push(("criteria.csv".into(), csv.into_string()));

    for r in [&a, &b, &cor] {
        report_lines(&mut out, r);
    }
    out.lines.push(format!(
        "VERDICT a={} b={} cor={}",
        a.verdict.as_str(),
        b.verdict.as_str(),
        cor.verdict.as_str()
    ));
    if cfg.emit_svg {
        let dense: Vec<f64> = (1..=64).map(|i| r_last * i as f64 / 64.0).collect();
        let da = limsup_criterion_a(map, &dense, &params)?;
        let db = limsup_criterion_b(map, &dense, &params)?;
        let thresholds: Vec<f64> = a.threshold.into_iter().chain(b.threshold).collect();
        let body = svg::criteria(&[("M_a", &da.curve), ("M_b", &db.curve)], &thresholds);
        out.files.push(("criteria.svg".into(), body));
    }
    Ok(out)
}

fn fit_row(csv: &mut Csv, kind: &str, base: Complex, fit: &EnvelopeFit) {
    csv.row([
        kind.to_string(),
        num(base.re),
        num(base.im),
        num(fit.c_hat),
        num(fit.delta_hat),
        num(fit.intercept),
        fit.bins_used.to_string(),
        fit.n_points.to_string(),
        num(fit.max_residual),
        num(fit.rms_residual),
    ]);
}

pub fn sweep(resolved: &ResolvedMap, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let map = &resolved.map;
    let params = cfg.params();
    let mut out = Outcome::default();
    let r_b = clip(cfg.r_b, map, "r_b", &mut out.warnings);
    let dom = DomainApprox::new(map, r_b, cfg.boundary_m)?;
    let ladder = box_ladder(r_b, params.box_r_max);
    let bases: Vec<Complex> = ladder
        .iter()
        .filter(|&&r| r >= SWEEP_MIN_BASE)
        .map(|&r| Complex::new(r, 0.0))
        .collect();
    let local = par::try_map(&bases, |&z| holder_fit(map, z, &dom, cfg.n_pairs, &params))?;
    let global = holder_fit_global(map, &dom, cfg.n_pairs, &params)?;
    let pairs: Vec<(Complex, Complex)> = directions(RATIO_DIRECTIONS)
        .iter()
        .flat_map(|&t| {
            let zs: Vec<Complex> = ladder.iter().map(|&r| Complex::from_polar(r, t)).collect();
            (0..zs.len())
                .flat_map(move |i| (0..i).map(move |j| (i, j)))
                .map(move |(i, j)| (zs[i], zs[j]))
                .collect::<Vec<_>>()
        })
        .collect();
    let ratio = if pairs.is_empty() {
        out.warnings.push(format!(
            "no box radii fit below r_b = {r_b}; diameter ratio fit skipped"
        ));
        None
    } else {
        Some(diam_ratio_fit(map, &pairs, &dom, &params)?)
    };

    let mut csv = Csv::new(&[
        "kind",
        "base_re",
        "base_im",
        "C_hat",
        "delta_hat",
        "intercept",
        "bins",
        "points",
        "max_residual",
        "rms_residual",
    ]);
    for (z, fit) in bases.iter().zip(&local) {
        fit_row(&mut csv, "holder", *z, fit);
    }
    fit_row(&mut csv, "holder_global", Complex::new(0.0, 0.0), &global);
    if let Some(fit) = &ratio {
        fit_row(&mut csv, "diam_ratio", Complex::new(0.0, 0.0), fit);
    }
    out.files.push(("distortion.csv".into(), csv.into_string()));

    let (lo, hi) = range(local.iter().map(|f| f.delta_hat));
    let opt = |v: Option<f64>| v.map(num).unwrap_or_else(|| "n/a".into());
    let have_local = !local.is_empty();
    out.lines.push(summary_line(
        "SUMMARY",
        &[
            ("map", map.name().to_string()),
            ("r_b", num(r_b)),
            ("holder_delta_min", opt(have_local.then_some(lo))),
            ("holder_delta_max", opt(have_local.then_some(hi))),
            ("global_delta", num(global.delta_hat)),
            ("diam_ratio_delta", opt(ratio.as_ref().map(|f| f.delta_hat))),
        ],
    ));
    Ok(out)
}

pub fn corpus_list() -> Result<Outcome, CliError> {
    let mut out = Outcome::default();
    for (name, desc) in corpus::NAMES {
        out.lines.push(format!("{name:<22} {desc}"));
    }
    out.lines.push(String::new());
    out.lines.push("name,K,h_univalent,john,in_sh0,reliable_radius".into());
    for e in corpus::standard_entries() {
        out.lines.push(format!(
            "{},{},{},{},{},{}",
            e.map.name(),
            num(e.truth_k),
            e.h_univalent,
            e.image_is_john,
            e.in_sh0,
            num(e.map.reliable_radius())
        ));
    }
    Ok(out)
}
