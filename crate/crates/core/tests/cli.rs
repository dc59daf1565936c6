mod common;

use common::*;
use tempfile::tempdir;

const LOGSHEAR: &str = "logshear:0.3333333";

#[test]
fn analyze_identity_is_flat() {
    let dir = tempdir().unwrap();
    let o = qcharm(dir.path(), &["analyze", "identity"]);
    assert_eq!(code(&o), 0);
    let (h, rows) = read_csv(dir.path().join("analyze.csv"));
    assert_eq!(h.join(","), "z_re,z_im,J,|omega|,Dnorm,lnorm,P_re,P_im,Th_abs");
    assert_eq!(rows.len(), 40 * 64);
    for r in &rows {
        assert_eq!(r[column(&h, "J")], "1");
        assert_eq!(r[column(&h, "|omega|")], "0");
    }
}

#[test]
fn analyze_logshear_dilatation_is_k_times_modulus() {
    let dir = tempdir().unwrap();
    assert_eq!(code(&qcharm(dir.path(), &["analyze", LOGSHEAR])), 0);
    let (h, rows) = read_csv(dir.path().join("analyze.csv"));
    let (re, im, om) = (column(&h, "z_re"), column(&h, "z_im"), column(&h, "|omega|"));
    for r in &rows {
        let modulus = f(&r[re]).hypot(f(&r[im]));
        assert!((f(&r[om]) - 0.3333333 * modulus).abs() < 1e-9);
    }
}

#[test]
fn analyze_strip_pre_schwarzian_row() {
    let dir = tempdir().unwrap();
    assert_eq!(code(&qcharm(dir.path(), &["--rmax", "0.9", "analyze", "strip"])), 0);
    let (h, rows) = read_csv(dir.path().join("analyze.csv"));
    let row = rows
        .iter()
        .find(|r| r[0] == "0.9" && r[1] == "0")
        .expect("grid contains (0.9, 0)");
    let th = f(&row[column(&h, "Th_abs")]);
    assert!((th - 2.0 * 0.9 / (1.0 - 0.81)).abs() < 1e-9);
    assert!((th - 9.4737).abs() < 1e-3);
}

#[test]
fn john_identity_summary() {
    let dir = tempdir().unwrap();
    let o = qcharm(dir.path(), &["john", "identity"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!((f(&field(&s, "SUMMARY", "c_hat")) - 1.0).abs() < 1e-3);
    assert!((f(&field(&s, "SUMMARY", "delta_min")) - 1.0).abs() < 1e-9);
    assert!((f(&field(&s, "SUMMARY", "delta_max")) - 1.0).abs() < 1e-9);
    let (h, rows) = read_csv(dir.path().join("john.csv"));
    assert_eq!(h.join(","), "view,index,theta,r,value");
    for view in ["john_c", "diam_over_dist", "decay_delta", "decay_m"] {
        assert!(rows.iter().any(|r| r[0] == view), "{view}");
    }
}

#[test]
fn john_strip_constant_grows_with_boundary_radius() {
    let dir = tempdir().unwrap();
    let near = stdout(&qcharm(dir.path(), &["--rb", "0.99", "john", "strip"]));
    let far = stdout(&qcharm(dir.path(), &["--rb", "0.9999", "john", "strip"]));
    let (a, b) = (
        f(&field(&near, "SUMMARY", "c_hat")),
        f(&field(&far, "SUMMARY", "c_hat")),
    );
    assert!(b - a > 0.5, "{a} -> {b}");
}

#[test]
fn john_logshear_views_finite() {
    let dir = tempdir().unwrap();
    let s = stdout(&qcharm(dir.path(), &["john", LOGSHEAR]));
    for key in [
        "c_hat",
        "diam_over_dist_max",
        "diam_over_dist_growth",
        "delta_min",
        "delta_max",
    ] {
        let v = f(&field(&s, "SUMMARY", key));
        assert!(v.is_finite() && v > 0.0, "{key} = {v}");
    }
    assert!(f(&field(&s, "SUMMARY", "diam_over_dist_growth")) < 1.25);
}

fn verdict(out: &str) -> (String, String, String) {
    (
        field(out, "VERDICT", "a"),
        field(out, "VERDICT", "b"),
        field(out, "VERDICT", "cor"),
    )
}

#[test]
fn criteria_verdicts() {
    let dir = tempdir().unwrap();
    let met = "sufficient_condition_met".to_string();
    let inc = "inconclusive".to_string();
    for map in ["identity", LOGSHEAR] {
        let o = qcharm(dir.path(), &["criteria", map]);
        assert_eq!(code(&o), 0);
        assert_eq!(verdict(&stdout(&o)), (met.clone(), met.clone(), met.clone()), "{map}");
    }
    let o = qcharm(dir.path(), &["criteria", "strip"]);
    assert_eq!(verdict(&stdout(&o)), (inc.clone(), inc.clone(), inc));
    let (h, rows) = read_csv(dir.path().join("criteria.csv"));
    assert_eq!(h.join(","), "quantity,r,value,threshold,verdict");
    for r in rows.iter().filter(|r| r[0] == "M_b") {
        assert!((f(&r[2]) - 2.0 * f(&r[1])).abs() < 1e-9);
    }
    let verdict_rows: Vec<&Vec<String>> = rows.iter().filter(|r| !r[4].is_empty()).collect();
    assert_eq!(verdict_rows.len(), 3);
}

#[test]
fn criteria_inline_series_needs_univalence() {
    let dir = tempdir().unwrap();
    let spec = "series:h=0,0;1,0;0.25,0:g=0,0;0,0;0.05,0";
    let o = qcharm(dir.path(), &["criteria", spec]);
    assert_eq!(code(&o), 4);
    let o = qcharm(dir.path(), &["--assume-h-univalent", "criteria", spec]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("ASSUMPTION h_univalent=assumed"));
    let text = std::fs::read_to_string(dir.path().join("criteria.csv")).unwrap();
    assert!(text.contains("assumption,,h_univalent,,assumed"));
}

#[test]
fn sweep_fits() {
    let dir = tempdir().unwrap();
    assert_eq!(code(&qcharm(dir.path(), &["sweep", "identity"])), 0);
    let (h, rows) = read_csv(dir.path().join("distortion.csv"));
    let (kind, delta) = (column(&h, "kind"), column(&h, "delta_hat"));
    for r in rows.iter().filter(|r| r[kind].starts_with("holder")) {
        assert!((f(&r[delta]) - 1.0).abs() < 0.05, "{r:?}");
    }
    for col in ["bins", "points", "max_residual", "rms_residual"] {
        column(&h, col);
    }

    assert_eq!(code(&qcharm(dir.path(), &["sweep", LOGSHEAR])), 0);
    let (h, rows) = read_csv(dir.path().join("distortion.csv"));
    for r in rows.iter().filter(|r| r[0] == "holder") {
        let d = f(&r[column(&h, "delta_hat")]);
        assert!(d > 0.0 && d <= 1.05, "{r:?}");
    }
}

#[test]
fn exit_codes() {
    let dir = tempdir().unwrap();
    assert_eq!(code(&qcharm(dir.path(), &["analyze", "no-such-map"])), 2);
    assert_eq!(code(&qcharm(dir.path(), &["analyze", "series:h=0,0;1"])), 2);
    assert_eq!(code(&qcharm(dir.path(), &["analyze", "series:h=0,0;2,0:g=0,0"])), 2);
    assert_eq!(code(&qcharm(dir.path(), &["--npairs", "0", "sweep", "identity"])), 2);
    assert_eq!(code(&qcharm(dir.path(), &["--rb", "1.5", "john", "identity"])), 2);
    // |omega| = 2|z| exceeds 1 on the grid
    assert_eq!(
        code(&qcharm(dir.path(), &["analyze", "series:h=0,0;1,0:g=0,0;0,0;1,0"])),
        3
    );
    assert_eq!(code(&qcharm(dir.path(), &["john", "affine:0.3333333,0"])), 4);
    let file = dir.path().join("plain-file");
    std::fs::write(&file, "x").unwrap();
    let o = qcharm(&file.join("sub"), &["analyze", "identity"]);
    assert_eq!(code(&o), 5);
    assert_eq!(
        code(&qcharm(
            dir.path(),
            &["--config", "/nonexistent/run.cfg", "analyze", "identity"]
        )),
        5
    );
}

#[test]
fn normcheck_can_be_skipped() {
    let dir = tempdir().unwrap();
    let spec = "series:h=0,0;2,0:g=0,0";
    assert_eq!(code(&qcharm(dir.path(), &["--no-normcheck", "analyze", spec])), 0);
}

#[test]
fn svg_only_on_request() {
    let plain = tempdir().unwrap();
    for cmd in ["analyze", "john", "criteria"] {
        assert_eq!(code(&qcharm(plain.path(), &[cmd, "identity"])), 0);
    }
    let svgs = std::fs::read_dir(plain.path())
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "svg"))
        .count();
    assert_eq!(svgs, 0);

    let a = tempdir().unwrap();
    let b = tempdir().unwrap();
    for dir in [&a, &b] {
        assert_eq!(code(&qcharm(dir.path(), &["--svg", "john", "strip"])), 0);
        assert_eq!(code(&qcharm(dir.path(), &["--svg", "criteria", "strip"])), 0);
    }
    for name in ["image_domain.svg", "criteria.svg"] {
        let x = std::fs::read(a.path().join(name)).unwrap();
        assert_eq!(x, std::fs::read(b.path().join(name)).unwrap());
        let text = String::from_utf8(x).unwrap();
        assert!(text.contains(r#"version="1.1""#) && text.trim_end().ends_with("</svg>"));
    }
    let crit = std::fs::read_to_string(a.path().join("criteria.svg")).unwrap();
    assert_eq!(crit.matches("stroke-dasharray").count(), 2);
}

#[test]
fn out_dir_from_environment_and_config() {
    let dir = tempdir().unwrap();
    let env_out = dir.path().join("env");
    let o = std::process::Command::new(env!("CARGO_BIN_EXE_qcharm"))
        .args(["analyze", "identity"])
        .env("QCHARM_OUT", &env_out)
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(env_out.join("analyze.csv").exists());

    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "n_r = 5\nn_theta = 8\n").unwrap();
    let o = qcharm(
        dir.path(),
        &["--config", cfg.to_str().unwrap(), "--nr", "3", "analyze", "identity"],
    );
    assert_eq!(code(&o), 0);
    let (_, rows) = read_csv(dir.path().join("analyze.csv"));
    assert_eq!(rows.len(), 3 * 8);
}

#[test]
fn corpus_list_names_every_family() {
    let dir = tempdir().unwrap();
    let o = qcharm(dir.path(), &["corpus-list"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    for name in ["identity", "strip", "affine", "logshear", "poly"] {
        assert!(s.contains(name), "{name}");
    }
}
