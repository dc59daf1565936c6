//! Example maps with documented ground truth.
//!
//! | name          | h                         | g                          | K              |
//! |---------------|---------------------------|----------------------------|----------------|
//! | `identity`    | z                         | 0                          | 1              |
//! | `strip`       | (1/2) log((1+z)/(1-z))    | 0                          | 1              |
//! | `affine:c`    | z                         | c z                        | (1+|c|)/(1-|c|)|
//! | `logshear:k`  | -(1/k) log(1-kz)          | -z - (1/k) log(1-kz)       | (1+k)/(1-k)    |
//! | `poly`        | z + z^2/2                 | z^2/8                      | grid estimate  |

use std::fmt;

use crate::error::{Error, Result};
use crate::map::{BoundaryHint, HarmonicMap, Jet, PolarGrid};
use crate::series::{Complex, Series, DEFAULT_MAX_DEGREE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JohnTruth {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for JohnTruth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JohnTruth::Yes => "yes",
            JohnTruth::No => "no",
            JohnTruth::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub map: HarmonicMap,
    pub truth_k: f64,
    pub h_univalent: bool,
    pub image_is_john: JohnTruth,
    /// Whether `g'(0) = 0` holds, i.e. the map is in `S_H^0` rather than `S_H`.
    pub in_sh0: bool,
    pub notes: String,
}

impl CorpusEntry {
    fn new(map: HarmonicMap, truth_k: f64, image_is_john: JohnTruth, notes: &str) -> Self {
        let in_sh0 = map.is_sh0_normalized();
        let h_univalent = map.h_univalent().unwrap_or(false);
        Self {
            map,
            truth_k,
            h_univalent,
            image_is_john,
            in_sh0,
            notes: notes.to_string(),
        }
    }
}

fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

fn linear(a: Complex) -> impl Fn(Complex) -> Jet + Send + Sync {
    move |z| Jet {
        value: a * z,
        d1: a,
        d2: c(0.0),
    }
}

pub fn identity_map() -> CorpusEntry {
    let map = HarmonicMap::new("identity", linear(c(1.0)), linear(c(0.0)))
        .with_claimed_k(1.0)
        .expect("K = 1 is valid")
        .with_h_univalent(true);
    CorpusEntry::new(map, 1.0, JohnTruth::Yes, "h = z, g = 0; image is the unit disk")
}

/// `h = (1/2) log((1+z)/(1-z))`, image the strip `|Im w| < pi/4`.
pub fn strip_map() -> CorpusEntry {
    let h = |z: Complex| {
        let one = c(1.0);
        let q = one - z * z;
        Jet {
            value: 0.5 * ((one + z).ln() - (one - z).ln()),
            d1: q.inv(),
            d2: 2.0 * z / (q * q),
        }
    };
    let map = HarmonicMap::new("strip", h, linear(c(0.0)))
        .with_claimed_k(1.0)
        .expect("K = 1 is valid")
        .with_h_univalent(true)
        .with_boundary_hint(BoundaryHint::HorizontalStrip {
            half_width: std::f64::consts::FRAC_PI_4,
        });
    CorpusEntry::new(
        map,
        1.0,
        JohnTruth::No,
        "conformal map onto the strip |Im w| < pi/4; unbounded, not John",
    )
}

/// `h = z`, `g = c z`. In `S_H` but not `S_H^0` when `c != 0`.
pub fn affine_shear(coef: Complex) -> Result<CorpusEntry> {
    let m = coef.norm();
    if m.is_nan() || m >= 1.0 {
        return Err(Error::InvalidParameter(format!("affine shear needs |c| < 1, got {m}")));
    }
    let k = (1.0 + m) / (1.0 - m);
    let map = HarmonicMap::new(format!("affine:{},{}", coef.re, coef.im), linear(c(1.0)), linear(coef))
        .with_claimed_k(k)?
        .with_h_univalent(true);
    Ok(CorpusEntry::new(
        map,
        k,
        JohnTruth::Yes,
        "real-linear map z + c conj(z); image is an ellipse",
    ))
}

fn check_shear_k(k: f64) -> Result<()> {
    if k > 0.0 && k < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("log shear needs 0 < k < 1, got {k}")))
    }
}

/// Horizontal shear of `phi(z) = z` with dilatation `omega(z) = k z`:
/// `h' = 1/(1 - kz)`, `g' = kz/(1 - kz)`, so `h - g = z`.
pub fn log_shear(k: f64) -> Result<CorpusEntry> {
    check_shear_k(k)?;
    let h = move |z: Complex| {
        let q = c(1.0) - k * z;
        Jet {
            value: -q.ln() / k,
            d1: q.inv(),
            d2: k / (q * q),
        }
    };
    let g = move |z: Complex| {
        let q = c(1.0) - k * z;
        Jet {
            value: -z - q.ln() / k,
            d1: k * z / q,
            d2: k / (q * q),
        }
    };
    let truth_k = (1.0 + k) / (1.0 - k);
    let map = HarmonicMap::new(format!("logshear:{k}"), h, g)
        .with_claimed_k(truth_k)?
        .with_h_univalent(true);
    Ok(CorpusEntry::new(
        map,
        truth_k,
        JohnTruth::Yes,
        "shear of z with omega = kz; bounded smooth Jordan image",
    ))
}

/// Same map as [`log_shear`], built through series algebra:
/// `h' = 1/(1 - omega)`, `g' = omega h'`, integrated with zero constants.
pub fn log_shear_series(k: f64) -> Result<CorpusEntry> {
    check_shear_k(k)?;
    let n = DEFAULT_MAX_DEGREE - 1;
    let omega = Series::from_real(&[0.0, k])?;
    let h1 = Series::from_real(&[1.0])?.add(&omega.scale(c(-1.0))).reciprocal(n)?;
    let g1 = omega.mul(&h1).truncate(n);
    let h = h1.integrate(c(0.0));
    let g = g1.integrate(c(0.0));
    // Tail of the geometric series stays below 1e-13 for |kz|^N <= 1e-13.
    let radius = ((1e-13f64).powf(1.0 / n as f64) / k).min(0.999);
    let truth_k = (1.0 + k) / (1.0 - k);
    let map = HarmonicMap::from_series(format!("logshear-series:{k}"), h, g)
        .with_claimed_k(truth_k)?
        .with_reliable_radius(radius)?
        .with_h_univalent(true);
    Ok(CorpusEntry::new(
        map,
        truth_k,
        JohnTruth::Yes,
        "series-backed twin of logshear",
    ))
}

/// `h = z + z^2/2`, `g = (k/2) z^2` with `k = 1/4`; `omega = kz/(1+z)`.
///
/// `|omega|` is unbounded near `z = -1`, so the entry is only trusted on
/// `|z| <= 0.5`, where it is sense-preserving and `omega` still satisfies
/// the Schwarz-Pick bound. `K` is the grid estimate on that disk.
pub fn polynomial_map() -> CorpusEntry {
    let k = 0.25;
    let h = Series::from_real(&[0.0, 1.0, 0.5]).expect("finite coefficients");
    let g = Series::from_real(&[0.0, 0.0, k / 2.0]).expect("finite coefficients");
    let map = HarmonicMap::from_series("poly", h, g)
        .with_reliable_radius(POLY_RELIABLE_RADIUS)
        .expect("radius in (0,1]")
        .with_h_univalent(true);
    let grid = PolarGrid::new(40, 64, POLY_RELIABLE_RADIUS).points();
    let truth_k = map
        .qc_constant_estimate(&grid)
        .expect("poly is quasiconformal on its reliable disk");
    CorpusEntry::new(
        map,
        truth_k,
        JohnTruth::Unknown,
        "series-backed; h univalent on D; trusted on |z| <= 0.5 only",
    )
}

pub const POLY_RELIABLE_RADIUS: f64 = 0.5;

/// The default parameterization of every corpus family.
pub fn standard_entries() -> Vec<CorpusEntry> {
    vec![
        identity_map(),
        strip_map(),
        affine_shear(c(1.0 / 3.0)).expect("valid"),
        log_shear(1.0 / 3.0).expect("valid"),
        log_shear_series(1.0 / 3.0).expect("valid"),
        polynomial_map(),
    ]
}

/// Names accepted by [`lookup`], with parameter syntax.
pub const NAMES: &[(&str, &str)] = &[
    ("identity", "h = z, g = 0"),
    ("strip", "h = (1/2) log((1+z)/(1-z)), g = 0"),
    ("affine:<c_re>,<c_im>", "h = z, g = c z, |c| < 1"),
    ("logshear:<k>", "shear with omega = kz, 0 < k < 1"),
    ("poly", "h = z + z^2/2, g = z^2/8"),
];

/// Resolves `name[:param[,param]]`.
pub fn lookup(spec: &str) -> Result<CorpusEntry> {
    let (name, params) = match spec.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (spec, None),
    };
    let parse = |s: &str| -> Result<f64> {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| Error::InvalidParameter(format!("not a number: `{s}`")))
    };
    let no_params = |entry: CorpusEntry| match params {
        None => Ok(entry),
        Some(_) => Err(Error::InvalidParameter(format!("`{name}` takes no parameters"))),
    };
    match name {
        "identity" => no_params(identity_map()),
        "strip" => no_params(strip_map()),
        "poly" => no_params(polynomial_map()),
        "affine" => {
            let p = params.ok_or_else(|| Error::InvalidParameter("affine needs <c_re>,<c_im>".into()))?;
            let (re, im) = p
                .split_once(',')
                .ok_or_else(|| Error::InvalidParameter("affine needs <c_re>,<c_im>".into()))?;
            affine_shear(Complex::new(parse(re)?, parse(im)?))
        }
        "logshear" => {
            let p = params.ok_or_else(|| Error::InvalidParameter("logshear needs <k>".into()))?;
            log_shear(parse(p)?)
        }
        "logshear-series" => {
            let p = params.ok_or_else(|| Error::InvalidParameter("logshear-series needs <k>".into()))?;
            log_shear_series(parse(p)?)
        }
        other => Err(Error::InvalidParameter(format!("unknown corpus map `{other}`"))),
    }
}
