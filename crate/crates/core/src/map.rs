//! Harmonic maps `f = h + conj(g)` and their pointwise quantities.
//!
//! With `f_z = h'` and `f_zbar = conj(g')`:
//!
//! * Jacobian `J_f = |h'|^2 - |g'|^2`
//! * dilatation `omega = g' / h'`
//! * `||D_f|| = |h'| + |g'|`, `l(D_f) = ||h'| - |g'||`
//! * Pre-Schwarzian `P_f = (log J_f)_z = (h'' conj(h') - g'' conj(g')) / J_f`
//! * analytic Pre-Schwarzian `T_h = h'' / h'`

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::par;
use crate::series::{Complex, Series, COEFF_TOL};

/// Threshold on `|h'|` and `|J_f|` below which a point counts as degenerate.
pub const DEGENERATE_TOL: f64 = 1e-14;

/// `|omega|` at or above `1 - QC_TOL` means the map is not quasiconformal.
pub const QC_TOL: f64 = 1e-12;

/// Value and first two derivatives of an analytic function at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    pub value: Complex,
    pub d1: Complex,
    pub d2: Complex,
}

/// An analytic function on (a subdisk of) the unit disk.
pub trait Analytic: Send + Sync {
    fn jet(&self, z: Complex) -> Jet;
}

impl<F> Analytic for F
where
    F: Fn(Complex) -> Jet + Send + Sync,
{
    fn jet(&self, z: Complex) -> Jet {
        self(z)
    }
}

/// Analytic function backed by a truncated power series.
#[derive(Clone, Debug)]
pub struct SeriesFn {
    f: Series,
    d1: Series,
    d2: Series,
}

impl SeriesFn {
    pub fn new(f: Series) -> Self {
        let d1 = f.differentiate();
        let d2 = d1.differentiate();
        Self { f, d1, d2 }
    }

    pub fn series(&self) -> &Series {
        &self.f
    }
}

impl Analytic for SeriesFn {
    fn jet(&self, z: Complex) -> Jet {
        Jet {
            value: self.f.eval(z),
            d1: self.d1.eval(z),
            d2: self.d2.eval(z),
        }
    }
}

/// Analytic geometry of the image known in closed form; used to sharpen
/// boundary distances for unbounded images.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundaryHint {
    /// Image lies in the horizontal strip `|Im w| < half_width`.
    HorizontalStrip { half_width: f64 },
}

/// Everything `analyze` reports at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointSample {
    pub z: Complex,
    pub jacobian: f64,
    pub dilatation_abs: f64,
    pub dnorm: f64,
    pub lnorm: f64,
    pub pre_schwarzian: Complex,
    pub analytic_pre_schwarzian_abs: f64,
}

#[derive(Clone)]
pub struct HarmonicMap {
    name: String,
    h: Arc<dyn Analytic>,
    g: Arc<dyn Analytic>,
    claimed_k: Option<f64>,
    reliable_radius: f64,
    h_univalent: Option<bool>,
    boundary_hint: Option<BoundaryHint>,
}

impl fmt::Debug for HarmonicMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HarmonicMap")
            .field("name", &self.name)
            .field("claimed_k", &self.claimed_k)
            .field("reliable_radius", &self.reliable_radius)
            .field("h_univalent", &self.h_univalent)
            .finish_non_exhaustive()
    }
}

impl HarmonicMap {
    /// Map from closed-form (or otherwise exact) evaluators; trusted on all of D.
    pub fn new(name: impl Into<String>, h: impl Analytic + 'static, g: impl Analytic + 'static) -> Self {
        Self {
            name: name.into(),
            h: Arc::new(h),
            g: Arc::new(g),
            claimed_k: None,
            reliable_radius: 1.0,
            h_univalent: None,
            boundary_hint: None,
        }
    }

    /// Map whose analytic parts are truncated power series.
    pub fn from_series(name: impl Into<String>, h: Series, g: Series) -> Self {
        Self::new(name, SeriesFn::new(h), SeriesFn::new(g))
    }

    pub fn with_claimed_k(mut self, k: f64) -> Result<Self> {
        if !(k >= 1.0 && k.is_finite()) {
            return Err(Error::InvalidParameter(format!("claimed K must be >= 1, got {k}")));
        }
        self.claimed_k = Some(k);
        Ok(self)
    }

    pub fn with_reliable_radius(mut self, r: f64) -> Result<Self> {
        if !(r > 0.0 && r <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "reliable radius must be in (0,1], got {r}"
            )));
        }
        self.reliable_radius = r;
        Ok(self)
    }

    pub fn with_h_univalent(mut self, known: bool) -> Self {
        self.h_univalent = Some(known);
        self
    }

    pub fn with_boundary_hint(mut self, hint: BoundaryHint) -> Self {
        self.boundary_hint = Some(hint);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn claimed_k(&self) -> Option<f64> {
        self.claimed_k
    }

    pub fn reliable_radius(&self) -> f64 {
        self.reliable_radius
    }

    pub fn h_univalent(&self) -> Option<bool> {
        self.h_univalent
    }

    pub fn boundary_hint(&self) -> Option<BoundaryHint> {
        self.boundary_hint
    }

    pub fn h_jet(&self, z: Complex) -> Jet {
        self.h.jet(z)
    }

    pub fn g_jet(&self, z: Complex) -> Jet {
        self.g.jet(z)
    }

    /// `h(z) + conj(g(z))`.
    pub fn value(&self, z: Complex) -> Complex {
        self.h.jet(z).value + self.g.jet(z).value.conj()
    }

    /// `(f_z, f_zbar) = (h'(z), conj(g'(z)))`.
    pub fn wirtinger(&self, z: Complex) -> (Complex, Complex) {
        (self.h.jet(z).d1, self.g.jet(z).d1.conj())
    }

    pub fn jacobian(&self, z: Complex) -> f64 {
        let (h1, g1) = (self.h.jet(z).d1, self.g.jet(z).d1);
        h1.norm_sqr() - g1.norm_sqr()
    }

    pub fn dilatation(&self, z: Complex) -> Result<Complex> {
        let (h, g) = (self.h.jet(z), self.g.jet(z));
        check_h_prime(h.d1, z)?;
        Ok(g.d1 / h.d1)
    }

    /// `omega' = (g'' h' - g' h'') / h'^2`.
    pub fn dilatation_derivative(&self, z: Complex) -> Result<Complex> {
        let (h, g) = (self.h.jet(z), self.g.jet(z));
        check_h_prime(h.d1, z)?;
        Ok((g.d2 * h.d1 - g.d1 * h.d2) / (h.d1 * h.d1))
    }

    /// `||D_f(z)|| = |h'| + |g'|`.
    pub fn dnorm(&self, z: Complex) -> f64 {
        self.h.jet(z).d1.norm() + self.g.jet(z).d1.norm()
    }

    /// `l(D_f(z)) = ||h'| - |g'||`.
    pub fn lnorm(&self, z: Complex) -> f64 {
        (self.h.jet(z).d1.norm() - self.g.jet(z).d1.norm()).abs()
    }

    pub fn pre_schwarzian(&self, z: Complex) -> Result<Complex> {
        let (h, g) = (self.h.jet(z), self.g.jet(z));
        pre_schwarzian_from_jets(&h, &g, z)
    }

    /// `T_h = h'' / h'`.
    pub fn analytic_pre_schwarzian(&self, z: Complex) -> Result<Complex> {
        let h = self.h.jet(z);
        check_h_prime(h.d1, z)?;
        Ok(h.d2 / h.d1)
    }

    /// Central-difference estimate of `(log J_f)_z = (d/dx - i d/dy)/2 log J_f`.
    pub fn finite_diff_log_jacobian_z(&self, z: Complex, step: f64) -> Result<Complex> {
        let log_j = |w: Complex| -> Result<f64> {
            let j = self.jacobian(w);
            if j <= 0.0 {
                return Err(Error::VanishingJacobian { re: w.re, im: w.im });
            }
            Ok(j.ln())
        };
        let sx = Complex::new(step, 0.0);
        let sy = Complex::new(0.0, step);
        let dx = log_j(z + sx)? - log_j(z - sx)?;
        let dy = log_j(z + sy)? - log_j(z - sy)?;
        Ok(Complex::new(dx, -dy) / (4.0 * step))
    }

    /// All pointwise quantities at once.
    pub fn sample(&self, z: Complex) -> Result<PointSample> {
        let (h, g) = (self.h.jet(z), self.g.jet(z));
        check_h_prime(h.d1, z)?;
        let (ah, ag) = (h.d1.norm(), g.d1.norm());
        Ok(PointSample {
            z,
            jacobian: h.d1.norm_sqr() - g.d1.norm_sqr(),
            dilatation_abs: (g.d1 / h.d1).norm(),
            dnorm: ah + ag,
            lnorm: (ah - ag).abs(),
            pre_schwarzian: pre_schwarzian_from_jets(&h, &g, z)?,
            analytic_pre_schwarzian_abs: (h.d2 / h.d1).norm(),
        })
    }

    /// `K = (1 + m) / (1 - m)` with `m` the largest `|omega|` on `grid`.
    pub fn qc_constant_estimate(&self, grid: &[Complex]) -> Result<f64> {
        if grid.is_empty() {
            return Err(Error::InvalidParameter("empty grid".into()));
        }
        let m = self.max_dilatation(grid)?;
        if m >= 1.0 - QC_TOL {
            return Err(Error::NotQuasiconformalOnGrid { max_dilatation: m });
        }
        Ok((1.0 + m) / (1.0 - m))
    }

    pub fn max_dilatation(&self, grid: &[Complex]) -> Result<f64> {
        let mods = par::try_map(grid, |&z| self.dilatation(z).map(|w| w.norm()))?;
        Ok(par::max(&mods))
    }

    /// `claimed_K` when present, otherwise the grid estimate.
    pub fn k_or_estimate(&self, grid: &[Complex]) -> Result<f64> {
        match self.claimed_k {
            Some(k) => Ok(k),
            None => self.qc_constant_estimate(grid),
        }
    }

    /// Whether `h(0) = g(0) = g'(0) = 0` and `h'(0) = 1` within `1e-12`.
    pub fn is_sh0_normalized(&self) -> bool {
        let zero = Complex::new(0.0, 0.0);
        let (h, g) = (self.h.jet(zero), self.g.jet(zero));
        h.value.norm() <= COEFF_TOL
            && g.value.norm() <= COEFF_TOL
            && (h.d1 - 1.0).norm() <= COEFF_TOL
            && g.d1.norm() <= COEFF_TOL
    }

    /// `h(0) = g(0) = 0`, `h'(0) = 1`, any `g'(0)`.
    pub fn is_sh_normalized(&self) -> bool {
        let zero = Complex::new(0.0, 0.0);
        let (h, g) = (self.h.jet(zero), self.g.jet(zero));
        h.value.norm() <= COEFF_TOL && g.value.norm() <= COEFF_TOL && (h.d1 - 1.0).norm() <= COEFF_TOL
    }

    /// Local sense-preservation (`J_f > 0`) at every grid point. This says
    /// nothing about global univalence.
    pub fn is_sense_preserving_on(&self, grid: &[Complex]) -> bool {
        let js = par::map(grid, |&z| self.jacobian(z));
        js.iter().all(|&j| j > 0.0)
    }

    pub(crate) fn require_sh0(&self) -> Result<()> {
        if self.is_sh0_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized(self.name.clone()))
        }
    }
}

fn check_h_prime(h1: Complex, z: Complex) -> Result<()> {
    if h1.norm() < DEGENERATE_TOL {
        Err(Error::VanishingHPrime { re: z.re, im: z.im })
    } else {
        Ok(())
    }
}

fn pre_schwarzian_from_jets(h: &Jet, g: &Jet, z: Complex) -> Result<Complex> {
    check_h_prime(h.d1, z)?;
    let j = h.d1.norm_sqr() - g.d1.norm_sqr();
    if j.abs() < DEGENERATE_TOL {
        return Err(Error::VanishingJacobian { re: z.re, im: z.im });
    }
    Ok((h.d2 * h.d1.conj() - g.d2 * g.d1.conj()) / j)
}

/// Polar tensor grid: `n_r` radii uniform in `[0, r_max]` times `n_theta`
/// angles `2 pi j / n_theta`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarGrid {
    pub n_r: usize,
    pub n_theta: usize,
    pub r_max: f64,
}

impl Default for PolarGrid {
    fn default() -> Self {
        Self {
            n_r: 40,
            n_theta: 64,
            r_max: 0.95,
        }
    }
}

impl PolarGrid {
    pub fn new(n_r: usize, n_theta: usize, r_max: f64) -> Self {
        Self { n_r, n_theta, r_max }
    }

    /// Default grid clipped to the map's reliable radius.
    pub fn default_for(map: &HarmonicMap) -> Self {
        let g = Self::default();
        Self {
            r_max: g.r_max.min(map.reliable_radius()),
            ..g
        }
    }

    pub fn radii(&self) -> Vec<f64> {
        match self.n_r {
            0 => Vec::new(),
            1 => vec![self.r_max],
            n => (0..n).map(|i| self.r_max * i as f64 / (n - 1) as f64).collect(),
        }
    }

    pub fn angles(&self) -> Vec<f64> {
        let n = self.n_theta;
        (0..n).map(|j| std::f64::consts::TAU * j as f64 / n as f64).collect()
    }

    /// Points ordered radius-major.
    pub fn points(&self) -> Vec<Complex> {
        let angles = self.angles();
        self.radii()
            .into_iter()
            .flat_map(|r| angles.iter().map(move |&t| Complex::from_polar(r, t)))
            .collect()
    }
}
