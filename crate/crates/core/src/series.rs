//! Complex power series truncated at a fixed degree.
//!
//! A [`Series`] is a polynomial proxy for an analytic function on the disk.
//! It supplies the analytic parts `h`, `g` of series-backed maps and the
//! shear construction `h' = phi' / (1 - omega)`, `g' = omega h'`.

use std::fmt;

use crate::error::{Error, Result};

pub type Complex = num_complex::Complex64;

/// Degree cap applied by [`Series::mul`] and [`Series::reciprocal`].
pub const DEFAULT_MAX_DEGREE: usize = 64;

/// Absolute tolerance used for coefficient comparisons.
pub const COEFF_TOL: f64 = 1e-12;

/// `coeffs[n]` is the coefficient of `z^n`. Never empty.
#[derive(Clone, PartialEq)]
pub struct Series {
    coeffs: Vec<Complex>,
}

impl Series {
    pub fn new(coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSeries("empty coefficient list".into()));
        }
        if let Some(n) = coeffs.iter().position(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::InvalidSeries(format!("coefficient {n} is not finite")));
        }
        Ok(Self { coeffs })
    }

    /// Builds a series with real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self {
            coeffs: vec![Complex::new(0.0, 0.0)],
        }
    }

    pub fn constant(c: Complex) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Term-by-term derivative. The derivative of a constant is `[0]`.
    pub fn differentiate(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, &c)| c * n as f64)
            .collect();
        Self { coeffs }
    }

    /// Antiderivative with constant term `c0`.
    pub fn integrate(&self, c0: Complex) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(c0);
        coeffs.extend(self.coeffs.iter().enumerate().map(|(n, &c)| c / (n + 1) as f64));
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Complex::new(0.0, 0.0);
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).copied().unwrap_or(zero) + other.coeffs.get(i).copied().unwrap_or(zero))
            .collect();
        Self { coeffs }
    }

    pub fn scale(&self, c: Complex) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at `min(deg a + deg b, DEFAULT_MAX_DEGREE)`.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_capped(other, DEFAULT_MAX_DEGREE)
    }

    /// Cauchy product truncated at `min(deg a + deg b, max_degree)`.
    pub fn mul_capped(&self, other: &Self, max_degree: usize) -> Self {
        let degree = (self.degree() + other.degree()).min(max_degree);
        let mut coeffs = vec![Complex::new(0.0, 0.0); degree + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(degree + 1) {
            for (j, &b) in other.coeffs.iter().enumerate().take(degree + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Multiplicative inverse truncated at degree `n`, via
    /// `b_0 = 1/a_0`, `b_m = -(1/a_0) sum_{j=1..m} a_j b_{m-j}`.
    pub fn reciprocal(&self, n: usize) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() < COEFF_TOL {
            return Err(Error::ReciprocalOfZeroConstantTerm);
        }
        let inv0 = a0.inv();
        let mut out: Vec<Complex> = Vec::with_capacity(n + 1);
        out.push(inv0);
        for m in 1..=n {
            let acc: Complex = (1..=m.min(self.degree())).map(|j| self.coeffs[j] * out[m - j]).sum();
            out.push(-inv0 * acc);
        }
        Ok(Self { coeffs: out })
    }

    /// Coefficient-wise comparison within `tol`; missing trailing
    /// coefficients count as zero.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Complex::new(0.0, 0.0);
        (0..n).all(|i| {
            let a = self.coeffs.get(i).copied().unwrap_or(zero);
            let b = other.coeffs.get(i).copied().unwrap_or(zero);
            (a - b).norm() <= tol
        })
    }

    /// Drops coefficients above `degree`.
    pub fn truncate(&self, degree: usize) -> Self {
        let keep = (degree + 1).min(self.coeffs.len());
        Self {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[f64]) -> Series {
        Series::from_real(c).unwrap()
    }

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(s(&[0.0]).eval(c(0.5)), c(0.0));
        assert_eq!(s(&[0.0, 1.0]).eval(c(0.5)), c(0.5));
        assert!((s(&[1.0, 1.0, 1.0]).eval(c(0.5)) - c(1.75)).norm() < 1e-15);
    }

    #[test]
    fn eval_at_zero_is_constant_term() {
        let a = Series::new(vec![Complex::new(0.3, -0.7), c(2.0), c(-5.0)]).unwrap();
        assert_eq!(a.eval(c(0.0)), Complex::new(0.3, -0.7));
    }

    #[test]
    fn differentiate_examples() {
        assert_eq!(s(&[0.0, 0.0, 1.0]).differentiate(), s(&[0.0, 2.0]));
        assert_eq!(s(&[5.0]).differentiate(), s(&[0.0]));
        assert_eq!(s(&[1.0, 2.0, 3.0]).differentiate(), s(&[2.0, 6.0]));
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(s(&[0.0, 2.0]).integrate(c(0.0)), s(&[0.0, 0.0, 1.0]));
        assert_eq!(s(&[1.0]).integrate(c(0.0)), s(&[0.0, 1.0]));
        assert_eq!(s(&[2.0, 6.0]).integrate(c(7.0)), s(&[7.0, 2.0, 3.0]));
    }

    #[test]
    fn algebra_examples() {
        assert_eq!(s(&[0.0, 1.0]).mul(&s(&[0.0, 1.0])), s(&[0.0, 0.0, 1.0]));
        assert_eq!(s(&[1.0, -1.0]).reciprocal(3).unwrap(), s(&[1.0, 1.0, 1.0, 1.0]));
        assert_eq!(s(&[1.0, 2.0]).add(&s(&[3.0])), s(&[4.0, 2.0]));
    }

    #[test]
    fn reciprocal_of_zero_constant_term() {
        assert_eq!(s(&[0.0, 1.0]).reciprocal(4), Err(Error::ReciprocalOfZeroConstantTerm));
    }

    #[test]
    fn mul_respects_cap() {
        let a = s(&vec![1.0; 50]);
        assert_eq!(a.mul(&a).degree(), DEFAULT_MAX_DEGREE);
        assert_eq!(a.mul_capped(&a, 10).degree(), 10);
        // 1/(1-z) squared = sum (n+1) z^n
        let geo = s(&[1.0, -1.0]).reciprocal(20).unwrap();
        let sq = geo.mul_capped(&geo, 20);
        for (n, c) in sq.coeffs().iter().enumerate() {
            assert!((c.re - (n + 1) as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_empty_and_non_finite() {
        assert!(Series::new(vec![]).is_err());
        assert!(Series::from_real(&[1.0, f64::NAN]).is_err());
        assert!(Series::from_real(&[f64::INFINITY]).is_err());
    }
}
