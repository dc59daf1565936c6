//! Run configuration: defaults, `key = value` config files, flag overrides.

use std::path::PathBuf;

use crate::analyzer::{AnalysisParams, DEFAULT_R_B};
use crate::map::PolarGrid;

use super::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub r_max: f64,
    pub r_b: f64,
    pub n_r: usize,
    pub n_theta: usize,
    pub n_dir: usize,
    pub n_t: usize,
    pub boundary_m: usize,
    pub n_pairs: usize,
    pub margin: f64,
    pub tol_geom: f64,
    pub output_dir: PathBuf,
    pub emit_svg: bool,
}

pub const OUT_ENV: &str = "QCHARM_OUT";

impl Default for RunConfig {
    fn default() -> Self {
        let grid = PolarGrid::default();
        let params = AnalysisParams::default();
        Self {
            r_max: grid.r_max,
            r_b: DEFAULT_R_B,
            n_r: grid.n_r,
            n_theta: grid.n_theta,
            n_dir: 16,
            n_t: 256,
            boundary_m: params.boundary_m,
            n_pairs: 4000,
            margin: params.margin,
            tol_geom: params.tol_geom,
            output_dir: PathBuf::from("."),
            emit_svg: false,
        }
    }
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid value `{value}` for `{key}`")))
}

impl RunConfig {
    /// Applies one `key = value` setting. Keys match the field names.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key.trim() {
            "r_max" => self.r_max = parse_value(key, value)?,
            "r_b" => self.r_b = parse_value(key, value)?,
            "n_r" => self.n_r = parse_value(key, value)?,
            "n_theta" => self.n_theta = parse_value(key, value)?,
            "n_dir" => self.n_dir = parse_value(key, value)?,
            "n_t" => self.n_t = parse_value(key, value)?,
            "boundary_m" => self.boundary_m = parse_value(key, value)?,
            "n_pairs" => self.n_pairs = parse_value(key, value)?,
            "margin" => self.margin = parse_value(key, value)?,
            "tol_geom" => self.tol_geom = parse_value(key, value)?,
            "output_dir" => self.output_dir = PathBuf::from(value.trim().trim_matches('"')),
            "emit_svg" => self.emit_svg = parse_value(key, value)?,
            other => return Err(CliError::Usage(format!("unknown config key `{other}`"))),
        }
        Ok(())
    }

    /// Parses `key = value` lines; blank lines and `#` comments are skipped.
    pub fn apply_file_contents(&mut self, text: &str) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected `key = value`", n + 1)))?;
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let unit = |name: &str, v: f64| {
            if v > 0.0 && v < 1.0 {
                Ok(())
            } else {
                Err(CliError::Usage(format!("{name} = {v} must lie in (0,1)")))
            }
        };
        unit("r_max", self.r_max)?;
        unit("r_b", self.r_b)?;
        for (name, v) in [
            ("n_r", self.n_r),
            ("n_theta", self.n_theta),
            ("n_dir", self.n_dir),
            ("n_t", self.n_t),
            ("boundary_m", self.boundary_m),
            ("n_pairs", self.n_pairs),
        ] {
            if v == 0 {
                return Err(CliError::Usage(format!("{name} must be positive")));
            }
        }
        if !(self.margin >= 0.0 && self.tol_geom >= 0.0) {
            return Err(CliError::Usage("margin and tol_geom must be non-negative".into()));
        }
        Ok(())
    }

    pub fn params(&self) -> AnalysisParams {
        AnalysisParams {
            n_theta: self.n_theta,
            boundary_m: self.boundary_m,
            margin: self.margin,
            tol_geom: self.tol_geom,
            ..AnalysisParams::default()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_override() {
        let mut cfg = RunConfig::default();
        cfg.apply_file_contents(
            "# comment\nr_b = 0.99\n\nn_dir=32  # trailing\nemit_svg = true\noutput_dir = \"out dir\"\n",
        )
        .unwrap();
        assert_eq!(cfg.r_b, 0.99);
        assert_eq!(cfg.n_dir, 32);
        assert!(cfg.emit_svg);
        assert_eq!(cfg.output_dir, PathBuf::from("out dir"));
        assert!(cfg.apply_file_contents("bogus = 1").is_err());
        assert!(cfg.apply_file_contents("n_r = many").is_err());
        assert!(cfg.apply_file_contents("n_r").is_err());
    }

    #[test]
    fn validation() {
        assert!(RunConfig::default().validate().is_ok());
        let cfg = RunConfig {
            n_pairs: 0,
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = RunConfig {
            r_b: 1.0,
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
    }
}
