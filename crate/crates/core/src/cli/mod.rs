//! Command-line front end.
//!
//! ```text
//! qcharm [FLAGS] analyze|john|criteria|sweep <MAP>
//! qcharm corpus-list
//! ```
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 numerical degeneracy,
//! 4 missing hypothesis, 5 I/O.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::Error;

mod commands;
pub mod config;
pub mod format;
pub mod spec;
pub mod svg;

pub use commands::Outcome;
pub use config::RunConfig;
pub use spec::MapSpec;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Analysis(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 5,
            CliError::Analysis(e) => match e {
                Error::ReciprocalOfZeroConstantTerm | Error::InvalidSeries(_) | Error::InvalidParameter(_) => 2,
                Error::VanishingHPrime { .. }
                | Error::VanishingJacobian { .. }
                | Error::NotQuasiconformalOnGrid { .. }
                | Error::DegenerateBoundary { .. } => 3,
                Error::HUnivalenceUnknown(_) | Error::NotNormalized(_) => 4,
            },
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qcharm",
    version,
    about = "Harmonic maps of the disk: distortion, John constants, pre-Schwarzian criteria"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pointwise Jacobian, dilatation, norms and pre-Schwarzian on a polar grid.
    Analyze { map: String },
    /// Radial John constant, box diameter ratios and decay exponents.
    John { map: String },
    /// The two limsup criteria and the sup corollary.
    Criteria { map: String },
    /// Holder-type distortion fits and box diameter ratio fits.
    Sweep { map: String },
    /// List corpus maps and their ground truth.
    CorpusList,
}

#[derive(Debug, Default, clap::Args)]
struct Flags {
    #[arg(long, global = true)]
    rmax: Option<f64>,
    #[arg(long, global = true)]
    rb: Option<f64>,
    #[arg(long, global = true)]
    nr: Option<usize>,
    #[arg(long, global = true)]
    ntheta: Option<usize>,
    #[arg(long, global = true)]
    ndir: Option<usize>,
    #[arg(long, global = true)]
    nt: Option<usize>,
    #[arg(long = "boundary-m", global = true)]
    boundary_m: Option<usize>,
    #[arg(long, global = true)]
    npairs: Option<usize>,
    #[arg(long, global = true)]
    margin: Option<f64>,
    #[arg(long = "tol-geom", global = true)]
    tol_geom: Option<f64>,
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    svg: bool,
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[arg(long = "no-normcheck", global = true)]
    no_normcheck: bool,
    #[arg(long = "assume-h-univalent", global = true)]
    assume_h_univalent: bool,
}

fn build_config(flags: &Flags, env_out: Option<OsString>) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::default();
    if let Some(dir) = env_out {
        cfg.output_dir = PathBuf::from(dir);
    }
    if let Some(path) = &flags.config {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        cfg.apply_file_contents(&text)?;
    }
    macro_rules! over {
        ($($flag:ident => $field:ident),*) => {
            $(if let Some(v) = flags.$flag.clone() { cfg.$field = v; })*
        };
    }
    over!(rmax => r_max, rb => r_b, nr => n_r, ntheta => n_theta, ndir => n_dir, nt => n_t,
          boundary_m => boundary_m, npairs => n_pairs, margin => margin, tol_geom => tol_geom,
          out => output_dir);
    if flags.svg {
        cfg.emit_svg = true;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn write_outputs(cfg: &RunConfig, outcome: &Outcome) -> Result<(), CliError> {
    if outcome.files.is_empty() {
        return Ok(());
    }
    let dir = &cfg.output_dir;
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.clone(),
        source,
    })?;
    for (name, body) in &outcome.files {
        let path = dir.join(name);
        std::fs::write(&path, body).map_err(|source| CliError::Io { path, source })?;
    }
    Ok(())
}

fn execute(
    cli: &Cli,
    env_out: Option<OsString>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    let cfg = build_config(&cli.flags, env_out)?;
    let resolve = |text: &str| MapSpec::parse(text)?.resolve(!cli.flags.no_normcheck, cli.flags.assume_h_univalent);
    let outcome = match &cli.command {
        Command::Analyze { map } => commands::analyze(&resolve(map)?, &cfg)?,
        Command::John { map } => commands::john(&resolve(map)?, &cfg)?,
        Command::Criteria { map } => commands::criteria(&resolve(map)?, &cfg)?,
        Command::Sweep { map } => commands::sweep(&resolve(map)?, &cfg)?,
        Command::CorpusList => commands::corpus_list()?,
    };
    for w in &outcome.warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    write_outputs(&cfg, &outcome)?;
    for line in &outcome.lines {
        let _ = writeln!(stdout, "{line}");
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
/// `env_out` stands in for the `QCHARM_OUT` variable.
pub fn run<I, T>(args: I, env_out: Option<OsString>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, env_out, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn main() -> i32 {
    run(
        std::env::args_os(),
        std::env::var_os(config::OUT_ENV),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flags(args: &[&str]) -> Flags {
        let mut full = vec!["qcharm"];
        full.extend_from_slice(args);
        full.push("corpus-list");
        Cli::try_parse_from(full).unwrap().flags
    }

    #[test]
    fn precedence_flag_over_config_over_env() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("run.cfg");
        std::fs::write(&file, "r_b = 0.99\noutput_dir = from_config\nn_t = 128\n").unwrap();
        let f = flags(&["--config", file.to_str().unwrap(), "--rb", "0.9"]);
        let cfg = build_config(&f, Some("from_env".into())).unwrap();
        assert_eq!(cfg.r_b, 0.9);
        assert_eq!(cfg.n_t, 128);
        assert_eq!(cfg.output_dir, PathBuf::from("from_config"));
        let cfg = build_config(&flags(&[]), Some("from_env".into())).unwrap();
        assert_eq!(cfg.output_dir, PathBuf::from("from_env"));
        let cfg = build_config(&flags(&["--out", "o"]), Some("from_env".into())).unwrap();
        assert_eq!(cfg.output_dir, PathBuf::from("o"));
    }

    #[test]
    fn exit_codes_are_distinct() {
        let codes = [
            CliError::Usage(String::new()).exit_code(),
            CliError::Analysis(Error::DegenerateBoundary {
                re: 0.0,
                im: 0.0,
                distance: 0.0,
            })
            .exit_code(),
            CliError::Analysis(Error::HUnivalenceUnknown(String::new())).exit_code(),
            CliError::Io {
                path: PathBuf::new(),
                source: std::io::Error::other("x"),
            }
            .exit_code(),
        ];
        assert_eq!(codes, [2, 3, 4, 5]);
    }

    #[test]
    fn parse_failures_exit_2() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["qcharm", "frobnicate"], None, &mut o, &mut e), 2);
        assert_eq!(
            run(["qcharm", "--rb", "x", "analyze", "identity"], None, &mut o, &mut e),
            2
        );
        assert_eq!(run(["qcharm", "--help"], None, &mut o, &mut e), 0);
    }
}
