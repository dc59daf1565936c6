//! Map specifications: `name[:param[,param]]` for corpus maps or
//! `series:h=<re,im;...>:g=<re,im;...>` for inline series.

use crate::corpus::{self, CorpusEntry};
use crate::map::HarmonicMap;
use crate::series::{Complex, Series};

use super::CliError;

#[derive(Clone, Debug, PartialEq)]
pub enum MapSpec {
    Corpus(String),
    Series { h: Vec<Complex>, g: Vec<Complex> },
}

/// A resolved map plus what the CLI knows about it.
#[derive(Clone, Debug)]
pub struct ResolvedMap {
    pub map: HarmonicMap,
    pub entry: Option<CorpusEntry>,
    pub assumed_h_univalent: bool,
}

fn parse_coeffs(text: &str) -> Result<Vec<Complex>, CliError> {
    text.split(';')
        .map(|pair| {
            let (re, im) = pair
                .split_once(',')
                .ok_or_else(|| CliError::Usage(format!("coefficient `{pair}` must be `re,im`")))?;
            let p = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::Usage(format!("not a number: `{s}`")))
            };
            Ok(Complex::new(p(re)?, p(im)?))
        })
        .collect()
}

impl MapSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let Some(rest) = text.strip_prefix("series:") else {
            return Ok(MapSpec::Corpus(text.to_string()));
        };
        let (mut h, mut g) = (None, None);
        for part in rest.split(':') {
            match part.split_once('=') {
                Some(("h", v)) => h = Some(parse_coeffs(v)?),
                Some(("g", v)) => g = Some(parse_coeffs(v)?),
                _ => return Err(CliError::Usage(format!("unexpected series component `{part}`"))),
            }
        }
        match (h, g) {
            (Some(h), Some(g)) => Ok(MapSpec::Series { h, g }),
            _ => Err(CliError::Usage("inline series needs both h=... and g=...".into())),
        }
    }

    pub fn resolve(&self, normcheck: bool, assume_h_univalent: bool) -> Result<ResolvedMap, CliError> {
        match self {
            MapSpec::Corpus(name) => {
                let entry = corpus::lookup(name).map_err(|e| CliError::Usage(e.to_string()))?;
                Ok(ResolvedMap {
                    map: entry.map.clone(),
                    entry: Some(entry),
                    assumed_h_univalent: false,
                })
            }
            MapSpec::Series { h, g } => {
                let hs = Series::new(h.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
                let gs = Series::new(g.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
                let mut map = HarmonicMap::from_series("series", hs, gs);
                if normcheck && !map.is_sh0_normalized() {
                    return Err(CliError::Usage(
                        "inline series violates h(0)=g(0)=g'(0)=0, h'(0)=1 (pass --no-normcheck to skip)".into(),
                    ));
                }
                if assume_h_univalent {
                    map = map.with_h_univalent(true);
                }
                Ok(ResolvedMap {
                    map,
                    entry: None,
                    assumed_h_univalent: assume_h_univalent,
                })
            }
        }
    }
}
