//! Numerical toolkit for planar harmonic mappings `f = h + conj(g)` of the
//! unit disk.
//!
//! The crate evaluates the pointwise differential quantities of a harmonic
//! map (Jacobian, dilatation, `||D_f||`, Pre-Schwarzian), the hyperbolic
//! geometry of the disk, and a set of empirical estimators that test whether
//! the image `f(D)` behaves like a radial John disk.
//!
//! Module map:
//!
//! * [`series`]: complex power series truncated at a fixed degree.
//! * [`map`]: the [`HarmonicMap`] type and its pointwise quantities.
//! * [`hyperbolic`]: Poincaré distance, the boxes `B(z)` and arcs `I(z)`.
//! * [`analyzer`]: boundary distance, John constants, decay and Hölder fits,
//!   Pre-Schwarzian criteria.
//! * [`corpus`]: closed-form example maps with known ground truth.
//! * [`cli`]: the `qcharm` command line front end.
//!
//! Grid sweeps run on rayon when the `parallel` feature is enabled (the
//! default) and sequentially otherwise. Results are identical either way.

pub mod analyzer;
pub mod cli;
pub mod corpus;
mod error;
pub mod hyperbolic;
pub mod map;
pub mod par;
pub mod series;

pub use error::{Error, Result};
pub use map::{HarmonicMap, PolarGrid};
pub use series::{Complex, Series};
