use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("reciprocal of a series with zero constant term")]
    ReciprocalOfZeroConstantTerm,

    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error("|h'(z)| vanishes at z = {re} + {im}i")]
    VanishingHPrime { re: f64, im: f64 },

    #[error("Jacobian vanishes or is negative at z = {re} + {im}i")]
    VanishingJacobian { re: f64, im: f64 },

    #[error("map is not quasiconformal on the grid (max |omega| = {max_dilatation})")]
    NotQuasiconformalOnGrid { max_dilatation: f64 },

    #[error("boundary distance {distance:e} below resolution at w = {re} + {im}i")]
    DegenerateBoundary { re: f64, im: f64, distance: f64 },

    #[error("criterion requires univalence of h, which is not known for `{0}`")]
    HUnivalenceUnknown(String),

    #[error("`{0}` is not normalized in S_H^0 (h(0)=g(0)=g'(0)=0, h'(0)=1)")]
    NotNormalized(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
