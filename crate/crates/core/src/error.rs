use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter is outside its admissible range.
    Param(String),
    /// The defining equations have no solution for these parameters.
    NoSolution(String),
    /// A closed form hits a vanishing denominator; names the quantity.
    DegenerateCase(String),
    /// Fractional linear map with `ad - bc = 0`.
    DegenerateMap,
    /// Eigenvector matrix of the boundary-to-center map is not invertible.
    DegenerateEigenbasis(String),
    /// Y–Δ transform of a triangle whose impedances sum to zero.
    DegenerateTransform,
    /// Gaussian elimination met a pivot below the singularity threshold.
    SingularSystem {
        pivot: f64,
    },
    Topology(String),
    /// The net current vanished while measuring an impedance.
    InfiniteImpedance,
    /// An orbit landed on the pole of the map at the given index.
    PoleHit {
        index: usize,
    },
    /// Operation only defined inside the filter band.
    Regime(String),
    Address(String),
    Size {
        requested: usize,
        max: usize,
    },
    NonFinite(&'static str),
}

impl Error {
    /// True for failures caused by the input parameters (as opposed to the numerics).
    pub fn is_parameter_error(&self) -> bool {
        matches!(
            self,
            Error::Param(_)
                | Error::NoSolution(_)
                | Error::DegenerateCase(_)
                | Error::Regime(_)
                | Error::Address(_)
                | Error::Size { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Param(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NoSolution(msg) => write!(f, "no solution: {msg}"),
            Error::DegenerateCase(msg) => write!(f, "degenerate case: {msg}"),
            Error::DegenerateMap => write!(f, "degenerate fractional linear map (ad - bc = 0)"),
            Error::DegenerateEigenbasis(msg) => write!(f, "degenerate eigenbasis: {msg}"),
            Error::DegenerateTransform => write!(f, "degenerate Y-delta transform (impedances sum to zero)"),
            Error::SingularSystem { pivot } => {
                write!(f, "singular system: pivot magnitude {pivot:e} below threshold")
            }
            Error::Topology(msg) => write!(f, "topology error: {msg}"),
            Error::InfiniteImpedance => write!(f, "infinite impedance: zero net current"),
            Error::PoleHit { index } => write!(f, "iterate {index} hit the pole of the map"),
            Error::Regime(msg) => write!(f, "wrong regime: {msg}"),
            Error::Address(msg) => write!(f, "invalid address: {msg}"),
            Error::Size { requested, max } => {
                write!(f, "level {requested} exceeds the size guard ({max})")
            }
            Error::NonFinite(what) => write!(f, "non-finite value in {what}"),
        }
    }
}

impl core::error::Error for Error {}
