//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Errors raised by construction and computation routines.
///
/// Every operation that can fail returns `Result<_, Error>`; truncated
/// searches are not errors and are reported through verdict types instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Matrix violates symmetry, the diagonal convention, or has rank 0.
    InvalidMatrix(String),
    /// Generator or strand index outside the valid range.
    IndexOutOfRange { index: usize, bound: usize },
    /// Elements belong to different Coxeter systems.
    SystemMismatch,
    /// Braid word strand count does not match the tuple length.
    StrandMismatch { braid: usize, tuple: usize },
    /// Free words (or assignments) over different ranks.
    RankMismatch { expected: usize, found: usize },
    /// Operation requires a fully closed orbit.
    IncompleteOrbit,
    /// Operation requires a complete interval poset.
    IncompleteInterval,
    /// Element does not belong to the interval poset.
    NotInInterval,
    /// Expected a height-1 element of the interval.
    NotAnAtom,
    /// Artin arithmetic is unavailable: some free factor is neither finite
    /// nor further decomposable.
    UnsupportedSystem(String),
    /// Product operation invoked on an unsupported product kind.
    UnsupportedKind,
    /// The two certificates project to different group elements.
    ProjectionMismatch,
    /// Graph does not decompose into complete components on contiguous ranges.
    InvalidGraphShape(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidMatrix(msg) => write!(f, "invalid Coxeter matrix: {msg}"),
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range 1..={bound}")
            }
            Error::SystemMismatch => write!(f, "elements belong to different systems"),
            Error::StrandMismatch { braid, tuple } => {
                write!(f, "braid on {braid} strands applied to {tuple}-tuple")
            }
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            Error::IncompleteOrbit => write!(f, "orbit did not close within the bound"),
            Error::IncompleteInterval => write!(f, "interval poset is incomplete"),
            Error::NotInInterval => write!(f, "element not in the interval"),
            Error::NotAnAtom => write!(f, "element is not an atom of the interval"),
            Error::UnsupportedSystem(msg) => write!(f, "unsupported system: {msg}"),
            Error::UnsupportedKind => write!(f, "unsupported product kind"),
            Error::ProjectionMismatch => write!(f, "certificates project to different elements"),
            Error::InvalidGraphShape(msg) => write!(f, "invalid graph shape: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
