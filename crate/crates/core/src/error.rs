use std::path::PathBuf;

use thiserror::Error;

use crate::spectral::SpectrumKind;

pub type Result<T> = std::result::Result<T, Error>;

/// Reasons a graph6 string fails to decode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// Size byte 126 announces a multi-byte order, which is not supported.
    OrderTooLarge,
    ZeroOrder,
    InvalidByte(u8),
    Truncated {
        expected: usize,
        found: usize,
    },
    TrailingBytes,
    NonZeroPadding,
}

impl std::fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Graph6ErrorKind::Empty => write!(f, "empty input"),
            Graph6ErrorKind::OrderTooLarge => write!(f, "orders above 62 are not supported"),
            Graph6ErrorKind::ZeroOrder => write!(f, "graph of order 0"),
            Graph6ErrorKind::InvalidByte(b) => write!(f, "byte {b:#04x} outside 63..=126"),
            Graph6ErrorKind::Truncated { expected, found } => {
                write!(f, "expected {expected} edge bytes, found {found}")
            }
            Graph6ErrorKind::TrailingBytes => write!(f, "trailing bytes after edge data"),
            Graph6ErrorKind::NonZeroPadding => write!(f, "non-zero padding bits"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {kind}")]
    Graph6 { offset: usize, kind: Graph6ErrorKind },

    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid order {n} for {what}")]
    InvalidOrder { what: &'static str, n: usize },

    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("expected a {expected:?} spectrum, got {found:?}")]
    WrongSpectrumKind {
        expected: SpectrumKind,
        found: SpectrumKind,
    },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("invalid tolerance {0}: must be finite and positive")]
    InvalidTolerance(f64),

    #[error("energy chain violated: {0}")]
    ChainViolation(String),

    #[error("{count} graph(s) failed integrity checks: {}", .offenders.join(", "))]
    Integrity { count: usize, offenders: Vec<String> },

    #[error("degenerate denominator: sin(alpha/2) = {0:e}")]
    DegenerateDenominator(f64),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
