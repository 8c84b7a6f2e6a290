use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A generator or transform was called with parameters outside its domain.
    InvalidParameter(String),
    /// A vertex index is not below the carrier graph's vertex count.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge was given with equal endpoints.
    SelfLoop(usize),
    /// An exact algorithm refused to run on an input larger than its guard.
    SizeGuard {
        algorithm: &'static str,
        n: usize,
        limit: usize,
    },
    /// A coloring does not assign a color to every vertex or uses a color
    /// outside `1..=k`.
    MalformedColoring(String),
    /// A certificate handed to a lifting step failed verification.
    InvalidCertificate(String),
    /// A trace was produced by a different reduction than the one requested.
    TraceMismatch {
        expected: &'static str,
        found: &'static str,
    },
    /// The random regular-graph pairing never produced a simple graph.
    GenerationFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph with {n} vertices")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::SizeGuard {
                algorithm,
                n,
                limit,
            } => write!(
                f,
                "{algorithm}: input has {n} vertices, guard allows at most {limit}"
            ),
            Error::MalformedColoring(msg) => write!(f, "malformed coloring: {msg}"),
            Error::InvalidCertificate(msg) => write!(f, "invalid certificate: {msg}"),
            Error::TraceMismatch { expected, found } => {
                write!(f, "trace kind mismatch: expected {expected}, found {found}")
            }
            Error::GenerationFailed(msg) => write!(f, "generation failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
