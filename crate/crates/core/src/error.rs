use core::fmt;

use crate::vertex::Vertex;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Requested dimension is 0 or larger than 64.
    Dimension(u32),
    /// A parameter fell outside its admissible range.
    OutOfRange {
        what: &'static str,
        value: u64,
        max: u64,
    },
    /// A vertex uses a coordinate beyond the ambient dimension.
    VertexOutsideCube { vertex: Vertex, dim: u32 },
    DuplicateVertex(Vertex),
    /// `C_{U,V}` needs disjoint `U` and `V`.
    OverlappingCompression { u: Vertex, v: Vertex },
    /// Operation needs a compressed family.
    NotCompressed,
    EmptyFamily,
    /// A precondition stated as an inequality was violated.
    Precondition(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(d) => write!(f, "dimension {d} not in 1..=64"),
            Error::OutOfRange { what, value, max } => {
                write!(f, "{what} = {value} out of range (max {max})")
            }
            Error::VertexOutsideCube { vertex, dim } => {
                write!(f, "vertex {vertex} does not fit in Q_{dim}")
            }
            Error::DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
            Error::OverlappingCompression { u, v } => {
                write!(f, "compression sets {u} and {v} overlap")
            }
            Error::NotCompressed => f.write_str("family is not compressed"),
            Error::EmptyFamily => f.write_str("family is empty"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
