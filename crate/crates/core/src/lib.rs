//! Largest adjacency eigenvalue of induced subgraphs of the hypercube.
//!
//! The crate is `no_std` (it needs `alloc`). Vertices are subsets of
//! `{1..=d}` for `d ≤ 64`; see [`vertex`] for the encoding.
#![cfg_attr(not(any(feature = "std", test)), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod compress;
pub mod error;
pub mod family;
pub mod search;
pub mod spectral;
pub mod subcubes;
pub mod vertex;

pub use compress::{
    binary_compression, compress_family_uv, compress_vector_uv, first_violation, fully_compress,
    fully_compress_with, is_compressed, rayleigh, Compressed, Compressible, CompressionStep, Schedule,
    WeightVector,
};
pub use error::{Error, Result};
pub use family::{
    degree_profile, hamming_ball, induced_edges, initial_segment, DegreeProfile, Edge, EdgeSet, VertexFamily,
};
pub use vertex::{binary_compare, Vertex, MAX_DIM};
pub use spectral::{
    classic_bounds, count_p2_c4, hamming_lambda1_exact, hamming_upper_bound, hamming_walk_lower_bound, lambda1,
    lambda1_dense, level_bound, limit_constant, star_value, walk_trace_bound, Eigenvector, Method, SpectralResult,
};
pub use subcubes::{count_subcubes, initial_count, subcube_bound_integer, subcube_bound_smooth, SubcubeCount};
pub use search::partition::{build_partition, verify_partition, EpsilonPreset, PartitionCertificate, PartitionReport};
pub use search::{enumerate_compressed, exhaustive_max_lambda1, max_lambda1, verify_star_regime, SearchConfig, SearchResult};
