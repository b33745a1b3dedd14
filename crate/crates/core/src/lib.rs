//! Long induced paths in graphs with a Hamiltonian path that avoid an ordered
//! pattern: containment and classification of patterns, constructive
//! extraction algorithms, extremal generators, and exhaustive oracles.

pub mod extremal;
pub mod graph;
pub mod io;
pub mod ktt;
pub mod oracles;
pub mod patterns;
pub mod rng;
pub mod solvers;
pub mod tower;
pub mod verify;

pub use graph::{
    validate_embedding, validate_induced_path, EmbeddingError, GraphError, InducedPath, OrderedGraph, PathError,
    PathGraph, PatternEmbedding,
};
pub use io::{parse_ordered_graph, parse_path_graph, serialize_ordered_graph, serialize_path_graph, ParseError};
