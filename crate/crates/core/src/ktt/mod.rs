//! Increasing induced paths versus `K_{t,t}` subgraphs: maximum paths between
//! vertex pairs, the triple colorings built on them, monochromatic 3-cliques,
//! and the extraction of `K_{t,t}` from a clique whose triples share an edge pattern.

mod clique;
mod color;
mod extract;
mod paths;
mod pipeline;

pub use clique::{
    find_monochromatic_3clique, largest_monochromatic_3clique, verify_clique_lemmas, CliqueRecord, LemmaCheck, LemmaReport,
};
pub use color::{color_triple, SplitTriple, TripleColor, TripleTable};
pub use extract::{ktt_extract, Variant};
pub use paths::{max_increasing_induced_path, Pfam, MEMO_MAX_N, PFAM_MAX_N};
pub use pipeline::{main_pipeline, s_from_n, NSize, PipelineOutcome, PipelineResult, Stage};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KttWitness {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KttError {
    #[error("host has {n} vertices, limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("precondition fails on triple {triple:?}: {what}")]
    Precondition { triple: (usize, usize, usize), what: String },
    #[error("malformed clique record: {0}")]
    Malformed(String),
    #[error("witness check failed: {0}")]
    Internal(String),
}
