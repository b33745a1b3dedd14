//! Constructive induced-path extraction: each solver returns a certified
//! induced path or an embedding of the forbidden pattern.

mod crossing_free;
mod gap;
mod grs;
mod guarantee;
mod matching;
mod noncrossing;
mod paths;

pub use crossing_free::solve_crossing_free;
pub use gap::find_gap_or_path;
pub use grs::{grs_search, GrsResult};
pub use guarantee::{ceil_log2, gm, gnc};
pub use matching::solve_matching;
pub use noncrossing::solve_noncrossing;
pub use paths::{shortest_increasing_path, span_path};

use crate::graph::{validate_embedding, validate_induced_path, InducedPath, OrderedGraph, PathGraph, PatternEmbedding};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("pattern is not a matching")]
    NotMatching,
    #[error("pattern has no edges")]
    NoEdges,
    #[error("pattern is not a perfect matching")]
    NotPerfectMatching,
    #[error("pattern has a crossing pair")]
    PatternCrossing,
    #[error("host has crossing chords ({0}, {1}) and ({2}, {3})")]
    HostCrossing(usize, usize, usize, usize),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("lifted path has order {got}, below t = {t}: the recursive guarantee does not reach t")]
    HypothesisUnmet { got: usize, t: usize },
    #[error("host has {n} vertices, limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SolveOutcome {
    Path { vertices: Vec<usize> },
    Witness { positions: Vec<usize> },
}

/// An outcome with the order it promises for paths and the branch that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solved {
    #[serde(flatten)]
    pub outcome: SolveOutcome,
    pub guarantee: usize,
    pub provenance: String,
}

impl Solved {
    pub(crate) fn path(p: InducedPath, guarantee: usize, provenance: impl Into<String>) -> Self {
        Solved { outcome: SolveOutcome::Path { vertices: p.into_vertices() }, guarantee, provenance: provenance.into() }
    }

    pub(crate) fn witness(positions: Vec<usize>, guarantee: usize, provenance: impl Into<String>) -> Self {
        Solved { outcome: SolveOutcome::Witness { positions }, guarantee, provenance: provenance.into() }
    }

    pub fn is_path(&self) -> bool {
        matches!(self.outcome, SolveOutcome::Path { .. })
    }

    pub fn vertices(&self) -> Option<&[usize]> {
        match &self.outcome {
            SolveOutcome::Path { vertices } => Some(vertices),
            SolveOutcome::Witness { .. } => None,
        }
    }

    pub fn positions(&self) -> Option<&[usize]> {
        match &self.outcome {
            SolveOutcome::Witness { positions } => Some(positions),
            SolveOutcome::Path { .. } => None,
        }
    }

    /// Re-indexes an outcome found on `host.interval(lo, ..)` back to the host.
    pub(crate) fn shifted(mut self, lo: usize) -> Self {
        match &mut self.outcome {
            SolveOutcome::Path { vertices: v } | SolveOutcome::Witness { positions: v } => {
                v.iter_mut().for_each(|x| *x += lo)
            }
        }
        self
    }

    pub(crate) fn within(mut self, context: &str) -> Self {
        self.provenance = format!("{context} > {}", self.provenance);
        self
    }

    /// Re-checks the outcome against the host: paths must be induced and meet
    /// the guarantee, witnesses must map every edge of `h` to a chord.
    pub fn check(&self, host: &PathGraph, h: &OrderedGraph) -> Result<(), String> {
        match &self.outcome {
            SolveOutcome::Path { vertices } => {
                let p = validate_induced_path(host, vertices).map_err(|e| e.to_string())?;
                if p.order() < self.guarantee {
                    return Err(format!("path order {} below guarantee {}", p.order(), self.guarantee));
                }
                Ok(())
            }
            SolveOutcome::Witness { positions } => {
                validate_embedding(host, h, &PatternEmbedding::new(positions.clone())).map_err(|e| e.to_string())
            }
        }
    }
}

pub(crate) fn matching_parts(h: &OrderedGraph) -> Result<(), SolveError> {
    if !crate::patterns::is_matching(h) {
        return Err(SolveError::NotMatching);
    }
    if h.num_edges() == 0 {
        return Err(SolveError::NoEdges);
    }
    Ok(())
}

/// Smallest prefix length `s` in `1..k` such that no edge of `h` leaves `0..s`.
pub(crate) fn concat_split(h: &OrderedGraph) -> Option<usize> {
    let k = h.n();
    let mut reach = 0;
    let partner = h.partners();
    for v in 0..k.saturating_sub(1) {
        if let Some(w) = partner[v] {
            reach = reach.max(w);
        }
        if reach <= v {
            return Some(v + 1);
        }
    }
    None
}

pub(crate) fn split_at(h: &OrderedGraph, s: usize) -> (OrderedGraph, OrderedGraph) {
    let a = crate::patterns::induced_subpattern(h, |v| v < s);
    let b = crate::patterns::induced_subpattern(h, |v| v >= s);
    (a, b)
}
