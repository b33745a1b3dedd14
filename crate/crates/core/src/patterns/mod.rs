//! Patterns: containment in hosts, structural predicates, growth classes and
//! the operations that build new patterns from old ones.

mod containment;
pub mod generators;

pub use containment::{contains_pattern, contains_pattern_with_gap, ChordMasks, Chords, CompiledPattern};

use crate::graph::{OrderedGraph, PathGraph};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern is not a matching")]
    NotMatching,
    #[error("pattern is not a perfect matching")]
    NotPerfectMatching,
    #[error("pattern has a crossing pair")]
    Crossing,
    #[error("pattern has no edges")]
    NoEdges,
}

pub fn is_matching(h: &OrderedGraph) -> bool {
    h.degrees().iter().all(|&d| d <= 1)
}

pub fn is_perfect_matching(h: &OrderedGraph) -> bool {
    h.degrees().iter().all(|&d| d == 1)
}

/// The lexicographically smallest pair of edges `(a, c), (b, d)` with `a < b < c < d`.
pub fn crossing_pair_of(h: &OrderedGraph) -> Option<((usize, usize), (usize, usize))> {
    let e = h.edges();
    for (x, &(a, c)) in e.iter().enumerate() {
        for &(b, d) in &e[x + 1..] {
            if a < b && b < c && c < d {
                return Some(((a, c), (b, d)));
            }
        }
    }
    None
}

pub fn has_crossing_pair(h: &OrderedGraph) -> bool {
    crossing_pair_of(h).is_some()
}

pub fn is_noncrossing(h: &OrderedGraph) -> bool {
    !has_crossing_pair(h)
}

/// Nesting depth of a non-crossing perfect matching.
pub fn depth(h: &OrderedGraph) -> Result<usize, PatternError> {
    if !is_perfect_matching(h) {
        return Err(PatternError::NotPerfectMatching);
    }
    if has_crossing_pair(h) {
        return Err(PatternError::Crossing);
    }
    let partner = h.partners();
    let (mut level, mut best) = (0usize, 0usize);
    for v in 0..h.n() {
        if partner[v].is_some_and(|w| w > v) {
            level += 1;
            best = best.max(level);
        } else {
            level -= 1;
        }
    }
    Ok(best)
}

/// Every vertex has all its neighbors on one side.
pub fn one_sided(h: &OrderedGraph) -> bool {
    let n = h.n();
    let mut has_before = vec![false; n];
    let mut has_after = vec![false; n];
    for &(i, j) in h.edges() {
        has_after[i] = true;
        has_before[j] = true;
    }
    (0..n).all(|v| !(has_before[v] && has_after[v]))
}

/// Least `i` with `j <= i < j'` for every edge `(j, j')`.
pub fn split_point(h: &OrderedGraph) -> Option<usize> {
    if h.n() == 0 {
        return None;
    }
    let left = h.edges().iter().map(|e| e.0).max().unwrap_or(0);
    let right = h.edges().iter().map(|e| e.1).min().unwrap_or(h.n());
    (left < right).then_some(left)
}

/// Smallest `m <= 4 |V(h)|` such that `h` is an ordered subgraph of `H_m`.
///
/// Vertices with a later neighbor must sit on the even `a` positions, those
/// with an earlier one on the odd `b` positions, and each edge needs
/// `p(w) >= p(u) + 3`. Every constraint is a monotone lower bound, so placing
/// vertices left to right at the least feasible position is optimal.
pub fn halfgraph_index(h: &OrderedGraph) -> Option<usize> {
    halfgraph_positions(h).map(|(m, _)| m)
}

/// The least `m` and the greedy positions in `H_m`.
pub(crate) fn halfgraph_positions(h: &OrderedGraph) -> Option<(usize, Vec<usize>)> {
    if !one_sided(h) {
        return None;
    }
    let adj = h.adjacency();
    let mut pos: Vec<usize> = Vec::with_capacity(h.n());
    for v in 0..h.n() {
        let mut p = pos.last().map_or(0, |&x| x + 1);
        for &u in adj[v].iter().filter(|&&u| u < v) {
            p = p.max(pos[u] + 3);
        }
        let parity = match (adj[v].iter().any(|&u| u < v), adj[v].iter().any(|&w| w > v)) {
            (true, _) => Some(1),
            (_, true) => Some(0),
            _ => None,
        };
        if parity.is_some_and(|q| p % 2 != q) {
            p += 1;
        }
        pos.push(p);
    }
    let m = pos.last().map_or(1, |&p| (p + 2) / 2).max(1);
    (m <= (4 * h.n()).max(1)).then_some((m, pos))
}

/// [`halfgraph_index`] by ordered-subgraph search against `H_1, H_2, ...`.
pub fn halfgraph_index_by_search(h: &OrderedGraph) -> Option<usize> {
    let compiled = CompiledPattern::new(h);
    (1..=(4 * h.n()).max(1)).find(|&m| {
        let hm = generators::gen_halfgraph_pattern(m);
        let host = PathGraph::new(2 * m, hm.edges().iter().copied()).expect("half-graph edges span at least 3");
        compiled.find(&host, 1).is_some()
    })
}

/// Shifts `b` past `a` and takes the union.
pub fn concat(a: &OrderedGraph, b: &OrderedGraph) -> OrderedGraph {
    let s = a.n();
    let edges = a.edges().iter().copied().chain(b.edges().iter().map(|&(i, j)| (i + s, j + s)));
    OrderedGraph::new(s + b.n(), edges).expect("shifted edges stay valid")
}

/// Adds a new first and last vertex joined by an edge around `h`.
pub fn hat(h: &OrderedGraph) -> OrderedGraph {
    let n = h.n() + 2;
    let edges = std::iter::once((0, n - 1)).chain(h.edges().iter().map(|&(i, j)| (i + 1, j + 1)));
    OrderedGraph::new(n, edges).expect("shifted edges stay valid")
}

/// Inserts `k` isolated vertices between every two consecutive vertices of a matching.
pub fn plus_h(h: &OrderedGraph, k: usize) -> Result<OrderedGraph, PatternError> {
    if !is_matching(h) {
        return Err(PatternError::NotMatching);
    }
    let n = if h.n() == 0 { 0 } else { k * (h.n() - 1) + h.n() };
    let edges = h.edges().iter().map(|&(i, j)| (i * (k + 1), j * (k + 1)));
    Ok(OrderedGraph::new(n, edges).expect("spread edges stay valid"))
}

/// Removes degree-0 vertices and compacts the indices.
pub fn strip_isolated(h: &OrderedGraph) -> OrderedGraph {
    let deg = h.degrees();
    let mut index = vec![usize::MAX; h.n()];
    let mut next = 0;
    for v in 0..h.n() {
        if deg[v] > 0 {
            index[v] = next;
            next += 1;
        }
    }
    let edges = h.edges().iter().map(|&(i, j)| (index[i], index[j]));
    OrderedGraph::new(next, edges).expect("compacted edges stay valid")
}

/// The sub-pattern induced on the vertices for which `keep` holds, compacted.
pub fn induced_subpattern(h: &OrderedGraph, keep: impl Fn(usize) -> bool) -> OrderedGraph {
    let mut index = vec![usize::MAX; h.n()];
    let mut next = 0;
    for v in 0..h.n() {
        if keep(v) {
            index[v] = next;
            next += 1;
        }
    }
    let edges = h
        .edges()
        .iter()
        .filter(|&&(i, j)| index[i] != usize::MAX && index[j] != usize::MAX)
        .map(|&(i, j)| (index[i], index[j]));
    OrderedGraph::new(next, edges).expect("compacted edges stay valid")
}

/// Lower-bound tier of the induced-path function of a pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "lower", rename_all = "lowercase")]
pub enum LowerTier {
    /// `n^(1/d)`; `d = 0` marks an edgeless pattern, which every large host contains.
    Polynomial { d: usize },
    /// `(log n)^(1/d)`.
    #[serde(rename = "polylog")]
    PolyLog { d: usize },
    /// `(log log n)^c` for some `c > 0`.
    #[serde(rename = "loglog")]
    LogLog,
    #[serde(rename = "logloglog")]
    LogLogLog,
    Bounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UpperTier {
    Linear,
    Log,
    #[serde(rename = "none-known")]
    NoneKnown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GrowthClass {
    #[serde(flatten)]
    pub lower: LowerTier,
    pub upper: UpperTier,
}

pub fn classify(h: &OrderedGraph) -> GrowthClass {
    let upper_log = GrowthClass { lower: LowerTier::Bounded, upper: UpperTier::Log };
    if is_matching(h) {
        if is_noncrossing(h) {
            let d = depth(&strip_isolated(h)).expect("stripped non-crossing matching is perfect");
            return GrowthClass { lower: LowerTier::Polynomial { d }, upper: UpperTier::Linear };
        }
        return GrowthClass { lower: LowerTier::PolyLog { d: h.num_edges() - 1 }, ..upper_log };
    }
    // Not a matching: some vertex has degree two, so the logarithmic hosts avoid it.
    if split_point(h).is_some() {
        GrowthClass { lower: LowerTier::LogLog, ..upper_log }
    } else if one_sided(h) {
        GrowthClass { lower: LowerTier::LogLogLog, ..upper_log }
    } else {
        upper_log
    }
}

/// Every structural predicate of a pattern, for reports.
#[derive(Debug, Clone, Serialize)]
pub struct PatternProfile {
    #[serde(flatten)]
    pub class: GrowthClass,
    pub vertices: usize,
    pub edges: usize,
    pub matching: bool,
    pub perfect_matching: bool,
    pub crossing: bool,
    pub depth: Option<usize>,
    pub one_sided: bool,
    pub split_point: Option<usize>,
    pub halfgraph_index: Option<usize>,
}

pub fn profile(h: &OrderedGraph) -> PatternProfile {
    let matching = is_matching(h);
    let crossing = has_crossing_pair(h);
    PatternProfile {
        class: classify(h),
        vertices: h.n(),
        edges: h.num_edges(),
        matching,
        perfect_matching: is_perfect_matching(h),
        crossing,
        depth: (matching && !crossing).then(|| depth(&strip_isolated(h)).expect("non-crossing matching")),
        one_sided: one_sided(h),
        split_point: split_point(h),
        halfgraph_index: halfgraph_index(h),
    }
}
