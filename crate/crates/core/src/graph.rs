//! Ordered graphs, Hamiltonian-path hosts and the witness types built on them.
//!
//! Vertices are `0..n` and vertex identity is position. A [`PathGraph`] stores
//! only its chords; the path edges `(i, i + 1)` are implicit.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has a vertex outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("edge ({0}, {1}) must satisfy i < j")]
    NotAscending(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    Duplicate(usize, usize),
    #[error("chord ({0}, {1}) has span < 2")]
    ShortChord(usize, usize),
    #[error("a path graph needs at least one vertex")]
    NoVertices,
}

/// A graph on `0..n` whose vertex order is the index order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrderedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn check_pairs(n: usize, pairs: &mut Vec<(usize, usize)>) -> Result<(), GraphError> {
    for &(i, j) in pairs.iter() {
        if i >= n || j >= n {
            return Err(GraphError::OutOfRange(i, j, n));
        }
        if i >= j {
            return Err(GraphError::NotAscending(i, j));
        }
    }
    pairs.sort_unstable();
    if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
        return Err(GraphError::Duplicate(w[0].0, w[0].1));
    }
    Ok(())
}

impl OrderedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = edges.into_iter().collect();
        check_pairs(n, &mut edges)?;
        Ok(OrderedGraph { n, edges })
    }

    /// Builds from pairs in either orientation, dropping duplicates.
    pub fn from_unordered(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        edges.dedup();
        Self::new(n, edges)
    }

    pub fn empty(n: usize) -> Self {
        OrderedGraph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let e = (i.min(j), i.max(j));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Sorted neighbor lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Partner of each vertex when the graph is a matching.
    pub fn partners(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.n];
        for &(i, j) in &self.edges {
            p[i] = Some(j);
            p[j] = Some(i);
        }
        p
    }
}

/// A host graph `(G, P)` with Hamiltonian path `0, 1, ..., n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathGraph {
    n: usize,
    chords: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    nbrs: Vec<usize>,
}

impl PathGraph {
    pub fn new(n: usize, chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut chords: Vec<_> = chords.into_iter().collect();
        check_pairs(n, &mut chords)?;
        if let Some(&(i, j)) = chords.iter().find(|&&(i, j)| j - i < 2) {
            return Err(GraphError::ShortChord(i, j));
        }
        Ok(Self::from_sorted(n, chords))
    }

    fn from_sorted(n: usize, chords: Vec<(usize, usize)>) -> Self {
        let mut deg = vec![0usize; n + 1];
        for &(i, j) in &chords {
            deg[i] += 1;
            deg[j] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + deg[v];
        }
        let mut fill = offsets.clone();
        let mut nbrs = vec![0usize; offsets[n]];
        for &(i, j) in &chords {
            nbrs[fill[i]] = j;
            fill[i] += 1;
            nbrs[fill[j]] = i;
            fill[j] += 1;
        }
        for v in 0..n {
            nbrs[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        PathGraph { n, chords, offsets, nbrs }
    }

    pub fn bare(n: usize) -> Self {
        assert!(n >= 1, "a path graph needs at least one vertex");
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Chords sorted lexicographically.
    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    /// Chord neighbors of `v`, ascending.
    pub fn chord_neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn is_chord(&self, i: usize, j: usize) -> bool {
        let (a, b) = (i.min(j), i.max(j));
        b - a >= 2 && self.chord_neighbors(a).binary_search(&b).is_ok()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i.abs_diff(j) == 1 || self.is_chord(i, j)
    }

    /// All neighbors of `v` (path edges included), ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = self.chord_neighbors(v).to_vec();
        if v > 0 {
            out.push(v - 1);
        }
        if v + 1 < self.n {
            out.push(v + 1);
        }
        out.sort_unstable();
        out
    }

    /// Neighbors of `v` that come after it, ascending.
    pub fn forward_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let next = (v + 1 < self.n).then_some(v + 1);
        let chords = self.chord_neighbors(v);
        let start = chords.partition_point(|&w| w < v);
        next.into_iter().chain(chords[start..].iter().copied())
    }

    /// Largest span `j - i` over all edges, path edges included.
    pub fn max_span(&self) -> usize {
        let path = usize::from(self.n >= 2);
        self.chords.iter().map(|&(i, j)| j - i).max().unwrap_or(0).max(path)
    }

    /// The sub-host induced on `lo..=hi`, re-indexed from 0.
    pub fn interval(&self, lo: usize, hi: usize) -> PathGraph {
        assert!(lo <= hi && hi < self.n);
        let mut chords = Vec::new();
        for v in lo..=hi {
            for &w in self.chord_neighbors(v) {
                if w > v && w <= hi {
                    chords.push((v - lo, w - lo));
                }
            }
        }
        Self::from_sorted(hi - lo + 1, chords)
    }

    /// Full adjacency bitmasks, available when `n <= 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        let mut m = vec![0u64; self.n];
        for v in 0..self.n {
            if v + 1 < self.n {
                m[v] |= 1 << (v + 1);
                m[v + 1] |= 1 << v;
            }
        }
        for &(i, j) in &self.chords {
            m[i] |= 1 << j;
            m[j] |= 1 << i;
        }
        Some(m)
    }

    /// The lexicographically smallest crossing pair of chords, if any.
    pub fn crossing_pair(&self) -> Option<((usize, usize), (usize, usize))> {
        for (x, &(a, c)) in self.chords.iter().enumerate() {
            for &(b, d) in &self.chords[x + 1..] {
                if b >= c {
                    break;
                }
                if a < b && b < c && c < d {
                    return Some(((a, c), (b, d)));
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("empty vertex sequence")]
    Empty,
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("vertex {0} repeated")]
    Duplicate(usize),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("non-consecutive vertices {0} and {1} are adjacent")]
    Shortcut(usize, usize),
}

/// A host-validated induced path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct InducedPath {
    vertices: Vec<usize>,
    increasing: bool,
}

impl InducedPath {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn increasing(&self) -> bool {
        self.increasing
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }
}

pub fn validate_induced_path(host: &PathGraph, seq: &[usize]) -> Result<InducedPath, PathError> {
    if seq.is_empty() {
        return Err(PathError::Empty);
    }
    let mut seen = vec![false; host.n()];
    for &v in seq {
        if v >= host.n() {
            return Err(PathError::OutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(PathError::Duplicate(v));
        }
    }
    for w in seq.windows(2) {
        if !host.adjacent(w[0], w[1]) {
            return Err(PathError::NotAdjacent(w[0], w[1]));
        }
    }
    for (x, &a) in seq.iter().enumerate() {
        for &b in seq.iter().skip(x + 2) {
            if host.adjacent(a, b) {
                return Err(PathError::Shortcut(a, b));
            }
        }
    }
    let increasing = seq.windows(2).all(|w| w[0] < w[1]);
    Ok(InducedPath { vertices: seq.to_vec(), increasing })
}

/// Strictly increasing host positions realizing a pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PatternEmbedding {
    positions: Vec<usize>,
    gap: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("embedding has {0} positions, pattern has {1} vertices")]
    WrongSize(usize, usize),
    #[error("positions are not strictly increasing")]
    NotIncreasing,
    #[error("position {0} out of range")]
    OutOfRange(usize),
    #[error("pattern edge ({0}, {1}) does not map to a chord")]
    MissingChord(usize, usize),
}

impl PatternEmbedding {
    pub fn new(positions: Vec<usize>) -> Self {
        let gap = positions.windows(2).map(|w| w[1].wrapping_sub(w[0])).min();
        PatternEmbedding { positions, gap }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// Minimum distance between consecutive positions; `None` below two positions.
    pub fn gap(&self) -> Option<usize> {
        self.gap
    }

    /// Whether the gap is at least `g` (vacuous below two positions).
    pub fn gap_at_least(&self, g: usize) -> bool {
        self.gap.is_none_or(|x| x >= g)
    }
}

pub fn validate_embedding(host: &PathGraph, h: &OrderedGraph, emb: &PatternEmbedding) -> Result<(), EmbeddingError> {
    let pos = emb.positions();
    if pos.len() != h.n() {
        return Err(EmbeddingError::WrongSize(pos.len(), h.n()));
    }
    if pos.windows(2).any(|w| w[0] >= w[1]) {
        return Err(EmbeddingError::NotIncreasing);
    }
    if let Some(&p) = pos.iter().find(|&&p| p >= host.n()) {
        return Err(EmbeddingError::OutOfRange(p));
    }
    for &(p, q) in h.edges() {
        if !host.is_chord(pos[p], pos[q]) {
            return Err(EmbeddingError::MissingChord(p, q));
        }
    }
    Ok(())
}
