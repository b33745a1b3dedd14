//! Ordered-subgraph search of a pattern in the chords of a host.

use crate::graph::{OrderedGraph, PathGraph, PatternEmbedding};

/// Read access to the chord set of a host.
pub trait Chords {
    fn n(&self) -> usize;
    fn is_chord(&self, i: usize, j: usize) -> bool;
    /// Number of chords from `x` to smaller vertices.
    fn chords_before(&self, x: usize) -> usize;
    /// Number of chords from `x` to larger vertices.
    fn chords_after(&self, x: usize) -> usize;
}

impl Chords for PathGraph {
    fn n(&self) -> usize {
        PathGraph::n(self)
    }

    fn is_chord(&self, i: usize, j: usize) -> bool {
        PathGraph::is_chord(self, i, j)
    }

    fn chords_before(&self, x: usize) -> usize {
        self.chord_neighbors(x).partition_point(|&w| w < x)
    }

    fn chords_after(&self, x: usize) -> usize {
        self.chord_neighbors(x).len() - self.chords_before(x)
    }
}

/// Chord sets of hosts with at most 64 vertices, one bitmask per vertex.
#[derive(Debug, Clone, Copy)]
pub struct ChordMasks<'a>(pub &'a [u64]);

impl Chords for ChordMasks<'_> {
    fn n(&self) -> usize {
        self.0.len()
    }

    fn is_chord(&self, i: usize, j: usize) -> bool {
        self.0[i] >> j & 1 == 1
    }

    fn chords_before(&self, x: usize) -> usize {
        (self.0[x] & ((1u64 << x) - 1)).count_ones() as usize
    }

    fn chords_after(&self, x: usize) -> usize {
        (self.0[x] >> x >> 1).count_ones() as usize
    }
}

/// A pattern prepared for repeated searches.
#[derive(Debug, Clone)]
pub struct CompiledPattern {
    k: usize,
    back: Vec<Vec<usize>>,
    back_deg: Vec<usize>,
    fwd_deg: Vec<usize>,
}

impl CompiledPattern {
    pub fn new(h: &OrderedGraph) -> Self {
        let k = h.n();
        let mut back = vec![Vec::new(); k];
        let mut fwd_deg = vec![0; k];
        for &(p, q) in h.edges() {
            back[q].push(p);
            fwd_deg[p] += 1;
        }
        let back_deg = back.iter().map(Vec::len).collect();
        CompiledPattern { k, back, back_deg, fwd_deg }
    }

    /// Lexicographically smallest embedding with gap at least `min_gap`.
    pub fn find<C: Chords>(&self, host: &C, min_gap: usize) -> Option<PatternEmbedding> {
        let min_gap = min_gap.max(1);
        if self.k == 0 {
            return Some(PatternEmbedding::new(Vec::new()));
        }
        let span = (self.k - 1).checked_mul(min_gap)?;
        if span >= host.n() {
            return None;
        }
        let mut pos = Vec::with_capacity(self.k);
        self.extend(host, min_gap, &mut pos).then(|| PatternEmbedding::new(pos))
    }

    fn extend<C: Chords>(&self, host: &C, min_gap: usize, pos: &mut Vec<usize>) -> bool {
        let p = pos.len();
        if p == self.k {
            return true;
        }
        let lo = pos.last().map_or(0, |&x| x + min_gap);
        let hi = host.n() - 1 - (self.k - 1 - p) * min_gap;
        for x in lo..=hi {
            if self.back_deg[p] > 0 && host.chords_before(x) < self.back_deg[p] {
                continue;
            }
            if self.fwd_deg[p] > 0 && host.chords_after(x) < self.fwd_deg[p] {
                continue;
            }
            if !self.back[p].iter().all(|&q| host.is_chord(pos[q], x)) {
                continue;
            }
            pos.push(x);
            if self.extend(host, min_gap, pos) {
                return true;
            }
            pos.pop();
        }
        false
    }
}

/// The lexicographically smallest embedding of `h` into the chords of `host`.
pub fn contains_pattern(host: &PathGraph, h: &OrderedGraph) -> Option<PatternEmbedding> {
    CompiledPattern::new(h).find(host, 1)
}

/// As [`contains_pattern`], restricted to embeddings with gap at least `min_gap`.
pub fn contains_pattern_with_gap(host: &PathGraph, h: &OrderedGraph, min_gap: usize) -> Option<PatternEmbedding> {
    CompiledPattern::new(h).find(host, min_gap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::generators::{crossing_pair, k2, ordered_p3};

    #[test]
    fn gap_examples() {
        let g = PathGraph::new(8, [(0, 4)]).unwrap();
        assert_eq!(contains_pattern_with_gap(&g, &k2(), 4).unwrap().positions(), &[0, 4]);
        assert!(contains_pattern_with_gap(&g, &k2(), 5).is_none());
        assert!(contains_pattern(&PathGraph::bare(9), &k2()).is_none());
    }

    #[test]
    fn masks_match_graph() {
        let g = PathGraph::new(6, [(0, 2), (1, 3), (2, 5)]).unwrap();
        let mut m = vec![0u64; 6];
        for &(i, j) in g.chords() {
            m[i] |= 1 << j;
            m[j] |= 1 << i;
        }
        let cm = ChordMasks(&m);
        for h in [k2(), crossing_pair(), ordered_p3()] {
            let c = CompiledPattern::new(&h);
            assert_eq!(c.find(&cm, 1), c.find(&g, 1));
        }
        for x in 0..6 {
            assert_eq!(cm.chords_before(x), Chords::chords_before(&g, x));
            assert_eq!(cm.chords_after(x), Chords::chords_after(&g, x));
        }
    }

    #[test]
    fn empty_pattern_always_embeds() {
        let e = contains_pattern(&PathGraph::bare(1), &OrderedGraph::empty(0)).unwrap();
        assert!(e.positions().is_empty());
        assert!(contains_pattern(&PathGraph::bare(2), &OrderedGraph::empty(3)).is_none());
        assert_eq!(contains_pattern(&PathGraph::bare(3), &OrderedGraph::empty(3)).unwrap().positions(), &[0, 1, 2]);
    }
}
