//! Exact `g_H(n)` for tiny `n`: the minimum, over every host on `n` vertices
//! that avoids `h`, of the longest induced path.

use super::lip::{has_induced_path_of_order, longest_order_in_masks};
use super::OracleError;
use crate::graph::{OrderedGraph, PathGraph};
use crate::patterns::{ChordMasks, CompiledPattern};
use rayon::prelude::*;
use serde::Serialize;

pub const MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GhnResult {
    pub pattern: OrderedGraph,
    pub n: usize,
    /// `None` when no host on `n` vertices avoids the pattern.
    pub value: Option<usize>,
    /// The first avoiding host, in enumeration order, attaining `value`.
    #[serde(serialize_with = "ser_host")]
    pub witness: Option<PathGraph>,
    pub count_avoiding: u64,
}

fn ser_host<S: serde::Serializer>(g: &Option<PathGraph>, s: S) -> Result<S::Ok, S::Error> {
    match g {
        Some(g) => s.collect_seq(g.chords()),
        None => s.serialize_none(),
    }
}

/// Candidate chords in lexicographic order; bit `b` of a host index selects `pairs[b]`.
pub fn chord_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 2..n).map(move |j| (i, j))).collect()
}

/// The host with index `mask` in the enumeration order.
pub fn host_from_mask(n: usize, mask: u64) -> PathGraph {
    let pairs = chord_pairs(n);
    let chords = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p);
    PathGraph::new(n, chords).expect("enumerated pairs are chords")
}

/// Fills full adjacency and chord-only masks for host `mask`.
fn fill_masks(n: usize, pairs: &[(usize, usize)], mask: u64, adj: &mut [u64], chords: &mut [u64]) {
    chords[..n].fill(0);
    for v in 0..n {
        adj[v] = 0;
        if v > 0 {
            adj[v] |= 1 << (v - 1);
        }
        if v + 1 < n {
            adj[v] |= 1 << (v + 1);
        }
    }
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        let (i, j) = pairs[b];
        chords[i] |= 1 << j;
        chords[j] |= 1 << i;
    }
    for v in 0..n {
        adj[v] |= chords[v];
    }
}

#[derive(Debug, Clone, Copy)]
struct Partial {
    best: Option<(usize, u64)>,
    count: u64,
}

fn scan(n: usize, pairs: &[(usize, usize)], pat: &CompiledPattern, range: std::ops::Range<u64>) -> Partial {
    let mut adj = [0u64; MAX_N];
    let mut chords = [0u64; MAX_N];
    let mut out = Partial { best: None, count: 0 };
    for mask in range {
        fill_masks(n, pairs, mask, &mut adj, &mut chords);
        if pat.find(&ChordMasks(&chords[..n]), 1).is_some() {
            continue;
        }
        out.count += 1;
        // Only a strictly smaller value can replace the current best.
        if let Some((v, _)) = out.best {
            if has_induced_path_of_order(&adj[..n], v) {
                continue;
            }
        }
        out.best = Some((longest_order_in_masks(&adj[..n]), mask));
    }
    out
}

/// Exact `g_H(n)` over all `2^(C(n-1, 2))` hosts, using `threads` workers.
///
/// The mask space is cut into equal contiguous chunks that are reduced in
/// order, so the result does not depend on the thread count.
pub fn ghn_exact(h: &OrderedGraph, n: usize, threads: usize) -> Result<GhnResult, OracleError> {
    if n == 0 || n > MAX_N {
        return Err(OracleError::CapExceeded { what: "ghn host vertices", limit: MAX_N, got: n });
    }
    let pairs = chord_pairs(n);
    let total = 1u64 << pairs.len();
    let pat = CompiledPattern::new(h);
    let chunk_bits = (pairs.len() as u32).min(10);
    let chunks = 1u64 << chunk_bits;
    let size = total / chunks;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| OracleError::Invalid(format!("thread pool: {e}")))?;
    let partials: Vec<Partial> = pool.install(|| {
        (0..chunks).into_par_iter().map(|c| scan(n, &pairs, &pat, c * size..(c + 1) * size)).collect()
    });
    let mut best: Option<(usize, u64)> = None;
    let mut count = 0;
    for p in &partials {
        count += p.count;
        if let Some(b) = p.best {
            if best.is_none_or(|cur| b.0 < cur.0) {
                best = Some(b);
            }
        }
    }
    Ok(GhnResult {
        pattern: h.clone(),
        n,
        value: best.map(|b| b.0),
        witness: best.map(|b| host_from_mask(n, b.1)),
        count_avoiding: count,
    })
}
