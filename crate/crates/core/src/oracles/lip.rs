//! Exact longest induced paths by branch and bound over adjacency bitmasks.

use super::OracleError;
use crate::graph::{validate_induced_path, InducedPath, PathGraph};

pub const DEFAULT_CAP: usize = 30;

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

fn all_mask(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

struct Search<'a> {
    adj: &'a [u64],
    all: u64,
    increasing: bool,
    path: Vec<usize>,
    best: Vec<usize>,
    best_len: usize,
    /// Stop as soon as a path of this order is seen.
    target: usize,
}

impl Search<'_> {
    fn new(adj: &[u64], increasing: bool, target: usize) -> Search<'_> {
        Search {
            adj,
            all: all_mask(adj.len()),
            increasing,
            path: Vec::with_capacity(adj.len()),
            best: Vec::new(),
            best_len: 0,
            target,
        }
    }

    fn done(&self) -> bool {
        self.best_len >= self.target
    }

    fn run(&mut self) {
        for s in 0..self.adj.len() {
            self.path.push(s);
            self.dfs(s, bit(s));
            self.path.pop();
            if self.done() {
                return;
            }
        }
    }

    fn dfs(&mut self, last: usize, blocked: u64) {
        let len = self.path.len();
        // A path and its reverse are the same; keep the orientation that starts lower.
        if len > self.best_len && (self.increasing || len == 1 || self.path[0] < last) {
            self.best_len = len;
            self.best.clear();
            self.best.extend_from_slice(&self.path);
            if self.done() {
                return;
            }
        }
        let mut cands = self.adj[last] & !blocked;
        if self.increasing {
            cands &= above(last);
        }
        if cands == 0 {
            return;
        }
        let next_blocked = blocked | self.adj[last] | bit(last);
        let mut avail = self.all & !next_blocked;
        if self.increasing {
            avail &= above(cands.trailing_zeros() as usize);
        }
        if len + 1 + self.reach(cands, avail) as usize <= self.best_len {
            return;
        }
        while cands != 0 {
            let x = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            self.path.push(x);
            self.dfs(x, next_blocked);
            self.path.pop();
            if self.done() {
                return;
            }
        }
    }

    /// Vertices of `avail` reachable from `start` through `avail`.
    fn reach(&self, start: u64, avail: u64) -> u32 {
        let mut seen = 0u64;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let y = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[y];
            }
            next &= avail & !seen;
            seen |= next;
            frontier = next;
        }
        seen.count_ones()
    }
}

/// The lexicographically smallest maximum-order induced path, as a vertex list.
pub(crate) fn longest_in_masks(adj: &[u64], increasing: bool) -> Vec<usize> {
    let mut s = Search::new(adj, increasing, usize::MAX);
    s.run();
    s.best
}

/// Whether some induced path has at least `target` vertices.
pub(crate) fn has_induced_path_of_order(adj: &[u64], target: usize) -> bool {
    let mut s = Search::new(adj, false, target);
    s.run();
    s.best_len >= target
}

pub(crate) fn longest_order_in_masks(adj: &[u64]) -> usize {
    let mut s = Search::new(adj, false, usize::MAX);
    s.run();
    s.best_len
}

fn masks_within_cap(host: &PathGraph, cap: usize) -> Result<Vec<u64>, OracleError> {
    let limit = cap.min(64);
    if host.n() > limit {
        return Err(OracleError::CapExceeded { what: "host vertices", limit, got: host.n() });
    }
    Ok(host.masks().expect("n is at most 64"))
}

/// A maximum-order induced path, lexicographically smallest among maxima.
pub fn longest_induced_path_exact(host: &PathGraph) -> Result<InducedPath, OracleError> {
    longest_induced_path_with_cap(host, DEFAULT_CAP)
}

pub fn longest_induced_path_with_cap(host: &PathGraph, cap: usize) -> Result<InducedPath, OracleError> {
    let adj = masks_within_cap(host, cap)?;
    let seq = longest_in_masks(&adj, false);
    Ok(validate_induced_path(host, &seq).expect("search only extends induced paths"))
}

/// A maximum-order strictly ascending induced path.
pub fn longest_increasing_induced_path_exact(host: &PathGraph) -> Result<InducedPath, OracleError> {
    longest_increasing_induced_path_with_cap(host, DEFAULT_CAP)
}

pub fn longest_increasing_induced_path_with_cap(host: &PathGraph, cap: usize) -> Result<InducedPath, OracleError> {
    let adj = masks_within_cap(host, cap)?;
    let seq = longest_in_masks(&adj, true);
    Ok(validate_induced_path(host, &seq).expect("search only extends induced paths"))
}
