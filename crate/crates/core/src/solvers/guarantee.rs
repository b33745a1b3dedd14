//! Guarantee functions: the recursions of the solvers evaluated over sizes
//! only. A solver that returns a path on `n` vertices returns one of order at
//! least the matching value here.

use super::paths::span_bound;
use super::{concat_split, split_at};
use crate::graph::OrderedGraph;
use crate::patterns::{depth, induced_subpattern, is_noncrossing};
use num_bigint::BigUint;
use std::collections::HashMap;

/// `ceil(log2 n)`, with `0` for `n <= 1`.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Smallest `c` with `c^den >= n^num`.
pub(crate) fn root_ceil(n: usize, num: u32, den: u32) -> usize {
    let target = num_traits::pow::Pow::pow(BigUint::from(n), num);
    let (mut lo, mut hi) = (0usize, n.max(1));
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if num_traits::pow::Pow::pow(BigUint::from(mid), den) >= target {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Split threshold `ceil(n^(1 - 1/d))` of the non-crossing recursion.
pub(crate) fn nc_threshold(n: usize, d: usize) -> usize {
    root_ceil(n, d as u32 - 1, d as u32).max(1)
}

pub(crate) fn ceil_sqrt(n: usize) -> usize {
    root_ceil(n, 1, 2).max(1)
}

/// Lower bound on the jump inside a short crossing path of a block of the
/// gap lemma; also the gap of the embeddings it returns.
pub(crate) fn block_jump(n: usize, m: usize, t: usize) -> usize {
    (n / m + 1).div_ceil(t)
}

/// `h` without vertex 0 and its partner; the partner's index in `h`.
pub(crate) fn drop_first_edge(h: &OrderedGraph) -> (OrderedGraph, usize) {
    let p = h.partners()[0].expect("first vertex of a perfect matching is matched");
    (induced_subpattern(h, |v| v != 0 && v != p), p)
}

/// Leading isolated count, trailing isolated count, longest interior run.
pub(crate) fn isolated_runs(h: &OrderedGraph) -> (usize, usize, usize) {
    let deg = h.degrees();
    let lead = deg.iter().take_while(|&&x| x == 0).count();
    if lead == h.n() {
        return (lead, 0, 0);
    }
    let trail = deg.iter().rev().take_while(|&&x| x == 0).count();
    let (mut best, mut run) = (0, 0);
    for &x in &deg[lead..h.n() - trail] {
        run = if x == 0 { run + 1 } else { 0 };
        best = best.max(run);
    }
    (lead, trail, best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct NestedParams {
    pub t: usize,
    pub m: usize,
    pub s: usize,
}

#[derive(Default)]
pub(crate) struct Memo {
    nc: HashMap<(usize, OrderedGraph), usize>,
    mt: HashMap<(usize, OrderedGraph), usize>,
}

impl Memo {
    /// Guarantee of the non-crossing solver on `n` vertices.
    pub fn gnc(&mut self, n: usize, h: &OrderedGraph) -> usize {
        if n <= 1 {
            return 1;
        }
        if h.num_edges() == 1 {
            return n;
        }
        let key = (n, h.clone());
        if let Some(&v) = self.nc.get(&key) {
            return v;
        }
        let v = if let Some(s) = concat_split(h) {
            let (a, b) = split_at(h, s);
            self.gnc(n / 2, &a).min(self.gnc(n - n / 2, &b))
        } else {
            let inner = induced_subpattern(h, |v| v != 0 && v != h.n() - 1);
            let c = nc_threshold(n, depth(h).expect("non-crossing"));
            (c..=n.saturating_sub(2)).fold(span_bound(n, c), |acc, w| acc.min(self.gnc(w, &inner)))
        };
        self.nc.insert(key, v);
        v
    }

    /// Guarantee of the matching solver on `n` vertices.
    pub fn gm(&mut self, n: usize, h: &OrderedGraph) -> usize {
        if n <= 1 {
            return 1;
        }
        let key = (n, h.clone());
        if let Some(&v) = self.mt.get(&key) {
            return v;
        }
        let v = self.gm_uncached(n, h);
        self.mt.insert(key, v);
        v
    }

    fn gm_uncached(&mut self, n: usize, h: &OrderedGraph) -> usize {
        let (lead, trail, inner_run) = isolated_runs(h);
        if lead + trail + inner_run > 0 {
            let core = crate::patterns::strip_isolated(h);
            let Some(n_core) = n.checked_sub(lead + trail).filter(|&x| x >= 1) else {
                return 1;
            };
            if inner_run == 0 {
                return self.gm(n_core, &core);
            }
            return self.gap_params(n_core, &core, inner_run).map_or(1, |(t, _)| t);
        }
        let k = h.n();
        if h.num_edges() == 1 {
            return n;
        }
        if is_noncrossing(h) {
            return self.gnc(n, h);
        }
        if h.num_edges() == 2 {
            return ceil_log2(n).div_ceil(2).max(1);
        }
        if let Some(s) = concat_split(h) {
            let (a, b) = split_at(h, s);
            return self.gm(n / 2, &a).min(self.gm(n - n / 2, &b));
        }
        let (inner, p) = drop_first_edge(h);
        if p == k - 1 {
            let c = ceil_sqrt(n);
            return (c..=n.saturating_sub(2)).fold(span_bound(n, c), |acc, w| acc.min(self.gm(w, &inner)));
        }
        match self.nested_params(n, h) {
            Some(p) => p.t.min(simulate_copies(n, p) + 1),
            None => 1,
        }
    }

    /// `(t, m)` for the gap route: the largest `t >= 2` such that some odd
    /// `m >= 3` has `gm((m-1)/2, core) >= t` and embeddings with gap at least
    /// `run + 1`; `m` is the smallest such.
    pub fn gap_params(&mut self, n: usize, core: &OrderedGraph, run: usize) -> Option<(usize, usize)> {
        let top = n / (3 * (run + 1));
        for t in (2..=top).rev() {
            if let Some(m) = self.smallest_m(n, core, t) {
                if block_jump(n, m, t) > run {
                    return Some((t, m));
                }
            }
        }
        None
    }

    /// Smallest odd `m` in `3..=n` with `gm((m-1)/2, h) >= t`.
    fn smallest_m(&mut self, n: usize, h: &OrderedGraph, t: usize) -> Option<usize> {
        (3..=n).step_by(2).find(|&m| self.gm((m - 1) / 2, h) >= t)
    }

    /// Parameters of the nested-window case for a perfect matching `h`.
    pub fn nested_params(&mut self, n: usize, h: &OrderedGraph) -> Option<NestedParams> {
        let d = (h.num_edges() - 1) as u32;
        let l = ceil_log2(n);
        let t = root_ceil(l, 1, d).max(2);
        let s = (1..).find(|&s: &usize| num_traits::pow::Pow::pow(BigUint::from(2 * s), d) >= BigUint::from(l)).expect("unbounded");
        let (minus, _) = drop_first_edge(h);
        let m = self.smallest_m(n, &minus, t)?;
        Some(NestedParams { t, m, s })
    }
}

/// Lower bound on the number of nested copies the window loop collects.
pub(crate) fn simulate_copies(n: usize, p: NestedParams) -> usize {
    let (mut copies, mut w) = (0, n);
    while copies < p.s && w >= p.m {
        let g = block_jump(w, p.m, p.t);
        if g < 2 {
            break;
        }
        copies += 1;
        w = g - 1;
    }
    copies
}

/// Guarantee of [`solve_noncrossing`](super::solve_noncrossing) on `n` vertices.
pub fn gnc(n: usize, h: &OrderedGraph) -> usize {
    Memo::default().gnc(n, h)
}

/// Guarantee of [`solve_matching`](super::solve_matching) on `n` vertices.
pub fn gm(n: usize, h: &OrderedGraph) -> usize {
    Memo::default().gm(n, h)
}
