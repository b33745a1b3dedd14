use super::guarantee::{nc_threshold, Memo};
use super::paths::{shortest_increasing_path, span_bound};
use super::{concat_split, split_at, SolveError, Solved};
use crate::graph::{OrderedGraph, PathGraph};
use crate::patterns::{depth, induced_subpattern, is_noncrossing, is_perfect_matching};

/// Either a path of order at least [`gnc`](super::gnc)`(n, h)` or an
/// embedding of the non-crossing perfect matching `h`.
pub fn solve_noncrossing(host: &PathGraph, h: &OrderedGraph) -> Result<Solved, SolveError> {
    check(h)?;
    Ok(solve(host, h, &mut Memo::default()))
}

pub(crate) fn check(h: &OrderedGraph) -> Result<(), SolveError> {
    if h.num_edges() == 0 {
        return Err(SolveError::NoEdges);
    }
    if !is_perfect_matching(h) {
        return Err(SolveError::NotPerfectMatching);
    }
    if !is_noncrossing(h) {
        return Err(SolveError::PatternCrossing);
    }
    Ok(())
}

/// Lexicographically smallest chord, or the whole path when there is none.
pub(crate) fn single_edge(host: &PathGraph) -> Solved {
    match host.chords().first() {
        Some(&(i, j)) => Solved::witness(vec![i, j], host.n(), "single edge: chord"),
        None => {
            let p = shortest_increasing_path(host, 0, host.n() - 1).expect("valid endpoints");
            Solved::path(p, host.n(), "single edge: chordless host")
        }
    }
}

/// Leftmost chord of maximum span, if any.
pub(crate) fn widest_chord(host: &PathGraph) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for &(i, j) in host.chords() {
        if best.is_none_or(|(a, b)| j - i > b - a) {
            best = Some((i, j));
        }
    }
    best
}

pub(crate) fn solve(host: &PathGraph, h: &OrderedGraph, memo: &mut Memo) -> Solved {
    let n = host.n();
    let guarantee = memo.gnc(n, h);
    if n == 1 {
        return Solved::path(shortest_increasing_path(host, 0, 0).expect("single vertex"), 1, "single vertex");
    }
    if h.num_edges() == 1 {
        return single_edge(host);
    }
    if let Some(s) = concat_split(h) {
        let (a, b) = split_at(h, s);
        let half = n / 2;
        let left = solve(&host.interval(0, half - 1), &a, memo);
        let Some(pa) = left.positions().map(<[usize]>::to_vec) else {
            return Solved { guarantee, ..left.within("concatenation: first half") };
        };
        let right = solve(&host.interval(half, n - 1), &b, memo).shifted(half);
        let Some(pb) = right.positions().map(<[usize]>::to_vec) else {
            return Solved { guarantee, ..right.within("concatenation: second half") };
        };
        return Solved::witness([pa, pb].concat(), guarantee, "concatenation: both halves");
    }
    let c = nc_threshold(n, depth(h).expect("checked non-crossing"));
    match widest_chord(host) {
        Some((i, j)) if j - i > c => {
            let inner = induced_subpattern(h, |v| v != 0 && v != h.n() - 1);
            let sub = solve(&host.interval(i + 1, j - 1), &inner, memo).shifted(i + 1);
            match sub.positions() {
                Some(p) => {
                    let positions = std::iter::once(i).chain(p.iter().copied()).chain(std::iter::once(j)).collect();
                    Solved::witness(positions, guarantee, format!("widest chord ({i}, {j}) around inner copy"))
                }
                None => Solved { guarantee, ..sub.within(&format!("inside widest chord ({i}, {j})")) },
            }
        }
        _ => {
            let p = shortest_increasing_path(host, 0, n - 1).expect("valid endpoints");
            debug_assert!(p.order() >= span_bound(n, c));
            Solved::path(p, guarantee, "short chords: span path")
        }
    }
}
