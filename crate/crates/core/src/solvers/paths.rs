use super::SolveError;
use crate::graph::{validate_induced_path, InducedPath, PathGraph};

/// Fewest-vertex ascending path from `a` to `b` over forward edges, ties
/// broken lexicographically.
///
/// Such a path is always induced: a chord between two non-consecutive
/// vertices would give a shorter one.
pub fn shortest_increasing_path(host: &PathGraph, a: usize, b: usize) -> Result<InducedPath, SolveError> {
    if a > b || b >= host.n() {
        return Err(SolveError::Parameter(format!("need a <= b < n, got a={a}, b={b}, n={}", host.n())));
    }
    let len = b - a + 1;
    let mut dist = vec![u32::MAX; len];
    dist[len - 1] = 0;
    for v in (a..b).rev() {
        let best = host.forward_neighbors(v).take_while(|&x| x <= b).map(|x| dist[x - a]).min();
        dist[v - a] = best.expect("v + 1 is a forward neighbor") + 1;
    }
    let mut seq = vec![a];
    let mut cur = a;
    while cur != b {
        let want = dist[cur - a] - 1;
        cur = host.forward_neighbors(cur).find(|&x| x <= b && dist[x - a] == want).expect("distance labels are consistent");
        seq.push(cur);
    }
    Ok(validate_induced_path(host, &seq).expect("shortest increasing paths are induced"))
}

/// Shortest increasing path from the first to the last vertex; it has
/// order at least `n / max_span`.
pub fn span_path(host: &PathGraph) -> Result<InducedPath, SolveError> {
    let n = host.n();
    if n < 2 {
        return Err(SolveError::Parameter(format!("span_path needs n >= 2, got {n}")));
    }
    let p = shortest_increasing_path(host, 0, n - 1)?;
    assert!(p.order() * host.max_span() >= n, "span bound violated");
    Ok(p)
}

/// Order guaranteed for a shortest increasing path across `n` vertices when
/// no edge spans more than `span`.
pub(crate) fn span_bound(n: usize, span: usize) -> usize {
    if n <= 1 {
        return n;
    }
    (n - 1).div_ceil(span.max(1)) + 1
}
