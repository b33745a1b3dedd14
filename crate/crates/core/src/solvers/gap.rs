use super::guarantee::{block_jump, Memo};
use super::paths::shortest_increasing_path;
use super::{matching, matching_parts, SolveError, SolveOutcome, Solved};
use crate::graph::{validate_induced_path, OrderedGraph, PathGraph};
use std::collections::VecDeque;

/// Either an induced path of order at least `t`, or an embedding of the
/// matching `h` whose gap is at least `ceil((floor(n/m) + 1) / t)`.
///
/// The host is cut into `m` blocks; short crossing paths of the even blocks
/// each contain a long jump, and cutting there leaves `floor((m-1)/2)`
/// separated segments. The pattern is then sought in the graph of those
/// segments. Fails with [`SolveError::HypothesisUnmet`] when the solver on
/// that smaller graph cannot promise order `t`.
pub fn find_gap_or_path(host: &PathGraph, h: &OrderedGraph, m: usize, t: usize) -> Result<Solved, SolveError> {
    gap_or_path(host, h, m, t, &mut Memo::default())
}

struct Blocks {
    first: Vec<usize>,
    last: Vec<usize>,
}

fn blocks(n: usize, m: usize) -> Blocks {
    let (base, extra) = (n / m, n % m);
    let mut first = Vec::with_capacity(m);
    let mut last = Vec::with_capacity(m);
    let mut at = 0;
    for i in 0..m {
        let size = base + usize::from(i < extra);
        first.push(at);
        last.push(at + size - 1);
        at += size;
    }
    Blocks { first, last }
}

pub(crate) fn gap_or_path(host: &PathGraph, h: &OrderedGraph, m: usize, t: usize, memo: &mut Memo) -> Result<Solved, SolveError> {
    matching_parts(h)?;
    let n = host.n();
    if m < 3 || t < 2 || m > n {
        return Err(SolveError::Parameter(format!("need 3 <= m <= n and t >= 2, got m={m}, t={t}, n={n}")));
    }
    let b = blocks(n, m);
    let jump = block_jump(n, m, t);
    // Halves of the crossing path of each odd (0-based) block, cut at its first long jump.
    let mut halves: Vec<Option<(Vec<usize>, Vec<usize>)>> = vec![None; m];
    for idx in (1..m - 1).step_by(2) {
        let q = shortest_increasing_path(host, b.last[idx - 1], b.first[idx + 1])?;
        if q.order() >= t {
            return Ok(Solved::path(q, t, format!("crossing path of block {idx}")));
        }
        let v = q.vertices();
        let k = (0..v.len() - 1)
            .find(|&k| v[k + 1] - v[k] >= jump)
            .ok_or_else(|| SolveError::Internal(format!("no jump of {jump} in a path of order {}", v.len())))?;
        halves[idx] = Some((v[..=k].to_vec(), v[k + 1..].to_vec()));
    }
    let mut segments: Vec<Vec<usize>> = Vec::new();
    for e in (0..m - 1).step_by(2) {
        let mut seg: Vec<usize> = (b.first[e]..=b.last[e]).collect();
        if let Some((_, plus)) = e.checked_sub(1).and_then(|i| halves[i].as_ref()) {
            seg.extend_from_slice(plus);
        }
        if let Some((minus, _)) = halves.get(e + 1).and_then(Option::as_ref) {
            seg.extend_from_slice(minus);
        }
        seg.sort_unstable();
        seg.dedup();
        segments.push(seg);
    }
    let mut owner = vec![usize::MAX; n];
    for (x, seg) in segments.iter().enumerate() {
        for &v in seg {
            owner[v] = x;
        }
    }
    let mut contracted = Vec::new();
    for &(u, v) in host.chords() {
        let (x, y) = (owner[u], owner[v]);
        if x != usize::MAX && y != usize::MAX && y >= x + 2 {
            contracted.push((x, y));
        }
    }
    contracted.sort_unstable();
    contracted.dedup();
    let r = segments.len();
    let small = PathGraph::new(r, contracted).expect("pairs two segments apart");
    let sub = matching::solve(&small, h, memo)?;
    match &sub.outcome {
        SolveOutcome::Witness { positions } => {
            let mut pos: Vec<usize> = positions.iter().map(|&x| segments[x][0]).collect();
            for &(p, q) in h.edges() {
                let (sp, sq) = (&segments[positions[p]], &segments[positions[q]]);
                let (x, y) = sp
                    .iter()
                    .find_map(|&x| host.chord_neighbors(x).iter().find(|y| sq.binary_search(y).is_ok()).map(|&y| (x, y)))
                    .ok_or_else(|| SolveError::Internal("segment chord vanished".into()))?;
                pos[p] = x;
                pos[q] = y;
            }
            debug_assert!(pos.windows(2).all(|w| w[1] - w[0] >= jump));
            Ok(Solved::witness(pos, t, format!("segment graph on {r} vertices > {}", sub.provenance)))
        }
        SolveOutcome::Path { vertices } => {
            let layers: Vec<&[usize]> = vertices.iter().map(|&x| segments[x].as_slice()).collect();
            let lifted = lift_path(host, &layers, &owner, vertices)?;
            if lifted.len() < t {
                return Err(SolveError::HypothesisUnmet { got: lifted.len(), t });
            }
            let p = validate_induced_path(host, &lifted).map_err(|e| SolveError::Internal(format!("lifted path: {e}")))?;
            Ok(Solved::path(p, t, format!("lifted from segment graph on {r} vertices > {}", sub.provenance)))
        }
    }
}

/// Fewest-vertex walk visiting the segments `layers` in order, moving inside
/// a segment or to the next one; lexicographically smallest among those.
fn lift_path(host: &PathGraph, layers: &[&[usize]], owner: &[usize], order: &[usize]) -> Result<Vec<usize>, SolveError> {
    let q = layers.len();
    let mut layer_of = vec![usize::MAX; host.n()];
    for (l, &seg) in order.iter().enumerate() {
        for (v, &o) in owner.iter().enumerate() {
            if o == seg {
                layer_of[v] = l;
            }
        }
    }
    let mut dist = vec![u32::MAX; host.n()];
    let mut queue = VecDeque::new();
    for &v in layers[q - 1] {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        let l = layer_of[v];
        for w in host.neighbors(v) {
            let lw = layer_of[w];
            if lw != usize::MAX && (lw == l || lw + 1 == l) && dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut cur = *layers[0]
        .iter()
        .min_by_key(|&&v| (dist[v], v))
        .filter(|&&v| dist[v] != u32::MAX)
        .ok_or_else(|| SolveError::Internal("segments not connected in order".into()))?;
    let mut out = vec![cur];
    while dist[cur] > 0 {
        let l = layer_of[cur];
        cur = host
            .neighbors(cur)
            .into_iter()
            .find(|&w| {
                let lw = layer_of[w];
                lw != usize::MAX && (lw == l || lw == l + 1) && dist[w] + 1 == dist[cur]
            })
            .expect("distance labels are consistent");
        out.push(cur);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::generators::crossing_pair;

    #[test]
    fn block_layout() {
        let b = blocks(10, 3);
        assert_eq!((b.first, b.last), (vec![0, 4, 7], vec![3, 6, 9]));
    }

    #[test]
    fn bare_path_gives_path() {
        let r = find_gap_or_path(&PathGraph::bare(30), &crossing_pair(), 3, 3).unwrap();
        assert!(r.vertices().unwrap().len() >= 3);
    }

    #[test]
    fn parameter_errors() {
        let g = PathGraph::bare(4);
        assert!(matches!(find_gap_or_path(&g, &crossing_pair(), 5, 2), Err(SolveError::Parameter(_))));
        assert!(matches!(find_gap_or_path(&g, &crossing_pair(), 2, 2), Err(SolveError::Parameter(_))));
        assert!(matches!(find_gap_or_path(&g, &crossing_pair(), 3, 1), Err(SolveError::Parameter(_))));
    }

    #[test]
    fn complete_host_fails_hypothesis() {
        // K_3: no induced path of order 3 and no room for the pattern.
        let g = PathGraph::new(3, [(0, 2)]).unwrap();
        assert_eq!(find_gap_or_path(&g, &crossing_pair(), 3, 3), Err(SolveError::HypothesisUnmet { got: 1, t: 3 }));
    }
}
