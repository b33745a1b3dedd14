use super::crossing_free::solve_crossing_free;
use super::gap::gap_or_path;
use super::guarantee::{ceil_sqrt, drop_first_edge, isolated_runs, Memo};
use super::noncrossing::{self, single_edge, widest_chord};
use super::paths::shortest_increasing_path;
use super::{concat_split, matching_parts, split_at, SolveError, SolveOutcome, Solved};
use crate::graph::{OrderedGraph, PathGraph};
use crate::patterns::{is_noncrossing, strip_isolated};

/// Either a path of order at least [`gm`](super::gm)`(n, h)` or an embedding
/// of the matching `h`.
pub fn solve_matching(host: &PathGraph, h: &OrderedGraph) -> Result<Solved, SolveError> {
    matching_parts(h)?;
    solve(host, h, &mut Memo::default())
}

fn whole_path(host: &PathGraph, guarantee: usize, why: &str) -> Solved {
    let p = shortest_increasing_path(host, 0, host.n() - 1).expect("valid endpoints");
    Solved::path(p, guarantee, why)
}

pub(crate) fn solve(host: &PathGraph, h: &OrderedGraph, memo: &mut Memo) -> Result<Solved, SolveError> {
    let n = host.n();
    let guarantee = memo.gm(n, h);
    if n == 1 {
        return Ok(whole_path(host, 1, "single vertex"));
    }
    let (lead, trail, run) = isolated_runs(h);
    if lead + trail + run > 0 {
        return with_isolated(host, h, memo, guarantee, (lead, trail, run));
    }
    if h.num_edges() == 1 {
        return Ok(single_edge(host));
    }
    if is_noncrossing(h) {
        return Ok(noncrossing::solve(host, h, memo));
    }
    if h.num_edges() == 2 {
        if let Some(((a, c), (b, d))) = host.crossing_pair() {
            return Ok(Solved::witness(vec![a, b, c, d], guarantee, "crossing chords"));
        }
        let (l, r) = solve_crossing_free(host)?;
        let (p, side) = if l.order() >= r.order() { (l, "left") } else { (r, "right") };
        return Ok(Solved::path(p, guarantee, format!("crossing-free host: {side} path")));
    }
    if let Some(s) = concat_split(h) {
        let (a, b) = split_at(h, s);
        let half = n / 2;
        let left = solve(&host.interval(0, half - 1), &a, memo)?;
        let Some(pa) = left.positions().map(<[usize]>::to_vec) else {
            return Ok(Solved { guarantee, ..left.within("concatenation: first half") });
        };
        let right = solve(&host.interval(half, n - 1), &b, memo)?.shifted(half);
        let Some(pb) = right.positions().map(<[usize]>::to_vec) else {
            return Ok(Solved { guarantee, ..right.within("concatenation: second half") });
        };
        return Ok(Solved::witness([pa, pb].concat(), guarantee, "concatenation: both halves"));
    }
    let (inner, p) = drop_first_edge(h);
    if p == h.n() - 1 {
        let c = ceil_sqrt(n);
        return match widest_chord(host) {
            Some((i, j)) if j - i > c => {
                let sub = solve(&host.interval(i + 1, j - 1), &inner, memo)?.shifted(i + 1);
                Ok(match sub.positions() {
                    Some(q) => {
                        let positions = std::iter::once(i).chain(q.iter().copied()).chain(std::iter::once(j)).collect();
                        Solved::witness(positions, guarantee, format!("outer chord ({i}, {j}) around inner copy"))
                    }
                    None => Solved { guarantee, ..sub.within(&format!("inside outer chord ({i}, {j})")) },
                })
            }
            _ => Ok(whole_path(host, guarantee, "short chords: span path")),
        };
    }
    nested(host, h, memo, guarantee, &inner, p)
}

fn with_isolated(
    host: &PathGraph,
    h: &OrderedGraph,
    memo: &mut Memo,
    guarantee: usize,
    (lead, trail, run): (usize, usize, usize),
) -> Result<Solved, SolveError> {
    let n = host.n();
    let core = strip_isolated(h);
    if n < lead + trail + 1 {
        return Ok(whole_path(host, guarantee, "host too short for the isolated vertices"));
    }
    let (lo, hi) = (lead, n - 1 - trail);
    let sub_host = host.interval(lo, hi);
    let sub = if run == 0 {
        solve(&sub_host, &core, memo)?
    } else {
        match memo.gap_params(hi - lo + 1, &core, run) {
            Some((t, m)) => gap_or_path(&sub_host, &core, m, t, memo)?,
            None => return Ok(whole_path(host, guarantee, "no gap parameters: span path")),
        }
    }
    .shifted(lo);
    let core_pos = match &sub.outcome {
        SolveOutcome::Path { .. } => return Ok(Solved { guarantee, ..sub.within("core without isolated vertices") }),
        SolveOutcome::Witness { positions } => positions,
    };
    let deg = h.degrees();
    let mut positions = Vec::with_capacity(h.n());
    let mut next_core = 0;
    let mut last: Option<usize> = None;
    for (v, &d) in deg.iter().enumerate() {
        let x = if d > 0 {
            next_core += 1;
            core_pos[next_core - 1]
        } else if v < lead {
            v
        } else if next_core == core_pos.len() && v >= h.n() - trail {
            n - (h.n() - v)
        } else {
            last.expect("interior isolated vertex follows a core vertex") + 1
        };
        positions.push(x);
        last = Some(x);
    }
    Ok(Solved::witness(positions, guarantee, format!("isolated vertices placed in gaps > {}", sub.provenance)))
}

fn nested(host: &PathGraph, h: &OrderedGraph, memo: &mut Memo, guarantee: usize, minus: &OrderedGraph, p: usize) -> Result<Solved, SolveError> {
    let n = host.n();
    let Some(params) = memo.nested_params(n, h) else {
        return Ok(whole_path(host, guarantee, "no nested parameters: span path"));
    };
    let (mut wlo, mut whi) = (0, n - 1);
    let mut copies = 0;
    let mut last_left = None;
    while copies < params.s && whi - wlo + 1 >= params.m {
        let r = gap_or_path(&host.interval(wlo, whi), minus, params.m, params.t, memo)?.shifted(wlo);
        let pos = match &r.outcome {
            SolveOutcome::Path { .. } => return Ok(Solved { guarantee, ..r.within(&format!("nested window {copies}")) }),
            SolveOutcome::Witness { positions } => positions.clone(),
        };
        let (first, left, right) = (pos[0], pos[p - 2], pos[p - 1]);
        let closing = (0..first).find_map(|x| host.chord_neighbors(x).iter().find(|&&y| left < y && y < right).map(|&y| (x, y)));
        if let Some((x, y)) = closing {
            let positions = std::iter::once(x)
                .chain(pos[..p - 1].iter().copied())
                .chain(std::iter::once(y))
                .chain(pos[p - 1..].iter().copied())
                .collect();
            return Ok(Solved::witness(positions, guarantee, format!("chord ({x}, {y}) closes nested copy {copies}")));
        }
        if right - left < 2 {
            break;
        }
        copies += 1;
        last_left = Some(left);
        (wlo, whi) = (left + 1, right - 1);
    }
    let end = last_left.map_or(n - 1, |l| l + 1);
    let path = shortest_increasing_path(host, 0, end)?;
    if path.order() < guarantee {
        return Err(SolveError::Internal(format!("{copies} nested copies gave a path of order {}", path.order())));
    }
    Ok(Solved::path(path, guarantee, format!("path through {copies} nested copies")))
}
