use super::paths::shortest_increasing_path;
use super::{SolveError, Solved};
use crate::graph::{validate_embedding, validate_induced_path, PathGraph, PatternEmbedding};
use crate::patterns::generators::gen_halfgraph_pattern;
use rayon::prelude::*;
use serde::Serialize;

/// Largest host accepted; the 4-subset table has `C(n, 4)` entries.
pub const GRS_MAX_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum GrsResult {
    Found(Solved),
    NoCliqueFound,
}

/// Increasing induced path of order `p`, or the half-graph `H_{p/4}` read off
/// a monochromatic 4-uniform clique of order `2p` under the path-pair coloring.
pub fn grs_search(host: &PathGraph, p: usize) -> Result<GrsResult, SolveError> {
    let n = host.n();
    if p == 0 || !p.is_multiple_of(4) || p > n {
        return Err(SolveError::Parameter(format!("p must be a positive multiple of 4 with p <= n, got p={p}, n={n}")));
    }
    if n > GRS_MAX_N {
        return Err(SolveError::TooLarge { n, limit: GRS_MAX_N });
    }
    let mut paths = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in i + 1..n {
            let q = shortest_increasing_path(host, i, j)?;
            if q.order() >= p {
                return Ok(GrsResult::Found(Solved::path(q, p, format!("path P({i}, {j})"))));
            }
            paths[i * n + j] = q.into_vertices();
        }
    }
    let table = QuadColors::build(host, &paths, p);
    let clique = greedy_clique(&table, 2 * p).or_else(|| exhaustive_clique(&table, 2 * p));
    let Some(c) = clique else {
        return Ok(GrsResult::NoCliqueFound);
    };
    let color = table.get(c[0], c[1], c[2], c[3]) as usize;
    if color == 0 {
        let mut keep = vec![false; n];
        for w in c.windows(2) {
            paths[w[0] * n + w[1]].iter().for_each(|&v| keep[v] = true);
        }
        let q = restricted_shortest(host, &keep, c[0], c[2 * p - 1])?;
        if q.len() < p {
            return Err(SolveError::Internal(format!("color-0 clique gave a path of order {}", q.len())));
        }
        let q = validate_induced_path(host, &q).map_err(|e| SolveError::Internal(e.to_string()))?;
        return Ok(GrsResult::Found(Solved::path(q, p, format!("color 0 clique {c:?}"))));
    }
    let (s, t) = ((color - 1) / p, (color - 1) % p);
    let mut positions = Vec::with_capacity(p / 2);
    for i in 0..p / 4 {
        positions.push(paths[c[4 * i] * n + c[4 * i + 1]][s]);
        positions.push(paths[c[4 * i + 2] * n + c[4 * i + 3]][t]);
    }
    let emb = PatternEmbedding::new(positions.clone());
    validate_embedding(host, &gen_halfgraph_pattern(p / 4), &emb).map_err(|e| SolveError::Internal(e.to_string()))?;
    Ok(GrsResult::Found(Solved::witness(positions, p, format!("color ({s}, {t}) clique {c:?}"))))
}

/// Colors of all 4-subsets in colex order: 0 when no edge joins `P(a, b)` to
/// `P(c, d)`, else `s * p + t + 1` for the lexicographically smallest joining edge.
struct QuadColors {
    n: usize,
    binom: Vec<[usize; 5]>,
    colors: Vec<u32>,
}

impl QuadColors {
    fn build(host: &PathGraph, paths: &[Vec<usize>], p: usize) -> Self {
        let n = host.n();
        let binom: Vec<[usize; 5]> = (0..=n)
            .map(|x| {
                let mut row = [0; 5];
                row[0] = 1;
                for (k, r) in row.iter_mut().enumerate().skip(1) {
                    *r = (0..k).fold(1usize, |acc, i| acc * (x.saturating_sub(i))) / (1..=k).product::<usize>();
                }
                row
            })
            .collect();
        let color = |a: usize, b: usize, c: usize, d: usize| -> u32 {
            let (x, y) = (&paths[a * n + b], &paths[c * n + d]);
            for (s, &u) in x.iter().enumerate() {
                if let Some(v) = host.forward_neighbors(u).find(|v| y.binary_search(v).is_ok()) {
                    let t = y.binary_search(&v).expect("found above");
                    return (s * p + t + 1) as u32;
                }
            }
            0
        };
        let colors = (3..n)
            .into_par_iter()
            .map(|d| {
                let mut out = Vec::with_capacity(binom[d][3]);
                for c in 2..d {
                    for b in 1..c {
                        for a in 0..b {
                            out.push(color(a, b, c, d));
                        }
                    }
                }
                out
            })
            .collect::<Vec<_>>()
            .concat();
        QuadColors { n, binom, colors }
    }

    fn get(&self, a: usize, b: usize, c: usize, d: usize) -> u32 {
        debug_assert!(a < b && b < c && c < d && d < self.n);
        self.colors[self.binom[a][1] + self.binom[b][2] + self.binom[c][3] + self.binom[d][4]]
    }

    /// Whether `z`, above every vertex of `set`, keeps all 4-subsets colored `color`.
    fn extends(&self, set: &[usize], z: usize, color: u32) -> bool {
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                for k in j + 1..set.len() {
                    if self.get(set[i], set[j], set[k], z) != color {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn greedy_clique(t: &QuadColors, size: usize) -> Option<Vec<usize>> {
    for start in 0..t.n.saturating_sub(3) {
        let mut set: Vec<usize> = (start..start + 3).collect();
        let mut color = None;
        for z in start + 3..t.n {
            let c = *color.get_or_insert_with(|| t.get(set[0], set[1], set[2], z));
            if t.extends(&set, z, c) {
                set.push(z);
                if set.len() == size {
                    return Some(set);
                }
            }
        }
    }
    None
}

/// Lexicographically smallest monochromatic clique of order `size`.
fn exhaustive_clique(t: &QuadColors, size: usize) -> Option<Vec<usize>> {
    fn go(t: &QuadColors, size: usize, set: &mut Vec<usize>, color: Option<u32>) -> bool {
        if set.len() == size {
            return true;
        }
        let from = set.last().map_or(0, |&x| x + 1);
        let need = size - set.len();
        for z in from..t.n {
            if t.n - z < need {
                break;
            }
            let c = match (color, set.len()) {
                (Some(c), _) => Some(c),
                (None, 3) => Some(t.get(set[0], set[1], set[2], z)),
                (None, _) => None,
            };
            if c.is_none_or(|c| t.extends(set, z, c)) {
                set.push(z);
                if go(t, size, set, c) {
                    return true;
                }
                set.pop();
            }
        }
        false
    }
    let mut set = Vec::with_capacity(size);
    go(t, size, &mut set, None).then_some(set)
}

/// Fewest-vertex ascending path from `a` to `b` inside the kept vertices.
fn restricted_shortest(host: &PathGraph, keep: &[bool], a: usize, b: usize) -> Result<Vec<usize>, SolveError> {
    let mut dist = vec![u32::MAX; b + 1];
    dist[b] = 0;
    for v in (a..b).rev().filter(|&v| keep[v]) {
        let best = host.forward_neighbors(v).take_while(|&x| x <= b).filter(|&x| keep[x]).map(|x| dist[x]).min();
        if let Some(d) = best.filter(|&d| d != u32::MAX) {
            dist[v] = d + 1;
        }
    }
    if dist[a] == u32::MAX {
        return Err(SolveError::Internal("clique paths do not connect".into()));
    }
    let mut seq = vec![a];
    let mut cur = a;
    while cur != b {
        let want = dist[cur] - 1;
        cur = host.forward_neighbors(cur).find(|&x| x <= b && keep[x] && dist[x] == want).expect("distance labels are consistent");
        seq.push(cur);
    }
    Ok(seq)
}
