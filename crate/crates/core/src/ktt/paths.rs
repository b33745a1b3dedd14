use super::KttError;
use crate::graph::{validate_induced_path, InducedPath, PathGraph};
use rayon::prelude::*;
use std::collections::HashMap;

/// Hosts up to this size memoize on `(last vertex, blocked set)`.
pub const MEMO_MAX_N: usize = 30;
pub const PFAM_MAX_N: usize = 64;

struct Search<'a> {
    adj: &'a [u64],
    target: usize,
    memo: Option<HashMap<(usize, u64), u32>>,
}

impl Search<'_> {
    /// Most vertices on an induced continuation from `last` to the target,
    /// `last` included; 0 when none exists. `blocked` holds the vertices above
    /// `last` adjacent to an earlier path vertex.
    fn best(&mut self, last: usize, blocked: u64) -> u32 {
        if last == self.target {
            return 1;
        }
        if let Some(v) = self.memo.as_ref().and_then(|m| m.get(&(last, blocked))) {
            return *v;
        }
        let mut best = 0;
        let mut cand = self.adj[last] & !blocked & above(last) & upto(self.target);
        while cand != 0 {
            let y = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let next = (blocked | self.adj[last]) & above(y);
            let b = self.best(y, next);
            if b > 0 {
                best = best.max(b + 1);
            }
        }
        if let Some(m) = self.memo.as_mut() {
            m.insert((last, blocked), best);
        }
        best
    }
}

fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

fn upto(v: usize) -> u64 {
    if v >= 63 {
        !0
    } else {
        (1u64 << (v + 1)) - 1
    }
}

/// Maximum-order increasing induced path from `u` to `v`, lexicographically
/// smallest among those.
pub fn max_increasing_induced_path(host: &PathGraph, u: usize, v: usize) -> Result<InducedPath, KttError> {
    let n = host.n();
    if n > PFAM_MAX_N {
        return Err(KttError::TooLarge { n, limit: PFAM_MAX_N });
    }
    if u >= v || v >= n {
        return Err(KttError::Parameter(format!("need u < v < n, got u={u}, v={v}, n={n}")));
    }
    let adj = host.masks().expect("n is at most 64");
    Ok(with_masks(host, &adj, u, v))
}

fn with_masks(host: &PathGraph, adj: &[u64], u: usize, v: usize) -> InducedPath {
    let mut s = Search { adj, target: v, memo: (host.n() <= MEMO_MAX_N).then(HashMap::new) };
    let mut remaining = s.best(u, 0);
    debug_assert!(remaining >= 2);
    let (mut last, mut blocked) = (u, 0u64);
    let mut seq = vec![u];
    while last != v {
        let mut cand = adj[last] & !blocked & above(last) & upto(v);
        loop {
            let y = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let next = (blocked | adj[last]) & above(y);
            if s.best(y, next) == remaining - 1 {
                seq.push(y);
                (last, blocked) = (y, next);
                remaining -= 1;
                break;
            }
        }
    }
    validate_induced_path(host, &seq).expect("search keeps the path induced")
}

/// All `P(u, v)` for `u < v`.
#[derive(Debug, Clone)]
pub struct Pfam {
    n: usize,
    paths: Vec<Vec<usize>>,
}

impl Pfam {
    pub fn build(host: &PathGraph) -> Result<Self, KttError> {
        let n = host.n();
        if n > PFAM_MAX_N {
            return Err(KttError::TooLarge { n, limit: PFAM_MAX_N });
        }
        let adj = host.masks().expect("n is at most 64");
        let rows: Vec<Vec<Vec<usize>>> = (0..n)
            .into_par_iter()
            .map(|u| (0..n).map(|v| if u < v { with_masks(host, &adj, u, v).into_vertices() } else { Vec::new() }).collect())
            .collect();
        Ok(Pfam { n, paths: rows.into_iter().flatten().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> &[usize] {
        debug_assert!(u < v);
        &self.paths[u * self.n + v]
    }

    pub fn order(&self, u: usize, v: usize) -> usize {
        self.get(u, v).len()
    }

    /// Largest order over all pairs, with the first pair attaining it.
    pub fn max_order(&self) -> Option<(usize, usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let o = self.order(u, v);
                if best.is_none_or(|(b, _, _)| o > b) {
                    best = Some((o, u, v));
                }
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p = max_increasing_induced_path(&PathGraph::bare(5), 0, 4).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3, 4]);
        let g = PathGraph::new(3, [(0, 2)]).unwrap();
        assert_eq!(max_increasing_induced_path(&g, 0, 2).unwrap().vertices(), &[0, 2]);
        assert!(max_increasing_induced_path(&g, 2, 2).is_err());
    }

    #[test]
    fn chords_limit_paths() {
        // The chord (0, 4) rules out every path with an inner vertex.
        let g = PathGraph::new(5, [(0, 4), (1, 3)]).unwrap();
        let p = max_increasing_induced_path(&g, 0, 4).unwrap();
        assert_eq!(p.vertices(), &[0, 4]);
        let g = PathGraph::new(5, [(1, 3)]).unwrap();
        assert_eq!(max_increasing_induced_path(&g, 0, 4).unwrap().vertices(), &[0, 1, 3, 4]);
    }
}
