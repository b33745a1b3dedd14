use super::paths::Pfam;
use crate::graph::PathGraph;
use rayon::prelude::*;
use serde::Serialize;
use std::cmp::Ordering;

/// The product color `col1 x col2 x col2rev x col3` of an ordered triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TripleColor {
    pub c1: u8,
    pub d: usize,
    pub delta: i8,
    pub drev: usize,
    pub deltarev: i8,
    /// `(i, a, b)`: the case of the joining edge and its endpoint indices.
    pub c3: (u8, usize, usize),
}

/// `P(u, v)` cut into the first `d + 1`, the middle, and the last `drev + 1` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitTriple {
    pub left: Vec<usize>,
    pub mid: Vec<usize>,
    pub right: Vec<usize>,
}

impl SplitTriple {
    /// Defined when the path has more than `d + drev + 1` vertices.
    pub fn of(path: &[usize], d: usize, drev: usize) -> Option<Self> {
        if path.len() <= d + drev + 1 {
            return None;
        }
        let r = path.len() - 1 - drev;
        Some(SplitTriple { left: path[..=d].to_vec(), mid: path[d + 1..r].to_vec(), right: path[r..].to_vec() })
    }

    pub fn mid_right(&self) -> Vec<usize> {
        [&self.mid[..], &self.right[..]].concat()
    }

    pub fn left_mid(&self) -> Vec<usize> {
        [&self.left[..], &self.mid[..]].concat()
    }
}

fn sign(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Largest common vertex of two paths from the same start, with its indices on each.
fn last_common(a: &[usize], b: &[usize]) -> (usize, usize) {
    a.iter()
        .enumerate()
        .rev()
        .find_map(|(i, x)| b.binary_search(x).ok().map(|j| (i, j)))
        .expect("paths share their first vertex")
}

/// Smallest common vertex, as distances from the shared last vertex.
fn first_common(a: &[usize], b: &[usize]) -> (usize, usize) {
    a.iter()
        .enumerate()
        .find_map(|(i, x)| b.binary_search(x).ok().map(|j| (a.len() - 1 - i, b.len() - 1 - j)))
        .expect("paths share their last vertex")
}

/// Lexicographically smallest edge `pq` with `p` in `x`, `q` in `y`, skipping
/// edges of `exclude`; returned as indices into `x` and `y`.
fn first_edge(host: &PathGraph, x: &[usize], y: &[usize], exclude: Option<&[usize]>) -> Option<(usize, usize)> {
    let on_path = |p: usize, q: usize| {
        exclude.is_some_and(|path| match (path.binary_search(&p), path.binary_search(&q)) {
            (Ok(i), Ok(j)) => i.abs_diff(j) == 1,
            _ => false,
        })
    };
    for (a, &p) in x.iter().enumerate() {
        let mut ys: Vec<(usize, usize)> = y.iter().copied().enumerate().filter(|&(_, q)| q != p && host.adjacent(p, q)).collect();
        ys.sort_unstable_by_key(|&(_, q)| q);
        if let Some(&(b, _)) = ys.iter().find(|&&(_, q)| !on_path(p, q)) {
            return Some((a, b));
        }
    }
    None
}

/// Color of `(u, v, w)` with `u < v < w`, and the endpoints `(p, q)` of the
/// edge chosen for `col3` when there is one.
pub(crate) fn color_with_edge(host: &PathGraph, pfam: &Pfam, u: usize, v: usize, w: usize) -> (TripleColor, Option<(usize, usize)>) {
    let (puv, puw, pvw) = (pfam.get(u, v), pfam.get(u, w), pfam.get(v, w));
    let (luv, luw, lvw) = (puv.len(), puw.len(), pvw.len());
    let c1 = match luv.cmp(&luw) {
        Ordering::Greater => 1,
        Ordering::Less => 2,
        Ordering::Equal => match lvw.cmp(&luw) {
            Ordering::Greater => 3,
            Ordering::Less => 4,
            Ordering::Equal => 0,
        },
    };
    let (d, d2) = last_common(puv, puw);
    let (drev, d2rev) = first_common(pvw, puw);
    let mut color =
        TripleColor { c1, d, delta: sign(d.cmp(&d2)), drev, deltarev: sign(drev.cmp(&d2rev)), c3: (0, 0, 0) };
    if c1 != 0 || color.delta != 0 || color.deltarev != 0 || luv < d + drev + 2 {
        return (color, None);
    }
    let s = |p: &[usize]| SplitTriple::of(p, d, drev).expect("length checked");
    let (suv, suw, svw) = (s(puv), s(puw), s(pvw));
    let cases: [(&[usize], Vec<usize>, Option<&[usize]>); 5] = [
        (&suw.left, suv.mid_right(), Some(puv)),
        (&svw.left_mid(), suw.right.clone(), Some(pvw)),
        (&suw.left, svw.left_mid(), None),
        (&suv.mid_right(), suw.right.clone(), None),
        (&suv.mid, svw.mid.clone(), None),
    ];
    for (i, (x, y, exclude)) in cases.iter().enumerate() {
        if let Some((a, b)) = first_edge(host, x, y, *exclude) {
            color.c3 = (i as u8 + 1, a, b);
            return (color, Some((x[a], y[b])));
        }
    }
    (color, None)
}

pub fn color_triple(host: &PathGraph, pfam: &Pfam, u: usize, v: usize, w: usize) -> TripleColor {
    assert!(u < v && v < w && w < pfam.n(), "need u < v < w < n");
    color_with_edge(host, pfam, u, v, w).0
}

/// Colors and `col3` edge endpoints of every ordered triple.
pub struct TripleTable {
    n: usize,
    entries: Vec<Option<(TripleColor, Option<(usize, usize)>)>>,
}

impl TripleTable {
    pub fn build(host: &PathGraph, pfam: &Pfam) -> Self {
        let n = host.n();
        let rows: Vec<Vec<Option<(TripleColor, Option<(usize, usize)>)>>> = (0..n)
            .into_par_iter()
            .map(|u| {
                let mut row = vec![None; n * n];
                for v in u + 1..n {
                    for w in v + 1..n {
                        row[v * n + w] = Some(color_with_edge(host, pfam, u, v, w));
                    }
                }
                row
            })
            .collect();
        TripleTable { n, entries: rows.concat() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn color(&self, u: usize, v: usize, w: usize) -> TripleColor {
        self.entries[(u * self.n + v) * self.n + w].expect("ordered triple").0
    }

    pub fn edge(&self, u: usize, v: usize, w: usize) -> Option<(usize, usize)> {
        self.entries[(u * self.n + v) * self.n + w].expect("ordered triple").1
    }

    pub fn distinct_colors(&self) -> usize {
        let mut all: Vec<TripleColor> = self.entries.iter().flatten().map(|e| e.0).collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    }
}
