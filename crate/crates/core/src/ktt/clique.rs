use super::color::{SplitTriple, TripleColor, TripleTable};
use super::paths::Pfam;
use super::KttError;
use serde::Serialize;
use std::collections::BTreeMap;

/// A monochromatic 3-clique `K` with its type and `v+` / `v-` markers on the interior.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueRecord {
    pub vertices: Vec<usize>,
    pub interior: Vec<usize>,
    pub color: TripleColor,
    /// Common order of the paths between clique vertices, when there is one.
    pub ell: Option<usize>,
    pub d: usize,
    pub drev: usize,
    pub plus_marker: BTreeMap<usize, usize>,
    pub minus_marker: BTreeMap<usize, usize>,
}

impl CliqueRecord {
    pub(crate) fn new(pfam: &Pfam, table: &TripleTable, vertices: Vec<usize>) -> Self {
        let color = table.color(vertices[0], vertices[1], vertices[2]);
        let (d, drev) = (color.d, color.drev);
        let first = *vertices.first().expect("non-empty");
        let last = *vertices.last().expect("non-empty");
        let interior = vertices[1..vertices.len() - 1].to_vec();
        let orders: Vec<usize> = pairs(&vertices).map(|(a, b)| pfam.order(a, b)).collect();
        let ell = orders.windows(2).all(|w| w[0] == w[1]).then(|| orders[0]);
        let mut plus_marker = BTreeMap::new();
        let mut minus_marker = BTreeMap::new();
        for &v in &interior {
            if let Some(&x) = pfam.get(v, last).get(d) {
                plus_marker.insert(v, x);
            }
            let p = pfam.get(first, v);
            if let Some(i) = p.len().checked_sub(1 + drev) {
                minus_marker.insert(v, p[i]);
            }
        }
        CliqueRecord { vertices, interior, color, ell, d, drev, plus_marker, minus_marker }
    }
}

fn pairs(v: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..v.len()).flat_map(move |i| (i + 1..v.len()).map(move |j| (v[i], v[j])))
}

fn triples(v: &[usize]) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    (0..v.len()).flat_map(move |i| (i + 1..v.len()).flat_map(move |j| (j + 1..v.len()).map(move |k| (v[i], v[j], v[k]))))
}

/// Lexicographically smallest monochromatic 3-clique of order `size`.
pub(crate) fn search(table: &TripleTable, size: usize) -> Option<Vec<usize>> {
    fn go(t: &TripleTable, size: usize, set: &mut Vec<usize>, color: Option<TripleColor>) -> bool {
        if set.len() == size {
            return true;
        }
        let from = set.last().map_or(0, |&x| x + 1);
        for z in from..t.n() {
            if t.n() - z < size - set.len() {
                break;
            }
            let c = match (color, set.len()) {
                (Some(c), _) => Some(c),
                (None, 2) => Some(t.color(set[0], set[1], z)),
                (None, _) => None,
            };
            let ok = c.is_none_or(|c| pairs(set).all(|(a, b)| t.color(a, b, z) == c));
            if ok {
                set.push(z);
                if go(t, size, set, c) {
                    return true;
                }
                set.pop();
            }
        }
        false
    }
    if size < 3 || size > table.n() {
        return None;
    }
    let mut set = Vec::with_capacity(size);
    go(table, size, &mut set, None).then_some(set)
}

pub fn find_monochromatic_3clique(pfam: &Pfam, table: &TripleTable, size: usize) -> Option<CliqueRecord> {
    search(table, size).map(|v| CliqueRecord::new(pfam, table, v))
}

/// The first clique of the largest order that exists, searching upward from 3.
pub fn largest_monochromatic_3clique(pfam: &Pfam, table: &TripleTable) -> Option<CliqueRecord> {
    let mut best = None;
    for size in 3..=table.n() {
        match search(table, size) {
            Some(v) => best = Some(v),
            None => break,
        }
    }
    best.map(|v| CliqueRecord::new(pfam, table, v))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub s: usize,
    /// The clique has order at least `s` and every path between its vertices
    /// has fewer than `s` vertices.
    pub precondition_met: bool,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Checks must pass whenever the preconditions hold.
    pub fn holds(&self) -> bool {
        !self.precondition_met || self.all_passed()
    }
}

struct Checker {
    checks: Vec<LemmaCheck>,
}

impl Checker {
    fn item(&mut self, name: &'static str, failure: Option<String>) {
        self.checks.push(LemmaCheck { name, passed: failure.is_none(), detail: failure.unwrap_or_default() });
    }
}

/// Re-derives the clique lemmas on `record`: zero `col1`, a common order in
/// `[2, s - 1]`, zero split deltas, marker consistency and ordering, and the
/// disjointness of territories and path tails.
pub fn verify_clique_lemmas(pfam: &Pfam, table: &TripleTable, record: &CliqueRecord, s: usize) -> Result<LemmaReport, KttError> {
    let k = &record.vertices;
    if k.len() < 3 || !k.windows(2).all(|w| w[0] < w[1]) || k[k.len() - 1] >= table.n() {
        return Err(KttError::Malformed(format!("clique vertices {k:?}")));
    }
    if record.interior != k[1..k.len() - 1] {
        return Err(KttError::Malformed(format!("interior {:?} of {k:?}", record.interior)));
    }
    let precondition_met = k.len() >= s && pairs(k).all(|(a, b)| pfam.order(a, b) < s);
    let mut c = Checker { checks: Vec::new() };
    let (d, drev) = (record.d, record.drev);

    let bad = triples(k).find(|&(u, v, w)| table.color(u, v, w).c1 != 0);
    c.item("col1-zero", bad.map(|t| format!("col1 nonzero on {t:?}")));

    let orders: Vec<usize> = pairs(k).map(|(a, b)| pfam.order(a, b)).collect();
    let common = orders.windows(2).all(|w| w[0] == w[1]).then(|| orders.first().copied()).flatten();
    c.item(
        "common-order",
        match common {
            Some(l) if (2..s).contains(&l) => None,
            Some(l) => Some(format!("common order {l} outside [2, {}]", s.saturating_sub(1))),
            None if orders.is_empty() => Some("fewer than two vertices".into()),
            None => Some(format!("orders differ: {orders:?}")),
        },
    );

    let bad = triples(k).find(|&(u, v, w)| {
        let t = table.color(u, v, w);
        t.delta != 0 || t.deltarev != 0 || t.d != d || t.drev != drev
    });
    c.item("split-deltas", bad.map(|t| format!("split color differs on {t:?}")));

    let mut marker_fail = None;
    for &v in &record.interior {
        let plus: Vec<Option<usize>> = k.iter().filter(|&&w| w > v).map(|&w| pfam.get(v, w).get(d).copied()).collect();
        let minus: Vec<Option<usize>> = k
            .iter()
            .filter(|&&u| u < v)
            .map(|&u| {
                let p = pfam.get(u, v);
                p.len().checked_sub(1 + drev).map(|i| p[i])
            })
            .collect();
        let stored = (record.plus_marker.get(&v).copied(), record.minus_marker.get(&v).copied());
        if plus.iter().any(|x| x.is_none() || *x != stored.0) || minus.iter().any(|x| x.is_none() || *x != stored.1) {
            marker_fail = Some(format!("markers of {v}: stored {stored:?}, witnesses {plus:?} / {minus:?}"));
            break;
        }
    }
    c.item("markers-well-defined", marker_fail);

    let inner = &record.interior;
    let plus = |v: usize| record.plus_marker.get(&v).copied();
    let minus = |v: usize| record.minus_marker.get(&v).copied();
    let bad = triples(inner).find(|&(u, v, w)| {
        let (puv, puw, pvw) = (pfam.get(u, v), pfam.get(u, w), pfam.get(v, w));
        let x = puv.iter().rev().find(|x| puw.contains(x)).copied();
        let xrev = pvw.iter().find(|x| puw.contains(x)).copied();
        x != plus(u) || xrev != minus(w)
    });
    c.item("markers-common-vertex", bad.map(|t| format!("common vertices differ from markers on {t:?}")));

    let bad_self = inner.iter().find(|&&v| !matches!((minus(v), plus(v)), (Some(a), Some(b)) if a <= v && v <= b));
    let bad_pair = pairs(inner).find(|&(u, v)| !matches!((plus(u), minus(v)), (Some(a), Some(b)) if u <= a && a < b && b <= v));
    c.item(
        "markers-ordering",
        bad_self.map(|v| format!("{v} not between its markers")).or(bad_pair.map(|p| format!("markers of {p:?} out of order"))),
    );

    let split = |a: usize, b: usize| SplitTriple::of(pfam.get(a, b), d, drev);
    let undefined = pairs(inner).find(|&(a, b)| split(a, b).is_none());
    let disjoint = |x: &[usize], y: &[usize]| x.iter().all(|v| !y.contains(v));
    let (ter, after, before) = match undefined {
        Some(p) => {
            let why = Some(format!("split undefined on {p:?}: order {} <= d + drev + 1", pfam.order(p.0, p.1)));
            (why.clone(), why.clone(), why)
        }
        None => {
            let territory = |v: usize| -> Vec<usize> {
                let mut t: Vec<usize> = inner.iter().filter(|&&u| u < v).flat_map(|&u| split(u, v).expect("defined").right).collect();
                t.extend(inner.iter().filter(|&&w| w > v).flat_map(|&w| split(v, w).expect("defined").left));
                t
            };
            let ter = pairs(inner).find(|&(u, v)| !disjoint(&territory(u), &territory(v)));
            let after = triples(inner).find(|&(u, v, w)| {
                !disjoint(&split(u, v).expect("defined").mid_right(), &split(u, w).expect("defined").mid_right())
            });
            let before = triples(inner).find(|&(u, v, w)| {
                !disjoint(&split(u, w).expect("defined").left_mid(), &split(v, w).expect("defined").left_mid())
            });
            (
                ter.map(|p| format!("territories of {p:?} meet")),
                after.map(|t| format!("tails after the first vertex meet on {t:?}")),
                before.map(|t| format!("heads before the last vertex meet on {t:?}")),
            )
        }
    };
    c.item("territories-disjoint", ter);
    c.item("after-u-plus", after);
    c.item("before-w-minus", before);
    Ok(LemmaReport { s, precondition_met, checks: c.checks })
}
