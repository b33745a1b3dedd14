use super::{KttError, KttWitness};
use crate::graph::PathGraph;
use serde::Serialize;
use std::collections::HashSet;

/// Which coordinate of the triple stays fixed: `123` fixes the third
/// (largest), `321` the first, `132` the middle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variant {
    #[serde(rename = "123")]
    V123,
    #[serde(rename = "321")]
    V321,
    #[serde(rename = "132")]
    V132,
}

impl Variant {
    /// The variant that handles `col3` case `i`.
    pub fn for_case(i: u8) -> Option<Variant> {
        match i {
            1 | 4 => Some(Variant::V321),
            2 | 3 => Some(Variant::V123),
            5 => Some(Variant::V132),
            _ => None,
        }
    }
}

/// `K_{t,t}` from two triple maps whose values `f(T) f'(T)` are edges, laid
/// out as `z1 < x_1..x_t < z2 < y_1..y_t < z3` on the first `2t + 3` vertices of `vset`.
///
/// The constant and injective conditions are checked on the `t^2` triples
/// that are read.
pub fn ktt_extract(
    host: &PathGraph,
    vset: &[usize],
    f: impl Fn(usize, usize, usize) -> usize,
    f2: impl Fn(usize, usize, usize) -> usize,
    variant: Variant,
    t: usize,
) -> Result<KttWitness, KttError> {
    if t == 0 {
        return Err(KttError::Parameter("t must be at least 1".into()));
    }
    let mut v = vset.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.len() < 2 * t + 3 {
        return Err(KttError::Parameter(format!("need {} distinct vertices, got {}", 2 * t + 3, v.len())));
    }
    let (z1, x, z2, y, z3) = (v[0], &v[1..=t], v[t + 1], &v[t + 2..2 * t + 2], v[2 * t + 2]);
    // triple(i, j) is the triple read for x_i and y_j; `a` follows the index
    // that f must be injective in, `b` the one f' must be.
    let (triple, a_by_x): (Box<dyn Fn(usize, usize) -> (usize, usize, usize)>, bool) = match variant {
        Variant::V123 => (Box::new(|i, j| (x[i], y[j], z3)), true),
        Variant::V321 => (Box::new(|i, j| (z1, x[i], y[j])), false),
        Variant::V132 => (Box::new(|i, j| (x[i], z2, y[j])), true),
    };
    let mut side_a = vec![usize::MAX; t];
    let mut side_b = vec![usize::MAX; t];
    for i in 0..t {
        for j in 0..t {
            let tr = triple(i, j);
            let (fa, fb) = (f(tr.0, tr.1, tr.2), f2(tr.0, tr.1, tr.2));
            if fa >= host.n() || fb >= host.n() || !host.adjacent(fa, fb) {
                return Err(KttError::Precondition { triple: tr, what: format!("f, f' give {fa}, {fb}, not an edge") });
            }
            let (ia, ib) = if a_by_x { (i, j) } else { (j, i) };
            for (slot, val, name) in [(&mut side_a[ia], fa, "f"), (&mut side_b[ib], fb, "f'")] {
                if *slot == usize::MAX {
                    *slot = val;
                } else if *slot != val {
                    return Err(KttError::Precondition { triple: tr, what: format!("{name} is not constant where required") });
                }
            }
        }
    }
    for (side, name) in [(&side_a, "f"), (&side_b, "f'")] {
        if side.iter().collect::<HashSet<_>>().len() != t {
            return Err(KttError::Precondition { triple: triple(0, 0), what: format!("{name} is not injective where required") });
        }
    }
    let w = KttWitness { side_a, side_b };
    w.check(host).map_err(KttError::Internal)?;
    Ok(w)
}

impl KttWitness {
    /// Sides are disjoint `t`-sets and every cross pair is an edge.
    pub fn check(&self, host: &PathGraph) -> Result<(), String> {
        let a: HashSet<_> = self.side_a.iter().collect();
        let b: HashSet<_> = self.side_b.iter().collect();
        if a.len() != self.side_a.len() || b.len() != self.side_b.len() || a.len() != b.len() {
            return Err("sides are not sets of equal size".into());
        }
        if !a.is_disjoint(&b) {
            return Err("sides overlap".into());
        }
        for &&p in &a {
            for &&q in &b {
                if p >= host.n() || q >= host.n() || !host.adjacent(p, q) {
                    return Err(format!("{p} and {q} are not adjacent"));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_chord() {
        let g = PathGraph::new(6, [(1, 4)]).unwrap();
        let w = ktt_extract(&g, &[0, 1, 2, 3, 4], |_, _, _| 1, |_, _, _| 4, Variant::V123, 1).unwrap();
        assert_eq!((w.side_a, w.side_b), (vec![1], vec![4]));
    }

    #[test]
    fn constant_map_is_rejected() {
        let g = PathGraph::new(9, (0..9).flat_map(|i| (i + 2..9).map(move |j| (i, j)))).unwrap();
        let r = ktt_extract(&g, &(0..7).collect::<Vec<_>>(), |_, _, _| 0, |_, v, _| v, Variant::V123, 2);
        assert!(matches!(r, Err(KttError::Precondition { .. })), "{r:?}");
    }
}
