//! Named patterns and the pattern families used by the solvers and tests.

use super::{concat, hat};
use crate::graph::OrderedGraph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> OrderedGraph {
    OrderedGraph::new(n, edges).expect("generator produces valid edges")
}

/// The single-edge pattern.
pub fn k2() -> OrderedGraph {
    build(2, [(0, 1)])
}

/// Two crossing edges `(0, 2), (1, 3)`.
pub fn crossing_pair() -> OrderedGraph {
    build(4, [(0, 2), (1, 3)])
}

/// Two nested edges `(0, 3), (1, 2)`.
pub fn nested_pair() -> OrderedGraph {
    build(4, [(0, 3), (1, 2)])
}

/// The monotone path on three vertices.
pub fn ordered_p3() -> OrderedGraph {
    build(3, [(0, 1), (1, 2)])
}

/// `K_{2,2}` with one side entirely before the other.
pub fn split_k22() -> OrderedGraph {
    build(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Half-graph `H_m`: `a_i` at `2(i - 1)`, `b_j` at `2j - 1`, `a_i ~ b_j` iff `i < j`.
pub fn gen_halfgraph_pattern(m: usize) -> OrderedGraph {
    let mut edges = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            edges.push((2 * (i - 1), 2 * j - 1));
        }
    }
    build(2 * m, edges)
}

/// `M_0` is empty and `M_i` is three consecutive copies of `hat(M_{i-1})`.
pub fn gen_mi(i: usize) -> OrderedGraph {
    let mut m = OrderedGraph::empty(0);
    for _ in 0..i {
        let h = hat(&m);
        m = concat(&concat(&h, &h), &h);
    }
    m
}

/// The matching obtained by replacing every vertex of `g` with the ascending list
/// of its neighbors and joining the two copies of each edge.
pub fn gen_pi(g: &OrderedGraph) -> OrderedGraph {
    let adj = g.adjacency();
    let mut offset = vec![0; g.n() + 1];
    for v in 0..g.n() {
        offset[v + 1] = offset[v] + adj[v].len();
    }
    let slot = |v: usize, w: usize| offset[v] + adj[v].binary_search(&w).expect("w is a neighbor of v");
    let edges = g.edges().iter().map(|&(i, j)| {
        let (a, b) = (slot(i, j), slot(j, i));
        (a.min(b), a.max(b))
    });
    build(offset[g.n()], edges)
}

/// The three pairwise crossing edges `(0, 3), (1, 4), (2, 5)`.
pub fn planar_base() -> OrderedGraph {
    build(6, [(0, 3), (1, 4), (2, 5)])
}

pub fn gen_planar_pattern() -> OrderedGraph {
    hat(&planar_base())
}

/// `k + 1` consecutive copies of [`gen_planar_pattern`].
pub fn gen_genus_pattern(k: usize) -> OrderedGraph {
    let p = gen_planar_pattern();
    let mut out = p.clone();
    for _ in 0..k {
        out = concat(&out, &p);
    }
    out
}

pub fn complete_graph(k: usize) -> OrderedGraph {
    build(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))))
}

/// `K_{a,b}` with the first `a` vertices on one side.
pub fn complete_bipartite(a: usize, b: usize) -> OrderedGraph {
    build(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

/// The shipped pattern catalog, by file stem.
pub fn catalog() -> Vec<(String, OrderedGraph)> {
    let mut out = vec![
        ("crossing_pair".to_string(), crossing_pair()),
        ("nested_pair".to_string(), nested_pair()),
    ];
    out.extend((1..=4).map(|i| (format!("m{i}"), gen_mi(i))));
    out.extend((2..=5).map(|m| (format!("halfgraph{m}"), gen_halfgraph_pattern(m))));
    out.push(("pi_k4".into(), gen_pi(&complete_graph(4))));
    out.push(("pi_k33".into(), gen_pi(&complete_bipartite(3, 3))));
    out.push(("planar_base".into(), planar_base()));
    out.push(("planar".into(), gen_planar_pattern()));
    out
}
