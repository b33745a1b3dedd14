//! Extremal hosts: a dense one-sided host whose induced paths have order at
//! most 4, and a recursive host whose induced paths are logarithmic.

use crate::graph::PathGraph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("example 1 needs n >= 2, got {0}")]
    TooSmall(usize),
    #[error("example 2 needs i >= 1")]
    ZeroLevel,
}

/// Chords `(i, j)` with `i` even, `j` odd, `i < j` and `j - i >= 2`.
pub fn gen_example1(n: usize) -> Result<PathGraph, ExtremalError> {
    if n < 2 {
        return Err(ExtremalError::TooSmall(n));
    }
    let chords = (0..n).step_by(2).flat_map(|i| (i + 3..n).step_by(2).map(move |j| (i, j)));
    Ok(PathGraph::new(n, chords).expect("odd offsets of at least 3"))
}

/// `G_1` is one vertex; `G_i` is laid out as `u, A, v, B, w` with copies `A`, `B`
/// of `G_{i-1}` and chords `uv`, `uw`.
pub fn gen_example2(i: usize) -> Result<PathGraph, ExtremalError> {
    if i == 0 {
        return Err(ExtremalError::ZeroLevel);
    }
    let mut n = 1usize;
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for _ in 1..i {
        let a = n;
        let v = a + 1;
        let shift_b = a + 2;
        let w = 2 * a + 2;
        let mut next = vec![(0, v), (0, w)];
        next.extend(chords.iter().map(|&(x, y)| (x + 1, y + 1)));
        next.extend(chords.iter().map(|&(x, y)| (x + shift_b, y + shift_b)));
        chords = next;
        n = 2 * a + 3;
    }
    Ok(PathGraph::new(n, chords).expect("recursive layout keeps chords valid"))
}
