use super::SolveError;
use crate::graph::{validate_induced_path, InducedPath, PathGraph};

/// Two increasing induced paths `L < R` with `L` starting at `0`, `R` ending
/// at `n - 1` and `|L| + |R| >= log2 n`, for a host without crossing chords.
pub fn solve_crossing_free(host: &PathGraph) -> Result<(InducedPath, InducedPath), SolveError> {
    let n = host.n();
    if n < 2 {
        return Err(SolveError::Parameter(format!("need n >= 2, got {n}")));
    }
    if let Some(((a, c), (b, d))) = host.crossing_pair() {
        return Err(SolveError::HostCrossing(a, c, b, d));
    }
    let (mut lo, mut hi) = (0, n - 1);
    let mut left = Vec::new();
    let mut right_rev = Vec::new();
    while hi - lo + 1 > 2 {
        // The maximal edges of the interval, with (lo, hi) dropped, form an
        // increasing path from lo to hi.
        let mut f = vec![lo];
        let mut cur = lo;
        while cur != hi {
            cur = host
                .forward_neighbors(cur)
                .take_while(|&x| x <= hi)
                .filter(|&x| !(cur == lo && x == hi))
                .last()
                .expect("cur + 1 is a forward neighbor");
            f.push(cur);
        }
        let t = f.len() - 1;
        let size = hi - lo + 1;
        let k = (0..t).find(|&k| (f[k + 1] - f[k] + 1) * t >= size).expect("some maximal edge is long enough");
        left.extend_from_slice(&f[..k]);
        right_rev.extend(f[k + 2..].iter().rev());
        (lo, hi) = (f[k], f[k + 1]);
    }
    left.push(lo);
    right_rev.push(hi);
    right_rev.reverse();
    let l = validate_induced_path(host, &left).map_err(|e| SolveError::Internal(format!("L: {e}")))?;
    let r = validate_induced_path(host, &right_rev).map_err(|e| SolveError::Internal(format!("R: {e}")))?;
    Ok((l, r))
}
