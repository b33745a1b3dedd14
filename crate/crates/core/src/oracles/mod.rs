//! Exhaustive ground truth: exact longest induced paths, exact `g_H(n)` at
//! tiny `n`, `K_{t,t}` detection, and the multicolor Ramsey tower bound.

mod ghn;
mod lip;

pub use ghn::{chord_pairs, ghn_exact, host_from_mask, GhnResult, MAX_N as GHN_MAX_N};
pub use lip::{
    longest_increasing_induced_path_exact, longest_increasing_induced_path_with_cap, longest_induced_path_exact,
    longest_induced_path_with_cap, DEFAULT_CAP,
};

use crate::graph::PathGraph;
use crate::ktt::KttWitness;
use crate::tower::{self, TowerValue};
use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} = {got} exceeds the cap {limit}")]
    CapExceeded { what: &'static str, limit: usize, got: usize },
    #[error("invalid parameter: {0}")]
    Invalid(String),
}

pub const KTT_MAX_T: usize = 3;
pub const KTT_MAX_N: usize = 20;

/// The lexicographically first `K_{t,t}` in the full edge set: side A is the
/// first `t`-subset with `t` common neighbors, side B its `t` smallest.
pub fn contains_ktt(host: &PathGraph, t: usize) -> Result<Option<KttWitness>, OracleError> {
    if t == 0 || t > KTT_MAX_T {
        return Err(OracleError::CapExceeded { what: "t", limit: KTT_MAX_T, got: t });
    }
    if host.n() > KTT_MAX_N {
        return Err(OracleError::CapExceeded { what: "host vertices", limit: KTT_MAX_N, got: host.n() });
    }
    let adj = host.masks().expect("n is at most 20");
    let n = host.n();
    let mut side = Vec::with_capacity(t);
    Ok(first_ktt(&adj, n, t, 0, !0u64 >> (64 - n.max(1)), &mut side))
}

fn first_ktt(adj: &[u64], n: usize, t: usize, from: usize, common: u64, side: &mut Vec<usize>) -> Option<KttWitness> {
    if side.len() == t {
        let mut rest = common;
        for &a in side.iter() {
            rest &= !(1u64 << a);
        }
        if rest.count_ones() as usize >= t {
            let mut b = Vec::with_capacity(t);
            while b.len() < t {
                b.push(rest.trailing_zeros() as usize);
                rest &= rest - 1;
            }
            return Some(KttWitness { side_a: side.clone(), side_b: b });
        }
        return None;
    }
    for a in from..n {
        let c = common & adj[a];
        if (c.count_ones() as usize) < t {
            continue;
        }
        side.push(a);
        let found = first_ktt(adj, n, t, a + 1, c, side);
        side.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn check_ramsey(q: u64, big_n: u64, k: u64) -> Result<(), OracleError> {
    if q < 1 || big_n < 1 || k < 2 || big_n < k {
        return Err(OracleError::Invalid(format!("need q, N >= 1, k >= 2, N >= k; got q={q}, N={big_n}, k={k}")));
    }
    Ok(())
}

/// `q * (q^(k-1)) * ... * (q^2) * (q(N-k)+1)` with `a * b = a^b`, right-nested.
pub fn ramsey_upper(q: u64, big_n: u64, k: u64, budget: u64) -> Result<TowerValue, OracleError> {
    check_ramsey(q, big_n, k)?;
    let q_big = BigUint::from(q);
    let mut levels = vec![q_big.clone()];
    for e in (2..k).rev() {
        levels.push(num_traits::pow::Pow::pow(&q_big, e));
    }
    levels.push(BigUint::from(q) * BigUint::from(big_n - k) + 1u32);
    Ok(tower::eval(&levels, budget))
}

/// The three-uniform form `q * q * (2q(N-3)+1)`.
pub fn ramsey_upper_k3(q: u64, big_n: u64, budget: u64) -> Result<TowerValue, OracleError> {
    check_ramsey(q, big_n, 3)?;
    let q_big = BigUint::from(q);
    let top = BigUint::from(2u32) * &q_big * BigUint::from(big_n - 3) + 1u32;
    Ok(tower::eval(&[q_big.clone(), q_big, top], budget))
}
