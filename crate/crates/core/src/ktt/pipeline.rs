use super::clique::{find_monochromatic_3clique, largest_monochromatic_3clique, verify_clique_lemmas, CliqueRecord, LemmaReport};
use super::color::{SplitTriple, TripleTable};
use super::extract::{ktt_extract, Variant};
use super::paths::Pfam;
use super::{KttError, KttWitness};
use crate::graph::{validate_induced_path, PathGraph};
use num_bigint::BigUint;
use serde::Serialize;

/// A host size, given exactly or by magnitude.
#[derive(Debug, Clone, PartialEq)]
pub enum NSize {
    Exact(BigUint),
    /// Number of bits of `n`.
    BitLength(u64),
    /// `log2 log2 n`, for sizes beyond any bit length.
    Log2Log2(f64),
}

/// `log2 log2` of the tower `A * (A * B)`: `B log2 A + log2 log2 A`, with
/// `A = 1000 s^4` and `B = 2 A max(s, 2t + 5)`.
fn tower_loglog(s: usize, t: usize) -> f64 {
    let a = 1000.0 * (s as f64).powi(4);
    let b = 2.0 * a * (s.max(2 * t + 5) as f64);
    b * a.log2() + a.log2().log2()
}

/// Largest `s` with `n >= A * (A * B)` where `a * b` is `a^b`.
///
/// `s = 0` always qualifies. Any `s >= 1` needs `log2 n >= A^B log2 A` with
/// `A^B >= 1000^14000`, so an `n` given exactly or by a 64-bit bit length
/// only ever admits `s = 0`.
pub fn s_from_n(n: &NSize, t: usize) -> usize {
    let y = match n {
        NSize::Exact(_) | NSize::BitLength(_) => {
            debug_assert!(tower_loglog(1, t) > 64.0);
            return 0;
        }
        NSize::Log2Log2(y) => *y,
    };
    if !(y >= tower_loglog(1, t)) {
        return 0;
    }
    let mut hi = 2;
    while tower_loglog(hi, t) <= y {
        hi *= 2;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if tower_loglog(mid, t) <= y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "stage", rename_all = "kebab-case")]
pub enum Stage {
    /// No monochromatic clique of the order required; `largest` is the biggest one found.
    RamseyPreconditionUnmet { required: usize },
    /// A clique of the required order with `col3` nonzero that failed to yield `K_{t,t}`.
    ExtractionFailed { reason: String },
    /// A clique with `col3 = (0, 0, 0)` and the shortcut on the long path.
    ContradictionCertified { path: Vec<usize>, shortcut: Option<(usize, usize)>, rerouted: Option<Vec<usize>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PipelineOutcome {
    Path { vertices: Vec<usize> },
    Ktt(KttWitness),
    Report(Stage),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineResult {
    pub s: usize,
    pub t: usize,
    pub outcome: PipelineOutcome,
    pub clique: Option<CliqueRecord>,
    pub verification: Option<LemmaReport>,
}

/// An increasing induced path of order `s`, a `K_{t,t}`, or a report of the
/// stage where the argument stopped. `force_s` replaces the size-derived `s`.
pub fn main_pipeline(host: &PathGraph, t: usize, force_s: Option<usize>) -> Result<PipelineResult, KttError> {
    if t == 0 {
        return Err(KttError::Parameter("t must be at least 1".into()));
    }
    let n = host.n();
    let s = force_s.unwrap_or_else(|| s_from_n(&NSize::Exact(BigUint::from(n)), t));
    let done = |outcome, clique, verification| Ok(PipelineResult { s, t, outcome, clique, verification });
    let pfam = Pfam::build(host)?;
    match pfam.max_order() {
        None => return done(PipelineOutcome::Path { vertices: vec![0] }, None, None),
        Some((o, u, v)) if o >= s => return done(PipelineOutcome::Path { vertices: pfam.get(u, v).to_vec() }, None, None),
        Some(_) => {}
    }
    let table = TripleTable::build(host, &pfam);
    let required = s.max(2 * t + 5);
    let Some(clique) = find_monochromatic_3clique(&pfam, &table, required) else {
        let largest = largest_monochromatic_3clique(&pfam, &table);
        let verification = largest.as_ref().map(|c| verify_clique_lemmas(&pfam, &table, c, s)).transpose()?;
        return done(PipelineOutcome::Report(Stage::RamseyPreconditionUnmet { required }), largest, verification);
    };
    let verification = Some(verify_clique_lemmas(&pfam, &table, &clique, s)?);
    let (i, _, _) = clique.color.c3;
    if let Some(variant) = Variant::for_case(i) {
        let f = |a, b, c| table.edge(a, b, c).map_or(usize::MAX, |e| e.0);
        let f2 = |a, b, c| table.edge(a, b, c).map_or(usize::MAX, |e| e.1);
        let outcome = match ktt_extract(host, &clique.interior, f, f2, variant, t) {
            Ok(w) => PipelineOutcome::Ktt(w),
            Err(e) => PipelineOutcome::Report(Stage::ExtractionFailed { reason: e.to_string() }),
        };
        return done(outcome, Some(clique), verification);
    }
    let stage = conclude(host, &pfam, &clique);
    done(PipelineOutcome::Report(stage), Some(clique), verification)
}

/// The long path through the first interior triple and its leftmost shortcut.
fn conclude(host: &PathGraph, pfam: &Pfam, k: &CliqueRecord) -> Stage {
    let (u, v, w) = (k.interior[0], k.interior[1], k.interior[2]);
    let split = |a, b| SplitTriple::of(pfam.get(a, b), k.d, k.drev);
    let (Some(uv), Some(uw), Some(vw)) = (split(u, v), split(u, w), split(v, w)) else {
        return Stage::ContradictionCertified { path: Vec::new(), shortcut: None, rerouted: None };
    };
    let path = [uw.left, uv.mid, uv.right, vw.left, vw.mid, uw.right].concat();
    let mut path = path;
    path.dedup();
    let shortcut = (0..path.len()).find_map(|i| {
        (i + 2..path.len()).rev().find(|&j| host.adjacent(path[i], path[j])).map(|j| (i, j))
    });
    let rerouted = shortcut.and_then(|(i, j)| {
        let q = [&path[..=i], &path[j..]].concat();
        validate_induced_path(host, &q).ok().map(|_| q)
    });
    Stage::ContradictionCertified {
        shortcut: shortcut.map(|(i, j)| (path[i], path[j])),
        rerouted,
        path,
    }
}
