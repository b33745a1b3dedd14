//! Property suites runnable from a built binary, one per module.
//!
//! Each check enumerates small hosts exhaustively or draws seeded random ones,
//! so a report is reproducible. `quick` shrinks every size bound.

use crate::extremal::gen_example1;
use crate::graph::{validate_embedding, OrderedGraph, PathGraph};
use crate::io::{parse_ordered_graph, parse_path_graph, serialize_ordered_graph, serialize_path_graph};
use crate::ktt::{find_monochromatic_3clique, main_pipeline, verify_clique_lemmas, Pfam, PipelineOutcome, Stage, TripleTable};
use crate::oracles::{
    contains_ktt, ghn_exact, host_from_mask, longest_increasing_induced_path_exact, longest_induced_path_exact,
    ramsey_upper, ramsey_upper_k3,
};
use crate::patterns::generators::*;
use crate::patterns::{concat, contains_pattern, depth, hat, plus_h, strip_isolated};
use crate::rng::random_host;
use crate::solvers::{ceil_log2, find_gap_or_path, gnc, grs_search, solve_crossing_free, solve_noncrossing, GrsResult};
use crate::tower::DEFAULT_BIT_BUDGET;
use num_bigint::BigUint;
use serde::Serialize;
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Patterns,
    Solvers,
    Ktt,
    Oracles,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "core" => Suite::Core,
            "patterns" => Suite::Patterns,
            "solvers" => Suite::Solvers,
            "ktt" => Suite::Ktt,
            "oracles" => Suite::Oracles,
            "all" => Suite::All,
            other => return Err(format!("unknown suite `{other}`")),
        })
    }
}

impl Suite {
    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Core, Suite::Patterns, Suite::Solvers, Suite::Ktt, Suite::Oracles],
            s => vec![s],
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Patterns => "patterns",
            Suite::Solvers => "solvers",
            Suite::Ktt => "ktt",
            Suite::Oracles => "oracles",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub quick: bool,
    /// Adds a clique record with a corrupted marker to the `ktt` suite.
    pub inject_corrupt: bool,
    pub threads: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub quick: bool,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            write!(s, "{mark} {}/{} ({} cases)", c.suite, c.name, c.cases).unwrap();
            if !c.detail.is_empty() {
                write!(s, ": {}", c.detail).unwrap();
            }
            s.push('\n');
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(s, "{} checks, {failed} failed", self.checks.len()).unwrap();
        s
    }
}

type Outcome = Result<u64, String>;

struct Runner {
    suite: &'static str,
    out: Vec<CheckResult>,
}

impl Runner {
    fn check(&mut self, name: &'static str, f: impl FnOnce() -> Outcome) {
        let (passed, cases, detail) = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(Ok(n)) => (true, n, String::new()),
            Ok(Err(e)) => (false, 0, e),
            Err(p) => {
                let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
                (false, 0, format!("panicked: {}", msg.unwrap_or_default()))
            }
        };
        self.out.push(CheckResult { suite: self.suite, name, passed, cases, detail });
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_hosts(n: usize) -> impl Iterator<Item = PathGraph> {
    let pairs = n.saturating_sub(1) * n.saturating_sub(2) / 2;
    (0u64..(1 << pairs)).map(move |m| host_from_mask(n, m))
}

fn complete_host(n: usize) -> PathGraph {
    PathGraph::new(n, (0..n).flat_map(|i| (i + 2..n).map(move |j| (i, j)))).expect("spans at least 2")
}

pub fn run(suite: Suite, opts: VerifyOptions) -> VerifyReport {
    let mut checks = Vec::new();
    for part in suite.parts() {
        let mut r = Runner { suite: part.name(), out: Vec::new() };
        match part {
            Suite::Core => core(&mut r, opts),
            Suite::Patterns => patterns(&mut r, opts),
            Suite::Solvers => solvers(&mut r, opts),
            Suite::Ktt => ktt(&mut r, opts),
            Suite::Oracles => oracles(&mut r, opts),
            Suite::All => unreachable!("expanded above"),
        }
        checks.extend(r.out);
    }
    let passed = checks.iter().all(|c| c.passed);
    VerifyReport { suite, quick: opts.quick, passed, checks }
}

fn core(r: &mut Runner, opts: VerifyOptions) {
    let count = if opts.quick { 50 } else { 500 };
    r.check("io-roundtrip", || {
        for seed in 0..count {
            let g = random_host(1 + (seed as usize % 40), 0.2, seed);
            let back = parse_path_graph(serialize_path_graph(&g).as_bytes()).map_err(|e| e.to_string())?;
            ensure(back == g, || format!("host seed {seed} changed on a round trip"))?;
        }
        for (name, h) in catalog() {
            let back = parse_ordered_graph(serialize_ordered_graph(&h).as_bytes()).map_err(|e| e.to_string())?;
            ensure(back == h, || format!("pattern {name} changed on a round trip"))?;
        }
        Ok(count)
    });
    r.check("bare-path-validates", || {
        for n in 1..=30 {
            let g = PathGraph::bare(n);
            let v: Vec<usize> = (0..n).collect();
            crate::validate_induced_path(&g, &v).map_err(|e| e.to_string())?;
        }
        Ok(30)
    });
    r.check("chords-break-inducedness", || {
        let mut cases = 0;
        for seed in 0..count {
            let g = random_host(3 + (seed as usize % 20), 0.3, seed);
            for &(i, j) in g.chords() {
                let seq: Vec<usize> = (i..=j).collect();
                ensure(crate::validate_induced_path(&g, &seq).is_err(), || format!("{seq:?} accepted despite chord ({i}, {j})"))?;
                cases += 1;
            }
        }
        Ok(cases)
    });
}

/// Brute-force embedding test: some increasing map sends every edge to a chord.
fn brute_contains(g: &PathGraph, h: &OrderedGraph) -> bool {
    fn go(g: &PathGraph, h: &OrderedGraph, pos: &mut Vec<usize>) -> bool {
        if pos.len() == h.n() {
            return h.edges().iter().all(|&(a, b)| g.is_chord(pos[a], pos[b]));
        }
        let from = pos.last().map_or(0, |&x| x + 1);
        for p in from..g.n() {
            pos.push(p);
            if go(g, h, pos) {
                return true;
            }
            pos.pop();
        }
        false
    }
    go(g, h, &mut Vec::new())
}

fn patterns(r: &mut Runner, opts: VerifyOptions) {
    let top = if opts.quick { 3 } else { 5 };
    r.check("mi-depth", || {
        for i in 1..=top {
            let h = gen_mi(i);
            let d = depth(&h).map_err(|e| e.to_string())?;
            ensure(d == i, || format!("depth(M_{i}) = {d}"))?;
        }
        Ok(top as u64)
    });
    r.check("pi-k4-size", || {
        let p = gen_pi(&complete_graph(4));
        ensure((p.n(), p.num_edges()) == (12, 6), || format!("{} vertices, {} edges", p.n(), p.num_edges()))?;
        Ok(1)
    });
    r.check("algebra-sizes", || {
        let cat = catalog();
        let mut cases = 0;
        for (name, h) in &cat {
            let x = hat(h);
            ensure(x.n() == h.n() + 2 && x.num_edges() == h.num_edges() + 1, || format!("hat({name})"))?;
            for (_, b) in &cat {
                let c = concat(h, b);
                ensure(c.n() == h.n() + b.n() && c.num_edges() == h.num_edges() + b.num_edges(), || format!("concat({name})"))?;
                cases += 1;
            }
            if crate::patterns::is_matching(h) {
                for k in 0..=3 {
                    let p = plus_h(h, k).map_err(|e| e.to_string())?;
                    let want = if h.n() == 0 { 0 } else { k * (h.n() - 1) + h.n() };
                    ensure(p.n() == want && p.num_edges() == h.num_edges(), || format!("plus_h({name}, {k})"))?;
                    ensure(strip_isolated(&p) == strip_isolated(h), || format!("strip_isolated(plus_h({name}, {k}))"))?;
                    cases += 1;
                }
            }
        }
        Ok(cases)
    });
    let limit = if opts.quick { 6 } else { 7 };
    r.check("containment-vs-enumeration", || {
        let hs = [k2(), crossing_pair(), nested_pair(), ordered_p3(), split_k22(), OrderedGraph::empty(2)];
        let mut cases = 0;
        for n in 1..=limit {
            for g in all_hosts(n) {
                for h in &hs {
                    let got = contains_pattern(&g, h);
                    ensure(got.is_some() == brute_contains(&g, h), || format!("{:?} vs {h:?}", g.chords()))?;
                    if let Some(e) = got {
                        validate_embedding(&g, h, &e).map_err(|e| e.to_string())?;
                    }
                    cases += 1;
                }
            }
        }
        Ok(cases)
    });
}

fn solvers(r: &mut Runner, opts: VerifyOptions) {
    let limit = if opts.quick { 6 } else { 8 };
    r.check("crossing-free-log-bound", || {
        let mut cases = 0;
        for n in 2..=limit {
            for g in all_hosts(n).filter(|g| g.crossing_pair().is_none()) {
                let (l, rt) = solve_crossing_free(&g).map_err(|e| format!("{:?}: {e}", g.chords()))?;
                ensure(l.order() + rt.order() >= ceil_log2(n), || format!("{:?}: {} + {}", g.chords(), l.order(), rt.order()))?;
                cases += 1;
            }
        }
        Ok(cases)
    });
    r.check("noncrossing-nested-pair", || {
        let h = nested_pair();
        let mut cases = 0;
        for n in 1..=limit {
            let want = gnc(n, &h);
            for g in all_hosts(n).filter(|g| contains_pattern(g, &h).is_none()) {
                let s = solve_noncrossing(&g, &h).map_err(|e| e.to_string())?;
                s.check(&g, &h)?;
                ensure(s.vertices().is_some_and(|v| v.len() >= want), || format!("{:?}: {s:?}", g.chords()))?;
                cases += 1;
            }
        }
        Ok(cases)
    });
    let gap_limit = if opts.quick { 6 } else { 7 };
    r.check("gap-dichotomy", || {
        let h = crossing_pair();
        let mut cases = 0;
        for (m, t) in [(3usize, 2usize), (5, 2)] {
            for n in m.max(2)..=gap_limit {
                let gap = n.div_ceil(m * t);
                for g in all_hosts(n) {
                    let s = find_gap_or_path(&g, &h, m, t).map_err(|e| format!("{:?} m {m} t {t}: {e}", g.chords()))?;
                    s.check(&g, &h)?;
                    let ok = match (s.vertices(), s.positions()) {
                        (Some(v), _) => v.len() >= t,
                        (_, Some(p)) => crate::PatternEmbedding::new(p.to_vec()).gap_at_least(gap),
                        _ => false,
                    };
                    ensure(ok, || format!("{:?} m {m} t {t}: {s:?}", g.chords()))?;
                    cases += 1;
                }
            }
        }
        Ok(cases)
    });
    let count = if opts.quick { 30 } else { 200 };
    r.check("grs-outcomes", || {
        for seed in 0..count {
            let g = random_host(4 + seed as usize % 10, 0.3, seed);
            match grs_search(&g, 4).map_err(|e| e.to_string())? {
                GrsResult::Found(s) => s.check(&g, &gen_halfgraph_pattern(1))?,
                GrsResult::NoCliqueFound => {}
            }
        }
        Ok(count)
    });
}

fn ktt(r: &mut Runner, opts: VerifyOptions) {
    let limit = if opts.quick { 5 } else { 6 };
    r.check("clique-lemmas", || {
        let mut cases = 0;
        for n in 3..=limit {
            for g in all_hosts(n) {
                let pfam = Pfam::build(&g).map_err(|e| e.to_string())?;
                let table = TripleTable::build(&g, &pfam);
                for s in 3..=5 {
                    for size in s..=n {
                        let Some(k) = find_monochromatic_3clique(&pfam, &table, size) else { break };
                        let rep = verify_clique_lemmas(&pfam, &table, &k, s).map_err(|e| e.to_string())?;
                        ensure(rep.holds(), || format!("{:?} s {s}: {rep:?}", g.chords()))?;
                        cases += 1;
                    }
                }
            }
        }
        Ok(cases)
    });
    r.check("pipeline-outcomes", || {
        let mut cases = 0;
        for n in 3..=limit {
            for g in all_hosts(n) {
                for s in 3..=5 {
                    let res = main_pipeline(&g, 1, Some(s)).map_err(|e| e.to_string())?;
                    match &res.outcome {
                        PipelineOutcome::Path { vertices } => ensure(vertices.len() >= s, || format!("{vertices:?}"))?,
                        PipelineOutcome::Ktt(w) => w.check(&g)?,
                        PipelineOutcome::Report(Stage::RamseyPreconditionUnmet { .. }) => {}
                        other => return Err(format!("{:?} s {s}: {other:?}", g.chords())),
                    }
                    cases += 1;
                }
            }
        }
        Ok(cases)
    });
    r.check("complete-host-ktt", || {
        for t in 1..=3 {
            let g = complete_host(2 * t + 5);
            let res = main_pipeline(&g, t, Some(3)).map_err(|e| e.to_string())?;
            let PipelineOutcome::Ktt(w) = &res.outcome else { return Err(format!("t {t}: {:?}", res.outcome)) };
            w.check(&g)?;
            ensure(contains_ktt(&g, t).map_err(|e| e.to_string())?.is_some(), || format!("oracle misses K_{{{t},{t}}}"))?;
        }
        Ok(3)
    });
    if opts.inject_corrupt {
        r.check("corrupted-clique-fixture", || {
            let g = complete_host(9);
            let pfam = Pfam::build(&g).map_err(|e| e.to_string())?;
            let table = TripleTable::build(&g, &pfam);
            let mut k = find_monochromatic_3clique(&pfam, &table, 7).ok_or("no clique")?;
            let v = k.interior[1];
            k.plus_marker.insert(v, v + 1);
            let rep = verify_clique_lemmas(&pfam, &table, &k, 3).map_err(|e| e.to_string())?;
            let failed: Vec<&str> = rep.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
            ensure(rep.holds(), || format!("lemma checks fail: {}", failed.join(", ")))?;
            Ok(1)
        });
    }
}

fn oracles(r: &mut Runner, opts: VerifyOptions) {
    let threads = opts.threads.max(1);
    let top = if opts.quick { 6 } else { 8 };
    r.check("ghn-k2", || {
        for n in 2..=top.min(7) {
            let v = ghn_exact(&k2(), n, threads).map_err(|e| e.to_string())?.value;
            ensure(v == Some(n), || format!("n {n}: {v:?}"))?;
        }
        Ok(top.min(7) as u64 - 1)
    });
    r.check("ghn-crossing-pair", || {
        for n in 4..=top {
            let v = ghn_exact(&crossing_pair(), n, threads).map_err(|e| e.to_string())?.value;
            ensure(v.is_some_and(|v| v >= ceil_log2(n).div_ceil(2)), || format!("n {n}: {v:?}"))?;
        }
        Ok(top as u64 - 3)
    });
    r.check("ghn-nested-pair", || {
        let h = nested_pair();
        for n in 4..=top {
            let v = ghn_exact(&h, n, threads).map_err(|e| e.to_string())?.value;
            ensure(v.is_some_and(|v| v >= gnc(n, &h)), || format!("n {n}: {v:?} below {}", gnc(n, &h)))?;
        }
        Ok(top as u64 - 3)
    });
    r.check("ghn-thread-independence", || {
        let n = if opts.quick { 6 } else { 7 };
        for h in [crossing_pair(), k2()] {
            let one = ghn_exact(&h, n, 1).map_err(|e| e.to_string())?;
            for t in [2, 4, 8] {
                let many = ghn_exact(&h, n, t).map_err(|e| e.to_string())?;
                ensure(one == many, || format!("{h:?} differs with {t} threads"))?;
            }
        }
        Ok(2)
    });
    r.check("example1-longest", || {
        for n in 6..=20 {
            let o = longest_induced_path_exact(&gen_example1(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.order();
            ensure(o == 4, || format!("n {n}: {o}"))?;
        }
        Ok(15)
    });
    let count = if opts.quick { 30 } else { 200 };
    r.check("increasing-below-general", || {
        for seed in 0..count {
            let g = random_host(1 + seed as usize % 16, 0.3, seed);
            let a = longest_increasing_induced_path_exact(&g).map_err(|e| e.to_string())?.order();
            let b = longest_induced_path_exact(&g).map_err(|e| e.to_string())?.order();
            ensure(a <= b, || format!("seed {seed}: {a} > {b}"))?;
        }
        Ok(count)
    });
    r.check("ramsey-towers", || {
        let cases: [(u64, u64, u64, BigUint); 3] = [
            (1, 4, 3, BigUint::from(1u32)),
            (2, 3, 3, BigUint::from(16u32)),
            (2, 4, 3, BigUint::from(1u32) << 64u32),
        ];
        for (q, n, k, want) in cases {
            let got = ramsey_upper(q, n, k, DEFAULT_BIT_BUDGET).map_err(|e| e.to_string())?;
            ensure(got.exact() == Some(&want), || format!("({q}, {n}, {k}): {got:?}"))?;
        }
        let got = ramsey_upper_k3(2, 3, DEFAULT_BIT_BUDGET).map_err(|e| e.to_string())?;
        ensure(got.exact() == Some(&BigUint::from(4u32)), || format!("k3 form (2, 3): {got:?}"))?;
        Ok(4)
    });
    r.check("ktt-oracle-consistency", || {
        let mut cases = 0;
        for seed in 0..count {
            let g = random_host(5 + seed as usize % 8, 0.5, seed);
            for t in 1..=2 {
                let oracle = contains_ktt(&g, t).map_err(|e| e.to_string())?;
                let res = main_pipeline(&g, t, Some(4)).map_err(|e| e.to_string())?;
                if oracle.is_none() {
                    ensure(!matches!(res.outcome, PipelineOutcome::Ktt(_)), || format!("seed {seed} t {t}"))?;
                }
                cases += 1;
            }
        }
        Ok(cases)
    });
}
