use crate::record::{sha256_hex, Context};
use crate::{Command, Fail};
use clap::{Args, Subcommand, ValueEnum};
use ordpath::extremal::{gen_example1, gen_example2};
use ordpath::ktt::{main_pipeline, KttError};
use ordpath::oracles::{
    contains_ktt, ghn_exact, longest_increasing_induced_path_with_cap, longest_induced_path_with_cap, ramsey_upper,
    ramsey_upper_k3, OracleError, DEFAULT_CAP,
};
use ordpath::patterns::generators::*;
use ordpath::patterns::{concat, contains_pattern_with_gap, hat, plus_h, profile, strip_isolated};
use ordpath::rng::random_host;
use ordpath::solvers::{find_gap_or_path, grs_search, solve_crossing_free, solve_matching, solve_noncrossing, span_path, SolveError};
use ordpath::tower::{TowerValue, DEFAULT_BIT_BUDGET};
use ordpath::verify::{self, Suite, VerifyOptions};
use ordpath::{parse_ordered_graph, parse_path_graph, serialize_ordered_graph, serialize_path_graph, OrderedGraph, PathGraph};
use serde::Serialize;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::time::Instant;

/// What a command produced: a JSON payload, optionally a table or a file body.
pub struct Output {
    pub payload: Value,
    pub table: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
    pub file: Option<String>,
    pub note: Option<String>,
    pub seed: Option<u64>,
    pub exit: u8,
}

impl Output {
    fn json(payload: Value) -> Self {
        Output { payload, table: None, file: None, note: None, seed: None, exit: 0 }
    }

    fn file(body: String, payload: Value) -> Self {
        Output { file: Some(body), ..Output::json(payload) }
    }
}

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("serializable payload")
}

fn solve_fail(e: SolveError) -> Fail {
    match e {
        SolveError::TooLarge { .. } => Fail::cap(e.to_string()),
        SolveError::HypothesisUnmet { .. } | SolveError::Internal(_) => Fail::property(e.to_string()),
        _ => Fail::usage(e.to_string()),
    }
}

fn oracle_fail(e: OracleError) -> Fail {
    match e {
        OracleError::CapExceeded { .. } => Fail::cap(e.to_string()),
        OracleError::Invalid(_) => Fail::usage(e.to_string()),
    }
}

fn ktt_fail(e: KttError) -> Fail {
    match e {
        KttError::TooLarge { .. } => Fail::cap(e.to_string()),
        KttError::Parameter(_) => Fail::usage(e.to_string()),
        _ => Fail::property(e.to_string()),
    }
}

fn need<T>(v: Option<T>, flag: &str, kind: &str) -> Result<T, Fail> {
    v.ok_or_else(|| Fail::usage(format!("{kind} needs {flag}")))
}

fn builtin(name: &str) -> Option<OrderedGraph> {
    let fixed = match name {
        "k2" => Some(k2()),
        "M" | "crossing-pair" => Some(crossing_pair()),
        "nested-pair" => Some(nested_pair()),
        "p3" => Some(ordered_p3()),
        "split-k22" => Some(split_k22()),
        _ => None,
    };
    fixed.or_else(|| catalog().into_iter().find(|(stem, _)| stem == name).map(|(_, h)| h))
}

/// A pattern file, or the name of a built-in pattern.
fn load_pattern(ctx: &mut Context, arg: &str) -> Result<(String, OrderedGraph), Fail> {
    let path = Path::new(arg);
    if path.is_file() {
        let bytes = ctx.read(path)?;
        let h = parse_ordered_graph(&bytes).map_err(|e| Fail::usage(format!("{arg}: {e}")))?;
        let stem = path.file_stem().map_or(arg.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok((stem, h));
    }
    builtin(arg).map(|h| (arg.to_string(), h)).ok_or_else(|| Fail::usage(format!("{arg} is neither a file nor a built-in pattern")))
}

fn load_host(ctx: &mut Context, path: &Path) -> Result<PathGraph, Fail> {
    let bytes = ctx.read(path)?;
    parse_path_graph(&bytes).map_err(|e| Fail::usage(format!("{}: {e}", path.display())))
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenKind {
    Example1,
    Example2,
    Halfgraph,
    #[value(name = "Mi", alias = "mi")]
    Mi,
    Pi,
    Planar,
    Genus,
    RandomHost,
}

#[derive(Args, Debug, Serialize)]
pub struct GenArgs {
    pub kind: GenKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub density: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Base graph for `pi`: a pattern file or built-in name (default: K_k).
    #[arg(long)]
    pub pattern: Option<String>,
}

enum Generated {
    Host(PathGraph),
    Pattern(OrderedGraph),
}

fn gen(a: &GenArgs, ctx: &mut Context) -> Result<Output, Fail> {
    let bad = |e: ordpath::extremal::ExtremalError| Fail::usage(e.to_string());
    let g = match a.kind {
        GenKind::Example1 => Generated::Host(gen_example1(need(a.n, "--n", "example1")?).map_err(bad)?),
        GenKind::Example2 => Generated::Host(gen_example2(need(a.i, "--i", "example2")?).map_err(bad)?),
        GenKind::Halfgraph => Generated::Pattern(gen_halfgraph_pattern(need(a.m, "--m", "halfgraph")?)),
        GenKind::Mi => {
            let i = need(a.i, "--i", "Mi")?;
            if i > 8 {
                return Err(Fail::cap(format!("Mi with i = {i} exceeds the limit 8")));
            }
            Generated::Pattern(gen_mi(i))
        }
        GenKind::Pi => {
            let base = match (&a.pattern, a.k) {
                (Some(p), _) => load_pattern(ctx, p)?.1,
                (None, Some(k)) => complete_graph(k),
                (None, None) => return Err(Fail::usage("pi needs --pattern or --k")),
            };
            Generated::Pattern(gen_pi(&base))
        }
        GenKind::Planar => Generated::Pattern(gen_planar_pattern()),
        GenKind::Genus => Generated::Pattern(gen_genus_pattern(need(a.k, "--k", "genus")?)),
        GenKind::RandomHost => {
            let n = need(a.n, "--n", "random-host")?;
            let d = need(a.density, "--density", "random-host")?;
            if n == 0 || !(0.0..=1.0).contains(&d) {
                return Err(Fail::usage("random-host needs n >= 1 and density in [0, 1]"));
            }
            Generated::Host(random_host(n, d, need(a.seed, "--seed", "random-host")?))
        }
    };
    let (body, kind, n, m) = match &g {
        Generated::Host(h) => (serialize_path_graph(h), "pathgraph", h.n(), h.chords().len()),
        Generated::Pattern(p) => (serialize_ordered_graph(p), "pattern", p.n(), p.num_edges()),
    };
    let sha = sha256_hex(body.as_bytes());
    let payload = json!({ "format": kind, "vertices": n, "edges": m, "sha256": sha });
    let mut out = Output::file(body, payload);
    out.note = Some(format!("sha256 {sha}\n"));
    out.seed = matches!(a.kind, GenKind::RandomHost).then_some(a.seed).flatten();
    Ok(out)
}

#[derive(Args, Debug, Serialize)]
pub struct PatternArgs {
    #[command(subcommand)]
    pub op: PatternOp,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum PatternOp {
    /// Print a pattern in canonical form.
    Show { pattern: String },
    /// Lexicographically first embedding of a pattern in a host.
    Contains {
        host: PathBuf,
        pattern: String,
        #[arg(long, default_value_t = 1)]
        gap: usize,
    },
    Concat { a: String, b: String },
    Hat { pattern: String },
    PlusH {
        pattern: String,
        #[arg(long)]
        k: usize,
    },
    Strip { pattern: String },
    /// Write every catalog pattern into a directory.
    Catalog {
        #[arg(long)]
        dir: PathBuf,
    },
}

fn pattern_file(h: &OrderedGraph) -> Output {
    let body = serialize_ordered_graph(h);
    let sha = sha256_hex(body.as_bytes());
    Output::file(body, json!({ "format": "pattern", "vertices": h.n(), "edges": h.num_edges(), "sha256": sha }))
}

fn pattern(a: &PatternArgs, ctx: &mut Context) -> Result<Output, Fail> {
    Ok(match &a.op {
        PatternOp::Show { pattern } => pattern_file(&load_pattern(ctx, pattern)?.1),
        PatternOp::Contains { host, pattern, gap } => {
            let g = load_host(ctx, host)?;
            let (_, h) = load_pattern(ctx, pattern)?;
            let e = contains_pattern_with_gap(&g, &h, *gap);
            Output::json(json!({ "contained": e.is_some(), "positions": e.map(|e| e.positions().to_vec()) }))
        }
        PatternOp::Concat { a, b } => pattern_file(&concat(&load_pattern(ctx, a)?.1, &load_pattern(ctx, b)?.1)),
        PatternOp::Hat { pattern } => pattern_file(&hat(&load_pattern(ctx, pattern)?.1)),
        PatternOp::PlusH { pattern, k } => {
            pattern_file(&plus_h(&load_pattern(ctx, pattern)?.1, *k).map_err(|e| Fail::usage(e.to_string()))?)
        }
        PatternOp::Strip { pattern } => pattern_file(&strip_isolated(&load_pattern(ctx, pattern)?.1)),
        PatternOp::Catalog { dir } => {
            std::fs::create_dir_all(dir).map_err(|e| Fail::usage(format!("{}: {e}", dir.display())))?;
            let mut files = serde_json::Map::new();
            for (stem, h) in catalog() {
                let body = serialize_ordered_graph(&h);
                let path = dir.join(format!("{stem}.pattern"));
                std::fs::write(&path, &body).map_err(|e| Fail::usage(format!("{}: {e}", path.display())))?;
                files.insert(format!("{stem}.pattern"), Value::String(sha256_hex(body.as_bytes())));
            }
            Output::json(json!({ "files": files }))
        }
    })
}

#[derive(Args, Debug, Serialize)]
pub struct ClassifyArgs {
    /// Pattern file or built-in name.
    pub pattern: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveAlgo {
    /// Matching patterns: path of order gm(n, h) or a witness.
    Matching,
    Noncrossing,
    CrossingFree,
    /// Crossing-pair witness with a large gap, or a path of order t.
    Gap,
    Span,
}

#[derive(Args, Debug, Serialize)]
pub struct SolveArgs {
    pub algo: SolveAlgo,
    pub host: PathBuf,
    #[arg(long)]
    pub pattern: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
}

fn solve(a: &SolveArgs, ctx: &mut Context) -> Result<Output, Fail> {
    let g = load_host(ctx, &a.host)?;
    let pat = |ctx: &mut Context| -> Result<OrderedGraph, Fail> {
        let p = a.pattern.as_deref().ok_or_else(|| Fail::usage("this solver needs --pattern"))?;
        Ok(load_pattern(ctx, p)?.1)
    };
    let v = match a.algo {
        SolveAlgo::Matching => to_value(&solve_matching(&g, &pat(ctx)?).map_err(solve_fail)?),
        SolveAlgo::Noncrossing => to_value(&solve_noncrossing(&g, &pat(ctx)?).map_err(solve_fail)?),
        SolveAlgo::Gap => {
            let h = match &a.pattern {
                Some(_) => pat(ctx)?,
                None => crossing_pair(),
            };
            to_value(&find_gap_or_path(&g, &h, need(a.m, "--m", "gap")?, need(a.t, "--t", "gap")?).map_err(solve_fail)?)
        }
        SolveAlgo::CrossingFree => {
            let (l, r) = solve_crossing_free(&g).map_err(solve_fail)?;
            json!({ "left": l.vertices(), "right": r.vertices(), "total": l.order() + r.order() })
        }
        SolveAlgo::Span => {
            let p = span_path(&g).map_err(solve_fail)?;
            json!({ "kind": "path", "vertices": p.vertices() })
        }
    };
    Ok(Output::json(v))
}

#[derive(Args, Debug, Serialize)]
pub struct OracleArgs {
    #[command(subcommand)]
    pub op: OracleOp,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum OracleOp {
    /// Exact longest induced path.
    Lip {
        host: PathBuf,
        #[arg(long)]
        increasing: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Lexicographically first K_{t,t} in the full edge set.
    Ktt {
        host: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Right-nested upper bound tower for R_q(N; k).
    Ramsey {
        #[arg(long)]
        q: u64,
        #[arg(long = "N", alias = "big-n")]
        big_n: u64,
        #[arg(long)]
        k: u64,
        /// Use the three-uniform form instead of the general product.
        #[arg(long)]
        k3: bool,
        #[arg(long, default_value_t = DEFAULT_BIT_BUDGET)]
        budget: u64,
    },
}

fn tower_json(v: &TowerValue) -> Value {
    match v {
        TowerValue::Exact(x) => json!({ "exact": x.to_string(), "bits": x.bits() }),
        TowerValue::Estimate { log2_bits } => json!({ "exact": null, "log2_bits": log2_bits }),
    }
}

fn oracle(a: &OracleArgs, ctx: &mut Context) -> Result<Output, Fail> {
    let v = match &a.op {
        OracleOp::Lip { host, increasing, cap } => {
            let g = load_host(ctx, host)?;
            let p = if *increasing {
                longest_increasing_induced_path_with_cap(&g, *cap)
            } else {
                longest_induced_path_with_cap(&g, *cap)
            }
            .map_err(oracle_fail)?;
            json!({ "order": p.order(), "vertices": p.vertices(), "increasing": p.increasing() })
        }
        OracleOp::Ktt { host, t } => {
            let g = load_host(ctx, host)?;
            let w = contains_ktt(&g, *t).map_err(oracle_fail)?;
            json!({ "found": w.is_some(), "witness": w })
        }
        OracleOp::Ramsey { q, big_n, k, k3, budget } => {
            let v = if *k3 {
                if *k != 3 {
                    return Err(Fail::usage("--k3 needs --k 3"));
                }
                ramsey_upper_k3(*q, *big_n, *budget)
            } else {
                ramsey_upper(*q, *big_n, *k, *budget)
            }
            .map_err(oracle_fail)?;
            json!({ "q": q, "N": big_n, "k": k, "form": if *k3 { "k3" } else { "general" }, "value": tower_json(&v) })
        }
    };
    Ok(Output::json(v))
}

#[derive(Args, Debug, Serialize)]
pub struct GhnArgs {
    /// Pattern file or built-in name.
    pub pattern: String,
    /// Host size, or the first size with --to.
    #[arg(long)]
    pub n: usize,
    /// Last host size of a range.
    #[arg(long)]
    pub to: Option<usize>,
}

fn ghn(a: &GhnArgs, ctx: &mut Context) -> Result<Output, Fail> {
    let (name, h) = load_pattern(ctx, &a.pattern)?;
    let to = a.to.unwrap_or(a.n);
    if to < a.n {
        return Err(Fail::usage("--to must be at least --n"));
    }
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for n in a.n..=to {
        let start = Instant::now();
        let r = ghn_exact(&h, n, ctx.threads).map_err(oracle_fail)?;
        let ms = ctx.elapsed_ms(start);
        let chords: Vec<String> = r.witness.iter().flat_map(|w| w.chords().iter().map(|(i, j)| format!("{i}-{j}"))).collect();
        rows.push(vec![
            name.clone(),
            n.to_string(),
            r.value.map_or("inf".into(), |v| v.to_string()),
            chords.join(";"),
            r.count_avoiding.to_string(),
            ms.to_string(),
        ]);
        json_rows.push(json!({
            "pattern": name, "n": n, "ghn": r.value, "witness_chords": r.witness.as_ref().map(|w| w.chords().to_vec()),
            "count_avoiding": r.count_avoiding, "elapsed_ms": ms,
        }));
    }
    let header = vec!["pattern", "n", "ghn", "witness_chords", "count_avoiding", "elapsed_ms"];
    Ok(Output { table: Some((header, rows)), ..Output::json(Value::Array(json_rows)) })
}

#[derive(Args, Debug, Serialize)]
pub struct GrsArgs {
    pub host: PathBuf,
    #[arg(long)]
    pub p: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct MainThmArgs {
    pub host: PathBuf,
    #[arg(long)]
    pub t: usize,
    /// Path order to aim for instead of the one derived from n.
    #[arg(long)]
    pub s: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    /// core, patterns, solvers, ktt, oracles or all.
    pub suite: String,
    #[arg(long)]
    pub quick: bool,
    /// Add a corrupted clique record to the ktt suite.
    #[arg(long)]
    pub inject_corrupt: bool,
}

fn run_verify(a: &VerifyArgs, ctx: &mut Context) -> Result<Output, Fail> {
    let suite: Suite = a.suite.parse().map_err(Fail::usage)?;
    let rep = verify::run(suite, VerifyOptions { quick: a.quick, inject_corrupt: a.inject_corrupt, threads: ctx.threads });
    let rows = rep
        .checks
        .iter()
        .map(|c| vec![c.suite.to_string(), c.name.to_string(), c.passed.to_string(), c.cases.to_string(), c.detail.clone()])
        .collect();
    let exit = if rep.passed { 0 } else { 1 };
    Ok(Output {
        payload: to_value(&rep),
        table: Some((vec!["suite", "check", "passed", "cases", "detail"], rows)),
        file: None,
        note: Some(rep.to_text()),
        seed: None,
        exit,
    })
}

pub fn dispatch(cmd: &Command, ctx: &mut Context) -> Result<Output, Fail> {
    match cmd {
        Command::Gen(a) => gen(a, ctx),
        Command::Pattern(a) => pattern(a, ctx),
        Command::Classify(a) => Ok(Output::json(to_value(&profile(&load_pattern(ctx, &a.pattern)?.1)))),
        Command::Solve(a) => solve(a, ctx),
        Command::Oracle(a) => oracle(a, ctx),
        Command::Ghn(a) => ghn(a, ctx),
        Command::Grs(a) => {
            let g = load_host(ctx, &a.host)?;
            Ok(Output::json(to_value(&grs_search(&g, a.p).map_err(solve_fail)?)))
        }
        Command::MainThm(a) => {
            let g = load_host(ctx, &a.host)?;
            Ok(Output::json(to_value(&main_pipeline(&g, a.t, a.s).map_err(ktt_fail)?)))
        }
        Command::Verify(a) => run_verify(a, ctx),
    }
}
