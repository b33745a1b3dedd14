use crate::commands::{self, Output};
use crate::{Cli, Command, Fail, Format};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::io::Write;
use std::path::Path;
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct InputFile {
    pub path: String,
    pub sha256: String,
}

/// Everything needed to repeat a run and compare its payload.
#[derive(Debug, Serialize)]
pub struct RunRecord<'a> {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub parameters: &'a crate::Command,
    pub inputs: &'a [InputFile],
    pub seed: Option<u64>,
    pub payload: &'a Value,
    pub elapsed_ms: u64,
}

pub struct Context {
    pub inputs: Vec<InputFile>,
    pub threads: usize,
    pub no_timing: bool,
}

impl Context {
    /// Reads an input file and records its hash.
    pub fn read(&mut self, path: &Path) -> Result<Vec<u8>, Fail> {
        let bytes = std::fs::read(path).map_err(|e| Fail::usage(format!("cannot read {}: {e}", path.display())))?;
        self.inputs.push(InputFile { path: path.display().to_string(), sha256: sha256_hex(&bytes) });
        Ok(bytes)
    }

    pub fn elapsed_ms(&self, start: Instant) -> u64 {
        if self.no_timing {
            0
        } else {
            start.elapsed().as_millis() as u64
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Fail> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Fail::usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| Fail::usage(format!("stdout: {e}")))
        }
    }
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> Result<String, Fail> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Fail::usage(format!("csv: {e}"));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Fail::usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

pub fn run(cli: &Cli) -> Result<u8, Fail> {
    let g = &cli.global;
    let requested = match (g.threads, std::env::var("ORDPATH_THREADS")) {
        (Some(t), _) => Some(t),
        (None, Ok(v)) => Some(v.trim().parse().map_err(|_| Fail::usage(format!("ORDPATH_THREADS={v} is not a count")))?),
        (None, Err(_)) => None,
    };
    let threads = match requested {
        Some(0) => return Err(Fail::usage("thread count must be at least 1")),
        Some(t) => t,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    // Ignore the error when a pool already exists (repeated runs in one process).
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    let mut ctx = Context { inputs: Vec::new(), threads, no_timing: g.no_timing };
    let start = Instant::now();
    let out: Output = commands::dispatch(&cli.command, &mut ctx)?;
    let elapsed_ms = ctx.elapsed_ms(start);

    let format = g.format.unwrap_or(if matches!(cli.command, Command::Ghn(_)) { Format::Csv } else { Format::Json });
    if let Some(file) = &out.file {
        write_out(g.output.as_deref(), file)?;
        if g.output.is_some() {
            write_out(None, &format!("{}\n", serde_json::to_string_pretty(&out.payload).expect("json")))?;
        }
    } else {
        let text = match (format, &out.table) {
            (Format::Csv, Some((header, rows))) => to_csv(header, rows)?,
            (Format::Csv, None) => return Err(Fail::usage("csv output is only available for tables (ghn, verify)")),
            (Format::Json, _) => format!("{}\n", serde_json::to_string_pretty(&out.payload).expect("json")),
        };
        write_out(g.output.as_deref(), &text)?;
    }
    if let Some(note) = &out.note {
        eprint!("{note}");
    }
    if let Some(path) = &g.record {
        let rec = RunRecord {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION"),
            command: cli.command.name(),
            parameters: &cli.command,
            inputs: &ctx.inputs,
            seed: out.seed,
            payload: &out.payload,
            elapsed_ms,
        };
        write_out(Some(path), &format!("{}\n", serde_json::to_string_pretty(&rec).expect("json")))?;
    }
    Ok(out.exit)
}
