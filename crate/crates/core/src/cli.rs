//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven in-process.
//!
//! Exit codes: 0 success, 1 data error, 2 usage error.

use std::io::{BufRead, Write};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::extraction::driver::{unavoidable_witness, DriverReport, Outcome, StageNote};
use crate::families::{generate, FamilyId};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::homogeneous::find_homogeneous_set;
use crate::verify::{verify, VerifyReport, MAX_SWEEP_VERTICES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "primegraph", version, about = "Prime graphs and their unavoidable induced subgraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the graph6 encoding of a family member, e.g. `half-graph:5` or `thin-spider:4!`.
    Gen { spec: FamilyId },
    /// Read graph6 lines and print `prime` or `homogeneous {set}` for each.
    Prime,
    /// Read graph6 lines and search each for an unavoidable induced subgraph.
    Witness {
        /// Size of the outcome sought.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(3..))]
        n: u64,
        /// One JSON object per input line.
        #[arg(long)]
        json: bool,
        /// Worker threads; output keeps input order.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
        jobs: u64,
        /// Add the stage trace and elapsed milliseconds to each JSON record.
        #[arg(long)]
        trace: bool,
        /// Print totals to standard error when done.
        #[arg(long)]
        summary: bool,
    },
    /// Cross-check the fast algorithms against brute force on small graphs.
    Verify {
        /// Exhaustive sweeps cover all labeled graphs up to this many vertices.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..=MAX_SWEEP_VERTICES as u64))]
        max_vertices: u64,
        /// Extra random graphs on one more vertex for the primality check.
        #[arg(long, default_value_t = 0)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen { spec } => cmd_gen(spec, out, err),
        Command::Prime => cmd_prime(input, out, err),
        Command::Witness { n, json, jobs, trace, summary } => {
            let opts = WitnessOptions {
                n: n as usize,
                json,
                jobs: jobs as usize,
                trace,
                summary,
            };
            cmd_witness(&opts, input, out, err)
        }
        Command::Verify { max_vertices, samples, seed, json } => cmd_verify(max_vertices as usize, samples, seed, json, out),
    };
    match result {
        Ok(code) => code,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "i/o error: {e}");
            EXIT_DATA
        }
    }
}

fn cmd_gen(spec: FamilyId, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match generate(spec) {
        Ok(g) => {
            writeln!(out, "{}", emit_graph6(&g.graph))?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(EXIT_USAGE)
        }
    }
}

/// Non-blank input lines with their 1-based line numbers.
fn read_lines(input: &mut dyn BufRead) -> std::io::Result<Vec<(usize, String)>> {
    let mut lines = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim_end_matches(['\r', '\n']);
        if !trimmed.trim().is_empty() {
            lines.push((i + 1, trimmed.to_string()));
        }
    }
    Ok(lines)
}

fn cmd_prime(input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let mut code = EXIT_OK;
    for (lineno, line) in read_lines(input)? {
        match parse_graph6(&line) {
            Ok(g) if g.n() < 3 => writeln!(out, "not prime: fewer than 3 vertices")?,
            Ok(g) => match find_homogeneous_set(&g) {
                None => writeln!(out, "prime")?,
                Some(set) => writeln!(out, "homogeneous {set}")?,
            },
            Err(e) => {
                writeln!(err, "line {lineno}: {e}")?;
                code = EXIT_DATA;
            }
        }
    }
    Ok(code)
}

pub struct WitnessOptions {
    pub n: usize,
    pub json: bool,
    pub jobs: usize,
    pub trace: bool,
    pub summary: bool,
}

/// One input graph's result.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub line: usize,
    pub result: Result<DriverReport, String>,
    pub millis: f64,
}

/// Totals over a witness run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub graphs: usize,
    pub witnesses: usize,
    pub insufficient: usize,
    pub nonprime: usize,
    pub errors: usize,
}

impl RunReport {
    pub fn from_records(records: &[RunRecord]) -> Self {
        let mut r = RunReport {
            graphs: records.len(),
            ..RunReport::default()
        };
        for rec in records {
            match &rec.result {
                Ok(rep) => match rep.outcome {
                    Outcome::Found(_) => r.witnesses += 1,
                    Outcome::Insufficient(_) => r.insufficient += 1,
                    Outcome::NonPrime(_) => r.nonprime += 1,
                },
                Err(_) => r.errors += 1,
            }
        }
        r
    }
}

fn process_line(lineno: usize, line: &str, n: usize) -> RunRecord {
    let start = Instant::now();
    let result = parse_graph6(line)
        .map_err(|e| e.to_string())
        .and_then(|g| unavoidable_witness(&g, n).map_err(|e| e.to_string()));
    RunRecord {
        line: lineno,
        result,
        millis: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// The JSON object printed for one outcome.
pub fn outcome_json(outcome: &Outcome) -> serde_json::Value {
    match outcome {
        Outcome::Found(w) => serde_json::to_value(w).expect("witness serializes"),
        Outcome::Insufficient(e) => serde_json::to_value(e).expect("plain struct"),
        Outcome::NonPrime(set) => json!({ "nonprime": set.to_vec() }),
    }
}

fn outcome_text(outcome: &Outcome) -> String {
    match outcome {
        Outcome::Found(w) => {
            let emb: Vec<String> = w.embedding.iter().map(ToString::to_string).collect();
            format!("{} {} {}", w.family, emb.join(","), w.provenance)
        }
        Outcome::Insufficient(e) => format!("insufficient {}: needs {}, had {}", e.stage, e.needed, e.had),
        Outcome::NonPrime(set) => format!("homogeneous {set}"),
    }
}

fn trace_json(trace: &[StageNote], millis: f64) -> (serde_json::Value, serde_json::Value) {
    (serde_json::to_value(trace).expect("plain struct"), json!(millis))
}

pub fn cmd_witness(opts: &WitnessOptions, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let lines = read_lines(input)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(std::io::Error::other)?;
    let records: Vec<RunRecord> = pool.install(|| {
        lines
            .par_iter()
            .map(|(lineno, line)| process_line(*lineno, line, opts.n))
            .collect()
    });
    let mut code = EXIT_OK;
    for rec in &records {
        match &rec.result {
            Ok(rep) => {
                if opts.json {
                    let mut v = outcome_json(&rep.outcome);
                    if opts.trace {
                        let (t, ms) = trace_json(&rep.trace, rec.millis);
                        v["trace"] = t;
                        v["millis"] = ms;
                    }
                    writeln!(out, "{v}")?;
                } else {
                    writeln!(out, "{}", outcome_text(&rep.outcome))?;
                }
            }
            Err(e) => {
                writeln!(err, "line {}: {e}", rec.line)?;
                code = EXIT_DATA;
            }
        }
    }
    if opts.summary {
        let r = RunReport::from_records(&records);
        writeln!(
            err,
            "graphs {}, witnesses {}, insufficient {}, non-prime {}, errors {}",
            r.graphs, r.witnesses, r.insufficient, r.nonprime, r.errors
        )?;
    }
    Ok(code)
}

fn print_verify(report: &VerifyReport, k: usize, out: &mut dyn Write) -> std::io::Result<()> {
    for c in &report.primality {
        writeln!(
            out,
            "primality {} vertices: {} graphs, {} prime, {} disagreements",
            c.vertices, c.graphs, c.prime, c.disagreements
        )?;
    }
    let s = &report.chains;
    writeln!(
        out,
        "chains up to {} vertices: {} graphs, {} queries, {} chains, {} disagreements",
        k.min(crate::verify::MAX_CHAIN_SWEEP_VERTICES),
        s.graphs,
        s.queries,
        s.chains_found,
        s.disagreements
    )?;
    let present = report.containment.iter().filter(|c| c.present).count();
    let split = report.containment.iter().filter(|c| !c.agree).count();
    writeln!(
        out,
        "containment: {} cells, {present} present, {split} strategy disagreements",
        report.containment.len()
    )?;
    for c in report.containment.iter().filter(|c| c.present) {
        writeln!(out, "  {} contains {}", c.host, c.pattern)?;
    }
    writeln!(out, "total disagreements: {}", report.disagreements())
}

fn cmd_verify(k: usize, samples: u64, seed: u64, json: bool, out: &mut dyn Write) -> std::io::Result<i32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let report = verify(k, samples, &mut rng);
    if json {
        writeln!(out, "{}", serde_json::to_string(&report).expect("plain struct"))?;
    } else {
        print_verify(&report, k, out)?;
    }
    Ok(if report.disagreements() == 0 { EXIT_OK } else { EXIT_DATA })
}
