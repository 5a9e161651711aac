//! Subcommands as plain functions returning their output and exit code.
//!
//! Exit codes: 0 success, 1 input is not BDH, 2 malformed or unusable
//! input, 3 brute-force size guard exceeded.

use std::hint::black_box;
use std::time::{Duration, Instant};

use bdh_core::{
    apply_sequence, compute_bdh_diagram, extract_pruning_sequence, fast_compute_bdh_diagram,
    generate_random_bdh, oracle, BipartiteGraph, ConstructionSequence, GraphError, LatticeError,
    OracleError, RecognitionError, RecognitionResult, VertexId,
};
use thiserror::Error;

use crate::dot;
use crate::formats::{parse_input, write_edge_list, write_sequence, Input, ParseError};
use crate::json::{compact_json, explicit_json, oracle_json, LatticeJson};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            ..Output::default()
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Recognition(#[from] RecognitionError),
    #[error("{0}")]
    Lattice(#[from] LatticeError),
    #[error("{0}")]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Oracle(_) => 3,
            _ => 2,
        }
    }
}

/// Runs a command and folds errors into an `Output`.
pub fn finish(result: Result<Output, CliError>) -> Output {
    result.unwrap_or_else(|e| Output {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: e.exit_code(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Emit {
    Edges,
    #[default]
    Sequence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algo {
    #[default]
    Explicit,
    Compact,
}

fn rejected(remaining: &[VertexId]) -> Output {
    let names: Vec<String> = remaining.iter().map(|v| v.one_based().to_string()).collect();
    Output {
        stdout: format!(
            "not BDH: no pending vertex or twin pair in the induced subgraph on {} vertices: {}\n",
            remaining.len(),
            names.join(" ")
        ),
        stderr: String::new(),
        code: 1,
    }
}

fn graph_of(input: &Input) -> Result<BipartiteGraph, CliError> {
    Ok(match input {
        Input::Edges(g) => g.clone(),
        Input::Sequence(s) => apply_sequence(s)?,
    })
}

pub fn recognize(text: &str) -> Result<Output, CliError> {
    let g = graph_of(&parse_input(text)?)?;
    match extract_pruning_sequence(&g)? {
        RecognitionResult::Rejected { remaining } => Ok(rejected(&remaining)),
        RecognitionResult::Accepted(r) => {
            let mut stderr = String::from("# sequence vertex, input vertex\n");
            for (i, v) in r.relabel.iter().enumerate() {
                stderr.push_str(&format!("{} {}\n", i + 1, v.one_based()));
            }
            Ok(Output {
                stdout: write_sequence(&r.sequence),
                stderr,
                code: 0,
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LatticeOptions {
    pub compact: bool,
    pub format: Format,
    pub with_top_bottom: bool,
}

/// A sequence plus the input names of its vertices.
enum Prepared {
    Ready {
        seq: ConstructionSequence,
        names: Option<Vec<VertexId>>,
        m: usize,
    },
    NotBdh(Output),
}

fn prepare(text: &str) -> Result<Prepared, CliError> {
    match parse_input(text)? {
        Input::Sequence(seq) => {
            let m = apply_sequence(&seq)?.m();
            Ok(Prepared::Ready { seq, names: None, m })
        }
        Input::Edges(g) => match extract_pruning_sequence(&g)? {
            RecognitionResult::Rejected { remaining } => Ok(Prepared::NotBdh(rejected(&remaining))),
            RecognitionResult::Accepted(r) => Ok(Prepared::Ready {
                seq: r.sequence,
                names: Some(r.relabel),
                m: g.m(),
            }),
        },
    }
}

pub fn lattice_json(text: &str, opts: LatticeOptions) -> Result<Result<LatticeJson, Output>, CliError> {
    let (seq, names, m) = match prepare(text)? {
        Prepared::NotBdh(out) => return Ok(Err(out)),
        Prepared::Ready { seq, names, m } => (seq, names, m),
    };
    let label = |v: VertexId| names.as_ref().map_or(v, |n| n[v.index()]);
    let doc = if opts.compact {
        compact_json(&fast_compute_bdh_diagram(&seq)?, m, &label, opts.with_top_bottom)
    } else {
        explicit_json(&compute_bdh_diagram(&seq)?, m, &label, opts.with_top_bottom)
    };
    Ok(Ok(doc))
}

fn render(doc: &LatticeJson, format: Format) -> String {
    match format {
        Format::Json => doc.to_pretty(),
        Format::Dot => dot::render(doc),
    }
}

pub fn lattice(text: &str, opts: LatticeOptions) -> Result<Output, CliError> {
    Ok(match lattice_json(text, opts)? {
        Ok(doc) => Output::ok(render(&doc, opts.format)),
        Err(not_bdh) => not_bdh,
    })
}

pub fn oracle(text: &str, format: Format) -> Result<Output, CliError> {
    let g = graph_of(&parse_input(text)?)?;
    let bs = oracle::enumerate_maximal_bicliques_bruteforce(&g)?;
    Ok(Output::ok(render(&oracle_json(&g, &bs), format)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenOptions {
    pub vertices: usize,
    pub twin_prob: f64,
    pub seed: u64,
    pub emit: Emit,
}

pub fn gen(opts: GenOptions) -> Result<Output, CliError> {
    let seq = generate_random_bdh(opts.vertices, opts.twin_prob, opts.seed)?;
    Ok(Output::ok(match opts.emit {
        Emit::Sequence => write_sequence(&seq),
        Emit::Edges => write_edge_list(&apply_sequence(&seq)?),
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchRow {
    pub size: usize,
    pub edges: usize,
    pub bicliques: usize,
    pub nanos: u128,
}

/// Best of `reps` construction times, excluding generation.
pub fn time_construction(seq: &ConstructionSequence, algo: Algo, reps: usize) -> Result<(Duration, usize), CliError> {
    let mut best = Duration::MAX;
    let mut count = 0;
    for _ in 0..reps.max(1) {
        // the result is dropped after the clock stops
        let start = Instant::now();
        match algo {
            Algo::Explicit => {
                let d = black_box(compute_bdh_diagram(seq)?);
                best = best.min(start.elapsed());
                count = d.len();
            }
            Algo::Compact => {
                let d = black_box(fast_compute_bdh_diagram(seq)?);
                best = best.min(start.elapsed());
                count = d.len();
            }
        }
    }
    Ok((best, count))
}

pub fn run_bench(sizes: &[usize], twin_prob: f64, seed: u64, algo: Algo) -> Result<Vec<BenchRow>, CliError> {
    if sizes.is_empty() {
        return Err(CliError::Usage("no sizes given".into()));
    }
    sizes
        .iter()
        .map(|&size| {
            let seq = generate_random_bdh(size, twin_prob, seed)?;
            let edges = apply_sequence(&seq)?.m();
            let (t, bicliques) = time_construction(&seq, algo, 3)?;
            Ok(BenchRow {
                size,
                edges,
                bicliques,
                nanos: t.as_nanos(),
            })
        })
        .collect()
}

pub fn bench(sizes: &[usize], twin_prob: f64, seed: u64, algo: Algo) -> Result<Output, CliError> {
    let mut out = String::from("size,edges,bicliques,nanos\n");
    for r in run_bench(sizes, twin_prob, seed, algo)? {
        out.push_str(&format!("{},{},{},{}\n", r.size, r.edges, r.bicliques, r.nanos));
    }
    Ok(Output::ok(out))
}
