// zxopt - quantum circuit optimisation with the ZX-calculus
// Copyright (C) 2026 The zxopt developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! `zxopt`: optimise, draw, compare and benchmark quantum circuits.
//!
//! Exit codes: 0 success (or "equal"), 1 inconclusive or unequal, 2 bad
//! input or I/O failure, 3 extraction stuck.

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;
use zxopt::generate::random_clifford;
use zxopt::io::{emit_qasm, emit_tikz, load_as, SourceFormat};
use zxopt::sim::circuit_unitary;
use zxopt::simplify::{clifford_simp, full_reduce, teleport_reduce, SimplifyError};
use zxopt::{compare_tensors, streaming_extract, verify_equality, Circuit, Diagram, Equality, ExtractError};

#[derive(Parser, Debug)]
#[command(name = "zxopt", version, about = "Quantum circuit optimisation with the ZX-calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Rewrite strategy. `opt` defaults to teleport.
    #[arg(long, global = true, value_enum)]
    strategy: Option<Strategy>,
    /// Input format, overriding detection (qasm, qc, tfc, quipper).
    #[arg(long, global = true)]
    format: Option<SourceFormat>,
    /// Output file (a directory when `opt` gets several inputs).
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 9)]
    qubits: usize,
    #[arg(long, global = true, default_value_t = 1000)]
    gates: usize,
    /// `verify`: also compare unitaries directly (at most 10 qubits).
    #[arg(long, global = true)]
    tensor: bool,
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Optimise circuits and write them as QASM.
    Opt {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Draw a circuit's ZX-diagram as a standalone TikZ document.
    Tikz { input: PathBuf },
    /// Check two circuits for equality.
    Verify { first: PathBuf, second: PathBuf },
    /// Print gate statistics.
    Stats {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Time Clifford simplification on random circuits of growing size.
    Bench,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Full,
    Clifford,
    Teleport,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn input(msg: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            msg: msg.into(),
        }
    }
}

impl From<SimplifyError> for Failure {
    fn from(e: SimplifyError) -> Failure {
        Failure::input(e.to_string())
    }
}

impl From<ExtractError> for Failure {
    fn from(e: ExtractError) -> Failure {
        match e {
            ExtractError::Stuck { .. } => Failure {
                code: 3,
                msg: e.to_string(),
            },
            ExtractError::Shape { .. } => Failure::input(e.to_string()),
        }
    }
}

fn read(cli: &Cli, path: &Path) -> Result<Circuit, Failure> {
    load_as(path, cli.format).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Writes via a temporary file in the same directory, so a failed run
/// never leaves a partial file behind.
fn write_atomic(path: &Path, text: &str) -> Result<(), Failure> {
    let fail = |e: std::io::Error| Failure::input(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let name = path
        .file_name()
        .ok_or_else(|| Failure::input(format!("{}: not a file name", path.display())))?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    std::fs::write(&tmp, text).map_err(fail)?;
    std::fs::rename(&tmp, path).map_err(|e| {
        let _ = std::fs::remove_file(&tmp);
        fail(e)
    })
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(p) => write_atomic(p, text),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::input(e.to_string())),
    }
}

fn simplified(d: &mut Diagram, strategy: Strategy) -> Result<(), Failure> {
    match strategy {
        Strategy::Full => full_reduce(d)?,
        Strategy::Clifford => clifford_simp(d)?,
        Strategy::Teleport => unreachable!("teleport works on circuits"),
    };
    Ok(())
}

fn optimise(c: &Circuit, strategy: Strategy) -> Result<Circuit, Failure> {
    // teleport keeps the gate skeleton, so no peephole pass afterwards
    let mut out = match strategy {
        Strategy::Teleport => teleport_reduce(c)?,
        s => {
            let mut d = c
                .to_basic_gates()
                .to_graph()
                .map_err(|e| Failure::input(e.to_string()))?;
            simplified(&mut d, s)?;
            streaming_extract(&d)?.basic_optimize()
        }
    };
    out.name = c.name.clone();
    out.qubit_labels = c.qubit_labels.clone();
    Ok(out)
}

/// Optimises one file; returns the QASM text and a stats report.
fn opt_one(cli: &Cli, path: &Path) -> Result<(String, String), Failure> {
    let strategy = cli.strategy.unwrap_or(Strategy::Teleport);
    let c = read(cli, path)?;
    let start = Instant::now();
    let out = optimise(&c, strategy).map_err(|f| Failure {
        msg: format!("{}: {}", path.display(), f.msg),
        ..f
    })?;
    let mut report = format!(
        "{}\n  before: {}\n  after:  {}\n",
        path.display(),
        c.stats(),
        out.stats()
    );
    if cli.verbose {
        let _ = writeln!(report, "  strategy {strategy:?}, {:.3?}", start.elapsed());
    }
    Ok((emit_qasm(&out), report))
}

fn cmd_opt(cli: &Cli, inputs: &[PathBuf]) -> Result<u8, Failure> {
    let results: Vec<Result<(String, String), Failure>> = inputs.par_iter().map(|p| opt_one(cli, p)).collect();
    if inputs.len() == 1 {
        let (text, report) = results.into_iter().next().unwrap()?;
        eprint!("{report}");
        emit(cli, &text)?;
        return Ok(0);
    }
    let dir = cli
        .output
        .as_ref()
        .ok_or_else(|| Failure::input("several inputs need --output DIR"))?;
    std::fs::create_dir_all(dir).map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?;
    let mut code = 0;
    for (p, r) in inputs.iter().zip(results) {
        match r {
            Ok((text, report)) => {
                eprint!("{report}");
                let stem = p.file_stem().unwrap_or_default().to_string_lossy();
                write_atomic(&dir.join(format!("{stem}.qasm")), &text)?;
            }
            Err(f) => {
                eprintln!("error: {}", f.msg);
                code = code.max(f.code);
            }
        }
    }
    Ok(code)
}

fn cmd_tikz(cli: &Cli, input: &Path) -> Result<u8, Failure> {
    let mut c = read(cli, input)?;
    if cli.strategy == Some(Strategy::Teleport) {
        c = teleport_reduce(&c)?;
    }
    let mut d = c
        .to_basic_gates()
        .to_graph()
        .map_err(|e| Failure::input(e.to_string()))?;
    if let Some(s @ (Strategy::Full | Strategy::Clifford)) = cli.strategy {
        simplified(&mut d, s)?;
        d.normalise();
    }
    if cli.verbose {
        eprintln!("{} vertices, {} edges", d.num_vertices(), d.num_edges());
    }
    emit(cli, &emit_tikz(&d))?;
    Ok(0)
}

const TENSOR_QUBITS: usize = 10;

fn cmd_verify(cli: &Cli, first: &Path, second: &Path) -> Result<u8, Failure> {
    let (a, b) = (read(cli, first)?, read(cli, second)?);
    if a.qubits != b.qubits {
        return Err(Failure::input(format!(
            "qubit counts differ: {} vs {}",
            a.qubits, b.qubits
        )));
    }
    let rewrite = verify_equality(&a, &b)?;
    if cli.verbose {
        eprintln!("rewriting: {rewrite:?}");
    }
    let equal = if cli.tensor {
        if a.qubits > TENSOR_QUBITS {
            return Err(Failure::input(format!(
                "--tensor supports at most {TENSOR_QUBITS} qubits, got {}",
                a.qubits
            )));
        }
        let same = compare_tensors(&circuit_unitary(&a), &circuit_unitary(&b));
        if rewrite == Equality::Equal && !same {
            eprintln!("warning: rewriting and tensor comparison disagree");
        }
        if same {
            println!("equal");
        } else {
            println!("not equal");
        }
        same
    } else {
        let same = rewrite == Equality::Equal;
        println!("{}", if same { "equal" } else { "inconclusive" });
        same
    };
    Ok(if equal { 0 } else { 1 })
}

fn cmd_stats(cli: &Cli, inputs: &[PathBuf]) -> Result<u8, Failure> {
    let rows: Vec<Result<String, Failure>> = inputs
        .par_iter()
        .map(|p| read(cli, p).map(|c| format!("{}: {}", p.display(), c.stats())))
        .collect();
    let mut code = 0;
    for r in rows {
        match r {
            Ok(line) => println!("{line}"),
            Err(f) => {
                eprintln!("error: {}", f.msg);
                code = code.max(f.code);
            }
        }
    }
    Ok(code)
}

/// Five sizes doubling up to `--gates`. The table on standard output has
/// only deterministic columns; wall times go to standard error.
fn cmd_bench(cli: &Cli) -> Result<u8, Failure> {
    let strategy = cli.strategy.unwrap_or(Strategy::Clifford);
    if strategy == Strategy::Teleport {
        return Err(Failure::input("bench supports --strategy clifford or full"));
    }
    let sizes: Vec<usize> = (0..5).rev().map(|k| (cli.gates >> k).max(1)).collect();
    println!("qubits\tgates\tvertices\tfinal_vertices");
    eprintln!("qubits\tgates\tseconds");
    for (i, &g) in sizes.iter().enumerate() {
        let c = random_clifford(cli.qubits, g, cli.seed.wrapping_add(i as u64));
        let mut d = c.to_graph().map_err(|e| Failure::input(e.to_string()))?;
        let before = d.num_vertices();
        let start = Instant::now();
        simplified(&mut d, strategy)?;
        let secs = start.elapsed().as_secs_f64();
        println!("{}\t{g}\t{before}\t{}", cli.qubits, d.num_vertices());
        eprintln!("{}\t{g}\t{secs:.6}", cli.qubits);
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Opt { inputs } => cmd_opt(&cli, inputs),
        Command::Tikz { input } => cmd_tikz(&cli, input),
        Command::Verify { first, second } => cmd_verify(&cli, first, second),
        Command::Stats { inputs } => cmd_stats(&cli, inputs),
        Command::Bench => cmd_bench(&cli),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
