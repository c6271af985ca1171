//! `walkmat` command line tool.
//!
//! Subcommands cover matrix generation (`gen`), Smith normal form of a JSON
//! matrix (`snf`), the walk-matrix verification pipeline (`verify`), the
//! triple walk-count cross-check (`oracle`), and closed-form eigenpair
//! reports (`spectral`). Machine output is newline-delimited JSON; `--pretty`
//! switches verify/spectral to aligned tables.
//!
//! Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
//! input error.

mod report;

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use walkmat::graph::{divisor_matrix_b1, divisor_matrix_b2, path_graph, Graph};
use walkmat::smith::invariant_factors;
use walkmat::spectral::{spectral_record, QuotientFamily, SpectralRecord};
use walkmat::walk::{
    truncated_walk_matrix, walk_count_dp, walk_count_enumerate, walk_matrix,
    DEFAULT_ENUMERATION_CAP,
};
use walkmat::IntegerMatrix;

use report::{verification_report, VerificationReport};

#[derive(Parser)]
#[command(name = "walkmat", version, about = "Walk matrices of path graphs: generation, Smith normal forms, and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a matrix as JSON
    Gen {
        /// Which matrix to produce
        #[arg(value_enum)]
        kind: GenKind,
        /// Number of path vertices (walk, truncated, adjacency)
        #[arg(long)]
        n: Option<usize>,
        /// Quotient order (b1, b2)
        #[arg(long)]
        r: Option<usize>,
        /// Graph JSON file instead of --n (walk, adjacency)
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Output path; standard output when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smith normal form of a matrix JSON file ("-" reads standard input)
    Snf {
        /// Matrix JSON path or "-"
        input: String,
    },
    /// Verify the all-ones Smith form of path walk matrices over a range of sizes
    Verify {
        /// First path size
        #[arg(long)]
        n_from: usize,
        /// Last path size
        #[arg(long)]
        n_to: usize,
        /// Worker threads for the range (default: sequential)
        #[arg(long)]
        jobs: Option<usize>,
        /// Render an aligned table instead of JSON lines
        #[arg(long)]
        pretty: bool,
    },
    /// Cross-check walk counts: enumeration vs recurrence vs matrix entries
    Oracle {
        /// Largest path size
        n_max: usize,
        /// Largest walk-matrix column (1-based)
        j_max: usize,
    },
    /// Closed-form eigenpair reports for both quotient families
    Spectral {
        /// Largest quotient order
        r_max: usize,
        /// Render an aligned table instead of JSON lines
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// Walk matrix of a graph
    Walk,
    /// Truncated walk matrix of a path
    Truncated,
    /// Adjacency matrix of a graph
    Adjacency,
    /// Even-path quotient matrix
    B1,
    /// Odd-path quotient matrix
    B2,
}

#[derive(Serialize)]
struct SnfOutput {
    rank: usize,
    invariant_factors: Vec<String>,
}

#[derive(Serialize)]
struct OracleRecord {
    n: usize,
    entries_checked: usize,
    agree: bool,
    mismatches: Vec<OracleMismatch>,
}

#[derive(Serialize)]
struct OracleMismatch {
    start: usize,
    column: usize,
    enumeration: String,
    recurrence: String,
    /// Absent when the column exceeds the matrix width.
    matrix: Option<String>,
}

type CliError = Box<dyn std::error::Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        // The consumer hung up (e.g. piped into head); not an error.
        Err(err) if is_broken_pipe(&err) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(err: &CliError) -> bool {
    err.downcast_ref::<std::io::Error>()
        .is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe)
}

/// Print one output line, surfacing write failures instead of panicking.
fn emit(line: &str) -> std::io::Result<()> {
    emit_raw(line.as_bytes()).and_then(|()| emit_raw(b"\n"))
}

fn emit_raw(bytes: &[u8]) -> std::io::Result<()> {
    use std::io::Write as _;
    std::io::stdout().lock().write_all(bytes)
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Gen {
            kind,
            n,
            r,
            graph,
            out,
        } => cmd_gen(kind, n, r, graph, out),
        Command::Snf { input } => cmd_snf(&input),
        Command::Verify {
            n_from,
            n_to,
            jobs,
            pretty,
        } => cmd_verify(n_from, n_to, jobs, pretty),
        Command::Oracle { n_max, j_max } => cmd_oracle(n_max, j_max),
        Command::Spectral { r_max, pretty } => cmd_spectral(r_max, pretty),
    }
}

fn cmd_gen(
    kind: GenKind,
    n: Option<usize>,
    r: Option<usize>,
    graph: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<ExitCode, CliError> {
    let matrix = match kind {
        GenKind::Walk => walk_matrix(&gen_adjacency(n, graph)?)?,
        GenKind::Adjacency => gen_adjacency(n, graph)?,
        GenKind::Truncated => {
            if graph.is_some() {
                return Err("gen truncated takes --n, not --graph".into());
            }
            truncated_walk_matrix(n.ok_or("gen truncated requires --n")?)?
        }
        GenKind::B1 | GenKind::B2 => {
            if n.is_some() || graph.is_some() {
                return Err("gen b1/b2 take --r, not --n or --graph".into());
            }
            let r = r.ok_or("gen b1/b2 require --r")?;
            match kind {
                GenKind::B1 => divisor_matrix_b1(r)?,
                _ => divisor_matrix_b2(r)?,
            }
        }
    };
    let text = serde_json::to_string(&matrix)?;
    match out {
        Some(path) => fs::write(&path, text + "\n")
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => emit(&text)?,
    }
    Ok(ExitCode::SUCCESS)
}

/// Resolve the graph argument of `gen walk` / `gen adjacency`: exactly one of
/// a path size or a graph JSON file.
fn gen_adjacency(n: Option<usize>, graph: Option<PathBuf>) -> Result<IntegerMatrix, CliError> {
    let g = match (n, graph) {
        (Some(n), None) => path_graph(n)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            serde_json::from_str::<Graph>(&text)
                .map_err(|e| format!("{}: {e}", path.display()))?
        }
        (Some(_), Some(_)) => return Err("--n and --graph are mutually exclusive".into()),
        (None, None) => return Err("gen walk/adjacency require --n or --graph".into()),
    };
    Ok(g.adjacency_matrix())
}

fn cmd_snf(input: &str) -> Result<ExitCode, CliError> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(input).map_err(|e| format!("cannot read {input}: {e}"))?
    };
    let matrix: IntegerMatrix = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let snf = invariant_factors(&matrix);
    let output = SnfOutput {
        rank: snf.rank,
        invariant_factors: snf
            .invariant_factors
            .iter()
            .map(ToString::to_string)
            .collect(),
    };
    emit(&serde_json::to_string(&output)?)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    n_from: usize,
    n_to: usize,
    jobs: Option<usize>,
    pretty: bool,
) -> Result<ExitCode, CliError> {
    if n_from < 1 || n_from > n_to {
        return Err("range must satisfy 1 <= --n-from <= --n-to".into());
    }
    let sizes: Vec<usize> = (n_from..=n_to).collect();
    // Reports are collected in order of n, whatever the completion order.
    let reports: Vec<VerificationReport> = match jobs {
        Some(0) => return Err("--jobs must be at least 1".into()),
        Some(threads) => {
            use rayon::prelude::*;
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| e.to_string())?
                .install(|| {
                    sizes
                        .par_iter()
                        .map(|&n| verification_report(n))
                        .collect::<walkmat::Result<_>>()
                })?
        }
        None => sizes
            .iter()
            .map(|&n| verification_report(n))
            .collect::<walkmat::Result<_>>()?,
    };

    if pretty {
        emit_raw(render_verify_table(&reports).as_bytes())?;
    } else {
        for report in &reports {
            emit(&serde_json::to_string(report)?)?;
        }
    }
    Ok(exit_for(reports.iter().all(VerificationReport::all_pass)))
}

fn cmd_oracle(n_max: usize, j_max: usize) -> Result<ExitCode, CliError> {
    if n_max < 1 || j_max < 1 {
        return Err("oracle requires n_max >= 1 and j_max >= 1".into());
    }
    if j_max - 1 > DEFAULT_ENUMERATION_CAP {
        return Err(format!(
            "j_max {j_max} exceeds the enumeration cap (j - 1 <= {DEFAULT_ENUMERATION_CAP})"
        )
        .into());
    }

    let mut all_agree = true;
    for n in 1..=n_max {
        let w = walk_matrix(&path_graph(n)?.adjacency_matrix())?;
        let mut entries_checked = 0;
        let mut mismatches = Vec::new();
        for start in 1..=n {
            for column in 1..=j_max {
                let by_enumeration = walk_count_enumerate(n, start, column)?;
                let by_recurrence = walk_count_dp(n, start, column)?;
                let by_matrix =
                    (column <= n).then(|| w.get(start - 1, column - 1).clone());
                entries_checked += 1;
                let matrix_agrees = by_matrix
                    .as_ref()
                    .is_none_or(|value| *value == by_enumeration);
                if by_enumeration != by_recurrence || !matrix_agrees {
                    mismatches.push(OracleMismatch {
                        start,
                        column,
                        enumeration: by_enumeration.to_string(),
                        recurrence: by_recurrence.to_string(),
                        matrix: by_matrix.map(|v| v.to_string()),
                    });
                }
            }
        }
        let agree = mismatches.is_empty();
        all_agree &= agree;
        let record = OracleRecord {
            n,
            entries_checked,
            agree,
            mismatches,
        };
        emit(&serde_json::to_string(&record)?)?;
    }
    Ok(exit_for(all_agree))
}

fn cmd_spectral(r_max: usize, pretty: bool) -> Result<ExitCode, CliError> {
    if r_max < 1 {
        return Err("spectral requires r_max >= 1".into());
    }
    let mut records = Vec::with_capacity(2 * r_max);
    for r in 1..=r_max {
        for family in [QuotientFamily::B1, QuotientFamily::B2] {
            records.push(spectral_record(r, family)?);
        }
    }
    let ok = records.iter().all(SpectralRecord::within_tolerances);
    if pretty {
        emit_raw(render_spectral_table(&records).as_bytes())?;
    } else {
        for record in &records {
            emit(&serde_json::to_string(record)?)?;
        }
    }
    Ok(exit_for(ok))
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "ok"
    } else {
        "FAIL"
    }
}

fn render_verify_table(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>4}  {:>4}  {:<9}  {:<20}  checks",
        "n", "rank", "theorem", "factors"
    );
    for report in reports {
        let factors = report.invariant_factors.join(",");
        let factors = if factors.len() > 20 {
            format!("{}..", &factors[..18])
        } else {
            factors
        };
        let checks = report
            .checks
            .iter()
            .map(|c| format!("{}={}", c.name, verdict(c.pass)))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(
            out,
            "{:>4}  {:>4}  {:<9}  {:<20}  {}",
            report.n,
            report.rank,
            verdict(report.theorem_holds),
            factors,
            checks
        );
    }
    out
}

fn render_spectral_table(records: &[SpectralRecord]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>4}  {:<6}  {:>12}  {:>10}  {:>4}  {:>14}  {:>9}",
        "r", "family", "max_residual", "product", "sign", "det_formula", "det_exact"
    );
    for record in records {
        let _ = writeln!(
            out,
            "{:>4}  {:<6}  {:>12.3e}  {:>10.6}  {:>4}  {:>14.8}  {:>9}",
            record.r,
            match record.family {
                QuotientFamily::B1 => "B1",
                QuotientFamily::B2 => "B2",
            },
            record.max_residual,
            record.product,
            record.expected_sign,
            record.det_formula,
            record.det_exact
        );
    }
    out
}
