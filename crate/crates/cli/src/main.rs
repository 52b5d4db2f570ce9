//! `hrank`: rank, bounds, isometry, subspace, and density analysis for
//! point sets in Hamming space, over a plain text file format.
//!
//! Exit codes: 0 on success, 1 when `dense-check --strict` fails to
//! establish density, 2 on input or usage errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hamming_rank::{
    bounds_report, count_faces, is_isometric, is_metrically_dense, is_uniform_columns, make_field,
    min_embedding_dimension, parse_generator_matrix, parse_point_set, point_set_to_string,
    random_subspace, GeneratorMatrix, PointSet, SearchConfig, Verdict,
};

#[derive(Parser)]
#[command(
    name = "hrank",
    version,
    about = "Rank, distance-sum bounds, and metric density analysis for point sets in Hamming space"
)]
struct Cli {
    /// Output style for analysis subcommands
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Table)]
    output: OutputMode,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, distance sum, and per-column histograms of a point set
    Rank { file: PathBuf },
    /// Exact rational rank bounds with tightness and density-certificate flags
    Bounds { file: PathBuf },
    /// Search for a distance-preserving bijection between two point sets
    Isometric { file_a: PathBuf, file_b: PathBuf },
    /// Least dimension realizing the point set's distance matrix
    MinEmbed {
        file: PathBuf,
        /// Alphabet size to embed into (default: the file's q)
        #[arg(long)]
        q: Option<u32>,
        /// Search node budget
        #[arg(long)]
        budget: Option<u64>,
        /// Largest dimension to try
        #[arg(long = "max-dim")]
        max_dim: Option<usize>,
    },
    /// Decide whether a point set is metrically dense
    DenseCheck {
        file: PathBuf,
        /// Search node budget
        #[arg(long)]
        budget: Option<u64>,
        /// Exit with code 1 unless the verdict is dense
        #[arg(long)]
        strict: bool,
    },
    /// Emit the span of a generator matrix as a point-set file
    #[command(group(ArgGroup::new("source").required(true).args(["seed", "generators"])))]
    GenSubspace {
        /// Alphabet size (prime power); required with --seed
        #[arg(long)]
        q: Option<u32>,
        /// Word length; required with --seed
        #[arg(long)]
        n: Option<usize>,
        /// Subspace dimension; required with --seed
        #[arg(long)]
        k: Option<usize>,
        /// Sample a random subspace deterministically from this seed
        #[arg(long)]
        seed: Option<u64>,
        /// Read generator rows from a file instead of sampling
        #[arg(long)]
        generators: Option<PathBuf>,
        /// Output file (default: stdout)
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Count the k-dimensional faces of E_q^n
    Faces {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u32,
    },
    /// Check the uniform-column-distribution property
    UniformCheck { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn load_point_set(path: &Path) -> Result<PointSet> {
    let text = fs::read_to_string(path).with_context(|| format!("{}", path.display()))?;
    parse_point_set(&text).with_context(|| format!("{}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mode = cli.output;
    match cli.command {
        Command::Rank { file } => {
            let s = load_point_set(&file)?;
            print_rank(&s, mode);
        }
        Command::Bounds { file } => {
            let s = load_point_set(&file)?;
            let report = bounds_report(&s)?;
            match mode {
                OutputMode::Json => print_json(&report),
                OutputMode::Table => {
                    println!("m: {}", report.m);
                    println!("q: {}", report.q);
                    println!("distance_sum: {}", report.distance_sum);
                    println!("rank: {}", report.rank);
                    println!("lower: {}", report.lower);
                    println!("upper: {}", report.upper);
                    println!("lower_ceiling: {}", report.lower_ceiling);
                    println!("upper_floor: {}", report.upper_floor);
                    println!("lower_case: {}", report.lower_case);
                    println!("lower_tight: {}", report.lower_tight);
                    println!("upper_tight: {}", report.upper_tight);
                    println!("density_certified: {}", report.density_certified);
                }
            }
        }
        Command::Isometric { file_a, file_b } => {
            let a = load_point_set(&file_a)?;
            let b = load_point_set(&file_b)?;
            let witness = is_isometric(&a, &b);
            let report = IsometryReport {
                isometric: witness.is_some(),
                witness: witness.map(|w| w.mapping().to_vec()),
            };
            match mode {
                OutputMode::Json => print_json(&report),
                OutputMode::Table => {
                    println!("isometric: {}", report.isometric);
                    if let Some(w) = &report.witness {
                        println!("witness: {}", join(w));
                    }
                }
            }
        }
        Command::MinEmbed {
            file,
            q,
            budget,
            max_dim,
        } => {
            let s = load_point_set(&file)?;
            let q = q.unwrap_or_else(|| s.q());
            let cfg = SearchConfig {
                node_budget: budget.unwrap_or(SearchConfig::default().node_budget),
                max_dimension: max_dim,
            };
            let result = min_embedding_dimension(&s.distance_matrix(), q, &cfg)?;
            match mode {
                OutputMode::Json => print_json(&result),
                OutputMode::Table => {
                    println!("status: {}", json_token(&result.status));
                    println!("min_dimension: {}", result.min_dimension);
                    println!("nodes_explored: {}", result.nodes_explored);
                    if let Some(real) = &result.realization {
                        println!("realization:");
                        for row in real.rows() {
                            println!("{row}");
                        }
                    }
                }
            }
        }
        Command::DenseCheck {
            file,
            budget,
            strict,
        } => {
            let s = load_point_set(&file)?;
            let cfg = match budget {
                Some(b) => SearchConfig::with_budget(b),
                None => SearchConfig::default(),
            };
            let verdict = is_metrically_dense(&s, &cfg)?;
            match mode {
                OutputMode::Json => print_json(&verdict),
                OutputMode::Table => {
                    println!("verdict: {}", json_token(&verdict.verdict));
                    match &verdict.certified_by {
                        Some(c) => println!("certified_by: {}", json_token(c)),
                        None => println!("certified_by: none"),
                    }
                    if let Some(w) = &verdict.witness {
                        println!("witness:");
                        for row in w.rows() {
                            println!("{row}");
                        }
                    }
                }
            }
            if strict && verdict.verdict != Verdict::Dense {
                return Ok(ExitCode::from(1));
            }
        }
        Command::GenSubspace {
            q,
            n,
            k,
            seed,
            generators,
            out,
        } => {
            let matrix = resolve_generators(q, n, k, seed, generators.as_deref())?;
            let text = point_set_to_string(&matrix.span());
            match out {
                Some(path) => {
                    fs::write(&path, text).with_context(|| format!("{}", path.display()))?
                }
                None => print!("{text}"),
            }
        }
        Command::Faces { n, k, q } => {
            let count = count_faces(n, k, q)?;
            match mode {
                OutputMode::Json => print_json(&FacesReport {
                    n,
                    k,
                    q,
                    count: count.to_string(),
                }),
                OutputMode::Table => {
                    println!("n: {n}");
                    println!("k: {k}");
                    println!("q: {q}");
                    println!("count: {count}");
                }
            }
        }
        Command::UniformCheck { file } => {
            let s = load_point_set(&file)?;
            print_uniform(&s, mode);
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct IsometryReport {
    isometric: bool,
    witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct FacesReport {
    n: usize,
    k: usize,
    q: u32,
    count: String,
}

#[derive(Serialize)]
struct ColumnDetail {
    index: usize,
    counts: Vec<u64>,
    contribution: u64,
    constant: bool,
}

#[derive(Serialize)]
struct RankReport {
    m: usize,
    q: u32,
    n: usize,
    rank: usize,
    /// Absent for a single point, where no pair exists.
    distance_sum: Option<u64>,
    columns: Vec<ColumnDetail>,
}

fn print_rank(s: &PointSet, mode: OutputMode) {
    let columns: Vec<ColumnDetail> = (0..s.n())
        .map(|j| {
            let h = s.column_histogram(j).expect("index in range");
            ColumnDetail {
                index: j,
                constant: h.is_constant(),
                contribution: h.contribution(),
                counts: h.counts().to_vec(),
            }
        })
        .collect();
    let report = RankReport {
        m: s.len(),
        q: s.q(),
        n: s.n(),
        rank: s.rank(),
        distance_sum: s.distance_sum().ok(),
        columns,
    };
    match mode {
        OutputMode::Json => print_json(&report),
        OutputMode::Table => {
            println!("m: {}", report.m);
            println!("q: {}", report.q);
            println!("n: {}", report.n);
            println!("rank: {}", report.rank);
            match report.distance_sum {
                Some(d) => println!("distance_sum: {d}"),
                None => println!("distance_sum: n/a (single point)"),
            }
            let rows = report
                .columns
                .iter()
                .map(|c| {
                    vec![
                        c.index.to_string(),
                        join(&c.counts),
                        c.contribution.to_string(),
                        if c.constant { "yes" } else { "no" }.to_string(),
                    ]
                })
                .collect();
            print!(
                "{}",
                render_table(&["column", "counts", "contribution", "constant"], rows)
            );
        }
    }
}

#[derive(Serialize)]
struct UniformColumnDetail {
    index: usize,
    counts: Vec<u64>,
    constant: bool,
    /// None for constant columns, which the definition exempts.
    uniform: Option<bool>,
}

#[derive(Serialize)]
struct UniformReport {
    m: usize,
    q: u32,
    uniform: bool,
    columns: Vec<UniformColumnDetail>,
}

fn print_uniform(s: &PointSet, mode: OutputMode) {
    let m = s.len() as u64;
    let q = s.q() as u64;
    let share = m.is_multiple_of(q).then(|| m / q);
    let columns: Vec<UniformColumnDetail> = (0..s.n())
        .map(|j| {
            let h = s.column_histogram(j).expect("index in range");
            let constant = h.is_constant();
            let uniform =
                (!constant).then(|| share.is_some_and(|t| h.counts().iter().all(|&y| y == t)));
            UniformColumnDetail {
                index: j,
                counts: h.counts().to_vec(),
                constant,
                uniform,
            }
        })
        .collect();
    let report = UniformReport {
        m: s.len(),
        q: s.q(),
        uniform: is_uniform_columns(s),
        columns,
    };
    match mode {
        OutputMode::Json => print_json(&report),
        OutputMode::Table => {
            println!("m: {}", report.m);
            println!("q: {}", report.q);
            println!("uniform: {}", report.uniform);
            let rows = report
                .columns
                .iter()
                .map(|c| {
                    vec![
                        c.index.to_string(),
                        join(&c.counts),
                        if c.constant { "yes" } else { "no" }.to_string(),
                        match c.uniform {
                            None => "-".to_string(),
                            Some(true) => "yes".to_string(),
                            Some(false) => "no".to_string(),
                        },
                    ]
                })
                .collect();
            print!(
                "{}",
                render_table(&["column", "counts", "constant", "uniform"], rows)
            );
        }
    }
}

fn resolve_generators(
    q: Option<u32>,
    n: Option<usize>,
    k: Option<usize>,
    seed: Option<u64>,
    generators: Option<&Path>,
) -> Result<GeneratorMatrix> {
    if let Some(path) = generators {
        let text = fs::read_to_string(path).with_context(|| format!("{}", path.display()))?;
        let matrix =
            parse_generator_matrix(&text).with_context(|| format!("{}", path.display()))?;
        if let Some(q) = q {
            if q != matrix.field().q() {
                bail!(
                    "--q {q} does not match the file's alphabet size {}",
                    matrix.field().q()
                );
            }
        }
        if let Some(n) = n {
            if n != matrix.n() {
                bail!(
                    "--n {n} does not match the file's word length {}",
                    matrix.n()
                );
            }
        }
        if let Some(k) = k {
            if k != matrix.k() {
                bail!(
                    "--k {k} does not match the file's {} generator rows",
                    matrix.k()
                );
            }
        }
        Ok(matrix)
    } else {
        let seed = seed.expect("clap guarantees one source");
        let (Some(q), Some(n), Some(k)) = (q, n, k) else {
            bail!("--q, --n, and --k are required with --seed");
        };
        let field = make_field(q)?;
        Ok(random_subspace(n, k, &field, seed)?)
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize to JSON")
    );
}

/// The serde name of a unit enum variant, reused so table and JSON modes
/// can never disagree on spelling.
fn json_token<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value).expect("tokens serialize") {
        serde_json::Value::String(s) => s,
        other => other.to_string(),
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_table(headers: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let render_row = |out: &mut String, cells: &[String]| {
        for (i, cell) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                let _ = write!(out, "{cell}");
            } else {
                let _ = write!(out, "{:<width$}  ", cell, width = widths[i]);
            }
        }
        let _ = writeln!(out);
    };
    render_row(
        &mut out,
        &headers.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
    );
    for row in &rows {
        render_row(&mut out, row);
    }
    out
}
