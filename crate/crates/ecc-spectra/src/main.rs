//! Command-line front end: analyze graphs or matrices, verify the full
//! check suite over fixtures and random corpora, and generate corpora.
//!
//! Exit codes: 0 success; 1 verification failure; 2 parse/I/O error;
//! 3 disconnected input.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ecc_spectra::eccmat::IntSymMatrix;
use ecc_spectra::error::Error;
use ecc_spectra::gen::{self, Fixture};
use ecc_spectra::graph::Graph;
use ecc_spectra::report;
use ecc_spectra::spectra::DEFAULT_EIG_TOL;
use ecc_spectra::theorems::{verify_graph, verify_matrix, Analysis, AnalysisOptions};

#[derive(Parser)]
#[command(
    name = "ecc-spectra",
    version,
    about = "Eccentricity-matrix analysis and verification for clique trees"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Edges,
    Matrix,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze graphs (edge-list files) or matrices and emit reports.
    Analyze {
        /// Input format of the files.
        #[arg(long, value_enum, default_value = "edges")]
        format: InputFormat,
        /// Report format.
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
        /// Eigensolver relative tolerance.
        #[arg(long, value_parser = positive_f64)]
        tol: Option<f64>,
        /// Zero-classification tolerance for floating eigenvalues.
        #[arg(long, value_parser = positive_f64)]
        zero_tol: Option<f64>,
        /// Write one report file per input into this directory instead of
        /// stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Input files.
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Run the whole check suite over the built-in fixtures, optional extra
    /// files, and a seeded random corpus.
    Verify {
        /// Number of random instances to generate and check.
        #[arg(long, default_value_t = 100)]
        count: u64,
        /// Base seed for the random corpus.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check only the built-in fixtures.
        #[arg(long)]
        fixtures_only: bool,
        /// Summary format.
        #[arg(long, value_enum, default_value = "csv")]
        output: OutputFormat,
        #[arg(long, value_parser = positive_f64)]
        tol: Option<f64>,
        #[arg(long, value_parser = positive_f64)]
        zero_tol: Option<f64>,
        /// Extra fixture files to include (`.matrix` files parse as
        /// matrices, everything else as edge lists).
        files: Vec<PathBuf>,
    },
    /// Write a deterministic corpus of random clique trees as edge-list
    /// files.
    Generate {
        /// Number of files to write.
        #[arg(long)]
        count: u64,
        /// First seed; files use seeds `seed, seed + 1, ...`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x > 0.0 {
        Ok(x)
    } else {
        Err("tolerance must be positive".into())
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Analyze {
            format,
            output,
            tol,
            zero_tol,
            out,
            files,
        } => cmd_analyze(format, output, options(tol, zero_tol), out.as_deref(), &files),
        Cmd::Verify {
            count,
            seed,
            fixtures_only,
            output,
            tol,
            zero_tol,
            files,
        } => cmd_verify(count, seed, fixtures_only, output, options(tol, zero_tol), &files),
        Cmd::Generate { count, seed, out } => cmd_generate(count, seed, &out),
    }
}

fn options(tol: Option<f64>, zero_tol: Option<f64>) -> AnalysisOptions {
    AnalysisOptions {
        eig_tol: tol.unwrap_or(DEFAULT_EIG_TOL),
        zero_tol,
    }
}

/// `ECC_SPECTRA_THREADS` caps the rayon pool used for batch verification.
fn configure_threads() {
    if let Ok(value) = std::env::var("ECC_SPECTRA_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

enum Input {
    Graph(Graph),
    Matrix(IntSymMatrix),
}

fn load_input(path: &Path, format: InputFormat) -> Result<Input, Error> {
    let text = std::fs::read_to_string(path)?;
    match format {
        InputFormat::Edges => Ok(Input::Graph(Graph::from_edge_list_str(&text)?)),
        InputFormat::Matrix => Ok(Input::Matrix(IntSymMatrix::parse(&text)?)),
    }
}

fn analyze_input(id: &str, input: &Input, opts: &AnalysisOptions) -> Result<Analysis, Error> {
    match input {
        Input::Graph(g) => verify_graph(id, g, opts),
        Input::Matrix(m) => verify_matrix(id, m, opts),
    }
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::GraphDisconnected => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn render(a: &Analysis, output: OutputFormat) -> String {
    match output {
        OutputFormat::Json => report::to_json(a).to_string(),
        OutputFormat::Csv => report::to_csv_row(a),
        OutputFormat::Text => report::to_text(a),
    }
}

/// Writes through a temp file in the target directory, then renames, so a
/// failure never leaves a partial file behind.
fn write_atomic(path: &Path, content: &str) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(content.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn cmd_analyze(
    format: InputFormat,
    output: OutputFormat,
    opts: AnalysisOptions,
    out_dir: Option<&Path>,
    files: &[PathBuf],
) -> ExitCode {
    // Load and analyze everything before emitting anything, so errors never
    // leave partial output behind.
    let mut analyses = Vec::with_capacity(files.len());
    for path in files {
        let id = path.display().to_string();
        let input = match load_input(path, format) {
            Ok(i) => i,
            Err(e) => {
                eprintln!("error: {id}: {e}");
                return exit_code_for(&e);
            }
        };
        match analyze_input(&id, &input, &opts) {
            Ok(a) => analyses.push(a),
            Err(e) => {
                eprintln!("error: {id}: {e}");
                return exit_code_for(&e);
            }
        }
    }
    if let Some(dir) = out_dir {
        if let Err(e) = std::fs::create_dir_all(dir) {
            eprintln!("error: {}: {e}", dir.display());
            return ExitCode::from(2);
        }
        let ext = match output {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Text => "txt",
        };
        for (path, a) in files.iter().zip(&analyses) {
            let stem = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "report".into());
            let target = dir.join(format!("{stem}.{ext}"));
            let mut content = render(a, output);
            if !content.ends_with('\n') {
                content.push('\n');
            }
            if let Err(e) = write_atomic(&target, &content) {
                eprintln!("error: {}: {e}", target.display());
                return ExitCode::from(2);
            }
        }
    } else {
        if output == OutputFormat::Csv {
            println!("{}", report::csv_header());
        }
        for a in &analyses {
            match output {
                OutputFormat::Text => print!("{}", render(a, output)),
                _ => println!("{}", render(a, output)),
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(
    count: u64,
    seed: u64,
    fixtures_only: bool,
    output: OutputFormat,
    opts: AnalysisOptions,
    files: &[PathBuf],
) -> ExitCode {
    let mut inputs: Vec<(String, Input)> = Vec::new();
    for name in gen::FIXTURE_NAMES {
        let input = match gen::fixture(name).expect("built-in fixture") {
            Fixture::Graph(g) => Input::Graph(g),
            Fixture::Matrix(m) => Input::Matrix(m),
        };
        inputs.push((format!("fixture:{name}"), input));
    }
    for path in files {
        let format = match path.extension().and_then(|e| e.to_str()) {
            Some("matrix") => InputFormat::Matrix,
            _ => InputFormat::Edges,
        };
        match load_input(path, format) {
            Ok(i) => inputs.push((path.display().to_string(), i)),
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    if !fixtures_only {
        for s in seed..seed + count {
            let g = gen::random_ct_clique_tree(&gen::corpus_spec(s));
            inputs.push((format!("seed:{s}"), Input::Graph(g)));
        }
    }

    let results: Vec<Result<Analysis, String>> = inputs
        .par_iter()
        .map(|(id, input)| analyze_input(id, input, &opts).map_err(|e| format!("{id}: {e}")))
        .collect();

    let mut analyses = Vec::with_capacity(results.len());
    for r in results {
        match r {
            Ok(a) => analyses.push(a),
            Err(msg) => {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
        }
    }

    if output == OutputFormat::Csv {
        println!("{}", report::csv_header());
    }
    for a in &analyses {
        match output {
            OutputFormat::Text => print!("{}", render(a, output)),
            _ => println!("{}", render(a, output)),
        }
    }

    let mut failures = Vec::new();
    for a in &analyses {
        for c in a.failed_checks() {
            failures.push(format!(
                "{}: check `{}` failed: {}",
                a.graph_id,
                c.id,
                c.witness.as_deref().unwrap_or("no witness")
            ));
        }
    }
    eprintln!(
        "verified {} inputs ({} fixtures), {} check failures",
        analyses.len(),
        gen::FIXTURE_NAMES.len(),
        failures.len()
    );
    if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        for f in &failures {
            eprintln!("failure: {f}");
        }
        ExitCode::from(1)
    }
}

fn cmd_generate(count: u64, seed: u64, out: &Path) -> ExitCode {
    if let Err(e) = std::fs::create_dir_all(out) {
        eprintln!("error: {}: {e}", out.display());
        return ExitCode::from(2);
    }
    for s in seed..seed + count {
        let g = gen::random_ct_clique_tree(&gen::corpus_spec(s));
        let path = out.join(format!("ct_{s}.edges"));
        if let Err(e) = write_atomic(&path, &g.to_edge_list_string()) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::SUCCESS
}
