//! Command-line front end for the vanishing-cycle toolkit: parses
//! datasets, runs the pipeline, and emits matrices, verdicts, and
//! polynomials as JSON or aligned text.
//!
//! Exit codes: 0 on success, 1 when the input fails validation (a
//! structured report is still emitted), 2 on I/O or parse errors.

mod render;
mod wire;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;
use vancycle::poly::{discriminant_curve, family_discriminant_identity, MPoly};
use vancycle::{
    block_check, compose_cluster, equivalence_verdict, intersection_matrix,
    monodromy_at_infinity, pl_matrix, validate, vanishing_basis, MorseData, MorseDataWire,
    SquareIntMatrix,
};

#[derive(Parser)]
#[command(
    name = "vancycle",
    version,
    about = "Vanishing cycles, monodromy matrices, and discriminant curves from braid data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a dataset and print the validation report
    Validate(DatasetArgs),
    /// Compute the distinguished basis of vanishing cycles
    Vanish(DatasetArgs),
    /// Compute the intersection matrix of the vanishing cycles
    Intersect(DatasetArgs),
    /// Print the operator matrix of every critical value
    Plmats(DatasetArgs),
    /// Compose operator matrices over one cluster or all of them
    Compose(ComposeArgs),
    /// Compose all operators into the monodromy at infinity
    Infinity(DatasetArgs),
    /// Decide whether paired operators admit an invertible intertwiner
    Obstruct(ObstructArgs),
    /// Compute the discriminant curve of a plane polynomial
    Disc(DatasetArgs),
    /// Verify the pinned identity for the family's critical values
    FamilyCheck(OutputArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Write the result here instead of standard output
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct DatasetArgs {
    /// Input file
    #[arg(short, long)]
    input: PathBuf,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ComposeArgs {
    #[command(flatten)]
    data: DatasetArgs,
    /// 1-based cluster index; all clusters in order when absent
    #[arg(long)]
    cluster: Option<usize>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["input", "pair"]).multiple(false))]
struct ObstructArgs {
    /// File holding the list of operator pairs
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Two files, each holding one integer matrix; repeatable
    #[arg(long, num_args = 2, value_names = ["FILE_A", "FILE_B"], action = clap::ArgAction::Append)]
    pair: Vec<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("failed to encode output: {0}")]
    Encode(#[from] serde_json::Error),
    #[error("failed to write output: {0}")]
    WriteOutput(std::io::Error),
}

/// A computation that produced either a rendered result or a structured
/// failure report; both are emitted, with different exit codes.
enum Outcome {
    Success(String),
    Failure(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(Outcome::Success(text)) => match emit(&cli.command, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(err) => fail(&err),
        },
        Ok(Outcome::Failure(text)) => match emit(&cli.command, &text) {
            Ok(()) => ExitCode::from(1),
            Err(err) => fail(&err),
        },
        Err(err) => fail(&err),
    }
}

fn fail(err: &CliError) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

fn emit(command: &Command, text: &str) -> Result<(), CliError> {
    let out = output_args(command);
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(CliError::WriteOutput)
        }
    }
}

fn output_args(command: &Command) -> &OutputArgs {
    match command {
        Command::Validate(a)
        | Command::Vanish(a)
        | Command::Intersect(a)
        | Command::Plmats(a)
        | Command::Infinity(a)
        | Command::Disc(a) => &a.out,
        Command::Compose(a) => &a.data.out,
        Command::Obstruct(a) => &a.out,
        Command::FamilyCheck(a) => a,
    }
}

fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Validate(args) => run_validate(args),
        Command::Vanish(args) => run_vanish(args),
        Command::Intersect(args) => run_intersect(args),
        Command::Plmats(args) => run_plmats(args),
        Command::Compose(args) => run_compose(args),
        Command::Infinity(args) => run_infinity(args),
        Command::Obstruct(args) => run_obstruct(args),
        Command::Disc(args) => run_disc(args),
        Command::FamilyCheck(args) => run_family_check(args),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let bytes = fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_slice(&bytes).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

/// Loads and validates a dataset. A fatal report becomes a rendered
/// `Outcome::Failure`; a clean dataset is handed to the continuation.
fn with_dataset(
    args: &DatasetArgs,
    job: impl FnOnce(&MorseData) -> Result<Outcome, CliError>,
) -> Result<Outcome, CliError> {
    let (data, report) = load_dataset(args)?;
    match data {
        Some(data) => job(&data),
        None => Ok(Outcome::Failure(match args.out.format {
            Format::Json => to_json(&report)?,
            Format::Text => render::validation(&report),
        })),
    }
}

fn load_dataset(
    args: &DatasetArgs,
) -> Result<(Option<MorseData>, vancycle::ValidationReport), CliError> {
    let wire: MorseDataWire = read_json(&args.input)?;
    let report = validate(&wire);
    if !report.is_valid() {
        return Ok((None, report));
    }
    let data = MorseData::try_from(wire).expect("a valid report admits construction");
    Ok((Some(data), report))
}

/// Renders a mid-pipeline failure on structurally valid data.
fn pipeline_failure(format: Format, message: &str) -> Result<Outcome, CliError> {
    let text = match format {
        Format::Json => to_json(&wire::ErrorReport {
            error: message.to_string(),
        })?,
        Format::Text => format!("error: {message}\n"),
    };
    Ok(Outcome::Failure(text))
}

fn run_validate(args: &DatasetArgs) -> Result<Outcome, CliError> {
    let wire: MorseDataWire = read_json(&args.input)?;
    let report = validate(&wire);
    let text = match args.out.format {
        Format::Json => to_json(&report)?,
        Format::Text => render::validation(&report),
    };
    Ok(if report.is_valid() {
        Outcome::Success(text)
    } else {
        Outcome::Failure(text)
    })
}

fn run_vanish(args: &DatasetArgs) -> Result<Outcome, CliError> {
    with_dataset(args, |data| {
        let basis = match vanishing_basis(data) {
            Ok(basis) => basis,
            Err(err) => return pipeline_failure(args.out.format, &err.to_string()),
        };
        let cycles = wire::cycles(&basis);
        let text = match args.out.format {
            Format::Json => to_json(&wire::CycleList { cycles })?,
            Format::Text => render::cycles(&basis),
        };
        Ok(Outcome::Success(text))
    })
}

fn run_intersect(args: &DatasetArgs) -> Result<Outcome, CliError> {
    with_dataset(args, |data| {
        let matrix = match intersection_matrix(data) {
            Ok(m) => m,
            Err(err) => return pipeline_failure(args.out.format, &err.to_string()),
        };
        let text = match args.out.format {
            Format::Json => to_json(&wire::MatrixReport { matrix })?,
            Format::Text => render::matrix(&matrix, &cluster_boundaries(data)),
        };
        Ok(Outcome::Success(text))
    })
}

fn run_plmats(args: &DatasetArgs) -> Result<Outcome, CliError> {
    with_dataset(args, |data| {
        let mut operators = Vec::with_capacity(data.mu());
        for i in 1..=data.mu() {
            match pl_matrix(data, i) {
                Ok(matrix) => operators.push(wire::IndexedMatrix { index: i, matrix }),
                Err(err) => return pipeline_failure(args.out.format, &err.to_string()),
            }
        }
        let text = match args.out.format {
            Format::Json => to_json(&wire::OperatorList { operators })?,
            Format::Text => render::operators(&operators, &cluster_boundaries(data)),
        };
        Ok(Outcome::Success(text))
    })
}

fn run_compose(args: &ComposeArgs) -> Result<Outcome, CliError> {
    let format = args.data.out.format;
    with_dataset(&args.data, |data| {
        let indices: Vec<usize> = match args.cluster {
            Some(c) => vec![c],
            None => (1..=data.clusters().len()).collect(),
        };
        let mut clusters = Vec::with_capacity(indices.len());
        for c in indices {
            let matrix = match compose_cluster(data, c) {
                Ok(m) => m,
                Err(err) => return pipeline_failure(format, &err.to_string()),
            };
            let blocked = match block_check(&matrix, data.clusters(), c) {
                Ok(b) => b,
                Err(err) => return pipeline_failure(format, &err.to_string()),
            };
            clusters.push(wire::ComposedCluster {
                index: c,
                label: data
                    .labels()
                    .and_then(|l| l.get(c - 1))
                    .cloned(),
                cycles: data.clusters()[c - 1].clone(),
                block_shape: blocked,
                matrix,
            });
        }
        let text = match format {
            Format::Json => to_json(&wire::ClusterList { clusters })?,
            Format::Text => render::compositions(&clusters, &cluster_boundaries(data)),
        };
        Ok(Outcome::Success(text))
    })
}

fn run_infinity(args: &DatasetArgs) -> Result<Outcome, CliError> {
    with_dataset(args, |data| {
        let matrix = match monodromy_at_infinity(data) {
            Ok(m) => m,
            Err(err) => return pipeline_failure(args.out.format, &err.to_string()),
        };
        let text = match args.out.format {
            Format::Json => to_json(&wire::MatrixReport { matrix })?,
            Format::Text => render::matrix(&matrix, &cluster_boundaries(data)),
        };
        Ok(Outcome::Success(text))
    })
}

fn run_obstruct(args: &ObstructArgs) -> Result<Outcome, CliError> {
    let pairs: Vec<(SquareIntMatrix, SquareIntMatrix)> = match &args.input {
        Some(path) => {
            let file: wire::PairsFile = read_json(path)?;
            file.pairs.into_iter().map(|p| (p.plus, p.minus)).collect()
        }
        None => {
            let mut pairs = Vec::with_capacity(args.pair.len() / 2);
            for files in args.pair.chunks_exact(2) {
                let plus: SquareIntMatrix = read_json(&files[0])?;
                let minus: SquareIntMatrix = read_json(&files[1])?;
                pairs.push((plus, minus));
            }
            pairs
        }
    };
    let report = match equivalence_verdict(&pairs) {
        Ok(report) => report,
        Err(err) => return pipeline_failure(args.out.format, &err.to_string()),
    };
    let text = match args.out.format {
        Format::Json => to_json(&report)?,
        Format::Text => render::obstruction(&report),
    };
    Ok(Outcome::Success(text))
}

fn run_disc(args: &DatasetArgs) -> Result<Outcome, CliError> {
    let poly: MPoly = read_json(&args.input)?;
    let curve = match discriminant_curve(&poly) {
        Ok(curve) => curve,
        Err(err) => return pipeline_failure(args.out.format, &err.to_string()),
    };
    let text = match args.out.format {
        Format::Json => to_json(&curve)?,
        Format::Text => format!("{curve}\n"),
    };
    Ok(Outcome::Success(text))
}

fn run_family_check(args: &OutputArgs) -> Result<Outcome, CliError> {
    let (holds, scalar) = match family_discriminant_identity() {
        Ok(result) => result,
        Err(err) => return pipeline_failure(args.format, &err.to_string()),
    };
    let text = match args.format {
        Format::Json => to_json(&wire::FamilyCheck {
            holds,
            scalar: scalar.to_string(),
        })?,
        Format::Text => render::family_check(holds, &scalar.to_string()),
    };
    Ok(Outcome::Success(text))
}

/// Column/row indices (0-based, exclusive) where cluster separators go.
fn cluster_boundaries(data: &MorseData) -> Vec<usize> {
    let mut acc = 0;
    let mut cuts = Vec::new();
    for cluster in data.clusters() {
        acc += cluster.len();
        if acc < data.mu() {
            cuts.push(acc);
        }
    }
    cuts
}
