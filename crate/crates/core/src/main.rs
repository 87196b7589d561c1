use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mayer::io::{parse_complex, parse_points, parse_xyz};
use mayer::pipeline::{run_distance, run_pipeline, Input, RunConfig};
use mayer::simplicial::FilteredComplex;
use mayer::{MayerError, Result};

#[derive(Parser)]
#[command(name = "mayer", version, about = "Persistent Mayer homology and Laplacians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti curves at every critical value
    Betti(RunArgs),
    /// Betti curves plus Laplacian spectra
    Spectra(RunArgs),
    /// Persistence diagrams of every channel
    Diagram(RunArgs),
    /// Family Wasserstein and bottleneck distances between two inputs
    Distance(DistanceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct Common {
    /// Order N of the differential (a prime)
    #[arg(short = 'N', long = "n-differential", default_value_t = 3)]
    order: u32,
    /// Stages q, comma separated (default 1..N-1)
    #[arg(long, value_delimiter = ',')]
    stages: Option<Vec<usize>>,
    /// Homological dimensions, comma separated
    #[arg(long, value_delimiter = ',', default_values_t = [0usize, 1])]
    dims: Vec<usize>,
    /// Largest simplex dimension of a Vietoris-Rips complex
    #[arg(long, default_value_t = 3)]
    max_dim: usize,
    /// Largest edge length of a Vietoris-Rips complex
    #[arg(long)]
    max_radius: Option<f64>,
    /// Relative zero threshold for eigenvalues
    #[arg(long, default_value_t = mayer::spectral::DEFAULT_ZERO_TOLERANCE)]
    tolerance: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    /// Input file (.xyz, .csv or .cplx)
    input: Option<PathBuf>,
    /// Explicit filtered complex
    #[arg(long, conflicts_with_all = ["input", "points", "xyz"])]
    complex: Option<PathBuf>,
    /// Point cloud, one comma separated point per line
    #[arg(long, conflicts_with_all = ["input", "xyz"])]
    points: Option<PathBuf>,
    /// Molecule in XYZ format
    #[arg(long, conflicts_with = "input")]
    xyz: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
    /// Compute Laplacian spectra
    #[arg(long, overrides_with = "no_eigen")]
    eigen: bool,
    /// Skip Laplacian spectra (the default for `betti` and `diagram`)
    #[arg(long, overrides_with = "eigen")]
    no_eigen: bool,
    /// Evaluate curves at (r_i, r_{i+k})
    #[arg(long, default_value_t = 0)]
    persistence_step: usize,
}

#[derive(Args)]
struct DistanceArgs {
    /// First input file
    first: PathBuf,
    /// Second input file
    second: PathBuf,
    #[command(flatten)]
    common: Common,
    /// Exponent r of the family Wasserstein distance
    #[arg(long, default_value_t = 2.0)]
    wasserstein_r: f64,
}

fn load(path: &Path) -> Result<Input> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("xyz") => Ok(Input::Cloud(parse_xyz(path)?)),
        Some("csv") => Ok(Input::Cloud(parse_points(path)?)),
        Some("cplx") => Ok(Input::Complex(parse_complex(path)?)),
        _ => Err(MayerError::Config(format!(
            "cannot tell the format of {}; use --complex, --points or --xyz",
            path.display()
        ))),
    }
}

fn config(common: &Common) -> RunConfig {
    RunConfig {
        order: common.order,
        stages: common.stages.clone(),
        dims: common.dims.clone(),
        max_dim: common.max_dim,
        max_radius: common.max_radius,
        zero_tolerance: common.tolerance,
        ..RunConfig::default()
    }
}

fn emit(common: &Common, text: String) -> Result<()> {
    match &common.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let (args, eigen_default, diagrams) = match cli.command {
        Command::Betti(a) => (a, false, false),
        Command::Spectra(a) => (a, true, false),
        Command::Diagram(a) => (a, false, true),
        Command::Distance(d) => {
            let cfg = config(&d.common);
            let a: FilteredComplex = load(&d.first)?.into_complex(&cfg)?;
            let b: FilteredComplex = load(&d.second)?.into_complex(&cfg)?;
            let names = format!("{} {}", d.first.display(), d.second.display());
            let summary = run_distance(&cfg, &a, &b, &names, d.wasserstein_r)?;
            let text = match d.common.format {
                Format::Json => summary.to_json()?,
                Format::Csv => summary.to_csv(),
                Format::Text => summary.to_text(),
            };
            emit(&d.common, text)?;
            return Ok(ExitCode::SUCCESS);
        }
    };
    let mut cfg = config(&args.common);
    cfg.eigen = if args.eigen {
        true
    } else if args.no_eigen {
        false
    } else {
        eigen_default
    };
    cfg.diagrams = diagrams;
    cfg.persistence_step = args.persistence_step;

    let (input, name) = if let Some(p) = &args.complex {
        (Input::Complex(parse_complex(p)?), p)
    } else if let Some(p) = &args.points {
        (Input::Cloud(parse_points(p)?), p)
    } else if let Some(p) = &args.xyz {
        (Input::Cloud(parse_xyz(p)?), p)
    } else if let Some(p) = &args.input {
        (load(p)?, p)
    } else {
        return Err(MayerError::Config("no input given".into()));
    };
    let complex = input.into_complex(&cfg)?;
    let report = run_pipeline(&cfg, &complex, &name.display().to_string())?;
    let text = match args.common.format {
        Format::Json => report.to_json()?,
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    };
    emit(&args.common, text)?;
    if report.failures.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        for f in &report.failures {
            eprintln!("cross-check failed: {f}");
        }
        Ok(ExitCode::from(2))
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e @ (MayerError::NegativeMultiplicity { .. } | MayerError::NotPositiveSemidefinite { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
