use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use handmotion_core::ingest::{self, TrimSpec};
use handmotion_core::invariance::{self, SelfCheckOptions};
use handmotion_core::metrics::{self, MetricsConfig, MovementReport};
use handmotion_core::report::{self, AnalysisRecord, OutputFormat};
use handmotion_core::transforms::{self, PlanarTransform};
use handmotion_core::Trajectory;

/// Scale- and rotation-invariant hand movement metrics for HLS1 landmark files.
#[derive(Debug, Parser)]
#[command(name = "handmotion", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Summarize hand movement for one or more landmark files.
    Analyze(AnalyzeArgs),
    /// Apply a similarity transform and/or frame duplication to a landmark file.
    Transform(TransformArgs),
    /// Check metric invariance under random transforms of a landmark file.
    Selfcheck(SelfcheckArgs),
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[arg(required = true)]
    paths: Vec<PathBuf>,
    /// Frames per window for the windowed dispersion series.
    #[arg(long, default_value_t = metrics::DEFAULT_WINDOW as u64, value_parser = clap::value_parser!(u64).range(2..))]
    window: u64,
    /// Keep frames with index in [start, end); either bound may be empty.
    #[arg(long, value_name = "START:END")]
    trim: Option<TrimSpec>,
    /// Write per-frame and windowed series CSV here. With several inputs
    /// this is a directory receiving one `<stem>.series.csv` per file.
    #[arg(long, value_name = "PATH")]
    series_out: Option<PathBuf>,
    #[arg(long, default_value = "table", value_parser = ["table", "csv", "json"])]
    format: String,
}

#[derive(Debug, Args)]
struct TransformArgs {
    input: PathBuf,
    output: PathBuf,
    /// Uniform scale factor.
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    /// Rotation about the origin, in degrees.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    rotate: f64,
    /// Translation in pixels.
    #[arg(long, value_name = "DX,DY", allow_hyphen_values = true, value_parser = parse_pair)]
    translate: Option<(f64, f64)>,
    /// Mirror across the vertical axis before scaling and rotating.
    #[arg(long)]
    reflect: bool,
    /// Repeat every frame this many times.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    duplicate: u64,
}

#[derive(Debug, Args)]
struct SelfcheckArgs {
    path: PathBuf,
    #[arg(long, default_value_t = invariance::DEFAULT_TRIALS as u64, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = invariance::DEFAULT_TOLERANCE)]
    tolerance: f64,
    #[arg(long, default_value_t = invariance::DEFAULT_SEED)]
    seed: u64,
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected DX,DY, got `{s}`"))?;
    let num = |v: &str| v.trim().parse::<f64>().map_err(|_| format!("invalid number `{v}`"));
    Ok((num(a)?, num(b)?))
}

fn load(path: &Path) -> anyhow::Result<Trajectory> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(ingest::parse_landmark_file(&bytes)?)
}

fn analyze_one(
    path: &Path,
    trim: Option<&TrimSpec>,
    config: &MetricsConfig,
) -> anyhow::Result<(AnalysisRecord, MovementReport)> {
    let mut t = load(path)?;
    if let Some(spec) = trim {
        t = ingest::trim(&t, spec)?;
    }
    let report = metrics::analyze(&t, config)?;
    Ok((AnalysisRecord::new(&t, &report.summary), report))
}

fn series_paths(out: &Path, inputs: &[PathBuf]) -> anyhow::Result<Vec<PathBuf>> {
    if inputs.len() == 1 {
        return Ok(vec![out.to_path_buf()]);
    }
    if out.is_file() {
        bail!(
            "--series-out {} must be a directory when analyzing several files",
            out.display()
        );
    }
    fs::create_dir_all(out).with_context(|| format!("cannot create {}", out.display()))?;
    Ok(inputs
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let stem = p
                .file_stem()
                .map_or_else(|| format!("input{i}"), |s| s.to_string_lossy().into_owned());
            out.join(format!("{stem}.series.csv"))
        })
        .collect())
}

fn cmd_analyze(args: AnalyzeArgs) -> anyhow::Result<ExitCode> {
    let config = MetricsConfig {
        window: args.window as usize,
        ..MetricsConfig::default()
    };
    let format: OutputFormat = args.format.parse().map_err(anyhow::Error::msg)?;
    let series_targets = args
        .series_out
        .as_deref()
        .map(|o| series_paths(o, &args.paths))
        .transpose()?;

    let results: Vec<_> = args
        .paths
        .par_iter()
        .map(|p| analyze_one(p, args.trim.as_ref(), &config))
        .collect();

    let mut failed = false;
    let mut records = Vec::with_capacity(results.len());
    for (i, (path, result)) in args.paths.iter().zip(results).enumerate() {
        match result {
            Ok((record, movement)) => {
                if let Some(targets) = &series_targets {
                    let target = &targets[i];
                    if let Err(e) = fs::write(target, report::render_series_csv(&movement)) {
                        eprintln!("{}: cannot write series to {}: {e}", path.display(), target.display());
                        failed = true;
                    }
                }
                records.push(record);
            }
            Err(e) => {
                eprintln!("{}: {e:#}", path.display());
                failed = true;
            }
        }
    }

    print!("{}", report::render(&records, format));
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_transform(args: TransformArgs) -> anyhow::Result<ExitCode> {
    let (dx, dy) = args.translate.unwrap_or((0.0, 0.0));
    let xf = PlanarTransform::new(args.rotate.to_radians(), args.scale, dx, dy, args.reflect)?;
    let t = load(&args.input)?;
    let mut out = transforms::apply_transform(&t, &xf)?;
    if args.duplicate > 1 {
        out = transforms::resample_duplicate(&out, args.duplicate as usize)?;
    }
    let text = ingest::serialize_trajectory(&out)?;
    fs::write(&args.output, text).with_context(|| format!("cannot write {}", args.output.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_selfcheck(args: SelfcheckArgs) -> anyhow::Result<ExitCode> {
    let t = load(&args.path)?;
    let opts = SelfCheckOptions {
        trials: args.trials as usize,
        tolerance: args.tolerance,
        seed: args.seed,
    };
    let result = invariance::run_selfcheck(&t, &opts)?;
    print!("{}", report::render_selfcheck(&result));
    Ok(if result.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Transform(a) => cmd_transform(a),
        Command::Selfcheck(a) => cmd_selfcheck(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
