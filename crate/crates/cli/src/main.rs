//! `alm`: synthetic data, ALM pipeline runs, operator law checks and plane rendering.
//!
//! Exit codes: 0 on success, 1 when a checked claim is violated, 2 on usage or I/O errors.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use alm_core::alm::{Diffusion, Extraction};
use alm_core::datagen::{FunctionKind, Shape};
use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{AxiomRun, AxiomTarget, RenderStage, Verdict};
use config::{parse_diffusion, parse_extraction, Overrides, RunConfig};

#[derive(Parser)]
#[command(name = "alm", version, about = "Active Learning Method toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a synthetic dataset as CSV.
    Gen(GenArgs),
    /// Fit every input dimension and write planes, paths, overlays and a summary.
    Pipeline {
        /// Dataset CSV with columns x1..xd,y.
        #[arg(long)]
        data: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check operator laws on seeded random trials.
    Axioms {
        #[arg(value_enum)]
        target: AxiomTarget,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
        /// Thinning octet file for the `duality` target.
        #[arg(long)]
        octet: Option<PathBuf>,
        /// Also require associativity of the extended operators.
        #[arg(long)]
        strict: bool,
    },
    /// Write one stage of one input plane as a PGM image.
    Render {
        #[arg(long)]
        data: PathBuf,
        /// Input dimension, counted from 0.
        #[arg(long, default_value_t = 0)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = RenderStage::Overlay)]
        stage: RenderStage,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Circle,
    Chained,
    HalfmoonSet,
    Function,
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctionArg {
    Sine,
    Linear,
    Quadratic,
    Sugeno,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    shape: ShapeArg,
    #[arg(long, default_value_t = 400)]
    n: usize,
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Circle radius.
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// Function sampled by the `function` shape.
    #[arg(long, value_enum, default_value_t = FunctionArg::Sine)]
    function: FunctionArg,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Run settings. Flags override the config file, which overrides the defaults.
#[derive(Args)]
struct RunArgs {
    /// File of `key = value` lines.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    nx: Option<usize>,
    #[arg(long)]
    ny: Option<usize>,
    /// IDS radius in cells.
    #[arg(long)]
    radius: Option<usize>,
    /// IDS radius in input units, converted to cells per plane.
    #[arg(long)]
    spread: Option<f64>,
    /// IDS pyramid height per sample.
    #[arg(long)]
    height: Option<u64>,
    /// ids | thicken
    #[arg(long, value_parser = parse_diffusion)]
    diffusion: Option<Diffusion>,
    /// cog | thin
    #[arg(long, value_parser = parse_extraction)]
    extraction: Option<Extraction>,
    /// Binarization threshold.
    #[arg(long)]
    tau: Option<u64>,
    #[arg(long)]
    thicken_passes: Option<usize>,
    /// Largest vertical gap joining two skeleton runs; defaults to the mask radius.
    #[arg(long)]
    gap_threshold: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Thinning octet file: eight blank-line separated masks of 1, 0 and *.
    #[arg(long)]
    octet: Option<PathBuf>,
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

impl RunArgs {
    fn resolve(&self) -> Result<RunConfig, String> {
        let overrides = Overrides {
            nx: self.nx,
            ny: self.ny,
            radius: self.radius,
            spread: self.spread,
            height: self.height,
            diffusion: self.diffusion,
            extraction: self.extraction,
            tau: self.tau,
            thicken_passes: self.thicken_passes,
            gap_threshold: self.gap_threshold,
            seed: self.seed,
            octet: self.octet.clone(),
            out_dir: self.out_dir.clone(),
        };
        RunConfig::resolve(self.config.as_deref(), &overrides)
    }
}

impl GenArgs {
    fn shape(&self) -> Shape {
        match self.shape {
            ShapeArg::Circle => Shape::Circle {
                radius: self.radius,
            },
            ShapeArg::Chained => Shape::Chained,
            ShapeArg::HalfmoonSet => Shape::HalfMoons,
            ShapeArg::Function => Shape::Function(match self.function {
                FunctionArg::Sine => FunctionKind::Sine,
                FunctionArg::Linear => FunctionKind::Linear,
                FunctionArg::Quadratic => FunctionKind::Quadratic,
                FunctionArg::Sugeno => FunctionKind::Sugeno,
            }),
        }
    }
}

fn run(cli: Cli) -> Result<Verdict, String> {
    match cli.command {
        Command::Gen(args) => {
            commands::gen(
                args.shape(),
                args.n,
                args.noise,
                args.seed,
                args.out.as_deref(),
            )?;
            Ok(Verdict::Holds)
        }
        Command::Pipeline { data, run } => {
            commands::pipeline(&run.resolve()?, &data)?;
            Ok(Verdict::Holds)
        }
        Command::Axioms {
            target,
            trials,
            seed,
            out_dir,
            octet,
            strict,
        } => commands::axioms(&AxiomRun {
            target,
            trials,
            seed,
            out_dir,
            octet,
            strict,
        }),
        Command::Render {
            data,
            dim,
            stage,
            out,
            run,
        } => {
            commands::render(&run.resolve()?, &data, dim, stage, &out)?;
            Ok(Verdict::Holds)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Verdict::Holds) => ExitCode::SUCCESS,
        Ok(Verdict::Violated) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
