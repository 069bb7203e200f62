use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ninedots::bounds::{literature_bounds, lower_kd};
use ninedots::report::sweep_table;
use ninedots::svg::DEFAULT_SCALE;
use ninedots::{
    render_svg, run_bounds_report, solve_restricted, verify_path, CoveringPath, Error, GridSpec, ReportFormat,
    SpiralMode, SpiralPlan,
};

const EXIT_USAGE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_DISCREPANCY: u8 = 3;

#[derive(Parser)]
#[command(name = "ninedots", version, about = "Bounds and spiral constructions for covering paths of lattice grids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lower and upper bounds on the number of segments
    Bounds {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate a spiral covering path as JSON
    Spiral {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Mode::Pure)]
        mode: Mode,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SCALE)]
        scale: f64,
    },
    /// Check a path JSON file against the covering rules
    Verify {
        #[arg(long)]
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive optimum on a grid with at most 12 points
    Solve {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<i64>,
        #[arg(long, default_value_t = 12)]
        max_segments: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV table of bounds over all sorted tuples in a range
    Sweep {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        min: i64,
        #[arg(long)]
        max: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Published values for the unconstrained problem on cubic grids
    Literature {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<i64>,
    },
    /// Draw a path JSON file as SVG
    Render {
        #[arg(long)]
        path: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SCALE)]
        scale: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Pure,
    Saving,
}

fn write_out(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn read_path(path: &Path) -> Result<CoveringPath> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    CoveringPath::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Bounds { dims, format } => {
            let format = match format {
                Format::Text => ReportFormat::Text,
                Format::Json => ReportFormat::Json,
                Format::Csv => ReportFormat::Csv,
            };
            print!("{}", run_bounds_report(&dims, format)?);
        }
        Command::Spiral { dims, mode, out, svg, scale } => {
            let mode = match mode {
                Mode::Pure => SpiralMode::Pure,
                Mode::Saving => SpiralMode::Saving3d,
            };
            let plan = SpiralPlan::new(&GridSpec::new(dims)?, mode)?;
            let path = plan.generate()?;
            write_out(&out, &(path.to_json() + "\n"))?;
            if let Some(svg) = svg {
                write_out(&svg, &render_svg(&path, scale)?)?;
            }
            println!("{} segments for {} written to {}", path.segment_count(), plan.spec, out.display());
        }
        Command::Verify { path, json } => {
            let report = verify_path(&read_path(&path)?);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!(
                    "valid: {}\nsegments: {}\ncovered points: {}\nlength: {}",
                    report.valid, report.segment_count, report.covered_points, report.euclidean_length
                );
                for v in &report.violations {
                    println!("violation: {v}");
                }
            }
            if !report.valid {
                return Ok(EXIT_INVALID);
            }
        }
        Command::Solve { dims, max_segments, out } => {
            let spec = GridSpec::new(dims)?;
            let r = solve_restricted(&spec, max_segments)?;
            println!("grid {spec}: optimum {} segments ({}, {} nodes)", r.optimal_count, r.model, r.nodes_explored);
            if let Some(out) = out {
                write_out(&out, &(r.witness.to_json() + "\n"))?;
            }
            let report = verify_path(&r.witness);
            if !report.valid {
                eprintln!("witness failed verification: {:?}", report.violations);
                return Ok(EXIT_INVALID);
            }
            if spec.normalized().k() >= 3 {
                let h_l = lower_kd::<i64>(&spec)?.h_l;
                if (r.optimal_count as i64) < h_l {
                    println!("discrepancy: optimum {} is below the lower bound {h_l}", r.optimal_count);
                    return Ok(EXIT_DISCREPANCY);
                }
                println!("lower bound {h_l} holds");
            }
        }
        Command::Sweep { k, min, max, out } => {
            let csv = sweep_table(k, min, max)?;
            match out {
                Some(out) => write_out(&out, &csv)?,
                None => print!("{csv}"),
            }
        }
        Command::Literature { dims } => {
            let lit = literature_bounds::<i64>(&GridSpec::new(dims)?)?;
            println!("{}", serde_json::to_string_pretty(&lit)?);
        }
        Command::Render { path, out, scale } => {
            write_out(&out, &render_svg(&read_path(&path)?, scale)?)?;
        }
    }
    Ok(0)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Construction(_)) => EXIT_INVALID,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
