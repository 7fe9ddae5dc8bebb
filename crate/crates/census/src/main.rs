use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use quadpoints_census::commands::{
    cmd_audit, cmd_enumerate, cmd_generate_points, cmd_thresholds, cmd_verify_examples, AuditArgs, Corruption,
    EnumerateArgs, ExampleArgs, PointsArgs, ThresholdArgs,
};
use quadpoints_census::config::{parse_range, parse_rational, parse_real};
use quadpoints_census::{CensusError, Format, Report, RunConfig};
use quadpoints_core::covers::FieldKind;

#[derive(Parser)]
#[command(name = "quadpoints", version, about = "Quadratic points on cyclic covers of projective space")]
struct Cli {
    /// Worker threads; output is identical for every value.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Rational,
    Quadratic,
}

#[derive(Subcommand)]
enum Command {
    /// Height inequality audit of the points of a cover below a height bound.
    Audit {
        #[arg(long)]
        cover: PathBuf,
        /// Bound on the base height; accepts `log(x)`.
        #[arg(long, value_parser = parse_real)]
        height_bound: f64,
        #[arg(long, default_value_t = 0.0, value_parser = parse_real)]
        epsilon: f64,
    },
    /// Recompute every worked example and report each check.
    VerifyExamples {
        #[arg(long, value_parser = parse_range, default_value = "2..20")]
        n_range: RangeInclusive<u32>,
        #[arg(long, hide = true)]
        corrupt: Option<Corruption>,
    },
    /// Quadratic points from sections of the elliptic or conic fibration.
    GeneratePoints {
        #[arg(long, default_value_t = 4)]
        m: u32,
        #[arg(long, value_parser = parse_rational, value_delimiter = ',', default_value = "2,3,5,7,10")]
        t_values: Vec<BigRational>,
        #[arg(long, default_value_t = 5)]
        sections: usize,
    },
    /// Least m for which the covers satisfy the height inequality.
    Thresholds {
        #[arg(long, value_parser = parse_range, default_value = "1..3")]
        r_range: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range, default_value = "1..3")]
        d_range: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range, default_value = "2..4")]
        e_range: RangeInclusive<u32>,
    },
    /// Points of projective space below a height bound.
    Enumerate {
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum, default_value = "rational")]
        field: FieldArg,
        #[arg(long, value_parser = parse_real)]
        height_bound: f64,
    },
}

fn run(cli: Cli) -> Result<Report, CensusError> {
    let cfg = RunConfig {
        workers: cli.workers,
        seed: cli.seed,
        out: cli.out,
        format: cli.format.map(|f| match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }),
    };
    let (report, default_format) = match cli.command {
        Command::Audit { cover, height_bound, epsilon } => (
            cmd_audit(&AuditArgs { cover, height_bound, epsilon }, &cfg)?,
            Format::Csv,
        ),
        Command::VerifyExamples { n_range, corrupt } => {
            (cmd_verify_examples(&ExampleArgs { n_range, corrupt })?, Format::Json)
        }
        Command::GeneratePoints { m, t_values, sections } => (
            cmd_generate_points(&PointsArgs { m, t_values, sections }, &cfg)?,
            Format::Csv,
        ),
        Command::Thresholds { r_range, d_range, e_range } => (
            cmd_thresholds(&ThresholdArgs {
                r: r_range,
                d: d_range,
                e: e_range,
            })?,
            Format::Csv,
        ),
        Command::Enumerate { r, field, height_bound } => {
            let field = match field {
                FieldArg::Rational => FieldKind::Rational,
                FieldArg::Quadratic => FieldKind::Quadratic,
            };
            (cmd_enumerate(&EnumerateArgs { r, field, height_bound }, &cfg)?, Format::Csv)
        }
    };
    let text = match cfg.format.unwrap_or(default_format) {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CensusError::Output {
            path: path.display().to_string(),
            source,
        })?,
        None => print!("{text}"),
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) if report.failed_checks > 0 => {
            eprintln!("{} check(s) failed", report.failed_checks);
            ExitCode::from(1)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
