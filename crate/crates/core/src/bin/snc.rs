use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{error::ErrorKind, CommandFactory, Parser, Subcommand, ValueEnum};

use snc_core::fano::GluedFano;
use snc_core::report::{cmd_fano, cmd_glue, cmd_resolve, cmd_surface, cmd_verify, Report, SurfaceSpec};
use snc_core::resolution::{Assumptions, BettiInputs, Variant};
use snc_core::snc::Triangulation;
use snc_core::suites::Suite;

/// Reports on snc surfaces, glued index-2 Fano threefolds and their
/// resolutions.
#[derive(Parser)]
#[command(name = "snc", version)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized suites; SNC_SEED overrides it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Schedule {
    Standard,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Zr,
    Zrs,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Plain,
    Twisted,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Adjugate,
    Adjoint,
    Charts,
    Detvar,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Build a rational surface with an anticanonical cycle.
    Surface {
        #[arg(long, conflicts_with = "schedule")]
        corners: Option<usize>,
        #[arg(long, value_enum)]
        schedule: Option<Schedule>,
        /// Cycle length for the standard schedule.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(3..))]
        length: u32,
    },
    /// Glue surfaces along the dual complex of a triangulation.
    Glue {
        #[arg(long)]
        triangulation: PathBuf,
    },
    /// Section spaces and invariants of Z_r or Z_rs.
    Fano {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..))]
        mmax: u32,
        /// Exchange the two P1 factors in the gluing.
        #[arg(long)]
        swap: bool,
    },
    /// Resolution chain for x1 x2 = s^m or x1 x2 = s^m x3.
    Resolve {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Second Betti numbers z1,s,c,z2.
        #[arg(long, value_delimiter = ',', required = true)]
        h2: Vec<u32>,
        #[arg(long)]
        assume_h1s_zero: bool,
        #[arg(long)]
        assume_z2_surjective: bool,
    },
    /// Run the seeded polynomial fuzz suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
}

fn usage(kind: ErrorKind, msg: &str) -> ! {
    Cli::command().error(kind, msg).exit()
}

fn run(cli: &Cli, seed: u64) -> snc_core::Result<Report> {
    match &cli.command {
        Command::Surface { corners, schedule, length } => match (corners, schedule) {
            (Some(k), None) => cmd_surface(SurfaceSpec::Corners(*k)),
            (None, Some(Schedule::Standard)) => cmd_surface(SurfaceSpec::Standard(*length as usize)),
            _ => usage(ErrorKind::MissingRequiredArgument, "pass --corners K or --schedule standard"),
        },
        Command::Glue { triangulation } => {
            let text = std::fs::read_to_string(triangulation)
                .unwrap_or_else(|e| usage(ErrorKind::Io, &format!("{}: {e}", triangulation.display())));
            let t = Triangulation::from_json(&text)?;
            let name = triangulation.file_name().map_or_else(String::new, |n| n.to_string_lossy().into_owned());
            cmd_glue(&t, &name)
        }
        Command::Fano { kind, r, s, mmax, swap } => {
            let z = match (kind, s) {
                (Kind::Zr, None) => GluedFano::zr(*r),
                (Kind::Zrs, Some(s)) => GluedFano::zrs(*r, *s),
                (Kind::Zr, Some(_)) => usage(ErrorKind::ArgumentConflict, "--s is only used with --kind zrs"),
                (Kind::Zrs, None) => usage(ErrorKind::MissingRequiredArgument, "--kind zrs needs --s"),
            };
            cmd_fano(z.swapped(*swap), *mmax)
        }
        Command::Resolve { m, variant, h2, assume_h1s_zero, assume_z2_surjective } => {
            let variant = match variant {
                VariantArg::Plain => Variant::Plain,
                VariantArg::Twisted => Variant::Twisted,
            };
            if h2.len() != 4 {
                usage(ErrorKind::WrongNumberOfValues, "--h2 takes z1,s,c,z2");
            }
            let betti = BettiInputs { z1: h2[0], s: h2[1], c: h2[2], z2: h2[3] };
            let assumptions = Assumptions {
                h1_s_zero: *assume_h1s_zero,
                z2_surjective: *assume_z2_surjective,
            };
            cmd_resolve(*m, variant, betti, assumptions)
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::Adjugate => vec![Suite::Adjugate],
                SuiteArg::Adjoint => vec![Suite::Adjoint],
                SuiteArg::Charts => vec![Suite::Charts],
                SuiteArg::Detvar => vec![Suite::Detvar],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            cmd_verify(&suites, seed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = match std::env::var("SNC_SEED") {
        Ok(v) => v
            .parse()
            .unwrap_or_else(|_| usage(ErrorKind::InvalidValue, &format!("SNC_SEED={v:?} is not an integer"))),
        Err(_) => cli.seed,
    };
    let start = Instant::now();
    let mut report = match run(&cli, seed) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    if cli.json {
        println!("{}", report.to_json());
    } else {
        println!("{}", report.to_text());
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
