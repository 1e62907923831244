use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use plucker_cli::commands;
use plucker_cli::report::{emit, Format};
use plucker_cli::suite::{exit_code, run_case, Route, Suite};
use plucker_cli::variety::VarietySpec;
use plucker_cli::CliError;
use plucker_core::Rat;
use rayon::prelude::*;

#[derive(Parser)]
#[command(
    name = "plucker",
    version,
    about = "Exact projective duality and Plücker-type identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dual variety of a variety file.
    Dual {
        variety: PathBuf,
        #[arg(long, value_enum, default_value_t = Route::Elimination)]
        route: Route,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Nodes and cusps of a plane curve.
    Census {
        variety: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Euler characteristic weighted by the Euler obstruction.
    #[command(group(ArgGroup::new("what").required(true).args(["variety", "quadric"])))]
    Chi {
        variety: Option<PathBuf>,
        /// Smooth quadric of this dimension instead of a file.
        #[arg(long)]
        quadric: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Weighted Euler characteristics of the generic linear sections.
    Profile {
        variety: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: PathBuf,
        /// Also run cases marked slow.
        #[arg(long)]
        include_slow: bool,
        /// Worker threads; 0 lets the pool decide.
        #[arg(long, env = "PLUCKER_JOBS", default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Record wall time per case (reports are then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Computations in the Chow ring of the compactified cotangent bundle.
    #[command(group(ArgGroup::new("what").required(true).args(["pp", "ext_identity"])))]
    Chow {
        #[arg(short)]
        n: usize,
        /// Self-intersection of the zero section.
        #[arg(long)]
        pp: bool,
        /// Check the expanded pairing bracket against its closed form.
        #[arg(long, requires_all = ["a", "p1", "p2"])]
        ext_identity: bool,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<Rat>,
        #[arg(long, allow_hyphen_values = true)]
        p1: Option<Rat>,
        #[arg(long, allow_hyphen_values = true)]
        p2: Option<Rat>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn load(path: &PathBuf) -> Result<plucker_core::duality::ProjVariety, CliError> {
    VarietySpec::load(path)?.build()
}

fn verify(
    suite: PathBuf,
    include_slow: bool,
    jobs: usize,
    format: Format,
    output: Option<PathBuf>,
    timings: bool,
) -> Result<u8, CliError> {
    let suite = Suite::load(&suite)?;
    let cases: Vec<_> = suite
        .cases
        .iter()
        .filter(|c| include_slow || !c.slow)
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Compute(e.to_string()))?;
    // collect keeps configuration order whatever the completion order
    let reports: Vec<_> = pool.install(|| {
        cases
            .par_iter()
            .map(|c| run_case(c, &suite.base, timings))
            .collect()
    });
    let text = emit(&reports, format);
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(exit_code(&reports))
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let out = match cli.command {
        Command::Dual {
            variety,
            route,
            format,
        } => commands::dual(&load(&variety)?, route, format)?,
        Command::Census { variety, format } => commands::census(&load(&variety)?, format)?,
        Command::Chi {
            variety,
            quadric,
            format,
        } => match (variety, quadric) {
            (Some(v), _) => commands::chi(&load(&v)?, format)?,
            (None, Some(m)) => commands::chi_of_quadric(m, format)?,
            (None, None) => unreachable!("clap requires one of them"),
        },
        Command::Profile { variety, format } => commands::profile(&load(&variety)?, format)?,
        Command::Verify {
            suite,
            include_slow,
            jobs,
            format,
            output,
            timings,
        } => {
            return verify(suite, include_slow, jobs, format, output, timings);
        }
        Command::Chow {
            n,
            pp,
            ext_identity: _,
            a,
            p1,
            p2,
            format,
        } => {
            if pp {
                commands::chow_pp(n, format)?
            } else {
                let (a, p1, p2) = (a.unwrap(), p1.unwrap(), p2.unwrap());
                commands::chow_ext(n, &a, &p1, &p2, format)?
            }
        }
    };
    print!("{out}");
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("plucker: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
