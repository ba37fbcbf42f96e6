use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use diraclab::{csv, run_verify, simulate, summarize, CliError, RunConfig};

#[derive(Debug, Parser)]
#[command(
    name = "diraclab",
    version,
    about = "Dirac theory in 1+1 and 2+1 dimensions: identity checks, wavepacket simulation, Zitterbewegung analysis"
)]
struct Cli {
    /// Worker threads for grid computations (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// JSON run configuration; defaults apply when omitted.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated suites: algebra, spinor1p1, spinor2p1, operators, fw.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Evolve the configured wavepacket and write its trajectory as CSV.
    Simulate {
        #[command(flatten)]
        common: Common,
    },
    /// Analyse trembling motion of a simulated or saved trajectory.
    Zbw {
        #[command(flatten)]
        common: Common,
        /// Trajectory CSV written by `simulate`; simulated afresh when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Machine-readable summary.
        #[arg(long)]
        json: bool,
    },
}

fn load(path: Option<&Path>) -> Result<RunConfig, CliError> {
    match path {
        Some(p) => RunConfig::load(p),
        None => Ok(RunConfig::default()),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io {
            path: p.to_path_buf(),
            source: e,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(text.as_bytes()) {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                other => other.map_err(|e| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source: e,
                }),
            }
        }
    }
}

fn run(cmd: Command) -> Result<i32, CliError> {
    match cmd {
        Command::Verify {
            common,
            suite,
            json,
        } => {
            let mut cfg = load(common.config.as_deref())?;
            if !suite.is_empty() {
                cfg.suites = suite;
                cfg.validate()?;
            }
            let report = run_verify(&cfg)?;
            let text = if json {
                report.to_json()
            } else {
                report.to_text()
            };
            emit(common.out.as_deref(), &text)?;
            Ok(report.exit_code())
        }
        Command::Simulate { common } => {
            let cfg = load(common.config.as_deref())?;
            let traj = simulate(&cfg)?;
            let out = common.out.or(cfg.output);
            emit(out.as_deref(), &csv::to_csv(&traj))?;
            Ok(0)
        }
        Command::Zbw {
            common,
            csv: path,
            json,
        } => {
            let cfg = load(common.config.as_deref())?;
            let traj = match path {
                Some(p) => csv::read_csv(&p)?,
                None => simulate(&cfg)?,
            };
            let summary = summarize(&traj, &cfg)?;
            let text = if json {
                summary.to_json()
            } else {
                summary.to_text()
            };
            emit(common.out.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.threads {
        Some(0) => Err(CliError::Usage("--threads must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(cli.command)),
            Err(e) => Err(CliError::Usage(format!("cannot start thread pool: {e}"))),
        },
        None => run(cli.command),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("diraclab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
