mod batch;
mod checkpoint;
mod commands;
mod input;
mod reports;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use monadlab::budget::{self, Limits};

use checkpoint::Progress;
use input::InputArgs;

#[derive(Parser, Clone, Debug)]
#[command(name = "monadlab", version, about = "Rank-2 bundles on P3 from Horrocks monads")]
pub struct Cli {
    /// Coefficient field: `qq` or `fp:P`. Overrides the file and MONADLAB_FIELD.
    #[arg(long, global = true)]
    field: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Wall-clock budget per job, in seconds.
    #[arg(long, global = true, default_value_t = 1800)]
    budget: u64,
    /// Step budget per job (Gröbner reductions and elimination steps).
    #[arg(long, global = true, hide = true)]
    max_steps: Option<u64>,
    /// Concurrent jobs for `batch`.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Where to write the checkpoint when the budget runs out.
    #[arg(long, global = true)]
    checkpoint: Option<PathBuf>,
    /// Resume from a checkpoint written by an earlier run of the same job.
    #[arg(long, global = true)]
    resume: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Subcommand, Clone, Debug)]
enum Command {
    /// Check composition, homogeneity, fiber ranks, minimality and stability.
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        no_stability: bool,
        /// Replace one entry by the constant 1, e.g. `beta:0,0`.
        #[arg(long, value_name = "MAP:ROW,COL")]
        inject_unit: Option<String>,
    },
    /// Compute one invariant of the cohomology bundle.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        what: commands::What,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, allow_negative_numbers = true)]
        d: Option<i64>,
    },
    /// Regenerate a reference table and diff it against the bundled values.
    Report {
        #[arg(long, value_enum)]
        which: reports::Which,
        #[arg(long)]
        c2: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        b: Option<i64>,
        #[arg(long)]
        a_min: Option<i64>,
        #[arg(long)]
        a_max: Option<i64>,
    },
    /// Write a bundled fixture as a monad file.
    Fixture {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        a: Option<i64>,
        #[arg(long)]
        b: Option<i64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// List the fixture names.
        #[arg(long)]
        list: bool,
    },
    /// Run the jobs in a file (one command line per line) concurrently.
    Batch {
        #[arg(long)]
        jobs: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

/// A usage problem detected after argument parsing; exits with 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

/// A completed job: buffered output and exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

pub fn exit_code(e: &anyhow::Error) -> u8 {
    use monadlab::Error as E;
    if e.downcast_ref::<InputError>().is_some() {
        return 2;
    }
    match e.downcast_ref::<E>() {
        Some(E::BudgetExhausted { .. }) => 3,
        Some(
            E::NotValidated(_)
            | E::Unstable { .. }
            | E::UnsupportedChern(_)
            | E::NegativeExt2 { .. }
            | E::SelfTest(_)
            | E::CompositionNonzero { .. },
        ) => 1,
        _ => 2,
    }
}

fn limits(cli: &Cli) -> Limits {
    Limits {
        max_steps: cli.max_steps,
        max_time: Some(Duration::from_secs(cli.budget)),
    }
}

/// Runs one job with its budget installed on the current thread.
pub fn run(cli: &Cli) -> Outcome {
    let mut out = String::new();
    let mut err = String::new();
    let mut progress = match &cli.resume {
        Some(path) => match Progress::resume(path, &checkpoint::job_key(cli)) {
            Ok(p) => p,
            Err(e) => {
                return Outcome {
                    stdout: out,
                    stderr: format!("error: {e:#}\n"),
                    code: exit_code(&e),
                }
            }
        },
        None => Progress::new(checkpoint::job_key(cli)),
    };
    let result = budget::with_budget(limits(cli), || dispatch(cli, &mut out, &mut err, &mut progress));
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(&e);
            err.push_str(&format!("error: {e:#}\n"));
            if code == 3 {
                let path = cli
                    .checkpoint
                    .clone()
                    .unwrap_or_else(|| PathBuf::from(checkpoint::DEFAULT_PATH));
                match progress.store(&path, &e) {
                    Ok(()) => err.push_str(&format!(
                        "checkpoint written to {} ({} completed rows); rerun with --resume {}\n",
                        path.display(),
                        progress.completed_len(),
                        path.display()
                    )),
                    Err(w) => err.push_str(&format!("could not write checkpoint: {w:#}\n")),
                }
            }
            code
        }
    };
    Outcome {
        stdout: out,
        stderr: err,
        code,
    }
}

fn dispatch(cli: &Cli, out: &mut String, err: &mut String, progress: &mut Progress) -> anyhow::Result<u8> {
    let field = cli.field.as_deref();
    match &cli.command {
        Command::Validate {
            input,
            no_stability,
            inject_unit,
        } => commands::validate(
            field,
            cli.format,
            input,
            !no_stability,
            inject_unit.as_deref(),
            out,
            err,
        ),
        Command::Compute { input, what, i, d } => commands::compute(field, cli.format, input, *what, *i, *d, out, err),
        Command::Report {
            which,
            c2,
            k,
            b,
            a_min,
            a_max,
        } => {
            let args = reports::ReportArgs {
                c2: *c2,
                k: *k,
                b: *b,
                a_min: *a_min,
                a_max: *a_max,
            };
            reports::report(field, cli.format, *which, &args, progress, out)
        }
        Command::Fixture {
            name,
            a,
            b,
            output,
            list,
        } => commands::fixture(field, name.as_deref(), *a, *b, output.as_deref(), *list, out, err),
        Command::Batch { jobs, out_dir } => batch::run_batch(cli, jobs, out_dir, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}
