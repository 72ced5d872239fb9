//! Batch files: one command line per line (whitespace-separated, no quoting),
//! `#` comments. Jobs run on a pool of `--workers` threads, each with its own
//! budget; every job's output lands atomically in `OUT_DIR/job-NNN.out`.

use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::Parser;
use rayon::prelude::*;

use crate::{run, Cli, Command, InputError, Outcome};

struct Job {
    line: usize,
    text: String,
    cli: Cli,
}

fn parse_jobs(text: &str, parent: &Cli, out_dir: &Path) -> anyhow::Result<Vec<Job>> {
    let mut jobs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let argv = std::iter::once("monadlab").chain(line.split_whitespace());
        let mut cli = Cli::try_parse_from(argv)
            .map_err(|e| InputError(format!("job on line {}: {}", i + 1, e.render().to_string().trim_end())))?;
        if matches!(cli.command, Command::Batch { .. }) {
            return Err(InputError(format!("job on line {}: nested batch", i + 1)).into());
        }
        let n = jobs.len() + 1;
        if cli.checkpoint.is_none() {
            cli.checkpoint = Some(out_dir.join(format!("job-{n:03}.checkpoint.json")));
        }
        // flags on the batch command apply to jobs that do not set their own
        if cli.field.is_none() {
            cli.field = parent.field.clone();
        }
        jobs.push(Job {
            line: i + 1,
            text: line.to_string(),
            cli,
        });
    }
    Ok(jobs)
}

fn write_atomic(path: &Path, contents: &str) -> anyhow::Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, contents).with_context(|| format!("writing {}", tmp.display()))?;
    std::fs::rename(&tmp, path).with_context(|| format!("renaming to {}", path.display()))?;
    Ok(())
}

pub fn run_batch(parent: &Cli, jobs_path: &Path, out_dir: &Path, out: &mut String) -> anyhow::Result<u8> {
    let text = std::fs::read_to_string(jobs_path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", jobs_path.display())))?;
    std::fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    let jobs = parse_jobs(&text, parent, out_dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parent.workers.max(1))
        .build()
        .context("starting worker pool")?;
    let results: Vec<(PathBuf, Outcome)> = pool.install(|| {
        jobs.par_iter()
            .enumerate()
            .map(|(n, job)| {
                let outcome = run(&job.cli);
                (out_dir.join(format!("job-{:03}.out", n + 1)), outcome)
            })
            .collect()
    });
    let mut code = 0;
    for (job, (path, outcome)) in jobs.iter().zip(&results) {
        let mut contents = outcome.stdout.clone();
        if !outcome.stderr.is_empty() {
            for l in outcome.stderr.lines() {
                contents.push_str(&format!("# stderr: {l}\n"));
            }
        }
        write_atomic(path, &contents)?;
        out.push_str(&format!(
            "line {}\texit {}\t{}\t{}\n",
            job.line,
            outcome.code,
            path.display(),
            job.text
        ));
        code = code.max(outcome.code);
    }
    Ok(code)
}
