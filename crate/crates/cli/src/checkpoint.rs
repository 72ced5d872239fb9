//! Row-level checkpoints for jobs that run out of budget.
//!
//! Reports record each finished row; a resumed run reuses those rows and
//! recomputes the rest. Single-value commands have one row, so resuming them
//! simply reruns the computation under the new budget.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::Context;
use serde::{Deserialize, Serialize};

use crate::{Cli, InputError};

pub const DEFAULT_PATH: &str = "monadlab.checkpoint.json";

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Checkpoint {
    job: String,
    stopped: String,
    completed: BTreeMap<String, Vec<String>>,
}

/// Identifies a job for resume purposes: the command and its arguments,
/// without budget or checkpoint flags.
pub fn job_key(cli: &Cli) -> String {
    format!("{:?} field={:?} format={:?}", cli.command, cli.field, cli.format)
}

pub struct Progress {
    job: String,
    completed: BTreeMap<String, Vec<String>>,
}

impl Progress {
    pub fn new(job: String) -> Self {
        Progress {
            job,
            completed: BTreeMap::new(),
        }
    }

    pub fn resume(path: &Path, job: &str) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| InputError(format!("cannot read checkpoint {}: {e}", path.display())))?;
        let cp: Checkpoint =
            serde_json::from_str(&text).map_err(|e| InputError(format!("bad checkpoint {}: {e}", path.display())))?;
        if cp.job != job {
            return Err(InputError(format!(
                "checkpoint {} belongs to a different job: {}",
                path.display(),
                cp.job
            ))
            .into());
        }
        Ok(Progress {
            job: cp.job,
            completed: cp.completed,
        })
    }

    pub fn completed_len(&self) -> usize {
        self.completed.len()
    }

    /// Returns the stored row for `key`, or computes and records it.
    pub fn row(&mut self, key: &str, f: impl FnOnce() -> anyhow::Result<Vec<String>>) -> anyhow::Result<Vec<String>> {
        if let Some(r) = self.completed.get(key) {
            return Ok(r.clone());
        }
        let r = f()?;
        self.completed.insert(key.to_string(), r.clone());
        Ok(r)
    }

    pub fn store(&self, path: &Path, stopped: &anyhow::Error) -> anyhow::Result<()> {
        let cp = Checkpoint {
            job: self.job.clone(),
            stopped: format!("{stopped:#}"),
            completed: self.completed.clone(),
        };
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string_pretty(&cp)? + "\n")
            .with_context(|| format!("writing {}", tmp.display()))?;
        std::fs::rename(&tmp, path).with_context(|| format!("renaming to {}", path.display()))?;
        Ok(())
    }
}
