//! Cooperative step/time budget for long-running algebra.
//!
//! A budget is installed per thread with [`with_budget`]; the Gröbner engine and
//! the linear-algebra kernels call [`tick`] in their inner loops and abort with
//! [`Error::BudgetExhausted`] once either limit is crossed.

use std::cell::RefCell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub max_steps: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Limits {
    pub const UNLIMITED: Limits = Limits {
        max_steps: None,
        max_time: None,
    };

    pub fn seconds(secs: u64) -> Self {
        Limits {
            max_steps: None,
            max_time: Some(Duration::from_secs(secs)),
        }
    }

    pub fn steps(n: u64) -> Self {
        Limits {
            max_steps: Some(n),
            max_time: None,
        }
    }
}

struct State {
    limits: Limits,
    start: Instant,
    steps: u64,
}

thread_local! {
    static CURRENT: RefCell<Option<State>> = const { RefCell::new(None) };
}

/// Runs `f` with `limits` installed on the current thread. A nested call
/// replaces the outer budget until it returns.
pub fn with_budget<T>(limits: Limits, f: impl FnOnce() -> T) -> T {
    let previous = CURRENT.with(|c| {
        c.borrow_mut().replace(State {
            limits,
            start: Instant::now(),
            steps: 0,
        })
    });
    let out = f();
    CURRENT.with(|c| *c.borrow_mut() = previous);
    out
}

/// Records `n` units of work in `stage`.
#[inline]
pub fn tick(stage: &str, n: u64) -> Result<()> {
    CURRENT.with(|c| {
        let mut guard = c.borrow_mut();
        let Some(state) = guard.as_mut() else {
            return Ok(());
        };
        let before = state.steps;
        state.steps += n;
        let exhausted = match state.limits.max_steps {
            Some(max) if state.steps > max => true,
            // reading the clock is comparatively slow; sample it
            _ => match state.limits.max_time {
                Some(t) if before >> 10 != state.steps >> 10 => state.start.elapsed() > t,
                _ => false,
            },
        };
        if exhausted {
            Err(Error::BudgetExhausted {
                stage: stage.to_string(),
                steps: state.steps,
                elapsed_ms: state.start.elapsed().as_millis(),
            })
        } else {
            Ok(())
        }
    })
}
