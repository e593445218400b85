use serde::{Deserialize, Serialize};

/// Outcome of a batch of combinatorial checks. Failures are collected, not thrown.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one check; `msg` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    /// Prefixes every failure message with `ctx`.
    pub fn context(mut self, ctx: &str) -> Report {
        for f in &mut self.failures {
            *f = format!("{ctx}: {f}");
        }
        self
    }
}
