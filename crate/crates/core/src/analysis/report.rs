use std::fmt;
use std::time::{Duration, Instant};

use crate::canon::canonical_form;
use crate::lattice::PlanarLattice;

/// Outcome of one executable check on one lattice.
///
/// `witness` is empty exactly when the check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    /// Digest of the canonical form of the lattice checked.
    pub lattice_id: String,
    pub pass: bool,
    /// Short human-readable facts, e.g. `t=2`; present whether or not the check passed.
    pub detail: String,
    pub witness: Vec<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    /// Runs `f`, which returns `(detail, witness)`, and times it.
    pub fn run<F>(name: &str, l: &PlanarLattice, f: F) -> CheckReport
    where
        F: FnOnce() -> (String, Vec<String>),
    {
        let start = Instant::now();
        let (detail, witness) = f();
        CheckReport {
            name: name.to_string(),
            lattice_id: canonical_form(l).digest(),
            pass: witness.is_empty(),
            detail,
            witness,
            elapsed: start.elapsed(),
        }
    }

    /// Deterministic one-line rendering (timing left out).
    pub fn line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {} [{}]", self.name, self.lattice_id);
        if !self.detail.is_empty() {
            s.push(' ');
            s.push_str(&self.detail);
        }
        for w in &self.witness {
            s.push_str("\n    witness: ");
            s.push_str(w);
        }
        s
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

/// Collects witnesses, keeping only the first `limit` to bound report size.
#[derive(Debug, Default)]
pub(crate) struct Witnesses {
    items: Vec<String>,
    total: usize,
}

impl Witnesses {
    pub(crate) const LIMIT: usize = 5;

    pub(crate) fn push(&mut self, w: impl Into<String>) {
        self.total += 1;
        if self.items.len() < Self::LIMIT {
            self.items.push(w.into());
        }
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub(crate) fn finish(mut self) -> Vec<String> {
        if self.total > self.items.len() {
            self.items
                .push(format!("... {} more", self.total - self.items.len()));
        }
        self.items
    }
}
