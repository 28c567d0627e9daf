//! Pass/fail law reports: deterministic given (suite, seed, budget).

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LawStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawEntry {
    pub law: String,
    pub fixture: String,
    pub status: LawStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl LawEntry {
    pub fn pass(law: impl Into<String>, fixture: impl Into<String>) -> Self {
        LawEntry {
            law: law.into(),
            fixture: fixture.into(),
            status: LawStatus::Pass,
            counterexample: None,
        }
    }

    pub fn fail(law: impl Into<String>, fixture: impl Into<String>, counterexample: impl Into<String>) -> Self {
        LawEntry {
            law: law.into(),
            fixture: fixture.into(),
            status: LawStatus::Fail,
            counterexample: Some(counterexample.into()),
        }
    }

    pub fn check(
        law: impl Into<String>,
        fixture: impl Into<String>,
        ok: bool,
        counterexample: impl FnOnce() -> String,
    ) -> Self {
        if ok {
            Self::pass(law, fixture)
        } else {
            Self::fail(law, fixture, counterexample())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub suite: String,
    pub seed: u64,
    pub budget: usize,
    pub entries: Vec<LawEntry>,
}

impl LawReport {
    pub fn new(suite: impl Into<String>, seed: u64, budget: usize) -> Self {
        LawReport {
            suite: suite.into(),
            seed,
            budget,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, entry: LawEntry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, entries: impl IntoIterator<Item = LawEntry>) {
        self.entries.extend(entries);
    }

    /// Sorts entries by (law, fixture) so output is merge-order independent.
    pub fn finish(mut self) -> Self {
        self.entries
            .sort_by(|l, r| (l.law.as_str(), l.fixture.as_str()).cmp(&(r.law.as_str(), r.fixture.as_str())));
        self
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status == LawStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawEntry> {
        self.entries.iter().filter(|e| e.status == LawStatus::Fail)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} (seed {}, budget {}): {} checks, {} failures",
            self.suite,
            self.seed,
            self.budget,
            self.entries.len(),
            self.failures().count()
        )?;
        for e in &self.entries {
            match e.status {
                LawStatus::Pass => writeln!(f, "  PASS {} [{}]", e.law, e.fixture)?,
                LawStatus::Fail => writeln!(
                    f,
                    "  FAIL {} [{}]: {}",
                    e.law,
                    e.fixture,
                    e.counterexample.as_deref().unwrap_or("-")
                )?,
            }
        }
        Ok(())
    }
}
