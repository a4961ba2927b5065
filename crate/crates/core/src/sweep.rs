//! Runs `verify_with` over a corpus, optionally in parallel, and merges the
//! per-instance reports in instance order.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::corpus::{Corpus, CorpusMode};
use crate::verify::{verify_with, Check, CheckResult, Status, VerifyOptions};

/// Failures kept in a summary, smallest instance index first.
pub const KEPT_FAILURES: usize = 10;

#[derive(Clone, Debug, Default)]
pub struct SweepOptions {
    pub max_path_len: Option<usize>,
    /// Worker count; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckTotals {
    pub check: Check,
    pub examined: u64,
    pub failures: u64,
    pub equalities: u64,
    /// Instances where the check's hypothesis did not apply.
    pub not_applicable: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureRecord {
    pub index: usize,
    pub instance: String,
    /// Independent-set labels of the instance, for rendering the witness.
    pub labels: Vec<String>,
    pub result: CheckResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub instances: usize,
    pub failing_instances: usize,
    pub totals: Vec<CheckTotals>,
    pub failures: Vec<FailureRecord>,
}

impl SweepSummary {
    fn empty() -> Self {
        SweepSummary {
            instances: 0,
            failing_instances: 0,
            totals: Check::INSTANCE
                .iter()
                .map(|&check| CheckTotals {
                    check,
                    examined: 0,
                    failures: 0,
                    equalities: 0,
                    not_applicable: 0,
                })
                .collect(),
            failures: Vec::new(),
        }
    }

    fn absorb(
        mut self,
        index: usize,
        instance: String,
        labels: Vec<String>,
        checks: Vec<CheckResult>,
    ) -> Self {
        self.instances += 1;
        let mut failed = false;
        for (total, result) in self.totals.iter_mut().zip(&checks) {
            debug_assert_eq!(total.check, result.check);
            total.examined += result.examined as u64;
            total.failures += result.failures as u64;
            total.equalities += result.equalities as u64;
            total.not_applicable += u64::from(result.status == Status::NotApplicable);
            if result.status == Status::Fail {
                failed = true;
                if self.failures.len() < KEPT_FAILURES {
                    self.failures.push(FailureRecord {
                        index,
                        instance: instance.clone(),
                        labels: labels.clone(),
                        result: result.clone(),
                    });
                }
            }
        }
        self.failing_instances += usize::from(failed);
        self
    }

    fn merge(mut self, other: SweepSummary) -> Self {
        self.instances += other.instances;
        self.failing_instances += other.failing_instances;
        for (a, b) in self.totals.iter_mut().zip(other.totals) {
            a.examined += b.examined;
            a.failures += b.failures;
            a.equalities += b.equalities;
            a.not_applicable += b.not_applicable;
        }
        self.failures.extend(other.failures);
        self.failures.sort_by_key(|f| f.index);
        self.failures.truncate(KEPT_FAILURES);
        self
    }

    pub fn passed(&self) -> bool {
        self.failing_instances == 0
    }

    pub fn total(&self, check: Check) -> &CheckTotals {
        self.totals
            .iter()
            .find(|t| t.check == check)
            .expect("every instance check has a total")
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "{} instances, {} failures\n",
            self.instances, self.failing_instances
        );
        for t in &self.totals {
            let _ = write!(
                out,
                "CHECK {} {} examined={}",
                t.check,
                if t.failures == 0 { "PASS" } else { "FAIL" },
                t.examined
            );
            if t.failures > 0 {
                let _ = write!(out, " failures={}", t.failures);
            }
            if t.equalities > 0 {
                let _ = write!(out, " equalities={}", t.equalities);
            }
            if t.not_applicable > 0 {
                let _ = write!(out, " n/a={}", t.not_applicable);
            }
            out.push('\n');
        }
        for f in &self.failures {
            let witness = f
                .result
                .witness
                .as_ref()
                .map(|w| w.render(&f.labels))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "FAIL {} {} {} {}",
                f.instance,
                f.result.check,
                witness,
                f.result.detail.as_deref().unwrap_or("")
            );
        }
        out
    }
}

/// Verifies every instance of `corpus`.
pub fn sweep(corpus: &Corpus, opts: &SweepOptions) -> SweepSummary {
    let run = || {
        (0..corpus.len())
            .into_par_iter()
            .fold(SweepSummary::empty, |acc, j| {
                let graph = corpus.get(j);
                let report = verify_with(
                    &graph,
                    &VerifyOptions {
                        instance: corpus.instance_id(j),
                        max_path_len: opts.max_path_len,
                    },
                );
                acc.absorb(j, report.instance, report.labels, report.checks)
            })
            .reduce(SweepSummary::empty, SweepSummary::merge)
    };
    match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
}

/// One-line description of a corpus.
pub fn describe(corpus: &Corpus) -> String {
    let s = corpus.spec();
    match s.mode {
        CorpusMode::Exhaustive => format!("mode exhaustive |K|={} |I|={}", s.k_max, s.i_max),
        CorpusMode::Random => format!(
            "mode random |K|={} |I|={} count={} seed={}",
            s.k_max, s.i_max, s.count, s.seed
        ),
    }
}
