//! Machine-readable check reports.

use std::collections::BTreeMap;
use std::sync::Mutex;

use serde::Serialize;
use serde_json::Value;

/// Failures kept verbatim per report; the rest only count.
pub const MAX_RECORDED_FAILURES: usize = 25;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of one verification suite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: BTreeMap<String, Value>,
    pub cases_run: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            config: BTreeMap::new(),
            cases_run: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    pub fn with_config(mut self, key: &str, value: impl Serialize) -> Self {
        self.config.insert(
            key.to_string(),
            serde_json::to_value(value).expect("config value serializes"),
        );
        self
    }

    pub fn pass(&mut self) {
        self.cases_run += 1;
    }

    pub fn fail(&mut self, inputs: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) {
        self.cases_run += 1;
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure {
                inputs: inputs.into(),
                expected: expected.into(),
                got: got.into(),
            });
        }
    }

    /// Records one case: passes when `ok`, otherwise fails with the rendered values.
    pub fn record(
        &mut self,
        ok: bool,
        inputs: impl FnOnce() -> String,
        expected: impl FnOnce() -> String,
        got: impl FnOnce() -> String,
    ) {
        if ok {
            self.pass();
        } else {
            self.fail(inputs(), expected(), got());
        }
    }

    /// Folds another report's cases and failures into this one.
    pub fn absorb(&mut self, other: Report) {
        self.cases_run += other.cases_run;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(f);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Collects reports from concurrently running suites. Output order does not
/// depend on completion order.
#[derive(Default)]
pub struct ReportAggregator {
    reports: Mutex<Vec<(String, Report)>>,
}

impl ReportAggregator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&self, key: impl Into<String>, report: Report) {
        self.reports
            .lock()
            .expect("report lock poisoned")
            .push((key.into(), report));
    }

    /// Reports sorted by case key.
    pub fn finish(self) -> Vec<Report> {
        let mut v = self.reports.into_inner().expect("report lock poisoned");
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|(_, r)| r).collect()
    }
}
