use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

/// What a verification run covered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Scope {
    pub check: String,
    pub min_n: usize,
    pub max_n: usize,
}

/// A graph that failed a check, in graph file format, with what went wrong.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub graph: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub scope: Scope,
    pub cases_checked: u64,
    pub failures: Vec<Failure>,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
    pub pass: bool,
    /// Check-specific counters and echoed values.
    pub extra: BTreeMap<String, Value>,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl VerificationReport {
    pub fn new(scope: Scope) -> Self {
        VerificationReport {
            scope,
            cases_checked: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
            pass: true,
            extra: BTreeMap::new(),
        }
    }

    pub fn fail(&mut self, graph: String, detail: impl Into<String>) {
        self.failures.push(Failure {
            graph,
            detail: detail.into(),
        });
        self.pass = false;
    }

    pub fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.extra.insert(key.to_string(), value.into());
    }

    pub fn finish(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self.pass = self.failures.is_empty();
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{:<16} {}  n={}..{}  cases={}  failures={}  elapsed={:.1}ms",
            self.scope.check,
            verdict,
            self.scope.min_n,
            self.scope.max_n,
            self.cases_checked,
            self.failures.len(),
            self.elapsed.as_secs_f64() * 1e3
        );
        let width = self.extra.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in &self.extra {
            let _ = writeln!(out, "  {k:<width$}  {v}");
        }
        for f in self.failures.iter().take(20) {
            let _ = writeln!(out, "  failure: {}", f.detail);
            for line in f.graph.lines() {
                let _ = writeln!(out, "    {line}");
            }
        }
        if self.failures.len() > 20 {
            let _ = writeln!(out, "  ... {} more failures", self.failures.len() - 20);
        }
        out
    }
}
