//! Machine-readable verification reports.

use std::fmt::Display;

use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub relation: String,
    pub entry: [usize; 2],
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn to_json(&self) -> Value {
        json!({
            "relation": self.relation,
            "entry": self.entry,
            "lhs": self.lhs,
            "rhs": self.rhs,
        })
    }
}

/// Outcome of one suite. Passes iff no failure was recorded.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Report {
    pub suite: String,
    pub params: Map<String, Value>,
    pub relations_total: usize,
    pub failures: Vec<Failure>,
    /// Extra named sections: dimensions, discrepancies, reducibility, ...
    pub sections: Map<String, Value>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            ..Default::default()
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// A checked relation; `None` means it held.
    pub fn record(&mut self, failure: Option<Failure>) {
        self.relations_total += 1;
        self.failures.extend(failure);
    }

    /// A checked non-matrix claim. On failure the computed value goes to `lhs`
    /// and the expected one to `rhs`.
    pub fn claim(&mut self, name: impl Into<String>, ok: bool, computed: impl Display, expected: impl Display) {
        let failure = (!ok).then(|| Failure {
            relation: name.into(),
            entry: [0, 0],
            lhs: computed.to_string(),
            rhs: expected.to_string(),
        });
        self.record(failure);
    }

    /// Fold another report in, prefixing its relation names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        self.relations_total += other.relations_total;
        for mut f in other.failures {
            if !prefix.is_empty() {
                f.relation = format!("{prefix}: {}", f.relation);
            }
            self.failures.push(f);
        }
        for (k, v) in other.sections {
            let key = if prefix.is_empty() { k } else { format!("{prefix}.{k}") };
            self.sections.insert(key, v);
        }
    }

    pub fn section(&mut self, key: &str, value: impl Into<Value>) {
        self.sections.insert(key.to_string(), value.into());
    }

    /// Append to an array-valued section.
    pub fn note(&mut self, key: &str, value: impl Into<Value>) {
        let slot = self.sections.entry(key.to_string()).or_insert_with(|| Value::Array(Vec::new()));
        if let Value::Array(items) = slot {
            items.push(value.into());
        }
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("suite".into(), json!(self.suite));
        out.insert("params".into(), Value::Object(self.params.clone()));
        out.insert("relations_total".into(), json!(self.relations_total));
        out.insert(
            "failures".into(),
            Value::Array(self.failures.iter().map(Failure::to_json).collect()),
        );
        out.insert("pass".into(), json!(self.pass()));
        for (k, v) in &self.sections {
            out.insert(k.clone(), v.clone());
        }
        Value::Object(out)
    }
}
