use serde_json::{json, Map, Value};

/// Outcome of one named condition, with an optional witness on failure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: false,
            witness: Some(witness.into()),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, witness())
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("name".into(), json!(self.name));
        m.insert("pass".into(), json!(self.pass));
        if let Some(w) = &self.witness {
            m.insert("witness".into(), json!(w));
        }
        Value::Object(m)
    }
}

/// An ordered collection of checks.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `{condition: {"status": "pass"|"fail", "witness_monomial"?: …}}`
    pub fn to_condition_json(&self) -> Value {
        let mut m = Map::new();
        for c in &self.checks {
            let mut e = Map::new();
            e.insert("status".into(), json!(if c.pass { "pass" } else { "fail" }));
            if let Some(w) = &c.witness {
                e.insert("witness_monomial".into(), json!(w));
            }
            m.insert(c.name.clone(), Value::Object(e));
        }
        Value::Object(m)
    }
}
