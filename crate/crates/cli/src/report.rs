//! JSON/CSV rendering of command results.
//!
//! Every numeric field `x` is paired with a sibling `x_err`, holding either
//! an error estimate or the string `"exact"`.

use serde_json::{Map, Value};

/// Identifies the layout of JSON reports and CSV headers.
pub const SCHEMA: &str = "lensgeom-report/1";

/// Relative rounding bound reported for closed-form floating point values.
pub fn rounding_err(v: f64) -> f64 {
    8.0 * f64::EPSILON * v.abs().max(1.0)
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Fields(Map<String, Value>);

impl Fields {
    pub fn new() -> Self {
        Fields::default()
    }

    pub fn exact(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), v.into());
        self.0.insert(format!("{key}_err"), Value::from("exact"));
        self
    }

    pub fn approx(mut self, key: &str, v: f64, err: f64) -> Self {
        self.0.insert(key.to_string(), Value::from(v));
        self.0.insert(format!("{key}_err"), Value::from(err));
        self
    }

    /// A closed-form float, reported with [`rounding_err`].
    pub fn computed(self, key: &str, v: f64) -> Self {
        self.approx(key, v, rounding_err(v))
    }

    pub fn text(mut self, key: &str, v: impl Into<String>) -> Self {
        self.0.insert(key.to_string(), Value::from(v.into()));
        self
    }

    pub fn flag(mut self, key: &str, v: bool) -> Self {
        self.0.insert(key.to_string(), Value::from(v));
        self
    }

    pub fn nested(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), v.into());
        self
    }

    pub fn into_value(self) -> Value {
        Value::Object(self.0)
    }

    pub fn map(&self) -> &Map<String, Value> {
        &self.0
    }
}

impl From<Fields> for Value {
    fn from(f: Fields) -> Value {
        f.into_value()
    }
}

/// Result of one command: scalar outputs plus an optional table.
#[derive(Debug, Clone, Default)]
pub struct Output {
    pub method: &'static str,
    pub fields: Fields,
    pub rows: Option<Vec<Fields>>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub argv: Vec<String>,
    pub config: Fields,
    pub inputs: Fields,
    pub output: Output,
    pub wall_time: Option<f64>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut outputs = self.output.fields.clone();
        if let Some(rows) = &self.output.rows {
            outputs = outputs.nested("rows", Value::Array(rows.iter().cloned().map(Fields::into_value).collect()));
        }
        let mut top = Fields::new()
            .text("schema", SCHEMA)
            .text("command", self.command.clone())
            .nested("argv", self.argv.clone())
            .nested("config", self.config.clone())
            .nested("inputs", self.inputs.clone())
            .text("method", self.output.method)
            .nested("outputs", outputs);
        if let Some(t) = self.wall_time {
            top = top.approx("wall_time_s", t, 1e-6);
        }
        top.into_value()
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    /// Table rows when present, otherwise the scalar outputs as one row.
    pub fn render_csv(&self) -> String {
        let rows: Vec<&Fields> = match &self.output.rows {
            Some(rows) => rows.iter().collect(),
            None => vec![&self.output.fields],
        };
        let mut w = csv::Writer::from_writer(Vec::new());
        if let Some(first) = rows.first() {
            w.write_record(first.map().keys()).expect("in-memory write");
        }
        for row in rows {
            w.write_record(row.map().values().map(cell)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}
