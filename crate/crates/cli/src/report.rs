//! Tabular results written as JSON or CSV.

use std::io::Write;
use std::str::FromStr;

use anyhow::Result;
use clap::ValueEnum;
use serde_json::{Map, Number, Value};

use crate::source::GraphSummary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Real(f64),
    Int(u64),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Real(x) => real(*x),
            Cell::Int(n) => Value::from(*n),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }

    fn to_field(&self) -> String {
        match self {
            Cell::Real(x) => format!("{x:.16e}"),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Real(x)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as u64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

pub type Record = Vec<(&'static str, Cell)>;

/// 17 significant digits, enough to round-trip any double.
fn real(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(Number::from_str(&format!("{x:.16e}")).expect("formatted float is valid JSON"))
    } else {
        Value::Null
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub graph: Option<GraphSummary>,
    pub edge_length: f64,
    pub results: Vec<Record>,
    /// Extra top-level JSON fields.
    pub extra: Vec<(&'static str, Value)>,
}

impl Report {
    pub fn new(graph: Option<GraphSummary>, edge_length: f64) -> Self {
        Report { graph, edge_length, results: Vec::new(), extra: Vec::new() }
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert(
            "graph".into(),
            self.graph.map_or(Value::Null, |g| {
                serde_json::json!({"V": g.vertices, "E": g.edges, "beta": g.beta, "bipartite": g.bipartite})
            }),
        );
        top.insert("L".into(), real(self.edge_length));
        let results = self
            .results
            .iter()
            .map(|r| Value::Object(r.iter().map(|(k, c)| (k.to_string(), c.to_json())).collect()))
            .collect();
        top.insert("results".into(), Value::Array(results));
        for (k, v) in &self.extra {
            top.insert(k.to_string(), v.clone());
        }
        Value::Object(top)
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json())?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                if let Some(first) = self.results.first() {
                    w.write_record(first.iter().map(|(k, _)| *k))?;
                }
                for r in &self.results {
                    w.write_record(r.iter().map(|(_, c)| c.to_field()))?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}
