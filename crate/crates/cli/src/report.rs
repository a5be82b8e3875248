//! Row-oriented reports rendered as aligned tables, CSV or JSON.

use std::fmt::Write as _;

use anyhow::Result;
use clap::ValueEnum;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Table => "txt",
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

pub type Row = Map<String, Value>;

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub rows: Vec<Row>,
    /// Keys left out of the aligned table (still present in CSV and JSON).
    pub table_hidden: Vec<&'static str>,
    /// Free text appended after the aligned table.
    pub table_appendix: String,
}

impl Report {
    pub fn new(command: &'static str, params: Map<String, Value>) -> Self {
        Report { command, params, rows: Vec::new(), table_hidden: Vec::new(), table_appendix: String::new() }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Table => Ok(self.render_table()),
            Format::Csv => render_csv(&self.rows),
            Format::Json => render_json(self.command, &self.params, &self.rows),
        }
    }

    fn render_table(&self) -> String {
        let columns: Vec<&String> = match self.rows.first() {
            Some(r) => r.keys().filter(|k| !self.table_hidden.contains(&k.as_str())).collect(),
            None => Vec::new(),
        };
        let cells: Vec<Vec<String>> =
            self.rows.iter().map(|r| columns.iter().map(|k| flatten(&r[k.as_str()])).collect()).collect();
        let mut out = aligned(&columns.iter().map(|c| c.to_string()).collect::<Vec<_>>(), &cells);
        out.push_str(&self.table_appendix);
        out
    }
}

/// Left-aligned fixed-width columns separated by two spaces.
pub fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for line in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let mut text = String::new();
        for (k, (cell, w)) in line.iter().zip(&widths).enumerate() {
            if k > 0 {
                text.push_str("  ");
            }
            let _ = write!(text, "{cell:<w$}");
        }
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

/// Scalar text for a cell; lists are joined with `;`, nested lists with `,`.
pub fn flatten(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(|x| match x {
                Value::Array(inner) => inner.iter().map(flatten).collect::<Vec<_>>().join(","),
                other => flatten(other),
            })
            .collect::<Vec<_>>()
            .join(";"),
        other => other.to_string(),
    }
}

pub fn render_csv(rows: &[Row]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::Always).from_writer(Vec::new());
    if let Some(first) = rows.first() {
        w.write_record(first.keys())?;
        for r in rows {
            w.write_record(first.keys().map(|k| r.get(k).map(flatten).unwrap_or_default()))?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn render_json(command: &str, params: &Map<String, Value>, rows: &[Row]) -> Result<String> {
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "rows": rows,
    });
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    Ok(text)
}
