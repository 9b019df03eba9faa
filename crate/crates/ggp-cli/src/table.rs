//! Tabular output in the three supported formats.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::Value;

/// Output format of every verb.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned text columns under a header line.
    #[default]
    Pretty,
    /// One JSON object per row, one row per line.
    Json,
    /// Comma-separated values with a header line.
    Csv,
}

/// A table with named columns; rows are kept in insertion order, which the
/// verbs make canonical.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

fn cell_text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Table {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width matches the header");
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Pretty => self.render_pretty(),
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_pretty(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(cell_text).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| cells.iter().map(|r| r[i].chars().count()).chain([self.columns[i].len()]).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        let mut line = |fields: Vec<&str>| {
            let padded: Vec<String> =
                fields.iter().zip(&widths).map(|(f, w)| format!("{f:<w$}", w = *w)).collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(self.columns.clone());
        for row in &cells {
            line(row.iter().map(String::as_str).collect());
        }
        out
    }

    fn render_json(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let object: serde_json::Map<String, Value> =
                self.columns.iter().map(|c| c.to_string()).zip(row.iter().cloned()).collect();
            let _ = writeln!(out, "{}", Value::Object(object));
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.columns).expect("writing to memory");
        for row in &self.rows {
            writer.write_record(row.iter().map(cell_text)).expect("writing to memory");
        }
        String::from_utf8(writer.into_inner().expect("flushing to memory")).expect("csv output is UTF-8")
    }
}
