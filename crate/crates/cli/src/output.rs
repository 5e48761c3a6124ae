use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use greedyconv::tables::Table;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

/// Tabular result plus the configuration that produced it.
pub struct Report {
    pub meta: Map<String, Value>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    /// Replaces the generic text rendering.
    pub text: Option<String>,
}

impl Report {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        let mut meta = Map::new();
        meta.insert("command".into(), json!(command));
        Report {
            meta,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            text: None,
        }
    }

    pub fn from_table(command: &str, table: Table) -> Self {
        let mut r = Report::new(command, &[]);
        r.columns = table.header;
        r.rows = table
            .rows
            .into_iter()
            .map(|row| row.into_iter().map(cell_value).collect())
            .collect();
        r
    }

    pub fn meta(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.meta.insert(key.into(), value.into());
        self
    }

    pub fn push(&mut self, row: Vec<Value>) {
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    fn to_json(&self) -> String {
        let mut meta = self.meta.clone();
        meta.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        let data: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .cloned()
                    .zip(row.iter().cloned())
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&json!({ "meta": meta, "data": data }))
            .expect("json values always serialize");
        out.push('\n');
        out
    }

    fn to_csv(&self) -> String {
        self.as_table().to_csv()
    }

    fn to_text(&self) -> String {
        if let Some(text) = &self.text {
            return text.clone();
        }
        if self.columns.len() == 1 {
            let cells: Vec<String> = self.rows.iter().map(|r| plain(&r[0])).collect();
            return format!("{}\n", cells.join(" "));
        }
        self.as_table().to_text()
    }

    fn as_table(&self) -> Table {
        Table {
            header: self.columns.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(plain).collect())
                .collect(),
        }
    }
}

/// Integers stay numbers in JSON; anything else is a string.
fn cell_value(cell: String) -> Value {
    match cell.parse::<i64>() {
        Ok(n) => json!(n),
        Err(_) => json!(cell),
    }
}

/// Cell text for CSV and plain output. Arrays are space separated.
pub fn plain(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// Relative output paths are placed under `default_dir` when it is set.
pub fn resolve_output(path: &Path, default_dir: Option<&Path>) -> PathBuf {
    match default_dir {
        Some(dir) if path.is_relative() => dir.join(path),
        _ => path.to_path_buf(),
    }
}

pub fn emit(text: &str, output: Option<&Path>) -> io::Result<()> {
    match output {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent)?;
            }
            fs::write(path, text)
        }
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}
