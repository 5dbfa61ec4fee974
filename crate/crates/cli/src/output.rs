//! Result records and their two renderings. A record is an ordered list of
//! fields; text output prints `key: value` lines (or an aligned table for
//! several rows), json-lines prints one object per record with the same keys
//! in the same order.

use std::io::{self, Write};

use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    JsonLines,
}

#[derive(Clone, Debug, Default)]
pub struct Record {
    fields: Vec<(String, Value)>,
}

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.to_string(), value.into()));
    }

    fn json(&self) -> String {
        let body: Vec<String> = self
            .fields
            .iter()
            .map(|(k, v)| format!("{}:{}", Value::from(k.as_str()), v))
            .collect();
        format!("{{{}}}", body.join(","))
    }
}

/// What a command prints.
pub enum Output {
    /// One record.
    Record(Record),
    /// Rows sharing a column set, followed by an optional summary record.
    Table(Vec<Record>, Option<Record>),
    /// Verbatim text (graph files, model files).
    Raw(String),
}

/// Text form of a value inside a single record.
fn text(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "-".into(),
        Value::Array(items) => items
            .iter()
            .map(|i| match i {
                Value::Array(_) => format!("{{{}}}", text(i)),
                other => text(other),
            })
            .collect::<Vec<_>>()
            .join(","),
        other => other.to_string(),
    }
}

/// Arrays under these keys are printed one element per line.
const LINE_FIELDS: [&str; 1] = ["trace"];

fn write_record(out: &mut dyn Write, r: &Record) -> io::Result<()> {
    for (k, v) in &r.fields {
        if let (true, Value::Array(lines)) = (LINE_FIELDS.contains(&k.as_str()), v) {
            writeln!(out, "{k}:")?;
            for l in lines {
                writeln!(out, "  {}", text(l))?;
            }
        } else {
            writeln!(out, "{k}: {}", text(v))?;
        }
    }
    Ok(())
}

fn write_table(out: &mut dyn Write, rows: &[Record]) -> io::Result<()> {
    let Some(first) = rows.first() else { return Ok(()) };
    let header: Vec<&str> = first.fields.iter().map(|(k, _)| k.as_str()).collect();
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.fields.iter().map(|(_, v)| text(v)).collect()).collect();
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (i, c) in row.iter().enumerate() {
            if i < width.len() {
                width[i] = width[i].max(c.len());
            }
        }
    }
    let line = |items: Vec<&str>| -> String {
        let mut s = String::new();
        for (i, c) in items.iter().enumerate() {
            if i + 1 == items.len() {
                s.push_str(c);
            } else {
                s.push_str(&format!("{c:<w$}  ", w = width.get(i).copied().unwrap_or(0)));
            }
        }
        s.trim_end().to_string()
    };
    writeln!(out, "{}", line(header.clone()))?;
    for row in &cells {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

pub fn emit(out: &mut dyn Write, output: &Output, format: OutputFormat) -> io::Result<()> {
    match (output, format) {
        (Output::Raw(s), _) => out.write_all(s.as_bytes()),
        (Output::Record(r), OutputFormat::Text) => write_record(out, r),
        (Output::Record(r), OutputFormat::JsonLines) => writeln!(out, "{}", r.json()),
        (Output::Table(rows, summary), OutputFormat::Text) => {
            write_table(out, rows)?;
            if let Some(s) = summary {
                writeln!(out)?;
                write_record(out, s)?;
            }
            Ok(())
        }
        (Output::Table(rows, summary), OutputFormat::JsonLines) => {
            for r in rows.iter().chain(summary) {
                writeln!(out, "{}", r.json())?;
            }
            Ok(())
        }
    }
}
