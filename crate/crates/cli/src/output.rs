//! Rendering of computed values in the supported output formats.

use std::fmt::Write as _;

use clap::ValueEnum;
use polybern::{IntPoly, Integer, Poly, Rational};
use serde_json::{json, Value as Json};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
    Markdown,
    Bfile,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(Integer),
    Rat(Rational),
    Poly(Poly),
    IntPoly(IntPoly),
}

impl Value {
    fn text(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Rat(v) => v.to_string(),
            Value::Poly(p) => p.to_string(),
            Value::IntPoly(p) => p.to_string(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Value::Int(_) | Value::Rat(_) => Json::String(self.text()),
            Value::Poly(p) => {
                json!({ "coeffs": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>() })
            }
            Value::IntPoly(p) => {
                json!({ "coeffs": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>() })
            }
        }
    }

    fn integer(&self) -> Option<Integer> {
        match self {
            Value::Int(v) => Some(v.clone()),
            Value::Rat(v) if v.is_integer() => Some(v.to_integer()),
            _ => None,
        }
    }
}

/// Shape of a command's result.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Single(Value),
    /// Values indexed by `label` from `start`.
    Sequence {
        label: &'static str,
        start: i64,
        values: Vec<Value>,
    },
    /// Rows indexed by `row_label` from `row_start`; columns from `col_start`.
    /// Rows may be ragged.
    Table {
        row_label: &'static str,
        col_label: &'static str,
        row_start: i64,
        col_start: i64,
        rows: Vec<Vec<Value>>,
    },
}

impl Output {
    pub fn render(&self, format: Format, offset: Option<i64>) -> Result<String, Failure> {
        let mut out = match format {
            Format::Plain => self.plain(),
            Format::Csv => self.csv(),
            Format::Json => self.json().to_string(),
            Format::Markdown => self.markdown(),
            Format::Bfile => self.bfile(offset)?,
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        Ok(out)
    }

    fn plain(&self) -> String {
        let join = |vs: &[Value]| vs.iter().map(Value::text).collect::<Vec<_>>().join(", ");
        match self {
            Output::Single(v) => v.text(),
            Output::Sequence { values, .. } => join(values),
            Output::Table { rows, .. } => {
                rows.iter().map(|r| join(r)).collect::<Vec<_>>().join("\n")
            }
        }
    }

    fn csv(&self) -> String {
        match self {
            Output::Single(v) => csv_cell(&v.text()),
            Output::Sequence {
                label,
                start,
                values,
            } => {
                let mut s = format!("{label},value\n");
                for (i, v) in values.iter().enumerate() {
                    let _ = writeln!(s, "{},{}", start + i as i64, csv_cell(&v.text()));
                }
                s
            }
            Output::Table {
                row_label,
                col_label,
                row_start,
                col_start,
                rows,
            } => {
                let width = rows.iter().map(Vec::len).max().unwrap_or(0);
                let mut s = format!("{row_label}\\{col_label}");
                for c in 0..width {
                    let _ = write!(s, ",{}", col_start + c as i64);
                }
                s.push('\n');
                for (i, row) in rows.iter().enumerate() {
                    let _ = write!(s, "{}", row_start + i as i64);
                    for v in row {
                        let _ = write!(s, ",{}", csv_cell(&v.text()));
                    }
                    s.push('\n');
                }
                s
            }
        }
    }

    fn json(&self) -> Json {
        match self {
            Output::Single(v) => v.json(),
            Output::Sequence {
                label,
                start,
                values,
            } => Json::Array(
                values
                    .iter()
                    .enumerate()
                    .map(|(i, v)| json!({ *label: start + i as i64, "value": v.json() }))
                    .collect(),
            ),
            Output::Table {
                row_label,
                col_label,
                row_start,
                col_start,
                rows,
            } => json!({
                "row": row_label,
                "column": col_label,
                "column_start": col_start,
                "rows": rows.iter().enumerate().map(|(i, row)| json!({
                    *row_label: row_start + i as i64,
                    "values": row.iter().map(Value::json).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            }),
        }
    }

    fn markdown(&self) -> String {
        match self {
            Output::Single(v) => format!("| value |\n|---|\n| {} |", v.text()),
            Output::Sequence {
                label,
                start,
                values,
            } => {
                let mut s = format!("| {label} | value |\n|---|---|\n");
                for (i, v) in values.iter().enumerate() {
                    let _ = writeln!(s, "| {} | {} |", start + i as i64, v.text());
                }
                s
            }
            Output::Table {
                row_label,
                col_label,
                row_start,
                col_start,
                rows,
            } => {
                let width = rows.iter().map(Vec::len).max().unwrap_or(0);
                let mut s = format!("| {row_label}\\{col_label} |");
                for c in 0..width {
                    let _ = write!(s, " {} |", col_start + c as i64);
                }
                s.push_str("\n|");
                for _ in 0..=width {
                    s.push_str("---|");
                }
                s.push('\n');
                for (i, row) in rows.iter().enumerate() {
                    let _ = write!(s, "| {} |", row_start + i as i64);
                    for c in 0..width {
                        match row.get(c) {
                            Some(v) => {
                                let _ = write!(s, " {} |", v.text());
                            }
                            None => s.push_str("  |"),
                        }
                    }
                    s.push('\n');
                }
                s
            }
        }
    }

    /// `index value` lines. Tables are flattened row by row.
    fn bfile(&self, offset: Option<i64>) -> Result<String, Failure> {
        let (start, values): (i64, Vec<&Value>) = match self {
            Output::Single(v) => (0, vec![v]),
            Output::Sequence { start, values, .. } => (*start, values.iter().collect()),
            Output::Table { rows, .. } => (0, rows.iter().flatten().collect()),
        };
        let start = offset.unwrap_or(start);
        let mut s = String::new();
        for (i, v) in values.into_iter().enumerate() {
            let n = v.integer().ok_or_else(|| {
                Failure::usage(format!(
                    "bfile output needs integer values, got {}",
                    v.text()
                ))
            })?;
            let _ = writeln!(s, "{} {}", start + i as i64, n);
        }
        Ok(s)
    }
}

fn csv_cell(text: &str) -> String {
    if text.contains([',', '"', ' ']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}
