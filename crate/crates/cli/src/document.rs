//! Matrix documents on disk: JSON with string scalar literals, or CSV for real
//! matrices.

use std::fs;
use std::io::Read;
use std::path::Path;

use ginv_core::{ExactMatrix, ExactScalar};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::decimal::render_decimal;
use crate::literal::parse_scalar;
use crate::CliError;

#[derive(Debug, Deserialize)]
struct InputDocument {
    #[serde(default)]
    #[allow(dead_code)]
    name: Option<String>,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Value>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixDocument {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub denominator: Option<String>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

/// How scalars are written out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Render {
    Exact,
    Decimal(usize),
}

impl Render {
    pub fn scalar(self, z: &ExactScalar) -> String {
        match self {
            Render::Exact => z.to_string(),
            Render::Decimal(k) => render_decimal(z, k),
        }
    }

    pub fn matrix(self, m: &ExactMatrix) -> MatrixDocument {
        let entries = (1..=m.rows())
            .map(|i| (1..=m.cols()).map(|j| self.scalar(m.entry(i, j))).collect())
            .collect();
        MatrixDocument {
            name: None,
            rows: m.rows(),
            cols: m.cols(),
            entries,
            denominator: None,
            extra: Map::new(),
        }
    }
}

fn input(what: &str, detail: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{what}: {detail}"))
}

fn read_source(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input("stdin", e))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| input(&path.display().to_string(), e))
}

/// Reads a matrix from `path`; `-` is standard input (JSON). Files ending in
/// `.csv` are read as headerless CSV and must be real.
pub fn load_matrix(path: &Path) -> Result<ExactMatrix, CliError> {
    let text = read_source(path)?;
    let label = path.display().to_string();
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        parse_csv(&text).map_err(|e| input(&label, e))
    } else {
        parse_json(&text).map_err(|e| input(&label, e))
    }
}

fn cell(v: &Value, i: usize, j: usize) -> Result<ExactScalar, String> {
    match v {
        Value::String(s) => parse_scalar(s).map_err(|e| format!("entry ({i},{j}): {e}")),
        Value::Number(n) => n
            .as_i64()
            .map(ExactScalar::from_int)
            .ok_or_else(|| format!("entry ({i},{j}): non-integer number {n}; write it as a string literal")),
        other => Err(format!("entry ({i},{j}): expected a string literal, got {other}")),
    }
}

pub fn parse_json(text: &str) -> Result<ExactMatrix, String> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if doc.entries.len() != doc.rows {
        return Err(format!("\"rows\" is {} but {} rows are given", doc.rows, doc.entries.len()));
    }
    let mut entries = Vec::with_capacity(doc.rows * doc.cols);
    for (i, row) in doc.entries.iter().enumerate() {
        if row.len() != doc.cols {
            return Err(format!("row {} has {} entries, \"cols\" is {}", i + 1, row.len(), doc.cols));
        }
        for (j, v) in row.iter().enumerate() {
            entries.push(cell(v, i + 1, j + 1)?);
        }
    }
    ExactMatrix::new(doc.rows, doc.cols, entries).map_err(|e| e.to_string())
}

pub fn parse_csv(text: &str) -> Result<ExactMatrix, String> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| e.to_string())?;
        let mut row = Vec::with_capacity(record.len());
        for (j, field) in record.iter().enumerate() {
            let z = parse_scalar(field).map_err(|e| format!("entry ({},{}): {e}", i + 1, j + 1))?;
            if !z.is_real() {
                return Err(format!("entry ({},{}): CSV input must be real", i + 1, j + 1));
            }
            row.push(z);
        }
        rows.push(row);
    }
    ExactMatrix::from_rows(rows).map_err(|e| e.to_string())
}
