//! Machine-readable row emission shared by the CLI commands.
//!
//! All floating-point values are rounded to 9 significant digits before
//! emission, so parsing the output back reproduces the printed numbers
//! bit-exactly in both CSV and JSON.

use serde_json::{json, Value};

/// One emitted value.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Str(String),
    Empty,
}

impl Cell {
    pub fn str(s: impl Into<String>) -> Self {
        Cell::Str(s.into())
    }
}

/// Round to 9 significant decimal digits.
pub fn round_sig9(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.8e}").parse().unwrap()
}

/// Fixed 9-significant-digit decimal formatting used for CSV.
pub fn fmt_sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{x:.8e}")
}

/// Self-describing row set: named parameters plus a rectangular table.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub params: Vec<(String, Cell)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            params: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn param(&mut self, name: &str, value: Cell) -> &mut Self {
        self.params.push((name.to_string(), value));
        self
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    fn cell_csv(cell: &Cell) -> String {
        match cell {
            Cell::Int(i) => i.to_string(),
            Cell::Num(x) => fmt_sig9(*x),
            Cell::Str(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn cell_json(cell: &Cell) -> Value {
        match cell {
            Cell::Int(i) => json!(i),
            Cell::Num(x) => json!(round_sig9(*x)),
            Cell::Str(s) => json!(s),
            Cell::Empty => Value::Null,
        }
    }

    /// Header row plus comma-separated cells, LF line endings. Parameters are
    /// not emitted separately: every command echoes them as row columns.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Self::cell_csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// One top-level object with `params` and `rows` arrays; numbers are JSON
    /// numbers, never strings.
    pub fn to_json(&self) -> String {
        let params: Vec<Value> = self
            .params
            .iter()
            .map(|(k, v)| json!({"name": k, "value": Self::cell_json(v)}))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| Value::Array(row.iter().map(Self::cell_json).collect()))
            .collect();
        let doc = json!({
            "params": params,
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).unwrap();
        s.push('\n');
        s
    }
}
