use serde_json::{Map, Value};

use crate::CliError;

/// Named columns of equal length, rendered as CSV or as one JSON object.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    names: Vec<String>,
    columns: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(names: &[&str]) -> Self {
        Self {
            names: names.iter().map(|s| s.to_string()).collect(),
            columns: vec![Vec::new(); names.len()],
        }
    }

    pub fn push(&mut self, row: Vec<f64>) -> Result<(), CliError> {
        if row.len() != self.names.len() {
            return Err(CliError::Runtime(format!(
                "row has {} values for {} columns",
                row.len(),
                self.names.len()
            )));
        }
        for (col, v) in self.columns.iter_mut().zip(row) {
            col.push(v);
        }
        Ok(())
    }

    pub fn column(&self, i: usize) -> &[f64] {
        &self.columns[i]
    }

    pub fn insert_column(&mut self, at: usize, name: &str, values: Vec<f64>) {
        self.names.insert(at, name.to_string());
        self.columns.insert(at, values);
    }

    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, Vec::len)
    }

    /// Header line plus one row per sample, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = self.names.join(",");
        out.push('\n');
        for i in 0..self.rows() {
            let row: Vec<String> = self.columns.iter().map(|c| format!("{:.16e}", c[i])).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// `params` merged with a `columns` object of arrays.
    pub fn to_json(&self, params: Value) -> String {
        let mut obj = match params {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        let columns: Map<String, Value> = self
            .names
            .iter()
            .zip(&self.columns)
            .map(|(n, c)| (n.clone(), Value::from(c.clone())))
            .collect();
        obj.insert("columns".into(), Value::Object(columns));
        let mut s = Value::Object(obj).to_string();
        s.push('\n');
        s
    }
}
