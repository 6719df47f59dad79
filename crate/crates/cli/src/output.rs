//! Table rendering. JSON is `{meta, rows}`; CSV carries the meta block as
//! `#` lines above the column header.

use std::io::Write;

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => Value::from(*i),
            // serde_json has no NaN; non-finite values become null
            Cell::Float(f) => serde_json::Number::from_f64(*f).map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(f) => format!("{f:e}"),
            Cell::Text(s) => csv_escape(s),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(i64::from(v))
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Ordered key/value provenance block.
#[derive(Debug, Clone, Default)]
pub struct Meta(Vec<(&'static str, Value)>);

impl Meta {
    pub fn push(&mut self, key: &'static str, value: impl Into<Value>) {
        self.0.push((key, value.into()));
    }

    pub fn opt<T: Into<Value>>(&mut self, key: &'static str, value: Option<T>) {
        self.0.push((key, value.map_or(Value::Null, Into::into)));
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

pub fn render(meta: &Meta, table: &Table, format: Format) -> String {
    match format {
        Format::Json => {
            let meta: Map<String, Value> = meta.0.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|r| {
                    Value::Object(
                        table
                            .columns
                            .iter()
                            .zip(r)
                            .map(|(c, cell)| (c.to_string(), cell.json()))
                            .collect(),
                    )
                })
                .collect();
            let mut doc = Map::new();
            doc.insert("meta".into(), Value::Object(meta));
            doc.insert("rows".into(), Value::Array(rows));
            let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::new();
            for (k, v) in &meta.0 {
                let v = match v {
                    Value::String(t) => t.clone(),
                    other => other.to_string(),
                };
                s.push_str(&format!("# {k}: {v}\n"));
            }
            s.push_str(&table.columns.join(","));
            s.push('\n');
            for r in &table.rows {
                let line: Vec<String> = r.iter().map(Cell::csv).collect();
                s.push_str(&line.join(","));
                s.push('\n');
            }
            s
        }
    }
}

pub fn emit(text: &str, path: Option<&std::path::Path>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> (Meta, Table) {
        let mut meta = Meta::default();
        meta.push("version", "0.1.0");
        meta.push("mu", 1.0);
        meta.opt::<f64>("omega", None);
        let mut t = Table::new(&["n", "energy", "note"]);
        t.push(vec![Cell::from(0u32), Cell::from(-8.0), Cell::from("a,b")]);
        (meta, t)
    }

    #[test]
    fn json_has_meta_and_rows_in_column_order() {
        let (m, t) = sample();
        let s = render(&m, &t, Format::Json);
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["meta"]["mu"], 1.0);
        assert!(v["meta"]["omega"].is_null());
        assert_eq!(v["rows"][0]["energy"], -8.0);
        let keys: Vec<_> = v["rows"][0].as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["n", "energy", "note"]);
    }

    #[test]
    fn csv_header_and_quoting() {
        let (m, t) = sample();
        let s = render(&m, &t, Format::Csv);
        let lines: Vec<_> = s.lines().collect();
        assert_eq!(lines[0], "# version: 0.1.0");
        assert_eq!(lines[2], "# omega: null");
        assert_eq!(lines[3], "n,energy,note");
        assert_eq!(lines[4], "0,-8e0,\"a,b\"");
    }

    #[test]
    fn non_finite_json_is_null() {
        assert_eq!(Cell::Float(f64::NAN).json(), Value::Null);
    }
}
