//! One result, rendered as an aligned table, JSON or CSV.

use serde_json::{json, Map, Value};

use crate::args::Format;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    /// An exact value: quoted in CSV.
    Exact(String),
    /// A float or plain integer: bare in CSV.
    Number(String),
}

impl Cell {
    fn text(&self) -> &str {
        match self {
            Cell::Exact(s) | Cell::Number(s) => s,
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Exact(s) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Number(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Body {
    /// One row per index; `columns` names the value columns.
    Table {
        index: &'static str,
        columns: Vec<String>,
        rows: Vec<(String, Vec<Cell>)>,
    },
    /// Named scalar results.
    Fields(Vec<(&'static str, Cell)>),
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    /// Precision of every float in the body; `None` when all values are exact.
    pub precision: Option<u32>,
    pub body: Body,
    /// Extra top-level JSON fields.
    pub extra: Map<String, Value>,
    /// Closing lines of the table rendering.
    pub notes: Vec<String>,
    /// Replaces the table rendering entirely.
    pub plain: Option<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, params: Value, precision: Option<u32>, body: Body) -> Self {
        let params = match params {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        Report {
            command: command.into(),
            params,
            precision,
            body,
            extra: Map::new(),
            notes: Vec::new(),
            plain: None,
        }
    }

    pub fn extra(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.notes.push(line.into());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json()).expect("plain JSON values");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
        }
    }

    fn header(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", plain_value(v))).collect();
        let mut h = format!("# {}", self.command);
        if !params.is_empty() {
            h.push(' ');
            h.push_str(&params.join(" "));
        }
        match self.precision {
            Some(p) => h.push_str(&format!(" precision={p}")),
            None => h.push_str(" exact"),
        }
        h
    }

    fn table(&self) -> String {
        if let Some(p) = &self.plain {
            return format!("{p}\n");
        }
        let mut out = self.header();
        out.push('\n');
        match &self.body {
            Body::Table { index, columns, rows } => {
                let mut widths: Vec<usize> = std::iter::once(index.chars().count())
                    .chain(columns.iter().map(|c| c.chars().count()))
                    .collect();
                for (i, cells) in rows {
                    widths[0] = widths[0].max(i.chars().count());
                    for (w, c) in widths[1..].iter_mut().zip(cells) {
                        *w = (*w).max(c.text().chars().count());
                    }
                }
                let line = |first: &str, rest: Vec<&str>| -> String {
                    let mut parts = vec![pad(first, widths[0])];
                    parts.extend(rest.iter().zip(&widths[1..]).map(|(s, &w)| pad(s, w)));
                    parts.join("  ").trim_end().to_string()
                };
                out.push_str(&line(index, columns.iter().map(String::as_str).collect()));
                out.push('\n');
                for (i, cells) in rows {
                    out.push_str(&line(i, cells.iter().map(Cell::text).collect()));
                    out.push('\n');
                }
            }
            Body::Fields(fields) => {
                let w = fields.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                for (k, v) in fields {
                    out.push_str(&format!("{}  {}\n", pad(k, w), v.text()));
                }
            }
        }
        for n in &self.notes {
            out.push_str(n);
            out.push('\n');
        }
        out
    }

    pub fn json(&self) -> Value {
        let values = match &self.body {
            Body::Table { index, columns, rows } => {
                if columns.len() == 1 {
                    Value::Array(rows.iter().map(|(_, c)| Value::String(c[0].text().to_string())).collect())
                } else {
                    Value::Array(
                        rows.iter()
                            .map(|(i, cells)| {
                                let mut m = Map::new();
                                m.insert(index.to_string(), Value::String(i.clone()));
                                for (name, c) in columns.iter().zip(cells) {
                                    m.insert(name.clone(), Value::String(c.text().to_string()));
                                }
                                Value::Object(m)
                            })
                            .collect(),
                    )
                }
            }
            Body::Fields(fields) => Value::Object(
                fields
                    .iter()
                    .map(|(k, v)| (k.to_string(), Value::String(v.text().to_string())))
                    .collect(),
            ),
        };
        let mut top = Map::new();
        top.insert("command".into(), json!(self.command));
        top.insert("params".into(), Value::Object(self.params.clone()));
        top.insert("precision".into(), json!(self.precision));
        if let Body::Table { index, rows, columns } = &self.body {
            if columns.len() == 1 {
                top.insert(
                    "index".into(),
                    json!({"name": index, "values": rows.iter().map(|(i, _)| i.clone()).collect::<Vec<_>>()}),
                );
            }
        }
        top.insert("values".into(), values);
        for (k, v) in &self.extra {
            top.insert(k.clone(), v.clone());
        }
        Value::Object(top)
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        if let Some(p) = self.precision {
            out.push_str(&format!("# precision={p}\n"));
        }
        match &self.body {
            Body::Table { index, columns, rows } => {
                let header: Vec<&str> = std::iter::once(*index).chain(columns.iter().map(String::as_str)).collect();
                out.push_str(&header.join(","));
                out.push('\n');
                for (i, cells) in rows {
                    let row: Vec<String> = std::iter::once(i.clone()).chain(cells.iter().map(Cell::csv)).collect();
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
            }
            Body::Fields(fields) => {
                out.push_str("name,value\n");
                for (k, v) in fields {
                    out.push_str(&format!("{k},{}\n", v.csv()));
                }
            }
        }
        out
    }
}

fn pad(s: &str, w: usize) -> String {
    let n = s.chars().count();
    format!("{s}{}", " ".repeat(w.saturating_sub(n)))
}

fn plain_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
