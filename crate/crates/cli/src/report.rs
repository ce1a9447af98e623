//! Report envelope and its JSON / CSV renderings.

use divdiff_core::rational::approx;
use divdiff_core::Rational;
use serde_json::{json, Map, Value};

/// Builds a results object. Rationals go in as `p/q` strings; with decimals
/// enabled each one also gets a `<key>_approx` sibling.
#[derive(Debug, Clone)]
pub struct Fields {
    map: Map<String, Value>,
    decimals: bool,
}

impl Fields {
    pub fn new(decimals: bool) -> Self {
        Fields {
            map: Map::new(),
            decimals,
        }
    }

    pub fn child(&self) -> Self {
        Fields::new(self.decimals)
    }

    pub fn rational(mut self, key: &str, q: &Rational) -> Self {
        self.map.insert(key.to_string(), Value::String(q.to_string()));
        if self.decimals {
            self.map.insert(format!("{key}_approx"), Value::String(approx(q)));
        }
        self
    }

    pub fn rationals<'a>(mut self, key: &str, qs: impl IntoIterator<Item = &'a Rational>) -> Self {
        let qs: Vec<&Rational> = qs.into_iter().collect();
        self.map.insert(
            key.to_string(),
            Value::Array(qs.iter().map(|q| Value::String(q.to_string())).collect()),
        );
        if self.decimals {
            self.map.insert(
                format!("{key}_approx"),
                Value::Array(qs.iter().map(|q| Value::String(approx(q))).collect()),
            );
        }
        self
    }

    pub fn value(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.map.insert(key.to_string(), v.into());
        self
    }

    pub fn rows(self, key: &str, rows: Vec<Fields>) -> Self {
        self.value(key, Value::Array(rows.into_iter().map(Fields::into_value).collect()))
    }

    pub fn into_value(self) -> Value {
        Value::Object(self.map)
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Value,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut fields = Map::new();
        collect_provenance(&self.results, "", &mut fields);
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "provenance": {
                "library": "divdiff-core",
                "version": divdiff_core::VERSION,
                "fields": fields,
            },
        })
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }

    /// One record per entry of `results.rows` when present (scalar results
    /// repeated as trailing columns), otherwise a single record.
    pub fn render_csv(&self) -> anyhow::Result<String> {
        let mut scalars: Vec<(String, String)> = Vec::new();
        let mut rows: Option<&Vec<Value>> = None;
        if let Value::Object(map) = &self.results {
            for (k, v) in map {
                match v {
                    Value::Array(items) if k == "rows" => rows = Some(items),
                    _ => flatten(k, v, &mut scalars),
                }
            }
        }
        let mut row_records: Vec<Vec<(String, String)>> = Vec::new();
        if let Some(items) = rows {
            for item in items {
                let mut rec = Vec::new();
                if let Value::Object(m) = item {
                    for (k, v) in m {
                        flatten(k, v, &mut rec);
                    }
                }
                row_records.push(rec);
            }
        }
        let mut header: Vec<String> = row_records
            .first()
            .map(|r| r.iter().map(|(k, _)| k.clone()).collect())
            .unwrap_or_default();
        header.extend(scalars.iter().map(|(k, _)| k.clone()));

        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&header)?;
        if row_records.is_empty() {
            row_records.push(Vec::new());
        }
        let row_width = header.len() - scalars.len();
        for rec in row_records {
            let mut out: Vec<String> = rec.into_iter().map(|(_, v)| v).collect();
            out.resize(row_width, String::new());
            out.extend(scalars.iter().map(|(_, v)| v.clone()));
            w.write_record(&out)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn flatten(key: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, inner) in m {
                flatten(&format!("{key}.{k}"), inner, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let joined: Vec<String> = items.iter().map(scalar_text).collect();
            out.push((key.to_string(), joined.join(";")));
        }
        Value::Array(items) => {
            for (i, inner) in items.iter().enumerate() {
                flatten(&format!("{key}.{i}"), inner, out);
            }
        }
        other => out.push((key.to_string(), scalar_text(other))),
    }
}

fn collect_provenance(v: &Value, prefix: &str, out: &mut Map<String, Value>) {
    match v {
        Value::Object(m) => {
            for (k, inner) in m {
                let path = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                match inner {
                    Value::Object(_) => collect_provenance(inner, &path, out),
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        let mut merged = Map::new();
                        for item in items {
                            collect_provenance(item, "", &mut merged);
                        }
                        for (ik, iv) in merged {
                            out.insert(format!("{path}[].{ik}"), iv);
                        }
                    }
                    _ => {
                        let kind = if k.ends_with("_approx") { "approx" } else { "exact" };
                        out.insert(path, Value::String(kind.into()));
                    }
                }
            }
        }
        _ => {
            out.insert(prefix.to_string(), Value::String("exact".into()));
        }
    }
}
