use serde_json::{json, Value};

use crate::exactlin::{Field, Scalar};
use crate::report::Report;

pub const REPORT_SCHEMA: &str = "phopf-report/1";

/// Indented JSON with arrays of scalars kept on one line.
pub fn pretty_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && (!i.is_array() || is_flat_leaf(i))),
        _ => false,
    }
}

fn is_flat_leaf(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()))
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, val)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(val, indent + 1, out);
                if k + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && !items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                if is_flat(item) || is_flat_leaf(item) {
                    out.push_str(&item.to_string());
                } else {
                    write_value(item, indent + 1, out);
                }
                if k + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

/// Witness values reinterpreted in `field`, so both renderings print canonical representatives.
pub fn normalized(r: &Report, field: Field) -> Report {
    let mut r = r.clone();
    for a in &mut r.axioms {
        for w in &mut a.witnesses {
            w.lhs = w.lhs.map_values(|s| s.in_field(field));
            w.rhs = w.rhs.map_values(|s| s.in_field(field));
        }
    }
    r
}

fn dense(v: &crate::exactlin::Vector) -> Vec<String> {
    v.to_dense().iter().map(Scalar::to_exact_string).collect()
}

/// The machine-readable form of a report on the object `name`.
pub fn report_value(name: &str, r: &Report, field: Field) -> Value {
    let r = normalized(r, field);
    let axioms: Vec<Value> = r
        .axioms
        .iter()
        .map(|a| {
            let witnesses: Vec<Value> = a
                .witnesses
                .iter()
                .map(|w| json!({"tuple": w.tuple, "labels": w.labels, "lhs": dense(&w.lhs), "rhs": dense(&w.rhs)}))
                .collect();
            json!({
                "name": a.name,
                "passed": a.passed(),
                "checked": a.checked,
                "failures": a.failures,
                "witnesses": witnesses,
            })
        })
        .collect();
    json!({
        "name": name,
        "object": r.object,
        "field": field.to_string(),
        "passed": r.passed(),
        "axioms": axioms,
        "flags": r.flags,
        "dims": r.dims,
        "notes": r.notes,
    })
}

/// Output format of reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Renders reports on named objects; JSON output is a single versioned document.
pub fn render_reports(reports: &[(String, Report)], field: Field, format: Format) -> String {
    match format {
        Format::Json => {
            let items: Vec<Value> = reports.iter().map(|(n, r)| report_value(n, r, field)).collect();
            pretty_json(&json!({"schema": REPORT_SCHEMA, "reports": items}))
        }
        Format::Text => {
            let mut out = String::new();
            for (name, r) in reports {
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                out.push_str(&format!("== {name} [{field}]: {verdict}\n"));
                out.push_str(&normalized(r, field).to_string());
            }
            out
        }
    }
}
