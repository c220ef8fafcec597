//! JSON document construction and the text/CSV renderings derived from it.

use std::io::Write;

use homdist::bounds::{format_significant, Estimate, SweepRow};
use homdist::{Rational, VertexMap};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

pub const SIGNIFICANT: usize = 6;

pub fn decimal(x: f64) -> String {
    format_significant(x, SIGNIFICANT)
}

fn integer<I: ToPrimitive + std::fmt::Display>(x: &I) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

/// Rational with both exact and decimal forms.
pub fn rational(x: &Rational) -> Value {
    json!({
        "num": integer(x.numer()),
        "den": integer(x.denom()),
        "exact": format!("{}/{}", x.numer(), x.denom()),
        "decimal": decimal(x.to_f64().unwrap_or(f64::NAN)),
    })
}

pub fn rationals(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rational).collect())
}

pub fn estimate(e: &Estimate) -> Value {
    json!({ "value": decimal(e.value), "provenance": e.provenance.as_str() })
}

pub fn map(m: &VertexMap) -> Value {
    json!(m.assignment())
}

pub const SWEEP_COLUMNS: [&str; 11] = [
    "family",
    "parameter",
    "r",
    "fj_k",
    "alpha",
    "alpha_provenance",
    "factor",
    "fj",
    "hastad_exact",
    "hastad",
    "fj_dominates",
];

/// One sweep row as strings, in [`SWEEP_COLUMNS`] order; JSON and CSV
/// share these cells.
pub fn sweep_cells(row: &SweepRow) -> Vec<String> {
    vec![
        row.family.name().to_string(),
        row.parameter.to_string(),
        row.r.map(|r| r.to_string()).unwrap_or_default(),
        row.fj_k.to_string(),
        decimal(row.alpha.value),
        row.alpha.provenance.as_str().to_string(),
        row.factor.to_string(),
        decimal(row.fj),
        row.hastad.exact.as_ref().map(ToString::to_string).unwrap_or_default(),
        decimal(row.hastad.value),
        row.fj_dominates().to_string(),
    ]
}

pub fn sweep_rows(rows: &[SweepRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                let cells = sweep_cells(row);
                let obj: Map<String, Value> = SWEEP_COLUMNS
                    .iter()
                    .zip(cells)
                    .map(|(k, v)| (k.to_string(), Value::String(v)))
                    .collect();
                Value::Object(obj)
            })
            .collect(),
    )
}

fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    let join = |key: &str| {
        if prefix.is_empty() {
            key.to_string()
        } else {
            format!("{prefix}.{key}")
        }
    };
    match value {
        Value::Object(obj) => {
            if let (Some(Value::String(exact)), Some(Value::String(dec))) = (obj.get("exact"), obj.get("decimal")) {
                out.push((prefix.to_string(), format!("{exact} ({dec})")));
                return;
            }
            for (k, v) in obj {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            out.push((prefix.to_string(), format!("[{}]", parts.join(", "))));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), v, out);
            }
        }
        other => out.push((prefix.to_string(), scalar_text(other))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Array(_) | Value::Object(_) => v.to_string(),
        other => other.to_string(),
    }
}

pub fn flattened(doc: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    flatten("", doc, &mut out);
    out
}

pub fn write_text(out: &mut impl Write, doc: &Value) -> std::io::Result<()> {
    let pairs = flattened(doc);
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in pairs {
        writeln!(out, "{k:<width$}  {v}")?;
    }
    Ok(())
}

pub fn write_csv(out: impl Write, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row)?;
    }
    writer.flush()
}

pub fn write_key_value_csv(out: impl Write, doc: &Value) -> std::io::Result<()> {
    let rows: Vec<Vec<String>> = flattened(doc).into_iter().map(|(k, v)| vec![k, v]).collect();
    write_csv(out, &["key", "value"], &rows)
}

pub fn write_table(out: &mut impl Write, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}
