//! Output records and their three renderings.
//!
//! Every command builds a `serde_json::Value`. Floats enter through [`real`],
//! which fixes them at 17 significant digits, so the JSON rendering is
//! byte-identical across runs with the same inputs.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Human,
}

/// `x` printed with `digits` significant digits, positional when the
/// exponent is moderate and scientific otherwise.
pub fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if !(-5..17).contains(&exp) {
        return sci;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let all: String = mantissa.chars().filter(|c| *c != '.').collect();
    if exp >= 0 {
        let cut = exp as usize + 1;
        let (int, frac) = if cut < all.len() { all.split_at(cut) } else { (all.as_str(), "") };
        let pad = "0".repeat(cut.saturating_sub(all.len()));
        let frac = if frac.is_empty() { "0" } else { frac };
        format!("{sign}{int}{pad}.{frac}")
    } else {
        format!("{sign}0.{}{all}", "0".repeat((-exp - 1) as usize))
    }
}

/// A JSON number at 17 significant digits; non-finite values become `null`.
pub fn real(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(Number::from_str(&significant(x, 17)).expect("formatted float is valid JSON"))
}

/// Exact integer of any width.
pub fn integer(x: u128) -> Value {
    Value::Number(Number::from_str(&x.to_string()).unwrap())
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).unwrap();
            s.push('\n');
            s
        }
        Format::Tsv => tsv(value),
        Format::Human => {
            let mut out = String::new();
            human(value, 0, &mut out);
            out
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "NA".to_string(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(",")
        }
        other => other.to_string(),
    }
}

// a `rows` array becomes the table; otherwise one `key<TAB>value` line per field
fn tsv(value: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = value else {
        return format!("{}\n", cell(value));
    };
    if let Some(Value::Array(rows)) = map.get("rows") {
        if let Some(Value::Object(first)) = rows.first() {
            let keys: Vec<&String> = first.keys().collect();
            out.push_str(&keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join("\t"));
            out.push('\n');
            for row in rows {
                let line: Vec<String> = keys.iter().map(|k| row.get(k.as_str()).map_or(String::new(), cell)).collect();
                out.push_str(&line.join("\t"));
                out.push('\n');
            }
            return out;
        }
    }
    flatten("", map, &mut out);
    out
}

fn flatten(prefix: &str, map: &Map<String, Value>, out: &mut String) {
    for (k, v) in map {
        let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(inner) => flatten(&key, inner, out),
            _ => writeln!(out, "{key}\t{}", cell(v)).unwrap(),
        }
    }
}

fn human(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        human(v, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        for item in items {
                            writeln!(out, "{pad}  -").unwrap();
                            human(item, indent + 2, out);
                        }
                    }
                    _ => writeln!(out, "{pad}{k}: {}", cell(v)).unwrap(),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                human(item, indent, out);
            }
        }
        other => writeln!(out, "{pad}{}", cell(other)).unwrap(),
    }
}
