//! Two-column text tables for the default (non-JSON) output.

use serde_json::Value;

/// Renders `{num, den}` as `p/q` (or `p`) and group objects as `Z`, `Z_m`, `0`.
fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(m) if m.len() == 2 && m.contains_key("num") && m.contains_key("den") => {
            let (num, den) = (scalar(&m["num"])?, scalar(&m["den"])?);
            Some(if den == "1" { num } else { format!("{num}/{den}") })
        }
        Value::Object(m) => match m.get("kind").and_then(Value::as_str) {
            Some("trivial") => Some("0".into()),
            Some("free") => match m.get("rank").and_then(Value::as_u64) {
                Some(1) => Some("Z".into()),
                Some(r) => Some(format!("Z^{r}")),
                None => None,
            },
            Some("cyclic") => Some(format!("Z_{}", scalar(m.get("order")?)?)),
            _ => None,
        },
        Value::Array(_) => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    if let Some(s) = scalar(v) {
        rows.push((prefix.to_string(), s));
        return;
    }
    match v {
        Value::Object(m) => {
            for (k, child) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, child, rows);
            }
        }
        Value::Array(items) if items.iter().all(|x| x.is_string()) => {
            if items.is_empty() {
                rows.push((prefix.to_string(), "-".into()));
            }
            for item in items {
                rows.push((prefix.to_string(), item.as_str().unwrap_or_default().to_string()));
            }
        }
        Value::Array(items) => match items.iter().map(scalar).collect::<Option<Vec<_>>>() {
            Some(parts) => rows.push((prefix.to_string(), parts.join(","))),
            None => {
                for (i, item) in items.iter().enumerate() {
                    flatten(&format!("{prefix}[{i}]"), item, rows);
                }
            }
        },
        _ => unreachable!("scalars handled above"),
    }
}

/// Table of `value` with keys indented by `indent` spaces.
pub fn table(value: &Value, indent: usize) -> String {
    let mut rows = Vec::new();
    flatten("", value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let pad = width - k.chars().count();
        out.push_str(&format!("{:indent$}{k}{:pad$}  {v}\n", "", ""));
    }
    out
}
