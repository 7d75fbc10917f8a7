//! Plain-text rendering of JSON results.

use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_row(v: &Value) -> bool {
    v.as_array()
        .is_some_and(|r| r.iter().all(|x| !x.is_array() && !x.is_object()))
}

fn grid(rows: &[Value], indent: &str, out: &mut String) {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(scalar).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    for r in cells {
        let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&format!("{indent}{}\n", line.join(" ")));
    }
}

fn render(v: &Value, indent: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, x) in map {
                match x {
                    Value::Array(rows) if !rows.is_empty() && rows.iter().all(is_row) => {
                        out.push_str(&format!("{indent}{k}:\n"));
                        grid(rows, &format!("{indent}  "), out);
                    }
                    Value::Object(_) | Value::Array(_) if !is_row(x) => {
                        out.push_str(&format!("{indent}{k}:\n"));
                        render(x, &format!("{indent}  "), out);
                    }
                    _ if is_row(x) => {
                        let items: Vec<String> = x.as_array().unwrap().iter().map(scalar).collect();
                        out.push_str(&format!("{indent}{k:<width$}  {}\n", items.join(" ")));
                    }
                    _ => out.push_str(&format!("{indent}{k:<width$}  {}\n", scalar(x))),
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                out.push_str(&format!("{indent}[{i}]\n"));
                render(x, &format!("{indent}  "), out);
            }
        }
        other => out.push_str(&format!("{indent}{}\n", scalar(other))),
    }
}

pub fn to_table(v: &Value) -> String {
    let mut out = String::new();
    render(v, "", &mut out);
    out
}
