//! Plain-text rendering of a JSON report, one `path: value` line per leaf.

use serde_json::Value;

pub fn render_human(v: &Value) -> String {
    let mut out = String::new();
    walk(v, "", &mut out);
    if out.is_empty() {
        out.push_str("(empty)\n");
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| matches!(i, Value::Number(_) | Value::String(_))) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn walk(v: &Value, path: &str, out: &mut String) {
    if let Some(s) = scalar(v) {
        let key = if path.is_empty() { "value" } else { path };
        out.push_str(&format!("{key}: {s}\n"));
        return;
    }
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str(&format!("{path}: []\n"));
            }
            for (i, item) in items.iter().enumerate() {
                walk(item, &join(&i.to_string()), out);
            }
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str(&format!("{path}: {{}}\n"));
            }
            for (k, item) in map {
                walk(item, &join(k), out);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flattens_nested_values() {
        let v = json!({"verdict": "fail", "witnesses": [{"vertices": [0, 1], "clause": "5/9"}]});
        assert_eq!(
            render_human(&v),
            "verdict: fail\nwitnesses.0.vertices: [0, 1]\nwitnesses.0.clause: 5/9\n"
        );
    }
}
