use serde_json::{Map, Number, Value};

use crate::args::Format;

/// Rounds every float to 4 decimals.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or(0.0);
            Number::from_f64((x * 1e4).round() / 1e4).map_or(Value::Null, Value::Number)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(o) => {
            Value::Object(o.into_iter().map(|(k, v)| (k, round_floats(v))).collect())
        }
        other => other,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_f64() => format!("{:.4}", n.as_f64().unwrap_or(0.0)),
        other => other.to_string(),
    }
}

/// One `key: value` line per field; nested values as compact JSON.
fn text(map: &Map<String, Value>) -> String {
    map.iter()
        .map(|(k, v)| format!("{k}: {}\n", scalar(v)))
        .collect()
}

fn csv(map: &Map<String, Value>) -> String {
    let mut out = String::from("key,value\n");
    for (k, v) in map {
        let s = scalar(v);
        if s.contains([',', '"', '\n']) {
            out.push_str(&format!("{k},\"{}\"\n", s.replace('"', "\"\"")));
        } else {
            out.push_str(&format!("{k},{s}\n"));
        }
    }
    out
}

pub fn render(value: Value, format: Format) -> String {
    let value = round_floats(value);
    match (&value, format) {
        (Value::Object(map), Format::Text) => text(map),
        (Value::Object(map), Format::Csv) => csv(map),
        _ => {
            let mut s = serde_json::to_string_pretty(&value).unwrap_or_default();
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders() {
        let v = json!({"exponent": 1.544503, "ok": true, "set": [1, 2]});
        assert_eq!(
            render(v.clone(), Format::Text),
            "exponent: 1.5445\nok: true\nset: [1,2]\n"
        );
        assert_eq!(
            render(v.clone(), Format::Csv),
            "key,value\nexponent,1.5445\nok,true\nset,\"[1,2]\"\n"
        );
        assert!(render(v, Format::Json).contains("\"exponent\": 1.5445"));
    }
}
