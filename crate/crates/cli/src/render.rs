use num_bigint::BigInt;
use serde_json::{json, Value};
use zplane::Element;

/// A command result in both output formats.
pub struct Output {
    pub text: String,
    pub json: Value,
}

#[derive(Debug, Clone, Copy)]
pub struct Style {
    pub color: bool,
}

impl Style {
    fn paint(&self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn yes_no(&self, b: bool) -> String {
        if b {
            self.paint("32", "yes")
        } else {
            self.paint("2", "no")
        }
    }

    pub fn bold(&self, s: &str) -> String {
        self.paint("1", s)
    }
}

pub fn int(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn element(e: &Element) -> Value {
    json!({
        "ring": e.kind().unit_symbol().to_string(),
        "x": int(e.x()),
        "y": int(e.y()),
        "text": e.to_string(),
    })
}

pub fn elements<'a>(es: impl IntoIterator<Item = &'a Element>) -> Value {
    Value::Array(es.into_iter().map(element).collect())
}

pub fn pair(p: &Option<(Element, Element)>) -> Value {
    match p {
        Some((a, b)) => json!([element(a), element(b)]),
        None => Value::Null,
    }
}

/// Aligned `label: value` lines.
pub fn fields(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let pad = width - k.chars().count();
        out.push_str(&format!("{k}:{} {v}\n", " ".repeat(pad)));
    }
    out
}

pub fn join(es: &[Element], sep: &str) -> String {
    es.iter().map(|e| format!("({e})")).collect::<Vec<_>>().join(sep)
}
