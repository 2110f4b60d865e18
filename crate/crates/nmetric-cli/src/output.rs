//! Report emission: JSON, or a text rendering that mirrors the JSON
//! field-for-field (one `path = value` line per leaf) so CI logs diff the
//! same way in either format.

use std::io::Write;
use std::path::PathBuf;

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

fn render_text_into(value: &Value, path: &str, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (key, sub) in map {
                let next = if path.is_empty() {
                    key.clone()
                } else {
                    format!("{path}.{key}")
                };
                render_text_into(sub, &next, out);
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str(&format!("{path} = []\n"));
            }
            for (i, sub) in items.iter().enumerate() {
                render_text_into(sub, &format!("{path}[{i}]"), out);
            }
        }
        leaf => {
            out.push_str(&format!("{path} = {leaf}\n"));
        }
    }
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report is valid JSON");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            render_text_into(value, "", &mut s);
            s
        }
    }
}

pub fn emit(value: &Value, format: Format, output: Option<&PathBuf>) -> std::io::Result<()> {
    let rendered = render(value, format);
    match output {
        Some(path) => std::fs::write(path, rendered),
        None => std::io::stdout().write_all(rendered.as_bytes()),
    }
}
