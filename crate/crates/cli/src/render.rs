use equidouble_core::{Error, Result};
use serde_json::Value;

use crate::{Command, Format};

pub fn render(command: &Command, report: &Value, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(report).expect("json"))),
        Format::Text => {
            let mut out = String::new();
            text(report, "", &mut out);
            Ok(out)
        }
        Format::Csv => csv_table(command, report),
    }
}

fn text(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                text(x, &key, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                text(x, &format!("{prefix}[{i}]"), out);
            }
        }
        Value::Array(xs) => {
            let items: Vec<String> = xs.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}: [{}]\n", items.join(", ")));
        }
        _ => out.push_str(&format!("{prefix}: {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_table(command: &Command, report: &Value) -> Result<String> {
    let result = &report["result"];
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut write = |rec: Vec<String>| w.write_record(&rec).map_err(|e| Error::Parse(e.to_string()));
    match command {
        Command::Smatrix { .. } => {
            let labels: Vec<String> = strings(&result["labels"]);
            let mut header = vec![String::new()];
            header.extend(labels.iter().cloned());
            write(header)?;
            for (label, row) in labels.iter().zip(result["entries"].as_array().into_iter().flatten()) {
                let mut rec = vec![label.clone()];
                rec.extend(strings(row));
                write(rec)?;
            }
        }
        Command::Simples { .. } => {
            write(vec!["name".into(), "degree".into(), "dim".into()])?;
            for s in result["simples"].as_array().into_iter().flatten() {
                write(vec![scalar(&s["name"]), scalar(&s["degree"]), scalar(&s["dim"])])?;
            }
        }
        _ => return Err(Error::Usage("csv output is available for smatrix and simples".into())),
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().into_iter().flatten().map(scalar).collect()
}
