use std::io::{self, Write};

use afdim_core::OrderReport;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy)]
pub enum Format {
    Json,
    Table,
}

/// Compact rendering of a JSON value for a table cell.
fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) if m.get("finite") == Some(&Value::Bool(false)) => "inf".into(),
        Value::Object(m) if m.len() == 1 && m.contains_key("above_cap") => {
            format!(">{}", m["above_cap"])
        }
        other => other.to_string(),
    }
}

fn print(text: &str) {
    let mut out = io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = out.write_all(text.as_bytes());
}

pub fn single<T: Serialize>(fmt: Format, report: &T) {
    match fmt {
        Format::Json => {
            let json = serde_json::to_string(report).expect("reports always serialize");
            print(&format!("{json}\n"));
        }
        Format::Table => {
            let value = serde_json::to_value(report).expect("reports always serialize");
            let Value::Object(map) = value else {
                print(&format!("{}\n", cell(&value)));
                return;
            };
            let width = map.keys().map(String::len).max().unwrap_or(0);
            let mut text = String::new();
            for (key, v) in &map {
                text.push_str(&format!("{key:<width$}  {}\n", cell(v)));
            }
            print(&text);
        }
    }
}

const SWEEP_COLUMNS: [&str; 9] = [
    "n",
    "r",
    "d",
    "af_dim",
    "dedekind",
    "gpvd",
    "lapvd",
    "locally_conducive",
    "taf",
];

pub fn sweep(fmt: Format, reports: &[OrderReport]) {
    match fmt {
        Format::Json => print(&afdim_core::classify::to_json_lines(reports)),
        Format::Table => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    let v = serde_json::to_value(r).expect("reports always serialize");
                    SWEEP_COLUMNS.iter().map(|c| cell(&v[*c])).collect()
                })
                .collect();
            let widths: Vec<usize> = SWEEP_COLUMNS
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    rows.iter()
                        .map(|r| r[i].len())
                        .chain([c.len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: &[String]| -> String {
                let parts: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:>w$}"))
                    .collect();
                parts.join("  ") + "\n"
            };
            let mut text = line(&SWEEP_COLUMNS.map(String::from));
            for r in &rows {
                text.push_str(&line(r));
            }
            print(&text);
        }
    }
}
