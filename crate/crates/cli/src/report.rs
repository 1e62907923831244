//! Report serialisation. Field order is fixed and nothing run-dependent is
//! written unless timings were requested.

use std::fmt::Write as _;

use crate::suite::CaseReport;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

fn joined(map: &indexmap::IndexMap<String, String>) -> String {
    map.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn emit(reports: &[CaseReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialise");
            s.push('\n');
            s
        }
        Format::Csv => csv_report(reports),
        Format::Text => text_report(reports),
    }
}

fn csv_report(reports: &[CaseReport]) -> String {
    let timed = reports.iter().any(|r| r.wall_ms.is_some());
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![
        "name",
        "kind",
        "status",
        "values",
        "expected",
        "error",
        "provenance",
    ];
    if timed {
        header.push("wall_ms");
    }
    w.write_record(&header).expect("in-memory write");
    for r in reports {
        let mut row = vec![
            r.name.clone(),
            r.kind.as_str().to_string(),
            r.status.as_str().to_string(),
            joined(&r.values),
            joined(&r.expected),
            r.error.clone().unwrap_or_default(),
            r.provenance.clone().unwrap_or_default(),
        ];
        if timed {
            row.push(r.wall_ms.map(|t| t.to_string()).unwrap_or_default());
        }
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn text_report(reports: &[CaseReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = write!(
            out,
            "{:<13} {} [{}]",
            r.status.as_str().to_uppercase(),
            r.name,
            r.kind.as_str()
        );
        if !r.values.is_empty() {
            let _ = write!(out, " {}", joined(&r.values).replace(';', " "));
        }
        if let Some(t) = r.wall_ms {
            let _ = write!(out, " ({t} ms)");
        }
        out.push('\n');
        if let Some(e) = &r.error {
            let _ = writeln!(out, "    {e}");
        }
    }
    let passed = reports
        .iter()
        .filter(|r| r.status == crate::suite::Status::Pass)
        .count();
    let _ = writeln!(out, "{passed} of {} cases passed", reports.len());
    out
}
