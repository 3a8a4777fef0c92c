//! Machine-readable renderings of verification runs.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog::VerificationResult;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Some(Format::Json),
            "csv" => Some(Format::Csv),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub id: String,
    pub variant: usize,
    pub params: String,
    pub status: String,
    /// None when the run errored before any residual existed.
    pub residual_log10: Option<i64>,
    pub residual_mantissa: Option<String>,
    pub seconds: f64,
}

impl From<&VerificationResult> for Row {
    fn from(r: &VerificationResult) -> Self {
        let chosen = r.chosen();
        Row {
            id: r.id.clone(),
            variant: r.variant,
            params: r.params_string(),
            status: r.status.as_str().to_string(),
            residual_log10: chosen.map(|o| o.residual.log10),
            residual_mantissa: chosen.map(|o| o.residual.mantissa.clone()),
            // millisecond resolution keeps the files readable
            seconds: (r.seconds * 1000.0).round() / 1000.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub digits: u32,
    pub started: String,
    pub finished: String,
    pub results: Vec<Row>,
}

pub fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

impl Report {
    pub fn new(digits: u32, started: String, finished: String, results: &[VerificationResult]) -> Self {
        Report { version: VERSION.to_string(), digits, started, finished, results: results.iter().map(Row::from).collect() }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is plain data");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    /// One line per result. Run metadata is not part of the table.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(vec![]);
        w.write_record(["id", "variant", "params", "status", "residual_log10", "residual_mantissa", "seconds"])
            .expect("in-memory write");
        for row in &self.results {
            w.serialize(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn all_success(&self) -> bool {
        self.results.iter().all(|r| r.status == "PASS" || r.status == "ERRATUM_RESOLVED")
    }
}

pub fn write_report(report: &Report, path: &Path, format: Format) -> std::io::Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(report.render(format).as_bytes())?;
    f.sync_all()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixed(rows: Vec<Row>) -> Report {
        Report {
            version: "0.0.0".into(),
            digits: 50,
            started: "2026-01-01T00:00:00Z".into(),
            finished: "2026-01-01T00:00:01Z".into(),
            results: rows,
        }
    }

    fn row(status: &str) -> Row {
        Row {
            id: "thm2.1".into(),
            variant: 0,
            params: "k=2,x=1,y=1".into(),
            status: status.into(),
            residual_log10: Some(-52),
            residual_mantissa: Some("3.14".into()),
            seconds: 0.001,
        }
    }

    #[test]
    fn empty_results() {
        let r = fixed(vec![]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["results"], serde_json::json!([]));
        assert_eq!(r.to_csv().lines().count(), 1);
    }

    #[test]
    fn json_round_trip() {
        let r = fixed(vec![row("PASS"), Row { residual_log10: None, residual_mantissa: None, ..row("FAIL") }]);
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        assert!(!r.all_success());
    }

    #[test]
    fn csv_columns() {
        let csv = fixed(vec![row("ERRATUM_RESOLVED")]).to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "id,variant,params,status,residual_log10,residual_mantissa,seconds");
        assert_eq!(lines.next().unwrap(), "thm2.1,0,\"k=2,x=1,y=1\",ERRATUM_RESOLVED,-52,3.14,0.001");
    }

    #[test]
    fn format_names() {
        assert_eq!(Format::parse("JSON"), Some(Format::Json));
        assert_eq!(Format::parse("xml"), None);
    }
}
