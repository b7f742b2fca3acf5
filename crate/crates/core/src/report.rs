//! Summary records and their table/CSV/JSON renderings, plus the
//! plot-ready series CSV.
//!
//! Tables round to four decimals. CSV and JSON carry the shortest decimal
//! form of each `f64` that re-parses to the identical value.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::invariance::SelfCheckReport;
use crate::landmark::Trajectory;
use crate::metrics::{MovementReport, MovementSummary};

pub const CSV_COLUMNS: [&str; 6] = [
    "label",
    "l2_norm",
    "sigma_combined",
    "n_frames",
    "hand_scale",
    "detection_rate",
];

pub const SERIES_COLUMNS: [&str; 3] = ["frame_index", "distance", "window_sigma"];

/// One analyzed input file.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisRecord {
    pub label: String,
    pub l2_norm: f64,
    pub sigma_combined: f64,
    pub n_frames: usize,
    pub hand_scale: f64,
    pub detection_rate: f64,
}

impl AnalysisRecord {
    pub fn new(t: &Trajectory, summary: &MovementSummary) -> Self {
        Self {
            label: t.label.clone(),
            l2_norm: summary.l2_norm,
            sigma_combined: summary.sigma_combined,
            n_frames: summary.n_frames,
            hand_scale: summary.hand_scale.s,
            detection_rate: t.detection_rate(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format `{other}` (expected table, csv or json)")),
        }
    }
}

pub fn render(records: &[AnalysisRecord], format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => render_table(records),
        OutputFormat::Csv => render_csv(records),
        OutputFormat::Json => render_json(records),
    }
}

pub fn render_table(records: &[AnalysisRecord]) -> String {
    let label_width = records
        .iter()
        .map(|r| r.label.chars().count())
        .chain(std::iter::once(5))
        .max()
        .unwrap_or(5);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<label_width$}  {:>8}  {:>18}  {:>8}  {:>10}  {:>9}",
        "label", "L2 Norm", "Standard Deviation", "frames", "hand scale", "detection"
    );
    for r in records {
        let _ = writeln!(
            out,
            "{:<label_width$}  {:>8.4}  {:>18.4}  {:>8}  {:>10.4}  {:>9.4}",
            r.label, r.l2_norm, r.sigma_combined, r.n_frames, r.hand_scale, r.detection_rate
        );
    }
    out
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    // In-memory CSV output is always UTF-8 built from `String` fields.
    String::from_utf8(w.into_inner().expect("flush to Vec")).expect("utf-8 csv")
}

pub fn render_csv(records: &[AnalysisRecord]) -> String {
    let mut w = csv_writer();
    w.write_record(CSV_COLUMNS).expect("in-memory write");
    for r in records {
        w.write_record([
            r.label.clone(),
            r.l2_norm.to_string(),
            r.sigma_combined.to_string(),
            r.n_frames.to_string(),
            r.hand_scale.to_string(),
            r.detection_rate.to_string(),
        ])
        .expect("in-memory write");
    }
    finish(w)
}

pub fn render_json(records: &[AnalysisRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

/// Per-frame distances with the windowed dispersion placed on the row
/// that opens each window.
pub fn render_series_csv(report: &MovementReport) -> String {
    let mut w = csv_writer();
    w.write_record(SERIES_COLUMNS).expect("in-memory write");
    let mut windows = report.window_series.iter().peekable();
    for p in &report.distance_series {
        let sigma = windows
            .next_if(|win| win.frame_index == p.frame_index)
            .map_or_else(String::new, |win| win.value.to_string());
        w.write_record([p.frame_index.to_string(), p.value.to_string(), sigma])
            .expect("in-memory write");
    }
    finish(w)
}

pub fn render_selfcheck(report: &SelfCheckReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "seed={} trials={} tolerance={:e}",
        report.seed, report.trials, report.tolerance
    );
    let _ = writeln!(
        out,
        "baseline l2_norm={} sigma_combined={}",
        report.baseline.l2_norm, report.baseline.sigma_combined
    );
    let _ = writeln!(out, "{:<16}  {:>14}  result", "property", "max deviation");
    for p in &report.properties {
        let _ = writeln!(
            out,
            "{:<16}  {:>14.3e}  {}",
            p.property.name(),
            p.max_deviation,
            if p.passed { "PASS" } else { "FAIL" }
        );
    }
    let _ = writeln!(
        out,
        "{}",
        if report.passed() {
            "all properties pass"
        } else {
            "selfcheck FAILED"
        }
    );
    out
}
