//! Report rows with a fixed column order, emitted as CSV or JSON.
//!
//! CSV floats use 17 significant digits in scientific notation so every
//! `f64` round-trips; JSON objects carry the CSV column names as keys in the
//! same order. Both formats end with a newline.

use std::io::{self, Write};

use serde_json::{Map, Number, Value};

use crate::char_sums::SearchResult;
use crate::discriminant_avg::AverageReport;
use crate::polya::{PolyaReport, Reconstruction};
use crate::resonance::{MomentReport, RmrnReport, ZRule};

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Field {
    fn to_csv(&self) -> String {
        match self {
            Field::Int(v) => v.to_string(),
            Field::Float(v) => format_float(*v),
            Field::Text(s) => s.clone(),
            Field::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Field::Int(v) => Value::from(*v),
            Field::Float(v) => Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Field::Text(s) => Value::String(s.clone()),
            Field::Bool(b) => Value::Bool(*b),
        }
    }
}

/// 17 significant digits, e.g. `2.1482000000000000e4`.
pub fn format_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

pub trait ReportRow {
    const COLUMNS: &'static [&'static str];

    fn fields(&self) -> Vec<Field>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

pub fn write_report<R: ReportRow, W: Write>(rows: &[R], format: Format, out: W) -> io::Result<()> {
    match format {
        Format::Csv => write_csv(rows, out),
        Format::Json => write_json(rows, out),
    }
}

/// The report as a string.
pub fn render_report<R: ReportRow>(rows: &[R], format: Format) -> String {
    let mut buf = Vec::new();
    write_report(rows, format, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("reports are UTF-8")
}

fn write_csv<R: ReportRow, W: Write>(rows: &[R], out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(R::COLUMNS)?;
    for row in rows {
        let fields = row.fields();
        debug_assert_eq!(fields.len(), R::COLUMNS.len());
        w.write_record(fields.iter().map(Field::to_csv))?;
    }
    w.flush()
}

fn write_json<R: ReportRow, W: Write>(rows: &[R], mut out: W) -> io::Result<()> {
    let array: Vec<Value> = rows
        .iter()
        .map(|row| {
            let map: Map<String, Value> = R::COLUMNS
                .iter()
                .zip(row.fields())
                .map(|(k, f)| (k.to_string(), f.to_json()))
                .collect();
            Value::Object(map)
        })
        .collect();
    serde_json::to_writer_pretty(&mut out, &array)?;
    out.write_all(b"\n")
}

impl ReportRow for SearchResult {
    const COLUMNS: &'static [&'static str] = &["X", "x", "d_star", "value", "normalized", "predicted"];

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Int(self.scale as i64),
            Field::Float(self.cut),
            Field::Int(self.d_star.get()),
            Field::Int(self.value),
            Field::Float(self.normalized),
            Field::Float(self.predicted),
        ]
    }
}

fn z_rule_text(rule: ZRule, z: f64) -> String {
    match rule {
        ZRule::FixedAtUpper => format!("{} z={}", rule.label(), format_float(z)),
        ZRule::PerDiscriminant => rule.label().to_string(),
    }
}

impl ReportRow for MomentReport {
    const COLUMNS: &'static [&'static str] = &[
        "X", "x", "M1_exact", "M1_main", "M2_exact", "M2_main", "ratio", "max_Cd_sq", "z_rule",
    ];

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Int(self.scale as i64),
            Field::Float(self.x),
            Field::Float(self.m1_exact),
            Field::Float(self.m1_main),
            Field::Float(self.m2_exact),
            Field::Float(self.m2_main),
            Field::Float(self.ratio),
            Field::Float(self.max_cd_sq),
            Field::Text(z_rule_text(self.z_rule, self.z)),
        ]
    }
}

impl ReportRow for PolyaReport {
    const COLUMNS: &'static [&'static str] = &[
        "d", "alpha", "z_used", "exact", "approx_re", "approx_im", "abs_error", "error_budget",
    ];

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Int(self.d.get()),
            Field::Float(self.alpha),
            Field::Float(self.z_used),
            Field::Int(self.exact),
            Field::Float(self.approx.re),
            Field::Float(self.approx.im),
            Field::Float(self.abs_error),
            Field::Float(self.error_budget),
        ]
    }
}

impl ReportRow for Reconstruction {
    const COLUMNS: &'static [&'static str] = &["d", "x", "z", "bound", "exact", "residual"];

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Int(self.d.get()),
            Field::Float(self.x),
            Field::Float(self.z),
            Field::Float(self.bound),
            Field::Int(self.exact),
            Field::Float(self.residual),
        ]
    }
}

impl ReportRow for RmrnReport {
    const COLUMNS: &'static [&'static str] = &["Y", "W", "lhs", "rhs", "window_empty"];

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Float(self.y_cap),
            Field::Float(self.w_cap),
            Field::Float(self.lhs),
            Field::Float(self.rhs),
            Field::Bool(self.window_empty),
        ]
    }
}

/// An averaging row together with the slope fitted over the whole batch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AverageRow {
    pub report: AverageReport,
    pub slope: f64,
}

impl ReportRow for AverageRow {
    const COLUMNS: &'static [&'static str] =
        &["X", "n", "exact", "main", "error", "f_n0", "g_n1", "epsilon", "slope"];

    fn fields(&self) -> Vec<Field> {
        let r = &self.report;
        vec![
            Field::Int(r.scale as i64),
            Field::Int(r.n as i64),
            Field::Int(r.exact),
            Field::Float(r.main),
            Field::Float(r.error),
            Field::Float(r.f_n0),
            Field::Float(r.g_n1),
            Field::Float(r.epsilon),
            Field::Float(self.slope),
        ]
    }
}

/// One evaluation of the closed-form large-value prediction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PredictionRow {
    pub scale: f64,
    pub x: f64,
    pub bound: f64,
}

impl ReportRow for PredictionRow {
    const COLUMNS: &'static [&'static str] = &["X", "x", "bound"];

    fn fields(&self) -> Vec<Field> {
        vec![Field::Float(self.scale), Field::Float(self.x), Field::Float(self.bound)]
    }
}
