//! Rendering of rankings and graph-level values.
//!
//! Rationals are always printed as reduced `p/q`. The `imc_decimal` column
//! is a six-place, round-half-even display aid and is never compared.

use std::fmt::Write;

use agglo_core::{NodeClass, NodeId, RankReport, Rational};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    #[default]
    Table,
    Csv,
    Json,
}

pub const DECIMAL_PLACES: u32 = 6;

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonEntry {
    pub node: NodeId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    pub imc: String,
    pub imc_decimal: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonRankReport {
    pub phi: String,
    pub avg_path_length: String,
    pub entries: Vec<JsonEntry>,
}

impl JsonRankReport {
    pub fn from_report(
        report: &RankReport,
        class_of: impl Fn(NodeId) -> Option<NodeClass>,
    ) -> Self {
        JsonRankReport {
            phi: report.phi.to_string(),
            avg_path_length: report.avg_path_length.to_string(),
            entries: report
                .entries
                .iter()
                .map(|e| JsonEntry {
                    node: e.node,
                    class: class_of(e.node).map(|c| c.name().to_string()),
                    imc: e.imc.to_string(),
                    imc_decimal: e.imc.to_decimal_string(DECIMAL_PLACES),
                })
                .collect(),
        }
    }
}

/// Left-aligned text table with two-space gutters.
pub(crate) fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::new();
        for (i, cell) in cells.enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{:<width$}", cell, width = widths[i]);
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

pub fn render_rank(
    report: &RankReport,
    class_of: impl Fn(NodeId) -> Option<NodeClass>,
    format: ReportFormat,
) -> String {
    let class_name = |v| class_of(v).map(NodeClass::name).unwrap_or("-");
    match format {
        ReportFormat::Table => {
            let rows: Vec<Vec<String>> = report
                .entries
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    vec![
                        (i + 1).to_string(),
                        e.node.to_string(),
                        class_name(e.node).to_string(),
                        e.imc.to_string(),
                        e.imc.to_decimal_string(DECIMAL_PLACES),
                    ]
                })
                .collect();
            let mut out = format!("phi {}\nL {}\n\n", report.phi, report.avg_path_length);
            out.push_str(&table(
                &["rank", "node", "class", "imc", "imc_decimal"],
                &rows,
            ));
            out
        }
        ReportFormat::Csv => {
            let mut out = format!("# phi {}\n# L {}\n", report.phi, report.avg_path_length);
            out.push_str("rank,node,class,imc,imc_decimal\n");
            for (i, e) in report.entries.iter().enumerate() {
                let class = class_of(e.node).map(NodeClass::name).unwrap_or("");
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    i + 1,
                    e.node,
                    class,
                    e.imc,
                    e.imc.to_decimal_string(DECIMAL_PLACES)
                );
            }
            out
        }
        ReportFormat::Json => {
            let json = JsonRankReport::from_report(report, class_of);
            let mut out = serde_json::to_string_pretty(&json).expect("report serializes");
            out.push('\n');
            out
        }
    }
}

/// Graph-level values. `avg_path_length` is `None` for the single-node graph.
pub fn render_phi(
    order: usize,
    phi: Rational,
    avg_path_length: Option<Rational>,
    format: ReportFormat,
) -> String {
    let apl = avg_path_length.map(|r| r.to_string());
    match format {
        ReportFormat::Table => {
            format!("phi {phi}\nL {}\n", apl.as_deref().unwrap_or("undefined"))
        }
        ReportFormat::Csv => format!(
            "n,phi,avg_path_length\n{order},{phi},{}\n",
            apl.as_deref().unwrap_or("")
        ),
        ReportFormat::Json => {
            let value = serde_json::json!({
                "n": order,
                "phi": phi.to_string(),
                "avg_path_length": apl,
            });
            let mut out = serde_json::to_string_pretty(&value).expect("json serializes");
            out.push('\n');
            out
        }
    }
}
