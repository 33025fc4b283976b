//! Report types shared by the text and JSON outputs.
//!
//! Qubit and generator indices in reports are 1-based.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use stabcode::channel::{Coverage, PauliChannel};
use stabcode::degeneracy::{ClassificationReport, Outcome, Verdict};
use stabcode::distance::{ColumnBounds, Distance};
use stabcode::{Gf2Matrix, PauliOperator};

use crate::args::Command;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: Command,
    pub code: CodeSummary,
    pub result: Payload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub n: usize,
    pub k: usize,
    pub label: Option<String>,
    pub generators: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Validate(ValidatePayload),
    Syndrome(SyndromePayload),
    Classify(ClassificationReport),
    Distance(DistancePayload),
    StandardForm(StandardFormPayload),
    Simulate(SimulatePayload),
    Matrices(MatricesPayload),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidatePayload {
    pub valid: bool,
    pub violations: Vec<String>,
    /// Present only for valid codes.
    pub css: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyndromePayload {
    pub error: PauliOperator,
    pub weight: usize,
    /// Bit `j` is 1 when the error anticommutes with generator `j`.
    pub syndrome: String,
    /// Generators that anticommute with the error.
    pub violated: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistancePayload {
    pub d: Distance,
    pub witness: Option<PauliOperator>,
    pub search_limit: usize,
    pub bounds: Option<ColumnBounds>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardFormPayload {
    pub r: usize,
    /// Position `j` holds original qubit `qubit_order[j]`.
    pub qubit_order: Vec<usize>,
    /// Rows as `x_1…x_n|z_1…z_n`.
    pub matrix: Vec<String>,
    pub row_transform: Vec<String>,
    /// Verdict of the light-column shortcut at the file's default t.
    pub shortcut: Option<Outcome>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimulatePayload {
    pub channel: PauliChannel,
    pub trials: u64,
    pub seed: u64,
    pub logical_failures: u64,
    pub rate: f64,
    pub ci95: (f64, f64),
    pub exact_mismatches: Option<u64>,
    pub table_size: usize,
    pub table_coverage: Coverage,
    pub table_max_weight: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatricesPayload {
    pub h_x: Vec<String>,
    pub h_z: Vec<String>,
    /// Row `i` is the syndrome of `X_i`.
    pub bsm: Vec<String>,
    /// Row `i` is the syndrome of `Z_i`.
    pub psm: Vec<String>,
}

pub fn matrix_rows(m: &Gf2Matrix) -> Vec<String> {
    m.row_vectors().iter().map(|r| r.to_bit_string()).collect()
}

/// Rows of a `[X | Z]` matrix with a bar between the halves.
pub fn symplectic_rows(m: &Gf2Matrix) -> Vec<String> {
    let n = m.cols() / 2;
    m.row_vectors()
        .iter()
        .map(|r| {
            format!(
                "{}|{}",
                r.slice(0, n).to_bit_string(),
                r.slice(n, 2 * n).to_bit_string()
            )
        })
        .collect()
}

fn snake(v: impl Serialize) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

fn list(v: &[usize]) -> String {
    if v.is_empty() {
        return "-".into();
    }
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

struct Table(String);

impl Table {
    fn row(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.0, "{key:<20}{value}");
    }

    fn block(&mut self, title: &str, labels: impl Fn(usize) -> String, rows: &[String]) {
        let _ = writeln!(self.0, "{title}");
        for (i, r) in rows.iter().enumerate() {
            let spaced: Vec<String> = r.chars().map(String::from).collect();
            let _ = writeln!(self.0, "  {:<6}{}", labels(i), spaced.join(" "));
        }
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut t = Table(String::new());
        let c = &self.code;
        let label = c.label.as_deref().unwrap_or("-");
        t.row(
            "code",
            format!("{label}  [[{}, {}]]  {} generators", c.n, c.k, c.generators),
        );
        match &self.result {
            Payload::Validate(v) => {
                t.row("valid", if v.valid { "yes" } else { "no" });
                if let Some(css) = v.css {
                    t.row("css", if css { "yes" } else { "no" });
                }
                for violation in &v.violations {
                    t.row("violation", violation);
                }
            }
            Payload::Syndrome(s) => {
                t.row("error", format!("{} (weight {})", s.error, s.weight));
                t.row("syndrome", &s.syndrome);
                t.row("violated", list(&s.violated));
            }
            Payload::Classify(r) => {
                let verdict = match r.verdict {
                    Verdict::Degenerate => "degenerate",
                    Verdict::Nondegenerate => "nondegenerate",
                };
                t.row("verdict", verdict);
                t.row("t", r.t);
                t.row(
                    "syndromes",
                    format!(
                        "{} of {} errors{}",
                        r.syndrome_count,
                        r.expected_count,
                        if r.exhaustive {
                            ""
                        } else {
                            " (stopped at first collision)"
                        }
                    ),
                );
                if let Some(n) = r.collisions {
                    t.row("collisions", n);
                }
                if let Some(w) = &r.witness {
                    t.row("witness E", &w.e);
                    t.row("witness F", &w.f);
                    t.row(
                        "E*F in stabilizer",
                        if w.product_in_stabilizer { "yes" } else { "no" },
                    );
                }
                let _ = writeln!(t.0, "criteria");
                for rec in &r.criteria {
                    let _ = writeln!(t.0, "  {:<24}{}", snake(rec.criterion), snake(rec.outcome));
                }
            }
            Payload::Distance(d) => {
                t.row("d", d.d);
                t.row("search limit", d.search_limit);
                if let Some(w) = &d.witness {
                    let support: Vec<usize> = w.support().iter().map(|q| q + 1).collect();
                    t.row("witness", format!("{w} (qubits {})", list(&support)));
                }
                if let Some(b) = &d.bounds {
                    t.row("t", b.t);
                    t.row("independence order", b.max_independence_order);
                    t.row("lower bound", b.lower);
                    t.row("upper bound", b.upper.map_or("-".into(), |u| u.to_string()));
                    t.row(
                        "css exact",
                        b.css_exact.map_or("-".into(), |u| u.to_string()),
                    );
                }
            }
            Payload::StandardForm(s) => {
                t.row("r", s.r);
                t.row("qubit order", list(&s.qubit_order));
                if let Some(o) = s.shortcut {
                    t.row("shortcut", snake(o));
                }
                t.block("matrix", |i| format!("g{}", i + 1), &s.matrix);
                t.block("row transform", |i| format!("g{}", i + 1), &s.row_transform);
            }
            Payload::Simulate(s) => {
                let ch = &s.channel;
                t.row(
                    "channel",
                    format!("px={} py={} pz={}", ch.p_x, ch.p_y, ch.p_z),
                );
                t.row("trials", s.trials);
                t.row("seed", s.seed);
                t.row("failures", s.logical_failures);
                t.row("rate", format!("{:.6}", s.rate));
                t.row(
                    "95% interval",
                    format!("[{:.6}, {:.6}]", s.ci95.0, s.ci95.1),
                );
                if let Some(m) = s.exact_mismatches {
                    t.row("R != E", m);
                }
                let coverage = match s.table_coverage {
                    Coverage::Full => "full".to_string(),
                    Coverage::Partial { uncovered } => format!("{uncovered} syndromes missing"),
                };
                t.row(
                    "decoder table",
                    format!(
                        "{} entries, max weight {}, {coverage}",
                        s.table_size, s.table_max_weight
                    ),
                );
            }
            Payload::Matrices(m) => {
                t.block("H_X", |i| format!("g{}", i + 1), &m.h_x);
                t.block("H_Z", |i| format!("g{}", i + 1), &m.h_z);
                t.block("BSM", |i| format!("X{}", i + 1), &m.bsm);
                t.block("PSM", |i| format!("Z{}", i + 1), &m.psm);
            }
        }
        if let Some(ms) = self.elapsed_ms {
            t.row("elapsed", format!("{ms:.1} ms"));
        }
        t.0
    }
}
