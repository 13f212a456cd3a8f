use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::lexer::Cmp;
use super::parser::{SpecFile, StmtKind};
use crate::certify::{constants_suite, Certificate, DEFAULT_PRECISION};
use crate::classify::{consistency_check, generate_sweep};
use crate::eval::eval_spec;
use crate::graph::{
    edge_bound_sweep, euler_chain_sweep, extended_s_cycle_sweep, pair_count_sweep, parity_sweep, s_cycle_sweep,
    SweepRecord,
};
use crate::spec::KnotSpec;
use crate::value::{rat, GenusResult, GenusValue, Rational};

/// Suite names accepted by `verify` and `--suite`.
pub const SUITES: [&str; 5] = ["constants", "catalog", "lemma34", "families", "bounds"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOptions {
    /// Classification threshold for the catalog suite.
    pub threshold: Rational,
    pub precision: u32,
    /// Worker threads for suites; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Suites to run in addition to the file's `verify` lines.
    pub suites: Vec<String>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { threshold: rat(1, 402), precision: DEFAULT_PRECISION, jobs: None, suites: Vec::new() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Knot,
    Assert,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LineVerdict {
    /// A definition that evaluated.
    Evaluated,
    /// A definition whose evaluation failed; only fatal if asserted on.
    Error,
    Pass,
    Fail,
    /// The value is a range that straddles the asserted comparison.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineResult {
    pub line: usize,
    pub kind: LineKind,
    pub statement: String,
    pub verdict: LineVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<GenusValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub name: String,
    /// Source line of the `verify`, absent for suites requested by flag.
    pub line: Option<usize>,
    pub pass: bool,
    pub checks: usize,
    pub failed: usize,
    pub details: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub threshold: String,
    pub precision: u32,
    pub lines: Vec<LineResult>,
    pub suites: Vec<SuiteSummary>,
    pub certificates: Vec<Certificate>,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => serde_json::to_string_pretty(self).expect("report serializes"),
            ReportFormat::Text => self.to_text(),
        }
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            let tag = match l.verdict {
                LineVerdict::Evaluated => "ok",
                LineVerdict::Error => "ERROR",
                LineVerdict::Pass => "PASS",
                LineVerdict::Fail => "FAIL",
                LineVerdict::Undetermined => "UNDETERMINED",
            };
            let _ = write!(s, "line {}: {tag}: {}", l.line, l.statement);
            if let Some(v) = &l.value {
                let _ = write!(s, "  [genus {v}");
                if let Some(o) = &l.order {
                    let _ = write!(s, ", order {o}");
                }
                s.push(']');
            }
            s.push('\n');
            for d in &l.diagnostics {
                let _ = writeln!(s, "    {d}");
            }
        }
        for su in &self.suites {
            let at = su.line.map(|l| format!("line {l}: ")).unwrap_or_default();
            let tag = if su.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{at}{tag}: suite {} ({} checks, {} failed)", su.name, su.checks, su.failed);
            for d in &su.details {
                let _ = writeln!(s, "    {d}");
            }
        }
        for c in &self.certificates {
            let _ = writeln!(
                s,
                "certificate: {}  [{}, {}]  {:?} ({})",
                c.claim, c.interval_lo, c.interval_hi, c.verdict, c.rounding_mode
            );
        }
        let _ = writeln!(s, "{}", if self.pass { "all checks passed" } else { "some checks failed" });
        s
    }
}

fn compare(v: &GenusValue, cmp: Cmp, t: Rational) -> LineVerdict {
    let (yes, no) = match cmp {
        Cmp::Eq => (v.exact_value() == Some(t), !v.contains(t)),
        Cmp::Ge => (v.certainly_at_least(t), v.certainly_less(t)),
        Cmp::Gt => (v.certainly_greater(t), v.certainly_at_most(t)),
        Cmp::Le => (v.certainly_at_most(t), v.certainly_greater(t)),
        Cmp::Lt => (v.certainly_less(t), v.certainly_at_least(t)),
    };
    match (yes, no) {
        (true, _) => LineVerdict::Pass,
        (_, true) => LineVerdict::Fail,
        _ => LineVerdict::Undetermined,
    }
}

struct SuiteRun {
    summary: SuiteSummary,
    certificates: Vec<Certificate>,
}

fn from_records(name: &str, line: Option<usize>, records: &[SweepRecord]) -> SuiteRun {
    let failures: Vec<String> = records
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} ({}): {}", r.lemma, r.parameters, r.witness.clone().unwrap_or_default()))
        .collect();
    SuiteRun {
        summary: SuiteSummary {
            name: name.to_string(),
            line,
            pass: failures.is_empty(),
            checks: records.len(),
            failed: failures.len(),
            details: failures,
        },
        certificates: Vec::new(),
    }
}

fn failed_suite(name: &str, line: Option<usize>, why: String) -> SuiteRun {
    SuiteRun {
        summary: SuiteSummary { name: name.to_string(), line, pass: false, checks: 0, failed: 1, details: vec![why] },
        certificates: Vec::new(),
    }
}

fn run_suite(name: &str, line: Option<usize>, opts: &RunOptions) -> SuiteRun {
    match name {
        "constants" => match constants_suite(opts.precision) {
            Ok(certs) => {
                let details: Vec<String> =
                    certs.iter().filter(|c| !c.is_certified()).map(|c| format!("not certified: {}", c.claim)).collect();
                SuiteRun {
                    summary: SuiteSummary {
                        name: name.to_string(),
                        line,
                        pass: details.is_empty(),
                        checks: certs.len(),
                        failed: details.len(),
                        details,
                    },
                    certificates: certs,
                }
            }
            Err(e) => failed_suite(name, line, e.to_string()),
        },
        "catalog" => match generate_sweep(100, 50, 50) {
            Ok(entries) => {
                let details: Vec<String> = entries
                    .par_iter()
                    .filter_map(|e| {
                        let r = consistency_check(e, opts.threshold);
                        (!r.pass).then(|| format!("case {} {}: {}", e.case_id, e.spec, r.diagnostics.join("; ")))
                    })
                    .collect();
                SuiteRun {
                    summary: SuiteSummary {
                        name: name.to_string(),
                        line,
                        pass: details.is_empty(),
                        checks: entries.len(),
                        failed: details.len(),
                        details,
                    },
                    certificates: Vec::new(),
                }
            }
            Err(e) => failed_suite(name, line, e.to_string()),
        },
        "lemma34" | "families" => {
            let mut records = pair_count_sweep(12, 3);
            records.extend(parity_sweep(12));
            records.extend(s_cycle_sweep(16));
            records.extend(extended_s_cycle_sweep(16));
            from_records(name, line, &records)
        }
        "bounds" => {
            let mut records = edge_bound_sweep(200, 12);
            records.push(euler_chain_sweep(30));
            from_records(name, line, &records)
        }
        other => failed_suite(other, line, format!("unknown suite `{other}`; known: {}", SUITES.join(", "))),
    }
}

/// Evaluates every definition, checks every assertion and runs the requested suites.
///
/// Evaluation failures are reported on their own line; they never abort the run.
pub fn run(file: &SpecFile, opts: &RunOptions) -> Report {
    let mut specs: HashMap<String, KnotSpec> = HashMap::new();
    let mut values: HashMap<String, Result<GenusResult, String>> = HashMap::new();
    let mut lines = Vec::new();
    let mut requested: Vec<(String, Option<usize>)> = Vec::new();

    for stmt in &file.statements {
        let statement = stmt.kind.to_string();
        let mut res = LineResult {
            line: stmt.line,
            kind: LineKind::Knot,
            statement,
            verdict: LineVerdict::Evaluated,
            value: None,
            order: None,
            diagnostics: Vec::new(),
        };
        match &stmt.kind {
            StmtKind::Knot { name, expr } => {
                let outcome = expr
                    .resolve(&|n| specs.get(n).cloned())
                    .map_err(|e| e.to_string())
                    .and_then(|spec| {
                        let r = eval_spec(&spec).map_err(|e| e.to_string());
                        specs.insert(name.clone(), spec);
                        r
                    });
                match &outcome {
                    Ok(r) => {
                        res.value = Some(r.value.clone());
                        res.order = Some(r.order.to_string());
                    }
                    Err(e) => {
                        res.verdict = LineVerdict::Error;
                        res.diagnostics.push(e.clone());
                    }
                }
                values.insert(name.clone(), outcome);
            }
            StmtKind::Assert { name, cmp, value } => {
                res.kind = LineKind::Assert;
                match values.get(name) {
                    Some(Ok(r)) => {
                        res.value = Some(r.value.clone());
                        res.verdict = compare(&r.value, *cmp, *value);
                        match res.verdict {
                            LineVerdict::Fail => res
                                .diagnostics
                                .push(format!("line {}: rational genus of `{name}` is {}", stmt.line, r.value)),
                            LineVerdict::Undetermined => res.diagnostics.push(format!(
                                "line {}: rational genus of `{name}` is only known to lie in {}",
                                stmt.line, r.value
                            )),
                            _ => {}
                        }
                    }
                    Some(Err(e)) => {
                        res.verdict = LineVerdict::Fail;
                        res.diagnostics.push(format!("line {}: `{name}` did not evaluate: {e}", stmt.line));
                    }
                    None => {
                        res.verdict = LineVerdict::Fail;
                        res.diagnostics.push(format!("line {}: `{name}` is not defined", stmt.line));
                    }
                }
            }
            StmtKind::Verify { suite } => {
                res.kind = LineKind::Verify;
                requested.push((suite.clone(), Some(stmt.line)));
                continue;
            }
        }
        lines.push(res);
    }
    for s in &opts.suites {
        if !requested.iter().any(|(n, _)| n == s) {
            requested.push((s.clone(), None));
        }
    }

    let exec = || requested.par_iter().map(|(n, l)| run_suite(n, *l, opts)).collect::<Vec<_>>();
    let runs = match opts.jobs.and_then(|j| rayon::ThreadPoolBuilder::new().num_threads(j).build().ok()) {
        Some(pool) => pool.install(exec),
        None => exec(),
    };

    let mut suites = Vec::new();
    let mut certificates = Vec::new();
    for r in runs {
        suites.push(r.summary);
        certificates.extend(r.certificates);
    }
    let pass = lines.iter().all(|l| l.kind != LineKind::Assert || l.verdict == LineVerdict::Pass)
        && suites.iter().all(|s| s.pass);
    Report { threshold: opts.threshold.to_string(), precision: opts.precision, lines, suites, certificates, pass }
}
