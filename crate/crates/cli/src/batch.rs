use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use alphak::constructions::{certify, Certificate, FamilyParams, Status};
use alphak::power::SolverOptions;
use serde::Serialize;

use crate::{EXIT_DOMAIN, EXIT_OK, EXIT_SOLVER_CAP};

/// A non-blank, non-comment grid line, parsed or not.
#[derive(Debug)]
pub struct GridLine {
    pub line: usize,
    pub text: String,
    pub params: Result<FamilyParams, String>,
}

/// Splits a grid file into parameter lines; `#` starts a comment anywhere.
pub fn parse_grid(text: &str) -> Vec<GridLine> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("").trim();
            (!content.is_empty()).then(|| GridLine {
                line: i + 1,
                text: content.to_string(),
                params: content.parse::<FamilyParams>().map_err(|e| e.to_string()),
            })
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct BatchEntry {
    pub line: usize,
    pub input: String,
    /// `passed`, `failed`, `indeterminate` or `rejected`.
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Default, Serialize, PartialEq, Eq)]
pub struct BatchSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub indeterminate: usize,
    pub rejected: usize,
}

#[derive(Debug, Serialize)]
pub struct BatchReport {
    pub entries: Vec<BatchEntry>,
    pub summary: BatchSummary,
}

impl BatchReport {
    /// 1 if any line failed or was rejected, else 3 if any was
    /// indeterminate, else 0.
    pub fn exit_code(&self) -> i32 {
        let s = &self.summary;
        if s.failed + s.rejected > 0 {
            EXIT_DOMAIN
        } else if s.indeterminate > 0 {
            EXIT_SOLVER_CAP
        } else {
            EXIT_OK
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let detail = match (&e.error, &e.certificate) {
                (Some(err), _) => err.clone(),
                (None, Some(c)) => match c.failed_check {
                    Some(check) => format!("failed at {check}"),
                    None => format!("n = {}, alpha_{} = {}", c.n_actual, c.k, c.achieved_alpha.map_or("?".into(), |a| a.to_string())),
                },
                (None, None) => String::new(),
            };
            let _ = writeln!(out, "line {:>4}  {:<13}  {:<40}  {}", e.line, e.outcome, e.input, detail);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "total {}: {} passed, {} failed, {} indeterminate, {} rejected",
            s.total, s.passed, s.failed, s.indeterminate, s.rejected
        );
        out
    }
}

/// Certifies every grid line; rejected lines are reported and skipped.
/// Lines are verified concurrently; entries keep file order.
pub fn run_batch(text: &str, opts: &SolverOptions) -> BatchReport {
    let lines = parse_grid(text);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(lines.len());
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<BatchEntry>>> = lines.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(gl) = lines.get(i) else { break };
                *slots[i].lock().unwrap() = Some(verify_line(gl, opts));
            });
        }
    });
    let entries: Vec<BatchEntry> = slots.into_iter().map(|s| s.into_inner().unwrap().expect("every line verified")).collect();
    let mut summary = BatchSummary { total: entries.len(), ..BatchSummary::default() };
    for e in &entries {
        match e.outcome {
            "passed" => summary.passed += 1,
            "failed" => summary.failed += 1,
            "indeterminate" => summary.indeterminate += 1,
            _ => summary.rejected += 1,
        }
    }
    BatchReport { entries, summary }
}

fn verify_line(gl: &GridLine, opts: &SolverOptions) -> BatchEntry {
    let entry = |outcome, error, certificate| BatchEntry { line: gl.line, input: gl.text.clone(), outcome, error, certificate };
    let params = match &gl.params {
        Ok(p) => p,
        Err(e) => return entry("rejected", Some(format!("line {}: {e}", gl.line)), None),
    };
    match certify(params, opts) {
        Ok(cert) => {
            let outcome = match cert.status {
                Status::Passed => "passed",
                Status::Failed => "failed",
                Status::Indeterminate => "indeterminate",
            };
            entry(outcome, None, Some(cert))
        }
        Err(e) => entry("rejected", Some(format!("line {}: {e}", gl.line)), None),
    }
}
