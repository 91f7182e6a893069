//! Plain-text rendering of reports for the terminal.

use std::fmt::Write;

use crate::report::{Certificate, Report, TaskResult, TaskStatus};

fn certificate_line(c: &Certificate) -> String {
    let mut s = format!("I^({}) ⊆ I^{}: {}", c.m, c.r, c.verdict.replace('_', " "));
    if let Some(w) = &c.witness {
        let _ = write!(s, " (witness {w})");
    }
    if let Some(v) = &c.verification {
        let _ = write!(s, " [{v}]");
    }
    s
}

fn result_lines(result: &TaskResult) -> Vec<String> {
    match result {
        TaskResult::Check { certificate, .. } => vec![certificate_line(certificate)],
        TaskResult::Roundtrip { agree, pushforward_was_saturated, source, pushforward, .. } => vec![
            format!("source:      {}", certificate_line(source)),
            format!("pushforward: {}", certificate_line(pushforward)),
            format!(
                "verdicts {}{}",
                if *agree { "agree" } else { "DISAGREE" },
                if *pushforward_was_saturated { "" } else { " (pushforward was saturated first)" }
            ),
        ],
        TaskResult::Scan { lower_bound, failures, skipped_by_theory, .. } => {
            let mut lines = vec![format!("resurgence >= {lower_bound}")];
            lines.extend(failures.iter().map(|f| format!("I^({}) ⊄ I^{}  witness {}", f.s, f.t, f.witness)));
            if !skipped_by_theory.is_empty() {
                lines.push(format!(
                    "{} pairs with s >= 2t skipped (always contained)",
                    skipped_by_theory.len()
                ));
            }
            lines
        }
        TaskResult::Invariants { checks, .. } => checks
            .iter()
            .map(|c| format!("{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail))
            .collect(),
        TaskResult::Lemma3 { holds, .. } => vec![format!("φ*(I^(m)) = (φ*I)^(m): {holds}")],
    }
}

/// Renders a report as human-readable text.
pub fn render(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "job {}", report.job);
    if let Some(ring) = &report.ring {
        let _ = writeln!(out, "ring {ring}");
    }
    if let Some(o) = &report.field_override {
        let _ = writeln!(out, "{}", o.banner);
    }
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    if let Some(e) = &report.error {
        match e.line {
            Some(l) => {
                let _ = writeln!(out, "error [{}] at line {l}: {}", e.kind, e.message);
            }
            None => {
                let _ = writeln!(out, "error [{}]: {}", e.kind, e.message);
            }
        }
    }
    for task in &report.tasks {
        let status = match task.status {
            TaskStatus::Ok => "ok",
            TaskStatus::Error => "error",
            TaskStatus::InvariantViolation => "INVARIANT VIOLATION",
            TaskStatus::Skipped => "skipped",
        };
        let _ = write!(out, "[{}] line {}: {} ... {status}", task.index, task.line, task.statement);
        if let Some(ms) = task.elapsed_ms {
            let _ = write!(out, " ({ms} ms)");
        }
        out.push('\n');
        if let Some(e) = &task.error {
            let _ = writeln!(out, "    [{}] {}", e.kind, e.message);
        }
        if let Some(result) = &task.result {
            for line in result_lines(result) {
                let _ = writeln!(out, "    {line}");
            }
        }
        if let Some(note) = &task.note {
            let _ = writeln!(out, "    note: {note}");
        }
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "{} ok, {} errors, {} invariant violations, {} skipped (exit {})",
        s.ok, s.errors, s.invariant_violations, s.skipped, s.exit_code
    );
    out
}
