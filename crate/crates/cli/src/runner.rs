//! Executes job files and assembles [`Report`]s.

use std::collections::HashMap;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use spc_core::expr::{parse_job, Definition, JobFile, Task, TaskKind};
use spc_core::symbolic::{
    check_containment, check_lemma3, check_roundtrip, invariant_suite, resurgence_scan, CertificateCheck,
    ContainmentCertificate,
};
use spc_core::{catalog_entry, paper_map, Error, FieldSpec, Ideal, PolyRing, SubstitutionMap};

use crate::report::{
    Certificate, Engine, ErrorInfo, FieldOverride, InvariantCheck, Report, ScanFailure, Summary, TaskReport,
    TaskResult, TaskStatus, SCHEMA_VERSION,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_INVARIANT_VIOLATION: i32 = 3;

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Recompute over this field instead of the declared one.
    pub field_override: Option<FieldSpec>,
    /// Re-check every certificate with the linear-algebra oracle.
    pub verify_certificates: bool,
    /// Run tasks marked heavy: round trips and Lemma 3 over QQ along a map
    /// whose images are not all monomials.
    pub slow: bool,
    /// Worker threads for independent tasks; `None` uses the rayon default.
    pub threads: Option<usize>,
    /// Include wall-clock timings in the report (breaks byte-for-byte
    /// reproducibility of the JSON).
    pub timings: bool,
}

fn error_info(e: &Error) -> ErrorInfo {
    ErrorInfo { kind: e.kind().to_string(), message: e.root().to_string(), line: e.line() }
}

fn empty_report(job: &str) -> Report {
    Report {
        schema: SCHEMA_VERSION,
        engine: Engine { name: "spc".into(), version: spc_core::VERSION.into() },
        job: job.into(),
        timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        ring: None,
        field: None,
        field_override: None,
        warnings: Vec::new(),
        error: None,
        tasks: Vec::new(),
        summary: Summary::default(),
    }
}

fn failed_report(job: &str, e: &Error) -> Report {
    let mut report = empty_report(job);
    report.error = Some(error_info(e));
    report.summary.exit_code = EXIT_INPUT_ERROR;
    report
}

/// Reads and runs a job file. Unreadable files yield an input-error report.
pub fn run_job(path: &Path, opts: &RunOptions) -> Report {
    let name = path.display().to_string();
    match std::fs::read_to_string(path) {
        Ok(text) => run_job_text(&name, &text, opts),
        Err(e) => {
            let mut report = empty_report(&name);
            report.error = Some(ErrorInfo {
                kind: "Io".into(),
                message: format!("cannot read job file: {e}"),
                line: None,
            });
            report.summary.exit_code = EXIT_INPUT_ERROR;
            report
        }
    }
}

struct Context {
    ring: PolyRing,
    ideals: HashMap<String, Ideal>,
    maps: HashMap<String, SubstitutionMap>,
}

fn resolve(job: &JobFile, ring: &PolyRing, warnings: &mut Vec<String>) -> Result<Context, Error> {
    let mut ideals = HashMap::new();
    for def in &job.ideals {
        let ideal = match &def.definition {
            Definition::Catalog { name, arg } => {
                let entry = catalog_entry(name, *arg, ring).map_err(|e| e.at_line(def.line))?;
                warnings.extend(entry.warnings.iter().map(|w| format!("ideal {}: {w}", def.name)));
                entry.ideal
            }
            Definition::Exprs(exprs) => {
                let gens = exprs
                    .iter()
                    .map(|e| e.to_polynomial(ring))
                    .collect::<Result<Vec<_>, _>>()
                    .and_then(|g| Ideal::new(ring, g))
                    .map_err(|e| e.at_line(def.line))?;
                gens
            }
        };
        ideals.insert(def.name.clone(), ideal);
    }
    let mut maps = HashMap::new();
    for def in &job.maps {
        let map = match &def.definition {
            Definition::Catalog { name, .. } => paper_map(name, ring),
            Definition::Exprs(exprs) => exprs
                .iter()
                .map(|e| e.to_polynomial(ring))
                .collect::<Result<Vec<_>, _>>()
                .and_then(|images| SubstitutionMap::verified(ring, images)),
        }
        .map_err(|e| e.at_line(def.line))?;
        maps.insert(def.name.clone(), map);
    }
    Ok(Context { ring: ring.clone(), ideals, maps })
}

/// Runs a job given as text; `name` is recorded in the report.
pub fn run_job_text(name: &str, text: &str, opts: &RunOptions) -> Report {
    let job = match parse_job(text) {
        Ok(job) => job,
        Err(e) => return failed_report(name, &e),
    };
    let ring = match job.ring.build(opts.field_override) {
        Ok(r) => r,
        Err(e) => return failed_report(name, &e),
    };
    let mut report = empty_report(name);
    report.ring = Some(ring.to_string());
    report.field = Some(ring.field().to_string());
    if let Some(used) = opts.field_override.filter(|f| *f != job.ring.field) {
        report.field_override = Some(FieldOverride {
            declared: job.ring.field.to_string(),
            used: used.to_string(),
            banner: format!(
                "FIELD OVERRIDE: job declares {}, computed over {used}; verdicts are evidence \
                 for the declared field, not proof",
                job.ring.field
            ),
        });
    }

    let ctx = match resolve(&job, &ring, &mut report.warnings) {
        Ok(ctx) => ctx,
        Err(e) => {
            report.error = Some(error_info(&e));
            report.summary.exit_code = EXIT_INPUT_ERROR;
            return report;
        }
    };

    let run_all = || -> Vec<TaskReport> {
        job.tasks.par_iter().enumerate().map(|(i, task)| run_task(i + 1, task, &ctx, opts)).collect()
    };
    report.tasks = match opts.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(run_all),
            Err(_) => run_all(),
        },
        None => run_all(),
    };
    report.summary = summarize(&report.tasks);
    report
}

fn summarize(tasks: &[TaskReport]) -> Summary {
    let count = |s: TaskStatus| tasks.iter().filter(|t| t.status == s).count();
    let mut summary = Summary {
        ok: count(TaskStatus::Ok),
        errors: count(TaskStatus::Error),
        invariant_violations: count(TaskStatus::InvariantViolation),
        skipped: count(TaskStatus::Skipped),
        exit_code: EXIT_OK,
    };
    summary.exit_code = if summary.invariant_violations > 0 {
        EXIT_INVARIANT_VIOLATION
    } else if summary.errors > 0 {
        EXIT_INPUT_ERROR
    } else {
        EXIT_OK
    };
    summary
}

/// The task as written in a job file.
pub fn statement(kind: &TaskKind) -> String {
    match kind {
        TaskKind::Check { ideal, m, r } => format!("check {ideal} {m} {r}"),
        TaskKind::Roundtrip { ideal, map, m, r } => format!("roundtrip {ideal} {map} {m} {r}"),
        TaskKind::Scan { ideal, smax, tmax } => format!("scan {ideal} {smax} {tmax}"),
        TaskKind::Invariants { ideal } => format!("invariants {ideal}"),
        TaskKind::Lemma3 { ideal, map, m } => format!("lemma3 {ideal} {map} {m}"),
    }
}

struct Outcome {
    result: TaskResult,
    violation: Option<String>,
    note: Option<String>,
}

fn run_task(index: usize, task: &Task, ctx: &Context, opts: &RunOptions) -> TaskReport {
    let start = Instant::now();
    let mut report = TaskReport {
        index,
        line: task.line,
        statement: statement(&task.kind),
        status: TaskStatus::Ok,
        error: None,
        note: None,
        result: None,
        elapsed_ms: None,
    };
    if !opts.slow && is_slow(&task.kind, ctx) {
        report.status = TaskStatus::Skipped;
        report.note = Some("heavy over QQ (non-monomial map); rerun with --slow".into());
        return report;
    }
    match execute(&task.kind, ctx, opts) {
        Ok(outcome) => {
            if let Some(v) = outcome.violation {
                report.status = TaskStatus::InvariantViolation;
                report.note = Some(v);
            } else {
                report.note = outcome.note;
            }
            report.result = Some(outcome.result);
        }
        Err(e) => {
            report.status = TaskStatus::Error;
            report.error = Some(error_info(&e.at_line(task.line)));
        }
    }
    if opts.timings {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

fn is_slow(kind: &TaskKind, ctx: &Context) -> bool {
    let map = match kind {
        TaskKind::Roundtrip { map, .. } | TaskKind::Lemma3 { map, .. } => map,
        _ => return false,
    };
    // Monomial maps keep pushforwards sparse; anything else over QQ suffers
    // coefficient growth.
    ctx.ring.field().is_rationals() && ctx.maps[map].images().iter().any(|f| f.len() > 1)
}

fn certificate(
    cert: &ContainmentCertificate,
    opts: &RunOptions,
) -> Result<(Certificate, Option<String>), Error> {
    let mut violation = None;
    let verification = if opts.verify_certificates {
        Some(match cert.verify()? {
            CertificateCheck::Verified => "verified".to_string(),
            CertificateCheck::Failed(why) => {
                violation =
                    Some(format!("certificate for ({}, {}) failed re-verification: {why}", cert.m, cert.r));
                format!("failed: {why}")
            }
        })
    } else {
        None
    };
    let s = &cert.stats;
    Ok((
        Certificate {
            m: cert.m,
            r: cert.r,
            verdict: cert.verdict.as_str().into(),
            witness: cert.witness.as_ref().map(ToString::to_string),
            symbolic_basis_size: s.symbolic_basis_size,
            symbolic_basis_max_degree: s.symbolic_basis_max_degree,
            power_basis_size: s.power_basis_size,
            power_basis_max_degree: s.power_basis_max_degree,
            verification,
            elapsed_ms: opts.timings.then_some(s.elapsed.as_millis() as u64),
        },
        violation,
    ))
}

fn execute(kind: &TaskKind, ctx: &Context, opts: &RunOptions) -> Result<Outcome, Error> {
    let ideal = |name: &str| &ctx.ideals[name];
    let map = |name: &str| &ctx.maps[name];
    Ok(match kind {
        TaskKind::Check { ideal: name, m, r } => {
            let cert = check_containment(ideal(name), *m, *r)?;
            let (certificate, violation) = certificate(&cert, opts)?;
            Outcome { result: TaskResult::Check { ideal: name.clone(), certificate }, violation, note: None }
        }
        TaskKind::Roundtrip { ideal: iname, map: mname, m, r } => {
            let rt = check_roundtrip(ideal(iname), map(mname), *m, *r)?;
            let (source, v1) = certificate(&rt.source, opts)?;
            let (pushed, v2) = certificate(&rt.pushforward, opts)?;
            let violation = if rt.agree {
                v1.or(v2)
            } else {
                Some(format!(
                    "round-trip disagreement: source {} but pushforward {}",
                    source.verdict, pushed.verdict
                ))
            };
            Outcome {
                result: TaskResult::Roundtrip {
                    ideal: iname.clone(),
                    map: mname.clone(),
                    m: *m,
                    r: *r,
                    agree: rt.agree,
                    pushforward_was_saturated: rt.pushforward_was_saturated,
                    source,
                    pushforward: pushed,
                },
                violation,
                note: (!rt.pushforward_was_saturated)
                    .then(|| "pushforward was not saturated; its saturation was used".to_string()),
            }
        }
        TaskKind::Scan { ideal: name, smax, tmax } => {
            let scan = resurgence_scan(ideal(name), *smax, *tmax)?;
            Outcome {
                result: TaskResult::Scan {
                    ideal: name.clone(),
                    smax: *smax,
                    tmax: *tmax,
                    lower_bound: scan.lower_bound.to_string(),
                    failures: scan
                        .failures
                        .iter()
                        .map(|f| ScanFailure { s: f.s, t: f.t, witness: f.witness.to_string() })
                        .collect(),
                    skipped_by_theory: scan.skipped.iter().map(|&(s, t)| [s, t]).collect(),
                },
                violation: None,
                note: None,
            }
        }
        TaskKind::Invariants { ideal: name } => {
            let checks = invariant_suite(ideal(name))?;
            let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
            Outcome {
                result: TaskResult::Invariants {
                    ideal: name.clone(),
                    checks: checks
                        .iter()
                        .map(|c| InvariantCheck {
                            name: c.name.into(),
                            passed: c.passed,
                            detail: c.detail.clone(),
                        })
                        .collect(),
                },
                violation: (!failed.is_empty()).then(|| format!("failed: {}", failed.join(", "))),
                note: None,
            }
        }
        TaskKind::Lemma3 { ideal: iname, map: mname, m } => {
            let holds = check_lemma3(ideal(iname), map(mname), *m)?;
            Outcome {
                result: TaskResult::Lemma3 { ideal: iname.clone(), map: mname.clone(), m: *m, holds },
                violation: (!holds).then(|| "pushforward of the symbolic power differs".to_string()),
                note: None,
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn task(status: TaskStatus) -> TaskReport {
        TaskReport {
            index: 1,
            line: 1,
            statement: String::new(),
            status,
            error: None,
            note: None,
            result: None,
            elapsed_ms: None,
        }
    }

    #[test]
    fn exit_code_precedence() {
        use TaskStatus::*;
        assert_eq!(summarize(&[task(Ok), task(Skipped)]).exit_code, EXIT_OK);
        assert_eq!(summarize(&[task(Ok), task(Error)]).exit_code, EXIT_INPUT_ERROR);
        let s = summarize(&[task(Error), task(InvariantViolation), task(Ok)]);
        assert_eq!(s.exit_code, EXIT_INVARIANT_VIOLATION);
        assert_eq!((s.ok, s.errors, s.invariant_violations, s.skipped), (1, 1, 1, 0));
    }

    #[test]
    fn statements_round_trip_through_the_parser() {
        let text = "ring QQ[x,y,z]\nideal I = x\nmap p = x; y; z\ncheck I 3 2\nroundtrip I p 2 2\nscan I 3 2\ninvariants I\nlemma3 I p 2\n";
        let job = parse_job(text).unwrap();
        let rendered: Vec<String> = job.tasks.iter().map(|t| statement(&t.kind)).collect();
        let lines: Vec<&str> = text.lines().skip(3).collect();
        assert_eq!(rendered, lines);
    }

    #[test]
    fn results_keep_job_order() {
        let text =
            "ring GF(101)[x,y,z]\nideal I = @fermat(3)\ncheck I 4 2\ncheck I 2 2\ncheck I 3 2\ncheck I 2 1\n";
        let report = run_job_text("t", text, &RunOptions { threads: Some(4), ..RunOptions::default() });
        let lines: Vec<usize> = report.tasks.iter().map(|t| t.line).collect();
        assert_eq!(lines, [3, 4, 5, 6]);
    }
}
