//! Batch run over a fixture directory.
//!
//! A fixture is a report file `<stem>.p<prime>.report.json` next to the
//! group file `<stem>.json`. Each fixture is classified, the rendered report
//! is compared with the expected one, and the main algorithms are compared
//! with the exhaustive oracles when the working group is small enough.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use cellfuse_core::classifier::{classify_with, CellularizationReport, ClassifyOptions};
use cellfuse_core::oracle::{self, ORACLE_CAP};
use cellfuse_core::differential::compare;
use rayon::prelude::*;

use crate::commands::{error_code, spot_check_quotients};
use crate::exit;
use crate::group_file;
use crate::report::{first_difference, ReportDocument};

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub cap: usize,
    pub skip_strong_fusion: bool,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub label: String,
    pub group_path: PathBuf,
    pub report_path: PathBuf,
    pub prime: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass { case: String, oracle: bool },
    Mismatch { field: String, detail: String },
    Error { code: u8, message: String },
}

pub fn discover(dir: &Path) -> anyhow::Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).with_context(|| format!("reading {}", dir.display()))? {
        let path = entry?.path();
        let Some(file) = path.file_name().and_then(|f| f.to_str()) else {
            continue;
        };
        let Some(label) = file.strip_suffix(".report.json") else {
            continue;
        };
        let Some((stem, prime)) = label.rsplit_once(".p") else {
            bail!("fixture {file} is not named <group>.p<prime>.report.json");
        };
        let prime = prime
            .parse()
            .with_context(|| format!("fixture {file} has a bad prime"))?;
        out.push(Fixture {
            label: label.to_string(),
            group_path: dir.join(format!("{stem}.json")),
            report_path: path.clone(),
            prime,
        });
    }
    out.sort_by(|a, b| a.report_path.cmp(&b.report_path));
    Ok(out)
}

fn mismatch(field: &str, detail: impl Into<String>) -> Outcome {
    Outcome::Mismatch {
        field: field.to_string(),
        detail: detail.into(),
    }
}

fn run_one(f: &Fixture, opts: &VerifyOptions) -> Outcome {
    let attempt = || -> anyhow::Result<Outcome> {
        let group = group_file::load(&f.group_path, opts.cap)?;
        let expected_text = std::fs::read_to_string(&f.report_path)
            .with_context(|| format!("reading {}", f.report_path.display()))?;
        let expected = ReportDocument::read(&expected_text)
            .with_context(|| format!("parsing {}", f.report_path.display()))?;
        let report = classify_with(
            &group,
            f.prime,
            ClassifyOptions {
                strong_fusion: !opts.skip_strong_fusion,
            },
        )?;
        let actual = ReportDocument::from_report(&report);
        if let Some(field) = first_difference(&expected.to_value(), &actual.to_value()) {
            let get = |d: &ReportDocument| pointer(&d.to_value(), &field);
            let detail = format!("expected {}, got {}", get(&expected), get(&actual));
            return Ok(mismatch(&field, detail));
        }
        if let Some((k, _)) = actual.verifications.iter().find(|(_, v)| *v == "fail") {
            return Ok(mismatch(&format!("verifications.{k}"), "fail"));
        }
        if let Some(detail) = spot_check_quotients(&report, opts.seed)?.into_iter().next() {
            return Ok(mismatch("quotient_map", detail));
        }
        let oracle = report.working_group.order() <= ORACLE_CAP as u128;
        if oracle {
            if let Some(out) = oracle_comparison(&report)? {
                return Ok(out);
            }
        }
        Ok(Outcome::Pass {
            case: actual.case,
            oracle,
        })
    };
    attempt().unwrap_or_else(|e| Outcome::Error {
        code: error_code(&e),
        message: format!("{e:#}"),
    })
}

fn pointer(v: &serde_json::Value, field: &str) -> String {
    let path: String = field.split('.').map(|k| format!("/{k}")).collect();
    v.pointer(&path).map_or_else(|| "nothing".to_string(), ToString::to_string)
}

/// Main algorithms against the oracles on the working group.
fn oracle_comparison(r: &CellularizationReport) -> anyhow::Result<Option<Outcome>> {
    let c = compare(&r.working_group, r.prime)?;
    if let Some(what) = c.mismatches.first() {
        return Ok(Some(mismatch(&format!("oracle.{what}"), "main and oracle disagree")));
    }
    if let Some(proper) = &r.proper {
        if !oracle::naive_is_p_perfect(proper.gamma(), r.prime)? {
            return Ok(Some(mismatch("oracle.gamma_p_perfect", "gamma has a normal subgroup of index p")));
        }
    }
    Ok(None)
}

pub fn verify(dir: &Path, opts: &VerifyOptions, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let fixtures = match discover(dir) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            return exit::INPUT;
        }
    };
    if fixtures.is_empty() {
        let _ = writeln!(stderr, "warning: 0 fixtures in {}", dir.display());
        return exit::OK;
    }
    let outcomes: Vec<Outcome> = fixtures.par_iter().map(|f| run_one(f, opts)).collect();

    let width = fixtures.iter().map(|f| f.label.len()).max().unwrap_or(0);
    let mut first_failure: Option<(String, String)> = None;
    let mut code = exit::OK;
    for (f, o) in fixtures.iter().zip(&outcomes) {
        let line = match o {
            Outcome::Pass { case, oracle } => {
                let oracle = if *oracle { "oracle ok" } else { "oracle skipped" };
                format!("PASS  {:width$}  {case}  {oracle}", f.label)
            }
            Outcome::Mismatch { field, detail } => {
                code = exit::INPUT;
                first_failure.get_or_insert_with(|| (f.label.clone(), field.clone()));
                format!("FAIL  {:width$}  {field}: {detail}", f.label)
            }
            Outcome::Error { code: c, message } => {
                if code == exit::OK {
                    code = *c;
                }
                first_failure.get_or_insert_with(|| (f.label.clone(), "error".to_string()));
                format!("ERROR {:width$}  {message}", f.label)
            }
        };
        let _ = writeln!(stdout, "{line}");
    }
    let passed = outcomes.iter().filter(|o| matches!(o, Outcome::Pass { .. })).count();
    let _ = writeln!(stdout, "{passed}/{} fixtures passed", fixtures.len());
    if let Some((label, field)) = first_failure {
        let _ = writeln!(stderr, "first difference: {label}: {field}");
    }
    code
}
