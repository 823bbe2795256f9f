//! `analyze` and `construct`.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::Context;
use cellfuse_core::classifier::{classify_with, CellularizationReport, ClassifyOptions};
use cellfuse_core::{Group, DEFAULT_ENUMERATION_CAP};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exit;
use crate::group_file::{self, GroupFile};
use crate::report::ReportDocument;
use crate::request::ConstructorRequest;

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Random products checked per quotient map.
const SPOT_CHECKS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    File(PathBuf),
    Request(ConstructorRequest),
}

impl Target {
    /// A single existing path or `*.json` word is a group file; anything
    /// else is a constructor request.
    pub fn resolve(words: &[String]) -> anyhow::Result<Target> {
        if let [one] = words {
            let path = Path::new(one);
            if path.exists() || one.ends_with(".json") {
                return Ok(Target::File(path.to_path_buf()));
            }
        }
        let text = words.join(" ");
        let req = text
            .parse()
            .with_context(|| format!("cannot read {text:?} as a group file or constructor"))?;
        Ok(Target::Request(req))
    }

    pub fn load(&self, cap: usize) -> anyhow::Result<Arc<Group>> {
        match self {
            Target::File(path) => group_file::load(path, cap),
            Target::Request(req) => Ok(Arc::new(req.build()?.with_cap(cap))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    pub prime: u64,
    pub cap: usize,
    pub out: Option<PathBuf>,
    pub skip_strong_fusion: bool,
    pub json: bool,
    pub seed: u64,
}

impl AnalyzeOptions {
    pub fn new(prime: u64) -> AnalyzeOptions {
        AnalyzeOptions {
            prime,
            cap: DEFAULT_ENUMERATION_CAP,
            out: None,
            skip_strong_fusion: false,
            json: false,
            seed: DEFAULT_SEED,
        }
    }
}

/// Exit code for a core error.
pub fn error_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<cellfuse_core::Error>() {
        Some(core) if core.is_cap_exceeded() => exit::CAP_EXCEEDED,
        _ => exit::INPUT,
    }
}

/// Checks that the quotient maps of a proper-case report are homomorphisms
/// with the stated kernels, on seeded random elements. Returns the failures.
pub fn spot_check_quotients(r: &CellularizationReport, seed: u64) -> anyhow::Result<Vec<String>> {
    let Some(proper) = &r.proper else {
        return Ok(Vec::new());
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for (label, q) in [("quotient", &proper.quotient), ("gamma", &proper.gamma_map)] {
        let src = q.source();
        for _ in 0..SPOT_CHECKS {
            let x = src.random_element(&mut rng);
            let y = src.random_element(&mut rng);
            let k = q.kernel().random_element(&mut rng);
            let (qx, qy) = (q.map(&x)?, q.map(&y)?);
            if q.map(&(&x * &y))? != &qx * &qy {
                failures.push(format!("{label}: map is not multiplicative at {x}, {y}"));
                break;
            }
            if !q.map(&k)?.is_identity() {
                failures.push(format!("{label}: kernel element {k} maps to {}", q.map(&k)?));
                break;
            }
            if qx.is_identity() != q.kernel().contains(&x) {
                failures.push(format!("{label}: kernel mismatch at {x}"));
                break;
            }
        }
    }
    Ok(failures)
}

fn write_output(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn summary(r: &CellularizationReport, doc: &ReportDocument) -> String {
    let mut s = format!(
        "{} at p={}: {} (|G|={}, |W|={})",
        doc.name.as_deref().unwrap_or("group"),
        r.prime,
        doc.case,
        doc.orders.group,
        doc.orders.working_group
    );
    if let Some(note) = &doc.note {
        s += &format!(", {note}");
    }
    if let Some(label) = &doc.gamma_label {
        s += &format!(", gamma {label}");
    }
    let base: Vec<&str> = doc.fibration.base.iter().map(String::as_str).collect();
    s += &format!("\n  {} -> {} -> {}", r.fibration.fiber_label(), doc.fibration.total, if base.is_empty() { "*".to_string() } else { base.join(" x ") });
    for (k, v) in &doc.verifications {
        s += &format!("\n  {k}: {v}");
    }
    s
}

pub fn analyze(target: &[String], opts: &AnalyzeOptions, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    match run_analyze(target, opts, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            error_code(&e)
        }
    }
}

fn run_analyze(
    target: &[String],
    opts: &AnalyzeOptions,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> anyhow::Result<u8> {
    let group = Target::resolve(target)?.load(opts.cap)?;
    let report = classify_with(
        &group,
        opts.prime,
        ClassifyOptions {
            strong_fusion: !opts.skip_strong_fusion,
        },
    )?;
    let doc = ReportDocument::from_report(&report);
    write_output(&opts.out, &doc.render(), stdout)?;
    if !opts.json {
        writeln!(stderr, "{}", summary(&report, &doc))?;
    }
    let mut failed = report.has_failures();
    for f in spot_check_quotients(&report, opts.seed)? {
        writeln!(stderr, "verification failed: {f}")?;
        failed = true;
    }
    for (k, v) in &doc.verifications {
        if v == "fail" {
            writeln!(stderr, "verification failed: {k}")?;
        }
    }
    Ok(if failed { exit::VERIFICATION_FAILED } else { exit::OK })
}

/// Group JSON for a request. Byte-identical for identical requests.
pub fn construct_json(req: &ConstructorRequest) -> cellfuse_core::Result<String> {
    let g = req.build()?;
    Ok(GroupFile::from_spec(g.spec()).to_json())
}

pub fn construct(words: &[String], out: &Option<PathBuf>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let result = (|| -> anyhow::Result<()> {
        let text = words.join(" ");
        let req: ConstructorRequest = text.parse().with_context(|| format!("bad constructor {text:?}"))?;
        write_output(out, &construct_json(&req)?, stdout)
    })();
    match result {
        Ok(()) => exit::OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            exit::INPUT
        }
    }
}
