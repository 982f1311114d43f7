//! The four subcommands, each producing a JSON document and a pass flag.

use std::time::Instant;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use qdouble::domega::DOmega;
use qdouble::hopf::HopfAlgebra;
use qdouble::report::{Check, Report, SweepOptions};
use qdouble::ribbon::find_ribbon_domega;
use qdouble::scalar::FieldDescriptor;
use qdouble::Error;

use crate::session::{RunOptions, SessionSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    CheckCocycle,
    Verify,
    Ribbon,
    Export,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckCocycle => "check-cocycle",
            Command::Verify => "verify",
            Command::Ribbon => "ribbon",
            Command::Export => "export",
        }
    }
}

/// Flags given on the command line.
#[derive(Clone, Debug, Default)]
pub struct Flags {
    pub options: RunOptions,
    pub field: Option<FieldDescriptor>,
}

/// The document a command emits, whether every check passed, and
/// human-readable lines for the terminal.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub document: Value,
    pub passed: bool,
    pub summary: Vec<String>,
    pub options: RunOptions,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            2
        }
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn render(&self) -> String {
        render(&self.document)
    }
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Errors that end a run before any document is produced (exit 1), and
/// construction failures that carry the checks that failed (exit 2).
#[derive(Debug)]
pub enum Failure {
    Spec(Error),
    Checks { reason: String, checks: Vec<Check> },
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Spec(_) => 1,
            Failure::Checks { .. } => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let reason = e.to_string();
        match e {
            Error::CocycleConditionFailed(c) | Error::NotAssociative(c) => Failure::Checks {
                reason,
                checks: vec![*c],
            },
            Error::VerificationFailed(cs) | Error::TwistPropertyFailed(cs) => {
                Failure::Checks { reason, checks: cs }
            }
            Error::UNotInvertible
            | Error::CointegralZero
            | Error::CrossCheckFailed(_)
            | Error::NotInRH(_) => {
                let check = Check::single("construction", "construction completes", false, &reason);
                Failure::Checks {
                    reason,
                    checks: vec![check],
                }
            }
            other => Failure::Spec(other),
        }
    }
}

struct Timer(Instant);

impl Timer {
    fn start() -> Timer {
        Timer(Instant::now())
    }

    fn lap(&mut self, what: &str) {
        eprintln!("[time] {what}: {:.3}s", self.0.elapsed().as_secs_f64());
        self.0 = Instant::now();
    }
}

fn checks_json(checks: &[Check]) -> Value {
    serde_json::to_value(checks).expect("checks serialize")
}

/// Runs `cmd` on the spec text inside a thread pool of the requested size.
pub fn run(cmd: Command, spec_text: &str, flags: &Flags) -> std::result::Result<Outcome, Failure> {
    let spec = SessionSpec::from_json(spec_text)?;
    let options = spec.options.overridden_by(&flags.options);
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = options.threads {
        if n == 0 {
            return Err(Failure::Spec(Error::InvalidSpec(
                "thread count must be positive".into(),
            )));
        }
        pool = pool.num_threads(n);
    }
    let pool = pool
        .build()
        .map_err(|e| Failure::Spec(Error::InvalidSpec(e.to_string())))?;
    let spec_hash = sha256_hex(spec_text.as_bytes());
    let mut out = pool.install(|| execute(cmd, &spec, &options, flags.field, &spec_hash))?;
    out.options = options;
    Ok(out)
}

fn execute(
    cmd: Command,
    spec: &SessionSpec,
    options: &RunOptions,
    field_flag: Option<FieldDescriptor>,
    spec_hash: &str,
) -> std::result::Result<Outcome, Failure> {
    let mut timer = Timer::start();
    let field = spec.field(field_flag)?;
    let h = spec.hopf(&field)?;
    let cocycle = spec.cocycle(&h)?;
    timer.lap("input");
    let sweep = SweepOptions {
        fail_fast: options.fail_fast,
    };
    let header = |extra: Value| {
        let mut doc = json!({
            "command": cmd.name(),
            "field": field.descriptor().to_string(),
            "base_dimension": h.dim(),
            "artifacts": { "spec_sha256": spec_hash },
        });
        if let (Value::Object(d), Value::Object(e)) = (&mut doc, extra) {
            d.extend(e);
        }
        doc
    };

    if cmd == Command::CheckCocycle {
        let report = cocycle_report(&h, &cocycle, sweep);
        timer.lap("cocycle checks");
        let passed = report.all_passed();
        let summary = vec![summarize(&report)];
        let document = header(json!({ "checks": checks_json(&report.checks), "passed": passed }));
        return Ok(Outcome {
            document,
            passed,
            summary,
            options: RunOptions::default(),
        });
    }

    let axioms = h.verify_axioms(sweep);
    let conditions = cocycle.verify(&h, sweep);
    if !axioms.all_passed() || !conditions.all_passed() {
        let reason = "input fails the Hopf or cocycle axioms".to_string();
        return Err(Failure::Checks {
            reason,
            checks: [axioms.checks, conditions.checks].concat(),
        });
    }
    let d = DOmega::new(&h, &cocycle)?;
    timer.lap("construction");

    match cmd {
        Command::Verify => {
            let mut report = axioms;
            report.extend(d.verify(sweep)?.checks);
            timer.lap("verification");
            if options.deep_iso {
                report.extend(d.verify_deep_iso(sweep)?);
                timer.lap("deep isomorphism");
            }
            let passed = report.all_passed();
            let summary = vec![summarize(&report)];
            let document = header(json!({
                "dimension": d.dim(),
                "checks": checks_json(&report.checks),
                "passed": passed,
            }));
            Ok(Outcome {
                document,
                passed,
                summary,
                options: RunOptions::default(),
            })
        }
        Command::Ribbon => {
            let structure = d.verify_structure(sweep)?;
            if !structure.all_passed() {
                let reason = "D^ω(H) fails its structural checks".to_string();
                return Err(Failure::Checks {
                    reason,
                    checks: structure.failed().cloned().collect(),
                });
            }
            timer.lap("structure checks");
            let (certificates, report) = match find_ribbon_domega(&d, sweep) {
                Ok(s) => (s.certificates, s.report),
                Err(Error::EmptyResult) => (Vec::new(), Report::default()),
                Err(e) => return Err(e.into()),
            };
            timer.lap("ribbon search");
            let fd = field.descriptor().to_string();
            let certs: Vec<Value> = certificates
                .iter()
                .map(|c| c.to_json(d.dim(), &fd))
                .collect();
            let certs = Value::Array(certs);
            let passed = report.all_passed();
            let mut summary = vec![format!("{} ribbon certificate(s)", certificates.len())];
            for (i, c) in certificates.iter().enumerate() {
                let zeta = c
                    .zeta
                    .as_ref()
                    .map(|z| values(&h, z))
                    .unwrap_or_else(|| "-".into());
                summary.push(format!("  #{i}: ζ = {zeta}"));
            }
            summary.push(summarize(&report));
            let mut document = header(json!({
                "dimension": d.dim(),
                "count": certificates.len(),
                "checks": checks_json(&report.checks),
                "passed": passed,
            }));
            document["artifacts"]["certificates_sha256"] =
                json!(sha256_hex(render(&certs).as_bytes()));
            document["certificates"] = certs;
            Ok(Outcome {
                document,
                passed,
                summary,
                options: RunOptions::default(),
            })
        }
        Command::Export => {
            let document = d.export_json();
            timer.lap("export");
            let summary = vec![format!(
                "dimension {}, sha256 {}",
                d.dim(),
                sha256_hex(render(&document).as_bytes())
            )];
            Ok(Outcome {
                document,
                passed: true,
                summary,
                options: RunOptions::default(),
            })
        }
        Command::CheckCocycle => unreachable!("handled above"),
    }
}

/// The 3-cocycle conditions, `θ` and its 2-cocycle condition, and the
/// antipode identities of `ω`.
fn cocycle_report(
    h: &HopfAlgebra,
    cocycle: &qdouble::cocycle::Cocycle3,
    sweep: SweepOptions,
) -> Report {
    let mut report = cocycle.verify(h, sweep);
    if report.all_passed() {
        match cocycle.theta(h) {
            Ok(theta) => report.extend(theta.verify(h, sweep).checks),
            Err(e) => report.push(Check::single(
                "theta.construct",
                "θ is convolution invertible",
                false,
                e,
            )),
        }
    }
    report.extend(cocycle.verify_antipode_identities(h, sweep).checks);
    report
}

/// `φ(e_0), ..., φ(e_{n-1})`.
fn values(h: &HopfAlgebra, phi: &qdouble::tensor::Vector) -> String {
    let vals: Vec<String> = (0..h.dim() as u32)
        .map(|i| {
            phi.get(i)
                .map_or_else(|| "0".to_string(), |c| c.to_string())
        })
        .collect();
    format!("({})", vals.join(", "))
}

fn summarize(report: &Report) -> String {
    let failed: Vec<&str> = report.failed().map(|c| c.id.as_str()).collect();
    if failed.is_empty() {
        format!("{} checks passed", report.checks.len())
    } else {
        format!(
            "{} of {} checks failed: {}",
            failed.len(),
            report.checks.len(),
            failed.join(", ")
        )
    }
}
