//! Argument parsing, model construction and report emission.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use darboux::darboux::{
    build_alternative_contact_form, build_contact, build_symplectic, extend_with_artin_generators, ContactInstance,
};
use darboux::io::{
    contact_from_json, contact_to_json, form_from_json, spec_from_json, symplectic_to_json,
    symplectification_to_json, ModelSpec,
};
use darboux::stack::{build_jet_instance, build_prequantum_instance, prequantum_signature};
use darboux::symplectification::symplectify;
use darboux::verify::{
    sample_points, vdim_table, verify_contact, verify_symplectic, CheckReport, NamedCheck,
};
use darboux::{check::CheckVerdict, Error, Q};
use serde_json::{json, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_CHECK: u8 = 2;

const SEED_ENV: &str = "DARBOUX_SEED";

#[derive(Parser, Debug)]
#[command(name = "darboux", version, about = "Build and verify shifted contact and symplectic Darboux models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an instance from a spec and print it as JSON.
    Build(ModelArgs),
    /// Build (or load) an instance and run the full check suite.
    Verify(ModelArgs),
    /// Symplectify a contact instance and verify the result.
    Symplectify {
        #[command(flatten)]
        model: ModelArgs,
        /// Fibre value t at which nondegeneracy is checked.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        t: String,
    },
    /// Shifted 1-jet model J¹(A^dim) with fibre degree `shift`.
    Jet {
        /// Degree of the fibre coordinate z (zero or negative).
        #[arg(long, allow_hyphen_values = true)]
        shift: i32,
        /// Dimension of the base affine space.
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Prequantum G_m-bundle over T*A^dim, optionally twisted.
    Prequantum {
        /// Dimension of the base affine space.
        #[arg(long)]
        dim: usize,
        /// Closed 1-form in the x variables (form JSON, or @path).
        #[arg(long)]
        twist: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Virtual dimensions realised by Darboux models of the given shifts.
    VdimTable {
        /// Shifts to tabulate (negative integers).
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        k: Vec<i32>,
        /// Largest multiplicity enumerated per degree.
        #[arg(long, default_value_t = 2)]
        max_mult: usize,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct ModelArgs {
    /// Spec or instance JSON (`-` for stdin).
    #[arg(long)]
    spec: PathBuf,
    /// Use the alternative contact form (odd shifts only).
    #[arg(long)]
    alt_form: bool,
    /// Append this many Artin generators with dw = 0.
    #[arg(long)]
    artin_w: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Number of sample points.
    #[arg(long, default_value_t = 10)]
    points: usize,
    /// Sampling seed (overridden by DARBOUX_SEED).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A finished run: what to print and whether every check passed.
struct Outcome {
    json: Value,
    text: String,
    passed: bool,
}

impl Outcome {
    fn report(r: &CheckReport) -> Self {
        Self { json: r.to_json(), text: r.to_string(), passed: r.passed() }
    }

    fn document(json: Value) -> Self {
        let text = serde_json::to_string_pretty(&json).expect("json prints");
        Self { json, text, passed: true }
    }
}

struct Failure {
    code: u8,
    message: String,
    report: Option<Value>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self { code: EXIT_INPUT, message: e.to_string(), report: None }
    }
}

fn input(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: msg.into(), report: None }
}

/// Errors that mean "the model was well-formed but a check failed".
fn is_check_failure(e: &Error) -> Option<&'static str> {
    match e {
        Error::MasterEquationFails(_) => Some("master_equation"),
        Error::DSquaredFailsOnW(_) => Some("artin_block"),
        Error::ContactAxiomsFail(_) => Some("contact_axioms"),
        _ => None,
    }
}

fn check_failure(source: &Value, e: Error) -> Failure {
    let Some(name) = is_check_failure(&e) else { return e.into() };
    let debug = format!("{e:?}");
    let variant = debug.split(['(', ' ', '{']).next().unwrap_or_default();
    let witness = format!("{variant}: {e}");
    let report = CheckReport::new::<Q>(
        source,
        "build failed",
        0,
        vec![NamedCheck::new(name, CheckVerdict::fail(witness))],
        &[],
    );
    Failure { code: EXIT_CHECK, message: e.to_string(), report: Some(report.to_json()) }
}

fn seed(args: &OutputArgs) -> Result<u64, Failure> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| input(format!("{SEED_ENV} is not an unsigned integer: `{s}`"))),
        Err(_) => Ok(args.seed),
    }
}

fn read_json(path: &PathBuf) -> Result<Value, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| input(format!("{}: bad JSON: {e}", path.display())))
}

fn read_inline_or_file(arg: &str) -> Result<Value, Failure> {
    match arg.strip_prefix('@') {
        Some(p) => read_json(&PathBuf::from(p)),
        None => serde_json::from_str(arg).map_err(|e| input(format!("bad JSON: {e}"))),
    }
}

enum Built {
    Contact(ContactInstance<Q>),
    Symplectic(darboux::darboux::SymplecticInstance<Q>),
}

fn build_model(args: &ModelArgs) -> Result<(Value, Built), Failure> {
    let source = read_json(&args.spec)?;
    if source.get("type").and_then(Value::as_str) == Some("contact") {
        let mut inst = contact_from_json::<Q>(&source)?;
        if args.alt_form {
            inst = build_alternative_contact_form(&inst)?;
        }
        if let Some(n) = args.artin_w.filter(|&n| n > 0) {
            inst = extend_with_artin_generators(&inst, n, vec![]).map_err(|e| check_failure(&source, e))?;
        }
        return Ok((source, Built::Contact(inst)));
    }
    let built = match spec_from_json::<Q>(&source)? {
        ModelSpec::Darboux(mut spec) => {
            if let Some(n) = args.artin_w {
                spec.artin_w = n;
            }
            let symplectic = source.get("kind").and_then(Value::as_str) == Some("symplectic");
            if symplectic {
                if args.alt_form {
                    return Err(input("--alt-form applies to contact models only"));
                }
                Built::Symplectic(build_symplectic(&spec).map_err(|e| check_failure(&source, e))?)
            } else {
                let mut inst = build_contact(&spec).map_err(|e| check_failure(&source, e))?;
                if args.alt_form {
                    inst = build_alternative_contact_form(&inst)?;
                }
                Built::Contact(inst)
            }
        }
        ModelSpec::Jet { n, dim } => Built::Contact(build_jet_instance(n, dim)?),
        ModelSpec::Prequantum { dim, twist } => Built::Contact(prequantum(dim, twist.as_ref())?),
    };
    if let (Some(n), Built::Contact(inst)) = (args.artin_w, &built) {
        if inst.layout().is_none() && n > 0 {
            let ext = extend_with_artin_generators(inst, n, vec![]).map_err(|e| check_failure(&source, e))?;
            return Ok((source, Built::Contact(ext)));
        }
    }
    Ok((source, built))
}

fn prequantum(dim: usize, twist: Option<&Value>) -> Result<ContactInstance<Q>, Failure> {
    let tw = match twist {
        Some(v) => Some(form_from_json::<Q>(&prequantum_signature(dim)?, v)?),
        None => None,
    };
    Ok(build_prequantum_instance(dim, tw.as_ref())?)
}

fn verify_built(built: &Built, out: &OutputArgs) -> Result<CheckReport, Failure> {
    let seed = seed(out)?;
    Ok(match built {
        Built::Contact(inst) => verify_contact(inst, &sample_points(&inst.signature, out.points.max(1), seed))?,
        Built::Symplectic(inst) => {
            verify_symplectic(inst, &sample_points(&inst.signature, out.points.max(1), seed))?
        }
    })
}

fn contact_with_report(inst: &ContactInstance<Q>, out: &OutputArgs) -> Result<Outcome, Failure> {
    let report = verify_contact(inst, &sample_points(&inst.signature, out.points.max(1), seed(out)?))?;
    let json = json!({"instance": contact_to_json(inst), "report": report.to_json()});
    Ok(Outcome { json, text: report.to_string(), passed: report.passed() })
}

fn execute(cli: Cli) -> Result<(Outcome, Option<PathBuf>, Format), Failure> {
    Ok(match cli.command {
        Command::Build(args) => {
            let (_, built) = build_model(&args)?;
            let json = match &built {
                Built::Contact(i) => contact_to_json(i),
                Built::Symplectic(i) => symplectic_to_json(i),
            };
            (Outcome::document(json), args.out.out, args.out.format)
        }
        Command::Verify(args) => {
            let (_, built) = build_model(&args)?;
            let report = verify_built(&built, &args.out)?;
            (Outcome::report(&report), args.out.out, args.out.format)
        }
        Command::Symplectify { model, t } => {
            let (source, built) = build_model(&model)?;
            let Built::Contact(inst) = built else {
                return Err(input("symplectify needs a contact model"));
            };
            let t: Q = t.parse().map_err(|_| input(format!("bad value for --t: `{t}`")))?;
            let s = symplectify(&inst).map_err(|e| check_failure(&source, e))?;
            let pts = sample_points(&inst.signature, model.out.points.max(1), seed(&model.out)?);
            let report = s.verify(&pts, &t)?;
            let json = json!({"instance": symplectification_to_json(&s), "report": report.to_json()});
            (Outcome { json, text: report.to_string(), passed: report.passed() }, model.out.out, model.out.format)
        }
        Command::Jet { shift, dim, out } => {
            let inst = build_jet_instance::<Q>(shift, dim)?;
            (contact_with_report(&inst, &out)?, out.out, out.format)
        }
        Command::Prequantum { dim, twist, out } => {
            let twist = twist.as_deref().map(read_inline_or_file).transpose()?;
            let inst = prequantum(dim, twist.as_ref())?;
            (contact_with_report(&inst, &out)?, out.out, out.format)
        }
        Command::VdimTable { k, max_mult, out, format } => {
            let rows = vdim_table(&k, max_mult)?;
            let passed = rows.iter().all(|r| r.pass);
            let mut text = format!("{:>4}  {:<9} {:<8} {:<24} {:<24} {}\n", "k", "class", "expected", "symplectic", "contact", "ok");
            for r in &rows {
                let fmt_set = |s: &std::collections::BTreeSet<i64>| {
                    s.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
                };
                text.push_str(&format!(
                    "{:>4}  {:<9} {:<8} {:<24} {:<24} {}\n",
                    r.k,
                    format!("{:?}", r.class),
                    r.expected,
                    fmt_set(&r.symplectic),
                    fmt_set(&r.contact),
                    if r.pass { "yes" } else { "NO" }
                ));
            }
            let json = json!({"max_mult": max_mult, "rows": rows});
            (Outcome { json, text: text.trim_end().to_string(), passed }, out, format)
        }
    })
}

fn emit(bytes: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, format!("{bytes}\n")).map_err(|e| input(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            match writeln!(stdout, "{bytes}") {
                // a closed reader (e.g. `| head`) is not an error
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
                r => r.map_err(|e| input(format!("stdout: {e}"))),
            }
        }
    }
}

/// Serialised bytes for a JSON value: pretty-printed with sorted keys.
pub fn render_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json prints")
}

/// Runs one invocation and returns its exit code.
pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok((outcome, out, format)) => {
            let body = match format {
                Format::Json => render_json(&outcome.json),
                Format::Text => outcome.text,
            };
            if let Err(f) = emit(&body, out.as_ref()) {
                eprintln!("error: {}", f.message);
                return f.code;
            }
            if outcome.passed {
                EXIT_OK
            } else {
                EXIT_CHECK
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            if let Some(r) = &f.report {
                println!("{}", render_json(r));
            }
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use darboux::verify::json_digest;

    #[test]
    fn check_failures_are_classified() {
        assert!(is_check_failure(&Error::MasterEquationFails("x".into())).is_some());
        assert!(is_check_failure(&Error::Parse("x".into())).is_none());
        assert!(is_check_failure(&Error::UnsupportedClass).is_none());
    }

    #[test]
    fn unknown_subcommand_is_an_input_error() {
        assert_eq!(run(["darboux", "frobnicate"].map(OsString::from)), EXIT_INPUT);
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(json_digest(&json!({"b": 1, "a": 2})), json_digest(&json!({"a": 2, "b": 1})));
    }
}
