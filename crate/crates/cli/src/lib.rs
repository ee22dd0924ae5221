//! The `nilcone` command line, as a library so it can be driven from tests.
//!
//! [`run`] never prints and never exits; `main` does both from the returned
//! [`CommandResult`].

use std::ffi::OsString;

use clap::{Parser, Subcommand};
use nilcone_core::classical_orbits::{component_count, enumerate_orbits, orbit_dimension};
use nilcone_core::exceptional::{affine_minus1_distinguished, query, ExceptionalRow};
use nilcone_core::oracle::sweep::{forms_up_to, verify, VerifyReport};
use nilcone_core::selfdual::{classify, join_projective_dim, list_selfdual, KOrbitLabel, KOrbitRecord};
use nilcone_core::{Error, LabelData, OrbitDim, OrbitRecord, RealFormId};
use serde_json::{json, Value};

/// Version of the JSON payload layout, independent of the tool version.
pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_VALIDATION: u8 = 3;
pub const EXIT_DATA: u8 = 4;
pub const EXIT_ORACLE: u8 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub schema_version: &'static str,
    pub exit_code: u8,
    /// Whether `--json` was requested.
    pub json: bool,
    text: String,
}

impl CommandResult {
    fn ok(payload: Value, text: String, json: bool) -> Self {
        CommandResult {
            status: Status::Ok,
            payload,
            schema_version: SCHEMA_VERSION,
            exit_code: EXIT_OK,
            json,
            text,
        }
    }

    fn error(code: &str, message: String, exit_code: u8, json: bool) -> Self {
        CommandResult {
            status: Status::Error,
            text: format!("error[{code}]: {message}"),
            payload: json!({ "code": code, "message": message }),
            schema_version: SCHEMA_VERSION,
            exit_code,
            json,
        }
    }

    fn from_core(e: &Error, json: bool) -> Self {
        let exit = match e {
            Error::Parse { .. } => EXIT_USAGE,
            Error::DataIntegrity { .. } => EXIT_DATA,
            Error::Internal(_) => EXIT_ORACLE,
            _ => EXIT_VALIDATION,
        };
        Self::error(e.code(), e.to_string(), exit, json)
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    /// `{status, schema_version, payload}`.
    pub fn envelope(&self) -> Value {
        json!({
            "status": self.status.as_str(),
            "schema_version": self.schema_version,
            "payload": self.payload,
        })
    }

    /// JSON envelope under `--json`, otherwise the human rendering.
    pub fn render(&self) -> String {
        if self.json {
            serde_json::to_string_pretty(&self.envelope()).expect("serializable")
        } else {
            self.text.clone()
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "nilcone",
    version,
    about = "Nilpotent orbits of real forms and their self-dual projectivized K-orbit closures",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit the JSON envelope instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the nonzero nilpotent orbits of a classical form.
    Enumerate {
        #[arg(long)]
        form: String,
    },
    /// Compactness and self-duality verdict for one orbit label.
    Classify {
        #[arg(long)]
        form: String,
        #[arg(long)]
        label: String,
    },
    /// List the self-dual projectivized K-orbit closures of a real form.
    Selfdual {
        #[arg(long)]
        form: String,
    },
    /// Rows of the embedded table of an exceptional form.
    Exceptional {
        #[arg(long)]
        form: String,
        /// Only rows with no unipotent radical.
        #[arg(long)]
        affine: bool,
    },
    /// Orbit and K-orbit dimensions for one label.
    Dims {
        #[arg(long)]
        form: String,
        #[arg(long)]
        label: String,
    },
    /// Projective dimension of a join.
    Join {
        /// Projective dimensions of the factors, comma separated.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        dims: Vec<u64>,
    },
    /// Check formulas and criteria against exact matrix models.
    Verify {
        #[arg(long)]
        max_n: u32,
        /// Bound for quaternionic families; defaults to min(max-n, 3).
        #[arg(long)]
        max_nq: Option<u32>,
        /// Restrict to one family: sl-r, sl-h, su, so, sp-r, sp-h, u*-h, sl-c, so-c, sp-c.
        #[arg(long, conflicts_with = "form")]
        family: Option<String>,
        /// Restrict to one form.
        #[arg(long)]
        form: Option<String>,
    },
}

/// Parses and dispatches one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let json = argv.iter().skip(1).any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::*;
            let rendered = e.render().to_string();
            return match e.kind() {
                DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand if e.exit_code() == 0 => {
                    CommandResult::ok(json!({ "message": rendered.trim_end() }), rendered, false)
                }
                _ => CommandResult::error("usage", rendered.trim_end().to_string(), EXIT_USAGE, json),
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(Outcome { payload, text, exit }) => {
            let mut r = CommandResult::ok(payload, text, cli.json);
            if exit != EXIT_OK {
                r.status = Status::Error;
                r.exit_code = exit;
            }
            r
        }
        Err(e) => CommandResult::from_core(&e, cli.json),
    }
}

struct Outcome {
    payload: Value,
    text: String,
    exit: u8,
}

impl Outcome {
    fn ok(payload: Value, text: String) -> Self {
        Outcome { payload, text, exit: EXIT_OK }
    }
}

fn parse_form(s: &str) -> Result<RealFormId, Error> {
    s.parse::<RealFormId>()?.normalize()
}

fn dispatch(cmd: &Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Enumerate { form } => enumerate_cmd(&parse_form(form)?),
        Command::Classify { form, label } => {
            let f = parse_form(form)?;
            classify_cmd(&f, &LabelData::parse(&f, label)?)
        }
        Command::Selfdual { form } => selfdual_cmd(&parse_form(form)?),
        Command::Exceptional { form, affine } => exceptional_cmd(&parse_form(form)?, *affine),
        Command::Dims { form, label } => {
            let f = parse_form(form)?;
            dims_cmd(&f, &LabelData::parse(&f, label)?)
        }
        Command::Join { dims } => {
            let d = join_projective_dim(dims)?;
            Ok(Outcome::ok(json!({ "dims": dims, "projective_dim": d }), d.to_string()))
        }
        Command::Verify {
            max_n,
            max_nq,
            family,
            form,
        } => verify_cmd(*max_n, *max_nq, family.as_deref(), form.as_deref()),
    }
}

/// Left-aligned columns separated by two spaces.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(headers.to_vec())];
    out.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
    out.join("\n")
}

fn dim_key(form: &RealFormId) -> &'static str {
    if form.is_complex() {
        "complex_dim"
    } else {
        "real_dim"
    }
}

fn orbit_json(r: &OrbitRecord) -> Value {
    let mut v = json!({
        "form": r.form.to_string(),
        "label": r.label.data.to_string(),
        "component_index": r.label.component_index,
        "component_count": r.label.component_count,
    });
    let d = match r.dim {
        OrbitDim::Real(d) | OrbitDim::Complex(d) => d,
    };
    v[dim_key(&r.form)] = json!(d);
    v
}

fn digits(v: &[i32]) -> String {
    v.iter().map(i32::to_string).collect::<Vec<_>>().join(",")
}

fn enumerate_cmd(form: &RealFormId) -> Result<Outcome, Error> {
    let recs = enumerate_orbits(form)?;
    let rows: Vec<Vec<String>> = recs
        .iter()
        .map(|r| {
            vec![
                r.label.data.to_string(),
                format!("{}/{}", r.label.component_index, r.label.component_count),
                r.dim.value().to_string(),
            ]
        })
        .collect();
    let text = if rows.is_empty() {
        format!("{form}: no nonzero nilpotent orbits")
    } else {
        table(&["label", "component", dim_key(form)], &rows)
    };
    Ok(Outcome::ok(
        json!({
            "form": form.to_string(),
            "low_rank": form.is_low_rank(),
            "records": recs.iter().map(orbit_json).collect::<Vec<_>>(),
        }),
        text,
    ))
}

fn classify_cmd(form: &RealFormId, label: &LabelData) -> Result<Outcome, Error> {
    let v = classify(form, label)?;
    let payload = json!({
        "form": v.form.to_string(),
        "label": v.label.to_string(),
        "component_count": v.component_count,
        "compact": v.compact,
        "minus1_distinguished": v.minus1_distinguished,
        "self_dual": v.self_dual,
        "real_dim": v.real_dim,
        "complex_dim": v.complex_dim,
        "projective_dim": v.projective_dim,
    });
    let rows: Vec<Vec<String>> = [
        ("form", v.form.to_string()),
        ("label", v.label.to_string()),
        ("components", v.component_count.to_string()),
        ("compact", v.compact.to_string()),
        ("self_dual", v.self_dual.to_string()),
        ("real_dim", v.real_dim.to_string()),
        ("complex_dim", v.complex_dim.to_string()),
        ("projective_dim", v.projective_dim.to_string()),
    ]
    .into_iter()
    .map(|(k, v)| vec![k.to_string(), v])
    .collect();
    Ok(Outcome::ok(payload, table(&["field", "value"], &rows)))
}

fn k_orbit_json(r: &KOrbitRecord) -> Value {
    let mut v = json!({
        "form": r.form.to_string(),
        "complex_dim": r.complex_dim,
        "g_orbit_complex_dim": r.g_orbit_complex_dim,
        "projective_dim": r.projective_dim,
        "minus1_distinguished": r.minus1_distinguished,
        "self_dual": r.self_dual,
    });
    match &r.label {
        KOrbitLabel::Classical(l) => {
            v["label"] = json!(l.data.to_string());
            v["component_index"] = json!(l.component_index);
            v["component_count"] = json!(l.component_count);
        }
        KOrbitLabel::Exceptional { row_no, dyn_k, dyn_g } => {
            v["row_no"] = json!(row_no);
            v["dyn_k"] = json!(dyn_k);
            v["dyn_g"] = json!(dyn_g);
        }
    }
    v
}

fn selfdual_cmd(form: &RealFormId) -> Result<Outcome, Error> {
    let recs = list_selfdual(form)?;
    let text = if form.is_exceptional() {
        let rows: Vec<Vec<String>> = recs
            .iter()
            .map(|r| match &r.label {
                KOrbitLabel::Exceptional { row_no, dyn_k, dyn_g } => vec![
                    row_no.to_string(),
                    digits(dyn_k),
                    digits(dyn_g),
                    r.complex_dim.to_string(),
                    r.projective_dim.to_string(),
                ],
                KOrbitLabel::Classical(_) => unreachable!("exceptional form"),
            })
            .collect();
        table(&["row", "dyn_k", "dyn_g", "complex_dim", "projective_dim"], &rows)
    } else {
        let rows: Vec<Vec<String>> = recs
            .iter()
            .map(|r| match &r.label {
                KOrbitLabel::Classical(l) => vec![
                    l.data.to_string(),
                    format!("{}/{}", l.component_index, l.component_count),
                    r.complex_dim.to_string(),
                    r.projective_dim.to_string(),
                ],
                KOrbitLabel::Exceptional { .. } => unreachable!("classical form"),
            })
            .collect();
        if rows.is_empty() {
            format!("{form}: no self-dual orbit closures")
        } else {
            table(&["label", "component", "complex_dim", "projective_dim"], &rows)
        }
    };
    Ok(Outcome::ok(
        json!({
            "form": form.to_string(),
            "records": recs.iter().map(k_orbit_json).collect::<Vec<_>>(),
        }),
        text,
    ))
}

fn row_json(r: &ExceptionalRow) -> Value {
    json!({
        "form": r.form.label(),
        "row_no": r.row_no,
        "dyn_k": r.dyn_k,
        "dyn_g": r.dyn_g,
        "dim_k_orbit": r.dim_k_orbit,
        "intersection_count": r.intersection_count,
        "levi": r.levi.to_string(),
        "radu_dim": r.radu_dim,
    })
}

fn exceptional_cmd(form: &RealFormId, affine: bool) -> Result<Outcome, Error> {
    let rows = if affine {
        affine_minus1_distinguished(form)?
    } else {
        query(form, None)?
    };
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.row_no.to_string(),
                digits(&r.dyn_k),
                digits(&r.dyn_g),
                r.dim_k_orbit.to_string(),
                r.intersection_count.to_string(),
                r.levi.to_string(),
                r.radu_dim.to_string(),
            ]
        })
        .collect();
    let text = if cells.is_empty() {
        format!("{form}: no matching rows")
    } else {
        table(&["row", "dyn_k", "dyn_g", "dim", "count", "levi", "radu"], &cells)
    };
    Ok(Outcome::ok(
        json!({
            "form": form.to_string(),
            "affine_only": affine,
            "rows": rows.iter().map(|r| row_json(r)).collect::<Vec<_>>(),
        }),
        text,
    ))
}

fn dims_cmd(form: &RealFormId, label: &LabelData) -> Result<Outcome, Error> {
    let d = orbit_dimension(form, label)?;
    let k = component_count(form, label)?;
    let mut payload = json!({
        "form": form.to_string(),
        "label": label.to_string(),
        "component_count": k,
        "low_rank": form.is_low_rank(),
    });
    payload[dim_key(form)] = json!(d);
    let mut rows = vec![vec![dim_key(form).to_string(), d.to_string()]];
    if !form.is_complex() {
        let kd = d / 2;
        payload["k_orbit_complex_dim"] = json!(kd);
        payload["projective_dim"] = json!(kd - 1);
        rows.push(vec!["k_orbit_complex_dim".into(), kd.to_string()]);
        rows.push(vec!["projective_dim".into(), (kd - 1).to_string()]);
    }
    rows.push(vec!["components".into(), k.to_string()]);
    Ok(Outcome::ok(payload, table(&["quantity", "value"], &rows)))
}

fn family_key(form: &RealFormId) -> &'static str {
    use RealFormId::*;
    match form {
        SlR(_) => "sl-r",
        SlH(_) => "sl-h",
        Su(..) => "su",
        So(..) => "so",
        SpR(_) => "sp-r",
        SpH(..) => "sp-h",
        UStarH(_) => "u*-h",
        SlC(_) => "sl-c",
        SoC(_) => "so-c",
        SpC(_) => "sp-c",
        Exceptional(_) => "exceptional",
    }
}

const FAMILIES: [&str; 10] = ["sl-r", "sl-h", "su", "so", "sp-r", "sp-h", "u*-h", "sl-c", "so-c", "sp-c"];

fn verify_cmd(max_n: u32, max_nq: Option<u32>, family: Option<&str>, form: Option<&str>) -> Result<Outcome, Error> {
    let forms: Vec<RealFormId> = match (family, form) {
        (_, Some(s)) => {
            let f = parse_form(s)?;
            if f.is_exceptional() {
                return Err(Error::ExceptionalForm(f.to_string()));
            }
            vec![f]
        }
        (fam, None) => {
            if let Some(k) = fam {
                let k = k.to_ascii_lowercase();
                if !FAMILIES.contains(&k.as_str()) {
                    return Err(Error::Parse {
                        token: k,
                        message: format!("unknown family; expected one of {}", FAMILIES.join(", ")),
                    });
                }
            }
            let nq = max_nq.unwrap_or(max_n.min(3));
            forms_up_to(max_n, nq)
                .into_iter()
                .filter(|f| fam.is_none_or(|k| family_key(f) == k.to_ascii_lowercase()))
                .collect()
        }
    };
    let report = verify(&forms);
    let text = verify_text(&report);
    let payload = json!({
        "passed": report.passed(),
        "forms_checked": report.forms.len(),
        "labels_checked": report.label_count(),
        "report": serde_json::to_value(&report).expect("serializable"),
    });
    Ok(Outcome {
        payload,
        text,
        exit: if report.passed() { EXIT_OK } else { EXIT_ORACLE },
    })
}

fn verify_text(report: &VerifyReport) -> String {
    let mut lines = Vec::new();
    let rows: Vec<Vec<String>> = report
        .forms
        .iter()
        .map(|f| {
            vec![
                if f.passed() { "PASS" } else { "FAIL" }.to_string(),
                f.form.clone(),
                f.labels.len().to_string(),
                f.solved_algebra_dim.map_or("-".to_string(), |d| d.to_string()),
            ]
        })
        .collect();
    lines.push(table(&["result", "form", "labels", "algebra_dim"], &rows));
    for f in &report.forms {
        for d in &f.diagnostics {
            lines.push(format!("  {}: {d}", f.form));
        }
        for l in f.labels.iter().filter(|l| !l.passed()) {
            lines.push(format!("  {} {}: {}", f.form, l.label, l.diagnostics.join("; ")));
        }
    }
    for m in report.form_uniqueness_failures.iter().chain(&report.cayley_failures) {
        lines.push(format!("  {m}"));
    }
    lines.push(format!(
        "invariant forms: {}; cayley round trips: {}/{}",
        if report.form_uniqueness_failures.is_empty() { "ok" } else { "FAIL" },
        report.cayley_trials - report.cayley_failures.len(),
        report.cayley_trials
    ));
    lines.push(format!(
        "{}: {} forms, {} labels",
        if report.passed() { "PASS" } else { "FAIL" },
        report.forms.len(),
        report.label_count()
    ));
    lines.join("\n")
}
