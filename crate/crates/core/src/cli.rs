//! The `fmethod` command line. Every run ends with a line
//! `RESULT status=<ok|fail|error|none> exit=<0|1|2|3>`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use log::{info, warn};
use num_traits::Zero;
use serde::Serialize;
use serde_json::Value;

use crate::algebra::rational::rat_to_string;
use crate::algebra::{RatFunc, Ring};
use crate::config::{parse_weight_value, ConfigError, Format, RunConfig};
use crate::lie::builtin_setting;
use crate::serial::{self, RatTermJson, SCHEMA_VERSION};
use crate::solver::{
    solve_singular_vectors, FSetting, MultiplicityReport, Prepared, Target, WeightValue,
};
use crate::verify::{
    compare_juhl, compare_rankin_cohen, emit_operator, verify_samples, Comparison, DiffOperator,
    EquivarianceReport, OperatorJson, VerifyError,
};
use crate::weyl::parse::parse_weyl;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Error,
    None,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fail => 1,
            Status::Error => 2,
            Status::None => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
            Status::Error => "error",
            Status::None => "none",
        }
    }
}

/// What a run prints: `stdout` ends with the `RESULT` line.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "fmethod",
    version,
    about = "Equivariant differential operators by the F-method"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve for singular vectors and emit the operators.
    Solve(RunArgs),
    /// Check equivariance of an operator file.
    Verify(VerifyArgs),
    /// Solve and compare with the closed formulas.
    Compare(RunArgs),
    /// Print the algebraic Fourier transform of a Weyl-algebra expression.
    Fourier(FourierArgs),
    /// Print the setting: structure, actions and candidate degrees.
    DumpSetting(RunArgs),
}

#[derive(Args, Debug, Default, Clone)]
pub struct RunArgs {
    /// Builtin setting (same as --setting).
    pub name: Option<String>,
    #[arg(long)]
    pub setting: Option<String>,
    /// Rankin–Cohen order, or the conformal dimension.
    #[arg(long)]
    pub n: Option<usize>,
    /// Conformal target degree.
    #[arg(long)]
    pub delta: Option<u32>,
    #[arg(long)]
    pub degree_max: Option<u32>,
    /// Weight slots, `k1=sym` or `k1=4/1`; repeat or separate by commas.
    #[arg(long, value_delimiter = ',')]
    pub weights: Vec<String>,
    /// Explicit target character, `h=k1+k2+4`.
    #[arg(long, value_delimiter = ',')]
    pub target: Vec<String>,
    /// any, even or odd degrees.
    #[arg(long)]
    pub parity: Option<String>,
    /// Skip the invariant-theory reduction of the ansatz.
    #[arg(long)]
    pub no_reduce: bool,
    /// json, text or latex.
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub test_degree: Option<u32>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Print the resolved configuration instead of running.
    #[arg(long)]
    pub print_config: bool,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// A diff_operator or solve_result JSON file.
    #[arg(long)]
    pub operator: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct FourierArgs {
    pub expression: String,
    #[arg(long)]
    pub format: Option<String>,
}

#[derive(Debug)]
enum CliError {
    Config(ConfigError),
    Other(String),
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(e) => write!(f, "invalid config: {e}"),
            CliError::Other(m) => f.write_str(m),
        }
    }
}

fn other(e: impl std::fmt::Display) -> CliError {
    CliError::Other(e.to_string())
}

/// A finished command: the artifact in the requested format, an optional
/// human summary, and extra `key=value` pairs for the `RESULT` line.
struct Report {
    status: Status,
    artifact: String,
    summary: String,
    extra: Vec<(String, String)>,
}

/// Resolves file values, then flags on top.
pub fn resolve_config(args: &RunArgs) -> Result<RunConfig, ConfigError> {
    let mut c = match &args.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| ConfigError {
                field: "config".into(),
                msg: format!("{}: {e}", p.display()),
            })?;
            RunConfig::parse(&text)?
        }
        None => RunConfig::default(),
    };
    let bad = |field: &str, msg: &str| ConfigError {
        field: field.into(),
        msg: msg.into(),
    };
    match (&args.name, &args.setting) {
        (Some(a), Some(b)) if a != b => {
            return Err(bad("setting", "positional name and --setting disagree"))
        }
        (Some(s), _) | (None, Some(s)) => c.setting = s.clone(),
        (None, None) => {}
    }
    if args.n.is_some() {
        c.n = args.n;
    }
    if args.delta.is_some() {
        c.delta = args.delta;
    }
    if args.degree_max.is_some() {
        c.degree_max = args.degree_max;
    }
    for w in &args.weights {
        let (k, v) = w
            .split_once('=')
            .ok_or_else(|| bad("weights", "expected slot=value"))?;
        let v = parse_weight_value(v).ok_or_else(|| {
            bad(
                &format!("weights.{}", k.trim()),
                "expected sym or a rational",
            )
        })?;
        c.weights.insert(k.trim().to_string(), v);
    }
    for t in &args.target {
        let (k, v) = t
            .split_once('=')
            .ok_or_else(|| bad("target", "expected name=linear form"))?;
        c.target.insert(k.trim().to_string(), v.trim().to_string());
    }
    if let Some(p) = &args.parity {
        c.parity = crate::solver::Parity::parse(p)
            .ok_or_else(|| bad("parity", "expected any, even or odd"))?;
    }
    if args.no_reduce {
        c.reduce = false;
    }
    if let Some(f) = &args.format {
        c.format = Format::parse(f).ok_or_else(|| bad("format", "expected json, text or latex"))?;
    }
    if args.out.is_some() {
        c.out = args.out.clone();
    }
    if let Some(t) = args.test_degree {
        c.test_degree = t;
    }
    if let Some(s) = args.samples {
        if s == 0 {
            return Err(bad("samples", "must be at least 1"));
        }
        c.samples = s;
    }
    if let Some(s) = args.seed {
        c.seed = s;
    }
    Ok(c)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct SingularVectorJson {
    degree: u32,
    weight: BTreeMap<String, String>,
    text: String,
    monomials: Vec<RatTermJson>,
    multiplicity_report: MultiplicityReport,
}

#[derive(Serialize)]
struct SolveJson {
    schema_version: u32,
    kind: &'static str,
    setting: String,
    params: Vec<String>,
    weights: BTreeMap<String, String>,
    coordinates: Vec<String>,
    singular_vectors: Vec<SingularVectorJson>,
    reports: Vec<MultiplicityReport>,
    operators: Vec<OperatorJson>,
}

fn weight_map(s: &FSetting, w: &[(usize, RatFunc)]) -> BTreeMap<String, String> {
    w.iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(a, v)| (s.lie.sub()[*a].name.clone(), v.to_text()))
        .collect()
}

fn cmd_solve(cfg: &RunConfig) -> Result<Report, CliError> {
    let setting = cfg.fsetting()?;
    let prep = Prepared::new(setting.clone()).map_err(other)?;
    let out = solve_singular_vectors(setting).map_err(other)?;
    let dual = prep.setting.dual_space();
    let params = prep.setting.params.clone();
    let mut vectors = Vec::new();
    let mut ops = Vec::new();
    let mut summary = format!(
        "{}: {} singular vector(s)\n",
        prep.setting.label,
        out.vectors.len()
    );
    for r in &out.reports {
        if r.anomaly {
            warn!(
                "degree {}: kernel dimension {} at symbolic weights",
                r.degree, r.kernel_dim
            );
        }
        if let Some(d) = &r.degeneracy {
            info!("degree {}: degenerates where {d} vanishes", r.degree);
        }
    }
    for sv in &out.vectors {
        let op = emit_operator(&prep, sv);
        let text = sv.psi.render(false);
        summary.push_str(&format!(
            "  degree {}: psi = {text}\n    operator: {}\n",
            sv.degree,
            op.render(false)
        ));
        vectors.push(SingularVectorJson {
            degree: sv.degree,
            weight: weight_map(&prep.setting, &sv.weight),
            text,
            monomials: serial::rat_poly_to_json(&sv.psi, &params),
            multiplicity_report: sv.report.clone(),
        });
        ops.push(op);
    }
    let artifact = match cfg.format {
        Format::Json => to_json(&SolveJson {
            schema_version: SCHEMA_VERSION,
            kind: "solve_result",
            setting: prep.setting.label.clone(),
            params: params.to_vec(),
            weights: prep
                .setting
                .fixed
                .iter()
                .map(|(k, v)| (k.clone(), rat_to_string(v)))
                .collect(),
            coordinates: dual.coords().to_vec(),
            singular_vectors: vectors,
            reports: out.reports.clone(),
            operators: ops.iter().map(DiffOperator::to_json).collect(),
        }),
        Format::Text => summary.clone(),
        Format::Latex => {
            let mut s = String::new();
            for (sv, op) in out.vectors.iter().zip(&ops) {
                s.push_str(&format!(
                    "% degree {}\n\\psi = {}\n\\\\\nD = {}\n",
                    sv.degree,
                    sv.psi.render(true),
                    op.render(true)
                ));
            }
            s
        }
    };
    let status = if out.vectors.is_empty() {
        Status::None
    } else {
        Status::Ok
    };
    Ok(Report {
        status,
        artifact,
        summary,
        extra: vec![("vectors".into(), out.vectors.len().to_string())],
    })
}

/// Reads a diff_operator or solve_result file.
fn read_operators(path: &PathBuf) -> Result<Vec<DiffOperator>, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| other(format!("{}: {e}", path.display())))?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| other(format!("{}: {e}", path.display())))?;
    let parse = |v: &Value| -> Result<DiffOperator, CliError> {
        let j: OperatorJson = serde_json::from_value(v.clone())
            .map_err(|e| other(VerifyError::Malformed(e.to_string())))?;
        DiffOperator::from_json(&j).map_err(other)
    };
    match v.get("kind").and_then(Value::as_str) {
        Some("diff_operator") => Ok(vec![parse(&v)?]),
        Some("solve_result") => v
            .get("operators")
            .and_then(Value::as_array)
            .ok_or_else(|| {
                other(VerifyError::Malformed(
                    "solve_result without operators".into(),
                ))
            })?
            .iter()
            .map(parse)
            .collect(),
        _ => Err(other(VerifyError::Malformed(
            "expected kind diff_operator or solve_result".into(),
        ))),
    }
}

/// `juhl(3)` to `("juhl", Some(3))`.
fn parse_label(label: &str) -> Result<(String, Option<usize>), CliError> {
    match label.split_once('(') {
        Some((name, rest)) => {
            let n = rest
                .strip_suffix(')')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| other(format!("bad setting label {label:?}")))?;
            Ok((name.to_string(), Some(n)))
        }
        None => Ok((label.to_string(), None)),
    }
}

fn operator_setting(cfg: &RunConfig, op: &DiffOperator) -> Result<Prepared, CliError> {
    let (name, n) = parse_label(&op.setting)?;
    if !cfg.setting.is_empty() && cfg.setting != name {
        return Err(CliError::Config(ConfigError {
            field: "setting".into(),
            msg: format!("the operator belongs to {}", op.setting),
        }));
    }
    let b = builtin_setting(&name, n).map_err(other)?;
    let mut weights: BTreeMap<String, WeightValue> = op
        .weights
        .iter()
        .map(|(k, v)| (k.clone(), WeightValue::Value(v.clone())))
        .collect();
    for (k, v) in &cfg.weights {
        if weights.get(k).is_some_and(|w| w != v)
            || (matches!(v, WeightValue::Value(_)) && !weights.contains_key(k))
        {
            return Err(CliError::Config(ConfigError {
                field: format!("weights.{k}"),
                msg: "differs from the weights the operator was built with".into(),
            }));
        }
        weights.insert(k.clone(), v.clone());
    }
    let s = FSetting::from_builtin(&b, &weights, Target::Discover, op.degree).map_err(other)?;
    if s.params != op.params {
        return Err(other(VerifyError::Mismatch(format!(
            "operator parameters [{}] but setting parameters [{}]",
            op.params.join(","),
            s.params.join(",")
        ))));
    }
    Prepared::new(s).map_err(other)
}

#[derive(Serialize)]
struct VerifiedJson {
    setting: String,
    degree: u32,
    operator: String,
    pass: bool,
    reports: Vec<EquivarianceReport>,
}

#[derive(Serialize)]
struct VerifyJson {
    schema_version: u32,
    kind: &'static str,
    samples: usize,
    seed: u64,
    test_degree: u32,
    operators: Vec<VerifiedJson>,
    pass: bool,
}

fn cmd_verify(cfg: &RunConfig, path: &PathBuf) -> Result<Report, CliError> {
    let ops = read_operators(path)?;
    if ops.is_empty() {
        return Ok(Report {
            status: Status::None,
            artifact: String::new(),
            summary: "no operators in the file\n".into(),
            extra: vec![],
        });
    }
    let mut results = Vec::new();
    let mut failing = Vec::new();
    let mut summary = String::new();
    for op in &ops {
        let prep = operator_setting(cfg, op)?;
        let samples = if op.params.is_empty() { 1 } else { cfg.samples };
        let reports =
            verify_samples(&prep, op, samples, cfg.seed, cfg.test_degree).map_err(other)?;
        let pass = reports.iter().all(|r| r.pass);
        let mut names: Vec<&str> = reports.iter().flat_map(|r| r.failing()).collect();
        names.sort();
        names.dedup();
        summary.push_str(&format!(
            "{} degree {}: {}{}\n",
            op.setting,
            op.degree,
            if pass { "PASS" } else { "FAIL" },
            if names.is_empty() {
                String::new()
            } else {
                format!(" (failing: {})", names.join(", "))
            }
        ));
        for n in names {
            if !failing.contains(&n.to_string()) {
                failing.push(n.to_string());
            }
        }
        results.push(VerifiedJson {
            setting: op.setting.clone(),
            degree: op.degree,
            operator: op.render(false),
            pass,
            reports,
        });
    }
    let pass = results.iter().all(|r| r.pass);
    let artifact = match cfg.format {
        Format::Json => to_json(&VerifyJson {
            schema_version: SCHEMA_VERSION,
            kind: "verify_result",
            samples: cfg.samples,
            seed: cfg.seed,
            test_degree: cfg.test_degree,
            operators: results,
            pass,
        }),
        Format::Text | Format::Latex => {
            let mut s = String::new();
            for r in &results {
                s.push_str(&format!("{}\n", r.operator));
                for rep in &r.reports {
                    s.push_str(&rep.to_text());
                }
            }
            s + &summary
        }
    };
    let mut extra = Vec::new();
    if !failing.is_empty() {
        extra.push(("failing".into(), failing.join(",")));
    }
    Ok(Report {
        status: if pass { Status::Ok } else { Status::Fail },
        artifact,
        summary,
        extra,
    })
}

pub const ODD_DELTA_NOTICE: &str = "the closed conformal formula is stated for even delta only; \
odd delta is an open question and is not compared (the solver still runs; use verify)";

#[derive(Serialize)]
struct CompareJson {
    schema_version: u32,
    kind: &'static str,
    setting: String,
    comparison: Comparison,
}

fn cmd_compare(cfg: &RunConfig) -> Result<Report, CliError> {
    let field_err = |field: &str, msg: &str| {
        CliError::Config(ConfigError {
            field: field.into(),
            msg: msg.into(),
        })
    };
    let delta = match cfg.setting.as_str() {
        "rankin_cohen" => None,
        "juhl" => {
            let d = cfg
                .delta
                .ok_or_else(|| field_err("delta", "compare needs the target degree"))?;
            if d % 2 == 1 {
                return Err(other(VerifyError::Unsupported(ODD_DELTA_NOTICE.into())));
            }
            Some(d)
        }
        "" => return Err(field_err("setting", "no setting given")),
        s => return Err(field_err("setting", &format!("no closed formula for {s}"))),
    };
    if delta.is_none() && cfg.n.is_none() {
        return Err(field_err("n", "compare needs the Rankin–Cohen order"));
    }
    if !cfg.target.is_empty() {
        return Err(field_err("target", "compare selects the target by degree"));
    }
    let setting = cfg.fsetting()?;
    let degree = cfg.target_degree()?.expect("checked above");
    let setting = FSetting {
        degree_max: degree,
        ..setting
    };
    let lam = setting.lambda.clone();
    let label = setting.label.clone();
    let out = solve_singular_vectors(setting.clone()).map_err(other)?;
    let Some(sv) = out.vectors.iter().find(|v| v.degree == degree) else {
        return Ok(Report {
            status: Status::None,
            artifact: String::new(),
            summary: format!("{label}: no singular vector at degree {degree}\n"),
            extra: vec![],
        });
    };
    let slot = |name: &str| -> RatFunc {
        let i = setting.lie.index_of(name).expect("builtin slot");
        lam.value(i).expect("builtin slot").get(0, 0).clone()
    };
    let comparison = match delta {
        None => compare_rankin_cohen(degree, &slot("h1"), &slot("h2"), &sv.psi),
        Some(d) => compare_juhl(setting.lie.coords().len(), d, &slot("D"), &sv.psi),
    }
    .map_err(other)?;
    let summary = format!(
        "{label} degree {degree}: {}{}\n",
        if comparison.proportional {
            "proportional"
        } else {
            "NOT proportional"
        },
        comparison
            .scalar
            .as_ref()
            .map(|s| format!(", scalar {s}"))
            .unwrap_or_default()
    );
    let artifact = match cfg.format {
        Format::Json => to_json(&CompareJson {
            schema_version: SCHEMA_VERSION,
            kind: "comparison",
            setting: label,
            comparison: comparison.clone(),
        }),
        _ => format!(
            "expected: {}\nfound:    {}\n{summary}",
            comparison.expected, comparison.found
        ),
    };
    let mut extra = Vec::new();
    if let Some(s) = &comparison.scalar {
        extra.push(("scalar".into(), s.replace(' ', "")));
    }
    Ok(Report {
        status: if comparison.proportional {
            Status::Ok
        } else {
            Status::Fail
        },
        artifact,
        summary,
        extra,
    })
}

fn cmd_fourier(args: &FourierArgs) -> Result<Report, CliError> {
    let format = match &args.format {
        Some(f) => Format::parse(f).ok_or_else(|| {
            CliError::Config(ConfigError {
                field: "format".into(),
                msg: "expected json, text or latex".into(),
            })
        })?,
        None => Format::Text,
    };
    let w = parse_weyl(&args.expression).map_err(other)?;
    let hat = w.fourier_hat();
    let text = hat.to_text();
    let artifact = match format {
        Format::Text => format!("{text}\n"),
        Format::Latex => format!("{}\n", hat.to_latex()),
        Format::Json => to_json(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "kind": "fourier",
            "input": w.to_text(),
            "output": text,
            "latex": hat.to_latex(),
        })),
    };
    Ok(Report {
        status: Status::Ok,
        summary: artifact.clone(),
        artifact,
        extra: vec![],
    })
}

#[derive(Serialize)]
struct ActionJson {
    element: String,
    grade: i8,
    dpi: String,
    dpi_hat: String,
}

#[derive(Serialize)]
struct CandidateJson {
    degree: u32,
    weight: BTreeMap<String, String>,
    monomials: usize,
    ansatz: usize,
}

#[derive(Serialize)]
struct DumpJson {
    schema_version: u32,
    kind: &'static str,
    setting: String,
    params: Vec<String>,
    lie: Value,
    lambda: BTreeMap<String, String>,
    mu: BTreeMap<String, String>,
    actions: Vec<ActionJson>,
    candidates: Vec<CandidateJson>,
}

fn cmd_dump(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut cfg = cfg.clone();
    if cfg.degree_max.is_none() && cfg.target_degree()?.is_none() {
        cfg.degree_max = Some(0);
    }
    let setting = cfg.fsetting()?;
    let prep = Prepared::new(setting).map_err(other)?;
    let s = &prep.setting;
    let lie = &s.lie;
    let character = |w: &crate::lie::RepWeight| -> BTreeMap<String, String> {
        w.values()
            .iter()
            .map(|(i, f)| (lie.basis()[*i].name.clone(), f.get(0, 0).to_text()))
            .collect()
    };
    let mut actions = Vec::new();
    for (i, b) in lie.basis().iter().enumerate() {
        let y = lie.basis_vector(i);
        actions.push(ActionJson {
            element: b.name.clone(),
            grade: b.grade,
            dpi: lie.dpi(&y, &prep.mu).map_err(other)?.to_text(),
            dpi_hat: lie.dpi_hat(&y, &prep.mu).map_err(other)?.to_text(),
        });
    }
    let candidates = prep
        .candidate_degrees()
        .iter()
        .map(|c| CandidateJson {
            degree: c.degree,
            weight: weight_map(s, &c.weight),
            monomials: c.monomials.len(),
            ansatz: prep.step4_reduce(c, s.reduce).basis.len(),
        })
        .collect::<Vec<_>>();
    let dump = DumpJson {
        schema_version: SCHEMA_VERSION,
        kind: "setting_dump",
        setting: s.label.clone(),
        params: s.params.to_vec(),
        lie: serde_json::to_value(lie.to_json()).map_err(other)?,
        lambda: character(&s.lambda),
        mu: character(&prep.mu),
        actions,
        candidates,
    };
    let mut summary = format!(
        "{} (dim {}), parameters [{}]\n",
        dump.setting,
        lie.dim(),
        dump.params.join(", ")
    );
    for a in &dump.actions {
        summary.push_str(&format!(
            "  {} (grade {}): dpi_hat = {}\n",
            a.element, a.grade, a.dpi_hat
        ));
    }
    for c in &dump.candidates {
        summary.push_str(&format!(
            "  candidate degree {}: {} monomials, ansatz {}\n",
            c.degree, c.monomials, c.ansatz
        ));
    }
    let artifact = match cfg.format {
        Format::Json => to_json(&dump),
        _ => summary.clone(),
    };
    Ok(Report {
        status: Status::Ok,
        artifact,
        summary,
        extra: vec![],
    })
}

fn run_args(
    args: &RunArgs,
    f: impl FnOnce(&RunConfig) -> Result<Report, CliError> + Send,
) -> Result<Report, CliError> {
    let cfg = resolve_config(args)?;
    if args.print_config {
        return Ok(Report {
            status: Status::Ok,
            artifact: cfg.to_text(),
            summary: String::new(),
            extra: vec![],
        });
    }
    match args.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(other)?;
            pool.install(|| f(&cfg))
        }
        None => f(&cfg),
    }
    .and_then(|r| write_out(&cfg, r))
}

/// With `--out` the artifact goes to the file and the summary to stdout.
fn write_out(cfg: &RunConfig, r: Report) -> Result<Report, CliError> {
    match &cfg.out {
        Some(p) => {
            std::fs::write(p, &r.artifact).map_err(|e| other(format!("{}: {e}", p.display())))?;
            Ok(Report {
                artifact: r.summary.clone(),
                ..r
            })
        }
        None => Ok(r),
    }
}

fn result_line(status: Status, extra: &[(String, String)]) -> String {
    let mut s = format!("RESULT status={} exit={}", status.as_str(), status.code());
    for (k, v) in extra {
        s.push_str(&format!(" {k}={v}"));
    }
    s + "\n"
}

/// Runs the command line `args` (including the program name).
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() {
                Status::Error
            } else {
                Status::Ok
            };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome {
                status,
                stdout: stdout + &result_line(status, &[]),
                stderr,
            };
        }
    };
    let result = match &cli.command {
        Command::Solve(a) => run_args(a, cmd_solve),
        Command::Verify(v) => run_args(&v.run, |c| cmd_verify(c, &v.operator)),
        Command::Compare(a) => run_args(a, cmd_compare),
        Command::DumpSetting(a) => run_args(a, cmd_dump),
        Command::Fourier(f) => cmd_fourier(f),
    };
    match result {
        Ok(r) => Outcome {
            status: r.status,
            stdout: r.artifact + &result_line(r.status, &r.extra),
            stderr: String::new(),
        },
        Err(e) => {
            let extra = match &e {
                CliError::Config(c) => vec![("field".to_string(), c.field.clone())],
                CliError::Other(_) => vec![],
            };
            Outcome {
                status: Status::Error,
                stdout: result_line(Status::Error, &extra),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}
