//! Argument parsing, command dispatch and report rendering.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use nlie_core::analysis::{
    center_membership, center_probe_ambient, center_probe_quotient, is_closed_homogeneous, kth_root,
    minimal_root_homogeneous, saturate_poisson_ideal, AnalysisError, SaturationConfig, Verdict, DEFAULT_MAX_ROUNDS,
};
use nlie_core::brackets::{
    verify_filippov, verify_leibniz, verify_skew, verify_strong, Bracket, BracketError, IdentityReport, TrialConfig,
};
use nlie_core::expr::{parse_all, parse_in, ExprError};
use nlie_core::groebner::{GroebnerError, MonomialOrder, DEFAULT_STEP_BUDGET};
use nlie_core::poly::{int, parse_rational, Polynomial, Rational};
use nlie_core::quotient::{QuotientContext, QuotientError};
use nlie_core::structures::{builtin, make_jacobian, AlgebraSpec, StructureError, BUILTINS};

use crate::suite::{self, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "nlie", version, about = "Exact computations in n-Lie-Poisson algebras and their quotients")]
pub struct Cli {
    /// Print a JSON report instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Monomial order for quotient and saturation computations.
    #[arg(long, global = true, default_value = "grevlex")]
    order: MonomialOrder,
    /// Reduction-step budget for Groebner computations.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_BUDGET)]
    budget: u64,
    /// Comma-separated variable order for free-standing expressions.
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Default)]
struct ParamArgs {
    /// First parameter of elliptic and malcev-abg.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    beta: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    gamma: Option<Rational>,
    /// Number of variables of quadric.
    #[arg(long)]
    dim: Option<usize>,
    /// Comma-separated diagonal coefficients of nlie.
    #[arg(long, value_delimiter = ',', value_parser = rational, allow_hyphen_values = true)]
    alphas: Option<Vec<Rational>>,
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    /// Built-in algebra name (see `algebra list`).
    #[arg(long, conflicts_with = "casimir")]
    algebra: Option<String>,
    /// Custom Jacobian bracket defined by this polynomial.
    #[arg(long, allow_hyphen_values = true)]
    casimir: Option<String>,
    /// Arity of the custom bracket; the ring then has arity + 1 variables.
    #[arg(long, requires = "casimir")]
    arity: Option<usize>,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityKind {
    Skew,
    Leibniz,
    Filippov,
    Strong,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List or show built-in algebras.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// Evaluate the bracket of n expressions.
    Bracket {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Check bracket identities on seeded random inputs.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value = "all")]
        identity: IdentityKind,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Computations in the quotient by C - lambda.
    Quotient {
        #[command(subcommand)]
        op: QuotientOp,
    },
    /// k-th root of a homogeneous polynomial.
    Root {
        expr: String,
        #[arg(long)]
        k: u32,
    },
    /// Whether a homogeneous polynomial is closed.
    Closed { expr: String },
    /// Minimal root of a homogeneous polynomial.
    Minroot { expr: String },
    /// Center membership of an expression, or a degree-bounded center probe.
    Center {
        #[command(flatten)]
        algebra: AlgebraArgs,
        expr: Option<String>,
        /// Probe the center up to this degree.
        #[arg(long, conflicts_with = "expr")]
        degree: Option<u32>,
        /// Work in the quotient by C - lambda.
        #[arg(long)]
        quotient: bool,
        #[arg(long, value_parser = rational, default_value = "1", allow_hyphen_values = true)]
        lambda: Rational,
    },
    /// Saturate an ideal of the quotient under the bracket.
    Saturate {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_parser = rational, default_value = "1", allow_hyphen_values = true)]
        lambda: Rational,
        /// Seed polynomial of the ideal; repeatable.
        #[arg(long = "seed", required = true, allow_hyphen_values = true)]
        seeds: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_ROUNDS)]
        rounds: usize,
        /// Treat a proper stable ideal as the expected outcome.
        #[arg(long)]
        expect_proper: bool,
    },
    /// Centrality and closedness of every built-in Casimir element.
    CasimirSuite,
    /// Run the regression battery.
    PaperSuite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated item numbers to run (default all).
        #[arg(long, value_delimiter = ',')]
        items: Option<Vec<u32>>,
    },
}

#[derive(Debug, Subcommand)]
enum AlgebraAction {
    /// Names of the built-in algebras.
    List,
    /// Generators, Casimir and nonzero generator brackets.
    Show {
        name: String,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Debug, Args)]
struct QuotientArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    #[arg(long, value_parser = rational, default_value = "1", allow_hyphen_values = true)]
    lambda: Rational,
    #[arg(required = true)]
    exprs: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum QuotientOp {
    /// Canonical representatives.
    Reduce(QuotientArgs),
    /// Bracket of n classes.
    Bracket(QuotientArgs),
    /// Components by degree modulo deg C.
    Grade(QuotientArgs),
    /// Homogeneous representative of an m-homogeneous class.
    Lift(QuotientArgs),
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

impl CliError {
    fn is_budget(&self) -> bool {
        let budget = |g: &GroebnerError| matches!(g, GroebnerError::BudgetExhausted { .. });
        match self {
            CliError::Quotient(QuotientError::Groebner(g)) => budget(g),
            CliError::Analysis(AnalysisError::Groebner(g)) => budget(g),
            CliError::Analysis(AnalysisError::Quotient(QuotientError::Groebner(g))) => budget(g),
            _ => false,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Expr(_) => "parse",
            _ if self.is_budget() => "budget",
            _ => "input",
        }
    }

    fn exit_code(&self) -> i32 {
        if self.is_budget() {
            EXIT_BUDGET
        } else {
            EXIT_USAGE
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Status {
    Pass,
    Fail,
    BudgetExhausted,
}

impl Status {
    fn exit_code(self) -> i32 {
        match self {
            Status::Pass => EXIT_OK,
            Status::Fail => EXIT_FAILURE,
            Status::BudgetExhausted => EXIT_BUDGET,
        }
    }
}

struct Report {
    status: Status,
    result: Value,
    text: String,
}

impl Report {
    fn pass(result: Value, text: String) -> Self {
        Self { status: Status::Pass, result, text }
    }
}

/// Process output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Output { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli) {
        Ok(r) => {
            let code = r.status.exit_code();
            let stdout = if cli.json {
                let v = json!({ "command": name, "status": r.status, "exit_code": code, "result": r.result });
                format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
            } else {
                r.text
            };
            Output { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = e.exit_code();
            if cli.json {
                let v = json!({
                    "command": name,
                    "status": "error",
                    "exit_code": code,
                    "error": { "kind": e.kind(), "message": e.to_string() },
                });
                let stdout = format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"));
                Output { code, stdout, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: format!("error: {e}\n") }
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Algebra { action: AlgebraAction::List } => "algebra list",
        Command::Algebra { action: AlgebraAction::Show { .. } } => "algebra show",
        Command::Bracket { .. } => "bracket",
        Command::Verify { .. } => "verify",
        Command::Quotient { op: QuotientOp::Reduce(_) } => "quotient reduce",
        Command::Quotient { op: QuotientOp::Bracket(_) } => "quotient bracket",
        Command::Quotient { op: QuotientOp::Grade(_) } => "quotient grade",
        Command::Quotient { op: QuotientOp::Lift(_) } => "quotient lift",
        Command::Root { .. } => "root",
        Command::Closed { .. } => "closed",
        Command::Minroot { .. } => "minroot",
        Command::Center { .. } => "center",
        Command::Saturate { .. } => "saturate",
        Command::CasimirSuite => "casimir-suite",
        Command::PaperSuite { .. } => "paper-suite",
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// `key  value` lines with the values aligned.
fn aligned(rows: &[(&str, String)]) -> String {
    let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}

fn builtin_params(name: &str, p: &ParamArgs) -> Result<Vec<Rational>, CliError> {
    let one = || int(1);
    let single = p.alpha.iter().chain(&p.beta).chain(&p.gamma).count() + usize::from(p.dim.is_some()) + usize::from(p.alphas.is_some());
    let unexpected = |what: &str| CliError::Usage(format!("algebra `{name}` does not take {what}"));
    match name {
        "elliptic" if single == usize::from(p.alpha.is_some()) => Ok(p.alpha.iter().cloned().collect()),
        "elliptic" => Err(unexpected("--beta, --gamma, --dim or --alphas")),
        "quadric" if single == usize::from(p.dim.is_some()) => Ok(p.dim.iter().map(|&d| int(d as i64)).collect()),
        "quadric" => Err(unexpected("--alpha, --beta, --gamma or --alphas")),
        "nlie" => match &p.alphas {
            Some(a) if single == 1 => Ok(a.clone()),
            Some(_) => Err(unexpected("--alpha, --beta, --gamma or --dim")),
            None => Err(CliError::Usage("algebra `nlie` needs --alphas a1,...,aN".into())),
        },
        "malcev-abg" if p.dim.is_none() && p.alphas.is_none() => Ok(vec![
            p.alpha.clone().unwrap_or_else(one),
            p.beta.clone().unwrap_or_else(one),
            p.gamma.clone().unwrap_or_else(one),
        ]),
        "malcev-abg" => Err(unexpected("--dim or --alphas")),
        _ if single > 0 => Err(unexpected("parameters")),
        _ => Ok(Vec::new()),
    }
}

fn resolve(a: &AlgebraArgs, vars: Option<&[String]>) -> Result<AlgebraSpec, CliError> {
    if let Some(src) = &a.casimir {
        if a.params.alpha.is_some() || a.params.beta.is_some() || a.params.gamma.is_some() || a.params.dim.is_some() || a.params.alphas.is_some() {
            return Err(CliError::Usage("algebra parameters do not apply to --casimir".into()));
        }
        let (ctx, c) = parse_all(&[src.as_str()], vars)?;
        if let Some(n) = a.arity {
            if ctx.len() != n + 1 {
                return Err(CliError::Usage(format!(
                    "arity {n} needs {} variables but the ring has {} ({}); use --vars",
                    n + 1,
                    ctx.len(),
                    ctx.names().join(", ")
                )));
            }
        }
        if ctx.len() < 2 {
            return Err(CliError::Usage("a Jacobian bracket needs at least two variables; use --vars".into()));
        }
        return Ok(make_jacobian("custom", c.into_iter().next().expect("one expression"))?);
    }
    let Some(name) = &a.algebra else {
        return Err(CliError::Usage("choose an algebra with --algebra <name> or --casimir <expr>".into()));
    };
    if vars.is_some() {
        return Err(CliError::Usage("--vars applies only to free-standing expressions and --casimir".into()));
    }
    Ok(builtin(name, &builtin_params(name, &a.params)?)?)
}

fn parse_many(spec: &AlgebraSpec, srcs: &[String]) -> Result<Vec<Polynomial>, CliError> {
    Ok(srcs.iter().map(|s| parse_in(spec.context(), s)).collect::<Result<_, _>>()?)
}

fn parse_one(src: &str, vars: Option<&[String]>) -> Result<Polynomial, CliError> {
    let (_, mut ps) = parse_all(&[src], vars)?;
    Ok(ps.remove(0))
}

fn quotient_of(spec: &AlgebraSpec, lambda: &Rational, order: &MonomialOrder) -> Result<QuotientContext, CliError> {
    let c = spec.casimir.clone().ok_or_else(|| QuotientError::NoCasimir(spec.name.clone()))?;
    Ok(QuotientContext::new(spec.bracket.clone(), c, lambda.clone(), order)?)
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let vars = cli.vars.as_deref();
    match &cli.command {
        Command::Algebra { action: AlgebraAction::List } => {
            let list: Vec<Value> = BUILTINS.iter().map(|(n, d)| json!({ "name": n, "description": d })).collect();
            let rows: Vec<(&str, String)> = BUILTINS.iter().map(|(n, d)| (*n, d.to_string())).collect();
            Ok(Report::pass(json!({ "algebras": list }), aligned(&rows)))
        }
        Command::Algebra { action: AlgebraAction::Show { name, params } } => {
            let spec = builtin(name, &builtin_params(name, params)?)?;
            let s = spec.summary();
            Ok(Report::pass(to_value(&s), s.to_string()))
        }
        Command::Bracket { algebra, exprs } => {
            let spec = resolve(algebra, vars)?;
            let args = parse_many(&spec, exprs)?;
            let v = spec.bracket.eval(&args)?;
            let text = format!("{{{}}} = {v}\n", exprs.join(", "));
            Ok(Report::pass(json!({ "algebra": spec.name, "inputs": exprs, "value": v.to_string() }), text))
        }
        Command::Verify { algebra, identity, trials, seed } => {
            let spec = resolve(algebra, vars)?;
            verify(&spec, *identity, *trials, *seed)
        }
        Command::Quotient { op } => quotient(op, vars, &cli.order),
        Command::Root { expr, k } => {
            let c = parse_one(expr, vars)?;
            let r = kth_root(&c, *k)?;
            let text = match &r.root {
                Some(kr) => aligned(&[("k", k.to_string()), ("root", kr.root.to_string()), ("alpha", kr.alpha.to_string())]),
                None => aligned(&[("k", k.to_string()), ("root", "none".into())]),
            };
            Ok(Report::pass(to_value(&r), text))
        }
        Command::Closed { expr } => {
            let c = parse_one(expr, vars)?;
            let r = is_closed_homogeneous(&c)?;
            let mut rows = vec![("closed", r.closed.to_string())];
            if let Some(kr) = r.witness.as_ref().and_then(|w| w.root.as_ref().map(|kr| (w.k, kr))) {
                rows.push(("witness", format!("{} * ({})^{}", kr.1.alpha, kr.1.root, kr.0)));
            }
            Ok(Report::pass(to_value(&r), aligned(&rows)))
        }
        Command::Minroot { expr } => {
            let c = parse_one(expr, vars)?;
            let r = minimal_root_homogeneous(&c)?;
            let text = aligned(&[("root", r.root.to_string()), ("k", r.k.to_string()), ("alpha", r.alpha.to_string())]);
            Ok(Report::pass(to_value(&r), text))
        }
        Command::Center { algebra, expr, degree, quotient, lambda } => {
            let spec = resolve(algebra, vars)?;
            let q = if *quotient { Some(quotient_of(&spec, lambda, &cli.order)?) } else { None };
            match expr {
                Some(src) => {
                    let f = parse_in(spec.context(), src)?;
                    let m = center_membership(&spec.bracket, &f, q.as_ref());
                    let mut rows = vec![("central", m.central.to_string()), ("checks", m.checks.to_string())];
                    if let Some(d) = m.defects.first() {
                        rows.push(("defect", format!("{{{}}} = {}", d.at.join(", "), d.value)));
                    }
                    Ok(Report::pass(to_value(&m), aligned(&rows)))
                }
                None => {
                    let d = degree.unwrap_or(2);
                    let probe = match &q {
                        Some(q) => center_probe_quotient(q, d),
                        None => center_probe_ambient(&spec.bracket, d),
                    };
                    let basis: Vec<String> = probe.basis.iter().map(ToString::to_string).collect();
                    let text = aligned(&[
                        ("degree", d.to_string()),
                        ("quotient", probe.quotient.to_string()),
                        ("unknowns", probe.unknowns.to_string()),
                        ("basis", basis.join(", ")),
                    ]);
                    Ok(Report::pass(to_value(&probe), text))
                }
            }
        }
        Command::Saturate { algebra, lambda, seeds, rounds, expect_proper } => {
            let spec = resolve(algebra, vars)?;
            let q = quotient_of(&spec, lambda, &cli.order)?;
            let seeds = parse_many(&spec, seeds)?;
            let cfg = SaturationConfig { max_rounds: *rounds, budget: cli.budget };
            let r = saturate_poisson_ideal(&q, &seeds, cfg)?;
            let status = match (r.verdict, expect_proper) {
                (Verdict::BudgetExhausted, _) => Status::BudgetExhausted,
                (Verdict::WholeRing, false) | (Verdict::ProperStable, true) => Status::Pass,
                _ => Status::Fail,
            };
            let mut rows = vec![
                ("algebra", spec.name.clone()),
                ("casimir", r.casimir.clone()),
                ("lambda", r.lambda.clone()),
                ("seeds", r.seeds.join(", ")),
                ("verdict", r.verdict.as_str().to_string()),
                ("rounds", r.iterations.to_string()),
                ("steps", r.steps_used.to_string()),
                ("basis size", r.final_basis.len().to_string()),
            ];
            if r.verdict == Verdict::ProperStable {
                rows.push(("verified", r.verified.to_string()));
            }
            if let Some(x) = &r.exhausted {
                rows.push(("exhausted", x.clone()));
            }
            Ok(Report { status, result: to_value(&r), text: aligned(&rows) })
        }
        Command::CasimirSuite => casimir_suite(),
        Command::PaperSuite { seed, items } => {
            let report = match items {
                None => suite::paper_suite(*seed),
                Some(ids) => {
                    if let Some(bad) = ids.iter().find(|i| !suite::ITEMS.iter().any(|(id, _, _)| id == *i)) {
                        return Err(CliError::Usage(format!("no suite item {bad} (items are 1-{})", suite::ITEMS.len())));
                    }
                    let items: Vec<_> = ids.iter().map(|&i| suite::run_item(i, *seed)).collect();
                    let pass = items.iter().all(|i| i.pass);
                    SuiteReport { seed: *seed, items, pass }
                }
            };
            let status = if report.pass { Status::Pass } else { Status::Fail };
            Ok(Report { status, result: to_value(&report), text: suite_text(&report) })
        }
    }
}

fn verify(spec: &AlgebraSpec, kind: IdentityKind, trials: usize, seed: u64) -> Result<Report, CliError> {
    let cfg = TrialConfig::new(trials, seed);
    let b = &spec.bracket;
    let run = |k: IdentityKind| match k {
        IdentityKind::Skew => verify_skew(b, &cfg),
        IdentityKind::Leibniz => verify_leibniz(b, &cfg),
        IdentityKind::Filippov => verify_filippov(b, &cfg),
        IdentityKind::Strong => verify_strong(b, &cfg),
        IdentityKind::All => unreachable!(),
    };
    let reports: Vec<IdentityReport> = match kind {
        IdentityKind::All => [IdentityKind::Skew, IdentityKind::Leibniz, IdentityKind::Filippov, IdentityKind::Strong]
            .into_iter()
            .map(run)
            .collect(),
        k => vec![run(k)],
    };
    let pass = reports.iter().all(|r| r.pass);
    let mut text = format!("algebra {}  arity {}  trials {trials}  seed {seed}\n", spec.name, spec.arity());
    for r in &reports {
        let verdict = if r.pass { "pass" } else { "FAIL" };
        let _ = writeln!(
            text,
            "  {:<9} {verdict}  {} random, {} on generators, {} failures",
            r.identity, r.trials, r.generator_checks, r.failure_count
        );
        if let Some(w) = r.witness() {
            let _ = writeln!(text, "    witness ({}) defect {}", w.inputs.join(", "), w.defect);
        }
    }
    let result = json!({ "algebra": spec.name, "arity": spec.arity(), "seed": seed, "reports": reports, "pass": pass });
    Ok(Report { status: if pass { Status::Pass } else { Status::Fail }, result, text })
}

fn quotient(op: &QuotientOp, vars: Option<&[String]>, order: &MonomialOrder) -> Result<Report, CliError> {
    let (QuotientOp::Reduce(a) | QuotientOp::Bracket(a) | QuotientOp::Grade(a) | QuotientOp::Lift(a)) = op;
    let spec = resolve(&a.algebra, vars)?;
    let q = quotient_of(&spec, &a.lambda, order)?;
    let fs = parse_many(&spec, &a.exprs)?;
    let base = json!({ "algebra": spec.name, "casimir": q.casimir().to_string(), "lambda": q.lambda().to_string() });
    let mut result = base.as_object().expect("object").clone();
    let text = match op {
        QuotientOp::Reduce(_) => {
            let reps: Vec<String> = fs.iter().map(|f| q.reduce(f).to_string()).collect();
            result.insert("representatives".into(), json!(reps));
            a.exprs.iter().zip(&reps).map(|(e, r)| format!("{e}  ->  {r}\n")).collect()
        }
        QuotientOp::Bracket(_) => {
            let v = q.bracket_eval(&fs)?;
            result.insert("value".into(), json!(v.to_string()));
            format!("{{{}}} = {v}\n", a.exprs.join(", "))
        }
        QuotientOp::Grade(_) => {
            let mut text = format!("m = {}\n", q.m());
            let mut all = Vec::new();
            for (e, f) in a.exprs.iter().zip(&fs) {
                let classes = q.grade_decompose(&q.reduce(f));
                for c in &classes {
                    let _ = writeln!(text, "{e}  A_{}: {}", c.residue, c.representative);
                }
                all.push(json!({ "input": e, "classes": classes }));
            }
            result.insert("m".into(), json!(q.m()));
            result.insert("grades".into(), json!(all));
            text
        }
        QuotientOp::Lift(_) => {
            let lifts = fs.iter().map(|f| q.lift(f)).collect::<Result<Vec<_>, _>>()?;
            let lifts: Vec<String> = lifts.iter().map(ToString::to_string).collect();
            result.insert("lifts".into(), json!(lifts));
            a.exprs.iter().zip(&lifts).map(|(e, l)| format!("{e}  ->  {l}\n")).collect()
        }
    };
    Ok(Report::pass(Value::Object(result), text))
}

fn casimir_suite() -> Result<Report, CliError> {
    let mut specs: Vec<AlgebraSpec> = Vec::new();
    for (name, _) in BUILTINS {
        let params = if name == "nlie" { vec![int(1); 4] } else { Vec::new() };
        specs.push(builtin(name, &params)?);
    }
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut pass = true;
    for s in &specs {
        let c = s.casimir.as_ref().expect("built-ins carry a Casimir element");
        let m = center_membership(&s.bracket, c, None);
        let closed = if c.is_homogeneous() { is_closed_homogeneous(c).ok().map(|r| r.closed) } else { None };
        pass &= m.central;
        let _ = writeln!(
            text,
            "{:<18} {:<8} {:<10} {c}",
            s.name,
            if m.central { "central" } else { "NOT-CENTRAL" },
            closed.map_or("-", |c| if c { "closed" } else { "power" })
        );
        rows.push(json!({ "algebra": s.name, "casimir": c.to_string(), "central": m.central, "checks": m.checks, "closed": closed }));
    }
    let status = if pass { Status::Pass } else { Status::Fail };
    Ok(Report { status, result: json!({ "casimirs": rows, "pass": pass }), text })
}

fn suite_text(r: &SuiteReport) -> String {
    let mut text = format!("seed {}\n", r.seed);
    for i in &r.items {
        let mark = if i.pass { "pass" } else { "FAIL" };
        let _ = writeln!(
            text,
            "[{mark}] {:>2} {:<28} {:>5} checks  {:>8.3}s / {}s",
            i.id, i.title, i.checks, i.seconds, i.limit_seconds
        );
        for f in &i.failures {
            let _ = writeln!(text, "         {f}");
        }
    }
    let _ = writeln!(text, "{}", if r.pass { "all items pass" } else { "some items FAIL" });
    text
}
