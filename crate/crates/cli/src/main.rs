//! Command line surface: compute family elements, Pieri expansions,
//! hypergeometric residuals and super polynomials, run the verification
//! suites, and convert between bases. Output is deterministic for identical
//! arguments; JSON keeps a stable schema.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cms_core::error::CmsError;
use cms_core::exec::ExecMode;
use cms_core::family::{
    family_element, limit_transition, pieri_general, FamilySpec, LimitKind, LimitVerdict,
};
use cms_core::hyper::{check_hyper_ode, generating_function_check, HyperKind};
use cms_core::ops::op_apply;
use cms_core::superpoly::{super_family, SuperAlgebra};
use cms_core::text;
use cms_core::verify::{run_suite, Bounds, Suite, SuiteReport};
use cms_core::{Basis, Context, Generator, Scalar, SymFunc};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Parser)]
#[command(name = "cms", version, about = "Exact symmetric function computations of CMS type")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for the on-disk basis cache (overrides CMS_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<String>,
    /// Worker threads for the suites (overrides CMS_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Force sequential execution.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct ParamArgs {
    /// Parameter bindings, e.g. `--param a=2 --param nu=alpha`.
    #[arg(long = "param")]
    params: Vec<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a family element.
    Family {
        /// jack, hermite, laguerre, jacobi or jacobi-monic.
        kind: String,
        #[arg(long)]
        partition: String,
        /// Output basis: j, p, m or e.
        #[arg(long, default_value = "j")]
        basis: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Pieri expansion of e_r times a renormalised family element.
    Pieri {
        #[arg(long)]
        family: String,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        partition: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Hypergeometric residual checks.
    Hyper {
        #[command(subcommand)]
        action: HyperCmd,
    },
    /// Super polynomial computations.
    Super {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(subcommand)]
        action: SuperCmd,
    },
    /// Limit transitions between families.
    Limits {
        /// jacobi_to_hermite, jacobi_to_laguerre or conjecture.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        partition: String,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        max_r: Option<u32>,
    },
    /// Convert a symmetric function literal between bases.
    Convert {
        #[arg(long)]
        input: String,
        #[arg(long)]
        to: String,
    },
    /// Apply an operator literal to a symmetric function literal.
    Apply {
        #[arg(long)]
        op: String,
        #[arg(long)]
        to: String,
    },
}

#[derive(Subcommand)]
enum HyperCmd {
    /// Residual of a differential equation or generating function.
    Check {
        /// 0F0, 0F1, 1F1, 2F1_two_set, 2F1_one_set, generating_hermite,
        /// generating_laguerre.
        #[arg(long)]
        which: String,
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
}

#[derive(Subcommand)]
enum SuperCmd {
    /// Compute a super family element.
    Family {
        kind: String,
        #[arg(long)]
        partition: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run super checks: kernel, intertwine or duality.
    Verify { which: String },
}

fn parse_params(args: &ParamArgs) -> Result<BTreeMap<Generator, Scalar>, CmsError> {
    let mut out = BTreeMap::new();
    for p in &args.params {
        let Some((name, value)) = p.split_once('=') else {
            return Err(CmsError::Parse(format!("expected name=value, got `{p}`")));
        };
        let g = Generator::from_name(name.trim())
            .ok_or_else(|| CmsError::Parse(format!("unknown parameter `{name}`")))?;
        out.insert(g, text::parse_scalar(value.trim())?);
    }
    Ok(out)
}

fn family_spec(kind: &str, params: &BTreeMap<Generator, Scalar>) -> Result<FamilySpec, CmsError> {
    let get = |g: Generator| params.get(&g).cloned().unwrap_or_else(|| Scalar::gen(g));
    match kind {
        "jack" => Ok(FamilySpec::Jack),
        "hermite" => Ok(FamilySpec::Hermite { nu_sq: get(Generator::Nu).pow(2) }),
        "laguerre" => Ok(FamilySpec::Laguerre { a: get(Generator::A), nu: get(Generator::Nu) }),
        "jacobi" => Ok(FamilySpec::JacobiScript { p: get(Generator::P), q: get(Generator::Q) }),
        "jacobi-monic" => {
            Ok(FamilySpec::JacobiMonic { p: get(Generator::P), q: get(Generator::Q) })
        }
        other => Err(CmsError::Invalid(format!("unknown family `{other}`"))),
    }
}

fn basis_from_str(s: &str) -> Result<Basis, CmsError> {
    match s {
        "j" | "jack" => Ok(Basis::Jack),
        "p" | "powersum" => Ok(Basis::PowerSum),
        "m" | "monomial" => Ok(Basis::Monomial),
        "e" | "elementary" => Ok(Basis::Elementary),
        other => Err(CmsError::Invalid(format!("unknown basis `{other}`"))),
    }
}

fn symfunc_json(f: &SymFunc) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(l, c)| {
            json!({
                "partition": l.parts(),
                "coefficient": c.to_text(),
            })
        })
        .collect();
    json!({ "basis": text::basis_tag(f.basis()), "terms": terms })
}

fn scalar_latex(c: &Scalar) -> String {
    c.to_text()
        .replace("alpha", r"\alpha")
        .replace("nu", r"\nu")
        .replace("p0", r"p_0")
        .replace('*', r" \cdot ")
}

fn symfunc_latex(f: &SymFunc) -> String {
    if f.is_zero() {
        return "0".into();
    }
    f.terms()
        .map(|(l, c)| {
            format!(
                "\\left({}\\right) {}_{{{}}}",
                scalar_latex(c),
                text::basis_tag(f.basis()),
                l.parts()
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

struct Output {
    command: String,
    params: Value,
    results: Value,
    text_lines: Vec<String>,
    latex_lines: Vec<String>,
    verdicts: Vec<Value>,
    failed: bool,
}

impl Output {
    fn new(command: &str, params: Value) -> Output {
        Output {
            command: command.to_string(),
            params,
            results: Value::Null,
            text_lines: Vec::new(),
            latex_lines: Vec::new(),
            verdicts: Vec::new(),
            failed: false,
        }
    }

    fn render(&self, format: Format, elapsed_ms: u128) {
        match format {
            Format::Json => {
                let v = json!({
                    "command": self.command,
                    "params": self.params,
                    "results": self.results,
                    "verdicts": self.verdicts,
                    "elapsed_ms": elapsed_ms,
                });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            }
            Format::Text => {
                for line in &self.text_lines {
                    println!("{line}");
                }
            }
            Format::Latex => {
                for line in &self.latex_lines {
                    println!("{line}");
                }
            }
        }
    }
}

fn suite_verdicts(report: &SuiteReport, out: &mut Output) {
    let passed = report.passed();
    if !passed && !report.informational {
        out.failed = true;
    }
    out.verdicts.push(json!({
        "suite": report.suite,
        "informational": report.informational,
        "passed": passed,
        "checks": report.items.len(),
        "failures": report
            .items
            .iter()
            .filter(|i| !i.pass)
            .map(|i| json!({ "label": i.label, "detail": i.detail }))
            .collect::<Vec<_>>(),
    }));
    out.text_lines.push(format!(
        "suite {}: {} ({} checks{})",
        report.suite,
        if passed { "pass" } else { "FAIL" },
        report.items.len(),
        if report.informational { ", informational" } else { "" }
    ));
    for item in report.items.iter().filter(|i| !i.pass) {
        out.text_lines.push(format!(
            "  FAIL {}: {}",
            item.label,
            item.detail.clone().unwrap_or_default()
        ));
    }
    out.latex_lines.push(format!(
        "% suite {}: {}",
        report.suite,
        if passed { "pass" } else { "fail" }
    ));
}

fn run(cli: &Cli, ctx: &Context, mode: ExecMode) -> Result<Output, CmsError> {
    match &cli.cmd {
        Cmd::Family { kind, partition, basis, params } => {
            let lam = text::parse_partition(partition)?;
            let bindings = parse_params(params)?;
            let spec = family_spec(kind, &bindings)?;
            let target = basis_from_str(basis)?;
            let elem = family_element(ctx, &spec, &lam)?;
            let value = ctx.convert(&elem.value, target)?;
            let mut out = Output::new(
                "family",
                json!({ "kind": kind, "partition": lam.parts(), "basis": basis }),
            );
            out.results = symfunc_json(&value);
            out.text_lines.push(value.to_text());
            out.latex_lines.push(symfunc_latex(&value));
            Ok(out)
        }
        Cmd::Pieri { family, r, partition, params } => {
            let lam = text::parse_partition(partition)?;
            let bindings = parse_params(params)?;
            let spec = family_spec(family, &bindings)?;
            let (expansion, report) = pieri_general(ctx, &spec, &lam, *r)?;
            let mut out = Output::new(
                "pieri",
                json!({ "family": family, "r": r, "partition": lam.parts() }),
            );
            let terms: Vec<Value> = expansion
                .terms
                .iter()
                .map(|(mu, c)| json!({ "partition": mu.parts(), "coefficient": c.to_text() }))
                .collect();
            out.results = json!({
                "terms": terms,
                "closed_form": report
                    .items
                    .iter()
                    .map(|i| json!({ "target": i.target.parts(), "pass": i.pass, "detail": i.detail }))
                    .collect::<Vec<_>>(),
            });
            for (mu, c) in &expansion.terms {
                out.text_lines.push(format!("{mu}: {}", c.to_text()));
            }
            out.text_lines.push(format!(
                "closed form comparison: {}",
                if report.pass() { "pass" } else { "FAIL" }
            ));
            out.latex_lines = out.text_lines.clone();
            if !report.pass() {
                out.failed = true;
            }
            Ok(out)
        }
        Cmd::Hyper { action } => {
            let HyperCmd::Check { which, degree } = action;
            let report = match which.as_str() {
                "generating_hermite" => generating_function_check(ctx, true, *degree)?,
                "generating_laguerre" => generating_function_check(ctx, false, *degree)?,
                other => {
                    let kind = HyperKind::from_name(other)
                        .ok_or_else(|| CmsError::Invalid(format!("unknown check `{other}`")))?;
                    let a = Scalar::gen(Generator::A);
                    let b = Scalar::gen(Generator::S);
                    let c = Scalar::gen(Generator::X);
                    let params: Vec<Scalar> = match kind {
                        HyperKind::TwoSet0F0 => vec![],
                        HyperKind::TwoSet0F1 => vec![c],
                        HyperKind::TwoSet1F1 => vec![a, c],
                        HyperKind::TwoSet2F1 | HyperKind::OneSet2F1 => vec![a, b, c],
                    };
                    check_hyper_ode(ctx, kind, &params, *degree)?
                }
            };
            let mut out = Output::new("hyper", json!({ "which": which, "degree": degree }));
            out.results = serde_json::to_value(&report).unwrap();
            out.text_lines.push(format!(
                "{}: degree {}, valid to {}, residual {}",
                report.which,
                report.degree,
                report.valid_to,
                if report.zero { "zero" } else { "NONZERO" }
            ));
            out.latex_lines = out.text_lines.clone();
            if !report.zero {
                out.failed = true;
            }
            Ok(out)
        }
        Cmd::Super { n, m, action } => {
            let alg = SuperAlgebra::new(*n, *m);
            match action {
                SuperCmd::Family { kind, partition, params } => {
                    let lam = text::parse_partition(partition)?;
                    let bindings = parse_params(params)?;
                    let spec = family_spec(kind, &bindings)?;
                    let (elem, kernel) = super_family(ctx, alg, &spec, &lam)?;
                    let mut out = Output::new(
                        "super family",
                        json!({ "n": n, "m": m, "kind": kind, "partition": lam.parts() }),
                    );
                    let monomials: Vec<Value> = elem
                        .value
                        .terms()
                        .map(|((xe, ye), c)| {
                            json!({ "x": xe, "y": ye, "coefficient": c.to_text() })
                        })
                        .collect();
                    out.results = json!({ "kernel": kernel, "monomials": monomials });
                    for ((xe, ye), c) in elem.value.terms() {
                        out.text_lines
                            .push(format!("x^{:?} y^{:?}: {}", xe, ye, c.to_text()));
                    }
                    if kernel {
                        out.text_lines.push("label lies in the restriction kernel".into());
                    }
                    out.latex_lines = out.text_lines.clone();
                    Ok(out)
                }
                SuperCmd::Verify { which } => {
                    let needle = match which.as_str() {
                        "kernel" => "restriction kernel",
                        "intertwine" => "intertwining",
                        "duality" => "duality",
                        other => {
                            return Err(CmsError::Invalid(format!("unknown super check `{other}`")))
                        }
                    };
                    let bounds = Bounds {
                        max_n: Some(*n as u32),
                        max_m: Some(*m as u32),
                        ..Bounds::default()
                    };
                    let mut report = run_suite(ctx, Suite::Super, bounds, mode)?;
                    report.items.retain(|i| i.label.contains(needle));
                    let mut out = Output::new(
                        "super verify",
                        json!({ "n": n, "m": m, "which": which }),
                    );
                    suite_verdicts(&report, &mut out);
                    Ok(out)
                }
            }
        }
        Cmd::Limits { kind, partition } => {
            let lam = text::parse_partition(partition)?;
            let which = match kind.as_str() {
                "jacobi_to_hermite" => LimitKind::JacobiToHermite,
                "jacobi_to_laguerre" => LimitKind::JacobiToLaguerre,
                "conjecture" | "laguerre_to_hermite" => LimitKind::LaguerreToHermiteConjecture,
                other => return Err(CmsError::Invalid(format!("unknown limit `{other}`"))),
            };
            let outcome = limit_transition(ctx, which, &lam)?;
            let verdict = match outcome.verdict {
                LimitVerdict::Equal => "equal",
                LimitVerdict::NotEqual => "not-equal",
                LimitVerdict::Divergent => "divergent",
            };
            let mut out = Output::new("limits", json!({ "kind": kind, "partition": lam.parts() }));
            out.results = json!({
                "verdict": verdict,
                "value": outcome.value.as_ref().map(symfunc_json),
            });
            out.text_lines.push(format!("{kind} at {lam}: {verdict}"));
            out.latex_lines = out.text_lines.clone();
            // the conjectural transition is reported, never gating
            if outcome.verdict != LimitVerdict::Equal
                && which != LimitKind::LaguerreToHermiteConjecture
            {
                out.failed = true;
            }
            Ok(out)
        }
        Cmd::Verify { suite, max_weight, degree, n, m, max_r } => {
            let bounds = Bounds {
                max_weight: *max_weight,
                degree: *degree,
                max_n: *n,
                max_m: *m,
                max_r: *max_r,
            };
            let suites = if suite == "all" {
                Suite::all()
            } else {
                vec![Suite::from_name(suite)?]
            };
            let mut out = Output::new(
                "verify",
                json!({
                    "suite": suite,
                    "max_weight": max_weight,
                    "degree": degree,
                    "n": n,
                    "m": m,
                    "max_r": max_r,
                }),
            );
            for s in suites {
                let report = run_suite(ctx, s, bounds, mode)?;
                suite_verdicts(&report, &mut out);
            }
            Ok(out)
        }
        Cmd::Convert { input, to } => {
            let f = text::parse_symfunc(input)?;
            let target = basis_from_str(to)?;
            let converted = ctx.convert(&f, target)?;
            let mut out = Output::new("convert", json!({ "input": input, "to": to }));
            out.results = symfunc_json(&converted);
            out.text_lines.push(converted.to_text());
            out.latex_lines.push(symfunc_latex(&converted));
            Ok(out)
        }
        Cmd::Apply { op, to } => {
            let expr = text::parse_op(op)?;
            let f = text::parse_symfunc(to)?.to_power_sum_free()?;
            let image = op_apply(ctx, &expr, &f)?;
            let mut out = Output::new("apply", json!({ "op": op, "to": to }));
            out.results = symfunc_json(&image);
            out.text_lines.push(image.to_text());
            out.latex_lines.push(symfunc_latex(&image));
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var("CMS_CACHE_DIR").ok());
    let ctx = match &cache_dir {
        Some(dir) => Context::with_cache_dir(dir),
        None => Context::new(),
    };
    let threads = cli
        .threads
        .or_else(|| std::env::var("CMS_THREADS").ok().and_then(|v| v.parse().ok()));
    if let Some(t) = threads {
        cms_core::exec::configure_threads(t);
    }
    let mode = if cli.sequential {
        ExecMode::Sequential
    } else {
        ExecMode::Parallel
    };
    let start = Instant::now();
    match run(&cli, &ctx, mode) {
        Ok(out) => {
            out.render(cli.format, start.elapsed().as_millis());
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
