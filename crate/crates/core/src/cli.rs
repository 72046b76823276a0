//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 cap exceeded.

use std::ffi::OsString;
use std::io::Write;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::combinat::{colour_semistandard_tableaux, enumerate_standard, KlsParams, Partition, Tableau};
use crate::exec::Execution;
use crate::formulas;
use crate::oracle::{sweep, Suite, SweepLimits, DEFAULT_KLS_MAX_SIZE};
use crate::rational::FractionRecord;
use crate::seminormal::{Engine, SeminormalBasis};
use crate::specht::SpechtVector;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "seminormal", version, about = "Young's seminormal basis of dual Specht modules, exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Pretty,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Shorthand for `--format pretty`.
    #[arg(long)]
    pub pretty: bool,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if self.pretty {
            Format::Pretty
        } else {
            self.format
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Seminormal basis vector f_s in the standard basis.
    Seminormal {
        /// Shape of the module, e.g. `4,2,2`.
        #[arg(long)]
        shape: Partition,
        /// Use s = λ↑shape for the given inner partition λ.
        #[arg(long, conflicts_with_all = ["initial", "tableau", "uparrow"])]
        uparrow_from: Option<Partition>,
        /// Use the initial tableau of the shape.
        #[arg(long, conflicts_with_all = ["tableau", "uparrow"])]
        initial: bool,
        /// Tableau as JSON rows, e.g. `[[1,3],[2]]`.
        #[arg(long, conflicts_with = "uparrow")]
        tableau: Option<String>,
        /// `λ^ν` or `λ^+m` shorthand (`↑` also accepted); must agree with --shape.
        #[arg(long)]
        uparrow: Option<String>,
        /// Largest module size computed.
        #[arg(long, default_value_t = 12)]
        cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Denominator of f_{λ↑ν}, with the route used to obtain it.
    Denominator {
        /// Inner partition λ.
        #[arg(long, alias = "lambda")]
        uparrow_from: Partition,
        /// Outer partition ν.
        #[arg(long, alias = "shape")]
        nu: Partition,
        /// Largest |ν| computed by recursion; beyond it only a bound is reported.
        #[arg(long, default_value_t = 12)]
        cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate a closed formula.
    Formula {
        #[arg(value_enum)]
        name: FormulaName,
        #[command(flatten)]
        params: ParamArgs,
        /// Partition argument (add-one, remove-node, truncate, row-removal).
        #[arg(long)]
        shape: Option<Partition>,
        /// Outer partition (truncate, row-removal, general-bound).
        #[arg(long)]
        nu: Option<Partition>,
        /// Row index, 1-based (remove-node).
        #[arg(long)]
        row: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of consecutive seeds for randomized chains.
        #[arg(long, default_value_t = 5)]
        seeds: usize,
        /// Recursion cap handed to the dispatcher.
        #[arg(long, default_value_t = 12)]
        cap: usize,
        /// Largest |ν| computed by recursion in the (k,ℓ^s)+(m) suites.
        #[arg(long, default_value_t = DEFAULT_KLS_MAX_SIZE)]
        max_size: usize,
        /// Run cases one after another.
        #[arg(long)]
        sequential: bool,
        /// Print every case, not only the summary and failures.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List standard tableaux, or colour-semistandard ones with --uparrow-from.
    Enumerate {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        uparrow_from: Option<Partition>,
        /// Only print the count.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args, Default)]
pub struct ParamArgs {
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
}

impl ParamArgs {
    fn need(v: Option<usize>, name: &str) -> anyhow::Result<usize> {
        v.ok_or_else(|| anyhow!(Error::Parse(format!("--{name} is required"))))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaName {
    AddOne,
    TwoRow,
    Hook,
    RemoveNode,
    LcmBinom,
    ReduceKls,
    UpperBoundKls,
    K22,
    Truncate,
    RowRemoval,
    GeneralBound,
}

/// Parses `args`, runs the command, writes to `out`/`err` and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            exit_code_for(&e)
        }
    }
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn exit_code_for(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<Error>() {
        Some(Error::CapExceeded { .. }) => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Seminormal {
            shape,
            uparrow_from,
            initial,
            tableau,
            uparrow,
            cap,
            output,
        } => {
            let s = resolve_tableau(&shape, uparrow_from, initial, tableau, uparrow)?;
            if shape.size() > cap {
                return Err(Error::CapExceeded { size: shape.size(), cap }.into());
            }
            let basis = SeminormalBasis::for_shape(&shape);
            let row = basis.transition_row(&s)?;
            let d = basis.d_element(&s)?;
            match output.format() {
                Format::Json => {
                    let v = json!({
                        "shape": shape,
                        "tableau": s,
                        "coeffs": row.coeffs,
                        "denominator": row.denominator.to_string(),
                        "d_element": d,
                    });
                    writeln!(out, "{}", serde_json::to_string(&v)?)?;
                }
                Format::Pretty => {
                    writeln!(out, "shape ({shape})")?;
                    writeln!(out, "tableau\n{}", grid(&s))?;
                    writeln!(out, "denominator {}", row.denominator)?;
                    writeln!(out, "coefficients ({} terms)", row.coeffs.len())?;
                    write_vector_pretty(out, &row.coeffs)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Denominator {
            uparrow_from,
            nu,
            cap,
            output,
        } => {
            let engine = Engine::new(Execution::Sequential);
            let report = formulas::summary_dispatch(&engine, &uparrow_from, &nu, cap)?;
            match output.format() {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
                Format::Pretty => {
                    writeln!(out, "({uparrow_from}) ↑ ({nu})")?;
                    writeln!(out, "route {}", serde_json::to_value(report.route)?.as_str().unwrap_or_default())?;
                    if let Some(v) = &report.value {
                        writeln!(out, "value {v}")?;
                    }
                    if let Some(b) = &report.bound {
                        writeln!(out, "bound {b}")?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Formula {
            name,
            params,
            shape,
            nu,
            row,
            output,
        } => {
            let v = evaluate_formula(name, &params, shape, nu, row)?;
            match output.format() {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&v)?)?,
                Format::Pretty => writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            max_n,
            params,
            seed,
            seeds,
            cap,
            max_size,
            sequential,
            all,
            output,
        } => {
            let suite: Suite = suite.parse()?;
            let limits = SweepLimits {
                max_n,
                k: params.k,
                l: params.l,
                s: params.s,
                m: params.m,
                seed,
                seeds,
                cap,
                max_size,
                exec: if sequential { Execution::Sequential } else { Execution::Parallel },
            };
            let report = sweep(suite, &limits)?;
            match output.format() {
                Format::Json => {
                    if all {
                        out.write_all(report.json_lines().as_bytes())?;
                    } else {
                        for c in report.failures() {
                            writeln!(out, "{}", serde_json::to_string(c)?)?;
                        }
                        writeln!(out, "{}", serde_json::to_string(&json!({ "summary": report.summary() }))?)?;
                    }
                }
                Format::Pretty => {
                    let s = report.summary();
                    writeln!(
                        out,
                        "{}: {} cases, {} passed, {} failed, {} skipped",
                        s.suite, s.total, s.passed, s.failed, s.skipped
                    )?;
                }
            }
            for c in report.failures() {
                writeln!(err, "FAIL {} {}: {}", c.family, c.input, c.detail.as_deref().unwrap_or(""))?;
            }
            Ok(if report.is_success() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Enumerate {
            shape,
            uparrow_from,
            count,
            output,
        } => {
            let list = match &uparrow_from {
                Some(lambda) => colour_semistandard_tableaux(lambda, &shape)?,
                None => enumerate_standard(&shape),
            };
            if count {
                writeln!(out, "{}", list.len())?;
                return Ok(EXIT_OK);
            }
            match output.format() {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&list)?)?,
                Format::Pretty => {
                    for t in &list {
                        writeln!(out, "{}\n", grid(t))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn resolve_tableau(
    shape: &Partition,
    uparrow_from: Option<Partition>,
    initial: bool,
    tableau: Option<String>,
    uparrow: Option<String>,
) -> anyhow::Result<Tableau> {
    if let Some(lambda) = uparrow_from {
        return Ok(Engine::up_arrow(&lambda, shape)?);
    }
    if initial {
        return Ok(Tableau::initial_of(shape));
    }
    if let Some(text) = tableau {
        let rows: Vec<Vec<usize>> =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("tableau {text:?}: {e}")))?;
        let t = Tableau::from_rows(&rows)?;
        if t.shape().parts() != shape.parts() {
            bail!(Error::ShapeMismatch(format!("tableau has shape {} but --shape is ({shape})", t.shape())));
        }
        if !t.is_standard() {
            bail!(Error::InvalidTableau(format!("{t} is not standard")));
        }
        return Ok(t);
    }
    if let Some(text) = uparrow {
        let (lambda, nu) = parse_uparrow(&text)?;
        if nu != *shape {
            bail!(Error::ShapeMismatch(format!("{text:?} has outer shape ({nu}) but --shape is ({shape})")));
        }
        return Ok(Engine::up_arrow(&lambda, &nu)?);
    }
    bail!(Error::Parse("one of --uparrow-from, --initial, --tableau, --uparrow is required".into()))
}

/// `λ^ν`, `λ↑ν` or `λ^+m`.
pub fn parse_uparrow(text: &str) -> crate::Result<(Partition, Partition)> {
    let (left, right) = text
        .split_once('↑')
        .or_else(|| text.split_once('^'))
        .ok_or_else(|| Error::Parse(format!("{text:?}: expected λ^ν or λ^+m")))?;
    let lambda: Partition = left.trim().parse()?;
    let right = right.trim();
    let nu = match right.strip_prefix('+') {
        Some(m) => {
            let m: usize = m.parse().map_err(|_| Error::Parse(format!("{text:?}: bad row extension")))?;
            lambda.add_to_first_row(m)
        }
        None => right.parse()?,
    };
    nu.check_contains(&lambda)?;
    Ok((lambda, nu))
}

fn big(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn evaluate_formula(
    name: FormulaName,
    p: &ParamArgs,
    shape: Option<Partition>,
    nu: Option<Partition>,
    row: Option<usize>,
) -> anyhow::Result<Value> {
    let need_shape = || shape.clone().ok_or_else(|| anyhow!(Error::Parse("--shape is required".into())));
    let need_nu = || nu.clone().ok_or_else(|| anyhow!(Error::Parse("--nu is required".into())));
    let k = || ParamArgs::need(p.k, "k");
    let l = || ParamArgs::need(p.l, "l");
    let s = || ParamArgs::need(p.s, "s");
    let m = || ParamArgs::need(p.m, "m");
    Ok(match name {
        FormulaName::AddOne => {
            let lambda = need_shape()?;
            let f = formulas::f_add_one(&lambda)?;
            json!({ "coeffs": f, "denominator": big(formulas::denom_add_one(&lambda)) })
        }
        FormulaName::TwoRow => {
            let (k, l, m) = (k()?, l()?, m()?);
            let f = formulas::f_two_row(k, l, m)?;
            json!({ "coeffs": f, "denominator": big(formulas::denom_two_row(k, l, m)?) })
        }
        FormulaName::Hook => {
            let (k, s, m) = (k()?, s()?, m()?);
            let f = formulas::f_hook(k, s, m)?;
            json!({ "coeffs": f, "denominator": big(formulas::denom_hook(k, s)) })
        }
        FormulaName::RemoveNode => {
            let nu = need_shape()?;
            let row = row.ok_or_else(|| anyhow!(Error::Parse("--row is required".into())))?;
            json!({
                "denominator": big(formulas::denom_remove_node(&nu, row)?),
                "d_element": formulas::d_remove_one_node(&nu, row)?,
            })
        }
        FormulaName::LcmBinom => {
            let (a, b) = (k()? as u64, l()? as u64);
            json!({ "value": big(formulas::lcm_binom(a, b)?) })
        }
        FormulaName::ReduceKls => {
            let r = formulas::reduce_kls(k()?, l()?, s()?, m()?)?;
            json!({ "k": r.k_tilde, "l": r.l_tilde, "s": r.s_tilde, "m": r.l_tilde })
        }
        FormulaName::UpperBoundKls => json!({ "value": big(formulas::upper_bound_kls(k()?, l()?, s()?)?) }),
        FormulaName::K22 => json!({ "value": big(formulas::denom_k_2_2(k()?)?) }),
        FormulaName::Truncate => {
            let (lambda, nu) = (need_shape()?, need_nu()?);
            json!({ "lambda": lambda, "nu": formulas::denom_truncate(&lambda, &nu)? })
        }
        FormulaName::RowRemoval => {
            let (lambda, nu) = (need_shape()?, need_nu()?);
            let (a, b) = formulas::denom_row_removal(&lambda, &nu)?;
            json!({ "lambda": a, "nu": b, "shift": lambda.part(1) })
        }
        FormulaName::GeneralBound => {
            let (lambda, nu) = (need_shape()?, need_nu()?);
            if let (Some(k), Some(l), Some(s)) = (p.k, p.l, p.s) {
                let params = KlsParams::new(k, l, s, l)?;
                json!({ "value": big(formulas::upper_bound_kls(params.k, params.l, params.s)?) })
            } else {
                json!({ "value": big(formulas::denominator_bound(&lambda, &nu)?) })
            }
        }
    })
}

/// Rows of a tableau as a right-aligned text grid.
pub fn grid(t: &Tableau) -> String {
    let width = t.n().to_string().len();
    t.rows()
        .iter()
        .map(|row| row.iter().map(|x| format!("{x:>width$}")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn write_vector_pretty(out: &mut dyn Write, v: &SpechtVector) -> anyhow::Result<()> {
    for (t, c) in v.iter() {
        let f = FractionRecord::from(c);
        let coeff = if f.den == "1" { f.num } else { format!("{}/{}", f.num, f.den) };
        writeln!(out, "{coeff}").context("writing output")?;
        writeln!(out, "{}\n", grid(t))?;
    }
    Ok(())
}
