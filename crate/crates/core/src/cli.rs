//! Command-line front end.
//!
//! Every command builds one [`CommandReport`] and prints it either as JSON or
//! as `key: value` lines carrying the same fields.
//!
//! Exit codes: 0 success, 1 usage, parse or input error, 2 a `FAILS` verdict
//! (or an oracle disagreement), 3 an inconclusive truncation.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graded::{powers_system, AsymptoticSolver, GradedSystem};
use crate::harness::{
    powers_family, run_campaign, verify_approximation, verify_asymptotic, verify_jumping_shift,
    verify_main_inclusion, verify_product_equality, verify_subvariety, verify_sum_equals_intersection,
    verify_sum_inclusion, CampaignSummary, Side, Verdict, VerificationReport, VerifyKind, Witness,
};
use crate::monomial::{Exponent, MonomialIdeal};
use crate::newton::{MultiplierSolver, SearchStrategy};
use crate::parse::{default_variables, infer_variables, parse_ideal, parse_system, parse_variables, render_ideal};
use crate::rational::{parse_rational, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILS: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "multctl", version, about = "Exact multiplier ideals of monomial ideals")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Report timing_ms as 0, for reproducible output.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct IdealArgs {
    /// Ideal such as "<x^2, y^3>".
    ideal: String,
    /// Comma-separated variable names (inferred when omitted).
    #[arg(long)]
    vars: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Log canonical threshold.
    Lct(IdealArgs),
    /// Multiplier ideal I(c·a).
    Mi {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        coeff: String,
        /// Cross-check the frontier search against a full box scan.
        #[arg(long)]
        oracle: bool,
    },
    /// Jumping numbers in (0, max].
    Jn {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        max: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Truncated asymptotic multiplier ideal I(c·‖a_p‖).
    Amult {
        /// Ideal whose powers form the system (alternative to --system).
        ideal: Option<String>,
        /// Graded-system file.
        #[arg(long)]
        system: Option<PathBuf>,
        #[arg(long)]
        vars: Option<String>,
        #[arg(long)]
        coeff: String,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long, default_value_t = 4)]
        qmax: usize,
        /// Truncation of a powers system built from IDEAL (default p·qmax).
        #[arg(long)]
        pmax: Option<usize>,
    },
    /// Check one relation on an instance, or on seeded random instances
    /// when --trials is given.
    Verify(VerifyArgs),
    /// Run every relation on seeded random instances and the fixed corpus.
    Campaign {
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// thm1, thm2, equality, lemma, main, approx, subvariety or jumpshift.
    kind: String,
    /// Ideals of the instance (one or two depending on the relation).
    ideals: Vec<String>,
    #[arg(long)]
    vars: Option<String>,
    /// Variables of the second ideal for equality and lemma.
    #[arg(long)]
    vars_b: Option<String>,
    /// The coefficient γ.
    #[arg(long)]
    coeff: Option<String>,
    /// Run a campaign of this many random instances instead.
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    oracle: bool,
    /// main: number of family members.
    #[arg(long)]
    m: Option<usize>,
    /// main: index of the top member, a multiple of lcm(1..m).
    #[arg(long)]
    n: Option<usize>,
    /// approx: power of the maximal ideal; thm2: system index.
    #[arg(long)]
    p: Option<usize>,
    /// approx: ε.
    #[arg(long)]
    eps: Option<String>,
    /// subvariety, jumpshift: codimension r.
    #[arg(long)]
    codim: Option<usize>,
    /// jumpshift: upper limit T.
    #[arg(long)]
    max: Option<String>,
    /// thm2: truncation of the asymptotic ideals.
    #[arg(long, default_value_t = 2)]
    qmax: usize,
    /// thm2: largest m checked.
    #[arg(long, default_value_t = 2)]
    m_max: usize,
    /// thm2: truncation of powers systems built from ideals.
    #[arg(long)]
    pmax: Option<usize>,
    /// thm2: graded-system files (give two).
    #[arg(long)]
    system: Vec<PathBuf>,
}

/// Output of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandReport {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub result: Map<String, Value>,
    pub verdict: Option<String>,
    pub witness: Option<String>,
    pub timing_ms: u64,
    pub seed: Option<u64>,
    pub exit_code: i32,
}

impl CommandReport {
    fn new(command: &str) -> Self {
        CommandReport {
            command: command.to_string(),
            inputs: Map::new(),
            result: Map::new(),
            verdict: None,
            witness: None,
            timing_ms: 0,
            seed: None,
            exit_code: EXIT_OK,
        }
    }

    fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.result.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("command".into(), json!(self.command));
        obj.insert("inputs".into(), Value::Object(self.inputs.clone()));
        obj.insert("result".into(), Value::Object(self.result.clone()));
        if let Some(v) = &self.verdict {
            obj.insert("verdict".into(), json!(v));
        }
        if let Some(w) = &self.witness {
            obj.insert("witness".into(), json!(w));
        }
        obj.insert("timing_ms".into(), json!(self.timing_ms));
        if let Some(s) = self.seed {
            obj.insert("seed".into(), json!(s));
        }
        Value::Object(obj)
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        flatten("inputs", &Value::Object(self.inputs.clone()), &mut out);
        flatten("result", &Value::Object(self.result.clone()), &mut out);
        if let Some(v) = &self.verdict {
            out.push_str(&format!("verdict: {v}\n"));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("witness: {w}\n"));
        }
        out.push_str(&format!("timing_ms: {}\n", self.timing_ms));
        if let Some(s) = self.seed {
            out.push_str(&format!("seed: {s}\n"));
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Null => Some("null".into()),
        _ => None,
    }
}

/// Objects become dotted keys, arrays of scalars one comma-separated line,
/// arrays of objects indexed keys.
fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&format!("{prefix}.{k}"), child, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            out.push_str(&format!("{prefix}: {}\n", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), child, out);
            }
        }
        other => out.push_str(&format!("{prefix}: {}\n", scalar(other).unwrap_or_default())),
    }
}

/// Runs the command line `args` (program name first), writing the report
/// to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let started = Instant::now();
    match execute(&cli.command) {
        Ok(mut report) => {
            report.timing_ms = if cli.no_timing {
                0
            } else {
                started.elapsed().as_millis() as u64
            };
            let text = if cli.json {
                format!("{}\n", serde_json::to_string_pretty(&report.to_json()).expect("serializable"))
            } else {
                report.to_plain()
            };
            let _ = out.write_all(text.as_bytes());
            report.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn variables(declared: Option<&str>, texts: &[&str]) -> Result<Vec<String>> {
    match declared {
        Some(v) => parse_variables(v),
        None => infer_variables(&texts.join(",")),
    }
}

fn parse_with(text: &str, declared: Option<&str>) -> Result<(MonomialIdeal, Vec<String>)> {
    let vars = variables(declared, &[text])?;
    Ok((parse_ideal(text, &vars)?, vars))
}

fn coefficient(text: Option<&String>, flag: &str) -> Result<Rational> {
    let text = text.ok_or_else(|| Error::input(format!("missing --{flag}")))?;
    parse_rational(text)
}

fn rationals(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(|x| json!(x.to_string())).collect())
}

fn execute(command: &Command) -> Result<CommandReport> {
    match command {
        Command::Lct(args) => {
            let (a, vars) = parse_with(&args.ideal, args.vars.as_deref())?;
            let mut r = CommandReport::new("lct");
            r.input("ideal", render_ideal(&a, &vars));
            r.input("vars", vars.join(","));
            let value = MultiplierSolver::new(&a)?.lct();
            r.result("lct", value.to_string());
            Ok(r)
        }
        Command::Mi { ideal, coeff, oracle } => {
            let (a, vars) = parse_with(&ideal.ideal, ideal.vars.as_deref())?;
            let c = parse_rational(coeff)?;
            let mut r = CommandReport::new("mi");
            r.input("ideal", render_ideal(&a, &vars));
            r.input("vars", vars.join(","));
            r.input("coeff", c.to_string());
            let solver = MultiplierSolver::new(&a)?.with_certificate_checks(*oracle);
            let mi = solver.multiplier_ideal(&c)?;
            r.result("multiplier_ideal", render_ideal(&mi, &vars));
            if *oracle {
                let scan = MultiplierSolver::new(&a)?
                    .with_strategy(SearchStrategy::FullScan)
                    .multiplier_ideal(&c)?;
                r.result("oracle_agrees", scan == mi);
                if scan != mi {
                    r.exit_code = EXIT_FAILS;
                }
            }
            Ok(r)
        }
        Command::Jn { ideal, max, oracle } => {
            let (a, vars) = parse_with(&ideal.ideal, ideal.vars.as_deref())?;
            let t = parse_rational(max)?;
            let mut r = CommandReport::new("jn");
            r.input("ideal", render_ideal(&a, &vars));
            r.input("vars", vars.join(","));
            r.input("max", t.to_string());
            let jumps = MultiplierSolver::new(&a)?.with_certificate_checks(*oracle).jumping_numbers(&t)?;
            r.result("jumping_numbers", rationals(&jumps));
            if *oracle {
                let scan = MultiplierSolver::new(&a)?
                    .with_strategy(SearchStrategy::FullScan)
                    .jumping_numbers(&t)?;
                r.result("oracle_agrees", scan == jumps);
                if scan != jumps {
                    r.exit_code = EXIT_FAILS;
                }
            }
            Ok(r)
        }
        Command::Amult {
            ideal,
            system,
            vars,
            coeff,
            p,
            qmax,
            pmax,
        } => {
            let gamma = parse_rational(coeff)?;
            let mut r = CommandReport::new("amult");
            let (sys, names) = load_system(ideal.as_deref(), system.as_ref(), vars.as_deref(), pmax.unwrap_or(p * qmax))?;
            describe_system_input(&mut r, "system", &sys, &names);
            r.input("coeff", gamma.to_string());
            r.input("p", *p);
            r.input("qmax", *qmax);
            match AsymptoticSolver::new(&sys)?.asymptotic(*p, &gamma, *qmax) {
                Ok(res) => {
                    r.result("asymptotic_ideal", render_ideal(&res.ideal, &names));
                    r.result("stabilized", res.stabilized);
                    r.result("attained_at", res.attained_at);
                    if !res.stabilized {
                        r.verdict = Some(Verdict::Inconclusive.name().into());
                        r.exit_code = EXIT_INCONCLUSIVE;
                    }
                }
                Err(Error::Inconclusive(msg)) => {
                    r.result("message", msg);
                    r.verdict = Some(Verdict::Inconclusive.name().into());
                    r.exit_code = EXIT_INCONCLUSIVE;
                }
                Err(e) => return Err(e),
            }
            Ok(r)
        }
        Command::Verify(args) => verify_command(args),
        Command::Campaign { trials, seed, oracle } => {
            if *trials == 0 {
                return Err(Error::input("--trials must be at least 1"));
            }
            let mut r = CommandReport::new("campaign");
            r.input("trials", *trials);
            r.input("oracle", *oracle);
            r.seed = Some(*seed);
            let mut worst = EXIT_OK;
            let mut per_kind = Map::new();
            for kind in VerifyKind::ALL {
                let summary = run_campaign(kind, *trials, *seed, *oracle);
                worst = worst_exit(worst, summary_exit(&summary));
                per_kind.insert(kind.name().into(), summary_json(&summary));
            }
            r.result("relations", Value::Object(per_kind));
            r.verdict = Some(exit_verdict(worst).into());
            r.exit_code = worst;
            Ok(r)
        }
    }
}

fn load_system(
    ideal: Option<&str>,
    file: Option<&PathBuf>,
    vars: Option<&str>,
    p_max: usize,
) -> Result<(GradedSystem, Vec<String>)> {
    match (ideal, file) {
        (Some(text), None) => {
            let (a, names) = parse_with(text, vars)?;
            Ok((powers_system(&a, p_max)?, names))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
            let declared = vars.map(parse_variables).transpose()?;
            let sys = parse_system(&text, declared.as_deref())?;
            let names = match declared {
                Some(v) => v,
                None => system_file_vars(&text).unwrap_or_else(|| default_variables(sys.arity())),
            };
            Ok((sys, names))
        }
        _ => Err(Error::input("give either an ideal or --system FILE")),
    }
}

fn system_file_vars(text: &str) -> Option<Vec<String>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find_map(|l| l.strip_prefix("vars").and_then(|rest| rest.trim().strip_prefix('=')))
        .and_then(|v| parse_variables(v.trim()).ok())
}

fn describe_system_input(r: &mut CommandReport, key: &str, sys: &GradedSystem, names: &[String]) {
    let entries: Vec<Value> = sys
        .entries()
        .iter()
        .map(|a| json!(render_ideal(a, names)))
        .collect();
    r.input(key, Value::Array(entries));
    r.input(&format!("{key}_vars"), names.join(","));
}

fn worst_exit(a: i32, b: i32) -> i32 {
    let rank = |c: i32| match c {
        EXIT_FAILS => 3,
        EXIT_INCONCLUSIVE => 2,
        EXIT_USAGE => 1,
        _ => 0,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

fn exit_verdict(code: i32) -> &'static str {
    match code {
        EXIT_FAILS => Verdict::Fails.name(),
        EXIT_INCONCLUSIVE => Verdict::Inconclusive.name(),
        _ => Verdict::Holds.name(),
    }
}

fn summary_exit(s: &CampaignSummary) -> i32 {
    if !s.clean() {
        EXIT_FAILS
    } else if s.count(Verdict::Inconclusive) > 0 {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    }
}

fn summary_json(s: &CampaignSummary) -> Value {
    let outcomes: Vec<Value> = s
        .outcomes
        .iter()
        .map(|o| {
            let mut obj = Map::new();
            obj.insert("origin".into(), json!(o.label()));
            obj.insert("instance".into(), json!(o.instance.to_string()));
            match &o.report {
                Ok(rep) => {
                    obj.insert("verdict".into(), json!(rep.verdict.name()));
                    if let Some(w) = &rep.witness {
                        obj.insert("witness".into(), json!(w.to_string()));
                    }
                }
                Err(e) => {
                    obj.insert("error".into(), json!(e));
                }
            }
            if let Some(m) = &o.oracle_mismatch {
                obj.insert("oracle_mismatch".into(), json!(m));
            }
            Value::Object(obj)
        })
        .collect();
    let mut obj = Map::new();
    for (k, v) in s.counts() {
        obj.insert(k.into(), json!(v));
    }
    obj.insert("errors".into(), json!(s.errors()));
    obj.insert("oracle_mismatches".into(), json!(s.oracle_mismatches()));
    obj.insert("outcomes".into(), Value::Array(outcomes));
    Value::Object(obj)
}

fn render_side(side: &Side, vars: &[String]) -> Value {
    match side {
        Side::Ideal(i) => json!(render_ideal(i, vars)),
        Side::Ideals(is) => Value::Array(is.iter().map(|i| json!(render_ideal(i, vars))).collect()),
        Side::Numbers(xs) => rationals(xs),
    }
}

fn render_witness(w: &Witness, vars: &[String]) -> String {
    match w {
        Witness::Monomial(e, d) => {
            let side = match d {
                crate::harness::Direction::LhsNotRhs => "in lhs, not in rhs",
                crate::harness::Direction::RhsNotLhs => "in rhs, not in lhs",
            };
            format!("{} ({side})", render_exponent(e, vars))
        }
        other => other.to_string(),
    }
}

fn report_into(r: &mut CommandReport, rep: &VerificationReport, vars: &[String]) {
    r.result("relation", rep.theorem.name());
    r.result("instance", rep.instance.clone());
    r.result("lhs", render_side(&rep.lhs, vars));
    r.result("rhs", render_side(&rep.rhs, vars));
    if let Some(t) = &rep.truncation {
        r.result("stabilized", t.all_stabilized);
        r.result("max_attained_at", t.max_attained_at);
    }
    r.verdict = Some(rep.verdict.name().into());
    r.witness = rep.witness.as_ref().map(|w| render_witness(w, vars));
    r.exit_code = match rep.verdict {
        Verdict::Fails => EXIT_FAILS,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
        _ => EXIT_OK,
    };
}

fn need(ideals: &[String], count: usize, kind: VerifyKind) -> Result<&[String]> {
    if ideals.len() != count {
        return Err(Error::input(format!(
            "`verify {kind}` takes {count} ideal argument(s), got {}",
            ideals.len()
        )));
    }
    Ok(ideals)
}

/// Variables of a product: the two lists side by side, or default names when
/// they clash.
fn product_vars(a: &[String], b: &[String]) -> Vec<String> {
    if a.iter().any(|x| b.contains(x)) {
        default_variables(a.len() + b.len())
    } else {
        a.iter().chain(b).cloned().collect()
    }
}

fn verify_command(args: &VerifyArgs) -> Result<CommandReport> {
    let kind = VerifyKind::from_name(&args.kind).ok_or_else(|| {
        Error::input(format!(
            "unknown relation `{}`; expected one of thm1, thm2, equality, lemma, main, approx, subvariety, jumpshift",
            args.kind
        ))
    })?;
    let mut r = CommandReport::new(&format!("verify {kind}"));
    if let Some(trials) = args.trials {
        if trials == 0 {
            return Err(Error::input("--trials must be at least 1"));
        }
        r.input("trials", trials);
        r.input("oracle", args.oracle);
        r.seed = Some(args.seed);
        let summary = run_campaign(kind, trials, args.seed, args.oracle);
        let code = summary_exit(&summary);
        if let Value::Object(map) = summary_json(&summary) {
            r.result = map;
        }
        r.verdict = Some(exit_verdict(code).into());
        r.exit_code = code;
        return Ok(r);
    }
    let ideals = &args.ideals;
    match kind {
        VerifyKind::Thm1 => {
            let xs = need(ideals, 2, kind)?;
            let vars = variables(args.vars.as_deref(), &[&xs[0], &xs[1]])?;
            let (a, b) = (parse_ideal(&xs[0], &vars)?, parse_ideal(&xs[1], &vars)?);
            let gamma = coefficient(args.coeff.as_ref(), "coeff")?;
            r.input("a", render_ideal(&a, &vars));
            r.input("b", render_ideal(&b, &vars));
            r.input("vars", vars.join(","));
            r.input("coeff", gamma.to_string());
            report_into(&mut r, &verify_sum_inclusion(&a, &b, &gamma)?, &vars);
        }
        VerifyKind::Equality | VerifyKind::Lemma => {
            let xs = need(ideals, 2, kind)?;
            let (a, va) = parse_with(&xs[0], args.vars.as_deref())?;
            let (b, vb) = parse_with(&xs[1], args.vars_b.as_deref())?;
            let gamma = coefficient(args.coeff.as_ref(), "coeff")?;
            r.input("a", render_ideal(&a, &va));
            r.input("vars", va.join(","));
            r.input("b", render_ideal(&b, &vb));
            r.input("vars_b", vb.join(","));
            r.input("coeff", gamma.to_string());
            let rep = if kind == VerifyKind::Equality {
                verify_product_equality(&a, &b, &gamma)?
            } else {
                verify_sum_equals_intersection(&a, &b, &gamma)?
            };
            report_into(&mut r, &rep, &product_vars(&va, &vb));
        }
        VerifyKind::Main => {
            let xs = need(ideals, 2, kind)?;
            let vars = variables(args.vars.as_deref(), &[&xs[0], &xs[1]])?;
            let (a, b) = (parse_ideal(&xs[0], &vars)?, parse_ideal(&xs[1], &vars)?);
            let gamma = coefficient(args.coeff.as_ref(), "coeff")?;
            let m = args.m.unwrap_or(1);
            let base = powers_family(&a, m, 1)?.n;
            let n = args.n.unwrap_or(base);
            if n == 0 || !n.is_multiple_of(base) {
                return Err(Error::input(format!("--n must be a positive multiple of lcm(1..{m}) = {base}")));
            }
            r.input("a", render_ideal(&a, &vars));
            r.input("b", render_ideal(&b, &vars));
            r.input("vars", vars.join(","));
            r.input("coeff", gamma.to_string());
            r.input("m", m);
            r.input("n", n);
            let rep = verify_main_inclusion(&powers_family(&a, m, n / base)?, &powers_family(&b, m, n / base)?, &gamma)?;
            report_into(&mut r, &rep, &vars);
        }
        VerifyKind::Approx => {
            let xs = need(ideals, 1, kind)?;
            let (a, vars) = parse_with(&xs[0], args.vars.as_deref())?;
            let gamma = coefficient(args.coeff.as_ref(), "coeff")?;
            let eps = coefficient(args.eps.as_ref(), "eps")?;
            let p = args.p.ok_or_else(|| Error::input("missing --p"))?;
            let p = u32::try_from(p).map_err(|_| Error::input("--p is too large"))?;
            r.input("a", render_ideal(&a, &vars));
            r.input("vars", vars.join(","));
            r.input("coeff", gamma.to_string());
            r.input("p", p);
            r.input("eps", eps.to_string());
            report_into(&mut r, &verify_approximation(&a, p, &gamma, &eps)?, &vars);
        }
        VerifyKind::Subvariety => {
            let xs = need(ideals, 1, kind)?;
            let (b, vars) = parse_with(&xs[0], args.vars.as_deref())?;
            let gamma = coefficient(args.coeff.as_ref(), "coeff")?;
            let codim = args.codim.ok_or_else(|| Error::input("missing --codim"))?;
            r.input("b", render_ideal(&b, &vars));
            r.input("vars", vars.join(","));
            r.input("coeff", gamma.to_string());
            r.input("codim", codim);
            let rep = verify_subvariety(&b, codim, &gamma)?;
            let keep: Vec<String> = vars[..vars.len() - codim].to_vec();
            report_into(&mut r, &rep, &keep);
        }
        VerifyKind::Jumpshift => {
            let xs = need(ideals, 1, kind)?;
            let (a, vars) = parse_with(&xs[0], args.vars.as_deref())?;
            let t = coefficient(args.max.as_ref(), "max")?;
            let codim = args.codim.ok_or_else(|| Error::input("missing --codim"))?;
            r.input("a", render_ideal(&a, &vars));
            r.input("vars", vars.join(","));
            r.input("max", t.to_string());
            r.input("codim", codim);
            report_into(&mut r, &verify_jumping_shift(&a, codim, &t)?, &vars);
        }
        VerifyKind::Thm2 => {
            let gamma = coefficient(args.coeff.as_ref(), "coeff")?;
            let p = args.p.unwrap_or(1);
            let p_max = args.pmax.unwrap_or((p * args.qmax).max(args.m_max));
            let ((sa, na), (sb, nb)) = match (args.system.as_slice(), ideals.as_slice()) {
                ([fa, fb], []) => (
                    load_system(None, Some(fa), args.vars.as_deref(), p_max)?,
                    load_system(None, Some(fb), args.vars.as_deref(), p_max)?,
                ),
                ([], [ia, ib]) => {
                    let vars = variables(args.vars.as_deref(), &[ia, ib])?;
                    let joined = vars.join(",");
                    (
                        load_system(Some(ia), None, Some(&joined), p_max)?,
                        load_system(Some(ib), None, Some(&joined), p_max)?,
                    )
                }
                _ => {
                    return Err(Error::input(
                        "`verify thm2` takes two ideals (powers systems) or two --system files",
                    ))
                }
            };
            if na != nb {
                return Err(Error::input("the two systems use different variables"));
            }
            describe_system_input(&mut r, "system_a", &sa, &na);
            describe_system_input(&mut r, "system_b", &sb, &nb);
            r.input("coeff", gamma.to_string());
            r.input("p", p);
            r.input("m_max", args.m_max);
            r.input("qmax", args.qmax);
            report_into(&mut r, &verify_asymptotic(&sa, &sb, p, args.m_max, args.qmax, &gamma)?, &na);
        }
    }
    Ok(r)
}

/// Renders an exponent as a monomial in `vars`.
pub fn render_exponent(e: &Exponent, vars: &[String]) -> String {
    let ideal = MonomialIdeal::minimalize([e.clone()], e.arity()).expect("arity");
    render_ideal(&ideal, vars)
        .trim_start_matches('<')
        .trim_end_matches('>')
        .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv: Vec<String> = std::iter::once("multctl").chain(args.iter().copied()).map(String::from).collect();
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn lct_mi_jn() {
        let (code, out, _) = run_str(&["--no-timing", "lct", "--vars", "x,y", "<x^2,y^3>"]);
        assert_eq!(code, 0);
        assert!(out.contains("result.lct: 5/6\n"), "{out}");
        let (_, out, _) = run_str(&["--no-timing", "mi", "--coeff", "5/6", "--vars", "x,y", "<x^2,y^3>"]);
        assert!(out.contains("result.multiplier_ideal: <x, y>\n"), "{out}");
        let (_, out, _) = run_str(&["--no-timing", "jn", "--max", "4/3", "--vars", "x,y", "<x^2,y^3>"]);
        assert!(out.contains("result.jumping_numbers: 5/6, 7/6, 4/3\n"), "{out}");
    }

    #[test]
    fn json_and_plain_carry_the_same_fields() {
        let (_, plain, _) = run_str(&["--no-timing", "jn", "--max", "2", "<x^2,y^3>"]);
        let (_, js, _) = run_str(&["--no-timing", "--json", "jn", "--max", "2", "<x^2,y^3>"]);
        let v: Value = serde_json::from_str(&js).unwrap();
        assert_eq!(v["command"], "jn");
        assert_eq!(v["timing_ms"], 0);
        let jumps: Vec<String> = v["result"]["jumping_numbers"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_str().unwrap().to_string())
            .collect();
        assert!(plain.contains(&format!("result.jumping_numbers: {}\n", jumps.join(", "))));
        assert!(plain.contains(&format!("inputs.ideal: {}\n", v["inputs"]["ideal"].as_str().unwrap())));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["lct", "<x^2, w>", "--vars", "x,y"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["mi", "<x>"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
        assert_eq!(run_str(&["verify", "thm1", "<x,y>", "<x,y>", "--coeff", "2"]).0, EXIT_OK);
        let (code, out, _) = run_str(&["amult", "<x,y>", "--coeff", "2", "--qmax", "1"]);
        assert_eq!(code, EXIT_INCONCLUSIVE, "{out}");
    }

    #[test]
    fn verify_single_instances() {
        let (code, out, _) = run_str(&["--no-timing", "verify", "thm1", "--vars", "x,y", "<x,y>", "<x,y>", "--coeff", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("verdict: Holds\n") && out.contains("result.lhs: <x, y>\n"), "{out}");
        let (code, out, _) = run_str(&["--no-timing", "verify", "equality", "<x^2>", "<y^3>", "--vars", "x", "--vars-b", "y", "--coeff", "5/6"]);
        assert_eq!(code, 0);
        assert!(out.contains("verdict: HoldsWithEquality\n"), "{out}");
        assert!(out.contains("result.rhs: <x, y>\n"), "{out}");
        let (code, out, _) = run_str(&["verify", "jumpshift", "<x>", "--codim", "1", "--max", "3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("result.lhs: 2, 3, 4\n"), "{out}");
        let (code, _, _) = run_str(&["verify", "subvariety", "<x^2,y>", "--codim", "1", "--coeff", "1/4"]);
        assert_eq!(code, 0);
        let (code, _, _) = run_str(&["verify", "approx", "<x^2,y^3>", "--p", "4", "--eps", "1/2", "--coeff", "5/6"]);
        assert_eq!(code, 0);
        let (code, out, _) = run_str(&["verify", "main", "<x^2>", "<y^3>", "--vars", "x,y", "--m", "2", "--coeff", "5/3"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = run_str(&["verify", "thm2", "<x^2>", "<y^3>", "--vars", "x,y", "--coeff", "5/6", "--m-max", "3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("result.max_attained_at: 1\n"), "{out}");
    }

    #[test]
    fn verify_campaign_mode() {
        let (code, out, _) = run_str(&["--no-timing", "verify", "thm1", "--trials", "3", "--seed", "42"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("seed: 42\n"));
        assert!(out.contains("result.errors: 0\n"));
    }
}
