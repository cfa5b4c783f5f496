//! Command-line front end. [`run`] parses arguments, dispatches, writes the
//! result to `out`, and returns the process exit code.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::counterexample::{
    check_fractional_claims, check_root_interval, check_s5, construct, Counterexample, ResidueCase,
    TABLE_K_2_MOD_4, TABLE_K_3_MOD_4,
};
use crate::error::{Error, Result};
use crate::greedy::{
    delta_index, ell_index, expand_guarded, phi, profile, reduce, step_report, Expansion,
    StepReport, UpsilonProfile,
};
use crate::lemmas::{tie_bridge_check, verify_lp1, verify_lp11, verify_lp12, verify_lp50};
use crate::rational::Rational;
use crate::report::VerificationReport;
use crate::underapprox::{
    best_m_term, best_two_term, verify_threshold_sweep, ThresholdSweep, UnderapproxResult,
    DEFAULT_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;
pub const EXIT_VERIFICATION: i32 = 5;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) => EXIT_DOMAIN,
        Error::DigitGuard { .. } => EXIT_GUARD,
        Error::Inconclusive { .. } => EXIT_INCONCLUSIVE,
        Error::Invariant(_) => EXIT_INTERNAL,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Parser)]
#[command(
    name = "egyptian",
    version,
    about = "Greedy Egyptian fractions and best underapproximations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,

    /// Worker threads for sweeps (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Abort expansions whose next denominator has more than this many digits.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub digit_guard: usize,

    /// Disable the digit guard.
    #[arg(long, global = true)]
    pub no_guard: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Greedy expansion of p/q.
    Expand {
        p: u64,
        q: u64,
        #[arg(long, default_value_t = 10)]
        m: usize,
    },
    /// Every best m-term underapproximation of p/q.
    Best {
        p: u64,
        q: u64,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// The four step conditions at step m with numerator N.
    Step {
        p: u64,
        q: u64,
        #[arg(long)]
        m: usize,
        #[arg(long = "n", short = 'n')]
        n: u64,
    },
    /// A fraction with Upsilon = k that greedy does not approximate best.
    Construct { k: u64 },
    /// Finite verification suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 500)]
        q_max: u64,
        /// Last j for the fractional-part claims.
        #[arg(long, default_value_t = 500)]
        j_max: u64,
        /// Last s for the root-interval checks.
        #[arg(long, default_value_t = 300)]
        s_max: u64,
    },
    /// Samples of Phi(x) = 1/(G(x) - 1/x) at x = i/grid.
    PhiSamples {
        #[arg(long, default_value_t = 1000)]
        grid: u64,
    },
    /// Upsilon, ell, Delta and closed-form family of p/q.
    Upsilon { p: u64, q: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lp1,
    Lp11,
    Lp12,
    Lp50,
    Threshold,
    Claims,
    Roots,
    Tables,
    Bridge,
    All,
}

struct Rendered {
    json: Value,
    csv: String,
    plain: String,
    failed: bool,
}

impl Rendered {
    fn new(value: &impl Serialize, plain: String) -> Result<Self> {
        let json = to_value(value)?;
        let csv = field_csv(&json);
        Ok(Rendered {
            json,
            csv,
            plain,
            failed: false,
        })
    }

    fn with_csv(mut self, csv: String) -> Self {
        self.csv = csv;
        self
    }
}

fn to_value(value: &impl Serialize) -> Result<Value> {
    serde_json::to_value(value).map_err(|e| Error::invariant(format!("serialization failed: {e}")))
}

fn csv_cell(v: &Value) -> String {
    let raw = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw
    }
}

/// Two-column `field,value` rendering of a JSON object.
fn field_csv(v: &Value) -> String {
    let mut out = String::from("field,value\n");
    if let Value::Object(map) = v {
        for (k, val) in map {
            let _ = writeln!(out, "{k},{}", csv_cell(val));
        }
    }
    out
}

fn fraction(p: u64, q: u64) -> Result<(u64, u64, Rational)> {
    if p == 0 || q == 0 {
        return Err(Error::domain("p and q must be positive"));
    }
    let (p, q) = reduce(p, q);
    Ok((p, q, Rational::new(p, q)?))
}

#[derive(Serialize)]
struct ExpandOutput {
    p: u64,
    q: u64,
    ell: u64,
    delta: u64,
    #[serde(flatten)]
    expansion: Expansion,
}

fn cmd_expand(p: u64, q: u64, m: usize, guard: Option<usize>) -> Result<Rendered> {
    let (p, q, theta) = fraction(p, q)?;
    let expansion = expand_guarded(&theta, m, guard)?;
    let out = ExpandOutput {
        p,
        q,
        ell: ell_index(p, q)?,
        delta: delta_index(p, q)?,
        expansion,
    };
    let terms: Vec<String> = out.expansion.terms.iter().map(|t| t.to_string()).collect();
    let start = out
        .expansion
        .recurrence_start()
        .map_or("none".to_string(), |n| n.to_string());
    let plain = format!(
        "{p}/{q}\nterms: {}\nerror: {}\nell: {}  delta: {}  recurrence start: {start}\n",
        terms.join(" "),
        out.expansion.error,
        out.ell,
        out.delta
    );
    let mut csv = String::from("n,a_n\n");
    for (i, t) in terms.iter().enumerate() {
        let _ = writeln!(csv, "{},{t}", i + 1);
    }
    Ok(Rendered::new(&out, plain)?.with_csv(csv))
}

#[derive(Serialize)]
struct BestOutput {
    p: u64,
    q: u64,
    #[serde(flatten)]
    result: UnderapproxResult,
}

fn tuple_str(t: &[num_bigint::BigInt]) -> String {
    let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn cmd_best(p: u64, q: u64, m: usize, budget: u64, guard: Option<usize>) -> Result<Rendered> {
    let (p, q, theta) = fraction(p, q)?;
    if m > 0 {
        expand_guarded(&theta, m, guard)?;
    }
    let result = if m == 2 {
        best_two_term(&theta)?
    } else {
        best_m_term(&theta, m, budget)?
    };
    let verdict = match (result.greedy_is_best, result.unique) {
        (true, true) => "greedy is the unique optimum",
        (true, false) => "greedy ties",
        (false, _) => "greedy is beaten",
    };
    let mut plain = format!(
        "{p}/{q}, m = {m}: {verdict}\ngreedy: {} sum {}\n",
        tuple_str(&result.greedy_terms),
        result.greedy_sum
    );
    let mut csv = String::from("tuple,sum,greedy\n");
    for t in &result.optimal_tuples {
        let _ = writeln!(
            plain,
            "optimal: {} sum {}",
            tuple_str(t),
            result.optimal_sum
        );
        let cells: Vec<String> = t.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(
            csv,
            "{},{},{}",
            cells.join(" "),
            result.optimal_sum,
            *t == result.greedy_terms
        );
    }
    Ok(Rendered::new(&BestOutput { p, q, result }, plain)?.with_csv(csv))
}

#[derive(Serialize)]
struct StepOutput {
    p: u64,
    q: u64,
    #[serde(flatten)]
    report: StepReport,
}

fn cmd_step(p: u64, q: u64, m: usize, n: u64, guard: Option<usize>) -> Result<Rendered> {
    let (p, q, theta) = fraction(p, q)?;
    expand_guarded(&theta, m.saturating_add(1), guard)?;
    let report = step_report(&theta, m, n)?;
    let plain = format!(
        "{p}/{q}, m = {m}, N = {n}: a_m = {}, a_m+1 = {}, b_m = {}, Phi = {}\nconditions (i)-(iv): {} {} {} {}\n",
        report.a_m,
        report.a_next,
        report.b_m,
        report.phi_value,
        report.cond_i,
        report.cond_ii,
        report.cond_iii,
        report.cond_iv
    );
    Rendered::new(&StepOutput { p, q, report }, plain)
}

fn cmd_construct(k: u64) -> Result<Rendered> {
    let c: Counterexample = construct(k)?;
    let plain = format!(
        "k = {k}: {}/{} with v = {}\ngreedy pair ({}, {}) is beaten by ({}, {}) by {}\n",
        c.p,
        c.q,
        c.v,
        c.greedy_pair.0,
        c.greedy_pair.1,
        c.beating_pair.0,
        c.beating_pair.1,
        c.margin
    );
    Rendered::new(&c, plain)
}

fn cmd_upsilon(p: u64, q: u64) -> Result<Rendered> {
    let (p, q, _) = fraction(p, q)?;
    let prof: UpsilonProfile = profile(p, q)?;
    let plain = format!(
        "{p}/{q}: Upsilon = {}, ell = {}, Delta = {}, family = {:?}\n",
        prof.upsilon, prof.ell, prof.delta, prof.family
    );
    Rendered::new(&prof, plain)
}

#[derive(Serialize)]
struct PhiSample {
    x: Rational,
    phi: Rational,
}

fn cmd_phi_samples(grid: u64) -> Result<Rendered> {
    if grid == 0 {
        return Err(Error::domain("grid must be at least 1"));
    }
    let mut samples = Vec::with_capacity(grid as usize);
    let mut csv = String::from("x,phi,x_exact,phi_exact\n");
    let mut plain = String::new();
    for i in 1..=grid {
        let x = Rational::new(i, grid)?;
        let y = phi(&x)?;
        let _ = writeln!(csv, "{},{},{x},{y}", x.to_f64(), y.to_f64());
        let _ = writeln!(plain, "{:.6} {:.6}", x.to_f64(), y.to_f64());
        samples.push(PhiSample { x, phi: y });
    }
    Ok(Rendered::new(&samples, plain)?.with_csv(csv))
}

/// `check_s5` at every table entry, as a report with points `[k, v]`.
pub fn verify_tables() -> VerificationReport {
    let mut rep = VerificationReport::new("tables", "k = 4j+2, j <= 11 and k = 4j+3, j <= 5");
    for &(k, v) in TABLE_K_2_MOD_4.iter().chain(&TABLE_K_3_MOD_4) {
        rep.record(&[k as i64, v as i64], check_s5(k, v).unwrap_or(false));
    }
    rep.normalize();
    rep
}

fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("lemma_id,range,points_checked,failures,unexpected,passed\n");
    for r in reports {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.lemma_id,
            csv_cell(&Value::String(r.range_descr.clone())),
            r.points_checked,
            r.failures.len(),
            r.unexpected_failures().len(),
            r.passed()
        );
    }
    out
}

fn cmd_verify(suite: Suite, q_max: u64, j_max: u64, s_max: u64) -> Result<Rendered> {
    let mut reports = Vec::new();
    let mut sweep: Option<ThresholdSweep> = None;
    let all = suite == Suite::All;
    if all || suite == Suite::Lp1 {
        reports.push(verify_lp1(q_max)?);
    }
    if all || suite == Suite::Lp11 {
        reports.push(verify_lp11(q_max)?);
    }
    if all || suite == Suite::Lp12 {
        reports.push(verify_lp12()?);
    }
    if all || suite == Suite::Lp50 {
        reports.push(verify_lp50(q_max)?);
    }
    if all || suite == Suite::Threshold {
        let s = verify_threshold_sweep(q_max)?;
        reports.push(s.report.clone());
        sweep = Some(s);
    }
    if all || suite == Suite::Claims {
        for case in ResidueCase::ALL {
            reports.push(check_fractional_claims(case, j_max)?);
        }
    }
    if all || suite == Suite::Roots {
        for case in ResidueCase::ALL {
            reports.push(check_root_interval(case, s_max)?);
        }
    }
    if all || suite == Suite::Tables {
        reports.push(verify_tables());
    }
    if all || suite == Suite::Bridge {
        reports.push(tie_bridge_check(q_max.max(61))?);
    }

    let passed = reports.iter().all(VerificationReport::passed);
    let mut plain = String::new();
    for r in &reports {
        let _ = writeln!(plain, "{}", r.summary_line());
        for f in r.unexpected_failures() {
            let _ = writeln!(plain, "  unexpected failure at {f:?}");
        }
        for n in &r.notes {
            let _ = writeln!(plain, "  note: {n}");
        }
    }
    let mut json = json!({ "passed": passed, "reports": to_value(&reports)? });
    let csv = match (&sweep, suite) {
        (Some(s), Suite::Threshold) => {
            json["rows"] = to_value(&s.rows)?;
            s.to_csv()
        }
        _ => reports_csv(&reports),
    };
    Ok(Rendered {
        json,
        csv,
        plain,
        failed: !passed,
    })
}

fn dispatch(cli: &Cli) -> Result<Rendered> {
    let guard = (!cli.no_guard).then_some(cli.digit_guard);
    match cli.command {
        Command::Expand { p, q, m } => cmd_expand(p, q, m, guard),
        Command::Best { p, q, m, budget } => cmd_best(p, q, m, budget, guard),
        Command::Step { p, q, m, n } => cmd_step(p, q, m, n, guard),
        Command::Construct { k } => cmd_construct(k),
        Command::Verify {
            suite,
            q_max,
            j_max,
            s_max,
        } => cmd_verify(suite, q_max, j_max, s_max),
        Command::PhiSamples { grid } => cmd_phi_samples(grid),
        Command::Upsilon { p, q } => cmd_upsilon(p, q),
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_DOMAIN } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.jobs {
        Some(0) => Err(Error::domain("--jobs must be at least 1")),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::invariant(format!("thread pool: {e}"))),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(r) => {
            let text = match cli.format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&r.json).unwrap_or_default()
                ),
                Format::Csv => r.csv,
                Format::Plain => r.plain,
            };
            let _ = out.write_all(text.as_bytes());
            if r.failed {
                EXIT_VERIFICATION
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
