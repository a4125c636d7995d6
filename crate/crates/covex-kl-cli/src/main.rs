//! `covex-kl`: compute Kazhdan–Lusztig polynomials of covexillary Schubert
//! varieties by labelled trees, by the merging recursion, or by the
//! classical recursion, and cross-check the three.
//!
//! Exit codes: 0 success, 2 input validation, 3 cross-check mismatch,
//! 4 oracle budget exceeded.

/// `println!` that ignores write errors (a closed pipe is not a failure).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

/// `print!` that ignores write errors.
macro_rules! out_raw {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($arg)*);
    }};
}

mod crosscheck;
mod json;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use covex_kl::oracle::{budget_from_env, KlTable, OracleError, BUDGET_ENV};
use covex_kl::pipeline::{oracle_type, Case, PipelineError};
use covex_kl::polyq::QPoly;
use covex_kl::triples::{vexillary_from_triple, Triple};
use covex_kl::weyl::{LieType, WeylElement};

/// A failure, classified by the exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Mismatch(String),
    Budget(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Budget(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Mismatch(m) | CliError::Budget(m) => m,
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Oracle(o) => o.into(),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { order, .. } => {
                CliError::Budget(format!("{e}; set {BUDGET_ENV}={order} (or larger) to allow it"))
            }
            OracleError::RankTooLarge => CliError::Budget(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "covex-kl", version, about = "Kazhdan-Lusztig polynomials of covexillary Schubert varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute P_{w∘v, w∘w(τ)} for a triple τ and an element v.
    Compute(ComputeArgs),
    /// Compute P_{v,w} directly by the classical recursion.
    Oracle(OracleArgs),
    /// Check trees, induction and the oracle against each other on every
    /// (or on randomly sampled) valid input up to a rank.
    Crosscheck(CrosscheckArgs),
    /// Print the labelled-tree shape in DOT.
    Tree(CaseArgs),
}

/// How a case is specified: flags, or a JSON file.
#[derive(Args, Debug, Clone)]
pub struct CaseArgs {
    /// Lie type: A, B, C or D.
    #[arg(long = "type", value_name = "TYPE", required_unless_present = "input")]
    lie_type: Option<LieType>,
    /// Window size n.
    #[arg(long, required_unless_present = "input")]
    n: Option<usize>,
    /// The triple, e.g. "k=1,3 p=3,4 q=2,5".
    #[arg(long, required_unless_present = "input")]
    triple: Option<String>,
    /// Window of v, e.g. "8,7,6,5,4,3,2,1" or "7 -6 -5 -4 -3 -2 -1".
    /// Defaults to w(τ) (giving P = 1) with a warning.
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    /// JSON file with the case (`-` for stdin): a triple object, optionally
    /// with "v" and "method", or the output of `compute --emit json`.
    #[arg(long, conflicts_with_all = ["lie_type", "n", "triple", "v"])]
    input: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Trees,
    Inductive,
    Oracle,
    All,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Trees => "trees",
            Method::Inductive => "inductive",
            Method::Oracle => "oracle",
            Method::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        <Method as ValueEnum>::from_str(s, true).ok()
    }

    fn includes(self, m: Method) -> bool {
        self == Method::All || self == m
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    case: CaseArgs,
    /// Method(s) to run [default: trees, or the method recorded in --input].
    #[arg(long, value_enum)]
    method: Option<Method>,
    #[arg(long, value_enum, default_value = "text")]
    emit: Emit,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long = "type", value_name = "TYPE")]
    lie_type: LieType,
    #[arg(long)]
    n: usize,
    /// The lower element.
    #[arg(long, allow_hyphen_values = true)]
    v: String,
    /// The upper element.
    #[arg(long, allow_hyphen_values = true)]
    w: String,
}

#[derive(Args, Debug)]
pub struct CrosscheckArgs {
    #[arg(long = "type", value_name = "TYPE")]
    pub lie_type: LieType,
    /// Largest window size checked (all sizes 1..=n-max are covered).
    #[arg(long)]
    pub n_max: usize,
    /// Maximum number of (τ, v) cases to check; 0 checks nothing.
    #[arg(long)]
    pub budget: Option<usize>,
    /// Check this many random cases instead of enumerating all of them.
    #[arg(long)]
    pub random: Option<usize>,
    /// Seed for --random.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// A parsed and validated request.
pub struct Request {
    pub triple: Triple,
    pub v: WeylElement,
    pub method: Option<Method>,
}

fn parse_window(t: LieType, n: usize, text: &str, what: &str) -> Result<WeylElement, CliError> {
    let w = WeylElement::parse(t, text).map_err(|e| CliError::Validation(format!("--{what}: {e}")))?;
    if w.n() != n {
        return Err(CliError::Validation(format!("--{what}: window {w} has {} entries, expected n = {n}", w.n())));
    }
    Ok(w)
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| CliError::Validation(format!("cannot read {path}: {e}")))?;
    Ok(s)
}

fn default_v(triple: &Triple) -> Result<WeylElement, CliError> {
    let w = vexillary_from_triple(triple).map_err(|e| CliError::Validation(e.to_string()))?;
    eprintln!("warning: no v given; using v = w(τ) = {w}, for which the polynomial is 1");
    Ok(w)
}

impl CaseArgs {
    fn request(&self) -> Result<Request, CliError> {
        if let Some(path) = &self.input {
            let parsed = json::parse_request(&read_input(path)?)?;
            let v = match parsed.v {
                Some(v) => v,
                None => default_v(&parsed.triple)?,
            };
            return Ok(Request { triple: parsed.triple, v, method: parsed.method });
        }
        let (Some(t), Some(n), Some(text)) = (self.lie_type, self.n, &self.triple) else {
            return Err(CliError::Validation("--type, --n and --triple are required without --input".into()));
        };
        if n == 0 {
            return Err(CliError::Validation("--n must be at least 1".into()));
        }
        let triple = Triple::parse(t, n, text).map_err(|e| CliError::Validation(format!("--triple: {e}")))?;
        let v = match &self.v {
            Some(text) => parse_window(t, n, text, "v")?,
            None => default_v(&triple)?,
        };
        Ok(Request { triple, v, method: None })
    }
}

/// Results of the requested methods, in the order trees, inductive, oracle.
pub struct Outcome {
    pub results: Vec<(Method, QPoly)>,
    /// Methods that could not run, with the reason (budget).
    pub skipped: Vec<(Method, String)>,
}

impl Outcome {
    /// `Some(true)` for MATCH, `Some(false)` for MISMATCH, `None` when fewer
    /// than two methods produced a result.
    pub fn verdict(&self) -> Option<bool> {
        (self.results.len() >= 2).then(|| self.results.windows(2).all(|p| p[0].1 == p[1].1))
    }
}

fn run_methods(case: &Case, method: Method) -> Result<Outcome, CliError> {
    let mut out = Outcome { results: Vec::new(), skipped: Vec::new() };
    if method.includes(Method::Trees) {
        out.results.push((Method::Trees, case.by_trees()?));
    }
    if method.includes(Method::Inductive) {
        if !case.side_conditions_hold() {
            let v: Vec<String> = case.side_violations.iter().map(|v| v.to_string()).collect();
            eprintln!(
                "warning: 𝔥(τ) = {} breaks the side conditions of the merging recursion ({}); its result may differ",
                case.h.matrix,
                v.join("; ")
            );
        }
        out.results.push((Method::Inductive, case.by_inductive()?));
    }
    if method.includes(Method::Oracle) {
        let table = KlTable::new(oracle_type(case.lie_type()), case.triple.n);
        match table {
            Ok(mut table) => out.results.push((Method::Oracle, case.by_oracle(&mut table)?)),
            Err(e) => match CliError::from(e) {
                CliError::Budget(m) => out.skipped.push((Method::Oracle, m)),
                other => return Err(other),
            },
        }
    }
    Ok(out)
}

fn cmd_compute(args: &ComputeArgs) -> Result<(), CliError> {
    let req = args.case.request()?;
    let method = args.method.or(req.method).unwrap_or(Method::Trees);
    let case = Case::new(&req.triple, &req.v)?;
    if args.emit == Emit::Dot {
        out_raw!("{}", dot(&case)?);
        return Ok(());
    }
    let outcome = run_methods(&case, method)?;
    match args.emit {
        Emit::Json => out!("{}", json::render_compute(&case, method, &outcome)?),
        _ => {
            for (m, p) in &outcome.results {
                if method == Method::All {
                    out!("{}: {p}", m.as_str());
                } else {
                    out!("{p}");
                }
            }
            match outcome.verdict() {
                Some(true) => out!("MATCH"),
                Some(false) => out!("MISMATCH"),
                None => {}
            }
        }
    }
    if let Some((_, m)) = outcome.skipped.first() {
        return Err(CliError::Budget(format!("oracle not run: {m}")));
    }
    if outcome.verdict() == Some(false) {
        return Err(CliError::Mismatch("the methods disagree".into()));
    }
    Ok(())
}

fn dot(case: &Case) -> Result<String, CliError> {
    let tree = case.tree()?;
    let bounds: Vec<u64> = tree.edges.iter().map(|e| e.capacity_bound).collect();
    Ok(tree.to_dot(Some(&bounds)))
}

fn cmd_tree(args: &CaseArgs) -> Result<(), CliError> {
    let req = args.request()?;
    let case = Case::new(&req.triple, &req.v)?;
    out_raw!("{}", dot(&case)?);
    Ok(())
}

fn cmd_oracle(args: &OracleArgs) -> Result<(), CliError> {
    if args.n == 0 {
        return Err(CliError::Validation("--n must be at least 1".into()));
    }
    let gt = oracle_type(args.lie_type);
    let as_group = |text: &str, what: &str| -> Result<WeylElement, CliError> {
        parse_window(args.lie_type, args.n, text, what)?
            .with_type(gt)
            .map_err(|e| CliError::Validation(format!("--{what}: {e}")))
    };
    let x = as_group(&args.v, "v")?;
    let w = as_group(&args.w, "w")?;
    let mut table = KlTable::new(gt, args.n)?;
    out!("{}", table.p(&x, &w)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Crosscheck(a) => crosscheck::run(a, budget_from_env()),
        Command::Tree(a) => cmd_tree(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
