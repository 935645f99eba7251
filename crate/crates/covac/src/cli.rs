//! Command-line interface: one entrypoint binding all modules.
//!
//! Machine-readable output goes to stdout; diagnostics go to stderr. Exit
//! codes: 0 on success, 1 on a domain error (one-line diagnostic), 2 on a
//! usage error (clap's default). Every randomized command takes `--seed`
//! and is reproducible from it.

use crate::analysis;
use crate::codes::{self, BinaryCode, CodeFamily};
use crate::complexity::{self, CoefficientSet, Decomposition};
use crate::protocol::{self, AccessPlan, Scheme};
use crate::sample;
use crate::sim::{self, Mode, StorageInstance, Value};
use crate::{parse_ratio_list, render_ratio, BigRational, Rational64};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Code(#[from] codes::CodeError),
    #[error(transparent)]
    Complexity(#[from] complexity::ComplexityError),
    #[error(transparent)]
    Protocol(#[from] protocol::ProtocolError),
    #[error(transparent)]
    Sim(#[from] sim::SimError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

#[derive(Parser)]
#[command(
    name = "covac",
    version,
    about = "Covering-code storage schemes for low-access quantized linear computation"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Covering-code construction and verification.
    #[command(subcommand)]
    Codes(CodesCmd),
    /// Additive complexity of coefficient sets.
    #[command(subcommand)]
    Complexity(ComplexityCmd),
    /// Access planning against a storage scheme.
    #[command(subcommand)]
    Protocol(ProtocolCmd),
    /// Randomized end-to-end trials on simulated storage.
    Simulate(SimulateArgs),
    /// Tables, Pareto fronts, and bound curves.
    #[command(subcommand)]
    Analysis(AnalysisCmd),
}

#[derive(Subcommand)]
enum CodesCmd {
    /// Brute-force covering radius of a code file.
    Radius { file: PathBuf },
    /// Generalized covering radius of order --t.
    Gcr {
        file: PathBuf,
        #[arg(long)]
        t: u32,
    },
    /// Emit the i-th member of a named family.
    Family {
        name: String,
        #[arg(long)]
        i: u32,
        /// Write the code file here instead of stdout.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Check normality (some coordinate acceptable).
    Normal { file: PathBuf },
}

#[derive(Subcommand)]
enum ComplexityCmd {
    /// Exact additive complexity of a set.
    Compute {
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, default_value_t = complexity::DEFAULT_SIZE_LIMIT)]
        limit: usize,
    },
    /// Offset-plus-steps decomposition witnessing the complexity.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, default_value_t = complexity::DEFAULT_SIZE_LIMIT)]
        limit: usize,
    },
    /// Almost-Sidon check (distinct pairwise sums).
    Sidon {
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
}

#[derive(Subcommand)]
enum ProtocolCmd {
    /// Plan one query and print servers, coefficients, and ratios.
    Plan(PlanArgs),
}

#[derive(Args)]
struct PlanArgs {
    /// Code family (HamAmal, HamExp, HalfSpace, NonlinAmal, PiecewiseAmal)
    /// or Joint9, the length-9 joint-retrieval example code.
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 0)]
    i: u32,
    /// Number of blocks; the query length is t times the block length.
    #[arg(long, default_value_t = 1)]
    t: usize,
    /// Coefficient set, e.g. "1,2,3,5" (rationals allowed as p/q).
    #[arg(long, allow_hyphen_values = true)]
    set: String,
    /// Query vector: a file of rationals, or random:SEED.
    #[arg(long, default_value = "random:0")]
    w: String,
    #[arg(long, value_enum, default_value_t = PlanMode::Separate)]
    mode: PlanMode,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlanMode {
    /// Per-level retrieval through the universal planner.
    Separate,
    /// Joint retrieval over uncoded-plus-ones storage.
    Joint,
    /// Joint retrieval through the code's generalized covering radius.
    Gcr,
}

#[derive(Args)]
struct SimulateArgs {
    /// Code family or Joint9.
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 0)]
    i: u32,
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, allow_hyphen_values = true)]
    set: String,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = SimMode::Linear)]
    mode: SimMode,
    #[arg(long, value_enum, default_value_t = Backend::Exact)]
    backend: Backend,
    /// Append per-trial rows to a CSV file.
    #[arg(long)]
    emit_csv: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SimMode {
    Linear,
    Monomial,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Backend {
    Exact,
    Float,
}

#[derive(Subcommand)]
enum AnalysisCmd {
    /// The family table, rounded to two decimals and swept for dominance.
    Table {
        #[arg(long, default_value_t = 10)]
        cap: i64,
        #[arg(long, default_value_t = 9)]
        max_index: u32,
    },
    /// Exact Pareto front of the family pairs.
    Pareto {
        #[arg(long, default_value_t = 10)]
        cap: i64,
        #[arg(long, default_value_t = 9)]
        max_index: u32,
    },
    /// Entropy lower-bound curve for alphabet size 2^m.
    Bound {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1.0)]
        nu_min: f64,
        #[arg(long, default_value_t = 10.0)]
        nu_max: f64,
        #[arg(long, default_value_t = 50)]
        steps: usize,
    },
    /// Exact counting bound for one (n, k, ell, q) instance.
    CheckBound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        ell: u64,
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Use the refined systematic-scheme inequality (binary only).
        #[arg(long, default_value_t = false)]
        systematic: bool,
    },
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Codes(cmd) => run_codes(cmd),
        Command::Complexity(cmd) => run_complexity(cmd),
        Command::Protocol(ProtocolCmd::Plan(args)) => run_plan(args),
        Command::Simulate(args) => run_simulate(args),
        Command::Analysis(cmd) => run_analysis(cmd),
    }
}

fn run_codes(cmd: CodesCmd) -> Result<(), CliError> {
    match cmd {
        CodesCmd::Radius { file } => {
            let code = codes::read_code_file(&file)?;
            println!("{}", code.covering_radius()?);
        }
        CodesCmd::Gcr { file, t } => {
            let code = codes::read_code_file(&file)?;
            println!("{}", code.generalized_covering_radius(t)?);
        }
        CodesCmd::Family { name, i, emit } => {
            let code = named_code(&name, i)?;
            match emit {
                Some(path) => codes::write_code_file(&path, &code)?,
                None => print!("{}", codes::render_code(&code)),
            }
        }
        CodesCmd::Normal { file } => {
            let code = codes::read_code_file(&file)?;
            println!("{}", code.is_normal()?);
        }
    }
    Ok(())
}

fn run_complexity(cmd: ComplexityCmd) -> Result<(), CliError> {
    match cmd {
        ComplexityCmd::Compute { set, limit } => {
            let set = parse_set(&set)?;
            println!("{}", complexity::complexity_with_limit(&set, limit)?);
        }
        ComplexityCmd::Decompose { set, limit } => {
            let set = parse_set(&set)?;
            let d = complexity::decompose_with_limit(&set, limit)?;
            println!("{}", render_decomposition(&d));
        }
        ComplexityCmd::Sidon { set } => {
            let set = parse_set(&set)?;
            println!("{}", complexity::is_almost_sidon(&set));
        }
    }
    Ok(())
}

/// JSON-like rendering: theta, offset, steps, and 1-based selectors keyed
/// by element.
fn render_decomposition(d: &Decomposition) -> String {
    let mut out = String::new();
    write!(out, "{{\"theta\": {}, \"s\": \"{}\", \"z\": [", d.theta(), render_ratio(d.offset()))
        .unwrap();
    for (i, z) in d.steps().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        write!(out, "\"{}\"", render_ratio(z)).unwrap();
    }
    out.push_str("], \"selectors\": {");
    for (j, (value, sel)) in d.set().values().iter().zip(d.selectors()).enumerate() {
        if j > 0 {
            out.push_str(", ");
        }
        let ids: Vec<String> = sel.iter().map(|i| (i + 1).to_string()).collect();
        write!(out, "\"{}\": [{}]", render_ratio(value), ids.join(", ")).unwrap();
    }
    out.push_str("}}");
    out
}

fn run_plan(args: PlanArgs) -> Result<(), CliError> {
    let scheme = named_scheme(&args.family, args.i)?;
    let set = parse_set(&args.set)?;
    let d = complexity::decompose(&set)?;
    let theta = d.theta();
    let p = scheme.block_len();
    let k = args.t * p;
    let w = query_vector(&args.w, &set, k)?;

    let (plan, n, asymptotic): (AccessPlan, usize, (Rational64, Rational64)) = match args.mode {
        PlanMode::Separate => {
            let plan = protocol::plan_universal(&scheme, &w, &d)?;
            let (bk, bn, bl) = scheme.per_block();
            let asy = (
                Rational64::new(bn as i64, bk as i64),
                Rational64::new(theta as i64 * bl as i64, bk as i64),
            );
            (plan, scheme.node_count(args.t), asy)
        }
        PlanMode::Joint => {
            let plan = protocol::plan_joint_trivial(&w, &d)?;
            let pow = 1i64 << theta.min(62);
            (plan, k + 1, (Rational64::new(1, 1), Rational64::new(pow - 1, pow)))
        }
        PlanMode::Gcr => {
            let r_theta = scheme.code().generalized_covering_radius(theta as u32)?;
            let plan = protocol::plan_gcr(&scheme, &w, &d, r_theta)?;
            let (bk, bn, _) = scheme.per_block();
            let asy = (
                Rational64::new(bn as i64, bk as i64),
                Rational64::new(r_theta as i64 + theta as i64, bk as i64),
            );
            (plan, scheme.node_count(args.t), asy)
        }
    };

    for (id, mu) in plan.iter() {
        println!("server={id} mu={}", render_ratio(mu));
    }
    let ell = plan.expected_access();
    println!("access={} bound={ell}", plan.access());
    println!("n={n} k={k} ell={ell}");
    println!(
        "finite: nu={} lambda={}",
        Rational64::new(n as i64, k as i64),
        Rational64::new(ell as i64, k as i64)
    );
    println!("asymptotic: nu={} lambda={}", asymptotic.0, asymptotic.1);
    Ok(())
}

fn run_simulate(args: SimulateArgs) -> Result<(), CliError> {
    let scheme = named_scheme(&args.family, args.i)?;
    let set = parse_set(&args.set)?;
    let d = complexity::decompose(&set)?;
    let k = args.t * scheme.block_len();
    let mode = match args.mode {
        SimMode::Linear => Mode::Linear,
        SimMode::Monomial => Mode::Monomial,
    };

    let mut rng = sample::rng(args.seed);
    let mut csv = String::from("trial,ok,access,bound\n");
    let mut failures = 0usize;
    let mut max_access = 0usize;
    let mut bound = 0usize;
    for trial in 0..args.trials {
        let x: Vec<BigRational> = (0..k)
            .map(|_| match mode {
                Mode::Linear => sample::dyadic(&mut rng, 4095, 6),
                Mode::Monomial => sample::unit_range(&mut rng),
            })
            .collect();
        let w = sample::weights_from_set(&mut rng, &set, k);
        let plan = protocol::plan_universal(&scheme, &w, &d)?;
        let (ok, access, plan_bound, value) = match args.backend {
            Backend::Exact => {
                let mut inst: StorageInstance<BigRational> = sim::encode(&x, &scheme, mode)?;
                let r = inst.verify_query(&w, &plan)?;
                (r.ok, r.access_count, r.bound, render_ratio(&r.value))
            }
            Backend::Float => {
                let xf: Vec<f64> = x.iter().map(Value::from_ratio).collect();
                let mut inst: StorageInstance<f64> = sim::encode(&xf, &scheme, mode)?;
                let r = inst.verify_query(&w, &plan)?;
                (r.ok, r.access_count, r.bound, r.value.to_string())
            }
        };
        if !ok {
            failures += 1;
        }
        max_access = max_access.max(access);
        bound = plan_bound;
        println!("trial={trial} ok={ok} access={access} bound={plan_bound} value={value}");
        csv.push_str(&format!("{trial},{ok},{access},{plan_bound}\n"));
    }
    println!(
        "trials={} failed={failures} max_access={max_access} bound={bound}",
        args.trials
    );
    if let Some(path) = args.emit_csv {
        std::fs::write(&path, csv).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    if failures > 0 {
        return Err(CliError::Usage(format!("{failures} trials failed verification")));
    }
    Ok(())
}

fn run_analysis(cmd: AnalysisCmd) -> Result<(), CliError> {
    match cmd {
        AnalysisCmd::Table { cap, max_index } => {
            let rows =
                analysis::generate_table(&codes::ALL_FAMILIES, max_index, Rational64::new(cap, 1));
            print!("{}", analysis::table_csv(&rows));
        }
        AnalysisCmd::Pareto { cap, max_index } => {
            let cap = Rational64::new(cap, 1);
            let mut pairs = vec![crate::codes::FeasiblePair::new(
                Rational64::new(1, 1),
                Rational64::new(1, 2),
                "Trivial",
            )];
            for family in codes::ALL_FAMILIES {
                for i in family.min_index()..=max_index {
                    if let Ok(pair) = codes::family_pair(family, i) {
                        if pair.redundancy <= cap {
                            pairs.push(pair);
                        }
                    }
                }
            }
            print!("{}", analysis::pairs_csv(&analysis::pareto_front(&pairs)));
        }
        AnalysisCmd::Bound {
            m,
            nu_min,
            nu_max,
            steps,
        } => {
            if m == 0 || nu_min < 1.0 || nu_max < nu_min || steps < 1 {
                return Err(CliError::Usage(
                    "bound needs m ≥ 1 and 1 ≤ nu-min ≤ nu-max with ≥ 1 steps".into(),
                ));
            }
            let nus: Vec<f64> = (0..=steps)
                .map(|s| nu_min + (nu_max - nu_min) * s as f64 / steps as f64)
                .collect();
            print!("{}", analysis::curve_csv(&analysis::bound_curve(&nus, m), m));
        }
        AnalysisCmd::CheckBound {
            n,
            k,
            ell,
            q,
            systematic,
        } => {
            if ell == 0 || ell > n || k == 0 || q < 2 {
                return Err(CliError::Usage(
                    "check-bound needs 0 < ell ≤ n, k > 0, q ≥ 2".into(),
                ));
            }
            let ok = if systematic {
                if q != 2 || ell > k || k > n {
                    return Err(CliError::Usage(
                        "systematic refinement needs q = 2 and ell ≤ k ≤ n".into(),
                    ));
                }
                analysis::check_counting_bound_systematic(n, k, ell)
            } else {
                analysis::check_counting_bound(n, k, ell, q)
            };
            println!("{ok}");
        }
    }
    Ok(())
}

/// Resolve a code name: one of the five families, or Joint9.
fn named_code(name: &str, i: u32) -> Result<BinaryCode, CliError> {
    if name.eq_ignore_ascii_case("joint9") {
        return Ok(codes::joint_length9());
    }
    let family: CodeFamily = name.parse()?;
    Ok(codes::family_code(family, i)?)
}

/// Build a scheme for a named code, using the family's closed-form radius
/// so long members do not hit the enumeration limit.
fn named_scheme(name: &str, i: u32) -> Result<Scheme, CliError> {
    let code = named_code(name, i)?;
    if name.eq_ignore_ascii_case("joint9") {
        return Ok(Scheme::build(code)?);
    }
    let family: CodeFamily = name.parse()?;
    let radius = codes::family_radius(family, i)?;
    Ok(Scheme::with_known_radius(code, radius)?)
}

fn parse_set(text: &str) -> Result<CoefficientSet, CliError> {
    let values = parse_ratio_list(text).map_err(CliError::Usage)?;
    Ok(CoefficientSet::new(values)?)
}

/// Query vector source: `random:SEED` draws uniformly from the set; any
/// other string is a path to a file of rationals.
fn query_vector(
    source: &str,
    set: &CoefficientSet,
    k: usize,
) -> Result<Vec<BigRational>, CliError> {
    if let Some(seed) = source.strip_prefix("random:") {
        let seed: u64 = seed
            .parse()
            .map_err(|_| CliError::Usage(format!("bad seed in '{source}'")))?;
        let mut rng = sample::rng(seed);
        return Ok(sample::weights_from_set(&mut rng, set, k));
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| CliError::Io(format!("{source}: {e}")))?;
    let w = parse_ratio_list(&text).map_err(CliError::Usage)?;
    if w.len() != k {
        return Err(CliError::Usage(format!(
            "query vector has {} entries, expected {k}",
            w.len()
        )));
    }
    Ok(w)
}
