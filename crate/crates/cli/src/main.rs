//! `iset`: command-line front end over the counting and bounds library.
//! Every run emits one JSON report on stdout; diagnostics go to stderr.
//! Exit codes: 0 ok, 1 usage or input error, 2 certified violation,
//! 3 indeterminate or budget exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use iset_core::alpha::{caro_wei_lower, edge_min_upper};
use iset_core::bounds::{
    check_double_cover_with, check_induction_lower, check_induction_upper, lower_bound_log,
    regular_bounds, sandwich_with, upper_bound_bivariate_log, upper_bound_log, BoundsError,
    SandwichReport,
};
use iset_core::count::{
    alpha_exact_with, count_with, isp_bivariate_with, isp_with, CountError, CountOptions,
};
use iset_core::extremal::{
    f_max, f_min, realize_extremal_max, realize_extremal_min, swap_check, DegreeDist,
};
use iset_core::graph::{parse_any, splitmix64, ParsedInput};
use iset_core::lemmas::{
    check_holder_forms, check_lemma_a1, check_lemma_a2, check_lemma_a3, check_power_monotone,
    grid_a1, grid_a2, grid_a3, grid_holder, grid_power,
};
use iset_core::{Graph, LogInterval, Rational, Status, Verdict, Witness};
use serde_json::{json, Value};
use std::process::ExitCode;
use std::time::Instant;

fn parse_rational(s: &str) -> Result<Rational, String> {
    let r: Rational = s
        .trim()
        .parse()
        .map_err(|_| format!("expected an integer or p/q fraction, got '{s}'"))?;
    Ok(r)
}

#[derive(Parser)]
#[command(
    name = "iset",
    about = "Exact independent-set counting and certified extremal bounds",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Graph or bigraph file ('-' reads stdin)
    file: Option<String>,
    /// Generate a random graph with this many vertices instead of reading a file
    #[arg(long, value_name = "N", conflicts_with = "file")]
    random_n: Option<usize>,
    /// Edge probability for --random-n
    #[arg(long, value_name = "R", value_parser = parse_rational, default_value = "1/2")]
    random_p: Rational,
    /// PRNG seed for --random-n (generator: splitmix64)
    #[arg(long, value_name = "N", default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BudgetArg {
    /// Recursion-node budget for exact counting
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
}

#[derive(Args, Clone)]
struct PrecArg {
    /// Working precision in bits
    #[arg(long, value_name = "BITS", default_value_t = 256)]
    prec: u32,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    Upper,
    Lower,
    Min,
    Max,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Lemma {
    A1,
    A2,
    A3,
    Power,
    Holder,
}

#[derive(Subcommand)]
enum Command {
    /// Exact number of independent sets
    Count {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Full independent set polynomial (bivariate for bigraphs)
    Poly {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Certified lower/upper bound enclosures for log P(lambda)
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        lambda: Rational,
        /// Second fugacity for bigraph input
        #[arg(long, value_parser = parse_rational)]
        mu: Option<Rational>,
        /// Evaluate the d-regular closed forms on n vertices instead of a file
        #[arg(long, value_name = "N", requires = "d", conflicts_with_all = ["file", "random_n"])]
        n: Option<usize>,
        #[arg(long, value_name = "D", requires = "n")]
        d: Option<usize>,
        /// Restrict output to one side
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[command(flatten)]
        prec: PrecArg,
    },
    /// Certified lower <= exact <= upper comparison
    Sandwich {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        lambda: Rational,
        #[command(flatten)]
        prec: PrecArg,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Extremal per-vertex value f_min/f_max of a degree distribution
    Extremal {
        /// Degree distribution, e.g. "1:2/3,2:1/3"
        #[arg(long, value_name = "SPEC")]
        dist: String,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        lambda: Rational,
        /// min or max
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        prec: PrecArg,
    },
    /// Build the extremal graph realizing a degree distribution
    Realize {
        #[arg(long, value_name = "SPEC")]
        dist: String,
        /// Vertex count; must be a multiple of the distribution's scale multiplier
        #[arg(long, value_name = "N")]
        scale: u64,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Exact independence number with Caro-Wei and edge-minimum bounds
    Alpha {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Grid certification of the appendix lemmas
    Lemmas {
        /// Which lemma to certify
        #[arg(long, value_enum)]
        which: Lemma,
        /// Maximum degree parameter (a1)
        #[arg(long, value_name = "N", default_value_t = 3)]
        delta: u32,
        /// Exponent parameters (a2); beta defaults to delta
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        alpha: Rational,
        #[arg(long, value_parser = parse_rational)]
        beta: Option<Rational>,
        /// Constants for a3; default to lambda and mu
        #[arg(long, value_parser = parse_rational)]
        c1: Option<Rational>,
        #[arg(long, value_parser = parse_rational)]
        c2: Option<Rational>,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        lambda: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        mu: Rational,
        /// Grid points per axis
        #[arg(long, value_name = "N", default_value_t = 64)]
        grid: u32,
        #[command(flatten)]
        prec: PrecArg,
    },
    /// Exact double-cover inequality and structural identity check
    Doublecover {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        prec: PrecArg,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// One induction step of the lower or upper bound proof
    Induction {
        #[command(flatten)]
        input: InputArgs,
        /// Vertex to delete (an A-vertex for bigraph input)
        #[arg(long, value_name = "ID")]
        vertex: usize,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        lambda: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        mu: Rational,
        #[command(flatten)]
        prec: PrecArg,
    },
    /// Complete-bipartite block swap inequality on part sizes a<b, c<d
    Swapcheck {
        a: u64,
        b: u64,
        c: u64,
        d: u64,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        lambda: Rational,
        #[command(flatten)]
        prec: PrecArg,
    },
}

/// Everything a subcommand hands back for report assembly.
struct Outcome {
    inputs: Value,
    result: Value,
    status: &'static str,
    precision_bits: u32,
    exit: u8,
}

impl Outcome {
    fn ok(inputs: Value, result: Value, precision_bits: u32) -> Self {
        Outcome {
            inputs,
            result,
            status: "ok",
            precision_bits,
            exit: 0,
        }
    }

    fn from_verdict(inputs: Value, mut result: Value, v: &Verdict) -> Self {
        let status = match v.status {
            Status::Holds | Status::HoldsWithEquality => "ok",
            Status::Violated => "error",
            Status::Indeterminate => "indeterminate",
        };
        let obj = result.as_object_mut().expect("verdict payload is an object");
        obj.insert("verdict".into(), json!(v.status.as_str()));
        obj.insert("margin_log".into(), log_interval_json(&v.margin));
        if let Some(w) = &v.witness {
            obj.insert("witness".into(), witness_json(w));
        }
        Outcome {
            inputs,
            result,
            status,
            precision_bits: v.margin.prec(),
            exit: v.status.exit_code() as u8,
        }
    }
}

/// Input or precondition failure: exit 1. Budget and precision exhaustion
/// map to exit 3 via `indeterminate`.
enum Failure {
    Usage(String),
    Indeterminate(String),
    Violation(String),
}

impl Failure {
    fn outcome(self, inputs: Value) -> Outcome {
        let (status, exit, msg): (&'static str, u8, String) = match self {
            Failure::Usage(m) => ("error", 1, m),
            Failure::Indeterminate(m) => ("indeterminate", 3, m),
            Failure::Violation(m) => ("error", 2, m),
        };
        Outcome {
            inputs,
            result: json!({ "error": msg }),
            status,
            precision_bits: 0,
            exit,
        }
    }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Self {
        match e {
            CountError::BudgetExceeded { .. } => Failure::Indeterminate(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Count(inner) => inner.into(),
            BoundsError::Indeterminate { .. } => Failure::Indeterminate(e.to_string()),
            BoundsError::CertifiedViolation(_) => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn rational_str(r: &Rational) -> String {
    r.to_string()
}

fn log_interval_json(iv: &LogInterval) -> Value {
    let (lo, hi) = iv.decimal_endpoints();
    json!({ "lo": lo, "hi": hi, "prec_bits": iv.prec().to_string() })
}

fn value_interval_json(iv: &iset_core::ValueInterval) -> Value {
    let (lo, hi) = iv.decimal_endpoints();
    json!({ "lo": lo, "hi": hi, "prec_bits": iv.prec().to_string() })
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Vertex(v) => json!({ "vertex": v.to_string() }),
        Witness::Edge(u, v) => json!({ "edge": [u.to_string(), v.to_string()] }),
        Witness::Point(coords) => {
            let map: serde_json::Map<String, Value> = coords
                .iter()
                .map(|(k, r)| (k.clone(), json!(rational_str(r))))
                .collect();
            json!({ "point": map })
        }
    }
}

fn graph_inputs_json(parsed: &ParsedInput, source: &Value) -> Value {
    match parsed {
        ParsedInput::Graph(g) => json!({
            "kind": "graph",
            "source": source,
            "text": g.to_text(),
            "n": g.n().to_string(),
            "edges": g.edge_count().to_string(),
        }),
        ParsedInput::Bigraph(b) => json!({
            "kind": "bigraph",
            "source": source,
            "text": b.to_text(),
            "a_size": b.a_size().to_string(),
            "b_size": b.b_size().to_string(),
        }),
    }
}

fn load_input(args: &InputArgs) -> Result<(ParsedInput, Value), Failure> {
    if let Some(n) = args.random_n {
        let mut state = args.seed;
        let derived = splitmix64(&mut state);
        let g = Graph::random(n, &args.random_p, derived)
            .map_err(|e| Failure::Usage(e.to_string()))?;
        let source = json!({
            "generator": "splitmix64",
            "n": n.to_string(),
            "p": rational_str(&args.random_p),
            "seed": args.seed.to_string(),
        });
        let parsed = ParsedInput::Graph(g);
        let inputs = graph_inputs_json(&parsed, &source);
        return Ok((parsed, inputs));
    }
    let Some(path) = &args.file else {
        return Err(Failure::Usage(
            "provide a graph file, '-' for stdin, or --random-n".into(),
        ));
    };
    let text = if path == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))?
    };
    let parsed = parse_any(&text).map_err(|e| Failure::Usage(e.to_string()))?;
    let source = json!({ "file": path });
    let inputs = graph_inputs_json(&parsed, &source);
    Ok((parsed, inputs))
}

fn count_opts(budget: &BudgetArg) -> CountOptions {
    let mut opts = CountOptions::default();
    if let Some(b) = budget.budget {
        opts.budget = b;
    }
    opts
}

fn require_graph(parsed: ParsedInput) -> Graph {
    match parsed {
        ParsedInput::Graph(g) => g,
        ParsedInput::Bigraph(b) => b.underlying_graph(),
    }
}

fn run_command(cmd: &Command) -> Result<Outcome, (Failure, Value)> {
    match cmd {
        Command::Count { input, budget } => {
            let (parsed, inputs) = load_input(input).map_err(|f| (f, json!({})))?;
            let opts = count_opts(budget);
            let g = require_graph(parsed);
            let c = count_with(&g, &opts).map_err(|e| (e.into(), inputs.clone()))?;
            Ok(Outcome::ok(inputs, json!({ "count": c.to_string() }), 0))
        }
        Command::Poly { input, budget } => {
            let (parsed, inputs) = load_input(input).map_err(|f| (f, json!({})))?;
            let opts = count_opts(budget);
            match parsed {
                ParsedInput::Graph(g) => {
                    let p = isp_with(&g, &opts).map_err(|e| (e.into(), inputs.clone()))?;
                    let coeffs: Vec<String> =
                        p.coeffs().iter().map(|c| c.to_string()).collect();
                    Ok(Outcome::ok(
                        inputs,
                        json!({
                            "coefficients": coeffs,
                            "degree": p.degree().to_string(),
                            "count": p.total().to_string(),
                        }),
                        0,
                    ))
                }
                ParsedInput::Bigraph(b) => {
                    let p = isp_bivariate_with(&b, &opts)
                        .map_err(|e| (e.into(), inputs.clone()))?;
                    let coeffs: serde_json::Map<String, Value> = p
                        .coeffs()
                        .iter()
                        .map(|((i, j), c)| (format!("{i},{j}"), json!(c.to_string())))
                        .collect();
                    let (da, db) = p.degrees();
                    Ok(Outcome::ok(
                        inputs,
                        json!({
                            "coefficients": coeffs,
                            "degree_a": da.to_string(),
                            "degree_b": db.to_string(),
                            "count": p.to_univariate().total().to_string(),
                        }),
                        0,
                    ))
                }
            }
        }
        Command::Bounds {
            input,
            lambda,
            mu,
            n,
            d,
            mode,
            prec,
        } => run_bounds(input, lambda, mu.as_ref(), *n, *d, *mode, prec.prec),
        Command::Sandwich {
            input,
            lambda,
            prec,
            budget,
        } => {
            let (parsed, inputs) = load_input(input).map_err(|f| (f, json!({})))?;
            let mut inputs = inputs;
            inputs["lambda"] = json!(rational_str(lambda));
            inputs["prec"] = json!(prec.prec.to_string());
            let g = require_graph(parsed);
            let opts = count_opts(budget);
            let report = sandwich_with(&g, lambda, prec.prec, &opts)
                .map_err(|e| (e.into(), inputs.clone()))?;
            let payload = sandwich_json(&report);
            let bits = report.lower_log.prec();
            Ok(Outcome::ok(inputs, payload, bits))
        }
        Command::Extremal {
            dist,
            lambda,
            mode,
            prec,
        } => {
            let inputs = json!({
                "dist": dist,
                "lambda": rational_str(lambda),
                "mode": mode_str(*mode),
                "prec": prec.prec.to_string(),
            });
            let rho = DegreeDist::parse(dist)
                .map_err(|e| (Failure::Usage(e.to_string()), inputs.clone()))?;
            let f = match mode {
                Mode::Min => f_min(&rho, lambda, prec.prec),
                Mode::Max => f_max(&rho, lambda, prec.prec),
                _ => Err(iset_core::extremal::ExtremalError::Parse(
                    "extremal --mode must be min or max".into(),
                )),
            }
            .map_err(|e| (Failure::Usage(e.to_string()), inputs.clone()))?;
            Ok(Outcome::ok(
                inputs,
                json!({
                    "log_per_vertex": log_interval_json(&f),
                    "per_vertex": value_interval_json(&f.exp()),
                }),
                f.prec(),
            ))
        }
        Command::Realize { dist, scale, mode } => {
            let inputs = json!({
                "dist": dist,
                "scale": scale.to_string(),
                "mode": mode_str(*mode),
            });
            let rho = DegreeDist::parse(dist)
                .map_err(|e| (Failure::Usage(e.to_string()), inputs.clone()))?;
            let g = match mode {
                Mode::Min => realize_extremal_min(&rho, *scale),
                Mode::Max => realize_extremal_max(&rho, *scale),
                _ => Err(iset_core::extremal::ExtremalError::Parse(
                    "realize --mode must be min or max".into(),
                )),
            }
            .map_err(|e| (Failure::Usage(e.to_string()), inputs.clone()))?;
            let realized = DegreeDist::from_graph(&g)
                .map_err(|e| (Failure::Usage(e.to_string()), inputs.clone()))?;
            Ok(Outcome::ok(
                inputs,
                json!({
                    "graph": g.to_text(),
                    "n": g.n().to_string(),
                    "edges": g.edge_count().to_string(),
                    "degree_distribution": realized.to_string(),
                }),
                0,
            ))
        }
        Command::Alpha { input, budget } => {
            let (parsed, inputs) = load_input(input).map_err(|f| (f, json!({})))?;
            let g = require_graph(parsed);
            let opts = count_opts(budget);
            let alpha =
                alpha_exact_with(&g, &opts).map_err(|e| (e.into(), inputs.clone()))?;
            Ok(Outcome::ok(
                inputs,
                json!({
                    "alpha": alpha.to_string(),
                    "caro_wei_lower": rational_str(&caro_wei_lower(&g)),
                    "edge_min_upper": rational_str(&edge_min_upper(&g)),
                }),
                0,
            ))
        }
        Command::Lemmas {
            which,
            delta,
            alpha,
            beta,
            c1,
            c2,
            lambda,
            mu,
            grid,
            prec,
        } => run_lemmas(
            *which, *delta, alpha, beta.as_ref(), c1.as_ref(), c2.as_ref(), lambda, mu, *grid,
            prec.prec,
        ),
        Command::Doublecover {
            input,
            prec,
            budget,
        } => {
            let (parsed, inputs) = load_input(input).map_err(|f| (f, json!({})))?;
            let g = require_graph(parsed);
            let opts = count_opts(budget);
            let v = check_double_cover_with(&g, prec.prec, &opts)
                .map_err(|e| (e.into(), inputs.clone()))?;
            let cover = g.double_cover();
            let payload = json!({
                "bipartite": g.is_bipartite(),
                "cover_a_size": cover.a_size().to_string(),
                "cover_b_size": cover.b_size().to_string(),
            });
            Ok(Outcome::from_verdict(inputs, payload, &v))
        }
        Command::Induction {
            input,
            vertex,
            lambda,
            mu,
            prec,
        } => {
            let (parsed, inputs) = load_input(input).map_err(|f| (f, json!({})))?;
            let mut inputs = inputs;
            inputs["vertex"] = json!(vertex.to_string());
            inputs["lambda"] = json!(rational_str(lambda));
            inputs["prec"] = json!(prec.prec.to_string());
            match parsed {
                ParsedInput::Graph(g) => {
                    let v = check_induction_lower(&g, *vertex, lambda, prec.prec)
                        .map_err(|e| (e.into(), inputs.clone()))?;
                    Ok(Outcome::from_verdict(
                        inputs,
                        json!({ "step": "lower" }),
                        &v,
                    ))
                }
                ParsedInput::Bigraph(b) => {
                    inputs["mu"] = json!(rational_str(mu));
                    let v = check_induction_upper(&b, *vertex, lambda, mu, prec.prec)
                        .map_err(|e| (e.into(), inputs.clone()))?;
                    Ok(Outcome::from_verdict(
                        inputs,
                        json!({ "step": "upper" }),
                        &v,
                    ))
                }
            }
        }
        Command::Swapcheck {
            a,
            b,
            c,
            d,
            lambda,
            prec,
        } => {
            let inputs = json!({
                "a": a.to_string(),
                "b": b.to_string(),
                "c": c.to_string(),
                "d": d.to_string(),
                "lambda": rational_str(lambda),
                "prec": prec.prec.to_string(),
            });
            let v = swap_check(*a, *b, *c, *d, lambda, prec.prec)
                .map_err(|e| (Failure::Usage(e.to_string()), inputs.clone()))?;
            Ok(Outcome::from_verdict(inputs, json!({}), &v))
        }
    }
}

fn mode_str(m: Mode) -> &'static str {
    match m {
        Mode::Upper => "upper",
        Mode::Lower => "lower",
        Mode::Min => "min",
        Mode::Max => "max",
    }
}

fn sandwich_json(r: &SandwichReport) -> Value {
    json!({
        "exact_log": log_interval_json(&r.exact_log),
        "lower_log": log_interval_json(&r.lower_log),
        "upper_log": log_interval_json(&r.upper_log),
        "lower_equality": r.lower_equality,
        "upper_equality": r.upper_equality,
    })
}

#[allow(clippy::too_many_arguments)]
fn run_bounds(
    input: &InputArgs,
    lambda: &Rational,
    mu: Option<&Rational>,
    n: Option<usize>,
    d: Option<usize>,
    mode: Option<Mode>,
    prec: u32,
) -> Result<Outcome, (Failure, Value)> {
    if let (Some(n), Some(d)) = (n, d) {
        let inputs = json!({
            "n": n.to_string(),
            "d": d.to_string(),
            "lambda": rational_str(lambda),
            "prec": prec.to_string(),
        });
        if lambda.cmp0() != std::cmp::Ordering::Greater {
            return Err((
                Failure::Usage(format!("lambda must be positive, got {lambda}")),
                inputs,
            ));
        }
        let (lower, upper) = regular_bounds(n as u64, d as u64, lambda, prec);
        let mut payload = serde_json::Map::new();
        if mode != Some(Mode::Upper) {
            payload.insert("lower_log".into(), log_interval_json(&lower));
            payload.insert("lower".into(), value_interval_json(&lower.exp()));
        }
        if mode != Some(Mode::Lower) {
            payload.insert("upper_log".into(), log_interval_json(&upper));
            payload.insert("upper".into(), value_interval_json(&upper.exp()));
        }
        return Ok(Outcome::ok(inputs, Value::Object(payload), prec));
    }
    let (parsed, inputs) = load_input(input).map_err(|f| (f, json!({})))?;
    let mut inputs = inputs;
    inputs["lambda"] = json!(rational_str(lambda));
    inputs["prec"] = json!(prec.to_string());
    if lambda.cmp0() != std::cmp::Ordering::Greater {
        return Err((
            Failure::Usage(format!("lambda must be positive, got {lambda}")),
            inputs,
        ));
    }
    match parsed {
        ParsedInput::Graph(g) => {
            let mut payload = serde_json::Map::new();
            if mode != Some(Mode::Upper) {
                let lower = lower_bound_log(&g, lambda, prec);
                payload.insert("lower_log".into(), log_interval_json(&lower));
                payload.insert("lower".into(), value_interval_json(&lower.exp()));
            }
            if mode != Some(Mode::Lower) {
                let upper = upper_bound_log(&g, lambda, prec);
                payload.insert("upper_log".into(), log_interval_json(&upper));
                payload.insert("upper".into(), value_interval_json(&upper.exp()));
            }
            Ok(Outcome::ok(inputs, Value::Object(payload), prec))
        }
        ParsedInput::Bigraph(b) => {
            let mu = mu.cloned().unwrap_or_else(|| lambda.clone());
            inputs["mu"] = json!(rational_str(&mu));
            if mu.cmp0() != std::cmp::Ordering::Greater {
                return Err((
                    Failure::Usage(format!("mu must be positive, got {mu}")),
                    inputs,
                ));
            }
            let upper = upper_bound_bivariate_log(&b, lambda, &mu, prec);
            Ok(Outcome::ok(
                inputs,
                json!({
                    "upper_log": log_interval_json(&upper),
                    "upper": value_interval_json(&upper.exp()),
                }),
                prec,
            ))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_lemmas(
    which: Lemma,
    delta: u32,
    alpha: &Rational,
    beta: Option<&Rational>,
    c1: Option<&Rational>,
    c2: Option<&Rational>,
    lambda: &Rational,
    mu: &Rational,
    grid: u32,
    prec: u32,
) -> Result<Outcome, (Failure, Value)> {
    let beta = beta.cloned().unwrap_or_else(|| Rational::from(delta));
    let c1 = c1.cloned().unwrap_or_else(|| lambda.clone());
    let c2 = c2.cloned().unwrap_or_else(|| mu.clone());
    let mut inputs = json!({
        "which": lemma_str(which),
        "grid": grid.to_string(),
        "prec": prec.to_string(),
    });
    if grid < 2 {
        return Err((
            Failure::Usage("grid must have at least 2 points per axis".into()),
            inputs,
        ));
    }
    let to_failure = |e: iset_core::lemmas::LemmaError| Failure::Usage(e.to_string());
    let v = match which {
        Lemma::A1 => {
            inputs["delta"] = json!(delta.to_string());
            inputs["lambda"] = json!(rational_str(lambda));
            check_lemma_a1(delta, lambda, &grid_a1(delta, grid), prec)
        }
        Lemma::A2 => {
            inputs["alpha"] = json!(rational_str(alpha));
            inputs["beta"] = json!(rational_str(&beta));
            inputs["lambda"] = json!(rational_str(lambda));
            inputs["mu"] = json!(rational_str(mu));
            check_lemma_a2(alpha, &beta, lambda, mu, &grid_a2(grid), prec)
        }
        Lemma::A3 => {
            inputs["c1"] = json!(rational_str(&c1));
            inputs["c2"] = json!(rational_str(&c2));
            check_lemma_a3(&c1, &c2, &grid_a3(grid), prec)
        }
        Lemma::Power => {
            inputs["lambda"] = json!(rational_str(lambda));
            check_power_monotone(lambda, &grid_power(grid), prec)
        }
        Lemma::Holder => check_holder_forms(&grid_holder(grid), prec),
    }
    .map_err(|e| (to_failure(e), inputs.clone()))?;
    Ok(Outcome::from_verdict(inputs, json!({}), &v))
}

fn lemma_str(l: Lemma) -> &'static str {
    match l {
        Lemma::A1 => "a1",
        Lemma::A2 => "a2",
        Lemma::A3 => "a3",
        Lemma::Power => "power",
        Lemma::Holder => "holder",
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Count { .. } => "count",
        Command::Poly { .. } => "poly",
        Command::Bounds { .. } => "bounds",
        Command::Sandwich { .. } => "sandwich",
        Command::Extremal { .. } => "extremal",
        Command::Realize { .. } => "realize",
        Command::Alpha { .. } => "alpha",
        Command::Lemmas { .. } => "lemmas",
        Command::Doublecover { .. } => "doublecover",
        Command::Induction { .. } => "induction",
        Command::Swapcheck { .. } => "swapcheck",
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            let report = json!({
                "command": "usage",
                "inputs": Value::Null,
                "result": { "error": e.to_string() },
                "status": "error",
                "precision_bits": 0,
                "runtime_ms": start.elapsed().as_millis() as u64,
            });
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            return ExitCode::from(1);
        }
    };
    let name = command_name(&cli.command);
    let outcome = match run_command(&cli.command) {
        Ok(o) => o,
        Err((failure, inputs)) => failure.outcome(inputs),
    };
    if outcome.status != "ok" {
        if let Some(err) = outcome.result.get("error") {
            eprintln!("{name}: {err}");
        }
    }
    let report = json!({
        "command": name,
        "inputs": outcome.inputs,
        "result": outcome.result,
        "status": outcome.status,
        "precision_bits": outcome.precision_bits,
        "runtime_ms": start.elapsed().as_millis() as u64,
    });
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    ExitCode::from(outcome.exit)
}
