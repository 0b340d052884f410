//! Certified evaluation of the degree-based bounds on the partition
//! function, the sandwich report, and the induction-step inequalities the
//! proofs rest on.
//!
//! The lower bound is `P^-_G(lambda) = prod_v ((d_v+1)lambda+1)^{1/(d_v+1)}`,
//! tight exactly on disjoint unions of cliques. The upper bound is
//! `P^+_G(lambda) = (1+lambda)^{iso(G)} prod_{uv in E}
//! ((1+lambda)^{d_u}+(1+lambda)^{d_v}-1)^{1/(d_u d_v)}`, tight exactly on
//! disjoint unions of complete bipartite graphs, with a bivariate refinement
//! for two-part graphs. Everything is evaluated in the log domain with
//! outward rounding; bases like `(1+lambda)^d` are assembled as exact
//! rationals first so each factor pays a single rounding step.
//!
//! Equality is always decided structurally via graph predicates. Certified
//! checks escalate precision (doubling up to the cap) before giving up with
//! an indeterminate outcome.

use crate::count::{count_with, isp_with, CountError, CountOptions};
use crate::graph::{Bigraph, DegreePair, Graph};
use crate::interval::{precision_ladder, LogInterval};
use crate::verdict::{Status, Verdict, Witness};
use rug::ops::Pow;
use rug::{Integer, Rational};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum BoundsError {
    #[error(transparent)]
    Count(#[from] CountError),
    #[error("lambda must be positive, got {0}")]
    NonPositiveLambda(Rational),
    #[error("mu must be positive, got {0}")]
    NonPositiveMu(Rational),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex {v} has degree {deg} but the maximum degree is {max}; the induction step branches on a maximum-degree vertex")]
    NotMaximumDegree { v: usize, deg: usize, max: usize },
    #[error("the induction step requires a connected graph")]
    Disconnected,
    #[error("vertex {v} has degree {deg}; the upper induction step needs degree at least 2")]
    DegreeTooSmall { v: usize, deg: usize },
    #[error("comparison still ambiguous at {max_prec} bits")]
    Indeterminate { max_prec: u32 },
    #[error("certified violation of a theorem inequality ({0}); this indicates an implementation bug")]
    CertifiedViolation(String),
}

fn require_positive(x: &Rational, err: fn(Rational) -> BoundsError) -> Result<(), BoundsError> {
    if x.cmp0() != std::cmp::Ordering::Greater {
        return Err(err(x.clone()));
    }
    Ok(())
}

/// Enclosure of `log P^-_G(lambda)`. A degree-0 vertex contributes
/// `log(lambda+1)`. Panics if `lambda <= 0`.
pub fn lower_bound_log(g: &Graph, lambda: &Rational, prec: u32) -> LogInterval {
    assert!(
        lambda.cmp0() == std::cmp::Ordering::Greater,
        "lower_bound_log needs lambda > 0"
    );
    let mut by_degree: BTreeMap<usize, usize> = BTreeMap::new();
    for d in g.degrees() {
        *by_degree.entry(d).or_insert(0) += 1;
    }
    let mut acc = LogInterval::zero(prec);
    for (d, count) in by_degree {
        let base = Rational::from(lambda * Rational::from(d as u64 + 1)) + 1u32;
        let expo = Rational::from((count as u64, d as u64 + 1));
        acc.add_assign(&LogInterval::ln_rational(&base, prec).scale(&expo));
    }
    acc
}

/// Enclosure of `log P^+_G(lambda)`; isolated vertices contribute the
/// `(1+lambda)` factor of the `j(G)` convention. Panics if `lambda <= 0`.
pub fn upper_bound_log(g: &Graph, lambda: &Rational, prec: u32) -> LogInterval {
    assert!(
        lambda.cmp0() == std::cmp::Ordering::Greater,
        "upper_bound_log needs lambda > 0"
    );
    let one_plus = Rational::from(lambda + Rational::from(1));
    let mut acc = LogInterval::ln_rational(&one_plus, prec)
        .scale(&Rational::from(g.isolated_count() as u64));
    let mut by_pair: BTreeMap<DegreePair, usize> = BTreeMap::new();
    for pair in g.degree_degree_distribution() {
        *by_pair.entry(pair).or_insert(0) += 1;
    }
    for (pair, count) in by_pair {
        let base = Rational::from(one_plus.clone().pow(pair.lo as u32))
            + Rational::from(one_plus.clone().pow(pair.hi as u32))
            - Rational::from(1);
        let expo = Rational::from((count as u64, (pair.lo * pair.hi) as u64));
        acc.add_assign(&LogInterval::ln_rational(&base, prec).scale(&expo));
    }
    acc
}

/// Enclosure of `log P^+_G(lambda, mu)` for a two-part graph. The convention
/// follows the bivariate bound: for an edge `(u, v)` with `u` in `A` and `v`
/// in `B`, the factor is `((1+mu)^{d_u} + (1+lambda)^{d_v} - 1)^{1/(d_u d_v)}`,
/// and isolated `A`/`B` vertices contribute `(1+lambda)`/`(1+mu)`.
/// Panics if `lambda <= 0` or `mu <= 0`.
pub fn upper_bound_bivariate_log(
    b: &Bigraph,
    lambda: &Rational,
    mu: &Rational,
    prec: u32,
) -> LogInterval {
    assert!(
        lambda.cmp0() == std::cmp::Ordering::Greater,
        "upper_bound_bivariate_log needs lambda > 0"
    );
    assert!(
        mu.cmp0() == std::cmp::Ordering::Greater,
        "upper_bound_bivariate_log needs mu > 0"
    );
    let one_plus_lambda = Rational::from(lambda + Rational::from(1));
    let one_plus_mu = Rational::from(mu + Rational::from(1));
    let mut acc = LogInterval::ln_rational(&one_plus_lambda, prec)
        .scale(&Rational::from(b.iso_a() as u64));
    acc.add_assign(
        &LogInterval::ln_rational(&one_plus_mu, prec).scale(&Rational::from(b.iso_b() as u64)),
    );
    let mut by_pair: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, v) in b.edges() {
        *by_pair.entry((b.degree_a(u), b.degree_b(v))).or_insert(0) += 1;
    }
    for ((du, dv), count) in by_pair {
        let base = Rational::from(one_plus_mu.clone().pow(du as u32))
            + Rational::from(one_plus_lambda.clone().pow(dv as u32))
            - Rational::from(1);
        let expo = Rational::from((count as u64, (du * dv) as u64));
        acc.add_assign(&LogInterval::ln_rational(&base, prec).scale(&expo));
    }
    acc
}

/// Enclosures (lower, upper) of the regular-graph bound values
/// `((d+1)lambda+1)^{n/(d+1)}` and `(2(1+lambda)^d - 1)^{n/(2d)}`. For
/// `d = 0` both degenerate to `(1+lambda)^n`. Panics if `lambda <= 0`.
pub fn regular_bounds(
    n: u64,
    d: u64,
    lambda: &Rational,
    prec: u32,
) -> (LogInterval, LogInterval) {
    assert!(
        lambda.cmp0() == std::cmp::Ordering::Greater,
        "regular_bounds needs lambda > 0"
    );
    let one_plus = Rational::from(lambda + Rational::from(1));
    if d == 0 {
        let v = LogInterval::ln_rational(&one_plus, prec).scale(&Rational::from(n));
        return (v.clone(), v);
    }
    let lower_base = Rational::from(lambda * Rational::from(d + 1)) + 1u32;
    let lower = LogInterval::ln_rational(&lower_base, prec).scale(&Rational::from((n, d + 1)));
    let upper_base = Rational::from(2 * one_plus.pow(d as u32)) - 1u32;
    let upper = LogInterval::ln_rational(&upper_base, prec).scale(&Rational::from((n, 2 * d)));
    (lower, upper)
}

/// Certified comparison of the exact partition function against both bounds.
#[derive(Clone, Debug)]
pub struct SandwichReport {
    /// Enclosure of `log P_G(lambda)` (from the exact rational value).
    pub exact_log: LogInterval,
    pub lower_log: LogInterval,
    pub upper_log: LogInterval,
    /// Structural flag: `G` is a disjoint union of cliques.
    pub lower_equality: bool,
    /// Structural flag: `G` is a disjoint union of complete bipartite graphs.
    pub upper_equality: bool,
    pub lambda: Rational,
}

/// [`sandwich`] with an explicit counting budget.
pub fn sandwich_with(
    g: &Graph,
    lambda: &Rational,
    prec: u32,
    opts: &CountOptions,
) -> Result<SandwichReport, BoundsError> {
    require_positive(lambda, BoundsError::NonPositiveLambda)?;
    let exact = isp_with(g, opts)?.evaluate(lambda);
    let lower_equality = g.is_union_cliques();
    let upper_equality = g.is_union_complete_bipartite();
    let ladder = precision_ladder(prec);
    let max_prec = *ladder.last().unwrap();
    for p in ladder {
        let exact_log = LogInterval::ln_rational(&exact, p);
        let lower_log = lower_bound_log(g, lambda, p);
        let upper_log = upper_bound_log(g, lambda, p);
        let lower_ok = if lower_equality {
            certify_equal(&lower_log, &exact_log, "lower bound vs exact")?
        } else {
            certify_below(&lower_log, &exact_log, "exact below its lower bound")?
        };
        let upper_ok = if upper_equality {
            certify_equal(&exact_log, &upper_log, "upper bound vs exact")?
        } else {
            certify_below(&exact_log, &upper_log, "exact above its upper bound")?
        };
        if lower_ok && upper_ok {
            return Ok(SandwichReport {
                exact_log,
                lower_log,
                upper_log,
                lower_equality,
                upper_equality,
                lambda: lambda.clone(),
            });
        }
    }
    Err(BoundsError::Indeterminate { max_prec })
}

pub fn sandwich(g: &Graph, lambda: &Rational, prec: u32) -> Result<SandwichReport, BoundsError> {
    sandwich_with(g, lambda, prec, &CountOptions::default())
}

/// `true` when `a <= b` is certified by separation; `false` when still
/// ambiguous; error when the reverse inequality is certified.
fn certify_below(a: &LogInterval, b: &LogInterval, what: &str) -> Result<bool, BoundsError> {
    if a.certainly_lt(b) {
        return Ok(true);
    }
    if b.certainly_lt(a) {
        return Err(BoundsError::CertifiedViolation(what.to_string()));
    }
    Ok(false)
}

/// Equality case: enclosures of the same real must overlap.
fn certify_equal(a: &LogInterval, b: &LogInterval, what: &str) -> Result<bool, BoundsError> {
    if a.overlaps(b) {
        return Ok(true);
    }
    Err(BoundsError::CertifiedViolation(format!(
        "{what}: enclosures of a structural equality case are disjoint"
    )))
}

/// Certified check of the lower induction step
/// `P^-_{G-w} + lambda P^-_{G-w-N(w)} >= P^-_G` for a maximum-degree vertex
/// `w` of a connected graph. Equality holds exactly when `G` is a clique.
/// The margin is an enclosure of `log(LHS / P^-_G)`.
pub fn check_induction_lower(
    g: &Graph,
    w: usize,
    lambda: &Rational,
    prec: u32,
) -> Result<Verdict, BoundsError> {
    require_positive(lambda, BoundsError::NonPositiveLambda)?;
    if w >= g.n() {
        return Err(BoundsError::VertexOutOfRange { v: w, n: g.n() });
    }
    if !g.is_connected() {
        return Err(BoundsError::Disconnected);
    }
    let max = g.max_degree();
    if g.degree(w) != max {
        return Err(BoundsError::NotMaximumDegree {
            v: w,
            deg: g.degree(w),
            max,
        });
    }
    let n = g.n();
    let is_clique = g.edge_count() == n * (n - 1) / 2;
    let minus_w = g.remove_vertex(w);
    let minus_nb = g.remove_closed_neighborhood(w);
    let attempt = |p: u32| -> LogInterval {
        let rhs = lower_bound_log(g, lambda, p);
        let a = lower_bound_log(&minus_w, lambda, p).exp();
        let b = lower_bound_log(&minus_nb, lambda, p).exp();
        let lhs = a.add(&b.mul_rational(lambda));
        let lhs_log = lhs.ln().expect("bound values are positive");
        lhs_log.sub(&rhs)
    };
    Ok(decide_ge(prec, is_clique, Witness::Vertex(w), attempt))
}

/// Certified check of the upper induction step
/// `P^+_G(lambda, mu) >= P^+_{G-w} + lambda P^+_{G-w-N(w)}` for a
/// maximum-degree vertex `w` in part `A` of a connected two-part graph with
/// max degree at least 2. Equality holds exactly when `G` is a single
/// complete bipartite graph. The margin is an enclosure of
/// `log(P^+_G / RHS)`.
pub fn check_induction_upper(
    b: &Bigraph,
    w: usize,
    lambda: &Rational,
    mu: &Rational,
    prec: u32,
) -> Result<Verdict, BoundsError> {
    require_positive(lambda, BoundsError::NonPositiveLambda)?;
    require_positive(mu, BoundsError::NonPositiveMu)?;
    if w >= b.a_size() {
        return Err(BoundsError::VertexOutOfRange { v: w, n: b.a_size() });
    }
    if !b.is_connected() {
        return Err(BoundsError::Disconnected);
    }
    let max = b.max_degree();
    let deg_w = b.degree_a(w);
    if deg_w != max {
        return Err(BoundsError::NotMaximumDegree {
            v: w,
            deg: deg_w,
            max,
        });
    }
    if deg_w < 2 {
        return Err(BoundsError::DegreeTooSmall { v: w, deg: deg_w });
    }
    let is_complete_bipartite = b.edge_count() == b.a_size() * b.b_size();
    let minus_w = b.remove_a_vertex(w);
    let minus_nb = b.remove_a_closed_neighborhood(w);
    let attempt = |p: u32| -> LogInterval {
        let lhs = upper_bound_bivariate_log(b, lambda, mu, p);
        let a = upper_bound_bivariate_log(&minus_w, lambda, mu, p).exp();
        let c = upper_bound_bivariate_log(&minus_nb, lambda, mu, p).exp();
        let rhs = a.add(&c.mul_rational(lambda));
        let rhs_log = rhs.ln().expect("bound values are positive");
        lhs.sub(&rhs_log)
    };
    Ok(decide_ge(
        prec,
        is_complete_bipartite,
        Witness::Vertex(w),
        attempt,
    ))
}

/// Decide a claim `margin >= 0` whose equality cases are known structurally.
/// `margin_at` returns an enclosure of the margin at a given precision.
fn decide_ge(
    prec: u32,
    structural_equality: bool,
    witness: Witness,
    margin_at: impl Fn(u32) -> LogInterval,
) -> Verdict {
    let ladder = precision_ladder(prec);
    let mut last = None;
    for p in ladder {
        let margin = margin_at(p);
        if structural_equality {
            return if margin.contains_zero() {
                Verdict::new(Status::HoldsWithEquality, margin)
            } else {
                Verdict::with_witness(Status::Violated, margin, witness)
            };
        }
        if margin.lo().cmp0() == Some(std::cmp::Ordering::Greater) {
            return Verdict::new(Status::Holds, margin);
        }
        if margin.hi().cmp0() == Some(std::cmp::Ordering::Less) {
            return Verdict::with_witness(Status::Violated, margin, witness);
        }
        last = Some(margin);
    }
    Verdict::with_witness(Status::Indeterminate, last.unwrap(), witness)
}

/// Exact check of `i(G)^2 <= i(G x K_2)` (equality iff `G` bipartite) plus
/// the structural `j`-identity: the cover's edge degree-pair multiset is two
/// copies of `G`'s and its isolated-vertex count doubles. Counting is exact;
/// `prec` only shapes the reported margin `log(i(cover)/i(G)^2)`.
pub fn check_double_cover(g: &Graph, prec: u32) -> Result<Verdict, CountError> {
    check_double_cover_with(g, prec, &CountOptions::default())
}

pub fn check_double_cover_with(
    g: &Graph,
    prec: u32,
    opts: &CountOptions,
) -> Result<Verdict, CountError> {
    let i_g = count_with(g, opts)?;
    let cover = g.double_cover();
    let cover_graph = cover.underlying_graph();
    let i_cover = count_with(&cover_graph, opts)?;
    let i_g_sq = Integer::from(&i_g * &i_g);

    let mut doubled = g.degree_degree_distribution();
    doubled.extend(g.degree_degree_distribution());
    doubled.sort_unstable();
    let j_identity = cover_graph.degree_degree_distribution() == doubled
        && cover_graph.isolated_count() == 2 * g.isolated_count();

    let ratio = Rational::from((i_cover.clone(), i_g_sq.clone()));
    let margin = LogInterval::ln_rational(&ratio, prec);
    let bipartite = g.is_bipartite();

    let witness = |msg: &str| {
        Witness::point(&[
            (msg, Rational::from(0)),
            ("i_g", Rational::from(i_g.clone())),
            ("i_cover", Rational::from(i_cover.clone())),
        ])
    };
    if !j_identity {
        return Ok(Verdict::with_witness(
            Status::Violated,
            margin,
            witness("j_identity_broken"),
        ));
    }
    let status = match i_g_sq.cmp(&i_cover) {
        std::cmp::Ordering::Less if !bipartite => Status::Holds,
        std::cmp::Ordering::Equal if bipartite => Status::HoldsWithEquality,
        std::cmp::Ordering::Less => {
            return Ok(Verdict::with_witness(
                Status::Violated,
                margin,
                witness("strict_on_bipartite"),
            ))
        }
        std::cmp::Ordering::Equal => {
            return Ok(Verdict::with_witness(
                Status::Violated,
                margin,
                witness("equality_on_non_bipartite"),
            ))
        }
        std::cmp::Ordering::Greater => {
            return Ok(Verdict::with_witness(
                Status::Violated,
                margin,
                witness("count_inequality_broken"),
            ))
        }
    };
    Ok(Verdict::new(status, margin))
}
