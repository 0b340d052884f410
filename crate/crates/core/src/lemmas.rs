//! Grid-based interval certification of the appendix lemmas and the scalar
//! inequalities the bound proofs consume.
//!
//! Monotonicity claims are certified by comparing adjacent grid values, not
//! by derivatives. Grid coordinates are exact rationals (geometric axes snap
//! to dyadic rationals), so every expression starts exact and pays one
//! rounding step per transcendental. Each check escalates precision through
//! the standard ladder, re-evaluating only undecided points, and reports
//! `Indeterminate` with a witness if the cap is reached. Structural equality
//! points (boundary parameter values) are certified by enclosure overlap and
//! are excluded from the strict margin; `Violated` is never reported on an
//! overlap.

use crate::interval::{precision_ladder, rational_pow, LogInterval, ValueInterval};
use crate::verdict::{Status, Verdict, Witness};
use rayon::prelude::*;
use rug::float::Special;
use rug::{Float, Integer, Rational};
use thiserror::Error;

#[derive(Error, Debug)]
pub enum LemmaError {
    #[error("invalid grid: {0}")]
    BadGrid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridScale {
    Linear,
    Geometric,
}

/// One grid axis: `steps` exact rational points from `lo` to `hi` inclusive.
/// Geometric axes snap interior points to dyadic rationals near the true
/// geometric progression, keeping the endpoints exact; collisions collapse,
/// so an axis may yield fewer than `steps` distinct points.
#[derive(Clone, Debug)]
pub struct AxisSpec {
    lo: Rational,
    hi: Rational,
    steps: u32,
    scale: GridScale,
}

impl AxisSpec {
    pub fn new(
        lo: Rational,
        hi: Rational,
        steps: u32,
        scale: GridScale,
    ) -> Result<Self, LemmaError> {
        if lo >= hi {
            return Err(LemmaError::BadGrid(format!("need lo < hi, got {lo} >= {hi}")));
        }
        if steps < 2 {
            return Err(LemmaError::BadGrid(format!("need steps >= 2, got {steps}")));
        }
        if scale == GridScale::Geometric && lo.cmp0() != std::cmp::Ordering::Greater {
            return Err(LemmaError::BadGrid(format!(
                "geometric axis needs lo > 0, got {lo}"
            )));
        }
        Ok(AxisSpec { lo, hi, steps, scale })
    }

    pub fn linear(lo: Rational, hi: Rational, steps: u32) -> Result<Self, LemmaError> {
        AxisSpec::new(lo, hi, steps, GridScale::Linear)
    }

    pub fn geometric(lo: Rational, hi: Rational, steps: u32) -> Result<Self, LemmaError> {
        AxisSpec::new(lo, hi, steps, GridScale::Geometric)
    }

    /// Sorted distinct points of the axis.
    pub fn points(&self) -> Vec<Rational> {
        let mut pts = Vec::with_capacity(self.steps as usize);
        match self.scale {
            GridScale::Linear => {
                let span = Rational::from(&self.hi - &self.lo);
                for k in 0..self.steps {
                    let t = Rational::from((k as u64, self.steps as u64 - 1));
                    pts.push(Rational::from(&self.lo + span.clone() * t));
                }
            }
            GridScale::Geometric => {
                pts.push(self.lo.clone());
                let l0 = self.lo.to_f64().ln();
                let l1 = self.hi.to_f64().ln();
                let denom = Integer::from(1) << 20u32;
                for k in 1..self.steps - 1 {
                    let t = l0 + (l1 - l0) * k as f64 / (self.steps as f64 - 1.0);
                    let scaled = (t.exp() * (1u64 << 20) as f64).round();
                    let num = Integer::from_f64(scaled).unwrap_or_default();
                    let snapped = Rational::from((num, denom.clone()));
                    if snapped > self.lo && snapped < self.hi {
                        pts.push(snapped);
                    }
                }
                pts.push(self.hi.clone());
            }
        }
        pts.sort_unstable();
        pts.dedup();
        pts
    }
}

/// Cartesian-product grid over one axis per parameter.
#[derive(Clone, Debug)]
pub struct GridSpec {
    axes: Vec<AxisSpec>,
}

impl GridSpec {
    pub fn new(axes: Vec<AxisSpec>) -> Result<Self, LemmaError> {
        if axes.is_empty() {
            return Err(LemmaError::BadGrid("grid needs at least one axis".into()));
        }
        Ok(GridSpec { axes })
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axis_points(&self, i: usize) -> Vec<Rational> {
        self.axes[i].points()
    }

    fn require_dim(&self, want: usize, check: &str) -> Result<(), LemmaError> {
        if self.dim() != want {
            return Err(LemmaError::BadGrid(format!(
                "{check} needs a {want}-axis grid, got {}",
                self.dim()
            )));
        }
        Ok(())
    }
}

/// Grid for Lemma A.1: `steps` linear points strictly inside (0, Delta).
pub fn grid_a1(delta: u32, steps: u32) -> GridSpec {
    let d = Rational::from(delta);
    let denom = Rational::from(steps + 1);
    let lo = Rational::from(&d / denom.clone());
    let hi = Rational::from(d * Rational::from((steps, steps + 1)));
    GridSpec::new(vec![AxisSpec::linear(lo, hi, steps).unwrap()]).unwrap()
}

/// Grid for Lemma A.2: `steps` geometric points on (0, 8].
pub fn grid_a2(steps: u32) -> GridSpec {
    GridSpec::new(vec![
        AxisSpec::geometric(Rational::from((1, 64)), Rational::from(8), steps).unwrap(),
    ])
    .unwrap()
}

/// Grid for Lemma A.3: u, w geometric and v linear on [1, 8], filtered to
/// `u <= w`, `v <= w` inside the check.
pub fn grid_a3(steps: u32) -> GridSpec {
    GridSpec::new(vec![
        AxisSpec::geometric(Rational::from(1), Rational::from(8), steps).unwrap(),
        AxisSpec::linear(Rational::from(1), Rational::from(8), steps).unwrap(),
        AxisSpec::geometric(Rational::from(1), Rational::from(8), steps).unwrap(),
    ])
    .unwrap()
}

/// Grid for the power monotonicity check: a, b geometric on [1/8, 8],
/// filtered to `a < b`.
pub fn grid_power(steps: u32) -> GridSpec {
    GridSpec::new(vec![
        AxisSpec::geometric(Rational::from((1, 8)), Rational::from(8), steps).unwrap(),
        AxisSpec::geometric(Rational::from((1, 8)), Rational::from(8), steps).unwrap(),
    ])
    .unwrap()
}

/// Grid for the Hölder forms: a, b geometric on [1/8, 8], p linear on
/// [0, 1] including the equality endpoints.
pub fn grid_holder(steps: u32) -> GridSpec {
    GridSpec::new(vec![
        AxisSpec::geometric(Rational::from((1, 8)), Rational::from(8), steps).unwrap(),
        AxisSpec::geometric(Rational::from((1, 8)), Rational::from(8), steps).unwrap(),
        AxisSpec::linear(Rational::from(0), Rational::from(1), steps).unwrap(),
    ])
    .unwrap()
}

/// Default 64-point grid for Lemma A.1.
pub fn default_grid_a1(delta: u32) -> GridSpec {
    grid_a1(delta, 64)
}

/// Default 64-point grid for Lemma A.2.
pub fn default_grid_a2() -> GridSpec {
    grid_a2(64)
}

/// Default 64-point grid for Lemma A.3.
pub fn default_grid_a3() -> GridSpec {
    grid_a3(64)
}

/// Default 64-point grid for the power monotonicity check.
pub fn default_grid_power() -> GridSpec {
    grid_power(64)
}

/// Default 64-point grid for the Hölder forms.
pub fn default_grid_holder() -> GridSpec {
    grid_holder(64)
}

/// `2^{-prec+10}`, the multiplicative slack granted to non-strict
/// monotonicity comparisons and the width budget for equality enclosures.
fn slack(prec: u32) -> Rational {
    if prec > 10 {
        Rational::from((Integer::from(1), Integer::from(1) << (prec - 10)))
    } else {
        Rational::from(Integer::from(1) << (10 - prec))
    }
}

fn one() -> ValueInterval {
    ValueInterval::from_rational(&Rational::from(1), 2)
}

/// Outcome of one grid task at one precision.
enum Outcome {
    /// Certified strict comparison; margin enclosure (lo > 0).
    Strict(LogInterval),
    /// Structural equality point; enclosures overlap, margin contains 0.
    Equal(LogInterval),
    /// Certified violation; margin is the raw (negative) comparison
    /// enclosure.
    Violated(LogInterval, Witness),
    /// Separation not achieved at this precision.
    Undecided,
}

fn neg_inf_margin(prec: u32) -> LogInterval {
    LogInterval::from_endpoints(
        Float::with_val(prec, Special::NegInfinity),
        Float::with_val(prec, Special::Infinity),
    )
}

fn min_by_lo(acc: Option<LogInterval>, cand: LogInterval) -> Option<LogInterval> {
    match acc {
        None => Some(cand),
        Some(cur) => {
            if cand.lo() < cur.lo() {
                Some(cand)
            } else {
                Some(cur)
            }
        }
    }
}

/// Runs `eval` over `tasks` across the precision ladder, re-evaluating only
/// undecided tasks at each rung. Aggregation: any `Violated` dominates, then
/// `Indeterminate`, then `Holds`. The margin is the smallest strict margin
/// (equality points excluded); a run with no strict points reports a zero
/// margin.
fn run_grid<T: Sync>(
    tasks: Vec<T>,
    prec: u32,
    witness_of: impl Fn(&T) -> Witness + Sync,
    eval: impl Fn(&T, u32) -> Outcome + Sync,
) -> Verdict {
    let ladder = precision_ladder(prec);
    let mut pending: Vec<&T> = tasks.iter().collect();
    let mut worst: Option<LogInterval> = None;
    let mut final_prec = *ladder.first().unwrap();
    for p in ladder {
        if pending.is_empty() {
            break;
        }
        final_prec = p;
        let outcomes: Vec<(usize, Outcome)> = pending
            .par_iter()
            .enumerate()
            .map(|(i, t)| (i, eval(t, p)))
            .collect();
        let mut next = Vec::new();
        for (i, out) in outcomes {
            match out {
                Outcome::Strict(m) => worst = min_by_lo(worst.take(), m),
                Outcome::Equal(m) => {
                    if !m.contains_zero() {
                        return Verdict::with_witness(
                            Status::Violated,
                            m,
                            witness_of(pending[i]),
                        );
                    }
                }
                Outcome::Violated(m, w) => return Verdict::with_witness(Status::Violated, m, w),
                Outcome::Undecided => next.push(pending[i]),
            }
        }
        pending = next;
    }
    if let Some(stuck) = pending.first() {
        return Verdict::with_witness(
            Status::Indeterminate,
            neg_inf_margin(final_prec),
            witness_of(stuck),
        );
    }
    match worst {
        Some(m) => Verdict::new(Status::Holds, m),
        None => Verdict::new(Status::Holds, LogInterval::zero(final_prec)),
    }
}

/// The Lemma A.1 function
/// `g(x) = (Dl+1)^{(D-1)/D} (xl+1)^{1/x} + l - ((D+1)l+1)^{D/(D+1)} ((x+1)l+1)^{1/(x+1)}`.
fn a1_g(delta: u32, lambda: &Rational, x: &Rational, prec: u32) -> ValueInterval {
    let d = Rational::from(delta);
    let d1 = Rational::from(delta as u64 + 1);
    let base_d = Rational::from(lambda * d.clone()) + 1u32;
    let base_d1 = Rational::from(lambda * d1.clone()) + 1u32;
    let exp_d = Rational::from((delta as u64 - 1, delta as u64));
    let exp_d1 = Rational::from((delta as u64, delta as u64 + 1));
    let base_x = Rational::from(lambda * x.clone()) + 1u32;
    let base_x1 = Rational::from(lambda * Rational::from(x + Rational::from(1))) + 1u32;
    let first = rational_pow(&base_d, &exp_d, prec)
        .mul(&rational_pow(&base_x, &Rational::from(x.clone().recip()), prec));
    let inv_x1 = Rational::from(x + Rational::from(1)).recip();
    let second = rational_pow(&base_d1, &exp_d1, prec).mul(&rational_pow(&base_x1, &inv_x1, prec));
    first
        .add(&ValueInterval::from_rational(lambda, prec))
        .sub(&second)
}

/// Takes the log of a certified-positive gap for margin reporting.
fn gap_margin(gap: &ValueInterval) -> LogInterval {
    gap.ln().expect("gap certified positive")
}

/// Certifies Lemma A.1 on a grid: `g` strictly decreases between
/// consecutive grid points inside (0, Delta), `g > 0` at every such point,
/// and the enclosure of `g(Delta)` straddles 0 within `2^{-prec+10}`.
/// Points outside the open interval are ignored; a grid with no interior
/// points is vacuously certified (the `g(Delta)` check still runs). The
/// margin is the log of the smallest certified gap; for `Violated` it is the
/// log of the violation magnitude.
pub fn check_lemma_a1(
    delta: u32,
    lambda: &Rational,
    grid: &GridSpec,
    prec: u32,
) -> Result<Verdict, LemmaError> {
    if delta == 0 {
        return Err(LemmaError::Precondition("Delta must be >= 1".into()));
    }
    if lambda.cmp0() != std::cmp::Ordering::Greater {
        return Err(LemmaError::Precondition(format!(
            "lambda must be positive, got {lambda}"
        )));
    }
    grid.require_dim(1, "check_lemma_a1")?;
    let d = Rational::from(delta);
    let xs: Vec<Rational> = grid
        .axis_points(0)
        .into_iter()
        .filter(|x| x.cmp0() == std::cmp::Ordering::Greater && *x < d)
        .collect();

    enum Task {
        Positive(Rational),
        Decreasing(Rational, Rational),
        AtDelta,
    }
    let mut tasks = Vec::new();
    for x in &xs {
        tasks.push(Task::Positive(x.clone()));
    }
    for pair in xs.windows(2) {
        tasks.push(Task::Decreasing(pair[0].clone(), pair[1].clone()));
    }
    tasks.push(Task::AtDelta);

    let witness_of = |t: &Task| match t {
        Task::Positive(x) => Witness::point(&[("x", x.clone())]),
        Task::Decreasing(a, b) => Witness::point(&[("x_lo", a.clone()), ("x_hi", b.clone())]),
        Task::AtDelta => Witness::point(&[("x", Rational::from(delta))]),
    };
    let eval = |t: &Task, p: u32| -> Outcome {
        match t {
            Task::Positive(x) => {
                let g = a1_g(delta, lambda, x, p);
                if g.is_strictly_positive() {
                    Outcome::Strict(gap_margin(&g))
                } else if g.is_strictly_negative() {
                    Outcome::Violated(
                        gap_margin(&g.neg()),
                        Witness::point(&[("x", x.clone())]),
                    )
                } else {
                    Outcome::Undecided
                }
            }
            Task::Decreasing(a, b) => {
                let gap = a1_g(delta, lambda, a, p).sub(&a1_g(delta, lambda, b, p));
                if gap.is_strictly_positive() {
                    Outcome::Strict(gap_margin(&gap))
                } else if gap.is_strictly_negative() {
                    Outcome::Violated(
                        gap_margin(&gap.neg()),
                        Witness::point(&[("x_lo", a.clone()), ("x_hi", b.clone())]),
                    )
                } else {
                    Outcome::Undecided
                }
            }
            Task::AtDelta => {
                let g = a1_g(delta, lambda, &d, p);
                if !g.contains_zero() {
                    let mag = if g.is_strictly_positive() { g.clone() } else { g.neg() };
                    return Outcome::Violated(
                        gap_margin(&mag),
                        Witness::point(&[("x", Rational::from(delta))]),
                    );
                }
                let eps = ValueInterval::from_rational(&slack(prec), p);
                if g.width() <= *eps.lo() {
                    Outcome::Equal(LogInterval::zero(p))
                } else {
                    Outcome::Undecided
                }
            }
        }
    };
    Ok(run_grid(tasks, prec, witness_of, eval))
}

/// Log of the Lemma A.2 function
/// `f(x) = ((1+mu)^alpha + (1+lambda)^x - 1)^{1/(alpha x)} /
///         ((1+mu)^beta  + (1+lambda)^x - 1)^{1/(beta x)}`,
/// or `None` if an inner enclosure fails to certify positivity.
fn a2_log_f(
    pow_mu_alpha: &ValueInterval,
    pow_mu_beta: &ValueInterval,
    alpha: &Rational,
    beta: &Rational,
    lambda: &Rational,
    x: &Rational,
    prec: u32,
) -> Option<LogInterval> {
    let one_plus_lambda = Rational::from(lambda + Rational::from(1));
    let lam_x = rational_pow(&one_plus_lambda, x, prec);
    let num = pow_mu_alpha.add(&lam_x).sub(&one());
    let den = pow_mu_beta.add(&lam_x).sub(&one());
    let ln_num = num.ln()?;
    let ln_den = den.ln()?;
    let inv_ax = Rational::from(alpha * x.clone()).recip();
    let inv_bx = Rational::from(beta * x.clone()).recip();
    Some(ln_num.scale(&inv_ax).sub(&ln_den.scale(&inv_bx)))
}

/// Certifies Lemma A.2 on a grid: `f(x_i) <= f(x_{i+1}) * (1 + 2^{-prec+10})`
/// for consecutive positive grid points. The margin is the smallest
/// enclosure of `log(f(x_{i+1})(1+slack)/f(x_i))`; a decrease certified
/// beyond the slack is `Violated` with the witnessing pair.
pub fn check_lemma_a2(
    alpha: &Rational,
    beta: &Rational,
    lambda: &Rational,
    mu: &Rational,
    grid: &GridSpec,
    prec: u32,
) -> Result<Verdict, LemmaError> {
    if alpha.cmp0() != std::cmp::Ordering::Greater {
        return Err(LemmaError::Precondition(format!(
            "alpha must be positive, got {alpha}"
        )));
    }
    if beta < alpha {
        return Err(LemmaError::Precondition(format!(
            "need beta >= alpha, got beta={beta} < alpha={alpha}"
        )));
    }
    if lambda.cmp0() != std::cmp::Ordering::Greater {
        return Err(LemmaError::Precondition(format!(
            "lambda must be positive, got {lambda}"
        )));
    }
    if mu.cmp0() == std::cmp::Ordering::Less {
        return Err(LemmaError::Precondition(format!(
            "mu must be nonnegative, got {mu}"
        )));
    }
    grid.require_dim(1, "check_lemma_a2")?;
    let xs: Vec<Rational> = grid
        .axis_points(0)
        .into_iter()
        .filter(|x| x.cmp0() == std::cmp::Ordering::Greater)
        .collect();
    let tasks: Vec<(Rational, Rational)> = xs
        .windows(2)
        .map(|pair| (pair[0].clone(), pair[1].clone()))
        .collect();
    let one_plus_mu = Rational::from(mu + Rational::from(1));
    let tol = Rational::from(1) + slack(prec);

    let witness_of =
        |t: &(Rational, Rational)| Witness::point(&[("x_lo", t.0.clone()), ("x_hi", t.1.clone())]);
    let eval = |t: &(Rational, Rational), p: u32| -> Outcome {
        let pow_mu_alpha = rational_pow(&one_plus_mu, alpha, p);
        let pow_mu_beta = rational_pow(&one_plus_mu, beta, p);
        let f_lo = a2_log_f(&pow_mu_alpha, &pow_mu_beta, alpha, beta, lambda, &t.0, p);
        let f_hi = a2_log_f(&pow_mu_alpha, &pow_mu_beta, alpha, beta, lambda, &t.1, p);
        let (f_lo, f_hi) = match (f_lo, f_hi) {
            (Some(a), Some(b)) => (a, b),
            _ => return Outcome::Undecided,
        };
        let allowed = f_hi.add(&LogInterval::ln_rational(&tol, p));
        let margin = allowed.sub(&f_lo);
        if f_lo.certainly_le(&allowed) {
            Outcome::Strict(margin)
        } else if allowed.certainly_lt(&f_lo) {
            Outcome::Violated(margin, witness_of(t))
        } else {
            Outcome::Undecided
        }
    };
    Ok(run_grid(tasks, prec, witness_of, eval))
}

/// Both sides of Lemma A.3 at one `(u, v, w)` point:
/// `LHS = (1+c1)^{(v-1)w/u} c1 + ((1+c1)^{v-1} + (1+c2)^u - 1)^{w/u}`,
/// `RHS = ((1+c1)^v + (1+c2)^u - 1)^{w(v-1)/(uv)} ((1+c1)^v + (1+c2)^w - 1)^{1/v}`.
fn a3_sides(
    c1: &Rational,
    c2: &Rational,
    u: &Rational,
    v: &Rational,
    w: &Rational,
    prec: u32,
) -> Option<(LogInterval, LogInterval)> {
    let b1 = Rational::from(c1 + Rational::from(1));
    let b2 = Rational::from(c2 + Rational::from(1));
    let v1 = Rational::from(v - Rational::from(1));
    let w_over_u = Rational::from(w / u.clone());

    let lhs_a = rational_pow(&b1, &Rational::from(&v1 * w_over_u.clone()), prec)
        .mul_rational(c1);
    let inner = rational_pow(&b1, &v1, prec)
        .add(&rational_pow(&b2, u, prec))
        .sub(&one());
    let lhs_b = inner.ln()?.scale(&w_over_u).exp();
    let lhs = lhs_a.add(&lhs_b).ln()?;

    let m1 = rational_pow(&b1, v, prec)
        .add(&rational_pow(&b2, u, prec))
        .sub(&one());
    let m2 = rational_pow(&b1, v, prec)
        .add(&rational_pow(&b2, w, prec))
        .sub(&one());
    let e1 = Rational::from(&v1 * w.clone()) / Rational::from(u * v.clone());
    let e2 = Rational::from(v.clone().recip());
    let rhs = m1.ln()?.scale(&e1).add(&m2.ln()?.scale(&e2));
    Some((lhs, rhs))
}

/// Certifies Lemma A.3 on a 3-axis `(u, v, w)` grid filtered to
/// `1 <= u <= w`, `1 <= v <= w`: `LHS <= RHS` everywhere, with equality
/// overlap at `v = 1` or `w = u` and strict separation elsewhere. The margin
/// is the smallest `log(RHS/LHS)` over strict points.
pub fn check_lemma_a3(
    c1: &Rational,
    c2: &Rational,
    grid: &GridSpec,
    prec: u32,
) -> Result<Verdict, LemmaError> {
    for (name, c) in [("c1", c1), ("c2", c2)] {
        if c.cmp0() != std::cmp::Ordering::Greater {
            return Err(LemmaError::Precondition(format!(
                "{name} must be positive, got {c}"
            )));
        }
    }
    grid.require_dim(3, "check_lemma_a3")?;
    let one_r = Rational::from(1);
    let us = grid.axis_points(0);
    let vs = grid.axis_points(1);
    let ws = grid.axis_points(2);
    let mut tasks = Vec::new();
    for w in &ws {
        for u in us.iter().filter(|u| **u >= one_r && *u <= w) {
            for v in vs.iter().filter(|v| **v >= one_r && *v <= w) {
                tasks.push((u.clone(), v.clone(), w.clone()));
            }
        }
    }
    let witness_of = |t: &(Rational, Rational, Rational)| {
        Witness::point(&[("u", t.0.clone()), ("v", t.1.clone()), ("w", t.2.clone())])
    };
    let eval = |t: &(Rational, Rational, Rational), p: u32| -> Outcome {
        let (u, v, w) = t;
        let sides = a3_sides(c1, c2, u, v, w, p);
        let (lhs, rhs) = match sides {
            Some(s) => s,
            None => return Outcome::Undecided,
        };
        let margin = rhs.sub(&lhs);
        let equality = *v == one_r || w == u;
        if equality {
            return Outcome::Equal(margin);
        }
        if lhs.certainly_lt(&rhs) {
            Outcome::Strict(margin)
        } else if rhs.certainly_lt(&lhs) {
            Outcome::Violated(margin, witness_of(t))
        } else {
            Outcome::Undecided
        }
    };
    Ok(run_grid(tasks, prec, witness_of, eval))
}

/// Certifies `(a lambda + 1)^{1/a} > (b lambda + 1)^{1/b}` over grid pairs
/// with `0 < a < b`. The margin is the smallest `log(LHS/RHS)`.
pub fn check_power_monotone(
    lambda: &Rational,
    grid: &GridSpec,
    prec: u32,
) -> Result<Verdict, LemmaError> {
    if lambda.cmp0() != std::cmp::Ordering::Greater {
        return Err(LemmaError::Precondition(format!(
            "lambda must be positive, got {lambda}"
        )));
    }
    grid.require_dim(2, "check_power_monotone")?;
    let avs = grid.axis_points(0);
    let bvs = grid.axis_points(1);
    let mut tasks = Vec::new();
    for a in avs.iter().filter(|a| a.cmp0() == std::cmp::Ordering::Greater) {
        for b in bvs.iter().filter(|b| *b > a) {
            tasks.push((a.clone(), b.clone()));
        }
    }
    let witness_of =
        |t: &(Rational, Rational)| Witness::point(&[("a", t.0.clone()), ("b", t.1.clone())]);
    let side = |y: &Rational, p: u32| -> LogInterval {
        let base = Rational::from(lambda * y.clone()) + 1u32;
        LogInterval::ln_rational(&base, p).scale(&Rational::from(y.clone().recip()))
    };
    let eval = |t: &(Rational, Rational), p: u32| -> Outcome {
        let lhs = side(&t.0, p);
        let rhs = side(&t.1, p);
        let margin = lhs.sub(&rhs);
        if rhs.certainly_lt(&lhs) {
            Outcome::Strict(margin)
        } else if lhs.certainly_lt(&rhs) {
            Outcome::Violated(margin, witness_of(t))
        } else {
            Outcome::Undecided
        }
    };
    Ok(run_grid(tasks, prec, witness_of, eval))
}

/// One Hölder comparison: `log(RHS/LHS)` with the structural equality flag.
struct HolderCase {
    margin: Option<(LogInterval, LogInterval)>,
    equality: bool,
}

/// Certifies both Hölder instances over an `(a, b, p)` grid with
/// `a, b > 0`, `p` in `[0, 1]`:
/// the scalar form `a^p + b <= (a+b)^p (1+b)^{1-p}` and the product form
/// `prod a_i^{p_i} + prod b_i^{p_i} <= prod (a_i+b_i)^{p_i}` with the k = 2
/// vectors `(a,b),(b,a)`, weights `(p, 1-p)`, and the k = 3 vectors
/// `(a,b,a),(b,a,b)`, weights `(p, (1-p)/2, (1-p)/2)`. Structural equality
/// (certified by overlap, excluded from the margin): `p` in `{0,1}`, `a = 1`
/// for the scalar form, `a = b` for the product forms (the k = 3 form is
/// strict at `p = 0` unless `a = b`).
pub fn check_holder_forms(grid: &GridSpec, prec: u32) -> Result<Verdict, LemmaError> {
    grid.require_dim(3, "check_holder_forms")?;
    let zero = Rational::from(0);
    let one_r = Rational::from(1);
    let avs: Vec<Rational> = grid
        .axis_points(0)
        .into_iter()
        .filter(|a| a.cmp0() == std::cmp::Ordering::Greater)
        .collect();
    let bvs: Vec<Rational> = grid
        .axis_points(1)
        .into_iter()
        .filter(|b| b.cmp0() == std::cmp::Ordering::Greater)
        .collect();
    let pvs: Vec<Rational> = grid
        .axis_points(2)
        .into_iter()
        .filter(|p| *p >= zero && *p <= one_r)
        .collect();
    let mut tasks = Vec::new();
    for a in &avs {
        for b in &bvs {
            for p in &pvs {
                for form in 1..=3u32 {
                    tasks.push((a.clone(), b.clone(), p.clone(), form));
                }
            }
        }
    }

    let product_form = |pairs: &[(&Rational, &Rational, Rational)], prec: u32| -> Option<(LogInterval, LogInterval)> {
        let mut log_a = LogInterval::zero(prec);
        let mut log_b = LogInterval::zero(prec);
        let mut log_sum = LogInterval::zero(prec);
        for (a_i, b_i, p_i) in pairs {
            if p_i.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            log_a.add_assign(&LogInterval::ln_rational(a_i, prec).scale(p_i));
            log_b.add_assign(&LogInterval::ln_rational(b_i, prec).scale(p_i));
            let sum = Rational::from(*a_i + (*b_i).clone());
            log_sum.add_assign(&LogInterval::ln_rational(&sum, prec).scale(p_i));
        }
        let lhs = log_a.exp().add(&log_b.exp()).ln()?;
        Some((lhs, log_sum))
    };

    let case = |t: &(Rational, Rational, Rational, u32), p_bits: u32| -> HolderCase {
        let (a, b, p, form) = t;
        let q = Rational::from(&one_r - p.clone());
        match form {
            1 => {
                let lhs = rational_pow(a, p, p_bits)
                    .add(&ValueInterval::from_rational(b, p_bits))
                    .ln();
                let sum = Rational::from(a + b.clone());
                let one_plus_b = Rational::from(b + one_r.clone());
                let rhs = LogInterval::ln_rational(&sum, p_bits)
                    .scale(p)
                    .add(&LogInterval::ln_rational(&one_plus_b, p_bits).scale(&q));
                HolderCase {
                    margin: lhs.map(|l| (l, rhs)),
                    equality: *p == zero || *p == one_r || *a == one_r,
                }
            }
            2 => {
                let pairs = [(a, b, p.clone()), (b, a, q.clone())];
                HolderCase {
                    margin: product_form(&pairs, p_bits),
                    equality: *p == zero || *p == one_r || a == b,
                }
            }
            _ => {
                let half_q = Rational::from(&q / Rational::from(2));
                let pairs = [
                    (a, b, p.clone()),
                    (b, a, half_q.clone()),
                    (a, b, half_q),
                ];
                HolderCase {
                    margin: product_form(&pairs, p_bits),
                    equality: *p == one_r || a == b,
                }
            }
        }
    };

    let witness_of = |t: &(Rational, Rational, Rational, u32)| {
        Witness::point(&[
            ("a", t.0.clone()),
            ("b", t.1.clone()),
            ("p", t.2.clone()),
            ("form", Rational::from(t.3)),
        ])
    };
    let eval = |t: &(Rational, Rational, Rational, u32), p_bits: u32| -> Outcome {
        let c = case(t, p_bits);
        let (lhs, rhs) = match c.margin {
            Some(m) => m,
            None => return Outcome::Undecided,
        };
        let margin = rhs.sub(&lhs);
        if c.equality {
            return Outcome::Equal(margin);
        }
        if lhs.certainly_lt(&rhs) {
            Outcome::Strict(margin)
        } else if rhs.certainly_lt(&lhs) {
            Outcome::Violated(margin, witness_of(t))
        } else {
            Outcome::Undecided
        }
    };
    Ok(run_grid(tasks, prec, witness_of, eval))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::from((p, q))
    }

    fn grid1(lo: Rational, hi: Rational, steps: u32) -> GridSpec {
        GridSpec::new(vec![AxisSpec::linear(lo, hi, steps).unwrap()]).unwrap()
    }

    #[test]
    fn axis_points_are_exact_and_sorted() {
        let ax = AxisSpec::linear(rat(0, 1), rat(1, 1), 5).unwrap();
        assert_eq!(
            ax.points(),
            vec![rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)]
        );
        let ax = AxisSpec::geometric(rat(1, 8), rat(8, 1), 16).unwrap();
        let pts = ax.points();
        assert_eq!(pts.first().unwrap(), &rat(1, 8));
        assert_eq!(pts.last().unwrap(), &rat(8, 1));
        for pair in pts.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        assert!(AxisSpec::linear(rat(1, 1), rat(1, 1), 4).is_err());
        assert!(AxisSpec::linear(rat(0, 1), rat(1, 1), 1).is_err());
        assert!(AxisSpec::geometric(rat(0, 1), rat(1, 1), 4).is_err());
    }

    #[test]
    fn a1_examples() {
        let v = check_lemma_a1(2, &rat(1, 1), &default_grid_a1(2), 256).unwrap();
        assert_eq!(v.status, Status::Holds);

        let geo = GridSpec::new(vec![
            AxisSpec::geometric(rat(1, 16), rat(79, 16), 64).unwrap(),
        ])
        .unwrap();
        let v = check_lemma_a1(5, &rat(1, 2), &geo, 256).unwrap();
        assert_eq!(v.status, Status::Holds);

        let outside = grid1(rat(2, 1), rat(3, 1), 2);
        let v = check_lemma_a1(1, &rat(3, 1), &outside, 256).unwrap();
        assert_eq!(v.status, Status::Holds, "vacuous grid still certifies g(Delta)");

        assert!(check_lemma_a1(0, &rat(1, 1), &default_grid_a1(1), 128).is_err());
        assert!(check_lemma_a1(2, &rat(0, 1), &default_grid_a1(2), 128).is_err());
    }

    #[test]
    fn a1_g_at_delta_straddles_zero_tightly() {
        for (delta, lam) in [(2u32, rat(1, 1)), (5, rat(1, 2)), (3, rat(7, 3))] {
            let g = a1_g(delta, &lam, &Rational::from(delta), 256);
            assert!(g.contains_zero());
            let eps = ValueInterval::from_rational(&slack(256), 256);
            assert!(g.width() <= *eps.lo(), "width within 2^-246");
        }
    }

    #[test]
    fn a2_examples() {
        let v = check_lemma_a2(&rat(1, 1), &rat(2, 1), &rat(1, 1), &rat(1, 1), &default_grid_a2(), 256)
            .unwrap();
        assert_eq!(v.status, Status::Holds);

        let v = check_lemma_a2(&rat(3, 2), &rat(3, 2), &rat(1, 1), &rat(2, 1), &default_grid_a2(), 256)
            .unwrap();
        assert!(v.ok(), "alpha = beta makes f constant 1");

        let v = check_lemma_a2(&rat(1, 1), &rat(3, 1), &rat(2, 1), &rat(0, 1), &default_grid_a2(), 256)
            .unwrap();
        assert!(v.ok(), "mu = 0 makes f constant");

        assert!(check_lemma_a2(&rat(2, 1), &rat(1, 1), &rat(1, 1), &rat(1, 1), &default_grid_a2(), 128)
            .is_err());
        assert!(check_lemma_a2(&rat(1, 1), &rat(2, 1), &rat(1, 1), &rat(-1, 2), &default_grid_a2(), 128)
            .is_err());
    }

    #[test]
    fn a3_point_examples() {
        let (lhs, rhs) = a3_sides(&rat(1, 1), &rat(1, 1), &rat(1, 1), &rat(1, 1), &rat(3, 1), 128)
            .unwrap();
        let nine = LogInterval::ln_rational(&rat(9, 1), 128);
        assert!(lhs.overlaps(&nine) && rhs.overlaps(&nine));

        let (lhs, rhs) = a3_sides(&rat(1, 1), &rat(1, 1), &rat(2, 1), &rat(2, 1), &rat(2, 1), 128)
            .unwrap();
        assert!(lhs.overlaps(&rhs), "w = u equality");

        let (lhs, rhs) = a3_sides(&rat(1, 1), &rat(1, 1), &rat(1, 1), &rat(2, 1), &rat(3, 1), 128)
            .unwrap();
        assert!(lhs.certainly_lt(&rhs), "interior point is strict");
    }

    #[test]
    fn a3_small_grid_holds() {
        let grid = GridSpec::new(vec![
            AxisSpec::linear(rat(1, 1), rat(4, 1), 7).unwrap(),
            AxisSpec::linear(rat(1, 1), rat(4, 1), 7).unwrap(),
            AxisSpec::linear(rat(1, 1), rat(4, 1), 7).unwrap(),
        ])
        .unwrap();
        for (c1, c2) in [(rat(1, 1), rat(1, 1)), (rat(1, 2), rat(2, 1)), (rat(3, 1), rat(1, 3))] {
            let v = check_lemma_a3(&c1, &c2, &grid, 256).unwrap();
            assert_eq!(v.status, Status::Holds, "c1={c1} c2={c2}");
        }
        assert!(check_lemma_a3(&rat(0, 1), &rat(1, 1), &grid, 128).is_err());
    }

    #[test]
    fn power_examples() {
        let pair_grid = |a: Rational, b: Rational| {
            GridSpec::new(vec![
                AxisSpec::linear(a.clone(), Rational::from(&a + rat(1, 100)), 2).unwrap(),
                AxisSpec::linear(b.clone(), Rational::from(&b + rat(1, 100)), 2).unwrap(),
            ])
            .unwrap()
        };
        let v = check_power_monotone(&rat(1, 1), &pair_grid(rat(1, 1), rat(2, 1)), 128).unwrap();
        assert_eq!(v.status, Status::Holds);
        let v = check_power_monotone(&rat(1, 1), &pair_grid(rat(2, 1), rat(3, 1)), 128).unwrap();
        assert_eq!(v.status, Status::Holds);
        let v = check_power_monotone(&rat(1, 2), &pair_grid(rat(1, 1), rat(4, 1)), 128).unwrap();
        assert_eq!(v.status, Status::Holds);
        let v = check_power_monotone(&rat(1, 1), &default_grid_power(), 256).unwrap();
        assert_eq!(v.status, Status::Holds);
    }

    #[test]
    fn holder_point_examples() {
        let tiny = GridSpec::new(vec![
            AxisSpec::linear(rat(2, 1), rat(201, 100), 2).unwrap(),
            AxisSpec::linear(rat(1, 1), rat(101, 100), 2).unwrap(),
            AxisSpec::linear(rat(0, 1), rat(1, 1), 3).unwrap(),
        ])
        .unwrap();
        let v = check_holder_forms(&tiny, 256).unwrap();
        assert!(v.ok());
    }

    #[test]
    fn verdict_margin_precision_tracks_final_rung() {
        let v = check_power_monotone(&rat(1, 1), &default_grid_power(), 128).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!(v.margin.prec() <= 256, "should decide on an early rung");
    }

    #[test]
    fn grid_refinement_keeps_holding() {
        for steps in [8u32, 16] {
            let grid = GridSpec::new(vec![AxisSpec::linear(
                rat(1, 10),
                rat(19, 10),
                steps,
            )
            .unwrap()])
            .unwrap();
            let v = check_lemma_a1(2, &rat(1, 1), &grid, 192).unwrap();
            assert_eq!(v.status, Status::Holds);
        }
    }
}
