//! Extremal values of `P_G(lambda)^{1/n}` over graphs with a prescribed
//! degree distribution, realizing constructions, and the complete-bipartite
//! swap inequality.
//!
//! `f_min(rho; lambda) = prod_i P_{K_{i+1}}(lambda)^{rho_i/(i+1)}`, attained
//! by disjoint unions of cliques. `f_max` follows the greedy pairing
//! recursion: the smallest positive degree class is paired against the
//! largest into `K_{delta,Delta}` blocks until a class empties, with
//! `K_{d,d}` blocks consuming a lone class and isolated vertices covering the
//! degree-0 mass. Mass bookkeeping is exact rational arithmetic; only the
//! final log evaluation rounds.

use crate::graph::Graph;
use crate::interval::LogInterval;
use crate::verdict::{Status, Verdict, Witness};
use rug::ops::Pow;
use rug::{Integer, Rational};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum ExtremalError {
    #[error("masses must sum to 1, got {0}")]
    MassNotOne(Rational),
    #[error("negative mass {mass} at degree {degree}")]
    NegativeMass { degree: u32, mass: Rational },
    #[error("component counts are not integral at scale {scale}; scale must be a multiple of {multiplier}")]
    NonIntegralScale { scale: u64, multiplier: Integer },
    #[error("swap check requires a < b and c < d, got a={a} b={b} c={c} d={d}")]
    SwapPrecondition { a: u64, b: u64, c: u64, d: u64 },
    #[error("lambda must be positive, got {0}")]
    NonPositiveLambda(Rational),
    #[error("could not parse degree distribution: {0}")]
    Parse(String),
    #[error("the empty graph has no degree distribution")]
    EmptyGraph,
}

/// Finitely supported map from degree to nonnegative rational mass.
///
/// Public entry points require the masses to sum to 1; the recursion inside
/// [`f_max`] works with partial distributions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeDist {
    mass: BTreeMap<u32, Rational>,
}

impl DegreeDist {
    /// Builds a distribution from `(degree, mass)` pairs, merging duplicates
    /// and dropping zero masses. Errors on a negative mass.
    pub fn new(pairs: &[(u32, Rational)]) -> Result<Self, ExtremalError> {
        let mut mass: BTreeMap<u32, Rational> = BTreeMap::new();
        for (d, m) in pairs {
            if m.cmp0() == std::cmp::Ordering::Less {
                return Err(ExtremalError::NegativeMass {
                    degree: *d,
                    mass: m.clone(),
                });
            }
            *mass.entry(*d).or_insert_with(|| Rational::new()) += m;
        }
        mass.retain(|_, m| m.cmp0() != std::cmp::Ordering::Equal);
        Ok(DegreeDist { mass })
    }

    /// Point mass `e_d`.
    pub fn point(d: u32) -> Self {
        DegreeDist {
            mass: BTreeMap::from([(d, Rational::from(1))]),
        }
    }

    /// Parses the text form `"degree:mass,degree:mass,..."`, e.g.
    /// `"1:2/3,2:1/3"`. Masses are rationals (`p/q`) or integers.
    pub fn parse(s: &str) -> Result<Self, ExtremalError> {
        let mut pairs = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(ExtremalError::Parse(format!("empty entry in {s:?}")));
            }
            let (d, m) = part
                .split_once(':')
                .ok_or_else(|| ExtremalError::Parse(format!("expected degree:mass, got {part:?}")))?;
            let degree: u32 = d
                .trim()
                .parse()
                .map_err(|e| ExtremalError::Parse(format!("bad degree {d:?}: {e}")))?;
            let mass: Rational = m
                .trim()
                .parse()
                .map_err(|e| ExtremalError::Parse(format!("bad mass {m:?}: {e}")))?;
            pairs.push((degree, mass));
        }
        DegreeDist::new(&pairs)
    }

    /// Degree distribution of a nonempty graph: `rho_d = |{v : d_v = d}| / n`.
    pub fn from_graph(g: &Graph) -> Result<Self, ExtremalError> {
        if g.n() == 0 {
            return Err(ExtremalError::EmptyGraph);
        }
        let n = g.n() as u64;
        let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
        for d in g.degrees() {
            *counts.entry(d as u32).or_insert(0) += 1;
        }
        let pairs: Vec<(u32, Rational)> = counts
            .into_iter()
            .map(|(d, c)| (d, Rational::from((c, n))))
            .collect();
        DegreeDist::new(&pairs)
    }

    pub fn mass_of(&self, d: u32) -> Rational {
        self.mass.get(&d).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.mass.keys().copied()
    }

    pub fn total(&self) -> Rational {
        let mut s = Rational::new();
        for m in self.mass.values() {
            s += m;
        }
        s
    }

    pub fn is_probability(&self) -> bool {
        self.total() == 1u32
    }

    fn require_probability(&self) -> Result<(), ExtremalError> {
        let t = self.total();
        if t != 1u32 {
            return Err(ExtremalError::MassNotOne(t));
        }
        Ok(())
    }
}

impl fmt::Display for DegreeDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, m) in &self.mass {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{d}:{m}")?;
            first = false;
        }
        Ok(())
    }
}

/// One component kind of an extremal construction together with the number
/// of copies per unit of scale.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Piece {
    Isolated,
    Clique(u32),
    Bipartite(u32, u32),
}

impl Piece {
    #[cfg(test)]
    fn vertex_count(&self) -> u64 {
        match self {
            Piece::Isolated => 1,
            Piece::Clique(k) => *k as u64,
            Piece::Bipartite(a, b) => *a as u64 + *b as u64,
        }
    }

    /// Exact `P(lambda)` of the component.
    fn value(&self, lambda: &Rational) -> Rational {
        let one_plus = Rational::from(lambda + Rational::from(1));
        match self {
            Piece::Isolated => one_plus,
            Piece::Clique(k) => Rational::from(lambda * Rational::from(*k)) + 1u32,
            Piece::Bipartite(a, b) => {
                Rational::from(one_plus.clone().pow(*a)) + Rational::from(one_plus.pow(*b))
                    - Rational::from(1)
            }
        }
    }

    fn build(&self) -> Graph {
        match self {
            Piece::Isolated => Graph::new(1, &[]).unwrap(),
            Piece::Clique(k) => Graph::clique(*k as usize).unwrap(),
            Piece::Bipartite(a, b) => Graph::complete_bipartite(*a as usize, *b as usize).unwrap(),
        }
    }
}

/// Greedy pairing decomposition behind `f_max`: each step pairs the smallest
/// positive degree class delta against the largest Delta into
/// `K_{delta,Delta}` blocks (Delta vertices of degree delta, delta of degree
/// Delta per block) and removes at least one class from the support.
fn max_pieces(rho: &DegreeDist) -> Vec<(Piece, Rational)> {
    let mut out = Vec::new();
    let rho0 = rho.mass_of(0);
    if rho0.cmp0() == std::cmp::Ordering::Greater {
        out.push((Piece::Isolated, rho0));
    }
    let mut work: BTreeMap<u32, Rational> = rho
        .mass
        .iter()
        .filter(|(d, _)| **d > 0)
        .map(|(d, m)| (*d, m.clone()))
        .collect();
    while !work.is_empty() {
        let before = work.len();
        let delta = *work.keys().next().unwrap();
        let big = *work.keys().next_back().unwrap();
        if delta == big {
            let m = work.remove(&delta).unwrap();
            let count = m / Rational::from(2 * delta as u64);
            out.push((Piece::Bipartite(delta, delta), count));
        } else {
            let m_small = work[&delta].clone();
            let m_big = work[&big].clone();
            let weight_small = Rational::from(&m_small * Rational::from(delta as u64));
            let weight_big = Rational::from(&m_big * Rational::from(big as u64));
            if weight_small <= weight_big {
                let count = Rational::from(&m_small / Rational::from(big as u64));
                out.push((Piece::Bipartite(delta, big), count.clone()));
                work.remove(&delta);
                let used = count * Rational::from(delta as u64);
                let rest = m_big - used;
                assert!(
                    rest.cmp0() != std::cmp::Ordering::Less,
                    "pairing drove a degree class negative"
                );
                if rest.cmp0() == std::cmp::Ordering::Equal {
                    work.remove(&big);
                } else {
                    work.insert(big, rest);
                }
            } else {
                let count = Rational::from(&m_big / Rational::from(delta as u64));
                out.push((Piece::Bipartite(delta, big), count.clone()));
                work.remove(&big);
                let used = count * Rational::from(big as u64);
                let rest = m_small - used;
                assert!(
                    rest.cmp0() == std::cmp::Ordering::Greater,
                    "pairing drove a degree class negative"
                );
                work.insert(delta, rest);
            }
        }
        assert!(work.len() < before, "pairing failed to shrink the support");
    }
    out
}

/// Clique decomposition behind `f_min`: the degree-`i` class splits into
/// `rho_i/(i+1)` copies of `K_{i+1}`.
fn min_pieces(rho: &DegreeDist) -> Vec<(Piece, Rational)> {
    rho.mass
        .iter()
        .map(|(d, m)| {
            (
                Piece::Clique(d + 1),
                Rational::from(m / Rational::from(*d as u64 + 1)),
            )
        })
        .collect()
}

fn pieces_log(pieces: &[(Piece, Rational)], lambda: &Rational, prec: u32) -> LogInterval {
    let mut acc = LogInterval::zero(prec);
    for (piece, count) in pieces {
        let v = piece.value(lambda);
        acc.add_assign(&LogInterval::ln_rational(&v, prec).scale(count));
    }
    acc
}

fn assert_lambda(lambda: &Rational) {
    assert!(
        lambda.cmp0() == std::cmp::Ordering::Greater,
        "extremal evaluation needs lambda > 0"
    );
}

/// Enclosure of `log f_min(rho; lambda)`. Panics if `lambda <= 0`.
pub fn f_min(rho: &DegreeDist, lambda: &Rational, prec: u32) -> Result<LogInterval, ExtremalError> {
    assert_lambda(lambda);
    rho.require_probability()?;
    Ok(pieces_log(&min_pieces(rho), lambda, prec))
}

/// Enclosure of `log f_max(rho; lambda)` via the pairing recursion. Panics
/// if `lambda <= 0`.
pub fn f_max(rho: &DegreeDist, lambda: &Rational, prec: u32) -> Result<LogInterval, ExtremalError> {
    assert_lambda(lambda);
    rho.require_probability()?;
    Ok(pieces_log(&max_pieces(rho), lambda, prec))
}

/// Builds the disjoint union `scale * count` copies of each piece, checking
/// integrality first.
fn realize(pieces: &[(Piece, Rational)], scale: u64) -> Result<Graph, ExtremalError> {
    assert!(scale > 0, "scale must be positive");
    let mut multiplier = Integer::from(1);
    let mut integral = true;
    for (_, count) in pieces {
        multiplier = multiplier.lcm(count.denom());
        let scaled = Rational::from(count * Rational::from(scale));
        if !scaled.is_integer() {
            integral = false;
        }
    }
    if !integral {
        return Err(ExtremalError::NonIntegralScale { scale, multiplier });
    }
    let mut blocks = Vec::new();
    for (piece, count) in pieces {
        let copies = Rational::from(count * Rational::from(scale));
        let copies = copies.numer().to_u64().expect("component count fits u64");
        for _ in 0..copies {
            blocks.push(piece.build());
        }
    }
    let g = Graph::disjoint_union(&blocks);
    assert_eq!(g.n() as u64, scale, "realized graph must have scale vertices");
    Ok(g)
}

/// Realizes the `f_max` construction at the given scale: a disjoint union of
/// complete bipartite blocks (plus isolated vertices) with degree
/// distribution exactly `rho`. Errors name the smallest scale multiplier
/// that makes every component count integral.
pub fn realize_extremal_max(rho: &DegreeDist, scale: u64) -> Result<Graph, ExtremalError> {
    rho.require_probability()?;
    realize(&max_pieces(rho), scale)
}

/// Realizes the `f_min` construction: `scale * rho_i/(i+1)` copies of
/// `K_{i+1}` for every supported degree.
pub fn realize_extremal_min(rho: &DegreeDist, scale: u64) -> Result<Graph, ExtremalError> {
    rho.require_probability()?;
    realize(&min_pieces(rho), scale)
}

/// Exact check of the swap inequality
/// `P_{K_{a,c}}^{bd} P_{K_{b,d}}^{ac} <= P_{K_{a,d}}^{bc} P_{K_{b,c}}^{ad}`
/// for `a < b`, `c < d`, `lambda > 0`. Both sides are exact rationals, so
/// the comparison never escalates; the margin encloses `log(RHS/LHS)`.
pub fn swap_check(
    a: u64,
    b: u64,
    c: u64,
    d: u64,
    lambda: &Rational,
    prec: u32,
) -> Result<Verdict, ExtremalError> {
    if a == 0 || c == 0 || a >= b || c >= d {
        return Err(ExtremalError::SwapPrecondition { a, b, c, d });
    }
    if lambda.cmp0() != std::cmp::Ordering::Greater {
        return Err(ExtremalError::NonPositiveLambda(lambda.clone()));
    }
    let p = |x: u64, y: u64| Piece::Bipartite(x as u32, y as u32).value(lambda);
    let lhs = Rational::from(p(a, c).pow(u32::try_from(b * d).expect("exponent fits u32")))
        * p(b, d).pow(u32::try_from(a * c).expect("exponent fits u32"));
    let rhs = Rational::from(p(a, d).pow(u32::try_from(b * c).expect("exponent fits u32")))
        * p(b, c).pow(u32::try_from(a * d).expect("exponent fits u32"));
    let ratio = Rational::from(&rhs / &lhs);
    let margin = LogInterval::ln_rational(&ratio, prec);
    let witness = Witness::point(&[
        ("a", Rational::from(a)),
        ("b", Rational::from(b)),
        ("c", Rational::from(c)),
        ("d", Rational::from(d)),
        ("lambda", lambda.clone()),
    ]);
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => Verdict::new(Status::Holds, margin),
        std::cmp::Ordering::Equal => Verdict::new(Status::HoldsWithEquality, margin),
        std::cmp::Ordering::Greater => Verdict::with_witness(Status::Violated, margin, witness),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::isp;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::from((p, q))
    }

    fn contains_value(iv: &LogInterval, x: f64) -> bool {
        let (lo, hi) = iv.to_f64_bounds();
        lo <= x && x <= hi
    }

    #[test]
    fn parse_and_display_round_trip() {
        let rho = DegreeDist::parse("1:2/3, 2:1/3").unwrap();
        assert_eq!(rho.mass_of(1), rat(2, 3));
        assert_eq!(rho.mass_of(2), rat(1, 3));
        assert_eq!(rho.to_string(), "1:2/3,2:1/3");
        assert!(rho.is_probability());
        assert!(DegreeDist::parse("1:1/2,oops").is_err());
        assert!(DegreeDist::parse("1:-1/2").is_err());
        assert!(DegreeDist::parse("").is_err());
    }

    #[test]
    fn from_graph_matches_degrees() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let rho = DegreeDist::from_graph(&p4).unwrap();
        assert_eq!(rho.mass_of(1), rat(1, 2));
        assert_eq!(rho.mass_of(2), rat(1, 2));
        assert!(matches!(
            DegreeDist::from_graph(&Graph::new(0, &[]).unwrap()),
            Err(ExtremalError::EmptyGraph)
        ));
    }

    #[test]
    fn f_min_examples() {
        let iv = f_min(&DegreeDist::point(2), &rat(1, 1), 128).unwrap();
        assert!(contains_value(&iv, 4f64.ln() / 3.0));
        for d in 0..=6u32 {
            let iv = f_min(&DegreeDist::point(d), &rat(1, 1), 128).unwrap();
            assert!(contains_value(&iv, (d as f64 + 2.0).ln() / (d as f64 + 1.0)));
        }
        let iv = f_min(&DegreeDist::point(0), &rat(3, 7), 128).unwrap();
        assert!(contains_value(&iv, (10f64 / 7f64).ln()));
        let rho = DegreeDist::parse("1:1/2,2:1/2").unwrap();
        let iv = f_min(&rho, &rat(1, 1), 128).unwrap();
        assert!(contains_value(&iv, 3f64.ln() / 4.0 + 4f64.ln() / 6.0));
        let bad = DegreeDist::parse("1:1/2,2:1/3").unwrap();
        assert!(matches!(
            f_min(&bad, &rat(1, 1), 128),
            Err(ExtremalError::MassNotOne(_))
        ));
    }

    #[test]
    fn f_max_examples() {
        for d in 1..=8u32 {
            let iv = f_max(&DegreeDist::point(d), &rat(1, 1), 128).unwrap();
            let expect = (2f64.powi(d as i32 + 1) - 1.0).ln() / (2.0 * d as f64);
            assert!(contains_value(&iv, expect), "d={d}");
        }
        let rho = DegreeDist::parse("1:2/3,2:1/3").unwrap();
        let iv = f_max(&rho, &rat(1, 1), 128).unwrap();
        assert!(contains_value(&iv, 5f64.ln() / 3.0));
        let iv = f_max(&DegreeDist::point(0), &rat(3, 2), 128).unwrap();
        assert!(contains_value(&iv, 2.5f64.ln()));
    }

    #[test]
    fn f_max_regular_invariant_over_lambdas() {
        for d in 1..=8u32 {
            for lam in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                let iv = f_max(&DegreeDist::point(d), &lam, 192).unwrap();
                let l = lam.to_f64();
                let expect = (2.0 * (1.0 + l).powi(d as i32) - 1.0).ln() / (2.0 * d as f64);
                assert!(contains_value(&iv, expect), "d={d} lambda={lam}");
            }
        }
    }

    #[test]
    fn realize_max_examples() {
        let g = realize_extremal_max(&DegreeDist::point(2), 4).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 4));
        assert!(g.is_union_complete_bipartite());
        assert_eq!(isp(&g).unwrap().coeffs(), isp(&Graph::complete_bipartite(2, 2).unwrap()).unwrap().coeffs());

        let rho = DegreeDist::parse("1:2/3,2:1/3").unwrap();
        let g = realize_extremal_max(&rho, 3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 2));
        assert_eq!(g.max_degree(), 2);

        let g = realize_extremal_max(&DegreeDist::point(1), 2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));

        match realize_extremal_max(&DegreeDist::point(2), 3) {
            Err(ExtremalError::NonIntegralScale { scale: 3, multiplier }) => {
                assert_eq!(multiplier, 4);
            }
            other => panic!("expected scale error, got {other:?}"),
        }
    }

    #[test]
    fn realize_min_examples() {
        let g = realize_extremal_min(&DegreeDist::point(2), 3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 3));

        let rho = DegreeDist::parse("1:1/2,2:1/2").unwrap();
        match realize_extremal_min(&rho, 10) {
            Err(ExtremalError::NonIntegralScale { scale: 10, multiplier }) => {
                assert_eq!(multiplier, 12);
            }
            other => panic!("expected scale error, got {other:?}"),
        }
        let g = realize_extremal_min(&rho, 12).unwrap();
        assert_eq!(g.n(), 12);
        assert!(g.is_union_cliques());
        let mut ones = 0;
        let mut twos = 0;
        for d in g.degrees() {
            match d {
                1 => ones += 1,
                2 => twos += 1,
                _ => panic!("unexpected degree {d}"),
            }
        }
        assert_eq!((ones, twos), (6, 6));

        let g = realize_extremal_min(&DegreeDist::point(0), 3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 0));
    }

    #[test]
    fn realization_matches_extremal_value() {
        let cases = [
            (DegreeDist::point(2), 4u64, 3u64),
            (DegreeDist::point(3), 6, 4),
            (DegreeDist::parse("1:2/3,2:1/3").unwrap(), 6, 9),
            (DegreeDist::parse("0:1/4,1:1/2,3:1/4").unwrap(), 72, 16),
            (DegreeDist::parse("1:1/5,4:4/5").unwrap(), 160, 50),
        ];
        for (rho, s_max, s_min) in cases {
            for lam in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                let g = realize_extremal_max(&rho, s_max).unwrap();
                assert_eq!(DegreeDist::from_graph(&g).unwrap(), rho, "distribution preserved");
                let per_vertex = LogInterval::ln_rational(&isp(&g).unwrap().evaluate(&lam), 192)
                    .scale(&Rational::from((1u64, s_max)));
                assert!(per_vertex.overlaps(&f_max(&rho, &lam, 192).unwrap()));

                let g = realize_extremal_min(&rho, s_min).unwrap();
                assert_eq!(DegreeDist::from_graph(&g).unwrap(), rho, "distribution preserved");
                let per_vertex = LogInterval::ln_rational(&isp(&g).unwrap().evaluate(&lam), 192)
                    .scale(&Rational::from((1u64, s_min)));
                assert!(per_vertex.overlaps(&f_min(&rho, &lam, 192).unwrap()));
            }
        }
    }

    #[test]
    fn distribution_sandwich_on_small_graphs() {
        let graphs = [
            Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap(),
            Graph::clique(4).unwrap(),
            Graph::complete_bipartite(2, 3).unwrap(),
        ];
        for g in &graphs {
            let rho = DegreeDist::from_graph(g).unwrap();
            for lam in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                let per_vertex = LogInterval::ln_rational(&isp(g).unwrap().evaluate(&lam), 192)
                    .scale(&Rational::from((1u64, g.n() as u64)));
                let lo = f_min(&rho, &lam, 192).unwrap();
                let hi = f_max(&rho, &lam, 192).unwrap();
                assert!(!per_vertex.certainly_lt(&lo), "f_min must stay below");
                assert!(!hi.certainly_lt(&per_vertex), "f_max must stay above");
            }
        }
    }

    #[test]
    fn swap_examples() {
        let v = swap_check(1, 2, 1, 2, &rat(1, 1), 128).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!(v.margin.overlaps(&LogInterval::ln_rational(&rat(625, 567), 128)));

        let v = swap_check(1, 3, 2, 4, &rat(1, 1), 128).unwrap();
        assert_eq!(v.status, Status::Holds);

        for lam in [rat(1, 7), rat(5, 3), rat(10, 1)] {
            let v = swap_check(1, 2, 1, 2, &lam, 128).unwrap();
            assert_eq!(v.status, Status::Holds);
        }

        assert!(matches!(
            swap_check(2, 2, 1, 3, &rat(1, 1), 128),
            Err(ExtremalError::SwapPrecondition { .. })
        ));
        assert!(matches!(
            swap_check(1, 2, 3, 3, &rat(1, 1), 128),
            Err(ExtremalError::SwapPrecondition { .. })
        ));
        assert!(matches!(
            swap_check(1, 2, 1, 2, &rat(0, 1), 128),
            Err(ExtremalError::NonPositiveLambda(_))
        ));
    }

    #[test]
    fn swap_holds_on_a_grid() {
        for a in 1..=3u64 {
            for b in (a + 1)..=4 {
                for c in 1..=3u64 {
                    for d in (c + 1)..=4 {
                        for lam in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                            let v = swap_check(a, b, c, d, &lam, 128).unwrap();
                            assert!(v.ok(), "a={a} b={b} c={c} d={d}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn max_pieces_shrinks_support() {
        let rho = DegreeDist::parse("0:1/10,1:1/5,2:1/5,3:1/4,5:1/4").unwrap();
        let pieces = max_pieces(&rho);
        assert!(!pieces.is_empty());
        let mut total = Rational::new();
        for (piece, count) in &pieces {
            total += Rational::from(count * Rational::from(piece.vertex_count()));
        }
        assert_eq!(total, 1u32, "pieces account for all mass");
        let iv = f_max(&rho, &rat(1, 1), 128).unwrap();
        let (lo, hi) = iv.to_f64_bounds();
        assert!(lo <= hi);
    }
}
