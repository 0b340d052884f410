//! Exact rational bounds on the independence number.
//!
//! `caro_wei_lower(G) = sum_v 1/(d_v+1) <= alpha(G)` and
//! `alpha(G) <= edge_min_upper(G) = sum_{uv in E} 1/min(d_u, d_v) + iso(G)`.
//! Both are finite rational sums, so everything here is exact; no floating
//! point enters this module.

use crate::graph::Graph;
use rug::Rational;

/// `sum_v 1/(d_v+1)`. An isolated vertex contributes 1.
pub fn caro_wei_lower(g: &Graph) -> Rational {
    let mut s = Rational::new();
    for d in g.degrees() {
        s += Rational::from((1u64, d as u64 + 1));
    }
    s
}

/// `sum_{uv in E} 1/min(d_u, d_v) + iso(G)`.
pub fn edge_min_upper(g: &Graph) -> Rational {
    let mut s = Rational::from(g.isolated_count() as u64);
    for (u, v) in g.edges() {
        let m = g.degree(u).min(g.degree(v)) as u64;
        s += Rational::from((1u64, m));
    }
    s
}
