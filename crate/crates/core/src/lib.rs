//! Exact independent-set counting and certified extremal bounds for the
//! hard-core partition function.
//!
//! The central object is the independence polynomial
//! `P_G(lambda) = sum_I lambda^{|I|}` over independent sets `I` of a graph
//! `G`. This crate computes it exactly, evaluates certified two-sided bounds
//! in terms of the degree sequence, locates the extremal degree distributions,
//! and checks the supporting analytic lemmas on parameter grids, all with
//! outward-rounded interval arithmetic so every reported inequality is a
//! theorem about the inputs rather than a floating-point observation.

pub mod alpha;
pub mod bounds;
pub mod corpus;
pub mod count;
pub mod extremal;
pub mod graph;
pub mod interval;
pub mod lemmas;
pub mod poly;
pub mod verdict;

pub use graph::{Bigraph, DegreePair, Graph, GraphError, ParseError};
pub use interval::{LogInterval, ValueInterval, DEFAULT_PREC, MAX_PREC};
pub use poly::{BivarPoly, IntPoly};
pub use verdict::{Status, Verdict, Witness};

pub use rug::{Integer, Rational};
