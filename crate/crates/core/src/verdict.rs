//! Verdict type shared by every certified inequality check.
//!
//! A check never decides equality numerically: equality cases are recognized
//! structurally (union of cliques, single complete bipartite graph, bipartite
//! double cover, boundary parameter values) and reported as
//! [`Status::HoldsWithEquality`] when the enclosures overlap as they must.
//! `Violated` is returned only on a certified strict separation the wrong way.

use crate::interval::LogInterval;
use rug::Rational;

/// Outcome of a certified check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Certified strict inequality in the claimed direction.
    Holds,
    /// Structural equality case; enclosures overlap as required.
    HoldsWithEquality,
    /// Certified strict inequality in the opposite direction.
    Violated,
    /// Undecidable at the precision cap.
    Indeterminate,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::HoldsWithEquality => "holds_with_equality",
            Status::Violated => "violated",
            Status::Indeterminate => "indeterminate",
        }
    }

    /// Process exit code the CLI maps this status to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Status::Holds | Status::HoldsWithEquality => 0,
            Status::Violated => 2,
            Status::Indeterminate => 3,
        }
    }
}

/// Location of a violation or of the tightest point of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A vertex id in the graph under test.
    Vertex(usize),
    /// An edge of the graph under test.
    Edge(usize, usize),
    /// A named parameter point, e.g. a grid point of a lemma check.
    Point(Vec<(String, Rational)>),
}

impl Witness {
    pub fn point(coords: &[(&str, Rational)]) -> Self {
        Witness::Point(
            coords
                .iter()
                .map(|(name, v)| (name.to_string(), v.clone()))
                .collect(),
        )
    }
}

/// Result of a certified check: status, a margin enclosure, and for
/// violations a witness of where the failure was certified.
///
/// The margin is an enclosure of the natural log of the certified slack
/// (ratio checks: log of the ratio claimed `>= 1`; difference checks: log of
/// the absolute gap at the tightest point, log of the violation magnitude
/// when `Violated`). Each check documents its margin convention.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: Status,
    pub margin: LogInterval,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn new(status: Status, margin: LogInterval) -> Self {
        Verdict {
            status,
            margin,
            witness: None,
        }
    }

    pub fn with_witness(status: Status, margin: LogInterval, witness: Witness) -> Self {
        Verdict {
            status,
            margin,
            witness: Some(witness),
        }
    }

    pub fn ok(&self) -> bool {
        matches!(self.status, Status::Holds | Status::HoldsWithEquality)
    }
}
