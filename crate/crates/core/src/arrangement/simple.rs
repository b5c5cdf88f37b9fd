use std::fmt;

use serde::Serialize;

use super::faces::solve_vertices;
use super::Arrangement;

/// First reason an arrangement fails to be simple. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SimplicityWitness {
    TooFewHyperplanes { n: usize, d: usize },
    /// These `d` hyperplanes have no unique common point.
    Singular { subset: Vec<usize> },
    /// The point of `subset` also lies on hyperplane `extra`.
    Degenerate { subset: Vec<usize>, extra: usize },
}

impl fmt::Display for SimplicityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = |s: &[usize]| s.iter().map(|i| format!("h{}", i + 1)).collect::<Vec<_>>().join(", ");
        match self {
            SimplicityWitness::TooFewHyperplanes { n, d } => {
                write!(f, "{n} hyperplanes in dimension {d}; at least {} required", d + 1)
            }
            SimplicityWitness::Singular { subset } => {
                write!(f, "hyperplanes {} do not meet in a single point", labels(subset))
            }
            SimplicityWitness::Degenerate { subset, extra } => {
                write!(f, "the common point of {} also lies on h{}", labels(subset), extra + 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub is_simple: bool,
    pub witness: Option<SimplicityWitness>,
}

/// Checks that `n >= d + 1`, every `d` hyperplanes meet in exactly one point,
/// and no point lies on more than `d` hyperplanes.
pub fn check_simple(arr: &Arrangement) -> SimplicityReport {
    match solve_vertices(arr) {
        Ok(_) => SimplicityReport { is_simple: true, witness: None },
        Err(w) => SimplicityReport { is_simple: false, witness: Some(w) },
    }
}
