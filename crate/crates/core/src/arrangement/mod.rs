//! Hyperplane arrangements and their faces, all identified by exact sign
//! vectors.
//!
//! Hyperplane indices are 0-based in the API. Anything rendered for people
//! (witness messages, reports) uses 1-based labels `h1..hn`.

mod cells;
mod faces;
mod restrict;
mod sign;
mod simple;

pub use cells::{enumerate_bounded_cells, enumerate_bounded_facets, ray_compatible, BoundedCell, BoundedFacet};
pub use faces::{enumerate_edges, enumerate_vertices, ArrangementEdge, EdgeKind, Vertex};
pub use restrict::{restrict_to_hyperplane, Chart, RestrictedArrangement};
pub use sign::{CellSignature, SignVector};
pub use simple::{check_simple, SimplicityReport, SimplicityWitness};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{sign_of_affine, MathError, Rational, RationalVector, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("arrangement is not simple: {0}")]
    NotSimple(SimplicityWitness),
    #[error("hyperplane h{index} has a zero normal vector")]
    ZeroNormal { index: usize },
    #[error("arrangement dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("hyperplane index {index} out of range for {count} hyperplanes")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("operation requires dimension {required}, arrangement has dimension {actual}")]
    UnsupportedDimension { required: &'static str, actual: usize },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("invalid arrangement JSON: {0}")]
    Json(String),
}

/// Affine functional `a . x - b`; its zero set is the hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperplane {
    pub a: RationalVector,
    pub b: Rational,
}

impl Hyperplane {
    pub fn new(a: RationalVector, b: Rational) -> Self {
        Hyperplane { a, b }
    }

    /// Hyperplane `sum x_i / c_i = 1` through the given positive axis intercepts.
    pub fn through_intercepts(intercepts: &[Rational]) -> Self {
        let a = intercepts.iter().map(Rational::recip).collect();
        Hyperplane { a: RationalVector::new(a), b: Rational::one() }
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn eval(&self, x: &RationalVector) -> Result<Rational, MathError> {
        Ok(self.a.dot(x)? - &self.b)
    }

    pub fn sign_at(&self, x: &RationalVector) -> Result<Sign, MathError> {
        sign_of_affine(&self.a, &self.b, x)
    }
}

/// First general-position failure, ignoring the `n >= d + 1` requirement.
pub(crate) fn general_position_witness(arr: &Arrangement) -> Option<SimplicityWitness> {
    faces::solve_in_general_position(arr).err()
}

/// Exact sign of the hyperplane's functional at `x`.
pub fn sign_of_affine_eval(h: &Hyperplane, x: &RationalVector) -> Result<Sign, MathError> {
    h.sign_at(x)
}

/// Provenance block attached to constructed arrangements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementMetadata {
    pub family: String,
    pub d: usize,
    pub n: usize,
    pub epsilon: Option<Rational>,
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient_bound: Option<i64>,
}

/// Ordered list of hyperplanes in a common dimension. Order is part of the
/// identity: cell signatures are indexed by it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<ArrangementMetadata>,
}

impl Arrangement {
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self, ArrangementError> {
        if dim < 2 {
            return Err(ArrangementError::DimensionTooSmall(dim));
        }
        for (index, h) in hyperplanes.iter().enumerate() {
            if h.dim() != dim {
                return Err(MathError::DimensionMismatch { expected: dim, found: h.dim() }.into());
            }
            if h.a.is_zero() {
                return Err(ArrangementError::ZeroNormal { index: index + 1 });
            }
        }
        Ok(Arrangement { dim, hyperplanes, metadata: None })
    }

    pub fn with_metadata(mut self, metadata: ArrangementMetadata) -> Self {
        self.metadata = Some(metadata);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, index: usize) -> &Hyperplane {
        &self.hyperplanes[index]
    }

    pub fn metadata(&self) -> Option<&ArrangementMetadata> {
        self.metadata.as_ref()
    }

    /// Sign vector of a point against every hyperplane.
    pub fn sign_vector(&self, x: &RationalVector) -> Result<SignVector, MathError> {
        self.hyperplanes
            .iter()
            .map(|h| h.sign_at(x))
            .collect::<Result<Vec<_>, _>>()
            .map(SignVector::new)
    }

    /// Arrangement keeping only the hyperplanes at `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> Result<Arrangement, ArrangementError> {
        let mut hyperplanes = Vec::with_capacity(indices.len());
        for &index in indices {
            let h = self
                .hyperplanes
                .get(index)
                .ok_or(ArrangementError::IndexOutOfRange { index, count: self.len() })?;
            hyperplanes.push(h.clone());
        }
        Arrangement::new(self.dim, hyperplanes)
    }

    pub fn from_json(text: &str) -> Result<Self, ArrangementError> {
        let raw: Arrangement =
            serde_json::from_str(text).map_err(|e| ArrangementError::Json(e.to_string()))?;
        let metadata = raw.metadata.clone();
        let mut arr = Arrangement::new(raw.dim, raw.hyperplanes)?;
        arr.metadata = metadata;
        Ok(arr)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("arrangement serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(a: &[i64], b: i64) -> Hyperplane {
        Hyperplane::new(RationalVector::from_ints(a), Rational::from(b))
    }

    #[test]
    fn sign_on_hyperplane() {
        let h = line(&[1, 0], 0);
        assert_eq!(sign_of_affine_eval(&h, &RationalVector::from_ints(&[0, 5])).unwrap(), Sign::Zero);
    }

    #[test]
    fn sign_direct() {
        let h = line(&[1, 1], 1);
        assert_eq!(sign_of_affine_eval(&h, &RationalVector::from_ints(&[1, 1])).unwrap(), Sign::Plus);
    }

    #[test]
    fn sign_dimension_mismatch() {
        let h = line(&[1, 1], 1);
        assert!(sign_of_affine_eval(&h, &RationalVector::from_ints(&[1, 1, 1])).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Arrangement::new(2, vec![line(&[0, 0], 1)]),
            Err(ArrangementError::ZeroNormal { index: 1 })
        ));
        assert!(Arrangement::new(2, vec![line(&[1, 0, 0], 1)]).is_err());
        assert!(Arrangement::new(1, vec![]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let arr = Arrangement::new(2, vec![line(&[1, 0], 0), line(&[0, 1], 0), line(&[1, 1], 1)]).unwrap();
        let text = arr.to_json();
        assert!(text.contains("\"dim\": 2"));
        assert_eq!(Arrangement::from_json(&text).unwrap(), arr);
        let compact = r#"{"dim": 2, "hyperplanes": [{"a": ["1/2", "0"], "b": "3"}]}"#;
        let parsed = Arrangement::from_json(compact).unwrap();
        assert_eq!(parsed.hyperplane(0).a[0], Rational::new(1, 2));
        assert!(Arrangement::from_json(r#"{"dim": 2, "hyperplanes": [{"a": ["x"], "b": "1"}]}"#).is_err());
    }
}
