use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::restrict::restrict_to_hyperplane;
use super::{Arrangement, ArrangementEdge, ArrangementError, CellSignature, EdgeKind, SignVector, Vertex};
use crate::exact::{binomial, Sign};

/// A bounded full-dimensional cell and the ids of its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundedCell {
    pub signature: CellSignature,
    pub vertex_ids: Vec<usize>,
}

/// Whether `ray` lies in the closure of the cell with signature `cell`.
pub fn ray_compatible(ray: &ArrangementEdge, cell: &CellSignature) -> bool {
    matches!(ray.kind, EdgeKind::Ray { .. }) && ray.sign_vector.conforms_to(cell)
}

/// Every cell touching a vertex is generated by flipping the vertex's zeros;
/// a generated cell is bounded iff no ray lies in its closure.
pub fn enumerate_bounded_cells(
    arr: &Arrangement,
    vertices: &[Vertex],
    edges: &[ArrangementEdge],
) -> Result<Vec<BoundedCell>, ArrangementError> {
    let mut candidates: BTreeMap<CellSignature, Vec<usize>> = BTreeMap::new();
    for (id, v) in vertices.iter().enumerate() {
        for sig in v.sign_vector.expansions() {
            candidates.entry(sig).or_default().push(id);
        }
    }

    let unbounded: BTreeSet<CellSignature> = edges
        .iter()
        .filter(|e| !e.is_bounded())
        .flat_map(|e| e.sign_vector.expansions())
        .collect();

    let cells: Vec<BoundedCell> = candidates
        .into_iter()
        .filter(|(sig, _)| !unbounded.contains(sig))
        .map(|(signature, vertex_ids)| BoundedCell { signature, vertex_ids })
        .collect();

    let expected = binomial(arr.len() as u64 - 1, arr.dim() as u64);
    if cells.len() as u64 != expected {
        return Err(ArrangementError::Inconsistent(format!(
            "found {} bounded cells, expected C({}, {}) = {expected}",
            cells.len(),
            arr.len() - 1,
            arr.dim()
        )));
    }
    Ok(cells)
}

/// A bounded 2-face of a 3-dimensional arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundedFacet {
    /// Hyperplane carrying the facet (0-based).
    pub hyperplane: usize,
    /// Signature of the facet as a cell of the induced arrangement.
    pub induced_signature: CellSignature,
    /// The two full-dimensional cells on either side, `-` side first.
    pub incident: [CellSignature; 2],
}

impl BoundedFacet {
    /// Full sign vector of the facet itself, zero on its hyperplane.
    pub fn sign_vector(&self) -> SignVector {
        let mut signs = self.incident[0].signs().to_vec();
        signs[self.hyperplane] = Sign::Zero;
        SignVector::new(signs)
    }
}

/// Bounded 2-faces of a 3-dimensional arrangement, found as the bounded cells
/// of each induced plane arrangement.
pub fn enumerate_bounded_facets(arr: &Arrangement) -> Result<Vec<BoundedFacet>, ArrangementError> {
    if arr.dim() != 3 {
        return Err(ArrangementError::UnsupportedDimension { required: "3", actual: arr.dim() });
    }
    let mut facets = Vec::new();
    for i in 0..arr.len() {
        let restricted = restrict_to_hyperplane(arr, i)?;
        if !restricted.excluded.is_empty() {
            return Err(ArrangementError::Inconsistent(format!(
                "hyperplanes {:?} are parallel to h{}",
                restricted.excluded,
                i + 1
            )));
        }
        let induced = &restricted.arrangement;
        let vertices = super::enumerate_vertices(induced)?;
        let edges = super::enumerate_edges(induced, &vertices)?;
        for cell in enumerate_bounded_cells(induced, &vertices, &edges)? {
            let incident = [cell.signature.inserted(i, Sign::Minus), cell.signature.inserted(i, Sign::Plus)];
            facets.push(BoundedFacet { hyperplane: i, induced_signature: cell.signature, incident });
        }
    }
    Ok(facets)
}
