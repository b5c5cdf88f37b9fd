//! Aggregates over all bounded cells: census, average diameter, bounded and
//! external face counts, and the verification suite built on them.

pub mod verify;

pub use verify::{
    default_grid, run_suite, verify_identity_2d, verify_proposition, verify_proposition_with, verify_structure,
    GridPoint, PropId, RandomInstance, RandomSuite, SuiteSummary, Verdict, VerificationResult, VerifyParams,
};

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::arrangement::{
    enumerate_bounded_cells, enumerate_bounded_facets, enumerate_edges, enumerate_vertices, Arrangement,
    ArrangementEdge, ArrangementMetadata, BoundedFacet, CellSignature, Vertex,
};
use crate::cell::{analyze_cell, CellClass, CellRecord};
use crate::exact::{Rational, Sign};
use crate::{par, Error, Result};

/// Fully enumerated arrangement with per-cell records.
#[derive(Clone, Debug)]
pub struct ArrangementAnalysis {
    pub arrangement: Arrangement,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<ArrangementEdge>,
    pub cells: Vec<CellRecord>,
    /// Bounded 2-faces, present for 3-dimensional input only.
    pub facets: Option<Vec<BoundedFacet>>,
}

pub fn analyze(arr: &Arrangement) -> Result<ArrangementAnalysis> {
    let vertices = enumerate_vertices(arr)?;
    let edges = enumerate_edges(arr, &vertices)?;
    let bounded = enumerate_bounded_cells(arr, &vertices, &edges)?;
    let cells = par::map(&bounded, |cell| analyze_cell(arr.dim(), cell, &vertices, &edges))
        .into_iter()
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let facets = if arr.dim() == 3 { Some(enumerate_bounded_facets(arr)?) } else { None };
    Ok(ArrangementAnalysis { arrangement: arr.clone(), vertices, edges, cells, facets })
}

impl ArrangementAnalysis {
    pub fn dim(&self) -> usize {
        self.arrangement.dim()
    }

    pub fn len(&self) -> usize {
        self.arrangement.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn bounded_cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn diameter_sum(&self) -> u64 {
        self.cells.iter().map(|c| c.diameter as u64).sum()
    }

    pub fn average_diameter(&self) -> Rational {
        Rational::new(self.diameter_sum() as i64, self.cells.len() as i64)
    }

    pub fn class_counts(&self) -> BTreeMap<CellClass, usize> {
        let mut counts = BTreeMap::new();
        for cell in &self.cells {
            *counts.entry(cell.class.clone()).or_insert(0) += 1;
        }
        counts
    }

    pub fn count_class(&self, class: &CellClass) -> usize {
        self.cells.iter().filter(|c| &c.class == class).count()
    }

    /// Simplices, named `Polygon(3)` in the plane.
    pub fn simplex_count(&self) -> usize {
        self.count_class(&simplex_class(self.dim()))
    }

    /// Combinatorial cubes, named `Polygon(4)` in the plane.
    pub fn cube_count(&self) -> usize {
        self.count_class(&cube_class(self.dim()))
    }

    /// Prisms over a simplex; in the plane these coincide with squares.
    pub fn simplex_prism_count(&self) -> usize {
        self.count_class(&prism_class(self.dim()))
    }

    fn bounded_signatures(&self) -> HashSet<&CellSignature> {
        self.cells.iter().map(|c| &c.signature).collect()
    }

    /// `f1` in the plane (bounded edges), `f2` in space (bounded facets).
    pub fn bounded_face_count(&self) -> Result<usize> {
        match self.dim() {
            2 => Ok(self.edges.iter().filter(|e| e.is_bounded()).count()),
            3 => Ok(self.facets.as_ref().map_or(0, Vec::len)),
            d => Err(unsupported("bounded face count", d)),
        }
    }

    /// Bounded `(d-1)`-faces that belong to exactly one bounded cell.
    pub fn external_face_count(&self) -> Result<usize> {
        let bounded = self.bounded_signatures();
        let external = |sides: [CellSignature; 2]| sides.iter().filter(|s| bounded.contains(s)).count() == 1;
        match self.dim() {
            2 => Ok(self
                .edges
                .iter()
                .filter(|e| e.is_bounded())
                .filter(|e| {
                    let line = e.line_set[0];
                    let side = |s| {
                        let mut signs = e.sign_vector.signs().to_vec();
                        signs[line] = s;
                        CellSignature::new(signs).expect("single zero replaced")
                    };
                    external([side(Sign::Minus), side(Sign::Plus)])
                })
                .count()),
            3 => Ok(self.facets.iter().flatten().filter(|f| external(f.incident.clone())).count()),
            d => Err(unsupported("external face count", d)),
        }
    }

    /// Bounded polygons with an odd number of edges.
    pub fn p_odd(&self) -> Result<usize> {
        if self.dim() != 2 {
            return Err(unsupported("p_odd", self.dim()));
        }
        Ok(self.cells.iter().filter(|c| c.vertex_count % 2 == 1).count())
    }

    /// Distinct canonical forms among cells classified as shells.
    pub fn shell_forms(&self) -> BTreeSet<String> {
        self.cells.iter().filter_map(|c| c.canonical_form.as_ref()).map(ToString::to_string).collect()
    }

    pub fn census(&self, include_cells: bool) -> CensusReport {
        let in_plane_or_space = matches!(self.dim(), 2 | 3);
        let delta = self.average_diameter();
        CensusReport {
            metadata: self.arrangement.metadata().cloned(),
            d: self.dim(),
            n: self.len(),
            vertex_count: self.vertices.len(),
            bounded_cells: self.cells.len(),
            class_counts: self.class_counts().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            diameter_sum: self.diameter_sum(),
            delta_decimal: delta.to_decimal(6),
            delta,
            f_bounded: in_plane_or_space.then(|| self.bounded_face_count().expect("dimension checked")),
            f_external: in_plane_or_space.then(|| self.external_face_count().expect("dimension checked")),
            p_odd: (self.dim() == 2).then(|| self.p_odd().expect("dimension checked")),
            shell_forms: self.shell_forms().into_iter().collect(),
            cells: include_cells.then(|| self.cells.clone()),
        }
    }
}

pub(crate) fn simplex_class(d: usize) -> CellClass {
    if d == 2 { CellClass::Polygon(3) } else { CellClass::Simplex(d) }
}

pub(crate) fn cube_class(d: usize) -> CellClass {
    if d == 2 { CellClass::Polygon(4) } else { CellClass::Cube(d) }
}

pub(crate) fn prism_class(d: usize) -> CellClass {
    if d == 2 { CellClass::Polygon(4) } else { CellClass::SimplexProduct(1, d - 1) }
}

fn unsupported(what: &'static str, actual: usize) -> Error {
    Error::UnsupportedDimension { what, required: "2 or 3", actual }
}

/// Per-arrangement aggregate, serialized as the analyze report.
#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metadata: Option<ArrangementMetadata>,
    pub d: usize,
    pub n: usize,
    pub vertex_count: usize,
    #[serde(rename = "I")]
    pub bounded_cells: usize,
    pub class_counts: BTreeMap<String, usize>,
    pub diameter_sum: u64,
    pub delta: Rational,
    pub delta_decimal: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_bounded: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_external: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_odd: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub shell_forms: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cells: Option<Vec<CellRecord>>,
}

/// Mean diameter of the bounded cells, exactly.
pub fn average_diameter(arr: &Arrangement) -> Result<Rational> {
    Ok(analyze(arr)?.average_diameter())
}

pub fn census(arr: &Arrangement) -> Result<CensusReport> {
    Ok(analyze(arr)?.census(false))
}

pub fn external_face_count(arr: &Arrangement) -> Result<usize> {
    if !matches!(arr.dim(), 2 | 3) {
        return Err(unsupported("external face count", arr.dim()));
    }
    analyze(arr)?.external_face_count()
}

pub fn p_odd_count(arr: &Arrangement) -> Result<usize> {
    if arr.dim() != 2 {
        return Err(unsupported("p_odd", arr.dim()));
    }
    analyze(arr)?.p_odd()
}
