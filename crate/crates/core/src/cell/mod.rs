//! Per-cell combinatorics: skeleton graph, diameter, face counts and
//! combinatorial type.

mod canon;

pub use canon::{canonical_form, complete_product, hypercube, CanonicalForm};

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arrangement::{ArrangementEdge, BoundedCell, CellSignature, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("skeleton of cell {signature} is disconnected")]
    Disconnected { signature: String },
    #[error("skeleton of cell {signature} has a vertex of degree {degree}, expected {expected}")]
    NotRegular { signature: String, degree: usize, expected: usize },
    #[error("graph is disconnected")]
    DisconnectedGraph,
}

/// Vertex-edge graph of a bounded cell. `nodes[i]` is the arrangement vertex
/// id of local node `i`; `adjacency` uses local indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    pub nodes: Vec<usize>,
    pub adjacency: Vec<Vec<usize>>,
}

impl Skeleton {
    pub fn from_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        Skeleton { nodes: (0..adjacency.len()).collect(), adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.nodes.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let next = dist[v].unwrap() + 1;
            for &u in &self.adjacency[v] {
                if dist[u].is_none() {
                    dist[u] = Some(next);
                    queue.push_back(u);
                }
            }
        }
        dist
    }
}

/// Joins two cell vertices when a bounded arrangement edge connects them and
/// lies in the closure of the cell. The result must be connected and
/// `dim`-regular.
pub fn cell_skeleton(cell: &BoundedCell, edges: &[ArrangementEdge], dim: usize) -> Result<Skeleton, CellError> {
    let local: HashMap<usize, usize> = cell.vertex_ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adjacency = vec![Vec::new(); cell.vertex_ids.len()];
    for edge in edges {
        let Some((u, v)) = edge.endpoints() else { continue };
        let (Some(&lu), Some(&lv)) = (local.get(&u), local.get(&v)) else { continue };
        if edge.sign_vector.conforms_to(&cell.signature) {
            adjacency[lu].push(lv);
            adjacency[lv].push(lu);
        }
    }
    for around in &mut adjacency {
        around.sort_unstable();
    }
    let skeleton = Skeleton { nodes: cell.vertex_ids.clone(), adjacency };

    if let Some(degree) = skeleton.adjacency.iter().map(Vec::len).find(|&k| k != dim) {
        return Err(CellError::NotRegular { signature: cell.signature.to_string(), degree, expected: dim });
    }
    if skeleton.distances_from(0).iter().any(Option::is_none) {
        return Err(CellError::Disconnected { signature: cell.signature.to_string() });
    }
    Ok(skeleton)
}

/// Largest shortest-path distance over all vertex pairs (BFS from every node).
pub fn cell_diameter(skeleton: &Skeleton) -> Result<usize, CellError> {
    let mut diameter = 0;
    for source in 0..skeleton.vertex_count() {
        for d in skeleton.distances_from(source) {
            diameter = diameter.max(d.ok_or(CellError::DisconnectedGraph)?);
        }
    }
    Ok(diameter)
}

/// `(V, E, F)` of a cell. `F` counts the distinct hyperplanes that are tight
/// at some vertex of the cell.
pub fn cell_f_counts(skeleton: &Skeleton, vertices: &[Vertex]) -> (usize, usize, usize) {
    let facets: BTreeSet<usize> =
        skeleton.nodes.iter().flat_map(|&id| vertices[id].tight_set.iter().copied()).collect();
    (skeleton.vertex_count(), skeleton.edge_count(), facets.len())
}

/// Combinatorial type of a bounded cell.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CellClass {
    Simplex(usize),
    Cube(usize),
    /// Product of a `k`-simplex with a `(d - k)`-simplex, `1 <= k <= d / 2`.
    SimplexProduct(usize, usize),
    Polygon(usize),
    /// Simple 3-polytope with `n` facets and `2(n - 2)` vertices.
    Shell(usize),
    Other { v: usize, e: usize, f: usize },
}

impl fmt::Display for CellClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellClass::Simplex(d) => write!(f, "Simplex({d})"),
            CellClass::Cube(d) => write!(f, "Cube({d})"),
            CellClass::SimplexProduct(k, l) => write!(f, "SimplexProduct({k},{l})"),
            CellClass::Polygon(k) => write!(f, "Polygon({k})"),
            CellClass::Shell(n) => write!(f, "Shell({n})"),
            CellClass::Other { v, e, f: facets } => write!(f, "Other({v},{e},{facets})"),
        }
    }
}

impl Serialize for CellClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Reference {
    Cube(usize),
    Product(usize, usize),
}

fn reference_form(which: Reference) -> CanonicalForm {
    type Cache = Mutex<HashMap<(bool, usize, usize), CanonicalForm>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let key = match which {
        Reference::Cube(d) => (true, d, 0),
        Reference::Product(a, b) => (false, a, b),
    };
    let cache = CACHE.get_or_init(Default::default);
    if let Some(form) = cache.lock().unwrap().get(&key) {
        return form.clone();
    }
    let form = match which {
        Reference::Cube(d) => canonical_form(&hypercube(d)),
        Reference::Product(a, b) => canonical_form(&complete_product(a, b)),
    };
    cache.lock().unwrap().insert(key, form.clone());
    form
}

/// Precedence: Simplex, Cube, SimplexProduct, Shell, Other. Planar cells are
/// polygons named by vertex count.
pub fn classify_cell(dim: usize, skeleton: &Skeleton, counts: (usize, usize, usize)) -> CellClass {
    let (v, e, f) = counts;
    if dim == 2 {
        return CellClass::Polygon(v);
    }
    if v == dim + 1 {
        return CellClass::Simplex(dim);
    }
    let mut form = None;
    let mut form_of = || form.get_or_insert_with(|| canonical_form(&skeleton.adjacency)).clone();
    if dim < usize::BITS as usize && v == 1 << dim && f == 2 * dim && form_of() == reference_form(Reference::Cube(dim)) {
        return CellClass::Cube(dim);
    }
    if f == dim + 2 {
        for k in 1..=dim / 2 {
            if v == (k + 1) * (dim - k + 1) && form_of() == reference_form(Reference::Product(k + 1, dim - k + 1)) {
                return CellClass::SimplexProduct(k, dim - k);
            }
        }
    }
    if dim == 3 && f >= 2 && v == 2 * (f - 2) {
        return CellClass::Shell(f);
    }
    CellClass::Other { v, e, f }
}

/// Everything known about one bounded cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellRecord {
    pub signature: CellSignature,
    pub vertex_ids: Vec<usize>,
    pub skeleton: Skeleton,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub facet_count: usize,
    pub diameter: usize,
    pub class: CellClass,
    /// Recorded for shells only, so distinct shell types can be told apart.
    pub canonical_form: Option<CanonicalForm>,
}

impl Serialize for CellRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("CellRecord", 6)?;
        s.serialize_field("signature", &self.signature)?;
        s.serialize_field("V", &self.vertex_count)?;
        s.serialize_field("E", &self.edge_count)?;
        s.serialize_field("F", &self.facet_count)?;
        s.serialize_field("diameter", &self.diameter)?;
        s.serialize_field("class", &self.class)?;
        s.end()
    }
}

pub fn analyze_cell(
    dim: usize,
    cell: &BoundedCell,
    vertices: &[Vertex],
    edges: &[ArrangementEdge],
) -> Result<CellRecord, CellError> {
    let skeleton = cell_skeleton(cell, edges, dim)?;
    let diameter = cell_diameter(&skeleton)?;
    let counts = cell_f_counts(&skeleton, vertices);
    let class = classify_cell(dim, &skeleton, counts);
    let canonical_form = matches!(class, CellClass::Shell(_)).then(|| canonical_form(&skeleton.adjacency));
    Ok(CellRecord {
        signature: cell.signature.clone(),
        vertex_ids: cell.vertex_ids.clone(),
        skeleton,
        vertex_count: counts.0,
        edge_count: counts.1,
        facet_count: counts.2,
        diameter,
        class,
        canonical_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Skeleton {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        Skeleton::from_adjacency(adj)
    }

    fn cycle(k: usize) -> Skeleton {
        graph(k, &(0..k).map(|i| (i, (i + 1) % k)).collect::<Vec<_>>())
    }

    #[test]
    fn diameters_of_reference_shapes() {
        let tetra = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(cell_diameter(&tetra).unwrap(), 1);
        assert_eq!(cell_diameter(&Skeleton::from_adjacency(complete_product(2, 3))).unwrap(), 2);
        assert_eq!(cell_diameter(&Skeleton::from_adjacency(hypercube(3))).unwrap(), 3);
        assert_eq!(cell_diameter(&cycle(7)).unwrap(), 3);
        assert_eq!(cell_diameter(&graph(2, &[(0, 1)])).unwrap(), 1);
    }

    #[test]
    fn polygon_diameters() {
        for k in 3..12 {
            assert_eq!(cell_diameter(&cycle(k)).unwrap(), k / 2);
        }
    }

    #[test]
    fn disconnected_diameter_errors() {
        assert_eq!(cell_diameter(&graph(4, &[(0, 1), (2, 3)])), Err(CellError::DisconnectedGraph));
    }

    #[test]
    fn classification_precedence() {
        let cube = Skeleton::from_adjacency(hypercube(3));
        // the 3-cube also satisfies the Shell(6) counts; Cube wins
        assert_eq!(classify_cell(3, &cube, (8, 12, 6)), CellClass::Cube(3));
        let tetra = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(classify_cell(3, &tetra, (4, 6, 4)), CellClass::Simplex(3));
        let prism = Skeleton::from_adjacency(complete_product(2, 3));
        assert_eq!(classify_cell(3, &prism, (6, 9, 5)), CellClass::SimplexProduct(1, 2));
        let k3k3 = Skeleton::from_adjacency(complete_product(3, 3));
        assert_eq!(classify_cell(4, &k3k3, (9, 18, 6)), CellClass::SimplexProduct(2, 2));
        assert_eq!(classify_cell(2, &cycle(5), (5, 5, 5)), CellClass::Polygon(5));
        let pentagonal_prism = graph(
            10,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (7, 8), (8, 9), (9, 5), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)],
        );
        assert_eq!(classify_cell(3, &pentagonal_prism, (10, 15, 7)), CellClass::Shell(7));
        assert_eq!(classify_cell(4, &cycle(6), (6, 6, 9)), CellClass::Other { v: 6, e: 6, f: 9 });
    }

    #[test]
    fn class_display() {
        assert_eq!(CellClass::SimplexProduct(1, 2).to_string(), "SimplexProduct(1,2)");
        assert_eq!(CellClass::Other { v: 1, e: 2, f: 3 }.to_string(), "Other(1,2,3)");
    }
}
