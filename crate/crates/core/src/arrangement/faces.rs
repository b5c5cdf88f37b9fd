use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use super::simple::SimplicityWitness;
use super::{Arrangement, ArrangementError, SignVector};
use crate::exact::{solve_linear_system, Rational, RationalMatrix, RationalVector, Sign};
use crate::par;

/// Intersection point of exactly `d` hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub point: RationalVector,
    pub tight_set: Vec<usize>,
    pub sign_vector: SignVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EdgeKind {
    /// Bounded edge between two vertex ids.
    Segment { from: usize, to: usize },
    /// Unbounded edge leaving vertex `from` along `direction`.
    Ray { from: usize, direction: RationalVector },
}

/// A 1-face: part of the line cut out by `line_set`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrangementEdge {
    pub line_set: Vec<usize>,
    pub kind: EdgeKind,
    /// Signs at a relative-interior point.
    pub sign_vector: SignVector,
}

impl ArrangementEdge {
    pub fn is_bounded(&self) -> bool {
        matches!(self.kind, EdgeKind::Segment { .. })
    }

    pub fn endpoints(&self) -> Option<(usize, usize)> {
        match self.kind {
            EdgeKind::Segment { from, to } => Some((from, to)),
            EdgeKind::Ray { .. } => None,
        }
    }
}

fn subset_system(arr: &Arrangement, subset: &[usize]) -> (RationalMatrix, RationalVector) {
    let rows = subset.iter().map(|&i| arr.hyperplane(i).a.clone()).collect();
    let rhs = subset.iter().map(|&i| arr.hyperplane(i).b.clone()).collect();
    (RationalMatrix::from_rows(rows).expect("arrangement rows share a dimension"), RationalVector::new(rhs))
}

/// Solves every `d`-subset; the first failing subset in lexicographic order is
/// the witness.
pub(crate) fn solve_vertices(arr: &Arrangement) -> Result<Vec<Vertex>, SimplicityWitness> {
    let (n, d) = (arr.len(), arr.dim());
    if n < d + 1 {
        return Err(SimplicityWitness::TooFewHyperplanes { n, d });
    }
    solve_in_general_position(arr)
}

/// Like [`solve_vertices`] but without the `n >= d + 1` requirement, for
/// arrangements still being assembled.
pub(crate) fn solve_in_general_position(arr: &Arrangement) -> Result<Vec<Vertex>, SimplicityWitness> {
    let (n, d) = (arr.len(), arr.dim());
    let subsets: Vec<Vec<usize>> = (0..n).combinations(d).collect();
    let solved = par::map(&subsets, |subset| {
        let (a, b) = subset_system(arr, subset);
        let Some(point) = solve_linear_system(&a, &b).expect("square system") else {
            return Err(SimplicityWitness::Singular { subset: subset.clone() });
        };
        let sign_vector = arr.sign_vector(&point).expect("dimensions agree");
        if let Some(extra) = (0..n).find(|j| !subset.contains(j) && sign_vector.get(*j) == Sign::Zero) {
            return Err(SimplicityWitness::Degenerate { subset: subset.clone(), extra });
        }
        Ok(Vertex { point, tight_set: subset.clone(), sign_vector })
    });
    solved.into_iter().collect()
}

/// All `C(n, d)` vertices, sorted by tight set.
pub fn enumerate_vertices(arr: &Arrangement) -> Result<Vec<Vertex>, ArrangementError> {
    solve_vertices(arr).map_err(ArrangementError::NotSimple)
}

/// Axis used to order points along a line: the largest absolute direction
/// component, lowest index on ties.
fn parameter_axis(direction: &RationalVector) -> usize {
    let mut best = 0;
    for i in 1..direction.dim() {
        if direction[i].abs() > direction[best].abs() {
            best = i;
        }
    }
    best
}

/// Decomposes every line of the arrangement into bounded segments and two
/// rays. `vertices` must come from [`enumerate_vertices`] on the same input.
pub fn enumerate_edges(arr: &Arrangement, vertices: &[Vertex]) -> Result<Vec<ArrangementEdge>, ArrangementError> {
    let (n, d) = (arr.len(), arr.dim());
    let index: HashMap<&[usize], usize> =
        vertices.iter().enumerate().map(|(id, v)| (v.tight_set.as_slice(), id)).collect();

    let lines: Vec<Vec<usize>> = (0..n).combinations(d - 1).collect();
    let per_line = par::map(&lines, |line| -> Result<Vec<ArrangementEdge>, ArrangementError> {
        let mut on_line = Vec::with_capacity(n - d + 1);
        for j in (0..n).filter(|j| !line.contains(j)) {
            let mut tight = line.clone();
            tight.push(j);
            tight.sort_unstable();
            let id = *index.get(tight.as_slice()).ok_or_else(|| {
                ArrangementError::Inconsistent(format!("missing vertex for tight set {tight:?}"))
            })?;
            on_line.push(id);
        }
        if on_line.len() < 2 {
            return Err(ArrangementError::Inconsistent(format!("line {line:?} carries fewer than two vertices")));
        }

        let mut direction = vertices[on_line[1]].point.sub(&vertices[on_line[0]].point)?;
        let axis = parameter_axis(&direction);
        if direction[axis].signum() == Sign::Minus {
            direction = direction.scale(&Rational::from(-1));
        }
        on_line.sort_by(|&u, &v| vertices[u].point[axis].cmp(&vertices[v].point[axis]));

        let first = on_line[0];
        let last = *on_line.last().unwrap();
        let mut edges = Vec::with_capacity(on_line.len() + 1);

        let back = direction.scale(&Rational::from(-1));
        let probe = vertices[first].point.add(&back)?;
        edges.push(ArrangementEdge {
            line_set: line.clone(),
            sign_vector: arr.sign_vector(&probe)?,
            kind: EdgeKind::Ray { from: first, direction: back },
        });
        let half = Rational::new(1, 2);
        for (&u, &v) in on_line.iter().tuple_windows() {
            let mid = vertices[u].point.add(&vertices[v].point)?.scale(&half);
            edges.push(ArrangementEdge {
                line_set: line.clone(),
                sign_vector: arr.sign_vector(&mid)?,
                kind: EdgeKind::Segment { from: u, to: v },
            });
        }
        let probe = vertices[last].point.add(&direction)?;
        edges.push(ArrangementEdge {
            line_set: line.clone(),
            sign_vector: arr.sign_vector(&probe)?,
            kind: EdgeKind::Ray { from: last, direction },
        });
        Ok(edges)
    });

    let mut edges = Vec::new();
    for chunk in per_line {
        edges.extend(chunk?);
    }
    Ok(edges)
}
