use serde::Serialize;

use super::{Arrangement, ArrangementError, Hyperplane};
use crate::exact::{Rational, RationalVector};

/// Affine coordinates on a hyperplane: `x = base + sum_k y_k * directions[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chart {
    pub base: RationalVector,
    pub directions: Vec<RationalVector>,
}

impl Chart {
    pub fn lift(&self, y: &RationalVector) -> Result<RationalVector, ArrangementError> {
        let mut x = self.base.clone();
        for (coeff, dir) in y.iter().zip(&self.directions) {
            x = x.add(&dir.scale(coeff))?;
        }
        Ok(x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedArrangement {
    pub arrangement: Arrangement,
    pub chart: Chart,
    /// Original index of each induced hyperplane.
    pub source_indices: Vec<usize>,
    /// Original indices dropped because they do not cut the hyperplane properly.
    pub excluded: Vec<usize>,
    pub notes: Vec<String>,
}

/// Induced arrangement of the other hyperplanes on hyperplane `index`,
/// in dimension `d - 1`.
pub fn restrict_to_hyperplane(arr: &Arrangement, index: usize) -> Result<RestrictedArrangement, ArrangementError> {
    let d = arr.dim();
    if d < 3 {
        return Err(ArrangementError::UnsupportedDimension { required: ">= 3", actual: d });
    }
    if index >= arr.len() {
        return Err(ArrangementError::IndexOutOfRange { index, count: arr.len() });
    }
    let host = arr.hyperplane(index);
    let pivot = (0..d).find(|&j| !host.a[j].is_zero()).expect("nonzero normal");

    // base = (b / a_p) e_p; directions e_k - (a_k / a_p) e_p for k != p
    let base = RationalVector::unit(d, pivot).scale(&(&host.b / &host.a[pivot]));
    let directions: Vec<RationalVector> = (0..d)
        .filter(|&k| k != pivot)
        .map(|k| {
            let mut v: Vec<Rational> = RationalVector::unit(d, k).entries().to_vec();
            v[pivot] = -(&host.a[k] / &host.a[pivot]);
            RationalVector::new(v)
        })
        .collect();
    let chart = Chart { base, directions };

    let mut hyperplanes = Vec::new();
    let mut source_indices = Vec::new();
    let mut excluded = Vec::new();
    let mut notes = Vec::new();
    for (j, h) in arr.hyperplanes().iter().enumerate() {
        if j == index {
            continue;
        }
        let a: Vec<Rational> = chart.directions.iter().map(|u| h.a.dot(u)).collect::<Result<_, _>>()?;
        let a = RationalVector::new(a);
        let b = &h.b - &h.a.dot(&chart.base)?;
        if a.is_zero() {
            excluded.push(j);
            notes.push(format!("h{} is parallel to h{} and induces no hyperplane", j + 1, index + 1));
            continue;
        }
        hyperplanes.push(Hyperplane::new(a, b));
        source_indices.push(j);
    }
    Ok(RestrictedArrangement {
        arrangement: Arrangement::new(d - 1, hyperplanes)?,
        chart,
        source_indices,
        excluded,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::check_simple;

    fn plane(a: &[i64], b: i64) -> Hyperplane {
        Hyperplane::new(RationalVector::from_ints(a), Rational::from(b))
    }

    #[test]
    fn induced_functionals_agree_on_the_host() {
        let arr = Arrangement::new(
            3,
            vec![plane(&[1, 0, 0], 0), plane(&[0, 2, 1], 3), plane(&[0, 1, 0], 0), plane(&[1, 1, 1], 1)],
        )
        .unwrap();
        let r = restrict_to_hyperplane(&arr, 1).unwrap();
        assert_eq!(r.source_indices, vec![0, 2, 3]);
        let y = RationalVector::new(vec![Rational::new(1, 3), Rational::new(-2, 7)]);
        let x = r.chart.lift(&y).unwrap();
        assert!(arr.hyperplane(1).eval(&x).unwrap().is_zero());
        for (k, &j) in r.source_indices.iter().enumerate() {
            assert_eq!(r.arrangement.hyperplane(k).eval(&y).unwrap(), arr.hyperplane(j).eval(&x).unwrap());
        }
    }

    #[test]
    fn three_planes_give_too_few_lines() {
        let arr = Arrangement::new(3, vec![plane(&[1, 0, 0], 0), plane(&[0, 1, 0], 0), plane(&[0, 0, 1], 0)]).unwrap();
        let r = restrict_to_hyperplane(&arr, 0).unwrap();
        assert_eq!(r.arrangement.len(), 2);
        assert!(!check_simple(&r.arrangement).is_simple);
    }

    #[test]
    fn parallel_plane_is_excluded() {
        let arr = Arrangement::new(3, vec![plane(&[0, 0, 1], 0), plane(&[0, 0, 1], 5), plane(&[1, 0, 0], 0)]).unwrap();
        let r = restrict_to_hyperplane(&arr, 0).unwrap();
        assert_eq!(r.excluded, vec![1]);
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn rejects_planar_input() {
        let arr = Arrangement::new(2, vec![plane(&[1, 0], 0), plane(&[0, 1], 0), plane(&[1, 1], 1)]).unwrap();
        assert!(restrict_to_hyperplane(&arr, 0).is_err());
    }
}
