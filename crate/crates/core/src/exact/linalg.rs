use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{MathError, Rational, Sign};

/// Fixed-length vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RationalVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        RationalVector(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = Rational::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RationalVector(entries.iter().map(|&x| Rational::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn dot(&self, other: &RationalVector) -> Result<Rational, MathError> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    pub fn add(&self, other: &RationalVector) -> Result<RationalVector, MathError> {
        check_dim(self.dim(), other.dim())?;
        Ok(RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &RationalVector) -> Result<RationalVector, MathError> {
        check_dim(self.dim(), other.dim())?;
        Ok(RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, factor: &Rational) -> RationalVector {
        RationalVector(self.0.iter().map(|a| a * factor).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(Rational::to_f64).collect()
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<RationalVector>) -> Result<Self, MathError> {
        let cols = rows.first().map_or(0, RationalVector::dim);
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for row in rows {
            check_dim(cols, row.dim())?;
            data.extend(row.0);
        }
        Ok(RationalMatrix { rows: n_rows, cols, data })
    }

    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim).map(|i| RationalVector::unit(dim, i)).collect();
        Self::from_rows(rows).expect("square by construction")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &RationalVector) -> Result<RationalVector, MathError> {
        check_dim(self.cols, x.dim())?;
        Ok(RationalVector(
            (0..self.rows)
                .map(|r| self.row(r).iter().zip(x.iter()).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }
}

fn check_dim(expected: usize, found: usize) -> Result<(), MathError> {
    if expected == found {
        Ok(())
    } else {
        Err(MathError::DimensionMismatch { expected, found })
    }
}

/// Clears denominators of one row: returns integers proportional to `row`.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Solves `a * x = b` exactly. Returns `Ok(None)` when `a` is singular.
///
/// Rows are scaled to integers and reduced with Bareiss elimination, so every
/// intermediate value is an integer minor of the augmented matrix.
pub fn solve_linear_system(
    a: &RationalMatrix,
    b: &RationalVector,
) -> Result<Option<RationalVector>, MathError> {
    let n = a.rows();
    check_dim(n, a.cols())?;
    check_dim(n, b.dim())?;

    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rational> = a.row(r).to_vec();
            row.push(b[r].clone());
            integer_row(&row)
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Ok(None);
        };
        m.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![Rational::zero(); n];
    for k in (0..n).rev() {
        let mut acc = Rational::from_integer(m[k][n].clone());
        for j in k + 1..n {
            acc = acc - Rational::from_integer(m[k][j].clone()) * &x[j];
        }
        x[k] = acc / Rational::from_integer(m[k][k].clone());
    }
    Ok(Some(RationalVector(x)))
}

/// Exact sign of `a . x - b`.
pub fn sign_of_affine(a: &RationalVector, b: &Rational, x: &RationalVector) -> Result<Sign, MathError> {
    Ok((a.dot(x)? - b).signum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(rows.iter().map(|r| RationalVector::from_ints(r)).collect()).unwrap()
    }

    #[test]
    fn identity_system() {
        let x = solve_linear_system(&RationalMatrix::identity(3), &RationalVector::from_ints(&[1, 2, 3]))
            .unwrap()
            .unwrap();
        assert_eq!(x, RationalVector::from_ints(&[1, 2, 3]));
    }

    #[test]
    fn singular_system() {
        let a = mat(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve_linear_system(&a, &RationalVector::from_ints(&[0, 1])).unwrap(), None);
    }

    #[test]
    fn two_by_two() {
        let a = mat(&[&[1, 1], &[1, -1]]);
        let b = RationalVector::from_ints(&[2, 0]);
        let x = solve_linear_system(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), b);
        assert_eq!(x, RationalVector::from_ints(&[1, 1]));
    }

    #[test]
    fn needs_row_swap_and_fractions() {
        let a = RationalMatrix::from_rows(vec![
            RationalVector::new(vec![Rational::zero(), Rational::new(1, 3)]),
            RationalVector::new(vec![Rational::new(2, 5), Rational::one()]),
        ])
        .unwrap();
        let b = RationalVector::new(vec![Rational::one(), Rational::new(1, 7)]);
        let x = solve_linear_system(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn dimension_mismatch() {
        let err = solve_linear_system(&RationalMatrix::identity(2), &RationalVector::from_ints(&[1, 2, 3]));
        assert!(matches!(err, Err(MathError::DimensionMismatch { .. })));
        let rect = mat(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(solve_linear_system(&rect, &RationalVector::from_ints(&[1, 2])).is_err());
    }
}
