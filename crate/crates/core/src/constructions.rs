//! Explicit arrangements with exact coordinates, plus seeded random simple
//! arrangements.
//!
//! All explicit families use the perturbation `epsilon = 1 / (n - d)`.

use std::fmt;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;
use thiserror::Error;

use crate::arrangement::{check_simple, Arrangement, ArrangementMetadata, Hyperplane, SimplicityWitness};
use crate::exact::{Rational, RationalVector};

/// Attempts allowed per hyperplane when drawing a random simple arrangement.
pub const MAX_RANDOM_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("constructed arrangement is not simple: {0}")]
    NotSimple(SimplicityWitness),
    #[error("no simple hyperplane found after {attempts} attempts for hyperplane {index}")]
    GenerationFailed { index: usize, attempts: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ConstructionSpec {
    CyclicStar { d: usize, n: usize },
    Ao2 { n: usize },
    Ao3 { n: usize },
    Random { d: usize, n: usize, seed: u64, bound: i64 },
}

impl ConstructionSpec {
    pub fn dim(&self) -> usize {
        match *self {
            ConstructionSpec::CyclicStar { d, .. } | ConstructionSpec::Random { d, .. } => d,
            ConstructionSpec::Ao2 { .. } => 2,
            ConstructionSpec::Ao3 { .. } => 3,
        }
    }

    pub fn len(&self) -> usize {
        match *self {
            ConstructionSpec::CyclicStar { n, .. }
            | ConstructionSpec::Ao2 { n }
            | ConstructionSpec::Ao3 { n }
            | ConstructionSpec::Random { n, .. } => n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            ConstructionSpec::CyclicStar { .. } => "cyclic",
            ConstructionSpec::Ao2 { .. } => "ao2",
            ConstructionSpec::Ao3 { .. } => "ao3",
            ConstructionSpec::Random { .. } => "random",
        }
    }

    /// Perturbation used by the explicit families; `None` for random ones.
    pub fn epsilon(&self) -> Option<Rational> {
        match self {
            ConstructionSpec::Random { .. } => None,
            _ => Some(Rational::new(1, (self.len() - self.dim()) as i64)),
        }
    }

    pub fn build(&self) -> Result<Arrangement, ConstructionError> {
        match *self {
            ConstructionSpec::CyclicStar { d, n } => build_cyclic_star(d, n),
            ConstructionSpec::Ao2 { n } => build_ao2(n),
            ConstructionSpec::Ao3 { n } => build_ao3(n),
            ConstructionSpec::Random { d, n, seed, bound } => random_simple_arrangement(d, n, seed, bound),
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructionSpec::CyclicStar { d, n } => write!(f, "A*({d},{n})"),
            ConstructionSpec::Ao2 { n } => write!(f, "Ao(2,{n})"),
            ConstructionSpec::Ao3 { n } => write!(f, "Ao(3,{n})"),
            ConstructionSpec::Random { d, n, seed, .. } => write!(f, "random({d},{n},seed={seed})"),
        }
    }
}

fn finish(spec: ConstructionSpec, hyperplanes: Vec<Hyperplane>) -> Result<Arrangement, ConstructionError> {
    let arr = Arrangement::new(spec.dim(), hyperplanes).map_err(|e| ConstructionError::InvalidParameters(e.to_string()))?;
    if let Some(w) = check_simple(&arr).witness {
        return Err(ConstructionError::NotSimple(w));
    }
    let (seed, coefficient_bound) = match spec {
        ConstructionSpec::Random { seed, bound, .. } => (Some(seed), Some(bound)),
        _ => (None, None),
    };
    Ok(arr.with_metadata(ArrangementMetadata {
        family: spec.family_name().to_string(),
        d: spec.dim(),
        n: spec.len(),
        epsilon: spec.epsilon(),
        seed,
        coefficient_bound,
    }))
}

fn coordinate_plane(d: usize, axis: usize) -> Hyperplane {
    Hyperplane::new(RationalVector::unit(d, axis), Rational::zero())
}

fn r(x: i64) -> Rational {
    Rational::from(x)
}

/// Cyclic-like arrangement: hyperplane `k <= d` is `x_{d+1-k} = 0`; hyperplane
/// `k > d` cuts axis `i < d` at `1 + (d - i)(k - d - 1) eps` and axis `d` at
/// `1 - (k - d - 1) eps`.
pub fn build_cyclic_star(d: usize, n: usize) -> Result<Arrangement, ConstructionError> {
    if d < 2 || n < d + 1 {
        return Err(ConstructionError::InvalidParameters(format!("cyclic family needs d >= 2 and n >= d + 1, got d={d}, n={n}")));
    }
    let spec = ConstructionSpec::CyclicStar { d, n };
    let eps = spec.epsilon().unwrap();
    let mut hyperplanes: Vec<Hyperplane> = (1..=d).map(|k| coordinate_plane(d, d - k)).collect();
    for k in d + 1..=n {
        let step = &eps * &r((k - d - 1) as i64);
        let intercepts: Vec<Rational> = (1..=d)
            .map(|i| if i < d { r(1) + &step * &r((d - i) as i64) } else { r(1) - &step })
            .collect();
        hyperplanes.push(Hyperplane::through_intercepts(&intercepts));
    }
    finish(spec, hyperplanes)
}

/// Line arrangement: the two axes, lines through `(1 + (k-3) eps, 0)` and
/// `(0, 1 - (k-3) eps)` for `k = 3..n-1`, and a last line through `(2, 0)` and
/// `(0, 2 + eps)`.
pub fn build_ao2(n: usize) -> Result<Arrangement, ConstructionError> {
    if n < 4 {
        return Err(ConstructionError::InvalidParameters(format!("ao2 family needs n >= 4, got n={n}")));
    }
    let spec = ConstructionSpec::Ao2 { n };
    let eps = spec.epsilon().unwrap();
    let mut hyperplanes = vec![coordinate_plane(2, 1), coordinate_plane(2, 0)];
    for k in 3..n {
        let step = &eps * &r(k as i64 - 3);
        hyperplanes.push(Hyperplane::through_intercepts(&[r(1) + &step, r(1) - &step]));
    }
    hyperplanes.push(Hyperplane::through_intercepts(&[r(2), r(2) + &eps]));
    finish(spec, hyperplanes)
}

/// Plane arrangement: `x3 = 0`, `x2 = 0`, `x1 = 0`, planes with intercepts
/// `(1 + 2(k-4) eps, 1 + (k-4) eps, 1 - (k-4) eps)` for `k = 4..n-1`, and a
/// last plane with intercepts `(3, 2, 3 + eps)`.
pub fn build_ao3(n: usize) -> Result<Arrangement, ConstructionError> {
    if n < 5 {
        return Err(ConstructionError::InvalidParameters(format!("ao3 family needs n >= 5, got n={n}")));
    }
    let spec = ConstructionSpec::Ao3 { n };
    let eps = spec.epsilon().unwrap();
    let mut hyperplanes = vec![coordinate_plane(3, 2), coordinate_plane(3, 1), coordinate_plane(3, 0)];
    for k in 4..n {
        let step = &eps * &r(k as i64 - 4);
        hyperplanes.push(Hyperplane::through_intercepts(&[r(1) + &step * &r(2), r(1) + &step, r(1) - &step]));
    }
    hyperplanes.push(Hyperplane::through_intercepts(&[r(3), r(2), r(3) + &eps]));
    finish(spec, hyperplanes)
}

/// Uniform integer in `[-bound, bound]` by rejection sampling on the raw
/// 64-bit output, so the stream maps to values identically on every platform.
fn draw_coefficient(rng: &mut SplitMix64, bound: i64) -> i64 {
    let span = (2 * bound + 1) as u64;
    let zone = (u64::MAX / span) * span;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return (x % span) as i64 - bound;
        }
    }
}

/// Seeded random simple arrangement with integer coefficients in
/// `[-bound, bound]`. Hyperplanes are drawn in order as `d` normal
/// coefficients then the offset; a draw that breaks general position is
/// discarded and redrawn.
pub fn random_simple_arrangement(d: usize, n: usize, seed: u64, bound: i64) -> Result<Arrangement, ConstructionError> {
    if !(2..=3).contains(&d) || n < d + 1 || bound < 10 {
        return Err(ConstructionError::InvalidParameters(format!(
            "random family needs d in 2..=3, n >= d + 1, bound >= 10; got d={d}, n={n}, bound={bound}"
        )));
    }
    let spec = ConstructionSpec::Random { d, n, seed, bound };
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut hyperplanes: Vec<Hyperplane> = Vec::with_capacity(n);
    for index in 0..n {
        let mut accepted = false;
        for _ in 0..MAX_RANDOM_ATTEMPTS {
            let a: Vec<i64> = (0..d).map(|_| draw_coefficient(&mut rng, bound)).collect();
            let b = draw_coefficient(&mut rng, bound);
            if a.iter().all(|&x| x == 0) {
                continue;
            }
            hyperplanes.push(Hyperplane::new(RationalVector::from_ints(&a), r(b)));
            let partial = Arrangement::new(d, hyperplanes.clone()).expect("dimensions agree");
            if crate::arrangement::general_position_witness(&partial).is_none() {
                accepted = true;
                break;
            }
            hyperplanes.pop();
        }
        if !accepted {
            return Err(ConstructionError::GenerationFailed { index: index + 1, attempts: MAX_RANDOM_ATTEMPTS });
        }
    }
    finish(spec, hyperplanes)
}
