//! Exact construction and census of bounded cells in simple hyperplane
//! arrangements.
//!
//! The pipeline is: build an [`Arrangement`](arrangement::Arrangement), solve
//! its vertices and edges exactly, enumerate bounded cells by sign vectors,
//! analyze each cell's skeleton, then aggregate in [`statistics`].

pub mod arrangement;
pub mod cell;
pub mod constructions;
pub mod exact;
pub mod export;
mod par;
pub mod statistics;

use thiserror::Error;

pub use arrangement::{Arrangement, Hyperplane};
pub use exact::{Rational, RationalVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arrangement(#[from] arrangement::ArrangementError),
    #[error(transparent)]
    Cell(#[from] cell::CellError),
    #[error(transparent)]
    Construction(#[from] constructions::ConstructionError),
    #[error("unsupported dimension {actual}: {what} requires {required}")]
    UnsupportedDimension { what: &'static str, required: &'static str, actual: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
