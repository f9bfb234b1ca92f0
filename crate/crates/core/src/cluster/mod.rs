//! Exchange matrices, valued quivers, seeds and the cluster chart of friezes.

mod exchange;
mod laurent;
mod seed;

use thiserror::Error;

use crate::frieze::FriezeError;

pub use exchange::{c2_square_aw, ExchangeMatrix, ValuedQuiver};
pub use laurent::{Exponents, LaurentPolynomial};
pub use seed::{evaluate_frieze, exchange, formal_frieze, zigzag_quiver, BeltSign, Seed};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClusterError {
    #[error("exchange matrix is not square")]
    NotSquare,
    #[error("matrix is not skew-symmetrizable")]
    NotSkewSymmetrizable,
    #[error("quiver is not bipartite")]
    NotBipartite,
    #[error("exchange at vertex {0} is not a Laurent polynomial")]
    NonLaurentQuotient(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("zero value at vertex {0}")]
    ZeroSubstitution(usize),
    #[error("expected {expected} values, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Frieze(#[from] FriezeError),
}
