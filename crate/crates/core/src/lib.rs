//! Symplectic 2-friezes, symmetric superperiodic difference equations,
//! Legendrian polygons and the cluster structure tying them together.
//!
//! Everything is generic over [`arith::Scalar`]; the aliases below fix the
//! common choices.

pub mod arith;
pub mod cluster;
pub mod diffeq;
pub mod frieze;
pub mod legendrian;
pub mod search;
pub mod slfrieze;

pub use arith::{Matrix, Scalar, ScalarKind};
pub use diffeq::SymmetricDiffEq;
pub use frieze::{FriezeError, FriezeGrid, GridIndex, ZigZag, ZigZagShape};
pub use slfrieze::SlFrieze;

pub type Rational = num_rational::BigRational;
pub type Gaussian = num_complex::Complex<Rational>;
pub type ComplexFloat = num_complex::Complex64;

pub type RationalFrieze = FriezeGrid<Rational>;
pub type GaussianFrieze = FriezeGrid<Gaussian>;
pub type RationalMatrix = Matrix<Rational>;
pub type RationalDiffEq = SymmetricDiffEq<Rational>;
pub type RationalSlFrieze = SlFrieze<Rational>;
