//! Scalars and dense linear algebra.

mod matrix;
mod scalar;

pub use matrix::{det, mat_mul, minor, ArithError, Matrix};
pub use scalar::{
    float_tolerance, int, ints, rational, set_float_tolerance, Scalar, ScalarKind,
};
