//! Symplectic 2-friezes: storage, propagation and verification.

mod checks;
mod extend;
mod grid;
mod index;
mod propagate;
mod zigzag;

pub use checks::{black_window, LocalRule, RuleViolation, TameReport, TameViolation};
pub use extend::PartialFrieze;
pub use grid::{FriezeError, FriezeGrid};
pub use index::GridIndex;
pub use propagate::{black_band, black_by_determinant, white_band, white_by_determinant};
pub use zigzag::{ZigZag, ZigZagShape};
