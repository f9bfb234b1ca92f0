use thiserror::Error;

use super::index::GridIndex;
use crate::arith::{ArithError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("division by zero entry at {0}")]
    ZeroPivot(GridIndex),
    #[error("propagation does not close up: mismatch at {0}")]
    NotClosed(GridIndex),
    #[error("coefficients are not superperiodic: closure fails on diagonal {0}")]
    NotSuperperiodic(i64),
    #[error("tameness conditions do not determine {0}")]
    Underdetermined(GridIndex),
    #[error("{0} is not an interior entry")]
    NotInterior(GridIndex),
    #[error("period {0} is too small (need at least 5)")]
    PeriodTooSmall(usize),
    #[error("expected {expected} values, got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("malformed zig-zag: {0}")]
    MalformedZigZag(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// One fundamental domain of a symplectic 2-frieze of width `w`.
///
/// Only interior entries are stored (rows `0..w` of each colour for the `n = w + 5`
/// diagonals `i = 0..n`); boundary rows of ones, guard rows of zeros and all
/// translates are resolved on access. Black entries are antiperiodic under
/// `j -> j + n`, white entries periodic.
#[derive(Clone, Debug, PartialEq)]
pub struct FriezeGrid<T> {
    width: usize,
    black: Vec<T>,
    white: Vec<T>,
}

impl<T: Scalar> FriezeGrid<T> {
    /// Builds a grid by evaluating `f` at every interior position of the domain.
    pub fn from_fn(width: usize, mut f: impl FnMut(GridIndex) -> T) -> Self {
        let n = (width + 5) as i64;
        let mut black = Vec::with_capacity(n as usize * width);
        let mut white = Vec::with_capacity(n as usize * width);
        for i in 0..n {
            for r in 0..width as i64 {
                black.push(f(GridIndex::black(i, i + r)));
                white.push(f(GridIndex::white(i, i + r)));
            }
        }
        Self {
            width,
            black,
            white,
        }
    }

    /// Builds a grid from its interior rows, each listing columns `0..2n`.
    pub fn from_rows(width: usize, rows: &[Vec<T>]) -> Result<Self, FriezeError> {
        let cols = 2 * (width + 5);
        if rows.len() != width {
            return Err(FriezeError::WrongLength {
                expected: width,
                found: rows.len(),
            });
        }
        for row in rows {
            if row.len() != cols {
                return Err(FriezeError::WrongLength {
                    expected: cols,
                    found: row.len(),
                });
            }
        }
        let period = cols as i64;
        Ok(Self::from_fn(width, |idx| {
            let x = idx.column().rem_euclid(period) as usize;
            rows[idx.row() as usize][x].clone()
        }))
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// `n = w + 5`.
    pub fn period(&self) -> usize {
        self.width + 5
    }

    /// Number of display columns in one fundamental domain.
    pub fn columns(&self) -> usize {
        2 * self.period()
    }

    fn slot(&self, idx: GridIndex) -> Option<usize> {
        let r = idx.row();
        if r < 0 || r >= self.width as i64 {
            return None;
        }
        let i = idx.i().rem_euclid(self.period() as i64);
        Some(i as usize * self.width + r as usize)
    }

    pub fn entry(&self, idx: GridIndex) -> T {
        let n = self.period() as i64;
        let w = self.width as i64;
        let r = idx.row();
        let q = (r + 4).div_euclid(n);
        let r0 = r - q * n;
        let base = if r0 < -1 {
            T::zero()
        } else if r0 == -1 || r0 == w {
            T::one()
        } else {
            let reduced = GridIndex {
                i2: idx.i2,
                j2: idx.j2 - 2 * q * n,
            };
            let k = self.slot(reduced).expect("interior row");
            if idx.is_black() {
                self.black[k].clone()
            } else {
                self.white[k].clone()
            }
        };
        if idx.is_black() && q.rem_euclid(2) == 1 {
            -base
        } else {
            base
        }
    }

    pub fn black(&self, i: i64, j: i64) -> T {
        self.entry(GridIndex::black(i, j))
    }

    /// The white entry `d[i+1/2][j+1/2]`.
    pub fn white(&self, i: i64, j: i64) -> T {
        self.entry(GridIndex::white(i, j))
    }

    pub fn at(&self, x: i64, r: i64) -> T {
        self.entry(GridIndex::at(x, r))
    }

    /// Interior row `r` over display columns `0..2n`.
    pub fn row(&self, r: i64) -> Vec<T> {
        (0..self.columns() as i64).map(|x| self.at(x, r)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.width as i64).map(|r| self.row(r)).collect()
    }

    /// Interior positions of the fundamental domain, black then white per slot.
    pub fn domain(&self) -> Vec<GridIndex> {
        let n = self.period() as i64;
        let mut out = Vec::with_capacity(2 * n as usize * self.width);
        for i in 0..n {
            for r in 0..self.width as i64 {
                out.push(GridIndex::black(i, i + r));
                out.push(GridIndex::white(i, i + r));
            }
        }
        out
    }

    pub fn is_interior(&self, idx: GridIndex) -> bool {
        self.slot(idx).is_some()
    }

    /// Copy with one interior entry replaced (translates follow by convention).
    pub fn with_entry(&self, idx: GridIndex, value: T) -> Result<Self, FriezeError> {
        let k = self.slot(idx).ok_or(FriezeError::NotInterior(idx))?;
        let mut out = self.clone();
        if idx.is_black() {
            out.black[k] = value;
        } else {
            out.white[k] = value;
        }
        Ok(out)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> FriezeGrid<U> {
        FriezeGrid {
            width: self.width,
            black: self.black.iter().map(&f).collect(),
            white: self.white.iter().map(&f).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.black.iter().chain(self.white.iter())
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.width == other.width && self.entries().zip(other.entries()).all(|(a, b)| a.approx_eq(b))
    }

    /// Translate so that display column `x` becomes column `x - 2k`.
    pub fn shifted(&self, k: i64) -> Self {
        Self::from_fn(self.width, |idx| {
            self.entry(GridIndex {
                i2: idx.i2 + 2 * k,
                j2: idx.j2 + 2 * k,
            })
        })
    }

    /// Mirror image under `x -> 2c - x`, which keeps colours when the centre
    /// shift `2c` is even.
    pub fn reflected(&self, c: i64) -> Self {
        Self::from_fn(self.width, |idx| {
            self.at(2 * c - idx.column(), idx.row())
        })
    }

    /// Black entries multiplied by `(-1)^(j-i+1)`, whites unchanged.
    ///
    /// For odd width the result is again a frieze; for even width the twist
    /// flips the lower boundary and the result is only an involutive image.
    pub fn sign_twist(&self) -> Self {
        Self::from_fn(self.width, |idx| {
            let v = self.entry(idx);
            if idx.is_black() && idx.row().rem_euclid(2) == 0 {
                -v
            } else {
                v
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn numbered(width: usize) -> FriezeGrid<Q> {
        let mut k = 0;
        FriezeGrid::from_fn(width, |_| {
            k += 1;
            Q::from_i64(k)
        })
    }

    #[test]
    fn conventions() {
        let g = numbered(2);
        for i in -3..10 {
            assert_eq!(g.black(i, i - 1), Q::from_i64(1));
            assert_eq!(g.black(i, i + 2), Q::from_i64(1));
            assert_eq!(g.white(i, i - 1), Q::from_i64(1));
            for l in 2..=4 {
                assert_eq!(g.black(i, i - l), Q::from_i64(0));
                assert_eq!(g.white(i, i - l), Q::from_i64(0));
            }
            for r in -4..3 {
                assert_eq!(g.black(i, i + r + 7), -g.black(i, i + r));
                assert_eq!(g.white(i, i + r + 7), g.white(i, i + r));
                assert_eq!(g.black(i + 7, i + r + 7), g.black(i, i + r));
            }
        }
    }

    #[test]
    fn rows_round_trip() {
        let g = numbered(3);
        let back = FriezeGrid::from_rows(3, &g.rows()).unwrap();
        assert_eq!(back, g);
        assert!(FriezeGrid::<Q>::from_rows(3, &g.rows()[..2]).is_err());
    }

    #[test]
    fn twist_is_involution() {
        let g = numbered(2);
        assert_eq!(g.sign_twist().sign_twist(), g);
    }
}
