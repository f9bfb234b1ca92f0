//! Tame SL(k+1)-friezes, their difference equations and dualities.

use thiserror::Error;

use crate::arith::{Matrix, Scalar};
use crate::frieze::{FriezeGrid, GridIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlError {
    #[error("coefficients are not superperiodic: closure fails on diagonal {0}")]
    NotSuperperiodic(i64),
    #[error("{size}x{size} minor at d[{i},{j}] is {value}, expected {expected}")]
    MinorCondition {
        size: usize,
        i: i64,
        j: i64,
        value: String,
        expected: String,
    },
    #[error("width {0} has no middle row")]
    WidthParity(usize),
    #[error("expected {expected} coefficient values, got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("operation needs order k = {expected}, got {found}")]
    WrongOrder { expected: usize, found: usize },
}

/// One fundamental domain of an SL(k+1)-frieze of width `w`, period `n = w + k + 2`.
///
/// Rows `j - i = -1` and `w` are ones, the `k` rows beyond them zeros, and
/// `d[i][j+n] = (-1)^k d[i][j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SlFrieze<T> {
    k: usize,
    width: usize,
    data: Vec<T>,
}

/// Coefficient table: `coeffs[s - 1][i]` is `a_i^s` for `s = 1..=k`, `i = 0..n`.
pub type CoeffTable<T> = Vec<Vec<T>>;

fn at<T: Clone>(v: &[T], i: i64) -> T {
    v[i.rem_euclid(v.len() as i64) as usize].clone()
}

impl<T: Scalar> SlFrieze<T> {
    pub fn from_fn(k: usize, width: usize, mut f: impl FnMut(i64, i64) -> T) -> Self {
        let n = (width + k + 2) as i64;
        let mut data = Vec::with_capacity(n as usize * width);
        for i in 0..n {
            for r in 0..width as i64 {
                data.push(f(i, i + r));
            }
        }
        Self { k, width, data }
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn period(&self) -> usize {
        self.width + self.k + 2
    }

    pub fn entry(&self, i: i64, j: i64) -> T {
        let n = self.period() as i64;
        let w = self.width as i64;
        let r = j - i;
        let q = (r + self.k as i64 + 1).div_euclid(n);
        let r0 = r - q * n;
        let base = if r0 < -1 {
            T::zero()
        } else if r0 == -1 || r0 == w {
            T::one()
        } else {
            let i0 = i.rem_euclid(n) as usize;
            self.data[i0 * self.width + r0 as usize].clone()
        };
        if (self.k as i64 * q).rem_euclid(2) == 1 {
            -base
        } else {
            base
        }
    }

    /// Entry at display column `x`, interior row `r` (`d[i][i+r]` sits at `x = 2i + r`).
    pub fn at_display(&self, x: i64, r: i64) -> Option<T> {
        ((x - r).rem_euclid(2) == 0).then(|| {
            let i = (x - r) / 2;
            self.entry(i, i + r)
        })
    }

    pub fn row(&self, r: i64) -> Vec<T> {
        (0..self.period() as i64).map(|i| self.entry(i, i + r)).collect()
    }

    pub fn window(&self, i: i64, j: i64, size: usize) -> Matrix<T> {
        Matrix::from_fn(size, size, |a, b| self.entry(i + a as i64, j + b as i64))
    }

    pub fn minor(&self, i: i64, j: i64, size: usize) -> T {
        self.window(i, j, size).det().expect("square")
    }

    fn windows(&self) -> impl Iterator<Item = (i64, i64)> {
        let n = self.period() as i64;
        let lo = -(self.k as i64) - 2;
        (0..n).flat_map(move |i| (lo..lo + n).map(move |s| (i, i + s)))
    }

    /// Adjacent (k+1)-minors equal 1 and (k+2)-minors vanish over a full period.
    pub fn check(&self) -> Result<(), SlError> {
        let k = self.k;
        for (size, expected) in [(k + 1, T::one()), (k + 2, T::zero())] {
            for (i, j) in self.windows() {
                let value = self.minor(i, j, size);
                if !value.approx_eq(&expected) {
                    return Err(SlError::MinorCondition {
                        size,
                        i,
                        j,
                        value: value.canonical(),
                        expected: expected.canonical(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Every adjacent 3x3 minor equals its central entry.
    pub fn check_central_minors(&self) -> Result<(), SlError> {
        for (i, j) in self.windows() {
            let value = self.minor(i - 1, j - 1, 3);
            let expected = self.entry(i, j);
            if !value.approx_eq(&expected) {
                return Err(SlError::MinorCondition {
                    size: 3,
                    i: i - 1,
                    j: j - 1,
                    value: value.canonical(),
                    expected: expected.canonical(),
                });
            }
        }
        Ok(())
    }

    /// `d[i][j] = d[j+k][i+w+k-1]` over one period.
    pub fn check_glide(&self) -> bool {
        let (k, w) = (self.k as i64, self.width as i64);
        self.windows()
            .all(|(i, j)| self.entry(i, j).approx_eq(&self.entry(j + k, i + w + k - 1)))
    }

    /// Frieze whose diagonals solve
    /// `V_m = sum_s (-1)^(s-1) a_m^s V_{m-s} + (-1)^k V_{m-k-1}` from `(0,..,0,1)`.
    pub fn from_equation(coeffs: &CoeffTable<T>) -> Result<Self, SlError> {
        let k = coeffs.len();
        let n = coeffs.first().map_or(0, Vec::len);
        if let Some(bad) = coeffs.iter().find(|c| c.len() != n) {
            return Err(SlError::WrongLength {
                expected: n,
                found: bad.len(),
            });
        }
        if n < k + 2 {
            return Err(SlError::WrongLength {
                expected: k + 2,
                found: n,
            });
        }
        let w = n - k - 2;
        let mut diagonals = Vec::with_capacity(n);
        for i in 0..n as i64 {
            let mut v = vec![T::zero(); k + 1];
            v[k] = T::one();
            for m in i..=i + (w + k) as i64 {
                let l = v.len();
                let mut next = if k.is_multiple_of(2) {
                    v[l - k - 1].clone()
                } else {
                    -v[l - k - 1].clone()
                };
                for s in 1..=k {
                    let term = at(&coeffs[s - 1], m) * v[l - s].clone();
                    next = if s % 2 == 1 { next + term } else { next - term };
                }
                v.push(next);
            }
            let closed = v[k + 1 + w].approx_eq(&T::one())
                && v[k + 2 + w..].iter().all(Scalar::is_negligible);
            if !closed {
                return Err(SlError::NotSuperperiodic(i));
            }
            diagonals.push(v);
        }
        Ok(Self::from_fn(k, w, |i, j| {
            diagonals[i as usize][k + 1 + (j - i) as usize].clone()
        }))
    }

    /// Coefficients recovered from adjacent minors of the frieze.
    pub fn coeffs_of(&self) -> CoeffTable<T> {
        let (k, w, n) = (self.k, self.width as i64, self.period() as i64);
        let mut out = vec![vec![T::zero(); n as usize]; k];
        for i in 0..n {
            for j in 0..k {
                let m = Matrix::from_fn(j + 1, j + 1, |r, c| {
                    self.entry(i + 1 + r as i64, i + w + c as i64)
                });
                out[k - j - 1][(i - 1).rem_euclid(n) as usize] = m.det().expect("square");
            }
        }
        out
    }

    /// The array of adjacent k x k minors.
    pub fn projective_dual(&self) -> Self {
        let k = self.k;
        Self::from_fn(k, self.width, |i, j| {
            if k == 0 {
                T::one()
            } else {
                self.minor(i, j, k)
            }
        })
    }

    /// SL(w+1)-frieze of width k whose rows are the coefficient sequences,
    /// row `r` at display column `2p + r` holding `a_{p+r}^{r+1}`.
    pub fn gale_dual(&self) -> Self {
        let coeffs = self.coeffs_of();
        Self::from_fn(self.width, self.k, |p, q| at(&coeffs[(q - p) as usize], q))
    }

    /// Row `r` equals row `w - 1 - r` column by column.
    pub fn check_middle_symmetry(&self) -> Result<bool, SlError> {
        let w = self.width as i64;
        if w % 2 == 0 {
            return Err(SlError::WidthParity(self.width));
        }
        let cols = 2 * self.period() as i64;
        Ok((0..w).all(|r| {
            (0..cols).all(|x| match (self.at_display(x, r), self.at_display(x, w - 1 - r)) {
                (Some(p), Some(q)) => p.approx_eq(&q),
                (None, None) => true,
                _ => false,
            })
        }))
    }
}

/// `d[i][i+j]` from a lower Hessenberg band in the coefficients.
pub fn entry_deteq1<T: Scalar>(coeffs: &CoeffTable<T>, i: i64, j: i64) -> T {
    let k = coeffs.len() as i64;
    let m = (j + 1).max(0) as usize;
    Matrix::from_fn(m, m, |r, c| {
        let (r, c) = (r as i64, c as i64);
        let d = r - c;
        if c == r + 1 || d == k {
            T::one()
        } else if (0..k).contains(&d) {
            at(&coeffs[d as usize], i + r)
        } else {
            T::zero()
        }
    })
    .det()
    .expect("square")
}

/// `d[i][i+j]` from an upper Hessenberg band of size `w - j`.
pub fn entry_deteq2<T: Scalar>(coeffs: &CoeffTable<T>, width: usize, i: i64, j: i64) -> T {
    let k = coeffs.len() as i64;
    let w = width as i64;
    let m = (w - j).max(0) as usize;
    Matrix::from_fn(m, m, |r, c| {
        let (r, c) = (r as i64, c as i64);
        let d = c - r;
        if r == c + 1 || d == k {
            T::one()
        } else if (0..k).contains(&d) {
            at(&coeffs[(k - 1 - d) as usize], i - w + j - 1 + r)
        } else {
            T::zero()
        }
    })
    .det()
    .expect("square")
}

/// The black entries of a symplectic 2-frieze as an SL(4)-frieze.
pub fn black_of<T: Scalar>(g: &FriezeGrid<T>) -> SlFrieze<T> {
    SlFrieze::from_fn(3, g.width(), |i, j| g.black(i, j))
}

/// Completes an SL(4)-frieze with central 3x3 minors into a symplectic 2-frieze.
pub fn symplectic_of<T: Scalar>(f: &SlFrieze<T>) -> Result<FriezeGrid<T>, SlError> {
    if f.order() != 3 {
        return Err(SlError::WrongOrder {
            expected: 3,
            found: f.order(),
        });
    }
    f.check_central_minors()?;
    let blacks = FriezeGrid::from_fn(f.width(), |idx: GridIndex| {
        if idx.is_black() {
            f.entry(idx.i(), idx.j())
        } else {
            T::zero()
        }
    });
    Ok(blacks.fill_whites())
}
