use std::fmt;

use thiserror::Error;

use super::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("index {index} out of range for dimension {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("row set has {rows} indices but column set has {cols}")]
    UnequalIndexSets { rows: usize, cols: usize },
    #[error("expected {expected} entries, got {found}")]
    WrongEntryCount { expected: usize, found: usize },
}

/// Dense row-major matrix over a scalar kind.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, ArithError> {
        if data.len() != rows * cols {
            return Err(ArithError::WrongEntryCount {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ArithError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(ArithError::WrongEntryCount {
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, ArithError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v.clone()).collect(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        if self.cols != other.rows {
            return Err(ArithError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(Self::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                acc + self.get(r, k).clone() * other.get(k, c).clone()
            })
        }))
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, ArithError> {
        if self.cols != v.len() {
            return Err(ArithError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                (0..self.cols).fold(T::zero(), |acc, k| {
                    acc + self.get(r, k).clone() * v[k].clone()
                })
            })
            .collect())
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.approx_eq(&Self::identity(self.rows))
    }

    pub fn is_neg_identity(&self) -> bool {
        self.is_square() && self.approx_eq(&Self::identity(self.rows).neg())
    }

    pub fn submatrix(&self, row_set: &[usize], col_set: &[usize]) -> Result<Self, ArithError> {
        for &r in row_set {
            if r >= self.rows {
                return Err(ArithError::IndexOutOfRange {
                    index: r,
                    bound: self.rows,
                });
            }
        }
        for &c in col_set {
            if c >= self.cols {
                return Err(ArithError::IndexOutOfRange {
                    index: c,
                    bound: self.cols,
                });
            }
        }
        Ok(Self::from_fn(row_set.len(), col_set.len(), |r, c| {
            self.get(row_set[r], col_set[c]).clone()
        }))
    }

    pub fn minor(&self, row_set: &[usize], col_set: &[usize]) -> Result<T, ArithError> {
        if row_set.len() != col_set.len() {
            return Err(ArithError::UnequalIndexSets {
                rows: row_set.len(),
                cols: col_set.len(),
            });
        }
        self.submatrix(row_set, col_set)?.det()
    }

    /// Fraction-free Bareiss elimination for exact kinds, partial pivoting for floats.
    pub fn det(&self) -> Result<T, ArithError> {
        if !self.is_square() {
            return Err(ArithError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(if T::KIND.is_exact() {
            bareiss(self.rows, self.data.clone())
        } else {
            pivoted_elimination(self.rows, self.data.clone())
        })
    }
}

fn bareiss<T: Scalar>(n: usize, mut m: Vec<T>) -> T {
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return T::zero();
            };
            for c in 0..n {
                m.swap(k * n + c, p * n + c);
            }
            negate = !negate;
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i * n + j].clone() * pivot.clone()
                    - m[i * n + k].clone() * m[k * n + j].clone();
                m[i * n + j] = num
                    .checked_div(&prev)
                    .expect("Bareiss quotient is exact");
            }
            m[i * n + k] = T::zero();
        }
        prev = pivot;
    }
    let d = m[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

fn pivoted_elimination<T: Scalar>(n: usize, mut m: Vec<T>) -> T {
    let mut acc = T::one();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&a, &b| {
                m[a * n + k]
                    .magnitude()
                    .total_cmp(&m[b * n + k].magnitude())
            })
            .unwrap_or(k);
        if m[p * n + k].is_negligible() {
            return T::zero();
        }
        if p != k {
            for c in 0..n {
                m.swap(k * n + c, p * n + c);
            }
            acc = -acc;
        }
        let pivot = m[k * n + k].clone();
        acc = acc * pivot.clone();
        for i in k + 1..n {
            let Some(f) = m[i * n + k].checked_div(&pivot) else {
                continue;
            };
            for j in k..n {
                let v = m[i * n + j].clone() - f.clone() * m[k * n + j].clone();
                m[i * n + j] = v;
            }
        }
    }
    acc
}

pub fn det<T: Scalar>(m: &Matrix<T>) -> Result<T, ArithError> {
    m.det()
}

pub fn minor<T: Scalar>(m: &Matrix<T>, rows: &[usize], cols: &[usize]) -> Result<T, ArithError> {
    m.minor(rows, cols)
}

pub fn mat_mul<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>, ArithError> {
    a.mul(b)
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(Scalar::canonical).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c]))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
