use std::collections::HashMap;

use super::grid::{FriezeError, FriezeGrid};
use super::index::GridIndex;
use super::zigzag::ZigZag;
use crate::arith::{Matrix, Scalar};

fn coeff<T: Clone>(v: &[T], i: i64) -> T {
    v[i.rem_euclid(v.len() as i64) as usize].clone()
}

/// Solution of the symmetric recurrence along diagonal `i`, started from
/// `(0, 0, 0, 1)` at positions `i-4..i-1`; returns positions `i-4..=last`.
pub(crate) fn diagonal<T: Scalar>(a: &[T], b: &[T], i: i64, last: i64) -> Vec<T> {
    let mut v = vec![T::zero(), T::zero(), T::zero(), T::one()];
    for m in i..=last {
        let k = v.len();
        let next = coeff(a, m) * v[k - 1].clone() - coeff(b, m) * v[k - 2].clone()
            + coeff(a, m - 1) * v[k - 3].clone()
            - v[k - 4].clone();
        v.push(next);
    }
    v
}

impl<T: Scalar> FriezeGrid<T> {
    /// Frieze whose first row reads `..., b_i, a_i, b_{i+1}, a_{i+1}, ...`,
    /// with `a_0` at display column 0.
    pub fn from_coeffs(a: &[T], b: &[T]) -> Result<Self, FriezeError> {
        let n = a.len();
        if b.len() != n {
            return Err(FriezeError::WrongLength {
                expected: n,
                found: b.len(),
            });
        }
        if n < 5 {
            return Err(FriezeError::PeriodTooSmall(n));
        }
        let w = n - 5;
        let mut diagonals = Vec::with_capacity(n);
        for i in 0..n as i64 {
            let d = diagonal(a, b, i, i + w as i64 + 3);
            let closed = d[4 + w].approx_eq(&T::one())
                && d[5 + w..8 + w].iter().all(Scalar::is_negligible);
            if !closed {
                return Err(FriezeError::NotSuperperiodic(i));
            }
            diagonals.push(d);
        }
        let blacks = FriezeGrid::from_fn(w, |idx| {
            if idx.is_black() {
                diagonals[idx.i() as usize][4 + idx.row() as usize].clone()
            } else {
                T::zero()
            }
        });
        Ok(blacks.fill_whites())
    }

    /// Recomputes every white entry as the 2x2 minor of its black neighbours.
    pub fn fill_whites(&self) -> Self {
        FriezeGrid::from_fn(self.width(), |idx| {
            if idx.is_black() {
                self.entry(idx)
            } else {
                let (i, j) = (idx.i(), idx.j());
                self.black(i, j) * self.black(i + 1, j + 1)
                    - self.black(i + 1, j) * self.black(i, j + 1)
            }
        })
    }

    /// `a_i = d[i][i]`, `b_i = d[i-1/2][i-1/2]` for `i = 0..n`. A width-0
    /// frieze has no interior, so both lists are the boundary ones.
    pub fn extract_coeffs(&self) -> (Vec<T>, Vec<T>) {
        let n = self.period() as i64;
        let a = (0..n).map(|i| self.black(i, i)).collect();
        let b = (0..n).map(|i| self.white(i - 1, i - 1)).collect();
        (a, b)
    }

    /// Frieze determined by the values on a double zig-zag, obtained by
    /// solving the local rules outward until a full period is known.
    pub fn from_zigzag(z: &ZigZag<T>) -> Result<Self, FriezeError> {
        let w = z.shape.width();
        let n = (w + 5) as i64;
        let cols = z.shape.columns();
        let lo = cols.iter().min().unwrap() - 2 * n - 2;
        let hi = cols.iter().max().unwrap() + 2 * n + 3;
        let mut solver = Solver::new(w as i64, lo, hi);
        for (idx, v) in z.entries() {
            solver.known.insert((idx.column(), idx.row()), v);
        }
        solver.run()?;
        for x in lo..=hi - 2 * n {
            for r in 0..w as i64 {
                let (p, q) = (solver.get(x, r), solver.get(x + 2 * n, r));
                if let (Some(p), Some(q)) = (p, q) {
                    if !p.approx_eq(&q) {
                        return Err(FriezeError::NotClosed(GridIndex::at(x + 2 * n, r)));
                    }
                }
            }
        }
        let base = lo + 1;
        Ok(FriezeGrid::from_fn(w, |idx| {
            let x = base + (idx.column() - base).rem_euclid(2 * n);
            solver.get(x, idx.row()).expect("solved cell")
        }))
    }
}

struct Solver<T> {
    width: i64,
    lo: i64,
    hi: i64,
    known: HashMap<(i64, i64), T>,
}

enum Attempt<T> {
    Solved(T),
    ZeroDivisor(GridIndex),
    Missing,
}

impl<T: Scalar> Solver<T> {
    fn new(width: i64, lo: i64, hi: i64) -> Self {
        Self {
            width,
            lo,
            hi,
            known: HashMap::new(),
        }
    }

    fn get(&self, x: i64, r: i64) -> Option<T> {
        if r == -1 || r == self.width {
            Some(T::one())
        } else if r < -1 || r > self.width {
            Some(T::zero())
        } else {
            self.known.get(&(x, r)).cloned()
        }
    }

    /// `(num + p * q) / d` with every participant known.
    fn quotient(&self, num: (i64, i64), p: (i64, i64), q: (i64, i64), d: (i64, i64), square: bool) -> Attempt<T> {
        let vals = [num, p, q, d].map(|c| self.get(c.0, c.1));
        let [Some(nv), Some(pv), Some(qv), Some(dv)] = vals else {
            return Attempt::Missing;
        };
        let nv = if square { nv.square() } else { nv };
        match (nv + pv * qv).checked_div(&dv) {
            Some(v) => Attempt::Solved(v),
            None => Attempt::ZeroDivisor(GridIndex::at(d.0, d.1)),
        }
    }

    fn attempt(&self, x: i64, r: i64) -> Attempt<T> {
        let black = (x - r).rem_euclid(2) == 0;
        let mut zero = None;
        let mut tries = Vec::with_capacity(3);
        if !black {
            let vals = [(x - 1, r), (x + 1, r), (x, r - 1), (x, r + 1)].map(|c| self.get(c.0, c.1));
            if let [Some(a), Some(d), Some(b), Some(c)] = vals {
                return Attempt::Solved(a * d - b * c);
            }
        }
        for dir in [1i64, -1] {
            let mid = x - dir;
            let far = x - 2 * dir;
            tries.push(self.quotient((mid, r), (mid, r - 1), (mid, r + 1), (far, r), !black));
        }
        for t in tries {
            match t {
                Attempt::Solved(v) => return Attempt::Solved(v),
                Attempt::ZeroDivisor(at) => zero = zero.or(Some(at)),
                Attempt::Missing => {}
            }
        }
        match zero {
            Some(at) => Attempt::ZeroDivisor(at),
            None => Attempt::Missing,
        }
    }

    fn run(&mut self) -> Result<(), FriezeError> {
        loop {
            let mut progress = false;
            for x in self.lo..=self.hi {
                for r in 0..self.width {
                    if self.known.contains_key(&(x, r)) {
                        continue;
                    }
                    if let Attempt::Solved(v) = self.attempt(x, r) {
                        self.known.insert((x, r), v);
                        progress = true;
                    }
                }
            }
            if !progress {
                break;
            }
        }
        for x in self.lo..=self.hi {
            for r in 0..self.width {
                if !self.known.contains_key(&(x, r)) {
                    return Err(match self.attempt(x, r) {
                        Attempt::ZeroDivisor(at) => FriezeError::ZeroPivot(at),
                        _ => FriezeError::ZeroPivot(GridIndex::at(x, r)),
                    });
                }
            }
        }
        Ok(())
    }
}

/// The band determinant giving the black entry `d[i][j]` from the coefficients.
pub fn black_band<T: Scalar>(a: &[T], b: &[T], i: i64, j: i64) -> Matrix<T> {
    let m = (j - i + 1).max(0) as usize;
    Matrix::from_fn(m, m, |r, c| {
        let (r, c) = (r as i64, c as i64);
        match c - r {
            0 => coeff(a, i + r),
            1 => coeff(b, i + r + 1),
            2 => coeff(a, i + r + 1),
            3 | -1 => T::one(),
            _ => T::zero(),
        }
    })
}

/// The symmetric band determinant giving the white entry `d[i-1/2][j-1/2]`.
pub fn white_band<T: Scalar>(a: &[T], b: &[T], i: i64, j: i64) -> Matrix<T> {
    let m = (j - i + 1).max(0) as usize;
    Matrix::from_fn(m, m, |r, c| {
        let (r, c) = (r as i64, c as i64);
        match (c - r).abs() {
            0 => coeff(b, i + r),
            1 => coeff(a, i + r.min(c)),
            2 => T::one(),
            _ => T::zero(),
        }
    })
}

/// Black entry `d[i][j]` as a band determinant in the coefficients.
pub fn black_by_determinant<T: Scalar>(a: &[T], b: &[T], i: i64, j: i64) -> T {
    black_band(a, b, i, j).det().expect("square")
}

/// White entry `d[i+1/2][j+1/2]` as a band determinant in the coefficients.
pub fn white_by_determinant<T: Scalar>(a: &[T], b: &[T], i: i64, j: i64) -> T {
    white_band(a, b, i + 1, j + 1).det().expect("square")
}
