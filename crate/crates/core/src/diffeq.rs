//! Symmetric linear difference equations
//! `V_m = a_m V_{m-1} - b_m V_{m-2} + a_{m-1} V_{m-3} - V_{m-4}` with n-periodic coefficients.

use thiserror::Error;

use crate::arith::{Matrix, Scalar};
use crate::frieze::black_band;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiffEqError {
    #[error("coefficient lists differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("period {0} is too small (need at least {1})")]
    PeriodTooSmall(usize, usize),
    #[error("family parameter must be nonzero")]
    ZeroParameter,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricDiffEq<T> {
    a: Vec<T>,
    b: Vec<T>,
}

impl<T: Scalar> SymmetricDiffEq<T> {
    pub fn new(a: Vec<T>, b: Vec<T>) -> Result<Self, DiffEqError> {
        if a.len() != b.len() {
            return Err(DiffEqError::LengthMismatch(a.len(), b.len()));
        }
        if a.len() < 5 {
            return Err(DiffEqError::PeriodTooSmall(a.len(), 5));
        }
        Ok(Self { a, b })
    }

    pub fn period(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self, i: i64) -> T {
        self.a[i.rem_euclid(self.a.len() as i64) as usize].clone()
    }

    pub fn b(&self, i: i64) -> T {
        self.b[i.rem_euclid(self.b.len() as i64) as usize].clone()
    }

    pub fn a_list(&self) -> &[T] {
        &self.a
    }

    pub fn b_list(&self) -> &[T] {
        &self.b
    }

    /// Runs the recurrence from `init = (V_{s}, .., V_{s+3})` and returns
    /// `V_s .. V_{s+3+steps}`.
    pub fn solve(&self, init: [T; 4], start: i64, steps: usize) -> Vec<T> {
        let mut v: Vec<T> = init.to_vec();
        for k in 0..steps {
            let m = start + 4 + k as i64;
            let l = v.len();
            let next = self.a(m) * v[l - 1].clone() - self.b(m) * v[l - 2].clone()
                + self.a(m - 1) * v[l - 3].clone()
                - v[l - 4].clone();
            v.push(next);
        }
        v
    }

    /// All solutions satisfy `V_{m+n} = -V_m`; checked on the four basis solutions.
    pub fn is_superperiodic(&self) -> bool {
        let n = self.period();
        (0..4).all(|k| {
            let mut init: [T; 4] = std::array::from_fn(|_| T::zero());
            init[k] = T::one();
            let v = self.solve(init, 0, n);
            (0..4).all(|m| v[m + n].approx_eq(&-v[m].clone()))
        })
    }

    /// Companion matrix `E_j`, so that a row block of solutions
    /// `(V_{j-4}, .., V_{j-1})` times `E_j` is `(V_{j-3}, .., V_j)`.
    pub fn companion(&self, j: i64) -> Matrix<T> {
        let mut m = Matrix::zeros(4, 4);
        for r in 1..4 {
            m.set(r, r - 1, T::one());
        }
        m.set(0, 3, -T::one());
        m.set(1, 3, self.a(j - 1));
        m.set(2, 3, -self.b(j));
        m.set(3, 3, self.a(j));
        m
    }

    /// `E_1 E_2 .. E_n`; equals `-Id` exactly when the equation is superperiodic.
    pub fn monodromy(&self) -> Matrix<T> {
        (1..=self.period() as i64).fold(Matrix::identity(4), |acc, j| {
            acc.mul(&self.companion(j)).expect("4x4")
        })
    }

    /// The pentadiagonal determinant `Δ_{i,j}` (1 when `j = i - 1`).
    pub fn delta(&self, i: i64, j: i64) -> T {
        black_band(&self.a, &self.b, i, j).det().expect("square")
    }

    /// The ten polynomial conditions cutting out superperiodic coefficients,
    /// as residuals that all vanish exactly on the variety.
    pub fn variety_residuals(&self) -> Vec<T> {
        let n = self.period() as i64;
        let mut out = Vec::with_capacity(10);
        out.push(self.delta(3, n - 3) - self.a(n));
        for k in 0..2 {
            out.push(self.delta(k + 2, n - 3 + k) - T::one());
        }
        for k in 0..3 {
            out.push(self.delta(k + 1, n - 3 + k));
        }
        for k in 0..4 {
            out.push(self.delta(k, n - 3 + k));
        }
        out
    }

    pub fn on_variety(&self) -> bool {
        self.variety_residuals().iter().all(Scalar::is_negligible)
    }
}

/// Two-parameter family of period-6 superperiodic equations with
/// `a_3 = a_0 = a`, `b_3 = b_0 = b`.
pub fn width1_family<T: Scalar>(a: T, b: T) -> Result<SymmetricDiffEq<T>, DiffEqError> {
    if a.is_negligible() || b.is_negligible() {
        return Err(DiffEqError::ZeroParameter);
    }
    let one = T::one();
    let div = |p: T, q: T| p.checked_div(&q).ok_or(DiffEqError::ZeroParameter);
    let a1 = div(one.clone() + b.clone() + a.square(), a.clone() * b.clone())?;
    let a2 = div(one.clone() + b.clone(), a.clone())?;
    let b1 = div(one.clone() + a.square(), b.clone())?;
    let b2 = div(
        (one.clone() + b.clone()).square() + a.square(),
        a.square() * b.clone(),
    )?;
    SymmetricDiffEq::new(
        vec![a.clone(), a1.clone(), a2.clone(), a, a1, a2],
        vec![b.clone(), b1.clone(), b2.clone(), b, b1, b2],
    )
}
