use super::grid::FriezeGrid;
use super::index::GridIndex;
use crate::arith::{Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalRule {
    /// white = left * right - above * below (adjacent blacks)
    WhiteMinor,
    /// black^2 = left * right - above * below (adjacent whites)
    BlackSquare,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RuleViolation<T> {
    pub rule: LocalRule,
    pub at: GridIndex,
    /// Value of the centre entry (squared for black).
    pub lhs: T,
    /// Value of the 2x2 determinant of its neighbours.
    pub rhs: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TameViolation<T> {
    /// Window size: 3, 4 or 5.
    pub size: usize,
    /// Black entry at the upper-left corner of the window.
    pub corner: GridIndex,
    pub value: T,
    pub expected: T,
}

/// Result of the minor checks; `violation` is the first failing window.
#[derive(Clone, Debug, PartialEq)]
pub struct TameReport<T> {
    pub violation: Option<TameViolation<T>>,
}

impl<T> TameReport<T> {
    pub fn is_tame(&self) -> bool {
        self.violation.is_none()
    }
}

/// The `k x k` block of black entries `d[i+a][j+b]`, `0 <= a, b < k`.
pub fn black_window<T: Scalar>(g: &FriezeGrid<T>, i: i64, j: i64, k: usize) -> Matrix<T> {
    Matrix::from_fn(k, k, |a, b| g.black(i + a as i64, j + b as i64))
}

impl<T: Scalar> FriezeGrid<T> {
    fn rule_at(&self, idx: GridIndex) -> RuleViolation<T> {
        let (x, r) = (idx.column(), idx.row());
        let left = self.at(x - 1, r);
        let right = self.at(x + 1, r);
        let above = self.at(x, r - 1);
        let below = self.at(x, r + 1);
        let rhs = left * right - above * below;
        if idx.is_black() {
            RuleViolation {
                rule: LocalRule::BlackSquare,
                at: idx,
                lhs: self.entry(idx).square(),
                rhs,
            }
        } else {
            RuleViolation {
                rule: LocalRule::WhiteMinor,
                at: idx,
                lhs: self.entry(idx),
                rhs,
            }
        }
    }

    /// Every position of the domain (boundary rows included) where a local rule fails.
    pub fn check_local_rules(&self) -> Vec<RuleViolation<T>> {
        let n = self.period() as i64;
        let w = self.width() as i64;
        let mut out = Vec::new();
        for i in 0..n {
            for r in -1..=w {
                for idx in [GridIndex::black(i, i + r), GridIndex::white(i, i + r)] {
                    let v = self.rule_at(idx);
                    if !v.lhs.approx_eq(&v.rhs) {
                        out.push(v);
                    }
                }
            }
        }
        out
    }

    /// Checks every adjacent 3x3 black minor against its centre, 4x4 against 1
    /// and 5x5 against 0, over one full period of window positions.
    pub fn check_tame(&self) -> TameReport<T> {
        let n = self.period() as i64;
        let w = self.width() as i64;
        for size in 3..=5usize {
            for i in 0..n {
                for s in -4..=w {
                    let (ci, cj) = (i - 1, i + s - 1);
                    let m = black_window(self, ci, cj, size);
                    let value = m.det().expect("square window");
                    let expected = match size {
                        3 => self.black(i, i + s),
                        4 => T::one(),
                        _ => T::zero(),
                    };
                    if !value.approx_eq(&expected) {
                        return TameReport {
                            violation: Some(TameViolation {
                                size,
                                corner: GridIndex::black(ci, cj),
                                value,
                                expected,
                            }),
                        };
                    }
                }
            }
        }
        TameReport { violation: None }
    }

    /// `d[i][j] = d[j+3][i+w+2]` on every black and white position of one period.
    pub fn check_glide(&self) -> bool {
        let n = self.period() as i64;
        let w = self.width() as i64;
        (0..n).all(|i| {
            (-4..=w).all(|r| {
                let j = i + r;
                self.black(i, j).approx_eq(&self.black(j + 3, i + w + 2))
                    && self.white(i, j).approx_eq(&self.white(j + 3, i + w + 2))
            })
        })
    }

    fn invariant_under_shift(&self, q: i64) -> bool {
        self.domain().into_iter().all(|idx| {
            let moved = GridIndex {
                i2: idx.i2 + 2 * q,
                j2: idx.j2 + 2 * q,
            };
            self.entry(idx).approx_eq(&self.entry(moved))
        })
    }

    /// Smallest horizontal period in display columns; always divides `2n`.
    pub fn check_periodicity(&self) -> usize {
        let n = self.period() as i64;
        (1..=n)
            .filter(|q| n % q == 0)
            .find(|&q| self.invariant_under_shift(q))
            .map_or(2 * n as usize, |q| 2 * q as usize)
    }
}
