use std::collections::BTreeMap;

use super::grid::FriezeError;
use super::index::GridIndex;
use crate::arith::{Matrix, Scalar};

/// Partially known frieze of width `w`: explicit entries plus the boundary
/// and guard rows adjacent to the strip.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialFrieze<T> {
    width: usize,
    known: BTreeMap<GridIndex, T>,
}

impl<T: Scalar> PartialFrieze<T> {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            known: BTreeMap::new(),
        }
    }

    /// Consecutive entries of row `r`, the first one at display column `start`.
    pub fn from_row(width: usize, r: i64, start: i64, values: Vec<T>) -> Self {
        let mut p = Self::new(width);
        for (k, v) in values.into_iter().enumerate() {
            p.insert(GridIndex::at(start + k as i64, r), v);
        }
        p
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, idx: GridIndex, v: T) {
        self.known.insert(idx, v);
    }

    pub fn get(&self, idx: GridIndex) -> Option<T> {
        if let Some(v) = self.known.get(&idx) {
            return Some(v.clone());
        }
        let r = idx.row();
        let w = self.width as i64;
        if r == -1 || r == w {
            Some(T::one())
        } else if (-4..=-2).contains(&r) || (w + 1..=w + 3).contains(&r) {
            Some(T::zero())
        } else {
            None
        }
    }

    /// Next entry of an interior row from the local rule at its west neighbours.
    fn local_rule(&self, idx: GridIndex) -> Option<T> {
        let (x, r) = (idx.column(), idx.row());
        let num = self.get(GridIndex::at(x - 1, r))?;
        let p = self.get(GridIndex::at(x - 1, r - 1))?;
        let q = self.get(GridIndex::at(x - 1, r + 1))?;
        let d = self.get(GridIndex::at(x - 2, r))?;
        let num = if idx.is_black() { num } else { num.square() };
        (num + p * q).checked_div(&d)
    }

    /// Solves the tameness minor conditions for the black entry `target`,
    /// preferring 3x3 windows, then 4x4 and 5x5.
    pub fn extend_through_zero(&self, target: GridIndex) -> Result<T, FriezeError> {
        if !target.is_black() {
            return Err(FriezeError::Underdetermined(target));
        }
        let (ti, tj) = (target.i(), target.j());
        for size in 3..=5i64 {
            for ci in ti - size + 1..=ti {
                for cj in tj - size + 1..=tj {
                    if let Some(v) = self.solve_window(target, ci, cj, size) {
                        return Ok(v);
                    }
                }
            }
        }
        Err(FriezeError::Underdetermined(target))
    }

    fn solve_window(&self, target: GridIndex, ci: i64, cj: i64, size: i64) -> Option<T> {
        let k = size as usize;
        let centre = GridIndex::black(ci + 1, cj + 1);
        let mut cells = Vec::with_capacity(k * k);
        for a in 0..size {
            for b in 0..size {
                let idx = GridIndex::black(ci + a, cj + b);
                if idx == target {
                    cells.push(None);
                } else {
                    cells.push(Some(self.get(idx)?));
                }
            }
        }
        let centre_value = if size == 3 && centre != target {
            Some(self.get(centre)?)
        } else {
            None
        };
        let residual = |x: &T| {
            let m = Matrix::from_fn(k, k, |a, b| {
                cells[a * k + b].clone().unwrap_or_else(|| x.clone())
            });
            let det = m.det().expect("square");
            let rhs = match size {
                3 => centre_value.clone().unwrap_or_else(|| x.clone()),
                4 => T::one(),
                _ => T::zero(),
            };
            det - rhs
        };
        let f0 = residual(&T::zero());
        let slope = residual(&T::one()) - f0.clone();
        (-f0).checked_div(&slope)
    }

    /// Extends interior row `r` east from its last known entry by `count`
    /// entries, using the local rules where possible and tameness otherwise.
    pub fn extend_row(&mut self, r: i64, count: usize) -> Result<Vec<T>, FriezeError> {
        let last = self
            .known
            .keys()
            .filter(|g| g.row() == r)
            .map(|g| g.column())
            .max()
            .ok_or(FriezeError::Underdetermined(GridIndex::at(0, r)))?;
        let mut out = Vec::with_capacity(count);
        for x in last + 1..=last + count as i64 {
            let idx = GridIndex::at(x, r);
            let v = match self.local_rule(idx) {
                Some(v) => v,
                None => self.extend_through_zero(idx)?,
            };
            self.insert(idx, v.clone());
            out.push(v);
        }
        Ok(out)
    }
}
