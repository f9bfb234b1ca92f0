use super::grid::{FriezeError, FriezeGrid};
use super::index::GridIndex;
use crate::arith::Scalar;

/// Shape of a double zig-zag: row `r` holds the two adjacent cells at display
/// columns `columns[r]` and `columns[r] + 1`; consecutive rows differ by at most one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZigZagShape {
    columns: Vec<i64>,
}

impl ZigZagShape {
    pub fn new(columns: Vec<i64>) -> Result<Self, FriezeError> {
        if columns.is_empty() {
            return Err(FriezeError::MalformedZigZag("no rows".into()));
        }
        if let Some(r) = columns.windows(2).position(|p| (p[1] - p[0]).abs() > 1) {
            return Err(FriezeError::MalformedZigZag(format!(
                "rows {r} and {} are not adjacent",
                r + 1
            )));
        }
        Ok(Self { columns })
    }

    /// Two consecutive full columns starting at display column `start`.
    pub fn straight(width: usize, start: i64) -> Self {
        Self {
            columns: vec![start; width],
        }
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[i64] {
        &self.columns
    }

    pub fn left(&self, r: usize) -> GridIndex {
        GridIndex::at(self.columns[r], r as i64)
    }

    pub fn right(&self, r: usize) -> GridIndex {
        GridIndex::at(self.columns[r] + 1, r as i64)
    }

    pub fn white_cell(&self, r: usize) -> GridIndex {
        let l = self.left(r);
        if l.is_black() {
            self.right(r)
        } else {
            l
        }
    }

    pub fn black_cell(&self, r: usize) -> GridIndex {
        let l = self.left(r);
        if l.is_black() {
            l
        } else {
            self.right(r)
        }
    }

    /// Cells ordered white of every row, then black of every row.
    pub fn cells(&self) -> Vec<GridIndex> {
        let w = self.width();
        (0..w)
            .map(|r| self.white_cell(r))
            .chain((0..w).map(|r| self.black_cell(r)))
            .collect()
    }

    pub fn contains(&self, idx: GridIndex) -> bool {
        let r = idx.row();
        r >= 0
            && (r as usize) < self.width()
            && matches!(idx.column() - self.columns[r as usize], 0 | 1)
    }

    /// Shape after moving the cell `idx` two columns left or right, if valid.
    pub fn moved(&self, idx: GridIndex) -> Option<(Self, GridIndex)> {
        let r = idx.row();
        if !self.contains(idx) {
            return None;
        }
        let ru = r as usize;
        let c = self.columns[ru];
        let (target, new_c) = if idx.column() == c {
            (idx.shift(2, 0), c + 1)
        } else {
            (idx.shift(-2, 0), c - 1)
        };
        let mut columns = self.columns.clone();
        columns[ru] = new_c;
        let shape = Self::new(columns).ok()?;
        let mid = (idx.column() + target.column()) / 2;
        for rr in [r - 1, r + 1] {
            if rr >= 0 && (rr as usize) < self.width() && !self.contains(GridIndex::at(mid, rr)) {
                return None;
            }
        }
        Some((shape, target))
    }

    /// All shapes whose first row starts in columns `0..period`.
    pub fn enumerate(width: usize, period: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for start in 0..period as i64 {
            let mut stack = vec![vec![start]];
            while let Some(cols) = stack.pop() {
                if cols.len() == width {
                    out.push(Self { columns: cols });
                    continue;
                }
                let last = *cols.last().unwrap();
                for d in [1, 0, -1] {
                    let mut next = cols.clone();
                    next.push(last + d);
                    stack.push(next);
                }
            }
        }
        out
    }
}

/// Values on a double zig-zag, aligned with [`ZigZagShape::cells`].
#[derive(Clone, Debug, PartialEq)]
pub struct ZigZag<T> {
    pub shape: ZigZagShape,
    pub values: Vec<T>,
}

impl<T: Scalar> ZigZag<T> {
    pub fn new(shape: ZigZagShape, values: Vec<T>) -> Result<Self, FriezeError> {
        if values.len() != 2 * shape.width() {
            return Err(FriezeError::WrongLength {
                expected: 2 * shape.width(),
                found: values.len(),
            });
        }
        Ok(Self { shape, values })
    }

    /// Two consecutive columns; `whites[r]`, `blacks[r]` are the row-`r` entries.
    pub fn straight(start: i64, whites: Vec<T>, blacks: Vec<T>) -> Result<Self, FriezeError> {
        let shape = ZigZagShape::straight(whites.len(), start);
        let mut values = whites;
        values.extend(blacks);
        Self::new(shape, values)
    }

    pub fn read(grid: &FriezeGrid<T>, shape: ZigZagShape) -> Self {
        let values = shape.cells().into_iter().map(|c| grid.entry(c)).collect();
        Self { shape, values }
    }

    pub fn entries(&self) -> Vec<(GridIndex, T)> {
        self.shape.cells().into_iter().zip(self.values.iter().cloned()).collect()
    }
}

impl<T: Scalar> FriezeGrid<T> {
    /// A double zig-zag of nonzero entries, searching every shape of one period.
    pub fn find_nonzero_double_zigzag(&self) -> Option<ZigZag<T>> {
        let w = self.width();
        if w == 0 {
            return None;
        }
        let nonzero = |x: i64, r: usize| {
            !self.at(x, r as i64).is_negligible() && !self.at(x + 1, r as i64).is_negligible()
        };
        for start in 0..self.columns() as i64 {
            if !nonzero(start, 0) {
                continue;
            }
            let mut stack = vec![vec![start]];
            while let Some(cols) = stack.pop() {
                if cols.len() == w {
                    let shape = ZigZagShape { columns: cols };
                    return Some(ZigZag::read(self, shape));
                }
                let last = *cols.last().unwrap();
                for d in [1, 0, -1] {
                    if nonzero(last + d, cols.len()) {
                        let mut next = cols.clone();
                        next.push(last + d);
                        stack.push(next);
                    }
                }
            }
        }
        None
    }
}
