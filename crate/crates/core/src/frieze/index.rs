use std::fmt;

/// Doubled lattice coordinates: `(2i, 2j)` for the black entry `d[i][j]`,
/// `(2i+1, 2j+1)` for the white entry between `d[i][j]` and `d[i+1][j+1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridIndex {
    pub i2: i64,
    pub j2: i64,
}

impl GridIndex {
    pub fn new(i2: i64, j2: i64) -> Option<Self> {
        ((i2 - j2).rem_euclid(2) == 0).then_some(Self { i2, j2 })
    }

    pub fn black(i: i64, j: i64) -> Self {
        Self {
            i2: 2 * i,
            j2: 2 * j,
        }
    }

    pub fn white(i: i64, j: i64) -> Self {
        Self {
            i2: 2 * i + 1,
            j2: 2 * j + 1,
        }
    }

    /// Cell at display column `x` and row `r`; black iff `x ≡ r (mod 2)`.
    pub fn at(x: i64, r: i64) -> Self {
        Self {
            i2: x - r,
            j2: x + r,
        }
    }

    pub fn is_black(self) -> bool {
        self.i2.rem_euclid(2) == 0
    }

    pub fn i(self) -> i64 {
        self.i2.div_euclid(2)
    }

    pub fn j(self) -> i64 {
        self.j2.div_euclid(2)
    }

    /// Row offset `j - i`; `0..w` are the interior rows.
    pub fn row(self) -> i64 {
        (self.j2 - self.i2) / 2
    }

    pub fn column(self) -> i64 {
        (self.i2 + self.j2) / 2
    }

    pub fn shift(self, dx: i64, dr: i64) -> Self {
        Self::at(self.column() + dx, self.row() + dr)
    }
}

impl fmt::Display for GridIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_black() {
            write!(f, "d[{},{}]", self.i(), self.j())
        } else {
            write!(f, "d[{}+1/2,{}+1/2]", self.i(), self.j())
        }
    }
}
