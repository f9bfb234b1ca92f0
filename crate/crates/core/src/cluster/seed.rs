use crate::arith::Scalar;
use crate::frieze::{FriezeGrid, GridIndex, ZigZag, ZigZagShape};

use super::exchange::{c2_square_aw, ExchangeMatrix};
use super::laurent::LaurentPolynomial;
use super::ClusterError;

/// Exchange relation at `k`: `(prod u_i^[b_ik]+ + prod u_i^[-b_ik]+) / u_k`.
pub fn exchange<T: Scalar>(values: &[T], b: &ExchangeMatrix, k: usize) -> Option<T> {
    let (mut pos, mut neg) = (T::one(), T::one());
    for (i, u) in values.iter().enumerate() {
        let e = b.get(i, k);
        let target = if e > 0 { &mut pos } else { &mut neg };
        for _ in 0..e.unsigned_abs() {
            *target = target.clone() * u.clone();
        }
    }
    (pos + neg).checked_div(&values[k])
}

/// Cluster of Laurent polynomials in the initial variables plus its matrix.
///
/// The mutation word from the initial seed is kept so that the seed can be
/// used as a chart; equality ignores it.
#[derive(Clone, Debug)]
pub struct Seed {
    pub cluster: Vec<LaurentPolynomial>,
    pub matrix: ExchangeMatrix,
    path: Vec<usize>,
}

impl PartialEq for Seed {
    fn eq(&self, other: &Self) -> bool {
        self.cluster == other.cluster && self.matrix == other.matrix
    }
}

impl Eq for Seed {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BeltSign {
    Plus,
    Minus,
}

impl Seed {
    pub fn initial(matrix: ExchangeMatrix) -> Self {
        Self {
            cluster: LaurentPolynomial::vars(matrix.size()),
            matrix,
            path: Vec::new(),
        }
    }

    /// Initial seed of the product of C2 and A_w, attached to the two frieze
    /// columns starting at display column 1.
    pub fn c2_square_aw(w: usize) -> Self {
        Self::initial(c2_square_aw(w))
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn rank(&self) -> usize {
        self.cluster.len()
    }

    pub fn mutate(&self, k: usize) -> Result<Self, ClusterError> {
        if k >= self.rank() {
            return Err(ClusterError::VertexOutOfRange(k));
        }
        let fresh = exchange(&self.cluster, &self.matrix, k).ok_or(ClusterError::NonLaurentQuotient(k))?;
        let mut cluster = self.cluster.clone();
        cluster[k] = fresh;
        let mut path = self.path.clone();
        if path.last() == Some(&k) {
            path.pop();
        } else {
            path.push(k);
        }
        Ok(Self {
            cluster,
            matrix: self.matrix.mutate(k),
            path,
        })
    }

    pub fn mutate_word(&self, word: &[usize]) -> Result<Self, ClusterError> {
        word.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// Mutation at every vertex of one bipartite class.
    pub fn belt_step(&self, sign: BeltSign) -> Result<Self, ClusterError> {
        let (plus, minus) = self.matrix.bipartition()?;
        let class = match sign {
            BeltSign::Plus => plus,
            BeltSign::Minus => minus,
        };
        self.mutate_word(&class)
    }

    /// The cluster variables as an unordered set.
    pub fn variable_set(&self) -> Vec<LaurentPolynomial> {
        let mut v = self.cluster.clone();
        v.sort_by_key(|p| p.to_string());
        v
    }

    /// Values of the initial variables when this seed's cluster takes `point`.
    pub fn initial_values<T: Scalar>(&self, point: &[T]) -> Result<Vec<T>, ClusterError> {
        if point.len() != self.rank() {
            return Err(ClusterError::DimensionMismatch {
                expected: self.rank(),
                found: point.len(),
            });
        }
        if let Some(i) = point.iter().position(Scalar::is_negligible) {
            return Err(ClusterError::ZeroSubstitution(i));
        }
        let mut values = point.to_vec();
        let mut matrix = self.matrix.clone();
        for &k in self.path.iter().rev() {
            values[k] = exchange(&values, &matrix, k).ok_or(ClusterError::ZeroSubstitution(k))?;
            matrix = matrix.mutate(k);
        }
        Ok(values)
    }
}

/// Frieze over Laurent polynomials seeded by the initial variables on the two
/// columns starting at display column 1.
pub fn formal_frieze(w: usize) -> Result<FriezeGrid<LaurentPolynomial>, ClusterError> {
    let z = ZigZag::new(ZigZagShape::straight(w, 1), LaurentPolynomial::vars(2 * w))?;
    Ok(FriezeGrid::from_zigzag(&z)?)
}

/// Numeric frieze of the chart attached to `chi`, evaluated at `point`.
pub fn evaluate_frieze<T: Scalar>(chi: &Seed, point: &[T]) -> Result<FriezeGrid<T>, ClusterError> {
    let w = chi.rank() / 2;
    let values = chi.initial_values(point)?;
    let z = ZigZag::new(ZigZagShape::straight(w, 1), values)?;
    Ok(FriezeGrid::from_zigzag(&z)?)
}

/// Exchange matrix read off a double zig-zag shape.
///
/// Vertex `r` is the white cell of row `r`, vertex `w + r` the black one.
/// Horizontal neighbours point right; diagonal neighbours point from the
/// larger display column; vertically stacked cells are joined only when the
/// rows are offset, pointing from the right cell of its row to the left one.
pub fn zigzag_quiver(shape: &ZigZagShape) -> ExchangeMatrix {
    let w = shape.width();
    let m = 2 * w;
    let mut b = vec![vec![0i64; m]; m];
    let vertex = |idx: GridIndex| {
        let r = idx.row() as usize;
        if idx.is_black() {
            w + r
        } else {
            r
        }
    };
    let mut arrow = |p: GridIndex, q: GridIndex| {
        let (a, c) = (vertex(p), vertex(q));
        let (wa, wc) = (a < w, c < w);
        let (fwd, back) = match (wa, wc) {
            (true, false) => (1, 2),
            (false, true) => (2, 1),
            _ => (1, 1),
        };
        b[a][c] = fwd;
        b[c][a] = -back;
    };
    let cols = shape.columns();
    for r in 0..w {
        let c = cols[r];
        let ri = r as i64;
        arrow(GridIndex::at(c, ri), GridIndex::at(c + 1, ri));
        if r + 1 == w {
            continue;
        }
        let d = cols[r + 1];
        for xa in [c, c + 1] {
            for xb in [d, d + 1] {
                let (up, down) = (GridIndex::at(xa, ri), GridIndex::at(xb, ri + 1));
                if (xa - xb).abs() == 1 {
                    if xa > xb {
                        arrow(up, down);
                    } else {
                        arrow(down, up);
                    }
                } else if xa == xb && d != c {
                    if xa == c + 1 {
                        arrow(up, down);
                    } else {
                        arrow(down, up);
                    }
                }
            }
        }
    }
    ExchangeMatrix::new(b).expect("zig-zag quivers are skew-symmetrizable")
}
