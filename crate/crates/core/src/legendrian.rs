//! Lifted polygons in 4-space, the symplectic forms pairing their vertices,
//! and the passage between polygons and friezes.

use num_complex::Complex64;
use thiserror::Error;

use crate::arith::{float_tolerance, Matrix, Scalar};
use crate::frieze::FriezeGrid;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LegendrianError {
    #[error("normalization needs an odd number of vertices, got {0}")]
    EvenPeriod(usize),
    #[error("vertices {0} and {0}+2 pair to zero")]
    DegenerateGamma(usize),
    #[error("vertices {0} and {0}+1 are not orthogonal")]
    NotIsotropic(usize),
    #[error("normalization fails between vertices {0} and {1}")]
    NormalizationViolated(i64, i64),
    #[error("four vertices ending at {0} are dependent")]
    SingularFrame(i64),
    #[error("polygon needs at least 5 vertices, got {0}")]
    TooFewVertices(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormVariant {
    Omega,
    OmegaCheck,
}

/// One member of the two-family of forms indexed by a scalar parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticForm<T> {
    pub a: T,
    pub variant: FormVariant,
}

impl<T: Scalar> SymplecticForm<T> {
    pub fn omega(a: T) -> Self {
        Self {
            a,
            variant: FormVariant::Omega,
        }
    }

    pub fn omega_check(a: T) -> Self {
        Self {
            a,
            variant: FormVariant::OmegaCheck,
        }
    }

    pub fn matrix(&self) -> Matrix<T> {
        let (z, o, a) = (T::zero(), T::one(), self.a.clone());
        let rows = match self.variant {
            FormVariant::Omega => vec![
                vec![z.clone(), z.clone(), o.clone(), a.clone()],
                vec![z.clone(), z.clone(), z.clone(), o.clone()],
                vec![-o.clone(), z.clone(), z.clone(), z.clone()],
                vec![-a, -o, z.clone(), z],
            ],
            FormVariant::OmegaCheck => vec![
                vec![z.clone(), z.clone(), o.clone(), z.clone()],
                vec![z.clone(), z.clone(), -a.clone(), o.clone()],
                vec![-o.clone(), a, z.clone(), z.clone()],
                vec![z.clone(), -o, z.clone(), z],
            ],
        };
        Matrix::from_rows(rows).expect("4x4")
    }

    pub fn pair(&self, u: &[T], v: &[T]) -> T {
        let fv = self.matrix().mul_vec(v).expect("4-vector");
        u.iter()
            .zip(fv)
            .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y)
    }
}

pub type Vertex<T> = [T; 4];

/// Antiperiodic vertex sequence; `vertex(m)` for `m` in `first..first+n` is stored,
/// everything else follows from `V_{m+n} = -V_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon<T> {
    pub vertices: Vec<Vertex<T>>,
    pub form: SymplecticForm<T>,
    pub first: i64,
}

impl<T: Scalar> Polygon<T> {
    pub fn new(vertices: Vec<Vertex<T>>, form: SymplecticForm<T>, first: i64) -> Self {
        Self {
            vertices,
            form,
            first,
        }
    }

    pub fn period(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, m: i64) -> Vertex<T> {
        let n = self.period() as i64;
        let k = m - self.first;
        let v = self.vertices[k.rem_euclid(n) as usize].clone();
        if k.div_euclid(n).rem_euclid(2) == 1 {
            v.map(|x| -x)
        } else {
            v
        }
    }

    pub fn omega(&self, p: i64, q: i64) -> T {
        self.form.pair(&self.vertex(p), &self.vertex(q))
    }

    /// First failing pair among `w(V_m, V_{m+1}) = 0` and `w(V_m, V_{m+2}) = 1`.
    pub fn normalization_violation(&self) -> Option<(i64, i64)> {
        let n = self.period() as i64;
        (self.first..self.first + n).find_map(|m| {
            if !self.omega(m, m + 1).is_negligible() {
                Some((m, m + 1))
            } else if !self.omega(m, m + 2).approx_eq(&T::one()) {
                Some((m, m + 2))
            } else {
                None
            }
        })
    }

    /// Applies `s` to every vertex.
    pub fn transformed(&self, s: &Matrix<T>) -> Self {
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                let u = s.mul_vec(v).expect("4x4");
                [u[0].clone(), u[1].clone(), u[2].clone(), u[3].clone()]
            })
            .collect();
        Self {
            vertices,
            form: self.form.clone(),
            first: self.first,
        }
    }

    pub fn frame(&self, cols: [i64; 4]) -> Matrix<T> {
        let vs = cols.map(|m| self.vertex(m));
        Matrix::from_fn(4, 4, |r, c| vs[c][r].clone())
    }
}

/// Columns `m = i0-1 .. i0+n-2` of the black block with rows `i0..i0+3`,
/// paired by the check form at `a_{i0}`.
pub fn polygon_from_frieze<T: Scalar>(g: &FriezeGrid<T>, i0: i64) -> Polygon<T> {
    let n = g.period() as i64;
    let vertices = (i0 - 1..i0 - 1 + n)
        .map(|m| [0, 1, 2, 3].map(|r| g.black(i0 + r, m)))
        .collect();
    Polygon::new(vertices, SymplecticForm::omega_check(g.black(i0, i0)), i0 - 1)
}

/// Black entries `d[i][j] = w(V_{i-3}, V_j)`, whites from adjacent minors.
pub fn frieze_from_polygon<T: Scalar>(p: &Polygon<T>) -> Result<FriezeGrid<T>, LegendrianError> {
    let n = p.period();
    if n < 5 {
        return Err(LegendrianError::TooFewVertices(n));
    }
    if let Some((i, j)) = p.normalization_violation() {
        return Err(LegendrianError::NormalizationViolated(i, j));
    }
    let blacks = FriezeGrid::from_fn(n - 5, |idx| {
        if idx.is_black() {
            p.omega(idx.i() - 3, idx.j())
        } else {
            T::zero()
        }
    });
    Ok(blacks.fill_whites())
}

/// `(black, white)` at `(i, j)` from 4x4 vertex determinants; the white value
/// is the entry `d[i-1/2][j-1/2]`.
pub fn frieze_entries_by_4x4<T: Scalar>(p: &Polygon<T>, i: i64, j: i64) -> (T, T) {
    let black = p.frame([i - 4, i - 3, i - 2, j]).det().expect("square");
    let white = p.frame([i - 4, i - 3, j - 1, j]).det().expect("square");
    (black, white)
}

/// The 4x4 black block with rows `i..i+3` and columns `j-3..j`.
pub fn black_block<T: Scalar>(g: &FriezeGrid<T>, i: i64, j: i64) -> Matrix<T> {
    Matrix::from_fn(4, 4, |r, c| g.black(i + r as i64, j - 3 + c as i64))
}

/// Every block satisfies `D^t W D = Omega_{a_j}` with `W` the check form at `a_i`.
pub fn block_symplectic_check<T: Scalar>(g: &FriezeGrid<T>) -> bool {
    let n = g.period() as i64;
    (0..n).all(|i| {
        let check = SymplecticForm::omega_check(g.black(i, i)).matrix();
        (i..i + n).all(|j| {
            let d = black_block(g, i, j);
            let lhs = d.transpose().mul(&check).and_then(|m| m.mul(&d)).expect("4x4");
            lhs.approx_eq(&SymplecticForm::omega(g.black(j, j)).matrix())
        })
    })
}

/// Rescales `raw` (odd length, consecutive vertices orthogonal) so that
/// `w(V_m, V_{m+2}) = 1` with the antiperiodic wrap. Of the two solutions
/// the one whose first factor has positive real part (then imaginary part) is kept.
pub fn normalize_lift(
    raw: &[Vertex<Complex64>],
    form: &SymplecticForm<Complex64>,
) -> Result<Polygon<Complex64>, LegendrianError> {
    let n = raw.len();
    if n.is_multiple_of(2) {
        return Err(LegendrianError::EvenPeriod(n));
    }
    if n < 5 {
        return Err(LegendrianError::TooFewVertices(n));
    }
    let tol = float_tolerance();
    for i in 0..n {
        if form.pair(&raw[i], &raw[(i + 1) % n]).norm() > tol {
            return Err(LegendrianError::NotIsotropic(i));
        }
    }
    // lambda_i lambda_{i+2} = c_i, with sign -1 where i+2 wraps.
    let c: Vec<Complex64> = (0..n)
        .map(|i| {
            let gamma = form.pair(&raw[i], &raw[(i + 2) % n]);
            if gamma.norm() <= tol {
                return Err(LegendrianError::DegenerateGamma(i));
            }
            let sign = if i + 2 >= n { -1.0 } else { 1.0 };
            Ok(Complex64::new(sign, 0.0) / gamma)
        })
        .collect::<Result<_, _>>()?;
    let cycle: Vec<usize> = (0..n).map(|t| (2 * t) % n).collect();
    let ratio = cycle.iter().enumerate().fold(Complex64::new(1.0, 0.0), |acc, (t, &s)| {
        if t % 2 == 0 {
            acc * c[s]
        } else {
            acc / c[s]
        }
    });
    let mut l0 = ratio.sqrt();
    if l0.re < -tol || (l0.re.abs() <= tol && l0.im < 0.0) {
        l0 = -l0;
    }
    let mut lambda = vec![Complex64::new(0.0, 0.0); n];
    lambda[0] = l0;
    for t in 0..n - 1 {
        let (s, next) = (cycle[t], cycle[t + 1]);
        lambda[next] = c[s] / lambda[s];
    }
    let vertices = raw
        .iter()
        .zip(&lambda)
        .map(|(v, l)| v.map(|x| x * l))
        .collect();
    Ok(Polygon::new(vertices, form.clone(), 0))
}

/// `(a, b)` indexed by vertex position `m = first..first+n`, solving
/// `V_m = a_m V_{m-1} - b_m V_{m-2} + c V_{m-3} - d V_{m-4}` by Cramer's rule.
pub fn coeffs_from_polygon<T: Scalar>(p: &Polygon<T>) -> Result<(Vec<T>, Vec<T>), LegendrianError> {
    let n = p.period() as i64;
    let mut a = Vec::with_capacity(n as usize);
    let mut b = Vec::with_capacity(n as usize);
    for m in p.first..p.first + n {
        let frame = p.frame([m - 1, m - 2, m - 3, m - 4]);
        let det = frame.det().expect("square");
        if det.is_negligible() {
            return Err(LegendrianError::SingularFrame(m));
        }
        let target = p.vertex(m);
        let solve = |k: usize| {
            let mut f = frame.clone();
            for (r, t) in target.iter().enumerate() {
                f.set(r, k, t.clone());
            }
            f.det().expect("square").checked_div(&det).expect("nonzero")
        };
        a.push(solve(0));
        b.push(-solve(1));
    }
    Ok((a, b))
}
