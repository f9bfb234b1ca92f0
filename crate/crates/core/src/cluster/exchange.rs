use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_integer::Integer;

use super::ClusterError;

/// Skew-symmetrizable integer exchange matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    b: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(b: Vec<Vec<i64>>) -> Result<Self, ClusterError> {
        let m = b.len();
        if b.iter().any(|row| row.len() != m) {
            return Err(ClusterError::NotSquare);
        }
        let out = Self { b };
        out.symmetrizer().ok_or(ClusterError::NotSkewSymmetrizable)?;
        Ok(out)
    }

    pub fn size(&self) -> usize {
        self.b.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.b
    }

    /// Positive `d` with `d_i b_ij = -d_j b_ji`, found by propagating ratios
    /// along the underlying graph and clearing denominators.
    pub fn symmetrizer(&self) -> Option<Vec<i64>> {
        let m = self.size();
        let mut ratio: Vec<Option<(i64, i64)>> = vec![None; m];
        for root in 0..m {
            if ratio[root].is_some() {
                continue;
            }
            if self.b[root][root] != 0 {
                return None;
            }
            ratio[root] = Some((1, 1));
            let mut queue = VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                let (pi, qi) = ratio[i].unwrap();
                for j in 0..m {
                    let (bij, bji) = (self.b[i][j], self.b[j][i]);
                    if bij == 0 && bji == 0 {
                        continue;
                    }
                    if bij == 0 || bji == 0 || bij.signum() == bji.signum() {
                        return None;
                    }
                    // d_j = d_i * |b_ij| / |b_ji|
                    let (mut pj, mut qj) = (pi * bij.abs(), qi * bji.abs());
                    let g = pj.gcd(&qj);
                    pj /= g;
                    qj /= g;
                    match ratio[j] {
                        None => {
                            ratio[j] = Some((pj, qj));
                            queue.push_back(j);
                        }
                        Some((p, q)) if p * qj != pj * q => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let ratio: Vec<(i64, i64)> = ratio.into_iter().map(Option::unwrap).collect();
        let l = ratio.iter().fold(1i64, |acc, &(_, q)| acc.lcm(&q));
        let d: Vec<i64> = ratio.iter().map(|&(p, q)| p * l / q).collect();
        let g = d.iter().fold(0i64, |acc, &x| acc.gcd(&x)).max(1);
        Some(d.into_iter().map(|x| x / g).collect())
    }

    pub fn mutate(&self, k: usize) -> Self {
        let m = self.size();
        let b = &self.b;
        let mut out = b.clone();
        for i in 0..m {
            for j in 0..m {
                out[i][j] = if i == k || j == k {
                    -b[i][j]
                } else if b[i][k] * b[k][j] > 0 {
                    b[i][j] + b[i][k].abs() * b[k][j]
                } else {
                    b[i][j]
                };
            }
        }
        Self { b: out }
    }

    pub fn opposite(&self) -> Self {
        Self {
            b: self.b.iter().map(|r| r.iter().map(|x| -x).collect()).collect(),
        }
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        let m = self.size();
        let mut b = vec![vec![0; m]; m];
        for i in 0..m {
            for j in 0..m {
                b[perm[i]][perm[j]] = self.b[i][j];
            }
        }
        Self { b }
    }

    /// Proper 2-coloring of the underlying graph; the first class holds the
    /// smallest vertex of each component.
    pub fn bipartition(&self) -> Result<(Vec<usize>, Vec<usize>), ClusterError> {
        let m = self.size();
        let mut color: Vec<Option<bool>> = vec![None; m];
        for root in 0..m {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(true);
            let mut queue = VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                let ci = color[i].unwrap();
                for j in (0..m).filter(|&j| self.b[i][j] != 0) {
                    match color[j] {
                        None => {
                            color[j] = Some(!ci);
                            queue.push_back(j);
                        }
                        Some(cj) if cj == ci => return Err(ClusterError::NotBipartite),
                        Some(_) => {}
                    }
                }
            }
        }
        let plus = (0..m).filter(|&i| color[i] == Some(true)).collect();
        let minus = (0..m).filter(|&i| color[i] == Some(false)).collect();
        Ok((plus, minus))
    }
}

impl fmt::Debug for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.b)
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.b {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The matrix of the product of C2 and A_w with the alternating orientation.
///
/// Vertices `0..w` are the short roots (one per row), `w..2w` the long ones.
pub fn c2_square_aw(w: usize) -> ExchangeMatrix {
    let m = 2 * w;
    let mut b = vec![vec![0; m]; m];
    for i in 0..w {
        let s = if i % 2 == 0 { 1 } else { -1 };
        b[i][w + i] = s;
        b[w + i][i] = -2 * s;
        if i + 1 < w {
            b[i][i + 1] = -s;
            b[i + 1][i] = s;
            b[w + i][w + i + 1] = s;
            b[w + i + 1][w + i] = -s;
        }
    }
    ExchangeMatrix { b }
}

/// Valued quiver: arrow `i -> j` with weight pair `(|b_ij|, |b_ji|)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValuedQuiver {
    vertices: usize,
    arrows: BTreeMap<(usize, usize), (u64, u64)>,
}

impl ValuedQuiver {
    pub fn of(b: &ExchangeMatrix) -> Self {
        let m = b.size();
        let mut arrows = BTreeMap::new();
        for i in 0..m {
            for j in 0..m {
                if b.get(i, j) > 0 {
                    arrows.insert((i, j), (b.get(i, j) as u64, b.get(j, i).unsigned_abs()));
                }
            }
        }
        Self { vertices: m, arrows }
    }

    pub fn new(vertices: usize, arrows: impl IntoIterator<Item = ((usize, usize), (u64, u64))>) -> Self {
        Self {
            vertices,
            arrows: arrows.into_iter().collect(),
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &BTreeMap<(usize, usize), (u64, u64)> {
        &self.arrows
    }

    pub fn matrix(&self) -> Result<ExchangeMatrix, ClusterError> {
        let m = self.vertices;
        let mut b = vec![vec![0i64; m]; m];
        for (&(i, j), &(p, q)) in &self.arrows {
            if i >= m || j >= m {
                return Err(ClusterError::VertexOutOfRange(i.max(j)));
            }
            if b[i][j] != 0 {
                return Err(ClusterError::NotSkewSymmetrizable);
            }
            b[i][j] = p as i64;
            b[j][i] = -(q as i64);
        }
        ExchangeMatrix::new(b)
    }

    /// Composes paths through `k`, cancels 2-cycles, then reverses arrows at `k`.
    pub fn mutate(&self, k: usize) -> Self {
        let mut signed: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (&(i, j), &(p, q)) in &self.arrows {
            *signed.entry((i, j)).or_default() += p as i64;
            *signed.entry((j, i)).or_default() -= q as i64;
        }
        let ins: Vec<_> = self.arrows.iter().filter(|(&(_, j), _)| j == k).collect();
        let outs: Vec<_> = self.arrows.iter().filter(|(&(i, _), _)| i == k).collect();
        for (&(i, _), &(a, b)) in &ins {
            for (&(_, j), &(c, d)) in &outs {
                *signed.entry((i, j)).or_default() += (a * c) as i64;
                *signed.entry((j, i)).or_default() -= (b * d) as i64;
            }
        }
        let mut arrows = BTreeMap::new();
        for (&(i, j), &v) in &signed {
            if v > 0 {
                let back = signed.get(&(j, i)).copied().unwrap_or(0).unsigned_abs();
                let key = if i == k || j == k { (j, i) } else { (i, j) };
                let val = if i == k || j == k { (back, v as u64) } else { (v as u64, back) };
                arrows.insert(key, val);
            }
        }
        Self {
            vertices: self.vertices,
            arrows,
        }
    }
}
