//! Enumeration of positive integer friezes seeded on two adjacent columns.

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::Scalar;
use crate::frieze::{FriezeGrid, ZigZag, ZigZagShape};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("frieze {index} has width {found}, expected {expected}")]
    WidthMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedup {
    None,
    ByTranslation,
    ByDihedral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub width: usize,
    pub bound: u64,
    pub dedup: Dedup,
}

impl SearchConfig {
    pub fn new(width: usize, bound: u64) -> Self {
        Self {
            width,
            bound: bound.max(1),
            dedup: Dedup::None,
        }
    }

    pub fn with_dedup(mut self, dedup: Dedup) -> Self {
        self.dedup = dedup;
        self
    }
}

/// Display rows `x = 0..2n` of an integer frieze.
pub type IntRows = Vec<Vec<i128>>;

/// Seed layout: `seed[r]` sits at display column 1, `seed[w + r]` at column 2.
fn propagate(width: usize, seed: &[i128]) -> Option<IntRows> {
    let n = width + 5;
    let cols = 2 * n + 3;
    let mut grid = vec![vec![0i128; cols]; width];
    for r in 0..width {
        grid[r][1] = seed[r];
        grid[r][2] = seed[width + r];
    }
    let get = |g: &Vec<Vec<i128>>, x: usize, r: i64| -> i128 {
        if r < 0 || r >= width as i64 {
            1
        } else {
            g[r as usize][x]
        }
    };
    for x in 3..cols {
        for r in 0..width {
            let ri = r as i64;
            let centre = grid[r][x - 1];
            let black_centre = (x as i64 - 1 - ri).rem_euclid(2) == 0;
            let lead = if black_centre { centre.checked_mul(centre)? } else { centre };
            let num = lead.checked_add(get(&grid, x - 1, ri - 1).checked_mul(get(&grid, x - 1, ri + 1))?)?;
            let left = grid[r][x - 2];
            if num % left != 0 {
                return None;
            }
            let v = num / left;
            if v <= 0 {
                return None;
            }
            grid[r][x] = v;
        }
    }
    let closed = (0..width).all(|r| grid[r][1] == grid[r][1 + 2 * n] && grid[r][2] == grid[r][2 + 2 * n]);
    if !closed {
        return None;
    }
    Some(
        grid.into_iter()
            .map(|row| (0..2 * n).map(|x| row[if x == 0 { 2 * n } else { x }]).collect())
            .collect(),
    )
}

fn seeds(width: usize, bound: u64, first: u64) -> impl Iterator<Item = Vec<i128>> {
    let m = 2 * width;
    let b = bound as i128;
    let total = (bound as u128).pow((m - 1) as u32);
    (0..total).map(move |mut k| {
        let mut s = vec![first as i128; m];
        for slot in s.iter_mut().skip(1).rev() {
            *slot = (k % b as u128) as i128 + 1;
            k /= b as u128;
        }
        s
    })
}

/// Integer rows of every positive integer frieze whose seed entries lie in `1..=bound`,
/// ordered lexicographically by seed.
pub fn enumerate_rows(width: usize, bound: u64) -> Vec<IntRows> {
    if width == 0 {
        return vec![Vec::new()];
    }
    (1..=bound)
        .into_par_iter()
        .map(|first| {
            seeds(width, bound, first)
                .filter_map(|s| propagate(width, &s))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn to_grid(width: usize, rows: &IntRows) -> FriezeGrid<Rational> {
    let rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| Rational::from_i64(v as i64)).collect())
        .collect();
    FriezeGrid::from_rows(width, &rows).expect("well-formed rows")
}

fn int_key<T: Scalar>(g: &FriezeGrid<T>) -> Vec<String> {
    g.entries().map(Scalar::canonical).collect()
}

fn translates<T: Scalar>(g: &FriezeGrid<T>) -> Vec<FriezeGrid<T>> {
    (0..g.period() as i64).map(|s| g.shifted(s)).collect()
}

fn dihedral_images<T: Scalar>(g: &FriezeGrid<T>) -> Vec<FriezeGrid<T>> {
    let mut out = translates(g);
    out.extend(translates(&g.reflected(0)));
    out
}

fn canonical<T: Scalar>(images: &[FriezeGrid<T>]) -> Vec<String> {
    images.iter().map(int_key).min().expect("nonempty")
}

/// All friezes found under `cfg`, deduplicated as requested.
pub fn enumerate(cfg: &SearchConfig) -> Vec<FriezeGrid<Rational>> {
    let grids: Vec<_> = enumerate_rows(cfg.width, cfg.bound)
        .iter()
        .map(|r| to_grid(cfg.width, r))
        .collect();
    let images: fn(&FriezeGrid<Rational>) -> Vec<FriezeGrid<Rational>> = match cfg.dedup {
        Dedup::None => return grids,
        Dedup::ByTranslation => translates,
        Dedup::ByDihedral => dihedral_images,
    };
    let mut seen = std::collections::HashSet::new();
    grids
        .into_iter()
        .filter(|g| seen.insert(canonical(&images(g))))
        .collect()
}

/// Slow reference: every seed propagated over the rationals and filtered.
pub fn enumerate_brute_force(width: usize, bound: u64) -> Vec<FriezeGrid<Rational>> {
    let shape = ZigZagShape::straight(width, 1);
    (1..=bound)
        .flat_map(|first| seeds(width, bound, first).collect::<Vec<_>>())
        .filter_map(|s| {
            let values = s.iter().map(|&v| Rational::from_i64(v as i64)).collect();
            let z = ZigZag::new(shape.clone(), values).ok()?;
            let g = FriezeGrid::from_zigzag(&z).ok()?;
            let positive = g.entries().all(|v| v.is_integer() && v > &Rational::from_i64(0));
            positive.then_some(g)
        })
        .collect()
}

/// An orbit of the dihedral group generated by translations and the mirror.
#[derive(Clone, Debug)]
pub struct Orbit<T> {
    pub representative: FriezeGrid<T>,
    pub members: Vec<usize>,
}

/// Partitions `friezes` into dihedral orbits; the representative is the
/// lexicographically least image.
pub fn dihedral_orbits<T: Scalar>(friezes: &[FriezeGrid<T>]) -> Result<Vec<Orbit<T>>, SearchError> {
    if let Some(first) = friezes.first() {
        if let Some(index) = friezes.iter().position(|g| g.width() != first.width()) {
            return Err(SearchError::WidthMismatch {
                index,
                expected: first.width(),
                found: friezes[index].width(),
            });
        }
    }
    let mut orbits: Vec<(Vec<String>, Orbit<T>)> = Vec::new();
    for (k, g) in friezes.iter().enumerate() {
        let images = dihedral_images(g);
        let key = canonical(&images);
        match orbits.iter_mut().find(|(kk, _)| *kk == key) {
            Some((_, o)) => o.members.push(k),
            None => {
                let representative = images
                    .into_iter()
                    .min_by_key(int_key)
                    .expect("nonempty");
                orbits.push((
                    key,
                    Orbit {
                        representative,
                        members: vec![k],
                    },
                ))
            }
        }
    }
    Ok(orbits.into_iter().map(|(_, o)| o).collect())
}
