#![allow(dead_code)]

use symplectic_frieze::arith::{ints, Scalar};
use symplectic_frieze::{FriezeGrid, Gaussian, Rational, RationalFrieze};

pub fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

pub fn qs(v: &[i64]) -> Vec<Rational> {
    ints(v)
}

/// Grid from displayed rows, each listing display columns `0..2n`.
pub fn grid(width: usize, rows: &[&[i64]]) -> RationalFrieze {
    let rows: Vec<Vec<Rational>> = rows.iter().map(|r| qs(r)).collect();
    FriezeGrid::from_rows(width, &rows).expect("fixture rows")
}

pub fn constant_rows(width: usize, rows: &[(i64, i64)]) -> RationalFrieze {
    let n = width + 5;
    let rows: Vec<Vec<i64>> = rows
        .iter()
        .enumerate()
        .map(|(r, &(black, white))| {
            (0..2 * n as i64)
                .map(|x| if (x - r as i64) % 2 == 0 { black } else { white })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    grid(width, &refs)
}

pub struct Fixture {
    pub name: &'static str,
    pub width: usize,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub rows: Vec<Vec<i64>>,
    pub period: usize,
}

impl Fixture {
    pub fn grid(&self) -> RationalFrieze {
        let refs: Vec<&[i64]> = self.rows.iter().map(Vec::as_slice).collect();
        grid(self.width, &refs)
    }

    pub fn coeffs(&self) -> (Vec<Rational>, Vec<Rational>) {
        (qs(&self.a), qs(&self.b))
    }

    pub fn propagated(&self) -> RationalFrieze {
        let (a, b) = self.coeffs();
        FriezeGrid::from_coeffs(&a, &b).expect("superperiodic fixture")
    }
}

/// Width 1 integer frieze with zero and negative entries.
pub fn fw10() -> Fixture {
    Fixture {
        name: "width-1 signed",
        width: 1,
        a: vec![0, 1, -1, 0, 1, -1],
        b: vec![-1, -1, -2, -1, -1, -2],
        rows: vec![vec![0, -1, 1, -2, -1, -1, 0, -1, 1, -2, -1, -1]],
        period: 6,
    }
}

pub fn friw1() -> Fixture {
    Fixture {
        name: "width-1 positive",
        width: 1,
        a: vec![1, 3, 2, 1, 3, 2],
        b: vec![1, 2, 5, 1, 2, 5],
        rows: vec![vec![1, 2, 3, 5, 2, 1, 1, 2, 3, 5, 2, 1]],
        period: 6,
    }
}

pub fn friw2() -> Fixture {
    Fixture {
        name: "width-2 positive",
        width: 2,
        a: vec![6, 3, 1, 3, 4, 2, 1],
        b: vec![3, 14, 1, 2, 6, 5, 1],
        rows: vec![
            vec![6, 14, 3, 1, 1, 2, 3, 6, 4, 5, 2, 1, 1, 3],
            vec![6, 4, 5, 2, 1, 1, 3, 6, 14, 3, 1, 1, 2, 3],
        ],
        period: 14,
    }
}

pub fn friw3() -> Fixture {
    Fixture {
        name: "width-3 positive",
        width: 3,
        a: vec![2, 4, 4, 3, 1, 4, 10, 1],
        b: vec![1, 5, 6, 6, 2, 1, 30, 4],
        rows: vec![
            vec![2, 5, 4, 6, 4, 6, 3, 2, 1, 1, 4, 30, 10, 4, 1, 1],
            vec![1, 3, 14, 10, 20, 6, 3, 1, 1, 3, 14, 10, 20, 6, 3, 1],
            vec![1, 1, 4, 30, 10, 4, 1, 1, 2, 5, 4, 6, 4, 6, 3, 2],
        ],
        period: 16,
    }
}

/// The signed companion of the width-3 fixture, read from its display.
pub fn friw3_twisted_display() -> RationalFrieze {
    grid(
        3,
        &[
            &[-1, 1, -2, 5, -4, 6, -4, 6, -3, 2, -1, 1, -4, 30, -10, 4],
            &[3, 1, 1, 3, 14, 10, 20, 6, 3, 1, 1, 3, 14, 10, 20, 6],
            &[-3, 2, -1, 1, -4, 30, -10, 4, -1, 1, -2, 5, -4, 6, -4, 6],
        ],
    )
}

/// Width 1: zero blacks, whites -1.
pub fn sing1() -> RationalFrieze {
    constant_rows(1, &[(0, -1)])
}

/// Width 1 over Gaussian rationals: blacks alternate i, -i; whites zero.
pub fn sing11() -> FriezeGrid<Gaussian> {
    let i = Gaussian::new(q(0), q(1));
    let row: Vec<Gaussian> = (0..12)
        .map(|x| match x % 4 {
            0 => i.clone(),
            2 => -i.clone(),
            _ => Gaussian::from_i64(0),
        })
        .collect();
    FriezeGrid::from_rows(1, &[row]).expect("fixture rows")
}

/// Width 2, every interior entry zero.
pub fn nonsing1() -> RationalFrieze {
    constant_rows(2, &[(0, 0), (0, 0)])
}

/// Width 7: zero rows around a middle row of black -1 and white 1.
pub fn sing7() -> RationalFrieze {
    let mut rows = vec![(0, 0); 7];
    rows[3] = (-1, 1);
    constant_rows(7, &rows)
}

pub fn golden() -> Vec<Fixture> {
    vec![fw10(), friw1(), friw2(), friw3()]
}
