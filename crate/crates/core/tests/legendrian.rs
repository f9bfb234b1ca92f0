mod common;

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use symplectic_frieze::legendrian::{
    block_symplectic_check, coeffs_from_polygon, frieze_entries_by_4x4, frieze_from_polygon, normalize_lift,
    polygon_from_frieze, LegendrianError, Polygon, SymplecticForm, Vertex,
};
use symplectic_frieze::{FriezeGrid, Matrix, Rational, RationalFrieze, ZigZag, ZigZagShape};

/// `v -> v + t w(u, v) u`.
fn transvection(form: &SymplecticForm<Rational>, u: [i64; 4], t: i64) -> Matrix<Rational> {
    let u = u.map(q);
    let wu = form.matrix().transpose().mul_vec(&u).unwrap();
    Matrix::from_fn(4, 4, |r, c| {
        let id = if r == c { q(1) } else { q(0) };
        id + q(t) * u[r].clone() * wu[c].clone()
    })
}

fn check_round_trip(g: &RationalFrieze) {
    let n = g.period() as i64;
    for i0 in 0..n {
        let p = polygon_from_frieze(g, i0);
        assert_eq!(p.period(), g.period());
        assert!(p.normalization_violation().is_none(), "i0={i0}");
        assert_eq!(frieze_from_polygon(&p).unwrap(), *g, "i0={i0}");
    }
}

fn c64(v: [f64; 4]) -> Vertex<Complex64> {
    v.map(|x| Complex64::new(x, 0.0))
}

#[test]
fn fixtures_round_trip_from_every_anchor() {
    for f in [friw1(), friw2(), friw3()] {
        check_round_trip(&f.grid());
    }
}

#[test]
fn antiperiodic_vertices() {
    let p = polygon_from_frieze(&friw3().grid(), 2);
    let n = p.period() as i64;
    for m in -4..12 {
        assert_eq!(p.vertex(m + n), p.vertex(m).map(|x| -x));
        assert_eq!(p.omega(m, m + 1), q(0));
        assert_eq!(p.omega(m, m + 2), q(1));
    }
}

#[test]
fn four_by_four_determinants() {
    let g = friw3().grid();
    let p = polygon_from_frieze(&g, 1);
    for i in 0..g.period() as i64 {
        for j in i..i + 3 {
            let (black, white) = frieze_entries_by_4x4(&p, i, j);
            assert_eq!(black, g.black(i, j), "({i},{j})");
            assert_eq!(white, g.white(i - 1, j - 1), "({i},{j})");
        }
    }
}

#[test]
fn polygon_coefficients_follow_labels() {
    for f in [friw2(), friw3()] {
        let g = f.grid();
        let (a, b) = f.coeffs();
        let n = g.period() as i64;
        for i0 in 0..3 {
            let p = polygon_from_frieze(&g, i0);
            let (pa, pb) = coeffs_from_polygon(&p).unwrap();
            for k in 0..n {
                let m = (p.first + k).rem_euclid(n) as usize;
                assert_eq!((&pa[k as usize], &pb[k as usize]), (&a[m], &b[m]), "{} i0={i0} k={k}", f.name);
            }
        }
    }
}

#[test]
fn symplectic_motions_preserve_the_frieze() {
    let g = friw2().grid();
    let p = polygon_from_frieze(&g, 0);
    let s = transvection(&p.form, [1, 2, 0, -1], 3)
        .mul(&transvection(&p.form, [0, 1, 1, 4], -2))
        .unwrap();
    let moved = p.transformed(&s);
    assert_ne!(moved.vertices, p.vertices);
    assert_eq!(frieze_from_polygon(&moved).unwrap(), g);
    assert_eq!(coeffs_from_polygon(&moved).unwrap(), coeffs_from_polygon(&p).unwrap());
}

#[test]
fn block_identity() {
    for f in golden() {
        assert!(block_symplectic_check(&f.grid()), "{}", f.name);
    }
}

#[test]
fn form_matrices_are_skew() {
    for form in [SymplecticForm::omega(q(3)), SymplecticForm::omega_check(q(-2))] {
        let m = form.matrix();
        assert_eq!(m.transpose(), m.neg());
        assert_eq!(m.det().unwrap(), q(1));
    }
}

#[test]
fn polygon_errors() {
    let form = SymplecticForm::omega_check(q(1));
    let few = Polygon::new(vec![[q(1), q(0), q(0), q(0)]; 4], form.clone(), 0);
    assert_eq!(frieze_from_polygon(&few), Err(LegendrianError::TooFewVertices(4)));
    let mut p = polygon_from_frieze(&friw2().grid(), 0);
    p.vertices[3][0] = p.vertices[3][0].clone() + q(1);
    assert!(matches!(frieze_from_polygon(&p), Err(LegendrianError::NormalizationViolated(..))));
    let flat = Polygon::new(vec![[q(1), q(0), q(0), q(0)]; 5], form, 0);
    assert!(matches!(coeffs_from_polygon(&flat), Err(LegendrianError::SingularFrame(_))));
}

#[test]
fn normalization_errors() {
    let form = SymplecticForm::omega_check(Complex64::new(1.0, 0.0));
    let e1 = c64([1.0, 0.0, 0.0, 0.0]);
    assert_eq!(normalize_lift(&vec![e1; 6], &form), Err(LegendrianError::EvenPeriod(6)));
    assert_eq!(normalize_lift(&[e1; 3], &form), Err(LegendrianError::TooFewVertices(3)));
    let e3 = c64([0.0, 0.0, 1.0, 0.0]);
    assert_eq!(normalize_lift(&[e1, e3, e1, e1, e1], &form), Err(LegendrianError::NotIsotropic(0)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_friezes_round_trip(w in 1usize..=3, seed in prop::collection::vec(1i64..=5, 6), i0 in 0i64..6) {
        let z = ZigZag::new(ZigZagShape::straight(w, 1), qs(&seed[..2 * w])).unwrap();
        let g: RationalFrieze = match FriezeGrid::from_zigzag(&z) {
            Ok(g) => g,
            Err(_) => return Err(TestCaseError::reject("singular seed")),
        };
        let p = polygon_from_frieze(&g, i0);
        prop_assert_eq!(frieze_from_polygon(&p).unwrap(), g.clone());
        prop_assert!(block_symplectic_check(&g));
        let (a, b) = g.extract_coeffs();
        let (pa, pb) = coeffs_from_polygon(&p).unwrap();
        let n = g.period() as i64;
        let m = (p.first).rem_euclid(n) as usize;
        prop_assert_eq!((&pa[0], &pb[0]), (&a[m], &b[m]));
    }

    #[test]
    fn normalization_undoes_rescaling(scales in prop::collection::vec((0.3f64..3.0, -2.0f64..2.0), 7)) {
        use num_traits::ToPrimitive;
        let p = polygon_from_frieze(&friw2().grid(), 1);
        let c = |x: &Rational| Complex64::new(x.to_f64().unwrap(), 0.0);
        let exact: Vec<Vertex<Complex64>> = p.vertices.iter().map(|v| [c(&v[0]), c(&v[1]), c(&v[2]), c(&v[3])]).collect();
        let raw: Vec<Vertex<Complex64>> = exact
            .iter()
            .zip(&scales)
            .map(|(v, &(re, im))| v.map(|x| x * Complex64::new(re, im)))
            .collect();
        let form = SymplecticForm::omega_check(c(&p.form.a));
        let back = normalize_lift(&raw, &form).unwrap();
        prop_assert!(back.normalization_violation().is_none());
        let close = |s: f64| back.vertices.iter().zip(&exact).all(|(u, v)| u.iter().zip(v).all(|(x, y)| (x - y * s).norm() < 1e-7));
        prop_assert!(close(1.0) || close(-1.0));
    }
}
