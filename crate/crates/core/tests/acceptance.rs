//! End-to-end acceptance run. Prints one line per criterion and exits
//! nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;
use symplectic_frieze::arith::{Matrix, Scalar};
use symplectic_frieze::cluster::{formal_frieze, BeltSign, ClusterError, ExchangeMatrix, LaurentPolynomial, Seed};
use symplectic_frieze::frieze::{black_by_determinant, white_by_determinant, PartialFrieze};
use symplectic_frieze::legendrian::{
    block_symplectic_check, frieze_entries_by_4x4, frieze_from_polygon, normalize_lift, polygon_from_frieze, Polygon,
    SymplecticForm,
};
use symplectic_frieze::search::{dihedral_orbits, enumerate, SearchConfig};
use symplectic_frieze::slfrieze::black_of;
use symplectic_frieze::{FriezeGrid, Rational, RationalFrieze, SymmetricDiffEq, ZigZag, ZigZagShape};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn criterion_1() -> Check {
    let start = Instant::now();
    for f in golden() {
        let g = f.propagated();
        ensure!(g == f.grid(), "{}: propagation differs from the fixture", f.name);
        ensure!(g.check_local_rules().is_empty(), "{}: local rules fail", f.name);
        ensure!(g.check_tame().is_tame(), "{}: not tame", f.name);
        ensure!(g.check_glide(), "{}: glide fails", f.name);
        let p = g.check_periodicity();
        ensure!(p == f.period, "{}: period {p}, expected {}", f.name, f.period);
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(1), "took {t:?}");
    Ok(format!("4 fixtures in {t:?}"))
}

fn verdicts(e: &SymmetricDiffEq<Rational>) -> [bool; 3] {
    [e.is_superperiodic(), e.monodromy().is_neg_identity(), e.on_variety()]
}

fn criterion_2() -> Check {
    let f = friw2();
    let (a, b) = f.coeffs();
    let e = SymmetricDiffEq::new(a.clone(), b.clone()).map_err(|e| e.to_string())?;
    ensure!(verdicts(&e) == [true; 3], "fixture verdicts {:?}", verdicts(&e));
    for k in 0..2 * a.len() {
        let (mut a2, mut b2) = (a.clone(), b.clone());
        let slot = if k < a.len() { &mut a2[k] } else { &mut b2[k - a.len()] };
        *slot += q(1);
        let e2 = SymmetricDiffEq::new(a2, b2).map_err(|e| e.to_string())?;
        ensure!(verdicts(&e2) == [false; 3], "perturbation {k}: verdicts {:?}", verdicts(&e2));
    }
    // Each basis run starts at (V_-3 .. V_0) = e_k and must end at -e_k.
    let expected_mid = [[-1, 6, -14, 3], [-1, 5, -11, 2], [-1, 3, -6, 1]];
    for k in 0..4 {
        let mut init: [Rational; 4] = std::array::from_fn(|_| q(0));
        init[k] = q(1);
        let v = e.solve(init.clone(), -3, 7);
        for (m, row) in expected_mid.iter().enumerate() {
            ensure!(v[4 + m] == q(row[k]), "V_{} basis {k}: {}", m + 1, v[4 + m]);
        }
        for m in 0..4 {
            ensure!(v[7 + m] == -init[m].clone(), "V_{} basis {k}", m + 4);
        }
    }
    Ok("fixture superperiodic, 14 perturbations break all verdicts, basis runs match".into())
}

fn criterion_3() -> Check {
    let mut count = 0;
    for f in [friw2(), friw3()] {
        let g = f.grid();
        let (a, b) = f.coeffs();
        let e = SymmetricDiffEq::new(a.clone(), b.clone()).map_err(|e| e.to_string())?;
        for idx in g.domain() {
            let (i, j) = (idx.i(), idx.j());
            let got = if idx.is_black() {
                let d = black_by_determinant(&a, &b, i, j);
                ensure!(e.delta(i, j) == d, "{}: delta at {idx}", f.name);
                d
            } else {
                white_by_determinant(&a, &b, i, j)
            };
            ensure!(got == g.entry(idx), "{}: determinant at {idx} is {got}", f.name);
            count += 1;
        }
    }
    Ok(format!("{count} entries"))
}

fn criterion_4() -> Check {
    let g = friw2().grid();
    let f = black_of(&g);
    f.check().map_err(|e| e.to_string())?;
    f.check_central_minors().map_err(|e| e.to_string())?;
    let (k, w) = (f.order() as i64, f.width() as i64);
    let dual = f.projective_dual();
    for p in 0..f.period() as i64 {
        for qq in p..p + w {
            ensure!(dual.entry(p, qq) == f.entry(qq + k + 1, p + w + k), "projective dual at ({p},{qq})");
        }
    }
    let gale = f.gale_dual();
    gale.check().map_err(|e| e.to_string())?;
    ensure!((gale.order(), gale.width()) == (2, 3), "gale shape");
    let expected = [
        [6, 3, 1, 3, 4, 2, 1],
        [14, 1, 2, 6, 5, 1, 3],
        [3, 1, 3, 4, 2, 1, 6],
    ];
    for (r, row) in expected.iter().enumerate() {
        ensure!(gale.row(r as i64) == qs(row), "gale row {r}");
    }
    ensure!(gale.check_middle_symmetry() == Ok(true), "middle row symmetry");
    let v = Matrix::from_fn(4, 7, |r, c| f.entry(4 + r as i64, 3 + c as i64));
    let wm = Matrix::from_fn(3, 7, |r, c| gale.entry(6 + r as i64, 5 + c as i64));
    let expected_w = Matrix::from_i64_rows(&[&[1, 1, 3, 6, 1, 0, 0], &[0, 1, 6, 14, 3, 1, 0], &[0, 0, 1, 3, 1, 1, 1]])
        .map_err(|e| e.to_string())?;
    ensure!(wm == expected_w, "W block");
    let d = Matrix::from_fn(7, 7, |r, c| if r != c { q(0) } else if r % 2 == 0 { q(1) } else { q(-1) });
    let prod = wm.mul(&d).and_then(|m| m.mul(&v.transpose())).map_err(|e| e.to_string())?;
    ensure!(prod == Matrix::zeros(3, 4), "W D V^t = {prod:?}");
    Ok("SL(4) checks, projective dual, Gale dual, W D V^t = 0".into())
}

fn criterion_5() -> Check {
    ensure!(sing1().check_tame().is_tame(), "sing1 not tame");
    ensure!(sing7().check_tame().is_tame(), "sing7 not tame");
    let v = nonsing1().check_tame().violation.ok_or("nonsing1 tame")?;
    ensure!(v.size == 3, "nonsing1 fails at size {}", v.size);
    let v = sing11().check_tame().violation.ok_or("sing11 tame")?;
    ensure!(v.size == 4, "sing11 fails at size {}", v.size);
    ensure!(v.value == symplectic_frieze::Gaussian::from_i64(-1), "sing11 minor {}", v.value);
    let mut p = PartialFrieze::from_row(1, 0, 1, qs(&[-1, 1, -2, -1, -1, 0, -1]));
    let x = p.extend_row(0, 1).map_err(|e| e.to_string())?;
    ensure!(x == vec![q(1)], "extension gives {x:?}");
    Ok("sing1, sing7 tame; nonsing1 3x3; sing11 4x4 = -1; extension x = 1".into())
}

fn belt_half_steps(w: usize, count: usize) -> Result<Vec<Seed>, ClusterError> {
    let mut seeds = vec![Seed::c2_square_aw(w)];
    for t in 0..count {
        let sign = if t % 2 == 0 { BeltSign::Plus } else { BeltSign::Minus };
        let next = seeds[t].belt_step(sign)?;
        seeds.push(next);
    }
    Ok(seeds)
}

fn column_pair(g: &FriezeGrid<LaurentPolynomial>, x: i64) -> Vec<LaurentPolynomial> {
    let mut v: Vec<_> = (0..g.width() as i64).flat_map(|r| [g.at(x, r), g.at(x + 1, r)]).collect();
    v.sort_by_key(|p| p.to_string());
    v
}

fn is_f4_path(b: &ExchangeMatrix) -> bool {
    let m = b.size();
    let deg: Vec<usize> = (0..m).map(|i| (0..m).filter(|&j| b.get(i, j) != 0).count()).collect();
    let mut ends: Vec<usize> = (0..m).filter(|&i| deg[i] == 1).collect();
    if m != 4 || ends.len() != 2 || deg.iter().any(|&d| d > 2) {
        return false;
    }
    let (mut prev, mut cur) = (usize::MAX, ends.remove(0));
    let mut weights = Vec::new();
    for _ in 0..3 {
        let next = (0..m).find(|&j| j != prev && b.get(cur, j) != 0).unwrap();
        weights.push((b.get(cur, next) * b.get(next, cur)).abs());
        prev = cur;
        cur = next;
    }
    weights == [1, 2, 1]
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let g = formal_frieze(1).map_err(|e| e.to_string())?;
    let row: Vec<String> = (0..6).map(|x| g.at(x, 0).to_string()).collect();
    let expected = [
        "(1 + x1)/x2",
        "x1",
        "x2",
        "(1 + x2^2)/x1",
        "(1 + x1 + x2^2)/(x1*x2)",
        "(1 + 2*x1 + x1^2 + x2^2)/(x1*x2^2)",
    ];
    ensure!(row == expected, "formal frieze row {row:?}");
    for w in 1..=3 {
        let g = formal_frieze(w).map_err(|e| e.to_string())?;
        ensure!(g.entries().all(LaurentPolynomial::has_positive_coefficients), "w={w}: negative coefficient");
        let n = w + 5;
        let seeds = belt_half_steps(w, 2 * n).map_err(|e| e.to_string())?;
        for (t, s) in seeds.iter().enumerate() {
            let set = s.variable_set();
            ensure!(
                (0..2 * n as i64).any(|x| column_pair(&g, x) == set),
                "w={w}: belt seed {t} is not a column pair"
            );
        }
    }
    let f4 = Seed::c2_square_aw(2).mutate_word(&[0, 2, 0]).map_err(|e| e.to_string())?;
    ensure!(is_f4_path(&f4.matrix), "mu1 mu3 mu1 gives {:?}", f4.matrix);
    for w in 1..=2 {
        let n = w + 5;
        let seeds = belt_half_steps(w, 4 * n).map_err(|e| e.to_string())?;
        ensure!(seeds[4 * n] == seeds[0], "w={w}: belt not periodic");
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(60), "took {t:?}");
    Ok(format!("frieze, positivity, F4 path, belt periodicity in {t:?}"))
}

fn reference_polygon() -> Polygon<Rational> {
    let rows: [[i64; 4]; 7] = [
        [1, 0, 0, 0],
        [4, 1, 0, 0],
        [3, 2, 1, 0],
        [1, 1, 1, 1],
        [0, 1, 3, 6],
        [0, 0, 1, 4],
        [0, 0, 0, 1],
    ];
    Polygon::new(rows.iter().map(|r| r.map(q)).collect(), SymplecticForm::omega_check(q(4)), 3)
}

fn to_c64(p: &Polygon<Rational>) -> Polygon<Complex64> {
    use num_traits::ToPrimitive;
    let c = |x: &Rational| Complex64::new(x.to_f64().unwrap(), 0.0);
    Polygon::new(
        p.vertices.iter().map(|v| [c(&v[0]), c(&v[1]), c(&v[2]), c(&v[3])]).collect(),
        SymplecticForm { a: c(&p.form.a), variant: p.form.variant },
        p.first,
    )
}

fn criterion_7() -> Check {
    let g = friw2().grid();
    let p = reference_polygon();
    ensure!(polygon_from_frieze(&g, 4) == p, "polygon cut from the frieze differs");
    ensure!(frieze_from_polygon(&p).map_err(|e| e.to_string())? == g, "pairings differ from the frieze");
    for i in 0..p.period() as i64 {
        for j in i..i + 2 {
            let (black, white) = frieze_entries_by_4x4(&p, i, j);
            ensure!(black == g.black(i, j), "4x4 black at ({i},{j})");
            ensure!(white == g.white(i - 1, j - 1), "4x4 white at ({i},{j})");
        }
    }
    // The k-th listed vertex sits at position first + k - 1.
    let label = |k: i64| p.first + k - 1;
    ensure!(p.omega(label(2), label(5)) == q(6), "w(V2, V5) = {}", p.omega(label(2), label(5)));
    ensure!(p.normalization_violation().is_none(), "normalization");
    ensure!(block_symplectic_check(&g), "friw2 block identity");
    ensure!(block_symplectic_check(&friw3().grid()), "friw3 block identity");
    let exact = to_c64(&p);
    let mut raw = exact.vertices.clone();
    raw[1] = raw[1].map(|x| x * Complex64::new(2.0, 1.0));
    raw[4] = raw[4].map(|x| x * Complex64::new(-0.5, 0.0));
    let back = normalize_lift(&raw, &exact.form).map_err(|e| e.to_string())?;
    let close = |s: f64| {
        back.vertices
            .iter()
            .zip(&exact.vertices)
            .all(|(u, v)| u.iter().zip(v).all(|(x, y)| (x - y * s).norm() < 1e-9))
    };
    ensure!(close(1.0) || close(-1.0), "renormalized lift drifts");
    Ok("polygon pairings, 4x4 determinants, block identity, float renormalization".into())
}

fn criterion_8() -> Check {
    let g = friw3().grid();
    let t = g.sign_twist();
    ensure!(t.shifted(7) == friw3_twisted_display(), "twisted array differs from display");
    ensure!(t.sign_twist() == g, "twist is not an involution");
    ensure!(t.check_tame().is_tame(), "twist loses tameness");
    ensure!(t.check_local_rules().is_empty(), "twist breaks local rules");
    Ok("signed width-3 array matches".into())
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let w1 = enumerate(&SearchConfig::new(1, 5));
    let t = start.elapsed();
    let orbits = dihedral_orbits(&w1).map_err(|e| e.to_string())?;
    ensure!(w1.len() == 6, "width 1 count {}", w1.len());
    ensure!(orbits.len() == 1, "width 1 orbits {}", orbits.len());
    ensure!(t < Duration::from_secs(1), "width 1 took {t:?}");
    let start = Instant::now();
    let w2 = enumerate(&SearchConfig::new(2, 30));
    let o2 = dihedral_orbits(&w2).map_err(|e| e.to_string())?;
    let note = if (w2.len(), o2.len()) == (112, 9) { "matches 112/9" } else { "MISMATCH with 112/9" };
    Ok(format!(
        "width 1: 6 friezes, 1 orbit; width 2 bound 30: {} friezes, {} orbits ({note}, {:?})",
        w2.len(),
        o2.len(),
        start.elapsed()
    ))
}

fn random_matrix(rng: &mut StdRng, n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |_, _| q(rng.gen_range(-9..=9)))
}

fn without(n: usize, drop: &[usize]) -> Vec<usize> {
    (0..n).filter(|k| !drop.contains(k)).collect()
}

fn criterion_10() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for t in 0..150 {
        let n = rng.gen_range(3..=7);
        let m = random_matrix(&mut rng, n);
        let minor = |r: &[usize], c: &[usize]| m.minor(&without(n, r), &without(n, c)).unwrap();
        let last = n - 1;
        let lhs = m.det().unwrap() * minor(&[0, last], &[0, last]);
        let rhs = minor(&[0], &[0]) * minor(&[last], &[last]) - minor(&[0], &[last]) * minor(&[last], &[0]);
        ensure!(lhs == rhs, "Desnanot-Jacobi fails on matrix {t}");
    }
    let mut words = 0;
    for _ in 0..1000 {
        let w = rng.gen_range(1..=3);
        let len = rng.gen_range(1..=8);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..2 * w)).collect();
        match Seed::c2_square_aw(w).mutate_word(&word) {
            Ok(_) => words += 1,
            Err(e) => return Err(format!("word {word:?} at w={w}: {e}")),
        }
    }
    let mut friezes: Vec<RationalFrieze> = enumerate(&SearchConfig::new(1, 5));
    friezes.extend(enumerate(&SearchConfig::new(2, 12)));
    friezes.truncate(50);
    ensure!(friezes.len() == 50, "only {} search friezes", friezes.len());
    for (k, g) in friezes.iter().enumerate() {
        let (a, b) = g.extract_coeffs();
        ensure!(FriezeGrid::from_coeffs(&a, &b).ok().as_ref() == Some(g), "coefficient round trip {k}");
        let z = ZigZag::read(g, ZigZagShape::straight(g.width(), 3));
        ensure!(FriezeGrid::from_zigzag(&z).ok().as_ref() == Some(g), "zig-zag round trip {k}");
    }
    ensure!(sing7().find_nonzero_double_zigzag().is_none(), "sing7 has a nonzero zig-zag");
    ensure!(sing1().find_nonzero_double_zigzag().is_none(), "sing1 has a nonzero zig-zag");
    Ok(format!("150 Desnanot-Jacobi, {words} Laurent words, 50 round trips, singular zig-zags"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("golden fixtures", criterion_1),
        ("difference equation", criterion_2),
        ("determinant formulas", criterion_3),
        ("SL dualities", criterion_4),
        ("tameness edge cases", criterion_5),
        ("cluster suite", criterion_6),
        ("polygon suite", criterion_7),
        ("sign twist", criterion_8),
        ("enumeration", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
