mod common;

use common::*;
use symplectic_frieze::search::{dihedral_orbits, enumerate, enumerate_brute_force, enumerate_rows, Dedup, SearchConfig, SearchError};
use symplectic_frieze::{FriezeGrid, Rational};

fn keys(v: &[FriezeGrid<Rational>]) -> Vec<Vec<Rational>> {
    let mut k: Vec<_> = v.iter().map(|g| g.rows().concat()).collect();
    k.sort();
    k
}

#[test]
fn width_one_counts() {
    let all = enumerate(&SearchConfig::new(1, 5));
    assert_eq!(all.len(), 6);
    assert_eq!(enumerate(&SearchConfig::new(1, 5).with_dedup(Dedup::ByTranslation)).len(), 2);
    assert_eq!(enumerate(&SearchConfig::new(1, 5).with_dedup(Dedup::ByDihedral)).len(), 1);
    assert!(all.iter().any(|g| *g == friw1().grid()));
}

#[test]
fn fast_search_matches_brute_force() {
    for (w, bound) in [(1, 6), (2, 7)] {
        let fast = enumerate(&SearchConfig::new(w, bound));
        let slow = enumerate_brute_force(w, bound);
        assert_eq!(keys(&fast), keys(&slow), "w={w} bound={bound}");
        assert_eq!(enumerate_rows(w, bound).len(), fast.len());
    }
}

#[test]
fn larger_bounds_find_more() {
    let small = keys(&enumerate(&SearchConfig::new(2, 8)));
    let large = keys(&enumerate(&SearchConfig::new(2, 14)));
    assert!(small.len() < large.len());
    assert!(small.iter().all(|k| large.binary_search(k).is_ok()));
}

#[test]
fn every_result_is_a_tame_positive_frieze() {
    for g in enumerate(&SearchConfig::new(2, 12)) {
        assert!(g.check_local_rules().is_empty());
        assert!(g.check_glide());
        assert!(g.check_tame().is_tame());
        assert!(g.entries().all(|v| v.is_integer() && *v > q(0)));
        assert_eq!(g.shifted(g.period() as i64), g);
    }
}

#[test]
fn orbits_partition_the_results() {
    let all = enumerate(&SearchConfig::new(2, 12));
    let orbits = dihedral_orbits(&all).unwrap();
    let mut members: Vec<usize> = orbits.iter().flat_map(|o| o.members.clone()).collect();
    members.sort();
    assert_eq!(members, (0..all.len()).collect::<Vec<_>>());
    assert_eq!(orbits.len(), enumerate(&SearchConfig::new(2, 12).with_dedup(Dedup::ByDihedral)).len());
    for o in &orbits {
        let rep = o.representative.rows();
        for &m in &o.members {
            let single = dihedral_orbits(std::slice::from_ref(&all[m])).unwrap();
            assert_eq!(single[0].representative.rows(), rep);
        }
    }
}

#[test]
fn mirror_shares_an_orbit() {
    let g = friw2().grid();
    let orbits = dihedral_orbits(&[g.clone(), g.reflected(1), g.shifted(3)]).unwrap();
    assert_eq!(orbits.len(), 1);
    assert_eq!(orbits[0].members, vec![0, 1, 2]);
}

#[test]
fn mixed_widths_are_rejected() {
    let err = dihedral_orbits(&[friw2().grid(), friw1().grid()]);
    assert_eq!(err.unwrap_err(), SearchError::WidthMismatch { index: 1, expected: 2, found: 1 });
    assert!(dihedral_orbits::<Rational>(&[]).unwrap().is_empty());
}
