//! Library results against independent hand-written computations.

mod common;

use std::collections::BTreeSet;

use borel_lie::bracket::{count_exprs, enumerate_exprs, CountMode};
use borel_lie::lie::catalog::{heisenberg, sl, strictly_upper};
use borel_lie::lie::Element;
use borel_lie::linalg::Matrix;
use borel_lie::sample;
use common::*;
use num_bigint::BigUint;
use num_traits::Zero;

fn commutator(a: &Mat, b: &Mat) -> Mat {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter().zip(&ba).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

#[test]
fn sl_catalog_matches_matrix_commutators() {
    for n in 2..=4 {
        let l = sl(n).unwrap();
        let mats = sl_matrices(n);
        assert_eq!(l.dim(), mats.len());
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                let got = l.bracket(&l.basis_element(i), &l.basis_element(j)).unwrap();
                assert_eq!(matrix_of(n, &got), commutator(&mats[i], &mats[j]), "sl{n} [{i},{j}]");
            }
        }
    }
}

#[test]
fn killing_form_is_trace_form_multiple() {
    for n in 2..=4 {
        let l = sl(n).unwrap();
        let k = l.killing_form();
        let mats = sl_matrices(n);
        let two_n = q(2 * n as i64);
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                let expected = &two_n * trace(&mat_mul(&mats[i], &mats[j]));
                assert_eq!(k[(i, j)], expected);
            }
        }
    }
}

#[test]
fn killing_form_from_ad_traces() {
    let mut r = rng(3);
    let l = heisenberg(5).unwrap();
    let x = sample::element(&mut r, l.dim(), 4);
    let y = sample::element(&mut r, l.dim(), 4);
    let b = l.killing_form();
    let lhs: borel_lie::linalg::Rational = (0..l.dim())
        .flat_map(|i| (0..l.dim()).map(move |j| (i, j)))
        .map(|(i, j)| &x.coords[i] * &b[(i, j)] * &y.coords[j])
        .sum();
    assert_eq!(lhs, trace(&mat_mul(&ad_oracle(&l, &x), &ad_oracle(&l, &y))));
}

#[test]
fn char_poly_matches_cofactor_determinant() {
    let mut r = rng(11);
    for n in 1..=5 {
        for _ in 0..6 {
            let m = sample::matrix(&mut r, n, n, 5);
            let p = m.char_poly().unwrap();
            assert_eq!(p.degree(), Some(n));
            let rows = to_rows(&m);
            for t in -3..=3 {
                assert_eq!(p.eval(&q(t)), char_poly_at(&rows, &q(t)), "n={n} t={t}");
            }
        }
    }
}

#[test]
fn inverse_and_solve_against_determinant() {
    let mut r = rng(12);
    for n in 1..=4 {
        let m = sample::invertible(&mut r, n, 4);
        assert!(!det(&to_rows(&m)).is_zero());
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(n));
        let b: Vec<_> = (0..n as i64).map(q).collect();
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), b);
    }
}

#[test]
fn bracket_counts_for_two_leaves() {
    let expected = [0u64, 2, 6, 38, 1446, 2090918];
    for (d, &e) in expected.iter().enumerate() {
        assert_eq!(count_exprs(2, d, CountMode::Cumulative), BigUint::from(e));
    }
}

/// All expressions of depth <= d, built as strings by direct recursion.
fn brute_force_exprs(arity: usize, depth: usize) -> BTreeSet<String> {
    let mut all: BTreeSet<String> = (1..=arity).map(|i| format!("y{i}")).collect();
    for _ in 1..depth {
        let prev: Vec<String> = all.iter().cloned().collect();
        for a in &prev {
            for b in &prev {
                all.insert(format!("[{a},{b}]"));
            }
        }
    }
    all
}

#[test]
fn counting_and_enumeration_match_brute_force() {
    for arity in 1..=3 {
        for depth in 1..=4 {
            if arity == 3 && depth == 4 {
                continue;
            }
            let brute = brute_force_exprs(arity, depth);
            assert_eq!(
                count_exprs(arity, depth, CountMode::Cumulative),
                BigUint::from(brute.len()),
                "n={arity} d={depth}"
            );
            let listed: Vec<String> = enumerate_exprs(arity, depth).unwrap().map(|e| e.to_string()).collect();
            let set: BTreeSet<String> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len(), "duplicates for n={arity} d={depth}");
            assert_eq!(set, brute);
        }
    }
}

#[test]
fn nilpotency_matches_naive_powers() {
    let mut r = rng(21);
    for n in 1..=5 {
        for _ in 0..10 {
            let m = sample::matrix(&mut r, n, n, 3);
            assert_eq!(m.is_nilpotent().unwrap(), naive_nilpotent(&to_rows(&m)));
        }
        // strictly upper conjugated by an invertible matrix
        let mut u = sample::matrix(&mut r, n, n, 3);
        let mut rows = to_rows(&u);
        for (i, row) in rows.iter_mut().enumerate() {
            for v in row.iter_mut().take(i + 1) {
                *v = q(0);
            }
        }
        u = Matrix::from_rows(n, &rows).unwrap();
        let p = sample::invertible(&mut r, n, 3);
        let c = &(&p * &u) * &p.inverse().unwrap();
        assert!(c.is_nilpotent().unwrap());
        assert!(naive_nilpotent(&to_rows(&c)));
    }
}

#[test]
fn ad_nilpotency_matches_naive_in_algebras() {
    let mut r = rng(22);
    for l in [sl(3).unwrap(), strictly_upper(4).unwrap(), heisenberg(5).unwrap()] {
        for _ in 0..10 {
            let x = sample::element(&mut r, l.dim(), 3);
            assert_eq!(l.is_ad_nilpotent(&x).unwrap(), naive_ad_nilpotent(&l, &x));
            assert_eq!(to_rows(&l.ad_matrix(&x).unwrap()), ad_oracle(&l, &x));
        }
    }
    let l = sl(3).unwrap();
    assert!(l.is_ad_nilpotent(&Element::basis(8, 0)).unwrap());
    assert!(!l.is_ad_nilpotent(&Element::basis(8, 3)).unwrap());
}
