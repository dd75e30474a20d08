//! Test-side oracles, written independently of the library's algorithms.
#![allow(dead_code)]

use borel_lie::lie::{Element, LieAlgebra, Subalgebra};
use borel_lie::linalg::{Matrix, Rational};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::SeedableRng;

pub type Mat = Vec<Vec<Rational>>;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn to_rows(m: &Matrix) -> Mat {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].clone()).collect()).collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &Mat) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Mat = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `det(t I - A)`.
pub fn char_poly_at(a: &Mat, t: &Rational) -> Rational {
    let n = a.len();
    let m: Mat = (0..n)
        .map(|i| (0..n).map(|j| if i == j { t - &a[i][j] } else { -&a[i][j] }).collect())
        .collect();
    det(&m)
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let p = b[0].len();
    let mut out = vec![vec![Rational::zero(); p]; n];
    for i in 0..n {
        for k in 0..b.len() {
            for j in 0..p {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

pub fn is_zero_mat(a: &Mat) -> bool {
    a.iter().flatten().all(Zero::is_zero)
}

/// `A^n = 0` by plain repeated multiplication.
pub fn naive_nilpotent(a: &Mat) -> bool {
    let n = a.len();
    let mut p = a.clone();
    for _ in 1..n {
        p = mat_mul(&p, a);
    }
    is_zero_mat(&p)
}

/// ad matrix from brackets alone: column `j` is `[x, b_j]`.
pub fn ad_oracle(l: &LieAlgebra, x: &Element) -> Mat {
    let n = l.dim();
    let cols: Vec<Element> = (0..n).map(|j| l.bracket(x, &l.basis_element(j)).unwrap()).collect();
    (0..n).map(|i| (0..n).map(|j| cols[j].coords[i].clone()).collect()).collect()
}

pub fn naive_ad_nilpotent(l: &LieAlgebra, x: &Element) -> bool {
    naive_nilpotent(&ad_oracle(l, x))
}

/// Unit matrix `E_ij` (0-based) of size `n`.
pub fn unit(n: usize, i: usize, j: usize) -> Mat {
    let mut m = vec![vec![Rational::zero(); n]; n];
    m[i][j] = Rational::one();
    m
}

/// Traceless `n x n` matrices in the order: `E_ij` for `i < j`
/// lexicographically, then `E_kk - E_{k+1,k+1}`, then `E_ji` for `i < j`.
pub fn sl_matrices(n: usize) -> Vec<Mat> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(unit(n, i, j));
        }
    }
    for k in 0..n - 1 {
        let mut m = unit(n, k, k);
        m[k + 1][k + 1] = -Rational::one();
        out.push(m);
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(unit(n, j, i));
        }
    }
    out
}

pub fn matrix_of(n: usize, x: &Element) -> Mat {
    let basis = sl_matrices(n);
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (c, b) in x.coords.iter().zip(&basis) {
        for i in 0..n {
            for j in 0..n {
                m[i][j] += c * &b[i][j];
            }
        }
    }
    m
}

pub fn trace(m: &Mat) -> Rational {
    (0..m.len()).fold(Rational::zero(), |acc, i| acc + &m[i][i])
}

/// Span of the given basis vectors of `l`.
pub fn coordinate_span(l: &LieAlgebra, idx: std::ops::Range<usize>) -> Subalgebra {
    let v: Vec<Element> = idx.map(|i| l.basis_element(i)).collect();
    Subalgebra::span(l, &v).unwrap()
}

/// In the catalog basis of sl(3): strictly upper (nilradical), upper
/// triangular (Borel) and strictly lower parts.
pub fn sl3_parts(l: &LieAlgebra) -> (Subalgebra, Subalgebra, Subalgebra) {
    (coordinate_span(l, 0..3), coordinate_span(l, 0..5), coordinate_span(l, 5..8))
}
