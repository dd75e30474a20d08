//! Seeded random rationals, elements and changes of basis.

use rand::Rng;

use crate::lie::{apply, Element, LieAlgebra, Subalgebra};
use crate::linalg::{Echelon, Matrix, Rational};

/// `p/q` with `|p| <= bound` and `1 <= q <= bound`.
pub fn rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound.max(1));
    Rational::new(p.into(), q.into())
}

pub fn element<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> Element {
    Element::new((0..dim).map(|_| rational(rng, bound)).collect())
}

/// Nonzero random element.
pub fn nonzero_element<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> Element {
    loop {
        let x = element(rng, dim, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Random combination of the basis of `sub`.
pub fn element_of<R: Rng>(rng: &mut R, sub: &Subalgebra, bound: i64) -> Element {
    let c: Vec<Rational> = (0..sub.dim()).map(|_| rational(rng, bound)).collect();
    sub.embed(&c)
}

pub fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Matrix {
    let entries: Vec<Vec<Rational>> = (0..rows)
        .map(|_| (0..cols).map(|_| rational(rng, bound)).collect())
        .collect();
    Matrix::from_rows(cols, &entries).expect("rectangular")
}

/// Random invertible `n x n` matrix (rejection sampling).
pub fn invertible<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Matrix {
    loop {
        let m = matrix(rng, n, n, bound);
        if m.rank() == n {
            return m;
        }
    }
}

/// Random basis of `l`, as elements.
pub fn basis<R: Rng>(rng: &mut R, l: &LieAlgebra, bound: i64) -> Vec<Element> {
    let m = invertible(rng, l.dim(), bound);
    m.row_vecs().into_iter().map(Element::new).collect()
}

/// Nonzero ad-nilpotent random element of `sub` (retries until one is
/// drawn, so `sub` should contain plenty of them, e.g. a nilradical).
pub fn nilpotent_element_of<R: Rng>(rng: &mut R, l: &LieAlgebra, sub: &Subalgebra, bound: i64) -> Element {
    loop {
        let x = element_of(rng, sub, bound);
        if !x.is_zero() && l.is_ad_nilpotent(&x).expect("dimension") {
            return x;
        }
    }
}

/// Random inner automorphism: a product of `factors` maps `exp(ad_x)`, with
/// `x` a nonzero nilpotent drawn from the subalgebras `nilpotent_parts` in
/// turn.
pub fn inner_automorphism<R: Rng>(
    rng: &mut R,
    l: &LieAlgebra,
    nilpotent_parts: &[&Subalgebra],
    factors: usize,
    bound: i64,
) -> Matrix {
    let mut a = Matrix::identity(l.dim());
    for i in 0..factors {
        let part = nilpotent_parts[i % nilpotent_parts.len()];
        let x = nilpotent_element_of(rng, l, part, bound);
        a = &l.exp_ad_nilpotent(&x).expect("nilpotent") * &a;
    }
    a
}

/// Random basis of `l` consisting of ad-nilpotent elements, each the image
/// of a random element of `nilradical` under a random inner automorphism
/// built from `nilpotent_parts`.
pub fn nilpotent_basis<R: Rng>(
    rng: &mut R,
    l: &LieAlgebra,
    nilradical: &Subalgebra,
    nilpotent_parts: &[&Subalgebra],
    bound: i64,
) -> Vec<Element> {
    let mut out: Vec<Element> = Vec::new();
    let mut ech = Echelon::new(l.dim());
    while out.len() < l.dim() {
        let a = inner_automorphism(rng, l, nilpotent_parts, 2, bound);
        let x = apply(&a, &nilpotent_element_of(rng, l, nilradical, bound));
        if ech.insert(&x.coords) {
            out.push(x);
        }
    }
    out
}
