use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::charpoly::faddeev_leverrier;
use super::poly::Polynomial;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

fn primitive_integer_entries(entries: &[Rational]) -> Vec<BigInt> {
    let l = entries.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    primitive(entries.iter().map(|q| q.numer() * (&l / q.denom())).collect())
}

fn square_integer(a: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let akj = &a[k * n + j];
                if !akj.is_zero() {
                    out[i * n + j] += aik * akj;
                }
            }
        }
    }
    out
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Builds from a list of rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| super::int(x)).collect())
            .collect();
        Self::from_rows(cols, &rows).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn square_dim(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| &self[(i, i)])
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// `self + c * I`
    pub(crate) fn add_scalar_identity(mut self, c: &Rational) -> Matrix {
        if !c.is_zero() {
            for i in 0..self.rows.min(self.cols) {
                self[(i, i)] += c;
            }
        }
        self
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Result<Matrix> {
        let n = self.square_dim()?;
        let mut base = self.clone();
        let mut acc = Matrix::identity(n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// True iff `self^n = 0` where `n` is the dimension.
    pub fn is_nilpotent(&self) -> Result<bool> {
        let n = self.square_dim()?;
        // Nilpotency is invariant under scaling, so work with a primitive
        // integer multiple and keep it primitive while squaring.
        let mut p = primitive_integer_entries(&self.entries);
        let mut e = 1usize;
        loop {
            if p.iter().all(Zero::is_zero) {
                return Ok(true);
            }
            if e >= n {
                return Ok(false);
            }
            p = primitive(square_integer(&p, n));
            e *= 2;
        }
    }

    /// Reduced row echelon form and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots.len())
    }

    /// Reduces in place, returning pivot columns in order.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let d = &factor * &self[(r, j)];
                    self[(i, j)] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the right null space `{v : M v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Rational::zero(); self.cols];
                v[fc] = Rational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m[(r, fc)].clone();
                }
                v
            })
            .collect()
    }

    /// Some `x` with `M x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(r, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.square_dim()?;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// `det(tI - M)` by the Faddeev–LeVerrier trace recurrence.
    pub fn char_poly(&self) -> Result<Polynomial> {
        let n = self.square_dim()?;
        let rows: Vec<Vec<Rational>> = self.row_vecs();
        debug_assert_eq!(rows.len(), n);
        let coeffs = faddeev_leverrier(&rows);
        Ok(Polynomial::new(coeffs))
    }

    /// Monic minimal polynomial, the lcm of the local minimal polynomials of
    /// the standard basis vectors (Krylov sequences).
    pub fn min_poly(&self) -> Result<Polynomial> {
        let n = self.square_dim()?;
        let mut acc = Polynomial::one();
        for i in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            let local = self.local_min_poly(e);
            acc = acc.lcm(&local);
        }
        Ok(acc)
    }

    /// Monic polynomial `p` of least degree with `p(M) v = 0`.
    fn local_min_poly(&self, v: Vec<Rational>) -> Polynomial {
        let n = self.rows;
        // Reduced Krylov vectors with pivot entry 1, each paired with the
        // polynomial expressing it as a combination of powers M^k v.
        let mut reduced: Vec<(usize, Vec<Rational>, Polynomial)> = Vec::new();
        let mut w = v;
        let mut k = 0;
        loop {
            let mut comb = Polynomial::monomial(Rational::one(), k);
            let mut cur = w.clone();
            for (p, r, c) in &reduced {
                if cur[*p].is_zero() {
                    continue;
                }
                let f = cur[*p].clone();
                for (x, y) in cur.iter_mut().zip(r) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
                comb = &comb - &c.scale(&f);
            }
            match cur.iter().position(|x| !x.is_zero()) {
                None => return comb.monic(),
                Some(p) => {
                    let inv = cur[p].recip();
                    for x in cur.iter_mut() {
                        *x *= &inv;
                    }
                    reduced.push((p, cur, comb.scale(&inv)));
                }
            }
            debug_assert!(k < n);
            w = self.mul_vec(&w);
            k += 1;
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally maintained reduced echelon basis of a row space.
///
/// Used for greedy rank extension: `insert` reports whether a vector was
/// independent of everything inserted so far.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new() }
    }

    pub fn from_rows<'a>(dim: usize, rows: impl IntoIterator<Item = &'a [Rational]>) -> Self {
        let mut e = Self::new(dim);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut cur = v.to_vec();
        for (p, r) in &self.rows {
            if cur[*p].is_zero() {
                continue;
            }
            let f = cur[*p].clone();
            for (x, y) in cur.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        cur
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` if it is independent; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length must equal ambient dimension");
        let mut cur = self.reduce(v);
        let Some(p) = cur.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = cur[p].recip();
        for x in cur.iter_mut() {
            *x *= &inv;
        }
        // keep earlier rows reduced at the new pivot
        for (_, r) in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(&cur) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((p, cur));
        true
    }

    /// Basis rows in reduced form, sorted by pivot column.
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|(p, _)| *p);
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    #[test]
    fn rref_identity_and_proportional_rows() {
        let (r, rank) = Matrix::identity(3).rref();
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(rank, 3);
        assert_eq!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).rank(), 1);
        let (r, _) = Matrix::from_ints(&[&[2, 4, 2], &[1, 3, 0]]).rref();
        assert_eq!(r, Matrix::from_ints(&[&[1, 0, 3], &[0, 1, -1]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::zeros(2, 2).kernel().len(), 2);
        assert!(Matrix::identity(4).kernel().is_empty());
        let k = Matrix::from_ints(&[&[1, 1], &[1, 1]]).kernel();
        assert_eq!(k, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![rat(1, 2), int(-3), int(5)];
        assert_eq!(Matrix::identity(3).solve(&b).unwrap(), Some(b));
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.solve(&[int(1), int(3)]).unwrap(), None);
        let x = m.solve(&[int(1), int(2)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1] * int(2), int(1));
        assert!(m.solve(&[int(1)]).is_err());
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            Matrix::zeros(3, 3).char_poly().unwrap(),
            Polynomial::from_ints(&[0, 0, 0, 1])
        );
        assert_eq!(
            Matrix::diagonal(&[int(1), int(2)]).char_poly().unwrap(),
            Polynomial::from_ints(&[2, -3, 1])
        );
        // ad_h on sl2 in the basis (e, h, f)
        assert_eq!(
            Matrix::diagonal(&[int(2), int(0), int(-2)]).char_poly().unwrap(),
            Polynomial::from_ints(&[0, -4, 0, 1])
        );
        assert!(Matrix::zeros(2, 3).char_poly().is_err());
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(
            Matrix::identity(4).min_poly().unwrap(),
            Polynomial::from_ints(&[-1, 1])
        );
        let j2 = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        assert_eq!(j2.min_poly().unwrap(), Polynomial::from_ints(&[0, 0, 1]));
        let d = Matrix::diagonal(&[int(1), int(1), int(2)]);
        assert_eq!(d.min_poly().unwrap(), Polynomial::from_ints(&[2, -3, 1]));
        assert_eq!(Matrix::zeros(0, 0).min_poly().unwrap(), Polynomial::one());
    }

    #[test]
    fn inverse_and_singular() {
        let m = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        assert_eq!(&m * &m.inverse().unwrap(), Matrix::identity(2));
        assert!(matches!(
            Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse(),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn nilpotency_by_powers() {
        let j3 = Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(j3.is_nilpotent().unwrap());
        assert!(!Matrix::identity(2).is_nilpotent().unwrap());
        assert_eq!(j3.pow(3).unwrap(), Matrix::zeros(3, 3));
        assert_eq!(j3.pow(0).unwrap(), Matrix::identity(3));
    }

    #[test]
    fn echelon_tracks_rank() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&[int(1), int(2), int(0)]));
        assert!(!e.insert(&[int(2), int(4), int(0)]));
        assert!(e.insert(&[int(0), int(1), int(1)]));
        assert!(e.contains(&[int(1), int(3), int(1)]));
        assert!(!e.contains(&[int(0), int(0), int(1)]));
        assert_eq!(e.rank(), 2);
    }
}
