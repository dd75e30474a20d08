use num_traits::{One, Zero};

use super::rational::Rational;

/// Commutative ring operations needed by the trace recurrence, including
/// exact division by a small positive integer.
pub trait TraceRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_int(&self, k: u64) -> Self;
}

impl TraceRing for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_int(&self, k: u64) -> Self {
        self / Rational::from_integer(k.into())
    }
}

/// Coefficients `c_0..c_n` of `det(tI - A)` for a square `n x n` matrix
/// given as rows. `c_n = 1`.
///
/// Recurrence: `M_0 = 0`, `M_k = A M_{k-1} + c_{n-k+1} I`,
/// `c_{n-k} = -tr(A M_k) / k`. Only divides by the integers `1..=n`.
pub fn faddeev_leverrier<T: TraceRing>(a: &[Vec<T>]) -> Vec<T> {
    let n = a.len();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    // A * M_{k-1}; starts at A * 0 = 0
    let mut am: Vec<Vec<T>> = vec![vec![T::zero(); n]; n];
    for k in 1..=n {
        let mut m = am;
        let c = &coeffs[n - k + 1];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = row[i].add(c);
        }
        am = mat_mul(a, &m);
        let tr = (0..n).fold(T::zero(), |acc, i| acc.add(&am[i][i]));
        coeffs[n - k] = tr.neg().div_int(k as u64);
    }
    coeffs
}

fn mat_mul<T: TraceRing>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = a.len();
    let mut out = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
            }
        }
    }
    out
}
