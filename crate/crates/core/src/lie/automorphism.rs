use super::{Element, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

impl LieAlgebra {
    /// `exp(ad_x) = sum_m ad_x^m / m!`, a finite sum for ad-nilpotent `x`.
    /// The result is an inner automorphism of the algebra.
    pub fn exp_ad_nilpotent(&self, x: &Element) -> Result<Matrix> {
        let ad = self.ad_matrix(x)?;
        if !ad.is_nilpotent()? {
            return Err(Error::NotAdNilpotent);
        }
        let n = self.dim();
        let mut acc = Matrix::identity(n);
        let mut term = Matrix::identity(n);
        for m in 1..n.max(1) {
            term = (&term * &ad).scale(&Rational::from_integer(m.into()).recip());
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// True iff `a[u, v] = [a u, a v]` for every pair of basis elements.
    pub fn is_automorphism(&self, a: &Matrix) -> bool {
        let n = self.dim();
        if a.rows() != n || a.cols() != n {
            return false;
        }
        let images: Vec<Element> = (0..n).map(|i| Element::new(a.column(i))).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = a.mul_vec(&self.bracket_unchecked(&self.basis_element(i), &self.basis_element(j)).coords);
                let rhs = self.bracket_unchecked(&images[i], &images[j]);
                if lhs != rhs.coords {
                    return false;
                }
            }
        }
        true
    }
}

/// Applies a linear map (given as a matrix acting on coordinates) to an element.
pub fn apply(a: &Matrix, x: &Element) -> Element {
    Element::new(a.mul_vec(&x.coords))
}

