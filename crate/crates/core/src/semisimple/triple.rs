use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::{int, Matrix, Rational};

/// `(y, h, f)` with `[h, y] = 2y`, `[h, f] = -2f`, `[y, f] = h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sl2Triple {
    pub y: Element,
    pub h: Element,
    pub f: Element,
}

impl Sl2Triple {
    /// Checks the three defining relations exactly.
    pub fn satisfies_relations(&self, l: &LieAlgebra) -> bool {
        let hy = l.bracket_unchecked(&self.h, &self.y);
        let hf = l.bracket_unchecked(&self.h, &self.f);
        let yf = l.bracket_unchecked(&self.y, &self.f);
        hy == self.y.scale(&int(2)) && hf == self.f.scale(&int(-2)) && yf == self.h
    }
}

/// Embeds a nonzero nilpotent `y` of a semisimple algebra in an sl2-triple.
///
/// First solves `ad_y^2 x = -2y` and sets `h = [y, x]`, so `h` lies in the
/// image of `ad_y` and `[h, y] = 2y`. Then `f` solves the joint linear
/// system `[y, f] = h`, `(ad_h + 2) f = 0`. Both systems are consistent for
/// valid input; inconsistency is reported as a precondition failure.
pub fn jacobson_morozov(l: &LieAlgebra, y: &Element) -> Result<Sl2Triple> {
    let n = l.dim();
    if y.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: y.dim(),
        });
    }
    if y.is_zero() {
        return Err(Error::ZeroElement);
    }
    let ad_y = l.ad_matrix(y)?;
    if !ad_y.is_nilpotent()? {
        return Err(Error::NotAdNilpotent);
    }
    if !l.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let ad_y2 = &ad_y * &ad_y;
    let target: Vec<Rational> = y.scale(&int(-2)).coords;
    let x = ad_y2.solve(&target)?.ok_or(Error::InconsistentSystem)?;
    let h = Element::new(ad_y.mul_vec(&x));

    let ad_h = l.ad_matrix(&h)?;
    let mut stacked = ad_y.row_vecs();
    let shifted = ad_h.add_scalar_identity(&int(2));
    stacked.extend(shifted.row_vecs());
    let system = Matrix::from_rows(n, &stacked)?;
    let mut rhs = h.coords.clone();
    rhs.extend(std::iter::repeat_n(int(0), n));
    let f = system.solve(&rhs)?.ok_or(Error::InconsistentSystem)?;

    let triple = Sl2Triple {
        y: y.clone(),
        h,
        f: Element::new(f),
    };
    debug_assert!(triple.satisfies_relations(l));
    Ok(triple)
}
