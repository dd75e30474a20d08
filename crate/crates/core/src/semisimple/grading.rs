use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lie::{bracket_span, Element, LieAlgebra, Subalgebra};
use crate::linalg::{isqrt_floor, Matrix, Rational};

/// Eigenspace decomposition `g = sum_i g(h, i)` of `ad_h` for an `h` with
/// integer spectrum, together with the projections onto each layer.
#[derive(Clone, Debug)]
pub struct Grading {
    pub h: Element,
    layers: BTreeMap<i64, Subalgebra>,
    // inverse of the matrix whose columns are all layer basis vectors
    to_layer_coords: Matrix,
    // (weight, first column, column count) in the stacked basis
    blocks: Vec<(i64, usize, usize)>,
}

pub fn characteristic_grading(l: &LieAlgebra, h: &Element) -> Result<Grading> {
    let ad = l.ad_matrix(h)?;
    let n = l.dim();
    if n > 0 && !ad.min_poly()?.is_squarefree()? {
        return Err(Error::NotDiagonalizable);
    }
    let cp = ad.char_poly()?;
    // With integer eigenvalues, |i| <= sqrt(sum of squares) = sqrt(tr(ad^2)).
    let bound = isqrt_floor(&crate::lie::trace_of_product(&ad, &ad))
        .to_i64()
        .ok_or(Error::NonIntegerSpectrum)?;
    let mut layers = BTreeMap::new();
    let mut columns = Vec::new();
    let mut blocks = Vec::new();
    for i in -bound..=bound {
        let t = Rational::from_integer(BigInt::from(i));
        if !cp.eval(&t).is_zero() {
            continue;
        }
        let shifted = ad.clone().add_scalar_identity(&-t);
        let basis: Vec<Element> = shifted.kernel().into_iter().map(Element::new).collect();
        blocks.push((i, columns.len(), basis.len()));
        columns.extend(basis.iter().map(|e| e.coords.clone()));
        layers.insert(i, Subalgebra::span(l, &basis)?);
    }
    if columns.len() != n {
        return Err(Error::NonIntegerSpectrum);
    }
    let to_layer_coords = Matrix::from_columns(n, &columns)?.inverse()?;
    Ok(Grading {
        h: h.clone(),
        layers,
        to_layer_coords,
        blocks,
    })
}

impl Grading {
    /// Weights with a nonzero layer, ascending.
    pub fn weights(&self) -> Vec<i64> {
        self.layers.keys().copied().collect()
    }

    pub fn layer(&self, i: i64) -> Option<&Subalgebra> {
        self.layers.get(&i)
    }

    /// `(weight, dim)` for every nonzero layer.
    pub fn layer_dims(&self) -> Vec<(i64, usize)> {
        self.layers.iter().map(|(i, s)| (*i, s.dim())).collect()
    }

    pub fn dim(&self) -> usize {
        self.to_layer_coords.rows()
    }

    /// Component of `x` in `g(h, i)`; zero when `i` is not a weight.
    pub fn project(&self, i: i64, x: &Element) -> Element {
        let coords = self.to_layer_coords.mul_vec(&x.coords);
        let mut out = Element::zero(self.dim());
        if let Some(&(_, start, len)) = self.blocks.iter().find(|(w, _, _)| *w == i) {
            let layer = &self.layers[&i];
            for (c, v) in coords[start..start + len].iter().zip(layer.basis()) {
                if !c.is_zero() {
                    out = &out + &v.scale(c);
                }
            }
        }
        out
    }

    /// Largest weight with a nonzero layer.
    pub fn highest_weight(&self) -> Result<i64> {
        self.layers.keys().next_back().copied().ok_or(Error::TrivialGrading)
    }

    /// Weights at which `x` has a nonzero component.
    pub fn support(&self, x: &Element) -> Vec<i64> {
        let coords = self.to_layer_coords.mul_vec(&x.coords);
        self.blocks
            .iter()
            .filter(|(_, s, len)| coords[*s..s + len].iter().any(|c| !c.is_zero()))
            .map(|(w, _, _)| *w)
            .collect()
    }

    /// `[g(h,i), g(h,j)] ⊆ g(h,i+j)` on all pairs of layer basis vectors.
    pub fn is_compatible(&self, l: &LieAlgebra) -> bool {
        for (i, a) in &self.layers {
            for (j, b) in &self.layers {
                for x in a.basis() {
                    for y in b.basis() {
                        let v = l.bracket_unchecked(&x, &y);
                        if v.is_zero() {
                            continue;
                        }
                        match self.layers.get(&(i + j)) {
                            Some(t) if t.contains(&v) => {}
                            _ => return false,
                        }
                    }
                }
            }
        }
        true
    }
}

/// Span of `[g(h, i0), g(h, -i0)]` for the highest weight `i0`: a subalgebra
/// of `g(h, 0)`. Closure and containment are verified rather than assumed.
pub fn extremal_bracket_span(l: &LieAlgebra, grading: &Grading) -> Result<Subalgebra> {
    let i0 = grading.highest_weight()?;
    let top = grading.layer(i0).ok_or(Error::TrivialGrading)?;
    let bottom = grading.layer(-i0).ok_or(Error::TrivialGrading)?;
    let k = bracket_span(l, &top.basis(), &bottom.basis());
    if !k.is_closed() {
        return Err(Error::NotClosed);
    }
    let zero_layer = grading.layer(0).ok_or(Error::TrivialGrading)?;
    if !k.basis().iter().all(|v| zero_layer.contains(v)) {
        return Err(Error::NotClosed);
    }
    Ok(k)
}

/// `ad_x` is diagonalizable over the algebraic closure: its minimal
/// polynomial is squarefree.
pub fn is_ad_semisimple(l: &LieAlgebra, x: &Element) -> Result<bool> {
    let mp = l.ad_matrix(x)?.min_poly()?;
    mp.is_squarefree()
}

/// Reductivity of a closed subalgebra `k` in a semisimple algebra, by the
/// decomposition criterion: `k = z(k) ⊕ [k,k]`, the center `z(k)` acts
/// semisimply on the ambient algebra, and `[k,k]` is semisimple or zero.
pub fn is_reductive_in(l: &LieAlgebra, k: &Subalgebra) -> Result<bool> {
    let inner = k.require_induced()?;
    let center = inner.center();
    let derived = inner.derived_algebra();
    let mut all: Vec<Element> = center.basis();
    all.extend(derived.basis());
    if Subalgebra::span(inner, &all)?.dim() != inner.dim() || center.dim() + derived.dim() != inner.dim()
    {
        return Ok(false);
    }
    for c in center.basis() {
        if !is_ad_semisimple(l, &k.embed(&c.coords))? {
            return Ok(false);
        }
    }
    let derived_inner = derived.require_induced()?;
    Ok(derived_inner.dim() == 0 || derived_inner.is_semisimple())
}

/// For `x` in the non-negative part of the grading, returns
/// `(x ad-nilpotent, pr_0(x) ad-nilpotent)`. The two always agree; they are
/// returned separately so callers can check that.
pub fn parabolic_nilpotency_pair(l: &LieAlgebra, grading: &Grading, x: &Element) -> Result<(bool, bool)> {
    if let Some(w) = grading.support(x).into_iter().find(|w| *w < 0) {
        return Err(Error::NegativeComponent(w));
    }
    let x0 = grading.project(0, x);
    Ok((l.is_ad_nilpotent(x)?, l.is_ad_nilpotent(&x0)?))
}
