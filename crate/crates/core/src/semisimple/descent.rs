use serde::Serialize;

use super::grading::{characteristic_grading, extremal_bracket_span, Grading};
use super::triple::{jacobson_morozov, Sl2Triple};
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra, Subalgebra};
use crate::linalg::Echelon;

/// One application of the descent construction to a spanning tuple whose
/// first entry `y1` is a nonzero nilpotent.
///
/// With `i0` the highest weight of the grading of a triple through `y1`:
/// `z_j = ad_{y1}^{i0}(y_j)`, `y'_k = pr_{-i0}(y_k)` and
/// `x_{j,k} = pr_0([z_j, y_k])`, which spans `k = <[g(i0), g(-i0)]>`.
#[derive(Clone, Debug)]
pub struct DescentStep {
    pub triple: Sl2Triple,
    pub grading: Grading,
    pub highest_weight: i64,
    pub z: Vec<Element>,
    pub y_prime: Vec<Element>,
    /// `x[j][k]`
    pub x: Vec<Vec<Element>>,
    pub k: Subalgebra,
    /// `(j, k)` indices of the greedily extracted basis of `k`, in canonical order.
    pub extracted: Vec<(usize, usize)>,
    /// `(j, k)` indices whose `x_{j,k}` is not ad-nilpotent, in canonical order.
    pub non_nilpotent_x: Vec<(usize, usize)>,
    pub checks: DescentChecks,
}

/// Runtime checks of the identities the construction relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DescentChecks {
    /// The `z_j` lie in and span `g(h, i0)`.
    pub z_spans_top: bool,
    /// The `y'_k` span `g(h, -i0)`.
    pub y_prime_spans_bottom: bool,
    /// `pr_0 [z_j, y_k] = [z_j, pr_{-i0} y_k]` for all `j, k`.
    pub projection_identity: bool,
    /// The extracted `x_{j,k}` span `k`.
    pub x_spans_k: bool,
}

impl DescentChecks {
    pub fn all(&self) -> bool {
        self.z_spans_top && self.y_prime_spans_bottom && self.projection_identity && self.x_spans_k
    }
}

impl DescentStep {
    pub fn extracted_basis(&self) -> Vec<Element> {
        self.extracted.iter().map(|&(j, k)| self.x[j][k].clone()).collect()
    }
}

pub fn descent_step(l: &LieAlgebra, tuple: &[Element]) -> Result<DescentStep> {
    let n = l.dim();
    let span = Subalgebra::span(l, tuple)?;
    if span.dim() != n {
        return Err(Error::NotSpanning { rank: span.dim(), dim: n });
    }
    let y1 = &tuple[0];
    if y1.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !l.is_ad_nilpotent(y1)? {
        return Err(Error::NotAdNilpotent);
    }
    let triple = jacobson_morozov(l, y1)?;
    let grading = characteristic_grading(l, &triple.h)?;
    let i0 = grading.highest_weight()?;
    let top = grading.layer(i0).expect("highest weight has a layer");
    let bottom_dim = grading.layer(-i0).map_or(0, Subalgebra::dim);

    let ad_y1 = l.ad_matrix(y1)?;
    let power = ad_y1.pow(u32::try_from(i0).map_err(|_| Error::TrivialGrading)?)?;
    let z: Vec<Element> = tuple.iter().map(|y| Element::new(power.mul_vec(&y.coords))).collect();
    let z_in_top = z.iter().all(|v| top.contains(v));
    let z_rank = Echelon::from_rows(n, z.iter().map(|v| v.coords.as_slice())).rank();

    let y_prime: Vec<Element> = tuple.iter().map(|y| grading.project(-i0, y)).collect();
    let yp_rank = Echelon::from_rows(n, y_prime.iter().map(|v| v.coords.as_slice())).rank();

    let mut projection_identity = true;
    let mut x = Vec::with_capacity(z.len());
    for zj in &z {
        let mut row = Vec::with_capacity(tuple.len());
        for (yk, ypk) in tuple.iter().zip(&y_prime) {
            if zj.is_zero() {
                row.push(Element::zero(n));
                continue;
            }
            let full = l.bracket_unchecked(zj, yk);
            let xjk = grading.project(0, &full);
            if xjk != l.bracket_unchecked(zj, ypk) {
                projection_identity = false;
            }
            row.push(xjk);
        }
        x.push(row);
    }

    let k = extremal_bracket_span(l, &grading)?;
    let mut ech = Echelon::new(n);
    let mut extracted = Vec::new();
    let mut non_nilpotent_x = Vec::new();
    for (j, row) in x.iter().enumerate() {
        for (kk, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if ech.insert(&v.coords) {
                extracted.push((j, kk));
            }
            if !l.is_ad_nilpotent(v)? {
                non_nilpotent_x.push((j, kk));
            }
        }
    }
    let x_spans_k = ech.rank() == k.dim() && k.basis().iter().all(|v| ech.contains(&v.coords));

    Ok(DescentStep {
        checks: DescentChecks {
            z_spans_top: z_in_top && z_rank == top.dim(),
            y_prime_spans_bottom: yp_rank == bottom_dim,
            projection_identity,
            x_spans_k,
        },
        triple,
        grading,
        highest_weight: i0,
        z,
        y_prime,
        x,
        k,
        extracted,
        non_nilpotent_x,
    })
}
