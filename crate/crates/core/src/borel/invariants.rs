//! Invariant polynomials of the adjoint action, evaluated and symbolic.
//!
//! The coefficients `c_0..c_{dim-1}` of `det(tI - ad_x)` are invariant and
//! all vanish exactly on ad-nilpotent `x`. Composing them with an iterated
//! bracket `f` gives the generator `x -> c_i(ad f(x))`.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::multipoly::{MultiPoly, PolyExport};
use crate::bracket::{count_exprs, enumerate_exprs_capped, BracketExpr, CountMode};
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::{faddeev_leverrier, Rational};

/// Largest `dim * arity` accepted by [`symbolic_generators`].
pub const SYMBOLIC_SIZE_LIMIT: usize = 12;
/// Default cap on the number of expressions expanded symbolically.
pub const DEFAULT_SYMBOLIC_EXPR_CAP: u64 = 10_000;

/// Coefficients `c_0..c_{dim-1}` of the characteristic polynomial of `ad_x`.
pub fn invariant_values(l: &LieAlgebra, x: &Element) -> Result<Vec<Rational>> {
    let cp = l.ad_matrix(x)?.char_poly()?;
    Ok((0..l.dim()).map(|i| cp.coeff(i)).collect())
}

/// `c_i(ad f(tuple))`.
pub fn generator_value(
    l: &LieAlgebra,
    f: &BracketExpr,
    tuple: &[Element],
    coeff_index: usize,
) -> Result<Rational> {
    if coeff_index >= l.dim() {
        return Err(Error::IndexOutOfRange {
            index: coeff_index,
            bound: l.dim(),
        });
    }
    let v = f.eval(l, tuple)?;
    Ok(invariant_values(l, &v)?.swap_remove(coeff_index))
}

/// One nonzero generator polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub expr: BracketExpr,
    pub coeff_index: usize,
    pub poly: MultiPoly,
}

/// Names `y{t}_{label}` for the coordinates of a generic tuple, tuple-major.
pub fn tuple_variable_names(l: &LieAlgebra, arity: usize) -> Vec<String> {
    (1..=arity)
        .flat_map(|t| l.basis_labels().iter().map(move |b| format!("y{t}_{b}")))
        .collect()
}

/// Values of `f` on a generic tuple whose coordinates are the variables
/// `t * dim + i`.
fn symbolic_eval(l: &LieAlgebra, f: &BracketExpr) -> Vec<MultiPoly> {
    let n = l.dim();
    match f {
        BracketExpr::Leaf(t) => (0..n).map(|i| MultiPoly::var((t - 1) * n + i)).collect(),
        BracketExpr::Node(a, b) => {
            let u = symbolic_eval(l, a);
            let v = symbolic_eval(l, b);
            symbolic_bracket(l, &u, &v)
        }
    }
}

fn symbolic_bracket(l: &LieAlgebra, u: &[MultiPoly], v: &[MultiPoly]) -> Vec<MultiPoly> {
    let n = l.dim();
    let mut out = vec![MultiPoly::zero(); n];
    for i in (0..n).filter(|&i| !u[i].is_zero()) {
        for j in (0..n).filter(|&j| j != i && !v[j].is_zero()) {
            let sparse = l.basis_bracket(i, j);
            if sparse.is_empty() {
                continue;
            }
            let uv = &u[i] * &v[j];
            for (k, c) in sparse {
                out[*k] = &out[*k] + &uv.scale(c);
            }
        }
    }
    out
}

/// Matrix of `ad_x` for a symbolic `x`: entry `(k, j)` is the `k`-th
/// coordinate of `[x, b_j]`.
#[allow(clippy::needless_range_loop)]
fn symbolic_ad(l: &LieAlgebra, x: &[MultiPoly]) -> Vec<Vec<MultiPoly>> {
    let n = l.dim();
    let mut m = vec![vec![MultiPoly::zero(); n]; n];
    for (i, xi) in x.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
        for j in 0..n {
            for (k, c) in l.basis_bracket(i, j) {
                m[*k][j] = &m[*k][j] + &xi.scale(c);
            }
        }
    }
    m
}

/// Fully expanded `c_i(ad f(y_1..y_n))` for every expression with depth in
/// `min_depth..=max_depth` and every `i < dim`, zero polynomials omitted.
/// Ordered by canonical expression order, then coefficient index.
pub fn symbolic_generators(
    l: &LieAlgebra,
    arity: usize,
    min_depth: usize,
    max_depth: usize,
) -> Result<Vec<Generator>> {
    symbolic_generators_capped(l, arity, min_depth, max_depth, DEFAULT_SYMBOLIC_EXPR_CAP)
}

pub fn symbolic_generators_capped(
    l: &LieAlgebra,
    arity: usize,
    min_depth: usize,
    max_depth: usize,
    expr_cap: u64,
) -> Result<Vec<Generator>> {
    if arity == 0 || min_depth == 0 || min_depth > max_depth {
        return Err(Error::InvalidParameter(format!(
            "need arity >= 1 and 1 <= min depth <= max depth, got arity {arity}, depths {min_depth}..{max_depth}"
        )));
    }
    if l.dim() * arity > SYMBOLIC_SIZE_LIMIT {
        return Err(Error::SizeGate(format!(
            "dim * arity = {} exceeds {SYMBOLIC_SIZE_LIMIT}",
            l.dim() * arity
        )));
    }
    let total: BigUint = count_exprs(arity, max_depth, CountMode::Cumulative);
    if total.to_u64().is_none_or(|c| c > expr_cap) {
        return Err(Error::SizeGate(format!(
            "{total} expressions up to depth {max_depth} exceed the cap {expr_cap}"
        )));
    }
    let mut out = Vec::new();
    for f in enumerate_exprs_capped(arity, max_depth, expr_cap)? {
        if f.depth() < min_depth {
            continue;
        }
        let value = symbolic_eval(l, &f);
        if value.iter().all(MultiPoly::is_zero) {
            continue;
        }
        let coeffs = faddeev_leverrier(&symbolic_ad(l, &value));
        for (i, poly) in coeffs.into_iter().take(l.dim()).enumerate() {
            if !poly.is_zero() {
                out.push(Generator {
                    expr: f.clone(),
                    coeff_index: i,
                    poly,
                });
            }
        }
    }
    Ok(out)
}

/// Serializable form of a generator list.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorExport {
    pub algebra: String,
    pub arity: usize,
    pub min_depth: usize,
    pub max_depth: usize,
    pub vars: Vec<String>,
    pub generators: Vec<GeneratorEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorEntry {
    pub expr: BracketExpr,
    pub coeff_index: usize,
    pub poly: PolyExport,
    pub text: String,
}

impl GeneratorExport {
    pub fn new(
        l: &LieAlgebra,
        arity: usize,
        min_depth: usize,
        max_depth: usize,
        gens: &[Generator],
    ) -> Self {
        let vars = tuple_variable_names(l, arity);
        let generators = gens
            .iter()
            .map(|g| GeneratorEntry {
                expr: g.expr.clone(),
                coeff_index: g.coeff_index,
                poly: g.poly.export(&vars),
                text: g.poly.to_text(&vars),
            })
            .collect();
        GeneratorExport {
            algebra: l.name().to_string(),
            arity,
            min_depth,
            max_depth,
            vars,
            generators,
        }
    }
}

/// True when every coefficient is zero, i.e. `x` is ad-nilpotent.
pub(crate) fn all_vanish(values: &[Rational]) -> bool {
    values.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog;
    use crate::linalg::int;

    #[test]
    fn invariant_values_examples() {
        let l = catalog::sl(2).unwrap();
        assert!(all_vanish(&invariant_values(&l, &l.basis_element(0)).unwrap()));
        assert_eq!(
            invariant_values(&l, &l.basis_element(1)).unwrap(),
            vec![int(0), int(-4), int(0)]
        );
        assert!(all_vanish(&invariant_values(&l, &Element::zero(3)).unwrap()));
    }

    #[test]
    fn generator_value_examples() {
        let l = catalog::sl(2).unwrap();
        let ef = [l.basis_element(0), l.basis_element(2)];
        let f: BracketExpr = "[y1,y2]".parse().unwrap();
        assert_eq!(generator_value(&l, &f, &ef, 1).unwrap(), int(-4));
        assert_eq!(generator_value(&l, &BracketExpr::leaf(1), &ef, 1).unwrap(), int(0));
        assert!(matches!(
            generator_value(&l, &f, &ef, 3),
            Err(Error::IndexOutOfRange { index: 3, bound: 3 })
        ));
    }

    #[test]
    fn sl2_single_variable_family() {
        let l = catalog::sl(2).unwrap();
        let gens = symbolic_generators(&l, 1, 1, 1).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].coeff_index, 1);
        let vars = tuple_variable_names(&l, 1);
        assert_eq!(vars, ["y1_e", "y1_h", "y1_f"]);
        assert_eq!(gens[0].poly.to_text(&vars), "-4*y1_e*y1_f - 4*y1_h^2");
        assert!(symbolic_generators(&l, 1, 2, 2).unwrap().is_empty());
    }

    #[test]
    fn size_gate() {
        let l = catalog::sl(3).unwrap();
        assert!(matches!(symbolic_generators(&l, 2, 1, 1), Err(Error::SizeGate(_))));
        let s = catalog::sl(2).unwrap();
        assert!(matches!(symbolic_generators(&s, 2, 1, 6), Err(Error::SizeGate(_))));
    }
}
