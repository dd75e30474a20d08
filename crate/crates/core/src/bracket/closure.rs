use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::BracketExpr;
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra, Subalgebra};
use crate::linalg::{Echelon, Rational};

pub const DEFAULT_LAYER_CAP: usize = 100_000;

/// A value `f(y_1..y_n)` with one witnessing expression.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureEntry {
    pub expr: BracketExpr,
    pub value: Element,
}

/// First attainment of the zero value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroRecord {
    pub depth: usize,
    pub expr: BracketExpr,
}

/// Distinct values of iterated brackets of a tuple, layered by depth.
///
/// `layers[k - 1]` holds the nonzero values first attained at depth `k`.
/// Zero is recorded once in `zero` and never used as a bracket operand.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValueClosure {
    pub layers: Vec<Vec<ClosureEntry>>,
    pub zero: Option<ZeroRecord>,
    /// An empty layer was produced, so every deeper layer is empty too.
    pub saturated: bool,
}

impl ValueClosure {
    /// Layer at `depth` (1-based); empty when not computed or beyond saturation.
    pub fn layer(&self, depth: usize) -> &[ClosureEntry] {
        depth
            .checked_sub(1)
            .and_then(|i| self.layers.get(i))
            .map_or(&[], Vec::as_slice)
    }

    pub fn computed_depth(&self) -> usize {
        self.layers.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &ClosureEntry)> {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.iter().map(move |e| (i + 1, e)))
    }

    pub fn value_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }
}

/// Layer-by-layer construction of a [`ValueClosure`], with a visitor that
/// can stop the computation at the first interesting value.
pub struct ClosureBuilder<'a> {
    algebra: &'a LieAlgebra,
    closure: ValueClosure,
    seen: HashSet<Element>,
    // flattened nonzero values in emission order
    flat: Vec<Element>,
    flat_int: Vec<IntVec>,
    flat_exprs: Vec<BracketExpr>,
    brackets: IntBracket,
    layer_start: usize,
    cap: usize,
}

impl<'a> ClosureBuilder<'a> {
    pub fn new(l: &'a LieAlgebra, tuple: &[Element], cap: usize) -> Result<Self> {
        for y in tuple {
            if y.dim() != l.dim() {
                return Err(Error::DimensionMismatch {
                    expected: l.dim(),
                    found: y.dim(),
                });
            }
        }
        let mut b = ClosureBuilder {
            algebra: l,
            closure: ValueClosure::default(),
            seen: HashSet::new(),
            flat: Vec::new(),
            flat_int: Vec::new(),
            flat_exprs: Vec::new(),
            brackets: IntBracket::new(l),
            layer_start: 0,
            cap,
        };
        let mut first = Vec::new();
        for (i, y) in tuple.iter().enumerate() {
            b.record(1, BracketExpr::leaf(i + 1), y.clone(), &mut first);
        }
        b.commit(first);
        Ok(b)
    }

    fn record(&mut self, depth: usize, expr: BracketExpr, value: Element, layer: &mut Vec<ClosureEntry>) -> bool {
        if value.is_zero() {
            if self.closure.zero.is_none() {
                self.closure.zero = Some(ZeroRecord { depth, expr });
            }
            return false;
        }
        if !self.seen.insert(value.clone()) {
            return false;
        }
        layer.push(ClosureEntry { expr, value });
        true
    }

    fn commit(&mut self, layer: Vec<ClosureEntry>) {
        self.layer_start = self.flat.len();
        for e in &layer {
            self.flat.push(e.value.clone());
            self.flat_int.push(IntVec::from(&e.value));
            self.flat_exprs.push(e.expr.clone());
        }
        if layer.is_empty() {
            self.closure.saturated = true;
        }
        self.closure.layers.push(layer);
    }

    /// For each recorded value, whether it brackets to zero with the span of
    /// all recorded values.
    fn central_flags(&self) -> Vec<bool> {
        let span = Echelon::from_rows(self.algebra.dim(), self.flat.iter().map(|v| v.coords.as_slice()));
        let span: Vec<Element> = span.basis().into_iter().map(Element::new).collect();
        let span: Vec<IntVec> = span.iter().map(IntVec::from).collect();
        self.flat_int
            .iter()
            .map(|v| span.iter().all(|s| self.brackets.vanishes(v, s)))
            .collect()
    }

    pub fn closure(&self) -> &ValueClosure {
        &self.closure
    }

    pub fn into_closure(self) -> ValueClosure {
        self.closure
    }

    pub fn depth(&self) -> usize {
        self.closure.layers.len()
    }

    pub fn is_saturated(&self) -> bool {
        self.closure.saturated
    }

    /// Computes the next layer, calling `visit` on each new value in
    /// canonical order. If `visit` returns true the layer is committed
    /// partially and `Ok(true)` is returned.
    pub fn extend(&mut self, mut visit: impl FnMut(usize, &ClosureEntry) -> bool) -> Result<bool> {
        let depth = self.depth() + 1;
        let prev_start = self.layer_start;
        let prev_end = self.flat.len();
        let central = self.central_flags();
        let mut layer = Vec::new();
        for i in 0..prev_end {
            let j_from = if i < prev_start { prev_start } else { 0 };
            for j in j_from..prev_end {
                if central[i] || central[j] {
                    // the bracket is zero; only its first occurrence matters
                    if self.closure.zero.is_none() {
                        let expr = BracketExpr::node(self.flat_exprs[i].clone(), self.flat_exprs[j].clone());
                        self.closure.zero = Some(ZeroRecord { depth, expr });
                    }
                    continue;
                }
                let v = self.brackets.bracket(&self.flat_int[i], &self.flat_int[j]);
                let expr = BracketExpr::node(self.flat_exprs[i].clone(), self.flat_exprs[j].clone());
                if self.record(depth, expr, v, &mut layer) {
                    if layer.len() > self.cap {
                        let size = layer.len();
                        self.commit(layer);
                        return Err(Error::LayerCap {
                            depth,
                            size,
                            cap: self.cap,
                            partial: Box::new(self.closure.clone()),
                        });
                    }
                    if visit(depth, layer.last().expect("just pushed")) {
                        self.commit(layer);
                        return Ok(true);
                    }
                }
            }
        }
        self.commit(layer);
        Ok(false)
    }
}

/// An element as an integer vector over a common denominator.
struct IntVec {
    num: Vec<BigInt>,
    den: BigInt,
}

impl From<&Element> for IntVec {
    fn from(x: &Element) -> Self {
        let den = x.coords.iter().fold(BigInt::one(), |d, c| d.lcm(c.denom()));
        let num = x.coords.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        IntVec { num, den }
    }
}

/// Structure constants scaled to integers, so a bracket needs no gcd until
/// the final normalization.
struct IntBracket {
    dim: usize,
    den: BigInt,
    // row i * dim + j holds the nonzero (k, c_ij^k * den)
    table: Vec<Vec<(usize, BigInt)>>,
}

impl IntBracket {
    fn new(l: &LieAlgebra) -> Self {
        let dim = l.dim();
        let pairs = (0..dim).flat_map(|i| (0..dim).map(move |j| (i, j)));
        let den = pairs
            .clone()
            .flat_map(|(i, j)| l.basis_bracket(i, j).iter())
            .fold(BigInt::one(), |d, (_, c)| d.lcm(c.denom()));
        let table = pairs
            .map(|(i, j)| {
                l.basis_bracket(i, j)
                    .iter()
                    .map(|(k, c)| (*k, c.numer() * (&den / c.denom())))
                    .collect()
            })
            .collect();
        IntBracket { dim, den, table }
    }

    fn numerator(&self, x: &IntVec, y: &IntVec) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.dim];
        for (i, xi) in x.num.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.num.iter().enumerate() {
                let entry = &self.table[i * self.dim + j];
                if yj.is_zero() || entry.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, ck) in entry {
                    out[*k] += &c * ck;
                }
            }
        }
        out
    }

    fn vanishes(&self, x: &IntVec, y: &IntVec) -> bool {
        self.numerator(x, y).iter().all(Zero::is_zero)
    }

    fn bracket(&self, x: &IntVec, y: &IntVec) -> Element {
        let den = &x.den * &y.den * &self.den;
        Element::new(
            self.numerator(x, y)
                .into_iter()
                .map(|n| Rational::new(n, den.clone()))
                .collect(),
        )
    }
}

/// All distinct iterated-bracket values of `tuple` up to `max_depth`.
pub fn value_closure(l: &LieAlgebra, tuple: &[Element], max_depth: usize) -> Result<ValueClosure> {
    value_closure_capped(l, tuple, max_depth, DEFAULT_LAYER_CAP)
}

pub fn value_closure_capped(
    l: &LieAlgebra,
    tuple: &[Element],
    max_depth: usize,
    cap: usize,
) -> Result<ValueClosure> {
    if max_depth == 0 {
        return Err(Error::InvalidParameter("max_depth must be >= 1".into()));
    }
    let mut b = ClosureBuilder::new(l, tuple, cap)?;
    while b.depth() < max_depth && !b.is_saturated() {
        b.extend(|_, _| false)?;
    }
    Ok(b.into_closure())
}

/// A recorded iterated-bracket value that is not ad-nilpotent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub depth: usize,
    pub expr: BracketExpr,
    pub value: Element,
}

/// First value, in canonical closure order, that fails `is_ad_nilpotent`.
pub fn find_non_nilpotent_witness(
    l: &LieAlgebra,
    tuple: &[Element],
    max_depth: usize,
) -> Result<Option<Witness>> {
    find_witness_where(l, tuple, 1, max_depth, DEFAULT_LAYER_CAP)
}

/// Same search, only reporting values of depth `>= min_depth`.
pub(crate) fn find_witness_where(
    l: &LieAlgebra,
    tuple: &[Element],
    min_depth: usize,
    max_depth: usize,
    cap: usize,
) -> Result<Option<Witness>> {
    let mut b = ClosureBuilder::new(l, tuple, cap)?;
    let non_nilpotent = |v: &Element| !l.is_ad_nilpotent(v).expect("dimension checked");
    if min_depth <= 1 && max_depth >= 1 {
        if let Some(e) = b.closure().layer(1).iter().find(|e| non_nilpotent(&e.value)) {
            return Ok(Some(Witness {
                depth: 1,
                expr: e.expr.clone(),
                value: e.value.clone(),
            }));
        }
    }
    let mut found = None;
    while b.depth() < max_depth && !b.is_saturated() {
        let stop = b.extend(|depth, e| {
            if depth >= min_depth && non_nilpotent(&e.value) {
                found = Some(Witness {
                    depth,
                    expr: e.expr.clone(),
                    value: e.value.clone(),
                });
                true
            } else {
                false
            }
        })?;
        if stop {
            break;
        }
    }
    Ok(found)
}

/// Two independent answers to "is this tuple a very nilpotent basis?".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VeryNilpotentVerdict {
    pub is_basis: bool,
    pub algebra_nilpotent: bool,
    /// Exact: a basis is very nilpotent iff the algebra is nilpotent.
    pub theorem_verdict: bool,
    /// Search evidence up to `check_depth`; a witness refutes outright.
    pub witness: Option<Witness>,
    pub check_depth: usize,
    /// Depth at which the search hit the layer cap, if it did.
    pub search_aborted_at: Option<usize>,
}

pub fn is_very_nilpotent_basis(
    l: &LieAlgebra,
    tuple: &[Element],
    check_depth: usize,
) -> Result<VeryNilpotentVerdict> {
    let span = Subalgebra::span(l, tuple)?;
    let is_basis = tuple.len() == l.dim() && span.dim() == l.dim();
    let algebra_nilpotent = l.is_nilpotent();
    let (witness, search_aborted_at) =
        match find_witness_where(l, tuple, 1, check_depth, DEFAULT_LAYER_CAP) {
            Ok(w) => (w, None),
            Err(Error::LayerCap { depth, .. }) => (None, Some(depth)),
            Err(e) => return Err(e),
        };
    Ok(VeryNilpotentVerdict {
        is_basis,
        algebra_nilpotent,
        theorem_verdict: is_basis && algebra_nilpotent,
        witness,
        check_depth,
        search_aborted_at,
    })
}
