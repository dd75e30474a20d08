//! Refutation of "this basis of a semisimple algebra is very nilpotent".
//!
//! A cheap search for a non-nilpotent bracket of depth <= 2 runs first.
//! Otherwise the descent construction is applied repeatedly: each level
//! replaces the algebra by the reductive subalgebra `k` of the previous
//! step, equipped with the extracted `x` basis, until a non-nilpotent
//! element is exhibited. Dimensions strictly decrease, so this terminates.

use serde::Serialize;

use super::descent::descent_step;
use super::grading::is_reductive_in;
use crate::bracket::{find_witness_where, BracketExpr, DEFAULT_LAYER_CAP};
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra, Subalgebra};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RefutationOutcome {
    /// An iterated bracket of the basis that is not ad-nilpotent.
    DirectWitness { expr: BracketExpr, value: Element },
    /// A nonzero central element of the level-`level` subalgebra; central
    /// elements of a reductive subalgebra are semisimple, hence not nilpotent.
    StructuralContradiction {
        non_nilpotent_central: Element,
        level: usize,
    },
    /// A basis element of the level-`level` subalgebra (an `x_{j,k}` of the
    /// previous level, not an iterated bracket of the original basis) that
    /// is not ad-nilpotent.
    NonNilpotentDescendant {
        element: Element,
        level: usize,
        index: usize,
    },
}

impl RefutationOutcome {
    /// The element claimed to be non-nilpotent, in ambient coordinates.
    pub fn reported_element(&self) -> &Element {
        match self {
            RefutationOutcome::DirectWitness { value, .. } => value,
            RefutationOutcome::StructuralContradiction {
                non_nilpotent_central, ..
            } => non_nilpotent_central,
            RefutationOutcome::NonNilpotentDescendant { element, .. } => element,
        }
    }
}

/// One descent level, with every element in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentTrace {
    pub level: usize,
    pub algebra_dim: usize,
    pub triple: [Element; 3],
    pub highest_weight: i64,
    pub z: Vec<Element>,
    pub k_dim: usize,
    pub k_basis: Vec<Element>,
    pub extracted: Vec<(usize, usize)>,
    pub extracted_basis: Vec<Element>,
    pub non_nilpotent_x: Vec<(usize, usize)>,
    pub k_reductive: bool,
    pub checks_passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefutationReport {
    pub trace: Vec<DescentTrace>,
    pub outcome: RefutationOutcome,
}

#[derive(Clone, Copy, Debug)]
pub struct RefuteOptions {
    /// Depth of the initial direct bracket search; 0 skips it.
    pub direct_search_depth: usize,
}

impl Default for RefuteOptions {
    fn default() -> Self {
        RefuteOptions { direct_search_depth: 2 }
    }
}

pub fn refute_very_nilpotent_basis(l: &LieAlgebra, basis: &[Element]) -> Result<RefutationReport> {
    refute_with(l, basis, RefuteOptions::default())
}

pub fn refute_with(l: &LieAlgebra, basis: &[Element], opts: RefuteOptions) -> Result<RefutationReport> {
    let n = l.dim();
    if n == 0 || !l.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let span = Subalgebra::span(l, basis)?;
    if span.dim() != n {
        return Err(Error::NotSpanning { rank: span.dim(), dim: n });
    }
    if opts.direct_search_depth > 0 {
        if let Some(w) = find_witness_where(l, basis, 1, opts.direct_search_depth, DEFAULT_LAYER_CAP)? {
            return Ok(RefutationReport {
                trace: Vec::new(),
                outcome: RefutationOutcome::DirectWitness {
                    expr: w.expr,
                    value: w.value,
                },
            });
        }
    }
    // basis elements that are not nilpotent are depth-1 witnesses
    for (i, y) in basis.iter().enumerate() {
        if !l.is_ad_nilpotent(y)? {
            return Ok(RefutationReport {
                trace: Vec::new(),
                outcome: RefutationOutcome::DirectWitness {
                    expr: BracketExpr::leaf(i + 1),
                    value: y.clone(),
                },
            });
        }
    }
    // the descent needs a nonzero first entry
    let pivot = basis.iter().position(|y| !y.is_zero()).expect("spanning");
    let mut ordered = vec![basis[pivot].clone()];
    let mut labels = vec![pivot + 1];
    for (i, y) in basis.iter().enumerate() {
        if i != pivot {
            ordered.push(y.clone());
            labels.push(i + 1);
        }
    }

    let step = descent_step(l, &ordered)?;
    let mut trace = vec![trace_entry(l, 0, &Matrix::identity(n), &step)?];
    if let Some(&(j, k)) = step.non_nilpotent_x.first() {
        // pr_0 [z_j, y_k] is not nilpotent, so neither is [z_j, y_k]
        let y1 = BracketExpr::leaf(labels[0]);
        let z_expr = BracketExpr::ad_power(&y1, step.highest_weight as usize, BracketExpr::leaf(labels[j]));
        let expr = BracketExpr::node(z_expr, BracketExpr::leaf(labels[k]));
        let value = expr.eval(l, basis)?;
        if !l.is_ad_nilpotent(&value)? {
            return Ok(RefutationReport {
                trace,
                outcome: RefutationOutcome::DirectWitness { expr, value },
            });
        }
    }
    let embed = step.k.basis_rows().transpose();
    let inner = step.k.require_induced()?.clone();
    let inner_basis: Vec<Element> = step
        .extracted_basis()
        .iter()
        .map(|v| Element::new(step.k.coordinates(v).expect("x lies in k")))
        .collect();
    let outcome = descend(l, 1, inner, inner_basis, embed, &mut trace)?;
    Ok(RefutationReport { trace, outcome })
}

/// Continues the descent at `level >= 1` inside `inner`, whose coordinates
/// map to ambient coordinates through `embed` (ambient_dim x inner_dim).
pub(crate) fn descend(
    ambient: &LieAlgebra,
    mut level: usize,
    mut inner: LieAlgebra,
    mut basis: Vec<Element>,
    mut embed: Matrix,
    trace: &mut Vec<DescentTrace>,
) -> Result<RefutationOutcome> {
    loop {
        let to_ambient = |v: &Element| Element::new(embed.mul_vec(&v.coords));
        if !inner.is_semisimple() {
            let center = inner.center();
            let Some(c) = center.basis().into_iter().next() else {
                return Err(Error::InvalidParameter(
                    "descent produced a subalgebra that is neither semisimple nor reductive".into(),
                ));
            };
            let c = to_ambient(&c);
            if ambient.is_ad_nilpotent(&c)? {
                return Err(Error::InvalidParameter(
                    "central element of the descent subalgebra is nilpotent".into(),
                ));
            }
            return Ok(RefutationOutcome::StructuralContradiction {
                non_nilpotent_central: c,
                level,
            });
        }
        for (i, b) in basis.iter().enumerate() {
            let amb = to_ambient(b);
            if !ambient.is_ad_nilpotent(&amb)? {
                return Ok(RefutationOutcome::NonNilpotentDescendant {
                    element: amb,
                    level,
                    index: i,
                });
            }
        }
        let step = descent_step(&inner, &basis)?;
        trace.push(trace_entry(ambient, level, &embed, &step)?);
        let next_basis: Vec<Element> = step
            .extracted_basis()
            .iter()
            .map(|v| Element::new(step.k.coordinates(v).expect("x lies in k")))
            .collect();
        embed = &embed * &step.k.basis_rows().transpose();
        inner = step.k.require_induced()?.clone();
        basis = next_basis;
        level += 1;
    }
}

fn trace_entry(
    ambient: &LieAlgebra,
    level: usize,
    embed: &Matrix,
    step: &super::DescentStep,
) -> Result<DescentTrace> {
    let to_ambient = |v: &Element| Element::new(embed.mul_vec(&v.coords));
    let k_basis: Vec<Element> = step.k.basis().iter().map(to_ambient).collect();
    let k_ambient = Subalgebra::span(ambient, &k_basis)?;
    Ok(DescentTrace {
        level,
        algebra_dim: embed.cols(),
        triple: [
            to_ambient(&step.triple.y),
            to_ambient(&step.triple.h),
            to_ambient(&step.triple.f),
        ],
        highest_weight: step.highest_weight,
        z: step.z.iter().map(to_ambient).collect(),
        k_dim: step.k.dim(),
        k_basis,
        extracted: step.extracted.clone(),
        extracted_basis: step.extracted_basis().iter().map(to_ambient).collect(),
        non_nilpotent_x: step.non_nilpotent_x.clone(),
        k_reductive: is_reductive_in(ambient, &k_ambient)?,
        checks_passed: step.checks.all(),
    })
}
