//! Deciding whether a tuple lies in a common nilradical, a common Borel
//! subalgebra, or neither, up to the adjoint group.

use std::collections::HashSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::invariants::{all_vanish, invariant_values};
use crate::bracket::{find_witness_where, value_closure_capped, BracketExpr, Witness, DEFAULT_LAYER_CAP};
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra, SeriesKind, Subalgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "common_nilradical")]
    CommonNilradical,
    #[serde(rename = "common_borel")]
    CommonBorelOnly,
    #[serde(rename = "neither")]
    Neither,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CommonNilradical => "common_nilradical",
            Verdict::CommonBorelOnly => "common_borel",
            Verdict::Neither => "neither",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Evidence {
    Nilradical {
        nilpotency_class: usize,
    },
    BorelOnly {
        /// A tuple entry that is not ad-nilpotent.
        non_nilpotent: Witness,
    },
    Neither {
        /// Dimensions of the derived series of `k`; the last is nonzero.
        derived_series_dims: Vec<usize>,
        /// A non-nilpotent bracket of depth at least 2, if one was found.
        witness: Option<Witness>,
        witness_depth_cap: usize,
        /// Depth at which the witness search hit the layer cap, if it did.
        search_aborted_at: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyReport {
    pub verdict: Verdict,
    /// Subalgebra generated by the tuple.
    pub k: Subalgebra,
    /// One bracket expression per basis row of `k`.
    pub provenance: Vec<BracketExpr>,
    pub evidence: Evidence,
}

impl Serialize for ClassifyReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ClassifyReport", 5)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("k_dim", &self.k.dim())?;
        st.serialize_field("k_basis", &self.k.basis())?;
        st.serialize_field("k_provenance", &self.provenance)?;
        st.serialize_field("evidence", &self.evidence)?;
        st.end()
    }
}

fn require_semisimple(l: &LieAlgebra) -> Result<()> {
    if l.is_semisimple() {
        Ok(())
    } else {
        Err(Error::NotSemisimple)
    }
}

/// Classifies `tuple` by the subalgebra `k` it generates: not solvable gives
/// `Neither`; solvable with every basis value ad-nilpotent gives
/// `CommonNilradical`; otherwise `CommonBorelOnly`.
pub fn classify_tuple(l: &LieAlgebra, tuple: &[Element], witness_depth: usize) -> Result<ClassifyReport> {
    classify_tuple_capped(l, tuple, witness_depth, DEFAULT_LAYER_CAP)
}

pub fn classify_tuple_capped(
    l: &LieAlgebra,
    tuple: &[Element],
    witness_depth: usize,
    layer_cap: usize,
) -> Result<ClassifyReport> {
    require_semisimple(l)?;
    let (k, provenance) = l.generated_subalgebra(tuple)?;
    let induced = k.require_induced()?;
    if !induced.is_solvable() {
        let derived_series_dims = induced.series_dims(SeriesKind::Derived, None)?;
        let (witness, search_aborted_at) = if witness_depth >= 2 {
            match find_witness_where(l, tuple, 2, witness_depth, layer_cap) {
                Ok(w) => (w, None),
                Err(Error::LayerCap { depth, .. }) => (None, Some(depth)),
                Err(e) => return Err(e),
            }
        } else {
            (None, None)
        };
        return Ok(ClassifyReport {
            verdict: Verdict::Neither,
            k,
            provenance,
            evidence: Evidence::Neither {
                derived_series_dims,
                witness,
                witness_depth_cap: witness_depth,
                search_aborted_at,
            },
        });
    }
    let rows = k.basis();
    for (row, expr) in rows.iter().zip(&provenance) {
        if !l.is_ad_nilpotent(row)? {
            // brackets in a solvable k are nilpotent, so this is normally a tuple entry
            return Ok(ClassifyReport {
                verdict: Verdict::CommonBorelOnly,
                evidence: Evidence::BorelOnly {
                    non_nilpotent: Witness {
                        depth: expr.depth(),
                        expr: expr.clone(),
                        value: row.clone(),
                    },
                },
                k,
                provenance,
            });
        }
    }
    let nilpotency_class = induced.nilpotency_class().ok_or_else(|| {
        Error::InvalidParameter("solvable subalgebra spanned by nilpotent elements is not nilpotent".into())
    })?;
    Ok(ClassifyReport {
        verdict: Verdict::CommonNilradical,
        k,
        provenance,
        evidence: Evidence::Nilradical { nilpotency_class },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossCheckStatus {
    Consistent,
    /// `Neither`, but no depth >= 2 value within the depth bound is
    /// non-nilpotent.
    WitnessBeyondCap,
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub verdict: Verdict,
    pub depth: usize,
    pub status: CrossCheckStatus,
    /// First tuple entry with a nonvanishing invariant.
    pub depth_one_violation: Option<Witness>,
    /// First value of an expression of depth `2..=depth` with a
    /// nonvanishing invariant.
    pub deep_violation: Option<Witness>,
    /// Distinct values of depth `2..=depth` expressions that were checked.
    pub deep_values_checked: usize,
}

/// Compares the structural verdict with the vanishing pattern of all
/// invariants on all iterated brackets of depth at most `depth`.
///
/// The values of depth `2..=d` expressions are exactly the brackets of two
/// values of depth `<= d - 1`, so the check is exhaustive.
pub fn cross_check(l: &LieAlgebra, tuple: &[Element], depth: usize) -> Result<CrossCheckReport> {
    cross_check_capped(l, tuple, depth, DEFAULT_LAYER_CAP)
}

pub fn cross_check_capped(
    l: &LieAlgebra,
    tuple: &[Element],
    depth: usize,
    layer_cap: usize,
) -> Result<CrossCheckReport> {
    if depth == 0 {
        return Err(Error::InvalidParameter("cross-check depth must be at least 1".into()));
    }
    let verdict = classify_tuple_capped(l, tuple, 0, layer_cap)?.verdict;
    let violates = |v: &Element| -> Result<bool> { Ok(!all_vanish(&invariant_values(l, v)?)) };

    let mut depth_one_violation = None;
    for (i, y) in tuple.iter().enumerate() {
        if violates(y)? {
            depth_one_violation = Some(Witness {
                depth: 1,
                expr: BracketExpr::leaf(i + 1),
                value: y.clone(),
            });
            break;
        }
    }

    let mut deep_violation = None;
    let mut seen: HashSet<Element> = HashSet::new();
    if depth >= 2 {
        let closure = value_closure_capped(l, tuple, depth - 1, layer_cap)?;
        let operands: Vec<(usize, &crate::bracket::ClosureEntry)> = closure.entries().collect();
        'outer: for (da, a) in &operands {
            for (db, b) in &operands {
                let v = l.bracket_unchecked(&a.value, &b.value);
                if v.is_zero() || !seen.insert(v.clone()) {
                    continue;
                }
                if violates(&v)? {
                    deep_violation = Some(Witness {
                        depth: da.max(db) + 1,
                        expr: BracketExpr::node(a.expr.clone(), b.expr.clone()),
                        value: v,
                    });
                    break 'outer;
                }
            }
        }
    }

    let status = match verdict {
        Verdict::CommonNilradical if depth_one_violation.is_none() && deep_violation.is_none() => {
            CrossCheckStatus::Consistent
        }
        Verdict::CommonBorelOnly if depth_one_violation.is_some() && deep_violation.is_none() => {
            CrossCheckStatus::Consistent
        }
        Verdict::Neither if deep_violation.is_some() => CrossCheckStatus::Consistent,
        Verdict::Neither => CrossCheckStatus::WitnessBeyondCap,
        _ => CrossCheckStatus::Inconsistent,
    };
    Ok(CrossCheckReport {
        verdict,
        depth,
        status,
        depth_one_violation,
        deep_violation,
        deep_values_checked: seen.len(),
    })
}
