use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::BracketExpr;
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    /// Expressions of depth exactly `d`.
    Exact,
    /// Expressions of depth at most `d`.
    Cumulative,
}

/// Cumulative counts `A_0..=A_d` of the raw grammar in `n` leaves:
/// `A_0 = 0`, `A_1 = n`, `A_(k+1) = A_k + (A_k^2 - A_(k-1)^2)`.
///
/// `[f, g]` and `[g, f]` are distinct and `[f, f]` is included.
pub fn cumulative_counts(arity: usize, depth: usize) -> Vec<BigUint> {
    let mut a = vec![BigUint::zero(), BigUint::from(arity)];
    while a.len() <= depth {
        let k = a.len() - 1;
        let next = &a[k] + (&a[k] * &a[k] - &a[k - 1] * &a[k - 1]);
        a.push(next);
    }
    a.truncate(depth + 1);
    a
}

pub fn count_exprs(arity: usize, depth: usize, mode: CountMode) -> BigUint {
    if depth == 0 {
        return BigUint::zero();
    }
    let a = cumulative_counts(arity, depth);
    match mode {
        CountMode::Cumulative => a[depth].clone(),
        CountMode::Exact => &a[depth] - &a[depth - 1],
    }
}

/// Every expression of depth `<= max_depth` exactly once, in canonical
/// order: ascending depth, then lexicographic by (left, right) position in
/// the emission order.
pub struct ExprEnumerator {
    arity: usize,
    max_depth: usize,
    emitted: Vec<BracketExpr>,
    depth: usize,
    // emitted[..prev_start] has depth < depth - 1, emitted[prev_start..prev_end] has depth - 1
    prev_start: usize,
    prev_end: usize,
    left: usize,
    right: usize,
}

pub fn enumerate_exprs(arity: usize, max_depth: usize) -> Result<ExprEnumerator> {
    enumerate_exprs_capped(arity, max_depth, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_exprs_capped(arity: usize, max_depth: usize, cap: u64) -> Result<ExprEnumerator> {
    if arity == 0 || max_depth == 0 {
        return Err(Error::InvalidParameter(
            "enumeration needs arity >= 1 and depth >= 1".into(),
        ));
    }
    let count = count_exprs(arity, max_depth, CountMode::Cumulative);
    if count.to_u64().is_none_or(|c| c > cap) {
        return Err(Error::EnumerationCap { count, cap });
    }
    Ok(ExprEnumerator {
        arity,
        max_depth,
        emitted: Vec::new(),
        depth: 1,
        prev_start: 0,
        prev_end: 0,
        left: 0,
        right: 0,
    })
}

impl Iterator for ExprEnumerator {
    type Item = BracketExpr;

    fn next(&mut self) -> Option<BracketExpr> {
        if self.depth == 1 {
            if self.emitted.len() < self.arity {
                let e = BracketExpr::leaf(self.emitted.len() + 1);
                self.emitted.push(e.clone());
                return Some(e);
            }
            self.advance_depth();
        }
        loop {
            if self.depth > self.max_depth {
                return None;
            }
            if self.left >= self.prev_end {
                self.advance_depth();
                continue;
            }
            // a pair qualifies iff at least one side has depth exactly depth - 1
            if self.left < self.prev_start && self.right < self.prev_start {
                self.right = self.prev_start;
            }
            if self.right >= self.prev_end {
                self.left += 1;
                self.right = 0;
                continue;
            }
            let e = BracketExpr::node(
                self.emitted[self.left].clone(),
                self.emitted[self.right].clone(),
            );
            self.right += 1;
            self.emitted.push(e.clone());
            return Some(e);
        }
    }
}

impl ExprEnumerator {
    fn advance_depth(&mut self) {
        self.depth += 1;
        self.prev_start = self.prev_end;
        self.prev_end = self.emitted.len();
        self.left = 0;
        self.right = 0;
    }
}
