use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};

/// An iterated bracket in the tuple entries `y1..yn`: either a projection
/// `y_i` (1-based) or the bracket of two expressions. Subtrees are shared.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BracketExpr {
    Leaf(usize),
    Node(Arc<BracketExpr>, Arc<BracketExpr>),
}

impl BracketExpr {
    /// `y_i`, with `i >= 1`.
    pub fn leaf(i: usize) -> Self {
        assert!(i >= 1, "leaves are numbered from 1");
        BracketExpr::Leaf(i)
    }

    pub fn node(left: BracketExpr, right: BracketExpr) -> Self {
        BracketExpr::Node(Arc::new(left), Arc::new(right))
    }

    /// `depth(y_i) = 1`, `depth([f, g]) = max(depth f, depth g) + 1`.
    pub fn depth(&self) -> usize {
        match self {
            BracketExpr::Leaf(_) => 1,
            BracketExpr::Node(l, r) => l.depth().max(r.depth()) + 1,
        }
    }

    /// Largest leaf index used.
    pub fn max_leaf(&self) -> usize {
        match self {
            BracketExpr::Leaf(i) => *i,
            BracketExpr::Node(l, r) => l.max_leaf().max(r.max_leaf()),
        }
    }

    /// Number of leaves (bracket length).
    pub fn leaf_count(&self) -> usize {
        match self {
            BracketExpr::Leaf(_) => 1,
            BracketExpr::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// `f(y_1, ..., y_n)` via the algebra's bracket.
    pub fn eval(&self, l: &LieAlgebra, tuple: &[Element]) -> Result<Element> {
        let leaf = self.max_leaf();
        if leaf > tuple.len() {
            return Err(Error::ArityMismatch {
                leaf,
                arity: tuple.len(),
            });
        }
        for y in tuple {
            if y.dim() != l.dim() {
                return Err(Error::DimensionMismatch {
                    expected: l.dim(),
                    found: y.dim(),
                });
            }
        }
        Ok(self.eval_unchecked(l, tuple))
    }

    pub(crate) fn eval_unchecked(&self, l: &LieAlgebra, tuple: &[Element]) -> Element {
        match self {
            BracketExpr::Leaf(i) => tuple[i - 1].clone(),
            BracketExpr::Node(a, b) => {
                let x = a.eval_unchecked(l, tuple);
                if x.is_zero() {
                    return x;
                }
                let y = b.eval_unchecked(l, tuple);
                l.bracket_unchecked(&x, &y)
            }
        }
    }

    /// `ad_{inner}^power (outer)` as nested brackets `[inner, [inner, ... outer]]`.
    pub fn ad_power(inner: &BracketExpr, power: usize, outer: BracketExpr) -> BracketExpr {
        (0..power).fold(outer, |acc, _| BracketExpr::node(inner.clone(), acc))
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketExpr::Leaf(i) => write!(f, "y{i}"),
            BracketExpr::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

impl fmt::Debug for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BracketExpr {
    type Err = Error;

    /// Parses the text form `y3`, `[y1,y2]`, `[[y1,y2],y2]`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let e = parse(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in expression `{s}`")));
        }
        Ok(e)
    }
}

fn parse(chars: &[char], pos: &mut usize) -> Result<BracketExpr> {
    let err = |msg: &str, at: usize| Error::Parse(format!("expression: {msg} at offset {at}"));
    match chars.get(*pos) {
        Some('y') => {
            *pos += 1;
            let start = *pos;
            while chars.get(*pos).is_some_and(char::is_ascii_digit) {
                *pos += 1;
            }
            let digits: String = chars[start..*pos].iter().collect();
            match digits.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(BracketExpr::Leaf(i)),
                _ => Err(err("expected a leaf index >= 1", start)),
            }
        }
        Some('[') => {
            *pos += 1;
            let l = parse(chars, pos)?;
            if chars.get(*pos) != Some(&',') {
                return Err(err("expected `,`", *pos));
            }
            *pos += 1;
            let r = parse(chars, pos)?;
            if chars.get(*pos) != Some(&']') {
                return Err(err("expected `]`", *pos));
            }
            *pos += 1;
            Ok(BracketExpr::node(l, r))
        }
        _ => Err(err("expected `y` or `[`", *pos)),
    }
}

impl Serialize for BracketExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BracketExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
