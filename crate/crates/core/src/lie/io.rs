//! JSON file formats for algebras, elements and tuples. Rationals are
//! strings `"p"` or `"p/q"`; indices are 0-based; unknown keys are rejected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Element, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    dim: usize,
    basis: Vec<String>,
    brackets: Vec<BracketEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketEntry {
    i: usize,
    j: usize,
    coeffs: BTreeMap<usize, String>,
}

/// `{"elements": [{"coords": [...]}, ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleFile {
    pub elements: Vec<Element>,
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

impl LieAlgebra {
    pub fn from_json(s: &str) -> Result<LieAlgebra> {
        let file: AlgebraFile = serde_json::from_str(s).map_err(json_err)?;
        if file.dim != file.basis.len() {
            return Err(Error::Parse(format!(
                "dim is {} but {} basis labels were given",
                file.dim,
                file.basis.len()
            )));
        }
        let mut entries = Vec::with_capacity(file.brackets.len());
        for b in file.brackets {
            let mut v = Vec::with_capacity(b.coeffs.len());
            for (k, c) in b.coeffs {
                v.push((k, parse_rational(&c)?));
            }
            entries.push(((b.i, b.j), v));
        }
        LieAlgebra::new(file.name, file.basis, entries)
    }

    /// Canonical pretty JSON with a trailing newline; brackets sorted by
    /// `(i, j)`, coefficients by `k`, zero brackets omitted.
    pub fn to_json(&self) -> String {
        let brackets = self
            .structure_constants()
            .iter()
            .map(|(&(i, j), v)| BracketEntry {
                i,
                j,
                coeffs: v.iter().map(|(k, c)| (*k, format_rational(c))).collect(),
            })
            .collect();
        let file = AlgebraFile {
            name: self.name().to_string(),
            dim: self.dim(),
            basis: self.basis_labels().to_vec(),
            brackets,
        };
        let mut s = serde_json::to_string_pretty(&file).expect("serializable");
        s.push('\n');
        s
    }
}

impl Element {
    pub fn from_json(s: &str) -> Result<Element> {
        serde_json::from_str(s).map_err(json_err)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl TupleFile {
    pub fn from_json(s: &str) -> Result<TupleFile> {
        serde_json::from_str(s).map_err(json_err)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
