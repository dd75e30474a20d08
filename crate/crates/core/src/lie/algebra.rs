use std::collections::BTreeMap;

use num_traits::Zero;

use super::Element;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

/// Sparse bracket value: `(k, c)` pairs with `c != 0`, sorted by `k`.
pub type SparseVec = Vec<(usize, Rational)>;

/// A finite-dimensional Lie algebra over the rationals, given by structure
/// constants `[b_i, b_j] = sum_k c_ij^k b_k` stored for `i < j` only.
///
/// Antisymmetry holds by construction; the Jacobi identity is checked by
/// [`LieAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis_labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), SparseVec>,
    // full table indexed by i * dim + j, antisymmetric
    table: Vec<SparseVec>,
}

/// One failed Jacobi triple.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct JacobiFailure {
    pub triple: (usize, usize, usize),
    pub defect: Element,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct ValidationReport {
    pub failures: Vec<JacobiFailure>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl LieAlgebra {
    /// Builds an algebra from sparse structure constants for pairs `i < j`.
    /// Zero coefficients are dropped; repeated `k` entries are summed.
    pub fn new(
        name: impl Into<String>,
        basis_labels: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), SparseVec)>,
    ) -> Result<Self> {
        let dim = basis_labels.len();
        let mut stored = BTreeMap::new();
        for ((i, j), vec) in brackets {
            if i >= j || j >= dim {
                return Err(Error::Parse(format!(
                    "bracket pair ({i}, {j}) must satisfy i < j < {dim}"
                )));
            }
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, c) in vec {
                if k >= dim {
                    return Err(Error::IndexOutOfRange { index: k, bound: dim });
                }
                *acc.entry(k).or_insert_with(Rational::zero) += c;
            }
            let sparse: SparseVec = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if stored.insert((i, j), sparse).is_some() {
                return Err(Error::Parse(format!("duplicate bracket pair ({i}, {j})")));
            }
        }
        stored.retain(|_, v: &mut SparseVec| !v.is_empty());
        let mut table = vec![SparseVec::new(); dim * dim];
        for (&(i, j), v) in &stored {
            table[i * dim + j] = v.clone();
            table[j * dim + i] = v.iter().map(|(k, c)| (*k, -c)).collect();
        }
        Ok(LieAlgebra {
            name: name.into(),
            basis_labels,
            brackets: stored,
            table,
        })
    }

    /// Builds an algebra from a function returning the dense coordinates of
    /// `[b_i, b_j]` for `i < j`.
    pub fn from_bracket_fn(
        name: impl Into<String>,
        basis_labels: Vec<String>,
        mut f: impl FnMut(usize, usize) -> Vec<Rational>,
    ) -> Result<Self> {
        let dim = basis_labels.len();
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let v = f(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: v.len(),
                    });
                }
                let sparse: SparseVec = v
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !sparse.is_empty() {
                    entries.push(((i, j), sparse));
                }
            }
        }
        Self::new(name, basis_labels, entries)
    }

    /// Abelian algebra with generic labels `b0, b1, ...`.
    pub fn abelian(name: impl Into<String>, dim: usize) -> Self {
        let labels = (0..dim).map(|i| format!("b{i}")).collect();
        Self::new(name, labels, []).expect("no brackets")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    /// Stored structure constants (`i < j`, nonzero brackets only).
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), SparseVec> {
        &self.brackets
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    /// Element from a label→coefficient list, e.g. `[("e", 1), ("h", 1)]`.
    pub fn element_from_labels(&self, terms: &[(&str, Rational)]) -> Result<Element> {
        let mut x = Element::zero(self.dim());
        for (label, c) in terms {
            let i = self
                .basis_labels
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| Error::Parse(format!("unknown basis label `{label}`")))?;
            x.coords[i] += c;
        }
        Ok(x)
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &Element, y: &Element) -> Element {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let entry = &self.table[i * n + j];
                if entry.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, ck) in entry {
                    out[*k] += &c * ck;
                }
            }
        }
        Element::new(out)
    }

    /// Matrix of `y -> [x, y]` in the algebra basis (column `j` is `[x, b_j]`).
    pub fn ad_matrix(&self, x: &Element) -> Result<Matrix> {
        self.check(x)?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.table[i * n + j] {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        Ok(m)
    }

    /// True iff `ad_x` is nilpotent, i.e. `ad_x^dim = 0`.
    pub fn is_ad_nilpotent(&self, x: &Element) -> Result<bool> {
        self.ad_matrix(x)?.is_nilpotent()
    }

    /// Every Jacobi triple `i < j < k` with a nonzero defect
    /// `[b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]`.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let basis: Vec<Element> = (0..n).map(|i| self.basis_element(i)).collect();
        let sparse_to_elem = |v: &SparseVec| {
            let mut e = Element::zero(n);
            for (k, c) in v {
                e.coords[*k] = c.clone();
            }
            e
        };
        let mut failures = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let jk = sparse_to_elem(self.basis_bracket(j, k));
                    let ki = sparse_to_elem(self.basis_bracket(k, i));
                    let ij = sparse_to_elem(self.basis_bracket(i, j));
                    let a = self.bracket_unchecked(&basis[i], &jk);
                    let b = self.bracket_unchecked(&basis[j], &ki);
                    let c = self.bracket_unchecked(&basis[k], &ij);
                    let defect = &(&a + &b) + &c;
                    if !defect.is_zero() {
                        failures.push(JacobiFailure {
                            triple: (i, j, k),
                            defect,
                        });
                    }
                }
            }
        }
        ValidationReport { failures }
    }

    /// `K[i][j] = tr(ad_{b_i} ad_{b_j})`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n)
            .map(|i| self.ad_matrix(&self.basis_element(i)).expect("basis element"))
            .collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = trace_of_product(&ads[i], &ads[j]);
                k[(j, i)] = v.clone();
                k[(i, j)] = v;
            }
        }
        k
    }

    /// Cartan's criterion: the Killing form is nondegenerate. The zero
    /// algebra counts as semisimple.
    pub fn is_semisimple(&self) -> bool {
        self.killing_form().rank() == self.dim()
    }

    /// Same algebra in the basis whose `i`-th vector has old coordinates
    /// `P[i][..]`.
    pub fn change_of_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.rows().max(p.cols()),
            });
        }
        let inv_t = p.inverse()?.transpose();
        let rows: Vec<Element> = (0..n).map(|i| Element::new(p.row(i).to_vec())).collect();
        let labels = (0..n).map(|i| format!("b{i}")).collect();
        let out = LieAlgebra::from_bracket_fn(format!("{}'", self.name), labels, |i, j| {
            let old = self.bracket_unchecked(&rows[i], &rows[j]);
            inv_t.mul_vec(&old.coords)
        })?;
        if !out.validate().is_ok() {
            // unreachable for an invertible P over a Lie algebra; surfaces
            // an input that was not a Lie algebra to begin with
            return Err(Error::InvalidParameter(
                "transformed constants fail the Jacobi identity".into(),
            ));
        }
        Ok(out)
    }
}

pub(crate) fn trace_of_product(a: &Matrix, b: &Matrix) -> Rational {
    let n = a.rows();
    let mut t = Rational::zero();
    for i in 0..n {
        for k in 0..n {
            let x = &a[(i, k)];
            if x.is_zero() {
                continue;
            }
            let y = &b[(k, i)];
            if !y.is_zero() {
                t += x * y;
            }
        }
    }
    t
}
