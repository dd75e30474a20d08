use super::{Element, LieAlgebra};
use crate::bracket::BracketExpr;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix, Rational};

/// A subspace of an ambient Lie algebra, stored by linearly independent
/// basis rows in ambient coordinates.
///
/// The rows are kept exactly as supplied (not echelonized), so a row can be
/// a meaningful value such as an iterated bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    ambient_dim: usize,
    basis_rows: Matrix,
    closed: bool,
    induced: Option<LieAlgebra>,
}

impl serde::Serialize for Subalgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Subalgebra", 3)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("closed", &self.closed)?;
        st.serialize_field("basis", &self.basis())?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

impl Subalgebra {
    /// Span of `vectors`, keeping a greedily chosen independent subset in
    /// input order. Closure is checked and, when closed, induced structure
    /// constants are computed.
    pub fn span(l: &LieAlgebra, vectors: &[Element]) -> Result<Self> {
        let n = l.dim();
        let mut ech = Echelon::new(n);
        let mut rows = Vec::new();
        for v in vectors {
            if v.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.dim(),
                });
            }
            if ech.insert(&v.coords) {
                rows.push(v.coords.clone());
            }
        }
        Ok(Self::from_independent(l, rows, ech))
    }

    fn from_independent(l: &LieAlgebra, rows: Vec<Vec<Rational>>, ech: Echelon) -> Self {
        let n = l.dim();
        let basis_rows = Matrix::from_rows(n, &rows).expect("rows have ambient length");
        let elems: Vec<Element> = rows.into_iter().map(Element::new).collect();
        let mut closed = true;
        'outer: for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                let b = l.bracket_unchecked(&elems[i], &elems[j]);
                if !ech.contains(&b.coords) {
                    closed = false;
                    break 'outer;
                }
            }
        }
        let mut sub = Subalgebra {
            ambient_dim: n,
            basis_rows,
            closed,
            induced: None,
        };
        if closed {
            sub.induced = Some(sub.compute_induced(l));
        }
        sub
    }

    pub fn zero(l: &LieAlgebra) -> Self {
        Self::span(l, &[]).expect("empty span")
    }

    pub fn whole(l: &LieAlgebra) -> Self {
        let basis: Vec<Element> = (0..l.dim()).map(|i| l.basis_element(i)).collect();
        Self::span(l, &basis).expect("standard basis")
    }

    pub fn dim(&self) -> usize {
        self.basis_rows.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis_rows(&self) -> &Matrix {
        &self.basis_rows
    }

    pub fn basis(&self) -> Vec<Element> {
        (0..self.dim())
            .map(|i| Element::new(self.basis_rows.row(i).to_vec()))
            .collect()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Structure constants in the sub-basis; present iff closed.
    pub fn induced(&self) -> Option<&LieAlgebra> {
        self.induced.as_ref()
    }

    pub fn require_induced(&self) -> Result<&LieAlgebra> {
        self.induced.as_ref().ok_or(Error::NotClosed)
    }

    fn echelon(&self) -> Echelon {
        Echelon::from_rows(self.ambient_dim, (0..self.dim()).map(|i| self.basis_rows.row(i)))
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.echelon().contains(&x.coords)
    }

    /// Same row space as `other`.
    pub fn same_space(&self, other: &Subalgebra) -> bool {
        self.dim() == other.dim() && other.basis().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `x` in the sub-basis, if `x` lies in the subspace.
    pub fn coordinates(&self, x: &Element) -> Option<Vec<Rational>> {
        self.basis_rows.transpose().solve(&x.coords).ok().flatten()
    }

    /// Ambient element with the given sub-basis coordinates.
    pub fn embed(&self, coords: &[Rational]) -> Element {
        assert_eq!(coords.len(), self.dim());
        Element::new(self.basis_rows.transpose().mul_vec(coords))
    }

    fn compute_induced(&self, l: &LieAlgebra) -> LieAlgebra {
        let elems = self.basis();
        let bt = self.basis_rows.transpose();
        let labels = (0..self.dim()).map(|i| format!("k{i}")).collect();
        LieAlgebra::from_bracket_fn(format!("sub({})", l.name()), labels, |i, j| {
            let b = l.bracket_unchecked(&elems[i], &elems[j]);
            bt.solve(&b.coords)
                .expect("lengths agree")
                .expect("closed subspace contains its brackets")
        })
        .expect("induced constants are well formed")
    }

    /// Every bracket of a basis element of `self` with a basis element of
    /// the whole algebra stays in `self`.
    pub fn is_ideal(&self, l: &LieAlgebra) -> bool {
        let ech = self.echelon();
        self.basis().iter().all(|x| {
            (0..l.dim()).all(|j| ech.contains(&l.bracket_unchecked(x, &l.basis_element(j)).coords))
        })
    }

    /// Nilpotency via the induced structure constants.
    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.require_induced()?.is_nilpotent())
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.require_induced()?.is_solvable())
    }
}

/// Span of all brackets `[a, b]` with `a` in `left`, `b` in `right`.
pub(crate) fn bracket_span(l: &LieAlgebra, left: &[Element], right: &[Element]) -> Subalgebra {
    let mut out = Vec::new();
    for a in left {
        for b in right {
            out.push(l.bracket_unchecked(a, b));
        }
    }
    Subalgebra::span(l, &out).expect("ambient-length vectors")
}

impl LieAlgebra {
    /// Lower central (`C1 = k`, `C(m+1) = [k, Cm]`) or derived
    /// (`D1 = k`, `D(m+1) = [Dm, Dm]`) series of `within` (default: the
    /// whole algebra), up to the zero term or the first repeated dimension.
    pub fn series(&self, kind: SeriesKind, within: Option<&Subalgebra>) -> Result<Vec<Subalgebra>> {
        let first = match within {
            Some(k) if !k.is_closed() => return Err(Error::NotClosed),
            Some(k) => k.clone(),
            None => Subalgebra::whole(self),
        };
        let top = first.basis();
        let mut terms = vec![first];
        loop {
            let last = terms.last().expect("nonempty");
            if last.dim() == 0 {
                break;
            }
            let cur = last.basis();
            let next = match kind {
                SeriesKind::LowerCentral => bracket_span(self, &top, &cur),
                SeriesKind::Derived => bracket_span(self, &cur, &cur),
            };
            let stabilized = next.dim() == last.dim();
            terms.push(next);
            if stabilized {
                break;
            }
        }
        Ok(terms)
    }

    pub fn series_dims(&self, kind: SeriesKind, within: Option<&Subalgebra>) -> Result<Vec<usize>> {
        Ok(self.series(kind, within)?.iter().map(Subalgebra::dim).collect())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral, None)
            .expect("whole algebra is closed")
            .last()
            .is_some_and(|t| t.dim() == 0)
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived, None)
            .expect("whole algebra is closed")
            .last()
            .is_some_and(|t| t.dim() == 0)
    }

    /// Smallest `c` with `C(c+1) = 0`, or `None` if not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let s = self.series(SeriesKind::LowerCentral, None).expect("closed");
        match s.last() {
            Some(t) if t.dim() == 0 => Some(s.len() - 1),
            _ => None,
        }
    }

    /// `[g, g]`
    pub fn derived_algebra(&self) -> Subalgebra {
        let basis: Vec<Element> = (0..self.dim()).map(|i| self.basis_element(i)).collect();
        bracket_span(self, &basis, &basis)
    }

    /// `{x : K(x, [g,g]) = 0}`, the solvable radical in characteristic 0.
    pub fn radical(&self) -> Subalgebra {
        let k = self.killing_form();
        let derived = self.derived_algebra();
        let rows: Vec<Vec<Rational>> = derived
            .basis()
            .iter()
            .map(|d| k.mul_vec(&d.coords))
            .collect();
        let m = Matrix::from_rows(self.dim(), &rows).expect("ambient length");
        let kernel: Vec<Element> = m.kernel().into_iter().map(Element::new).collect();
        Subalgebra::span(self, &kernel).expect("ambient length")
    }

    /// Kernel of `ad_h`.
    pub fn centralizer(&self, h: &Element) -> Result<Subalgebra> {
        let ad = self.ad_matrix(h)?;
        let kernel: Vec<Element> = ad.kernel().into_iter().map(Element::new).collect();
        Subalgebra::span(self, &kernel)
    }

    /// Center of the algebra.
    pub fn center(&self) -> Subalgebra {
        let n = self.dim();
        // stack ad_{b_i} rows: x central iff [b_i, x] = 0 for all i
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            let ad = self.ad_matrix(&self.basis_element(i)).expect("basis element");
            rows.extend(ad.row_vecs());
        }
        let m = Matrix::from_rows(n, &rows).expect("ambient length");
        let kernel: Vec<Element> = m.kernel().into_iter().map(Element::new).collect();
        Subalgebra::span(self, &kernel).expect("ambient length")
    }

    /// Smallest bracket-closed subspace containing `tuple`, together with an
    /// iterated-bracket expression for every basis row.
    ///
    /// Rows are added in rounds: each round brackets all pairs of the basis
    /// present at its start, so a row added in round `r` has depth `<= r + 1`
    /// and all provenance depths are bounded by `dim`.
    pub fn generated_subalgebra(&self, tuple: &[Element]) -> Result<(Subalgebra, Vec<BracketExpr>)> {
        let n = self.dim();
        let mut ech = Echelon::new(n);
        let mut rows: Vec<Element> = Vec::new();
        let mut prov: Vec<BracketExpr> = Vec::new();
        for (i, y) in tuple.iter().enumerate() {
            if y.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: y.dim(),
                });
            }
            if ech.insert(&y.coords) {
                rows.push(y.clone());
                prov.push(BracketExpr::leaf(i + 1));
            }
        }
        let mut done_upto = 0;
        loop {
            let len = rows.len();
            let mut grew = false;
            for i in 0..len {
                // pairs with at least one member new since the last round
                for j in (i + 1).max(done_upto)..len {
                    let b = self.bracket_unchecked(&rows[i], &rows[j]);
                    if ech.insert(&b.coords) {
                        rows.push(b);
                        prov.push(BracketExpr::node(prov[i].clone(), prov[j].clone()));
                        grew = true;
                    }
                }
            }
            done_upto = len;
            if !grew {
                break;
            }
        }
        let basis_rows: Vec<Vec<Rational>> = rows.into_iter().map(|e| e.coords).collect();
        let sub = Subalgebra::from_independent(self, basis_rows, ech);
        debug_assert!(sub.is_closed());
        Ok((sub, prov))
    }
}
