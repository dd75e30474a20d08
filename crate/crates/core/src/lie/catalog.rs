//! Standard small algebras: `sl(n)`, its Borel and nilradical, Heisenberg
//! and abelian algebras.
//!
//! The `sl(n)` basis is ordered as: `E_ij` for `i < j` (lexicographic),
//! then `H_k = E_kk - E_(k+1)(k+1)`, then `E_ji` in the same order as the
//! positive part. `borel_sl(n)` and `strictly_upper(n)` are the leading
//! segments of this basis, so their coordinates embed directly into `sl(n)`.
//! For `n = 2` the labels are `e, h, f`.

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{int, Rational};

pub const MAX_DIM: usize = 100;

/// Looks up a family by name: `sl`, `heisenberg`, `strictly_upper`,
/// `borel_sl`, `abelian`.
pub fn catalog(name: &str, param: usize) -> Result<LieAlgebra> {
    match name {
        "sl" => sl(param),
        "heisenberg" => heisenberg(param),
        "strictly_upper" => strictly_upper(param),
        "borel_sl" => borel_sl(param),
        "abelian" => abelian(param),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

pub const FAMILIES: [&str; 5] = ["sl", "heisenberg", "strictly_upper", "borel_sl", "abelian"];

#[derive(Clone, Copy)]
enum SlBasis {
    Raise(usize, usize),
    Cartan(usize),
    Lower(usize, usize),
}

fn sl_basis(n: usize) -> Vec<SlBasis> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(SlBasis::Raise(i, j));
        }
    }
    out.extend((0..n - 1).map(SlBasis::Cartan));
    for i in 0..n {
        for j in i + 1..n {
            out.push(SlBasis::Lower(j, i));
        }
    }
    out
}

fn sl_label(n: usize, b: SlBasis) -> String {
    if n == 2 {
        return match b {
            SlBasis::Raise(..) => "e",
            SlBasis::Cartan(_) => "h",
            SlBasis::Lower(..) => "f",
        }
        .to_string();
    }
    let sep = if n >= 10 { "_" } else { "" };
    match b {
        SlBasis::Raise(i, j) | SlBasis::Lower(i, j) => format!("E{}{sep}{}", i + 1, j + 1),
        SlBasis::Cartan(k) => format!("H{}", k + 1),
    }
}

fn sl_matrix(n: usize, b: SlBasis) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    match b {
        SlBasis::Raise(i, j) | SlBasis::Lower(i, j) => m[i][j] = 1,
        SlBasis::Cartan(k) => {
            m[k][k] = 1;
            m[k + 1][k + 1] = -1;
        }
    }
    m
}

fn commutator(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
        }
    }
    out
}

/// Coordinates of a traceless matrix in the `sl(n)` basis.
fn sl_coords(basis: &[SlBasis], m: &[Vec<i64>]) -> Vec<Rational> {
    basis
        .iter()
        .map(|b| match *b {
            SlBasis::Raise(i, j) | SlBasis::Lower(i, j) => int(m[i][j]),
            // H_k coefficient is the partial sum of the diagonal
            SlBasis::Cartan(k) => int((0..=k).map(|l| m[l][l]).sum()),
        })
        .collect()
}

/// Leading `keep` elements of the `sl(n)` basis as a subalgebra in its own right.
fn sl_segment(name: String, n: usize, keep: usize) -> Result<LieAlgebra> {
    let full = sl_basis(n);
    let basis = &full[..keep];
    let mats: Vec<Vec<Vec<i64>>> = basis.iter().map(|&b| sl_matrix(n, b)).collect();
    let labels = basis.iter().map(|&b| sl_label(n, b)).collect();
    LieAlgebra::from_bracket_fn(name, labels, |i, j| {
        let c = commutator(&mats[i], &mats[j]);
        let mut coords = sl_coords(&full, &c);
        debug_assert!(coords[keep..].iter().all(num_traits::Zero::is_zero));
        coords.truncate(keep);
        coords
    })
}

fn check_dim(dim: usize) -> Result<()> {
    if dim > MAX_DIM {
        return Err(Error::InvalidParameter(format!(
            "dimension {dim} exceeds the catalog limit {MAX_DIM}"
        )));
    }
    Ok(())
}

/// Traceless `n x n` matrices.
pub fn sl(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("sl(n) needs n >= 2, got {n}")));
    }
    check_dim(n * n - 1)?;
    sl_segment(format!("sl({n})"), n, n * n - 1)
}

/// Upper-triangular traceless `n x n` matrices.
pub fn borel_sl(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("borel_sl(n) needs n >= 2, got {n}")));
    }
    let dim = n * (n - 1) / 2 + n - 1;
    check_dim(dim)?;
    sl_segment(format!("borel_sl({n})"), n, dim)
}

/// Strictly upper-triangular `n x n` matrices, the nilradical of `borel_sl(n)`.
pub fn strictly_upper(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "strictly_upper(n) needs n >= 2, got {n}"
        )));
    }
    let dim = n * (n - 1) / 2;
    check_dim(dim)?;
    sl_segment(format!("strictly_upper({n})"), n, dim)
}

/// Heisenberg algebra of dimension `2k + 1`: `[x_i, y_i] = z`.
pub fn heisenberg(dim: usize) -> Result<LieAlgebra> {
    if dim < 3 || dim.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "heisenberg(d) needs odd d >= 3, got {dim}"
        )));
    }
    check_dim(dim)?;
    let k = (dim - 1) / 2;
    let labels: Vec<String> = if k == 1 {
        vec!["x".into(), "y".into(), "z".into()]
    } else {
        (1..=k)
            .map(|i| format!("x{i}"))
            .chain((1..=k).map(|i| format!("y{i}")))
            .chain(std::iter::once("z".to_string()))
            .collect()
    };
    let brackets = (0..k).map(|i| ((i, k + i), vec![(dim - 1, int(1))]));
    LieAlgebra::new(format!("heisenberg({dim})"), labels, brackets)
}

pub fn abelian(dim: usize) -> Result<LieAlgebra> {
    check_dim(dim)?;
    Ok(LieAlgebra::abelian(format!("abelian({dim})"), dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Element;

    #[test]
    fn dimensions() {
        assert_eq!(sl(2).unwrap().dim(), 3);
        assert_eq!(sl(3).unwrap().dim(), 8);
        assert_eq!(borel_sl(3).unwrap().dim(), 5);
        assert_eq!(strictly_upper(4).unwrap().dim(), 6);
        assert_eq!(heisenberg(5).unwrap().dim(), 5);
        assert_eq!(abelian(0).unwrap().dim(), 0);
        assert_eq!(sl(10).unwrap().dim(), 99);
    }

    #[test]
    fn sl2_table() {
        let l = sl(2).unwrap();
        assert_eq!(l.basis_labels(), ["e", "h", "f"]);
        let (e, h, f) = (l.basis_element(0), l.basis_element(1), l.basis_element(2));
        assert_eq!(l.bracket(&h, &e).unwrap(), e.scale(&int(2)));
        assert_eq!(l.bracket(&h, &f).unwrap(), f.scale(&int(-2)));
        assert_eq!(l.bracket(&e, &f).unwrap(), h);
    }

    #[test]
    fn heisenberg_center() {
        let h = heisenberg(3).unwrap();
        assert_eq!(h.center().dim(), 1);
        assert!(h.center().contains(&Element::from_ints(&[0, 0, 1])));
        assert_eq!(heisenberg(7).unwrap().center().dim(), 1);
    }

    #[test]
    fn every_family_validates() {
        for n in 2..=4 {
            assert!(sl(n).unwrap().validate().is_ok());
            assert!(borel_sl(n).unwrap().validate().is_ok());
            assert!(strictly_upper(n).unwrap().validate().is_ok());
        }
        for d in [3, 5, 7] {
            assert!(heisenberg(d).unwrap().validate().is_ok());
        }
        assert!(abelian(4).unwrap().validate().is_ok());
    }

    #[test]
    fn rejects_bad_requests() {
        assert!(matches!(catalog("so", 3), Err(Error::UnknownFamily(_))));
        assert!(matches!(sl(11), Err(Error::InvalidParameter(_))));
        assert!(matches!(heisenberg(4), Err(Error::InvalidParameter(_))));
        assert!(matches!(abelian(101), Err(Error::InvalidParameter(_))));
        assert!(matches!(sl(1), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn borel_is_solvable_not_nilpotent() {
        let b = borel_sl(3).unwrap();
        assert!(b.is_solvable());
        assert!(!b.is_nilpotent());
        assert!(strictly_upper(3).unwrap().is_nilpotent());
    }
}
