use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::linalg::{format_rational, Rational};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Exponent vectors have trailing zeros trimmed, so the number of variables
/// is not fixed by the value; it only matters when exporting.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn trim(mut exp: Vec<u32>) -> Vec<u32> {
    while exp.last() == Some(&0) {
        exp.pop();
    }
    exp
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut exp = vec![0; i + 1];
        exp[i] = 1;
        let mut p = MultiPoly::zero();
        p.add_term(exp, Rational::one());
        p
    }

    /// Adds `c * x^exp`, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(trim(exp)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[u32]) -> Rational {
        self.terms
            .get(&trim(exp.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Highest variable index with a nonzero exponent, plus one.
    pub fn var_count(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Evaluates at a point; variables beyond `point` are taken as zero.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        'terms: for (exp, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in exp.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match point.get(i) {
                    Some(x) => t *= num_traits::pow(x.clone(), k as usize),
                    None => continue 'terms,
                }
            }
            acc += t;
        }
        acc
    }

    /// Export form with exponent vectors padded to `vars.len()`.
    pub fn export(&self, vars: &[String]) -> PolyExport {
        assert!(self.var_count() <= vars.len(), "not enough variable names");
        PolyExport {
            vars: vars.to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut exp = e.clone();
                    exp.resize(vars.len(), 0);
                    TermExport {
                        exp,
                        coeff: format_rational(c),
                    }
                })
                .collect(),
        }
    }

    /// Plain text such as `-4*x1^2 - 4*x0*x2`, highest degree first.
    pub fn to_text(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut ordered: Vec<(&Vec<u32>, &Rational)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        let mut out = String::new();
        for (n, (exp, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            if n == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mono: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        vars[i].clone()
                    } else {
                        format!("{}^{}", vars[i], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&format_rational(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&format_rational(&abs));
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = (0..self.var_count()).map(|i| format!("x{i}")).collect();
        f.write_str(&self.to_text(&vars))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

fn monomial_product(a: &[u32], b: &[u32]) -> Vec<u32> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect()
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(monomial_product(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl crate::linalg::TraceRing for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::constant(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_int(&self, k: u64) -> Self {
        self.scale(&(<Rational as One>::one() / Rational::from_integer(k.into())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyExport {
    pub vars: Vec<String>,
    pub terms: Vec<TermExport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermExport {
    pub exp: Vec<u32>,
    pub coeff: String,
}
