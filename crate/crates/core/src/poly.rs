//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a canonical total order: graded first, then
//! reverse-lexicographic with respect to the declared variable order, leading
//! term first. Iteration order, and hence the on-disk format, is
//! deterministic. No zero coefficient is ever stored.

use crate::scalar::{Int, One, Rat, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("mismatched variable sets")]
    MismatchedVariables,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("missing assignment for variable `{0}`")]
    MissingAssignment(String),
    #[error("malformed polynomial file: {0}")]
    Parse(String),
}

/// Exponent tuple wrapped to order terms graded reverse-lexicographically,
/// largest term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Descending grevlex: higher degree first; within a degree, grevlex.
        match other.degree().cmp(&self.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        // grevlex: a > b if the last nonzero entry of a-b is negative; we
        // want greater terms first, so a before b when a > b.
        for i in (0..self.0.len()).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => {}
                // larger exponent late in the order makes the monomial smaller
                Ordering::Greater => return Ordering::Greater,
                Ordering::Less => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolynomial {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Monomial, Rat>,
}

impl SparsePolynomial {
    pub fn zero(vars: Arc<Vec<String>>) -> Self {
        SparsePolynomial { vars, terms: BTreeMap::new() }
    }

    pub fn variables(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    /// The monomial `x_i` as a polynomial.
    pub fn var(vars: Arc<Vec<String>>, i: usize) -> Self {
        let mut e = vec![0u16; vars.len()];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(e), Rat::one());
        SparsePolynomial { vars, terms }
    }

    pub fn constant(vars: Arc<Vec<String>>, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(vec![0; vars.len()]), c);
        }
        SparsePolynomial { vars, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u16]) -> Rat {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u16>, c: Rat) {
        assert_eq!(exps.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        let m = Monomial(exps);
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            // re-borrow to remove; clone key path kept simple
            let dead: Vec<Monomial> =
                self.terms.iter().filter(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    fn same_vars(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars == other.vars || *self.vars == *other.vars {
            Ok(())
        } else {
            Err(PolyError::MismatchedVariables)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = -v.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_vars(other)?;
        let mut out = Self::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<u16> =
                    ma.0.iter().zip(mb.0.iter()).map(|(&a, &b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.vars.clone(), Rat::one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same variable set");
        }
        acc
    }

    pub fn partial_derivative(&self, name: &str) -> Result<Self, PolyError> {
        let i = self.var_index(name)?;
        Ok(self.partial_derivative_index(i))
    }

    pub fn partial_derivative_index(&self, i: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] = e - 1;
            out.add_term(exps, c * Rat::from_integer(Int::from(e)));
        }
        out
    }

    pub fn evaluate(&self, assignment: &BTreeMap<String, Rat>) -> Result<Rat, PolyError> {
        for v in self.vars.iter() {
            if !assignment.contains_key(v) {
                return Err(PolyError::MissingAssignment(v.clone()));
            }
        }
        let point: Vec<Rat> = self.vars.iter().map(|v| assignment[v].clone()).collect();
        Ok(self.evaluate_point(&point))
    }

    pub fn evaluate_point(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute each variable by a linear form given as the columns of an
    /// integer matrix: `x_i := sum_j m[j][i] x_j`.
    pub fn substitute_linear(&self, m: &[Vec<Int>]) -> Self {
        let nv = self.vars.len();
        assert_eq!(m.len(), nv);
        assert!(m.iter().all(|r| r.len() == nv));
        let images: Vec<SparsePolynomial> = (0..nv)
            .map(|i| {
                let mut p = Self::zero(self.vars.clone());
                for (j, row) in m.iter().enumerate() {
                    if !row[i].is_zero() {
                        let mut exps = vec![0u16; nv];
                        exps[j] = 1;
                        p.add_term(exps, Rat::from_integer(row[i].clone()));
                    }
                }
                p
            })
            .collect();
        let mut out = Self::zero(self.vars.clone());
        for (mono, c) in &self.terms {
            let mut t = Self::constant(self.vars.clone(), c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&images[i]).expect("same variable set");
                }
            }
            out = out.add(&t).expect("same variable set");
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Divide all coefficients by their content; returns the content. For a
    /// zero polynomial returns 1. After this, coefficients are coprime
    /// integers and the leading (first canonical) coefficient is positive.
    pub fn normalize_content(&mut self) -> Rat {
        if self.terms.is_empty() {
            return Rat::one();
        }
        let mut den_lcm = Int::from(1);
        for c in self.terms.values() {
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = Int::from(0);
        for c in self.terms.values() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num::integer::gcd(num_gcd, scaled);
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        let leading_negative = self.terms.iter().next().map(|(_, c)| c.is_negative()).unwrap_or(false);
        if leading_negative {
            content = -content;
        }
        let inv = content.recip();
        for c in self.terms.values_mut() {
            *c *= &inv;
        }
        content
    }

    /// Canonical file format: a header line naming the variables, then one
    /// line per term `coefficient<TAB>e1,e2,...,ek` in canonical term order.
    pub fn to_file_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "vars: {}", self.vars.join(" "));
        for (m, c) in &self.terms {
            let exps: Vec<String> = m.0.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(s, "{}\t{}", c, exps.join(","));
        }
        s
    }

    pub fn from_file_string(text: &str) -> Result<Self, PolyError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| PolyError::Parse("empty file".into()))?;
        let names = header
            .strip_prefix("vars: ")
            .ok_or_else(|| PolyError::Parse("missing variable header".into()))?;
        let vars: Arc<Vec<String>> = Arc::new(names.split_whitespace().map(String::from).collect());
        let mut out = Self::zero(vars.clone());
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let (coeff, exps) = line
                .split_once('\t')
                .ok_or_else(|| PolyError::Parse(format!("bad term line `{line}`")))?;
            let c: Rat = coeff.parse().map_err(|_| PolyError::Parse(format!("bad coefficient `{coeff}`")))?;
            let e: Result<Vec<u16>, _> = exps.split(',').map(|t| t.parse::<u16>()).collect();
            let e = e.map_err(|_| PolyError::Parse(format!("bad exponents `{exps}`")))?;
            if e.len() != vars.len() {
                return Err(PolyError::Parse("exponent tuple length mismatch".into()));
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

pub fn shared_vars<S: Into<String>>(names: Vec<S>) -> Arc<Vec<String>> {
    Arc::new(names.into_iter().map(Into::into).collect())
}
