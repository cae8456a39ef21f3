//! Dense univariate polynomials over the rationals.
//!
//! Provides the Sylvester resultant (first argument's coefficient rows on
//! top, so the sign is pinned), gcd through the primitive subresultant
//! remainder sequence (the rational Euclid algorithm explodes at the
//! coefficient sizes the slice analysis produces), squarefree parts, and
//! Newton interpolation on exact nodes.

use crate::matrix::det_bareiss;
use crate::modp::{ModP, PolyP};
use crate::scalar::{Int, One, Rat, Signed, Zero};
use num::ToPrimitive;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UniError {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("interpolation nodes must be pairwise distinct")]
    RepeatedNodes,
}

/// Coefficients lowest degree first; the leading coefficient is nonzero
/// unless the polynomial is zero (empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    pub c: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: vec![] }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.c.last()
    }

    pub fn evaluate(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut out = vec![Rat::zero(); n];
        for (i, v) in self.c.iter().enumerate() {
            out[i] += v;
        }
        for (i, v) in other.c.iter().enumerate() {
            out[i] += v;
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.c.iter().map(|v| -v.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::new(self.c.iter().map(|v| v * s).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, v)| v * Rat::from_integer(Int::from(i as u64)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Result<Self, UniError> {
        let lead = self.leading().ok_or(UniError::ZeroPolynomial)?.clone();
        Ok(self.scale(&lead.recip()))
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), UniError> {
        let dd = divisor.degree().ok_or(UniError::ZeroPolynomial)?;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), Self::new(r)));
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        let lead = divisor.c[dd].clone();
        while r.len() > dd {
            let k = r.len() - 1;
            let f = &r[k] / &lead;
            if !f.is_zero() {
                q[k - dd] = f.clone();
                for (i, dc) in divisor.c.iter().enumerate() {
                    let idx = k - dd + i;
                    let v = &r[idx] - &f * dc;
                    r[idx] = v;
                }
            }
            r.pop();
            while r.last().map_or(false, |x| x.is_zero()) {
                r.pop();
            }
            if r.len() <= dd {
                break;
            }
        }
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn div_exact(&self, divisor: &Self) -> Result<Self, UniError> {
        let (q, r) = self.div_rem(divisor)?;
        assert!(r.is_zero(), "exact division left a remainder");
        Ok(q)
    }

    /// Clear denominators and divide by the integer content; the sign is
    /// chosen so the leading coefficient is positive.
    fn primitive_int(&self) -> Vec<Int> {
        if self.is_zero() {
            return vec![];
        }
        let mut den = Int::from(1);
        for c in &self.c {
            den = num::integer::lcm(den, c.denom().clone());
        }
        let mut ints: Vec<Int> = self.c.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut g = Int::from(0);
        for v in &ints {
            g = num::integer::gcd(g, v.clone());
        }
        if ints.last().map_or(false, |v| v.is_negative()) {
            g = -g;
        }
        for v in &mut ints {
            *v = &*v / &g;
        }
        ints
    }

    /// Monic gcd via the primitive subresultant remainder sequence.
    pub fn gcd(&self, other: &Self) -> Result<Self, UniError> {
        if self.is_zero() && other.is_zero() {
            return Err(UniError::ZeroPolynomial);
        }
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = self.primitive_int();
        let mut b = other.primitive_int();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_empty() {
                let g = UniPoly::new(a.into_iter().map(Rat::from_integer).collect());
                return g.monic();
            }
            // pseudo-remainder of a by b
            let da = a.len() - 1;
            let db = b.len() - 1;
            let lead_b = b[db].clone();
            let mut r = a.clone();
            // multiply a by lead_b^(da-db+1) progressively while eliminating
            for _ in 0..=(da - db) {
                for v in r.iter_mut() {
                    *v = &*v * &lead_b;
                }
                let k = r.len() - 1;
                if k >= db {
                    let f = r[k].clone() / &lead_b;
                    for (i, bc) in b.iter().enumerate() {
                        let idx = k - db + i;
                        r[idx] = &r[idx] - &f * bc;
                    }
                }
                while r.last().map_or(false, |x| x.is_zero()) {
                    r.pop();
                }
                if r.len() <= db {
                    break;
                }
            }
            // make primitive to contain growth
            if !r.is_empty() {
                let mut g = Int::from(0);
                for v in &r {
                    g = num::integer::gcd(g, v.clone());
                }
                if r.last().map_or(false, |v| v.is_negative()) {
                    g = -g;
                }
                for v in &mut r {
                    *v = &*v / &g;
                }
            }
            a = b;
            b = r;
        }
    }

    /// `f / gcd(f, f')`, monic; the result has no repeated roots.
    pub fn squarefree_part(&self) -> Result<Self, UniError> {
        if self.is_zero() {
            return Err(UniError::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(UniPoly::new(vec![Rat::one()]));
        }
        let g = self.gcd(&self.derivative())?;
        let q = self.div_exact(&g)?;
        q.monic()
    }

    /// Newton interpolation through distinct exact nodes.
    pub fn interpolate(samples: &[(Rat, Rat)]) -> Result<Self, UniError> {
        let n = samples.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if samples[i].0 == samples[j].0 {
                    return Err(UniError::RepeatedNodes);
                }
            }
        }
        if n == 0 {
            return Ok(Self::zero());
        }
        // divided differences
        let mut coef: Vec<Rat> = samples.iter().map(|(_, v)| v.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = &coef[i] - &coef[i - 1];
                let den = &samples[i].0 - &samples[i - level].0;
                coef[i] = num / den;
            }
        }
        // expand the Newton form
        let mut out = Self::zero();
        let mut basis = Self::new(vec![Rat::one()]);
        for (i, c) in coef.iter().enumerate() {
            out = out.add(&basis.scale(c));
            let node = &samples[i].0;
            basis = basis.mul(&Self::new(vec![-node.clone(), Rat::one()]));
        }
        Ok(out)
    }

    /// Sylvester resultant; the matrix is built with `self`'s coefficient
    /// rows on top, which fixes the sign convention.
    pub fn resultant(&self, other: &Self) -> Result<Rat, UniError> {
        let df = self.degree().ok_or(UniError::ZeroPolynomial)?;
        let dg = other.degree().ok_or(UniError::ZeroPolynomial)?;
        if df == 0 {
            return Ok(num::pow::pow(self.c[0].clone(), dg));
        }
        if dg == 0 {
            return Ok(num::pow::pow(other.c[0].clone(), df));
        }
        let n = df + dg;
        // clear denominators per polynomial; divide the determinant back out
        let mut den_f = Int::from(1);
        for c in &self.c {
            den_f = num::integer::lcm(den_f, c.denom().clone());
        }
        let mut den_g = Int::from(1);
        for c in &other.c {
            den_g = num::integer::lcm(den_g, c.denom().clone());
        }
        let fi: Vec<Int> = self.c.iter().map(|c| c.numer() * (&den_f / c.denom())).collect();
        let gi: Vec<Int> = other.c.iter().map(|c| c.numer() * (&den_g / c.denom())).collect();
        let mut m = vec![vec![Int::from(0); n]; n];
        for r in 0..dg {
            for (k, v) in fi.iter().enumerate() {
                m[r][r + (df - k)] = v.clone();
            }
        }
        for r in 0..df {
            for (k, v) in gi.iter().enumerate() {
                m[dg + r][r + (dg - k)] = v.clone();
            }
        }
        let det = det_bareiss(m);
        let scale = num::pow::pow(Rat::from_integer(den_f), dg)
            * num::pow::pow(Rat::from_integer(den_g), df);
        Ok(Rat::from_integer(det) / scale)
    }

    /// Image mod p (plain residues). Panics if a denominator vanishes mod p.
    pub fn reduce_mod(&self, ctx: ModP) -> PolyP {
        let c: Vec<u32> = self.c.iter().map(|v| ctx.from_m(ctx.from_rat(v))).collect();
        PolyP::new(ctx, c)
    }

    /// Degree as i64 for report output.
    pub fn degree_i64(&self) -> i64 {
        self.degree().map(|d| d as i64).unwrap_or(-1)
    }
}

pub fn rat_nodes(range: std::ops::Range<i64>) -> Vec<Rat> {
    range.map(|i| Rat::from_integer(Int::from(i))).collect()
}

/// Convenience for tests and interpolation grids.
pub fn to_u32_checked(x: &Int) -> Option<u32> {
    x.to_u32()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn resultant_shared_root_vanishes() {
        let f = UniPoly::from_i64(&[-1, 1]); // x-1
        assert_eq!(f.resultant(&f).unwrap(), rat(0));
    }

    #[test]
    fn resultant_of_two_linear() {
        // Res(x-a, x-b) with f-rows on top: for f=x-2, g=x-5 the 2x2
        // Sylvester determinant is b-a = 3... sign comes from the fixed
        // convention: | 1 -2 ; 1 -5 | = -5 + 2 = -3, i.e. a-b.
        let f = UniPoly::from_i64(&[-2, 1]);
        let g = UniPoly::from_i64(&[-5, 1]);
        let r = f.resultant(&g).unwrap();
        assert_eq!(r, rat(-3));
        // and it is antisymmetric for odd degrees
        assert_eq!(g.resultant(&f).unwrap(), -r);
    }

    #[test]
    fn resultant_x2m2_x2m3() {
        // hand-expanded 4x4 Sylvester determinant: (2-3)^2 = 1
        let f = UniPoly::from_i64(&[-2, 0, 1]);
        let g = UniPoly::from_i64(&[-3, 0, 1]);
        assert_eq!(f.resultant(&g).unwrap(), rat(1));
        assert_eq!(f.resultant(&g).unwrap(), rat(1));
    }

    #[test]
    fn resultant_zero_iff_common_root() {
        // constructed shared root: (x-1)(x-4) and (x-4)(x+2)
        let f = UniPoly::from_i64(&[4, -5, 1]);
        let g = UniPoly::from_i64(&[-8, -2, 1]);
        assert_eq!(f.resultant(&g).unwrap(), rat(0));
        let h = UniPoly::from_i64(&[3, 1]); // no shared root with f
        assert_ne!(f.resultant(&h).unwrap(), rat(0));
        assert_eq!(f.resultant(&UniPoly::zero()), Err(UniError::ZeroPolynomial));
    }

    #[test]
    fn squarefree_parts() {
        let sq = UniPoly::from_i64(&[1, -2, 1]); // (x-1)^2
        assert_eq!(sq.squarefree_part().unwrap(), UniPoly::from_i64(&[-1, 1]));
        let f = UniPoly::from_i64(&[1, 0, -2, 0, 1]); // (x^2-1)^2
        assert_eq!(f.squarefree_part().unwrap(), UniPoly::from_i64(&[-1, 0, 1]));
        let already = UniPoly::from_i64(&[2, 0, 2]); // 2x^2+2, squarefree
        assert_eq!(already.squarefree_part().unwrap(), UniPoly::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn interpolation() {
        let konst = UniPoly::interpolate(&[(rat(0), rat(1)), (rat(1), rat(1))]).unwrap();
        assert_eq!(konst, UniPoly::from_i64(&[1]));
        let sq =
            UniPoly::interpolate(&[(rat(0), rat(0)), (rat(1), rat(1)), (rat(2), rat(4))]).unwrap();
        assert_eq!(sq, UniPoly::from_i64(&[0, 0, 1]));
        // held-out node consistency
        let f = UniPoly::from_i64(&[3, -1, 2, 5]);
        let samples: Vec<(Rat, Rat)> = (0..4).map(|i| (rat(i), f.evaluate(&rat(i)))).collect();
        let g = UniPoly::interpolate(&samples).unwrap();
        assert_eq!(g.evaluate(&rat(9)), f.evaluate(&rat(9)));
        assert_eq!(
            UniPoly::interpolate(&[(rat(1), rat(0)), (rat(1), rat(0))]),
            Err(UniError::RepeatedNodes)
        );
    }

    #[test]
    fn gcd_big_coefficients() {
        // gcd((x^2-1)*(3x+7), (x^2-1)*(x-9)) = x^2-1 up to normalization
        let a = UniPoly::from_i64(&[-1, 0, 1]).mul(&UniPoly::from_i64(&[7, 3]));
        let b = UniPoly::from_i64(&[-1, 0, 1]).mul(&UniPoly::from_i64(&[-9, 1]));
        assert_eq!(a.gcd(&b).unwrap(), UniPoly::from_i64(&[-1, 0, 1]));
    }
}
