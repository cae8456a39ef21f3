//! Arithmetic modulo a 31-bit prime.
//!
//! Residues are kept in Montgomery form so the elimination inner loops never
//! divide. The default primes are the two largest below 2^31, run pairwise:
//! a rank certified at both is accepted, disagreement triggers an exact
//! recomputation upstream.

use crate::scalar::{Int, Rat};
use num::ToPrimitive;

/// The two largest primes below 2^31.
pub const DEFAULT_PRIMES: [u32; 2] = [2_147_483_647, 2_147_483_629];

/// Montgomery context for an odd prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModP {
    pub p: u32,
    ninv: u32, // -p^{-1} mod 2^32
    r2: u32,   // 2^64 mod p
}

impl ModP {
    pub fn new(p: u32) -> Self {
        assert!(p % 2 == 1 && p > 2 && p < (1 << 31), "need an odd prime below 2^31");
        // Newton iteration for the inverse of p mod 2^32.
        let mut inv: u32 = 1;
        for _ in 0..5 {
            inv = inv.wrapping_mul(2u32.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r2 = ((1u128 << 64) % p as u128) as u32;
        ModP { p, ninv: inv.wrapping_neg(), r2 }
    }

    #[inline(always)]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        let t = a as u64 * b as u64;
        let m = (t as u32).wrapping_mul(self.ninv);
        let u = ((t.wrapping_add(m as u64 * self.p as u64)) >> 32) as u32;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    #[inline(always)]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline(always)]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// Montgomery form of `x` (a plain residue).
    #[inline(always)]
    pub fn to_m(self, x: u32) -> u32 {
        debug_assert!(x < self.p);
        self.mul(x, self.r2)
    }

    /// Plain residue of a Montgomery-form value.
    #[inline(always)]
    pub fn from_m(self, x: u32) -> u32 {
        self.mul(x, 1)
    }

    pub fn one_m(self) -> u32 {
        self.to_m(1)
    }

    /// Montgomery form of a signed machine integer.
    pub fn from_i64(self, x: i64) -> u32 {
        let r = x.rem_euclid(self.p as i64) as u32;
        self.to_m(r)
    }

    pub fn from_int(self, x: &Int) -> u32 {
        let p = Int::from(self.p);
        let r = ((x % &p) + &p) % &p;
        self.to_m(r.to_u32().expect("reduced residue fits in u32"))
    }

    /// Montgomery form of a rational; panics if the denominator vanishes mod p.
    pub fn from_rat(self, x: &Rat) -> u32 {
        let n = self.from_int(x.numer());
        let d = self.from_int(x.denom());
        assert_ne!(self.from_m(d), 0, "denominator vanishes mod {}", self.p);
        self.mul(n, self.inv(d))
    }

    /// Inverse in Montgomery form (input and output both Montgomery).
    pub fn inv(self, a: u32) -> u32 {
        // a^(p-2) by square and multiply; p is prime.
        self.pow(a, (self.p - 2) as u64)
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = self.one_m();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// Dense univariate polynomial over Z/p, plain residues, lowest degree first.
/// Supports just enough for squarefree/distinct-degree analysis mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyP {
    pub ctx: ModP,
    pub c: Vec<u32>, // plain residues, no trailing zeros
}

impl PolyP {
    pub fn new(ctx: ModP, mut c: Vec<u32>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyP { ctx, c }
    }

    pub fn zero(ctx: ModP) -> Self {
        PolyP { ctx, c: vec![] }
    }

    pub fn x(ctx: ModP) -> Self {
        PolyP { ctx, c: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        assert!(!self.is_zero());
        self.c.len() - 1
    }

    fn mulmod_u(ctx: ModP, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % ctx.p as u64) as u32
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ctx);
        }
        let ctx = self.ctx;
        let mut out = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                let t = out[i + j] + Self::mulmod_u(ctx, a, b) as u64;
                out[i + j] = if t >= (u64::MAX >> 1) { t % ctx.p as u64 } else { t };
            }
        }
        Self::new(ctx, out.into_iter().map(|v| (v % ctx.p as u64) as u32).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let ctx = self.ctx;
        let len = self.c.len().max(other.c.len());
        let mut out = vec![0u32; len];
        for i in 0..len {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = other.c.get(i).copied().unwrap_or(0);
            out[i] = ctx.sub(a, b);
        }
        Self::new(ctx, out)
    }

    pub fn rem(&self, modulus: &Self) -> Self {
        assert!(!modulus.is_zero());
        let ctx = self.ctx;
        let mut r = self.c.clone();
        let dm = modulus.degree();
        let lead_inv = ctx.from_m(ctx.inv(ctx.to_m(modulus.c[dm])));
        while r.len() > dm {
            let k = r.len() - 1;
            let q = Self::mulmod_u(ctx, r[k], lead_inv);
            if q != 0 {
                for (i, &mc) in modulus.c.iter().enumerate() {
                    let idx = k - dm + i;
                    r[idx] = ctx.sub(r[idx], Self::mulmod_u(ctx, q, mc));
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
            if r.len() <= dm {
                break;
            }
        }
        Self::new(ctx, r)
    }

    pub fn monic(&self) -> Self {
        assert!(!self.is_zero());
        let ctx = self.ctx;
        let inv = ctx.from_m(ctx.inv(ctx.to_m(*self.c.last().unwrap())));
        Self::new(ctx, self.c.iter().map(|&a| Self::mulmod_u(ctx, a, inv)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> Self {
        let ctx = self.ctx;
        if self.c.len() <= 1 {
            return Self::zero(ctx);
        }
        let mut out = Vec::with_capacity(self.c.len() - 1);
        for (i, &a) in self.c.iter().enumerate().skip(1) {
            out.push(Self::mulmod_u(ctx, a, (i as u64 % ctx.p as u64) as u32));
        }
        Self::new(ctx, out)
    }

    /// x^(p^k) reduced mod self, by repeated frobenius power.
    fn pow_x_p(&self, base: &Self) -> Self {
        // base^p mod self via square-and-multiply on the exponent p.
        let ctx = self.ctx;
        let mut e = ctx.p as u64;
        let mut acc = PolyP::new(ctx, vec![1]);
        let mut b = base.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(self);
            }
            b = b.mul(&b).rem(self);
            e >>= 1;
        }
        acc
    }

    /// Degrees (with multiplicity of count, not of factor repetition) of the
    /// irreducible factors of the squarefree part of `self` mod p: returns
    /// the multiset of factor degrees, e.g. `[1, 1, 4, 15]`.
    pub fn squarefree_factor_degree_pattern(&self) -> Vec<usize> {
        assert!(!self.is_zero());
        let mut f = self.monic();
        // squarefree part mod p (p far exceeds our degrees, so f/gcd(f,f') works)
        let g = f.gcd(&f.derivative());
        if !g.is_zero() && g.degree() > 0 {
            f = f.div_exact(&g);
        }
        let mut pattern = vec![];
        let ctx = self.ctx;
        let mut h = PolyP::x(ctx); // x^(p^d) mod f, running
        let mut d = 0usize;
        while !f.is_zero() && f.degree() > 0 {
            d += 1;
            if 2 * d > f.degree() {
                pattern.push(f.degree());
                break;
            }
            h = f.pow_x_p(&h);
            let hx = h.sub(&PolyP::x(ctx));
            let g = f.gcd(&hx);
            if !g.is_zero() && g.degree() > 0 {
                for _ in 0..(g.degree() / d) {
                    pattern.push(d);
                }
                f = f.div_exact(&g);
                h = h.rem(&f);
            }
        }
        pattern.sort_unstable();
        pattern
    }

    /// Exact division (panics on nonzero remainder).
    pub fn div_exact(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero());
        let ctx = self.ctx;
        if self.is_zero() {
            return Self::zero(ctx);
        }
        let mut r = self.c.clone();
        let dd = divisor.degree();
        let lead_inv = ctx.from_m(ctx.inv(ctx.to_m(divisor.c[dd])));
        let mut q = vec![0u32; self.c.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1;
            let qc = Self::mulmod_u(ctx, r[k], lead_inv);
            q[k - dd] = qc;
            for (i, &mc) in divisor.c.iter().enumerate() {
                let idx = k - dd + i;
                r[idx] = ctx.sub(r[idx], Self::mulmod_u(ctx, qc, mc));
            }
            while r.last() == Some(&0) {
                r.pop();
            }
            if r.is_empty() {
                break;
            }
        }
        assert!(r.iter().all(|&x| x == 0), "division was not exact");
        Self::new(ctx, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn montgomery_round_trip() {
        for &p in &DEFAULT_PRIMES {
            let ctx = ModP::new(p);
            let a = ctx.to_m(123456789 % p);
            let b = ctx.to_m(987654321 % p);
            let prod = ctx.from_m(ctx.mul(a, b));
            let want = ((123456789u64 % p as u64) * (987654321u64 % p as u64) % p as u64) as u32;
            assert_eq!(prod, want);
            assert_eq!(ctx.from_m(ctx.mul(a, ctx.inv(a))), 1);
        }
    }

    #[test]
    fn ddf_pattern_of_known_factorization() {
        let ctx = ModP::new(DEFAULT_PRIMES[0]);
        // (x-1)(x-2)(x^2+1)... choose f = (x-1)(x-2) * irreducible quadratic.
        let f1 = PolyP::new(ctx, vec![ctx.p - 1, 1]);
        let f2 = PolyP::new(ctx, vec![ctx.p - 2, 1]);
        // x^2 - s for a quadratic nonresidue s is irreducible.
        let mut s = 2u32;
        loop {
            let leg = ctx.from_m(ctx.pow(ctx.to_m(s), ((ctx.p - 1) / 2) as u64));
            if leg != 1 {
                break;
            }
            s += 1;
        }
        let f3 = PolyP::new(ctx, vec![ctx.neg(s), 0, 1]);
        let f = f1.mul(&f2).mul(&f3);
        assert_eq!(f.squarefree_factor_degree_pattern(), vec![1, 1, 2]);
    }
}
