//! Exact scalars.
//!
//! All coefficient and coordinate arithmetic in this crate is exact. [`Rat`]
//! is an arbitrary-precision rational, always stored in lowest terms with a
//! positive denominator; [`Int`] is an arbitrary-precision integer. Both are
//! immutable values and safe to share across threads.

pub use num::{BigInt, BigRational, One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// `n/d` in lowest terms. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Binomial coefficient C(n, k) as an exact integer (0 when k > n).
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::from(0);
    }
    let k = k.min(n - k);
    let mut num = Int::from(1);
    let mut den = Int::from(1);
    for i in 0..k {
        num *= Int::from(n - i);
        den *= Int::from(i + 1);
    }
    num / den
}

pub fn factorial(n: u64) -> Int {
    let mut out = Int::from(1);
    for i in 2..=n {
        out *= Int::from(i);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms_positive_denominator() {
        let x = ratio(6, -4);
        assert_eq!(x.numer(), &int(-3));
        assert_eq!(x.denom(), &int(2));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(16, 3), int(560));
        assert_eq!(binomial(17, 4), int(2380));
        assert_eq!(binomial(18, 5), int(8568));
        assert_eq!(binomial(3, 5), int(0));
    }

    proptest! {
        // arithmetic is exact: (a+b)-b == a
        #[test]
        fn addition_exact(an in -1000i64..1000, ad in 1i64..100, bn in -1000i64..1000, bd in 1i64..100) {
            let a = ratio(an, ad);
            let b = ratio(bn, bd);
            prop_assert_eq!(&(&a + &b) - &b, a);
        }
    }
}
