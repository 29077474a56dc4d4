//! Exact rationals and the integer combinatorics built on them.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator after each operation. Its `Display` already
//! prints `p/q`, or `p` when the denominator is one, which is the wire format
//! used by all JSON I/O in this crate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p/q"` or `"p"`, with optional leading sign and surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

pub fn factorial(m: u64) -> BigInt {
    (2..=m).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(m, j)`, zero when `j > m`.
pub fn binomial(m: u64, j: u64) -> BigInt {
    if j > m {
        return BigInt::zero();
    }
    let j = j.min(m - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        acc = acc * (m - i) / (i + 1);
    }
    acc
}

/// `(Σ parts)! / Π parts_i!`, built as a product of binomials so no division
/// is ever inexact.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut total = 0u64;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Rising factorial `x (x+1) ... (x+m-1)`; the empty product is one.
pub fn pochhammer(x: &Rational, m: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    let one = Rational::one();
    for _ in 0..m {
        acc *= &term;
        term += &one;
    }
    acc
}

/// `(-1)^e` as a rational.
pub fn sign_pow(e: u64) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(1), 0), int(1));
        assert_eq!(pochhammer(&int(1), 4), int(24));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        // (-3)_4 passes through zero
        assert_eq!(pochhammer(&int(-3), 4), int(0));
        assert_eq!(pochhammer(&int(-3), 3), int(-6));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(&[1, 1]), BigInt::from(2));
        assert_eq!(multinomial(&[2, 2]), BigInt::from(6));
        assert_eq!(multinomial(&[1, 1, 1]), BigInt::from(6));
        assert_eq!(multinomial(&[0, 3]), BigInt::from(1));
        assert_eq!(multinomial(&[2, 2, 2]), BigInt::from(90));
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(10), BigInt::from(3_628_800));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(2, 3), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(30, 15), BigInt::from(155_117_520));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" -4 ").unwrap(), int(-4));
        assert_eq!(parse_rational("2/-4").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rat(6, 4).to_string(), "3/2");
        assert_eq!(int(-7).to_string(), "-7");
        assert_eq!(rat(-2, 4).to_string(), "-1/2");
    }

    proptest! {
        #[test]
        fn pochhammer_step(n in -20i64..20, d in 1i64..9, m in 0u64..10) {
            let x = rat(n, d);
            let lhs = pochhammer(&x, m + 1);
            let rhs = pochhammer(&x, m) * (&x + int(m as i64));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn multinomial_permutation_invariant(mut parts in proptest::collection::vec(0u64..6, 1..5)) {
            let before = multinomial(&parts);
            parts.reverse();
            prop_assert_eq!(&before, &multinomial(&parts));
            parts.sort();
            prop_assert_eq!(&before, &multinomial(&parts));
        }

        #[test]
        fn rational_string_roundtrip(n in -1000i64..1000, d in 1i64..1000) {
            let x = rat(n, d);
            prop_assert_eq!(parse_rational(&x.to_string()).unwrap(), x);
        }
    }
}
