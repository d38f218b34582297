// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Exact rational scalars and the generalized combinatorial primitives
//! (falling-factorial binomials, rising factorials) everything else is
//! assembled from.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type ExactRational = BigRational;

/// Shorthand for the integer `n` as an [`ExactRational`].
pub fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

/// `2^k` (or `2^-k`) as a rational.
pub fn pow2(k: i64) -> ExactRational {
    let p = BigInt::one() << k.unsigned_abs();
    if k >= 0 {
        ExactRational::from_integer(p)
    } else {
        ExactRational::new(BigInt::one(), p)
    }
}

/// `(-1)^k`.
pub fn sign_pow(k: usize) -> ExactRational {
    if k.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// `k!`
pub fn factorial(k: usize) -> BigInt {
    (1..=k as u64).fold(BigInt::one(), |acc, i| acc * i)
}

/// Generalized binomial coefficient `z(z-1)...(z-k+1)/k!`.
///
/// The product runs over integer numerators and is reduced once at the end.
pub fn binom_gen(z: &ExactRational, k: usize) -> ExactRational {
    let (p, q) = (z.numer(), z.denom());
    let mut num = BigInt::one();
    for i in 0..k {
        num *= p - q * BigInt::from(i);
    }
    let den = q.pow(k as u32) * factorial(k);
    ExactRational::new(num, den)
}

/// Rising factorial `(a)_k = a(a+1)...(a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &ExactRational, k: usize) -> ExactRational {
    let (p, q) = (a.numer(), a.denom());
    let mut num = BigInt::one();
    for i in 0..k {
        num *= p + q * BigInt::from(i);
    }
    ExactRational::new(num, q.pow(k as u32))
}

/// Ordinary binomial coefficient; zero when `k > n`.
pub fn binom_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: acc is C(n, i) * (n - i) / (i + 1) stays integral
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// If `q` is an integer `<= 0`, returns `-q`.
pub fn nonpositive_integer(q: &ExactRational) -> Option<u64> {
    if q.is_integer() && !q.is_positive() {
        (-q.to_integer()).to_u64()
    } else {
        None
    }
}

/// `floor(n / 2)`
pub fn half_floor(n: usize) -> usize {
    n / 2
}

/// Error from [`parse_rational`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    pub input: alloc::string::String,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?} (expected p/q or an integer)", self.input)
    }
}

/// Parses `"3/7"`, `"-1/2"`, `"5"`. Decimals, zero denominators and signed
/// denominators are rejected.
pub fn parse_rational(s: &str) -> Result<ExactRational, ParseRationalError> {
    let err = || ParseRationalError {
        input: s.into(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num = BigInt::from_str(num).map_err(|_| err())?;
    let den = match den {
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(err());
            }
            BigInt::from_str(d).map_err(|_| err())?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err());
    }
    Ok(ExactRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    // independent oracle: per-step rational product
    fn falling_oracle(z: &ExactRational, k: usize) -> ExactRational {
        let mut acc = int(1);
        for i in 0..k {
            acc = acc * (z - int(i as i64)) / int(i as i64 + 1);
        }
        acc
    }

    #[test]
    fn binom_gen_examples() {
        assert_eq!(binom_gen(&int(5), 2), int(10));
        assert_eq!(binom_gen(&rat(-1, 2), 2), rat(3, 8));
        // (3/2)(1/2)(-1/2)(-3/2)(-5/2)/5! = -45/3840
        assert_eq!(falling_oracle(&rat(3, 2), 5), rat(-3, 256));
        assert_eq!(binom_gen(&rat(3, 2), 5), rat(-3, 256));
        assert_eq!(binom_gen(&int(3), 5), int(0));
        assert_eq!(binom_gen(&rat(7, 3), 0), int(1));
    }

    #[test]
    fn central_binomial_via_minus_half() {
        for k in 0..20usize {
            let expected = ExactRational::from_integer(binom_int(2 * k as u64, k as u64))
                / ExactRational::from_integer(BigInt::from(-4).pow(k as u32));
            assert_eq!(binom_gen(&rat(-1, 2), k), expected);
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(1), 4), int(24));
        assert_eq!(pochhammer(&int(-3), 5), int(0));
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(pochhammer(&rat(-5, 3), 0), int(1));
    }

    #[test]
    fn binom_int_matches_pascal() {
        let mut row: Vec<BigInt> = alloc::vec![BigInt::one()];
        for n in 1..=30u64 {
            let mut next = alloc::vec![BigInt::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binom_int(n, k), row[k as usize]);
            }
        }
        assert_eq!(binom_int(4, 2), BigInt::from(6));
        assert_eq!(binom_int(20, 10), BigInt::from(184756));
        assert_eq!(binom_int(3, 5), BigInt::zero());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/7").unwrap(), rat(3, 7));
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        for bad in ["", "1/0", "0.5", "1/-2", "x", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_is_p_over_q() {
        assert_eq!(alloc::format!("{}", rat(-6, 4)), "-3/2");
        assert_eq!(alloc::format!("{}", int(13)), "13");
    }

    #[test]
    fn nonpositive_integer_detection() {
        assert_eq!(nonpositive_integer(&int(-4)), Some(4));
        assert_eq!(nonpositive_integer(&int(0)), Some(0));
        assert_eq!(nonpositive_integer(&int(2)), None);
        assert_eq!(nonpositive_integer(&rat(-1, 2)), None);
    }
}
