// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Rational functions whose denominators are products of affine factors.
//!
//! Every denominator in the identities this crate checks is a product of
//! affine forms in `x` and `r` (binomials with affine tops, `r + 1`,
//! `2r + 3`, ...). Factors are stored monic, so the least common multiple
//! of two denominators is the per-factor maximum multiplicity and two
//! fractions can be compared exactly by cross-multiplying their numerators
//! up to that common denominator. No polynomial division is needed.
//!
//! Dividing by an affine form that is identically zero does not fail; it
//! marks the fraction as a pole, which callers treat as "undefined here".

use alloc::collections::BTreeMap;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{BiPoly, PolyError};
use crate::exactnum::{factorial, int, ExactRational};

/// Monic affine form: `x + cr*r + c0` or `r + c0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct LinearFactor {
    cx: ExactRational,
    cr: ExactRational,
    c0: ExactRational,
}

impl LinearFactor {
    fn to_poly(&self) -> BiPoly {
        BiPoly::affine(self.c0.clone(), self.cx.clone(), self.cr.clone())
    }
}

enum Normalized {
    Zero,
    Constant(ExactRational),
    Factor(ExactRational, LinearFactor),
}

fn normalize(l: &BiPoly) -> Result<Normalized, PolyError> {
    let (c0, cx, cr) = l.as_affine().ok_or(PolyError::NotAffine)?;
    let lead = if !cx.is_zero() {
        cx.clone()
    } else if !cr.is_zero() {
        cr.clone()
    } else if c0.is_zero() {
        return Ok(Normalized::Zero);
    } else {
        return Ok(Normalized::Constant(c0));
    };
    let f = LinearFactor {
        cx: &cx / &lead,
        cr: &cr / &lead,
        c0: &c0 / &lead,
    };
    Ok(Normalized::Factor(lead, f))
}

#[derive(Debug, Clone)]
pub struct PolyFraction {
    num: BiPoly,
    den: BTreeMap<LinearFactor, u32>,
    pole: bool,
}

impl PolyFraction {
    pub fn zero() -> Self {
        BiPoly::zero().into()
    }

    pub fn one() -> Self {
        BiPoly::one().into()
    }

    pub fn constant(c: ExactRational) -> Self {
        BiPoly::constant(c).into()
    }

    /// True once a division by an identically-zero form has happened.
    pub fn is_pole(&self) -> bool {
        self.pole
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.num
    }

    /// Expanded denominator (monic factors multiplied out).
    pub fn denominator(&self) -> BiPoly {
        let mut acc = BiPoly::one();
        for (f, e) in &self.den {
            acc = &acc * &f.to_poly().pow(*e);
        }
        acc
    }

    /// Number of affine factors in the denominator, with multiplicity.
    pub fn denominator_degree(&self) -> u32 {
        self.den.values().sum()
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
            pole: self.pole,
        }
    }

    /// `self / l` for affine `l`.
    pub fn div_affine(mut self, l: &BiPoly) -> Result<Self, PolyError> {
        match normalize(l)? {
            Normalized::Zero => self.pole = true,
            Normalized::Constant(c) => self.num = self.num.scale(&c.recip()),
            Normalized::Factor(lead, f) => {
                self.num = self.num.scale(&lead.recip());
                *self.den.entry(f).or_insert(0) += 1;
            }
        }
        Ok(self)
    }

    /// `self / binom(top, k)` for affine `top`.
    pub fn div_binom(self, top: &BiPoly, k: usize) -> Result<Self, PolyError> {
        let mut out = self.scale(&ExactRational::from_integer(factorial(k)));
        for i in 0..k {
            out = out.div_affine(&(top - &BiPoly::constant(int(i as i64))))?;
        }
        Ok(out)
    }

    /// `self / (a)_k` for affine `a`.
    pub fn div_pochhammer(self, a: &BiPoly, k: usize) -> Result<Self, PolyError> {
        let mut out = self;
        for i in 0..k {
            out = out.div_affine(&(a + &BiPoly::constant(int(i as i64))))?;
        }
        Ok(out)
    }

    fn lcm(&self, other: &Self) -> BTreeMap<LinearFactor, u32> {
        let mut l = self.den.clone();
        for (f, e) in &other.den {
            let slot = l.entry(f.clone()).or_insert(0);
            *slot = (*slot).max(*e);
        }
        l
    }

    /// Numerator rewritten over the (larger) denominator `target`.
    fn lift(&self, target: &BTreeMap<LinearFactor, u32>) -> BiPoly {
        let mut num = self.num.clone();
        for (f, e) in target {
            let have = self.den.get(f).copied().unwrap_or(0);
            if *e > have {
                num = &num * &f.to_poly().pow(e - have);
            }
        }
        num
    }

    /// Both numerators over the least common denominator. The fractions are
    /// equal as rational functions iff the returned polynomials are equal.
    pub fn common_numerators(&self, other: &Self) -> (BiPoly, BiPoly) {
        let l = self.lcm(other);
        (self.lift(&l), other.lift(&l))
    }

    /// Exact equality as rational functions (poles never compare equal).
    pub fn equals(&self, other: &Self) -> bool {
        if self.pole || other.pole {
            return false;
        }
        let (a, b) = self.common_numerators(other);
        a == b
    }

    /// The value when the fraction has no free variables left.
    pub fn as_constant(&self) -> Option<ExactRational> {
        if self.pole || !self.den.is_empty() {
            return None;
        }
        self.num.as_constant()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl From<BiPoly> for PolyFraction {
    fn from(num: BiPoly) -> Self {
        Self {
            num,
            den: BTreeMap::new(),
            pole: false,
        }
    }
}

impl From<ExactRational> for PolyFraction {
    fn from(c: ExactRational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a PolyFraction> for &'a PolyFraction {
    type Output = PolyFraction;
    fn add(self, rhs: &'a PolyFraction) -> PolyFraction {
        let l = self.lcm(rhs);
        let num = &self.lift(&l) + &rhs.lift(&l);
        PolyFraction {
            num,
            den: l,
            pole: self.pole || rhs.pole,
        }
    }
}

impl<'a> Sub<&'a PolyFraction> for &'a PolyFraction {
    type Output = PolyFraction;
    fn sub(self, rhs: &'a PolyFraction) -> PolyFraction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a PolyFraction> for &'a PolyFraction {
    type Output = PolyFraction;
    fn mul(self, rhs: &'a PolyFraction) -> PolyFraction {
        let mut den = self.den.clone();
        for (f, e) in &rhs.den {
            *den.entry(f.clone()).or_insert(0) += e;
        }
        PolyFraction {
            num: &self.num * &rhs.num,
            den,
            pole: self.pole || rhs.pole,
        }
    }
}

impl Neg for &PolyFraction {
    type Output = PolyFraction;
    fn neg(self) -> PolyFraction {
        self.scale(&-ExactRational::one())
    }
}

impl Neg for PolyFraction {
    type Output = PolyFraction;
    fn neg(self) -> PolyFraction {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<PolyFraction> for PolyFraction {
            type Output = PolyFraction;
            fn $method(self, rhs: PolyFraction) -> PolyFraction {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a PolyFraction> for PolyFraction {
            type Output = PolyFraction;
            fn $method(self, rhs: &'a PolyFraction) -> PolyFraction {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::point::EvalPoint;

    fn r() -> BiPoly {
        BiPoly::r()
    }

    #[test]
    fn partial_fractions_recombine() {
        // 1/(r+1) - 1/(r+2) == 1/((r+1)(r+2))
        let one = PolyFraction::one();
        let r1 = &r() + &BiPoly::one();
        let r2 = &r() + &BiPoly::constant(int(2));
        let a = one.clone().div_affine(&r1).unwrap();
        let b = one.clone().div_affine(&r2).unwrap();
        let c = one.div_affine(&r1).unwrap().div_affine(&r2).unwrap();
        assert!((&a - &b).equals(&c));
        assert!(!(&a + &b).equals(&c));
    }

    #[test]
    fn scaled_factors_share_a_key() {
        // (2r+2) and (r+1) normalize to the same monic factor
        let f = PolyFraction::constant(int(4))
            .div_affine(&BiPoly::affine(int(2), int(0), int(2)))
            .unwrap();
        let g = PolyFraction::constant(int(2)).div_affine(&BiPoly::affine(int(1), int(0), int(1))).unwrap();
        assert!(f.equals(&g));
        assert_eq!(f.denominator_degree(), 1);
    }

    #[test]
    fn binomial_denominator_cancels() {
        let top = BiPoly::affine(int(3), int(1), int(-2));
        let b = crate::bipoly::binom_poly(&top, 3).unwrap();
        let q = PolyFraction::from(b).div_binom(&top, 3).unwrap();
        assert!(q.equals(&PolyFraction::one()));
    }

    #[test]
    fn zero_divisor_marks_pole() {
        let f = PolyFraction::one().div_affine(&BiPoly::zero()).unwrap();
        assert!(f.is_pole());
        assert!(!f.equals(&f));
        let g = PolyFraction::constant(rat(3, 2))
            .div_affine(&BiPoly::constant(int(3)))
            .unwrap();
        assert_eq!(g.as_constant(), Some(rat(1, 2)));
    }

    #[test]
    fn evaluation_agrees_with_scalar_division() {
        let l = BiPoly::affine(rat(1, 3), int(2), int(-1));
        let p = BiPoly::from_terms([(2, 1, int(3)), (0, 0, int(-1))]);
        let f = PolyFraction::from(p.clone()).div_affine(&l).unwrap();
        let at = EvalPoint::rats((2, 5), (-7, 4));
        let val = f.numerator().eval(&at) / f.denominator().eval(&at);
        assert_eq!(val, p.eval(&at) / l.eval(&at));
    }

    #[test]
    fn rejects_non_affine_divisor() {
        assert!(PolyFraction::one().div_affine(&BiPoly::r().pow(2)).is_err());
    }
}
