// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Exact polynomials in the two formal variables `x` and `r`.
//!
//! [`BiPoly`] stores a sparse map from exponent pairs to nonzero rational
//! coefficients, so structural equality is polynomial equality. The
//! canonical text form (see the `Display` impl) lists terms by descending
//! `x` degree, then descending `r` degree:
//!
//! ```text
//! 2*x^2 + 2*x + r + 1
//! ```

mod fraction;
mod series;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{binom_int, int, ExactRational};
use crate::point::EvalPoint;

pub use fraction::PolyFraction;
pub use series::{binomial_series, TSign, TruncatedSeries};

/// Exponent pair `x^x * r^r`. Ordered lexicographically by `(x, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: u32,
    pub r: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, r: 0 };

    pub fn new(x: u32, r: u32) -> Self {
        Self { x, r }
    }

    pub fn total_degree(self) -> u32 {
        self.x + self.r
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// An operation that needs a polynomial of total degree <= 1 got more.
    NotAffine,
    /// Truncated series of different orders were combined.
    OrderMismatch { left: usize, right: usize },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NotAffine => f.write_str("expected a polynomial affine in x and r"),
            PolyError::OrderMismatch { left, right } => {
                write!(f, "series order mismatch: {left} vs {right}")
            }
        }
    }
}

/// Polynomial in `x` and `r` over the rationals.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, ExactRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(int(1))
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(int(1), 1, 0)
    }

    pub fn r() -> Self {
        Self::monomial(int(1), 0, 1)
    }

    pub fn monomial(c: ExactRational, x: u32, r: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(x, r), c);
        }
        Self { terms }
    }

    /// `c0 + cx*x + cr*r`
    pub fn affine(c0: ExactRational, cx: ExactRational, cr: ExactRational) -> Self {
        let mut p = Self::constant(c0);
        p.add_term(Monomial::new(1, 0), cx);
        p.add_term(Monomial::new(0, 1), cr);
        p
    }

    /// Builds from `(deg_x, deg_r, coefficient)` triples, summing repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, ExactRational)>,
    {
        let mut p = Self::zero();
        for (x, r, c) in terms {
            p.add_term(Monomial::new(x, r), c);
        }
        p
    }

    /// `(L, [(m, L * c_m)])` with `L` the lcm of the coefficient denominators.
    fn integer_form(&self) -> (BigInt, Vec<(Monomial, BigInt)>) {
        let l = self
            .terms
            .values()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let scaled = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c.numer() * (&l / c.denom())))
            .collect();
        (l, scaled)
    }

    fn add_term(&mut self, m: Monomial, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
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

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: u32, r: u32) -> ExactRational {
        self.terms
            .get(&Monomial::new(x, r))
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    /// Terms in ascending `(deg_x, deg_r)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &ExactRational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Degree in `x`; the zero polynomial reports 0.
    pub fn deg_x(&self) -> u32 {
        self.terms.keys().map(|m| m.x).max().unwrap_or(0)
    }

    pub fn deg_r(&self) -> u32 {
        self.terms.keys().map(|m| m.r).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// The constant value if the polynomial has no `x` or `r`.
    pub fn as_constant(&self) -> Option<ExactRational> {
        match self.terms.len() {
            0 => Some(ExactRational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// `(c0, cx, cr)` if the polynomial has total degree at most one.
    pub fn as_affine(&self) -> Option<(ExactRational, ExactRational, ExactRational)> {
        if self.total_degree() > 1 {
            return None;
        }
        Some((self.coeff(0, 0), self.coeff(1, 0), self.coeff(0, 1)))
    }

    pub fn scale(&self, c: &ExactRational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes rationals for both variables.
    pub fn eval(&self, at: &EvalPoint) -> ExactRational {
        let xp = powers(&at.x, self.deg_x());
        let rp = powers(&at.r, self.deg_r());
        let mut acc = ExactRational::zero();
        for (m, c) in &self.terms {
            acc += c * &xp[m.x as usize] * &rp[m.r as usize];
        }
        acc
    }

    /// Substitutes a rational for `x`, leaving a polynomial in `r`.
    pub fn eval_x(&self, x: &ExactRational) -> BiPoly {
        let xp = powers(x, self.deg_x());
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(0, m.r), c * &xp[m.x as usize]);
        }
        out
    }

    /// Substitutes a rational for `r`, leaving a polynomial in `x`.
    pub fn eval_r(&self, r: &ExactRational) -> BiPoly {
        let rp = powers(r, self.deg_r());
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(m.x, 0), c * &rp[m.r as usize]);
        }
        out
    }

    /// `x -> -x`
    pub fn subst_neg_x(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.x % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `x -> shift + x`, or `x -> shift - x` when `negate`.
    pub fn subst_affine_x(&self, shift: &ExactRational, negate: bool) -> BiPoly {
        let sp = powers(shift, self.deg_x());
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            for l in 0..=m.x {
                let mut t = c * &sp[(m.x - l) as usize]
                    * ExactRational::from_integer(binom_int(m.x as u64, l as u64));
                if negate && l % 2 == 1 {
                    t = -t;
                }
                out.add_term(Monomial::new(l, m.r), t);
            }
        }
        out
    }

    /// `r -> r + shift`
    pub fn subst_affine_r(&self, shift: &ExactRational) -> BiPoly {
        let sp = powers(shift, self.deg_r());
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            for l in 0..=m.r {
                let t = c * &sp[(m.r - l) as usize]
                    * ExactRational::from_integer(binom_int(m.r as u64, l as u64));
                out.add_term(Monomial::new(m.x, l), t);
            }
        }
        out
    }

    /// General substitution `x -> x_img`, `r -> r_img`.
    pub fn compose(&self, x_img: &BiPoly, r_img: &BiPoly) -> BiPoly {
        let xp = poly_powers(x_img, self.deg_x());
        let rp = poly_powers(r_img, self.deg_r());
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            let t = (&xp[m.x as usize] * &rp[m.r as usize]).scale(c);
            out += &t;
        }
        out
    }
}

fn powers(v: &ExactRational, max: u32) -> Vec<ExactRational> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut acc = ExactRational::one();
    for _ in 0..=max {
        out.push(acc.clone());
        acc *= v;
    }
    out
}

fn poly_powers(p: &BiPoly, max: u32) -> Vec<BiPoly> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(BiPoly::one());
    for i in 1..=max as usize {
        let next = &out[i - 1] * p;
        out.push(next);
    }
    out
}

/// `binom(linear, k) = linear (linear-1) ... (linear-k+1) / k!` for an
/// affine `linear`.
pub fn binom_poly(linear: &BiPoly, k: usize) -> Result<BiPoly, PolyError> {
    if linear.total_degree() > 1 {
        return Err(PolyError::NotAffine);
    }
    let mut acc = BiPoly::one();
    for i in 0..k {
        let factor = linear - &BiPoly::constant(int(i as i64));
        acc = (&acc * &factor).scale(&ExactRational::new(1.into(), (i as i64 + 1).into()));
    }
    Ok(acc)
}

/// Rising factorial `(linear)_k` for an affine `linear`.
pub fn pochhammer_poly(linear: &BiPoly, k: usize) -> Result<BiPoly, PolyError> {
    if linear.total_degree() > 1 {
        return Err(PolyError::NotAffine);
    }
    let mut acc = BiPoly::one();
    for i in 0..k {
        acc = &acc * &(linear + &BiPoly::constant(int(i as i64)));
    }
    Ok(acc)
}

impl From<ExactRational> for BiPoly {
    fn from(c: ExactRational) -> Self {
        BiPoly::constant(c)
    }
}

impl<'a> AddAssign<&'a BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &'a BiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &'a BiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &'a BiPoly) -> BiPoly {
        // integer products over a common denominator; one reduction per
        // output coefficient instead of one per partial product
        let (da, a) = self.integer_form();
        let (db, b) = rhs.integer_form();
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                *acc.entry(Monomial::new(ma.x + mb.x, ma.r + mb.r)).or_default() += ca * cb;
            }
        }
        let den = da * db;
        BiPoly {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m, ExactRational::new(c, den.clone())))
                .collect(),
        }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &'a BiPoly) -> BiPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<BiPoly> for &'a BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut mono = alloc::string::String::new();
            for (name, e) in [("x", m.x), ("r", m.r)] {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(name);
                if e > 1 {
                    mono.push_str(&alloc::format!("^{e}"));
                }
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}
