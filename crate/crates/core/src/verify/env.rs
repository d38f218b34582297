// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Evaluation contexts an identity is built in.
//!
//! Identity builders only talk to [`Env`], so the same formula text yields
//! a symbolic comparison over `(x, r)`, a comparison of polynomials in `x`
//! at a fixed `r`, or a comparison of two rationals at a point.

use alloc::vec::Vec;

use crate::bipoly::{pochhammer_poly, BiPoly, PolyError, PolyFraction};
use crate::dcore::{d_eval_sequence, jacobi_eval, meixner_eval, meixner_poly, DCache, Route, SpecialError};
use crate::exactnum::{factorial, int, pochhammer, ExactRational};
use crate::point::EvalPoint;

/// Symbolic `d_n` used by every verifier. The definition is the reference,
/// the other routes are checked against it separately.
pub(crate) const REFERENCE_ROUTE: Route = Route::Direct;

pub(crate) enum Env<'a> {
    Symbolic(&'a mut DCache),
    FixedR(&'a mut DCache, ExactRational),
    Point { at: EvalPoint, seq: Vec<ExactRational> },
}

impl<'a> Env<'a> {
    pub fn point(at: EvalPoint) -> Self {
        Env::Point { at, seq: Vec::new() }
    }

    pub fn x(&self) -> BiPoly {
        match self {
            Env::Point { at, .. } => BiPoly::constant(at.x.clone()),
            _ => BiPoly::x(),
        }
    }

    pub fn r(&self) -> BiPoly {
        match self {
            Env::Symbolic(_) => BiPoly::r(),
            Env::FixedR(_, r) => BiPoly::constant(r.clone()),
            Env::Point { at, .. } => BiPoly::constant(at.r.clone()),
        }
    }

    /// `c0 + cx*x + cr*r`
    pub fn lin(&self, c0: i64, cx: i64, cr: i64) -> BiPoly {
        self.linq(int(c0), int(cx), int(cr))
    }

    pub fn linq(&self, c0: ExactRational, cx: ExactRational, cr: ExactRational) -> BiPoly {
        let mut p = BiPoly::constant(c0);
        p += &self.x().scale(&cx);
        p += &self.r().scale(&cr);
        p
    }

    /// `d_n^(r)(x)`
    pub fn d(&mut self, n: usize) -> BiPoly {
        match self {
            Env::Symbolic(cache) => cache.get(REFERENCE_ROUTE, n).clone(),
            Env::FixedR(cache, r) => cache.get(REFERENCE_ROUTE, n).eval_r(r),
            Env::Point { at, seq } => {
                if seq.len() <= n {
                    *seq = d_eval_sequence(n.max(2 * seq.len()), at);
                }
                BiPoly::constant(seq[n].clone())
            }
        }
    }

    /// `d_n^(r_img)(x_img)` where the images are built in this env.
    pub fn d_at(&mut self, n: usize, x_img: &BiPoly, r_img: &BiPoly) -> BiPoly {
        match self {
            Env::Symbolic(cache) => cache.get(REFERENCE_ROUTE, n).compose(x_img, r_img),
            Env::FixedR(cache, _) => cache.get(REFERENCE_ROUTE, n).compose(x_img, r_img),
            Env::Point { .. } => {
                let at = EvalPoint::new(
                    r_img.as_constant().expect("constant at a point"),
                    x_img.as_constant().expect("constant at a point"),
                );
                let v = d_eval_sequence(n, &at).pop().expect("non-empty");
                BiPoly::constant(v)
            }
        }
    }

    /// `P_n^(alpha, beta)(point)`
    pub fn jacobi(
        &self,
        n: usize,
        alpha: &BiPoly,
        beta: &BiPoly,
        point: &ExactRational,
    ) -> Result<BiPoly, PolyError> {
        jacobi_eval(n, alpha, beta, point).map_err(|_| PolyError::NotAffine)
    }

    /// `M_n(x_arg; b, c)`. A vanishing `(b)_k` yields a pole.
    pub fn meixner(
        &self,
        n: usize,
        x_arg: &BiPoly,
        b: &BiPoly,
        c: &ExactRational,
    ) -> Result<PolyFraction, PolyError> {
        let pole = || PolyFraction::one().div_affine(&BiPoly::zero());
        let fixed = |res: Result<BiPoly, SpecialError>| match res {
            Ok(p) => Ok(PolyFraction::from(p)),
            Err(SpecialError::PochhammerPole { .. }) => pole(),
            Err(_) => Err(PolyError::NotAffine),
        };
        match (self, b.as_constant()) {
            (Env::Point { .. }, Some(b0)) => {
                let x0 = x_arg.as_constant().ok_or(PolyError::NotAffine)?;
                fixed(meixner_eval(n, &x0, &b0, c).map(BiPoly::constant))
            }
            (Env::FixedR(..), Some(b0)) => fixed(meixner_poly(n, x_arg, &b0, c)),
            _ => {
                // symbolic b: sum with (b)_k kept as a factored denominator
                let w = int(1) - c.recip();
                let minus_x = -x_arg;
                let mut acc = PolyFraction::zero();
                for k in 0..=n {
                    let coeff = pochhammer(&int(-(n as i64)), k)
                        * (0..k).fold(int(1), |a, _| a * &w)
                        / ExactRational::from_integer(factorial(k));
                    let term = PolyFraction::from(pochhammer_poly(&minus_x, k)?.scale(&coeff))
                        .div_pochhammer(b, k)?;
                    acc = acc + term;
                }
                Ok(acc)
            }
        }
    }
}
