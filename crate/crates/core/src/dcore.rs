// SPDX-License-Identifier: Apache-2.0 OR MIT

//! The polynomials `d_n^(r)(x)` built along five independent routes, a fast
//! scalar evaluator, and the classical families they connect to.
//!
//! | route      | construction                                               |
//! |------------|------------------------------------------------------------|
//! | `Direct`   | `sum_k binom(x+r+k, k) binom(x-r, n-k)`                    |
//! | `NewForm`  | `sum_k binom(n+2r, n-k) binom(x-r, k) 2^k`                 |
//! | `ThreeTerm`| `(n+1) d_{n+1} = (1+2x) d_n + (n+2r) d_{n-1}`              |
//! | `TwoTerm`  | `(n+1) d_{n+1}(x) = (x+r+n+1) d_n(x) + (-1)^n (x-r) d_n(-x)` |
//! | `Series`   | coefficients of `(1+t)^(x-r) / (1-t)^(x+r+1)`              |

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bipoly::{binom_poly, binomial_series, pochhammer_poly, BiPoly, PolyError, TSign};
use crate::exactnum::{int, pochhammer, pow2, ExactRational};
use crate::point::EvalPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    Direct,
    NewForm,
    ThreeTerm,
    TwoTerm,
    Series,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::Direct,
        Route::NewForm,
        Route::ThreeTerm,
        Route::TwoTerm,
        Route::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Direct => "direct",
            Route::NewForm => "newform",
            Route::ThreeTerm => "threeterm",
            Route::TwoTerm => "twoterm",
            Route::Series => "series",
        }
    }

    pub fn from_name(s: &str) -> Option<Route> {
        Route::ALL.into_iter().find(|r| r.name() == s)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `d_0, ..., d_{n_max}` as produced by one route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSequence {
    pub route: Route,
    pub polys: Vec<BiPoly>,
}

impl DSequence {
    pub fn get(&self, n: usize) -> &BiPoly {
        &self.polys[n]
    }

    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecialError {
    NotAffine,
    /// `(b)_k` vanishes for some `k <= n`.
    PochhammerPole { k: usize },
    /// Meixner parameter `c` is zero.
    ZeroC,
}

impl fmt::Display for SpecialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialError::NotAffine => f.write_str("parameter must be affine in x and r"),
            SpecialError::PochhammerPole { k } => write!(f, "(b)_{k} vanishes"),
            SpecialError::ZeroC => f.write_str("meixner parameter c must be nonzero"),
        }
    }
}

impl From<PolyError> for SpecialError {
    fn from(_: PolyError) -> Self {
        SpecialError::NotAffine
    }
}

fn c(v: i64) -> BiPoly {
    BiPoly::constant(int(v))
}

fn lin(c0: i64, cx: i64, cr: i64) -> BiPoly {
    BiPoly::affine(int(c0), int(cx), int(cr))
}

/// `binom(top, j)` for `j = 0..=k`, each from the previous one.
fn binom_ladder(top: &BiPoly, k: usize) -> Vec<BiPoly> {
    let mut out = alloc::vec![BiPoly::one()];
    for j in 1..=k {
        let step = top - &c(j as i64 - 1);
        let next = (&out[j - 1] * &step).scale(&ExactRational::new(1.into(), (j as i64).into()));
        out.push(next);
    }
    out
}

pub fn d_direct(n: usize) -> BiPoly {
    let lower = binom_ladder(&lin(0, 1, -1), n);
    // binom(x+r+k, k) = binom(x+r+k-1, k-1) (x+r+k) / k
    let mut upper = BiPoly::one();
    let mut acc = BiPoly::zero();
    for k in 0..=n {
        if k > 0 {
            upper = (&upper * &lin(k as i64, 1, 1)).scale(&ExactRational::new(1.into(), (k as i64).into()));
        }
        acc += &(&upper * &lower[n - k]);
    }
    acc
}

pub fn d_newform(n: usize) -> BiPoly {
    let outer = binom_ladder(&lin(n as i64, 0, 2), n);
    let inner = binom_ladder(&lin(0, 1, -1), n);
    let mut acc = BiPoly::zero();
    for k in 0..=n {
        acc += &(&outer[n - k] * &inner[k].scale(&pow2(k as i64)));
    }
    acc
}

pub fn d_threeterm(n_max: usize) -> DSequence {
    let mut polys = alloc::vec![BiPoly::one()];
    if n_max >= 1 {
        polys.push(lin(1, 2, 0));
    }
    let one_plus_2x = lin(1, 2, 0);
    for n in 1..n_max {
        let a = &one_plus_2x * &polys[n];
        let b = &lin(n as i64, 0, 2) * &polys[n - 1];
        polys.push((&a + &b).scale(&ExactRational::new(1.into(), (n as i64 + 1).into())));
    }
    DSequence {
        route: Route::ThreeTerm,
        polys,
    }
}

/// Runs the recurrence on `d_n(x)` and `d_n(-x)` side by side, so no
/// per-step substitution is needed.
pub fn d_twoterm(n_max: usize) -> DSequence {
    let mut pos = BiPoly::one();
    let mut neg = BiPoly::one();
    let mut polys = alloc::vec![pos.clone()];
    for n in 0..n_max {
        let inv = ExactRational::new(1.into(), (n as i64 + 1).into());
        let sign = if n % 2 == 0 { 1 } else { -1 };
        // x -> -x images of (x+r+n+1) and (x-r)
        let next_pos = &(&lin(n as i64 + 1, 1, 1) * &pos) + &(&lin(0, sign, -sign) * &neg);
        let next_neg = &(&lin(n as i64 + 1, -1, 1) * &neg) + &(&lin(0, -sign, -sign) * &pos);
        pos = next_pos.scale(&inv);
        neg = next_neg.scale(&inv);
        polys.push(pos.clone());
    }
    DSequence {
        route: Route::TwoTerm,
        polys,
    }
}

pub fn d_series(n_max: usize) -> DSequence {
    let order = n_max + 1;
    let num = binomial_series(&lin(0, 1, -1), TSign::Plus, order).expect("affine exponent");
    let den = binomial_series(&lin(-1, -1, -1), TSign::Minus, order).expect("affine exponent");
    let prod = num.series_mul(&den).expect("equal orders");
    DSequence {
        route: Route::Series,
        polys: prod.into_coefficients(),
    }
}

pub fn d_sequence(route: Route, n_max: usize) -> DSequence {
    match route {
        Route::Direct => DSequence {
            route,
            polys: (0..=n_max).map(d_direct).collect(),
        },
        Route::NewForm => DSequence {
            route,
            polys: (0..=n_max).map(d_newform).collect(),
        },
        Route::ThreeTerm => d_threeterm(n_max),
        Route::TwoTerm => d_twoterm(n_max),
        Route::Series => d_series(n_max),
    }
}

/// `d_n^(r)(x)` at a rational point via the three-term recurrence on scalars.
pub fn d_eval(n: usize, at: &EvalPoint) -> ExactRational {
    d_eval_sequence(n, at).pop().expect("non-empty")
}

/// `[d_0(at), ..., d_{n_max}(at)]`
pub fn d_eval_sequence(n_max: usize, at: &EvalPoint) -> Vec<ExactRational> {
    let one_plus_2x = int(1) + int(2) * &at.x;
    let two_r = int(2) * &at.r;
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(int(1));
    if n_max >= 1 {
        out.push(one_plus_2x.clone());
    }
    for n in 1..n_max {
        let next = (&one_plus_2x * &out[n] + (int(n as i64) + &two_r) * &out[n - 1])
            / int(n as i64 + 1);
        out.push(next);
    }
    out
}

/// Delannoy number `D(n, m)`: lattice paths from `(0,0)` to `(m,n)` with
/// east, north and diagonal unit steps.
pub fn delannoy_dp(n: usize, m: usize) -> BigInt {
    let mut row = alloc::vec![BigInt::one(); m + 1];
    for _ in 1..=n {
        let mut prev_diag = row[0].clone();
        for j in 1..=m {
            let up = row[j].clone();
            row[j] = &row[j] + &row[j - 1] + &prev_diag;
            prev_diag = up;
        }
    }
    row[m].clone()
}

/// `P_n^(alpha, beta)(point)` with parameters affine in `x` and `r`:
/// `2^-n sum_k binom(n+alpha, k) binom(n+beta, n-k) (point+1)^k (point-1)^(n-k)`.
pub fn jacobi_eval(
    n: usize,
    alpha: &BiPoly,
    beta: &BiPoly,
    point: &ExactRational,
) -> Result<BiPoly, SpecialError> {
    let na = alpha + &c(n as i64);
    let nb = beta + &c(n as i64);
    let plus = point + int(1);
    let minus = point - int(1);
    let mut acc = BiPoly::zero();
    for k in 0..=n {
        let w = pow_rat(&plus, k) * pow_rat(&minus, n - k);
        let t = &binom_poly(&na, k)? * &binom_poly(&nb, n - k)?;
        acc += &t.scale(&w);
    }
    Ok(acc.scale(&pow2(-(n as i64))))
}

fn pow_rat(v: &ExactRational, k: usize) -> ExactRational {
    (0..k).fold(int(1), |acc, _| acc * v)
}

fn check_meixner_params(n: usize, b: &ExactRational, c: &ExactRational) -> Result<(), SpecialError> {
    if c.is_zero() {
        return Err(SpecialError::ZeroC);
    }
    for k in 1..=n {
        if pochhammer(b, k).is_zero() {
            return Err(SpecialError::PochhammerPole { k });
        }
    }
    Ok(())
}

/// Meixner polynomial `M_n(x; b, c) = sum_k (-n)_k (-x)_k / ((b)_k k!) (1 - 1/c)^k`.
pub fn meixner_eval(
    n: usize,
    x: &ExactRational,
    b: &ExactRational,
    c: &ExactRational,
) -> Result<ExactRational, SpecialError> {
    check_meixner_params(n, b, c)?;
    let w = int(1) - c.recip();
    let minus_n = int(-(n as i64));
    let minus_x = -x;
    let mut acc = ExactRational::zero();
    for k in 0..=n {
        let num = pochhammer(&minus_n, k) * pochhammer(&minus_x, k);
        let den = pochhammer(b, k) * factorial_rat(k);
        acc += num / den * pow_rat(&w, k);
    }
    Ok(acc)
}

fn factorial_rat(k: usize) -> ExactRational {
    ExactRational::from_integer(crate::exactnum::factorial(k))
}

/// [`meixner_eval`] with a symbolic affine argument in place of `x`.
pub fn meixner_poly(
    n: usize,
    x: &BiPoly,
    b: &ExactRational,
    c: &ExactRational,
) -> Result<BiPoly, SpecialError> {
    check_meixner_params(n, b, c)?;
    let w = int(1) - c.recip();
    let minus_x = -x;
    let mut acc = BiPoly::zero();
    for k in 0..=n {
        let coeff = pochhammer(&int(-(n as i64)), k) * pow_rat(&w, k)
            / (pochhammer(b, k) * factorial_rat(k));
        acc += &pochhammer_poly(&minus_x, k)?.scale(&coeff);
    }
    Ok(acc)
}

/// Memoized symbolic sequences, keyed by route and extended on demand.
#[derive(Debug, Default, Clone)]
pub struct DCache {
    seqs: BTreeMap<Route, Vec<BiPoly>>,
}

impl DCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sequence(&mut self, route: Route, n_max: usize) -> &[BiPoly] {
        let have = self.seqs.get(&route).map_or(0, Vec::len);
        if have <= n_max {
            let polys = match route {
                Route::Direct | Route::NewForm => {
                    let mut v = self.seqs.remove(&route).unwrap_or_default();
                    let f = if route == Route::Direct { d_direct } else { d_newform };
                    v.extend((have..=n_max).map(f));
                    v
                }
                _ => d_sequence(route, n_max.max(2 * have)).polys,
            };
            self.seqs.insert(route, polys);
        }
        &self.seqs[&route][..=n_max]
    }

    pub fn get(&mut self, route: Route, n: usize) -> &BiPoly {
        &self.sequence(route, n)[n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use alloc::string::ToString;

    fn d2() -> BiPoly {
        BiPoly::from_terms([(2, 0, int(2)), (1, 0, int(2)), (0, 1, int(1)), (0, 0, int(1))])
    }

    #[test]
    fn small_cases_each_route() {
        for route in Route::ALL {
            let s = d_sequence(route, 2);
            assert_eq!(s.polys.len(), 3, "{route}");
            assert_eq!(s.get(0), &BiPoly::one(), "{route}");
            assert_eq!(s.get(1).to_string(), "2*x + 1", "{route}");
            assert_eq!(s.get(2), &d2(), "{route}");
        }
        assert_eq!(d_direct(2), d2());
        assert_eq!(d_newform(1).to_string(), "2*x + 1");
    }

    #[test]
    fn d2_matches_three_term_by_hand() {
        // 2 d_2 = (1+2x)^2 + (1+2r)
        let one_2x = lin(1, 2, 0);
        let expect = (&(&one_2x * &one_2x) + &lin(1, 0, 2)).scale(&rat(1, 2));
        assert_eq!(d_direct(2), expect);
    }

    #[test]
    fn zero_depth_sequences() {
        for route in Route::ALL {
            assert_eq!(d_sequence(route, 0).polys, alloc::vec![BiPoly::one()]);
        }
    }

    #[test]
    fn degree_and_leading_coefficient() {
        let s = d_threeterm(12);
        for (n, p) in s.polys.iter().enumerate() {
            assert_eq!(p.deg_x() as usize, n);
            let lead = pow2(n as i64) / factorial_rat(n);
            assert_eq!(p.coeff(n as u32, 0), lead);
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(d_eval(2, &EvalPoint::ints(0, 2)), int(13));
        assert_eq!(d_eval(5, &EvalPoint::rats((-1, 2), (1, 2))), int(2));
        for r in [int(0), rat(1, 3), int(-4)] {
            assert_eq!(d_eval(3, &EvalPoint::new(r, rat(-1, 2))), int(0));
        }
        assert_eq!(d_eval(0, &EvalPoint::rats((9, 2), (100, 1))), int(1));
    }

    #[test]
    fn delannoy_small() {
        assert_eq!(delannoy_dp(0, 5), BigInt::one());
        assert_eq!(delannoy_dp(1, 1), BigInt::from(3));
        assert_eq!(delannoy_dp(2, 2), BigInt::from(13));
        assert_eq!(delannoy_dp(3, 3), BigInt::from(63));
    }

    #[test]
    fn jacobi_examples() {
        let three = int(3);
        let p0 = jacobi_eval(0, &lin(0, 1, -1), &lin(0, 0, 2), &three).unwrap();
        assert_eq!(p0, BiPoly::one());
        let p1 = jacobi_eval(1, &lin(-1, 1, -1), &lin(0, 0, 2), &three).unwrap();
        assert_eq!(p1.to_string(), "2*x + 1");
        let legendre = jacobi_eval(1, &BiPoly::zero(), &BiPoly::zero(), &three).unwrap();
        assert_eq!(legendre.as_constant(), Some(int(3)));
        assert_eq!(
            jacobi_eval(1, &BiPoly::x().pow(2), &BiPoly::zero(), &three),
            Err(SpecialError::NotAffine)
        );
    }

    #[test]
    fn meixner_examples() {
        assert_eq!(meixner_eval(0, &int(5), &int(2), &int(3)).unwrap(), int(1));
        // M_1(x; b, -1) = 1 + 2x/b: (-1)_1 (-x)_1 / (b)_1 * 2
        assert_eq!(meixner_eval(1, &int(1), &int(1), &int(-1)).unwrap(), int(3));
        assert_eq!(meixner_eval(1, &rat(3, 2), &int(4), &int(-1)).unwrap(), rat(7, 4));
        assert_eq!(meixner_eval(2, &int(1), &int(0), &int(-1)), Err(SpecialError::PochhammerPole { k: 1 }));
        assert_eq!(meixner_eval(3, &int(1), &int(-1), &int(-1)), Err(SpecialError::PochhammerPole { k: 2 }));
        assert_eq!(meixner_eval(1, &int(1), &int(1), &int(0)), Err(SpecialError::ZeroC));
    }

    #[test]
    fn meixner_poly_matches_scalar() {
        let b = rat(7, 3);
        let cc = rat(-5, 2);
        let arg = lin(1, 1, 0);
        for n in 0..6 {
            let p = meixner_poly(n, &arg, &b, &cc).unwrap();
            for xv in [int(0), rat(1, 2), int(-3)] {
                let direct = meixner_eval(n, &(&xv + int(1)), &b, &cc).unwrap();
                assert_eq!(p.eval(&EvalPoint::new(int(0), xv)), direct);
            }
        }
    }

    #[test]
    fn meixner_connection_at_r_equal_one() {
        // (3)_n / n! * M_n(x - 1; 3, -1) == d_n^(1)(x)
        for n in 0..6 {
            for xv in [int(0), int(1), int(2)] {
                let at = EvalPoint::new(int(1), xv.clone());
                let m = meixner_eval(n, &(&xv - int(1)), &int(3), &int(-1)).unwrap();
                let pref = pochhammer(&int(3), n) / factorial_rat(n);
                assert_eq!(pref * m, d_eval(n, &at));
            }
        }
    }

    #[test]
    fn cache_extends_and_agrees() {
        let mut cache = DCache::new();
        assert_eq!(cache.sequence(Route::ThreeTerm, 3).len(), 4);
        assert_eq!(cache.sequence(Route::ThreeTerm, 9).len(), 10);
        assert_eq!(cache.get(Route::Direct, 5), &d_direct(5));
        assert_eq!(cache.sequence(Route::Direct, 7), &d_threeterm(7).polys[..]);
    }
}
