// SPDX-License-Identifier: Apache-2.0 OR MIT

//! The identity catalogue. Each entry states its formulas once, against
//! [`Env`], as a list of `lhs == rhs` sides.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bipoly::{binom_poly, BiPoly, PolyError, PolyFraction};
use crate::exactnum::{binom_gen, binom_int, factorial, half_floor, int, pow2, rat, sign_pow, ExactRational};
use crate::point::EvalPoint;

use super::env::Env;
use super::report::Mode;

type F = PolyFraction;

fn f(p: BiPoly) -> F {
    p.into()
}

fn konst(v: ExactRational) -> BiPoly {
    BiPoly::constant(v)
}

fn binom(top: &BiPoly, k: usize) -> Result<BiPoly, PolyError> {
    binom_poly(top, k)
}

fn choose(n: usize, k: usize) -> ExactRational {
    ExactRational::from_integer(binom_int(n as u64, k as u64))
}

fn pow4(k: usize) -> ExactRational {
    pow2(2 * k as i64)
}

fn powi(base: i64, k: usize) -> ExactRational {
    (0..k).fold(int(1), |acc, _| acc * int(base))
}

fn sum<I: IntoIterator<Item = Result<F, PolyError>>>(terms: I) -> Result<F, PolyError> {
    let mut acc = F::zero();
    for t in terms {
        acc = acc + t?;
    }
    Ok(acc)
}

/// Parameter values where a side is stated not to hold.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Guard {
    Free,
    /// `r` in `{-1/2, -1, -3/2, ...}`
    HalfIntegers,
    RValues(&'static [(i64, i64)]),
}

impl Guard {
    /// Excluded set as text; `None` when nothing is excluded.
    pub fn describe(&self) -> Option<String> {
        match self {
            Guard::Free => None,
            Guard::HalfIntegers => Some("r in {-1/2, -1, -3/2, ...}".into()),
            Guard::RValues(vals) => {
                let list: Vec<String> = vals.iter().map(|(p, q)| format!("{}", rat(*p, *q))).collect();
                Some(format!("r in {{{}}}", list.join(", ")))
            }
        }
    }

    pub fn blocks(&self, at: &EvalPoint) -> Option<String> {
        match self {
            Guard::Free => None,
            Guard::HalfIntegers => at
                .r_is_excluded_half_integers()
                .then(|| "r in {-1/2, -1, -3/2, ...}".into()),
            Guard::RValues(vals) => vals
                .iter()
                .find(|(p, q)| at.r == rat(*p, *q))
                .map(|(p, q)| format!("r = {} excluded", rat(*p, *q))),
        }
    }
}

pub(crate) struct Side {
    pub label: &'static str,
    pub lhs: F,
    pub rhs: F,
    pub guard: Guard,
    /// Independent of the sampled parameter; compared once per case.
    pub once: bool,
}

impl Side {
    fn new(label: &'static str, lhs: F, rhs: F) -> Self {
        Self {
            label,
            lhs,
            rhs,
            guard: Guard::Free,
            once: false,
        }
    }

    fn guard(mut self, g: Guard) -> Self {
        self.guard = g;
        self
    }

    fn once(mut self) -> Self {
        self.once = true;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Case {
    pub m: Option<usize>,
    pub n: usize,
}

impl Case {
    pub fn n(n: usize) -> Self {
        Self { m: None, n }
    }

    pub fn mn(m: usize, n: usize) -> Self {
        Self { m: Some(m), n }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            Some(m) => write!(f, "m={m} n={}", self.n),
            None => write!(f, "n={}", self.n),
        }
    }
}

pub(crate) trait Identity: Sync {
    fn id(&self) -> &'static str;
    fn mode(&self) -> Mode;
    fn cases(&self, depth: usize) -> Vec<Case> {
        (0..=depth).map(Case::n).collect()
    }
    fn sides(&self, env: &mut Env<'_>, case: Case) -> Result<Vec<Side>, PolyError>;
    /// Bound on the `r`-degree of the cleared identity (interpolation only).
    fn degree_bound(&self, _case: Case) -> usize {
        0
    }
    fn min_samples(&self, case: Case) -> usize {
        self.degree_bound(case) + 1
    }
    /// Extra `r` samples beyond the default `1, 2, 3, ...`.
    fn extra_samples(&self) -> Vec<ExactRational> {
        Vec::new()
    }
}

/// `d_n^2 = binom(n+2r, n) sum_k binom(x-r,k) binom(x+r+k,k) binom(n+2r+k,n-k) 4^k / binom(2r+k,k)`
pub(crate) struct Square;

impl Identity for Square {
    fn id(&self) -> &'static str {
        "square"
    }
    fn mode(&self) -> Mode {
        Mode::ClearedDenominator
    }
    fn sides(&self, env: &mut Env<'_>, case: Case) -> Result<Vec<Side>, PolyError> {
        let n = case.n;
        let d = env.d(n);
        let xr = env.lin(0, 1, -1);
        let s = sum((0..=n).map(|k| {
            let ki = k as i64;
            let t = &(&binom(&xr, k)? * &binom(&env.lin(ki, 1, 1), k)?)
                * &binom(&env.lin(n as i64 + ki, 0, 2), n - k)?;
            f(t.scale(&pow4(k))).div_binom(&env.lin(ki, 0, 2), k)
        }))?;
        let rhs = f(binom(&env.lin(n as i64, 0, 2), n)?) * s;
        Ok(alloc::vec![Side::new("square", f(&d * &d), rhs).guard(Guard::HalfIntegers)])
    }
}

/// `d_m d_n = sum_k binom(m+n-2k, m-k) binom(2r+m+n-k, k) (-1)^k d_{m+n-2k}`
pub(crate) struct Linearization;

impl Identity for Linearization {
    fn id(&self) -> &'static str {
        "linearization"
    }
    fn mode(&self) -> Mode {
        Mode::SymbolicPoly
    }
    fn cases(&self, depth: usize) -> Vec<Case> {
        let mut out = Vec::new();
        for n in 0..=depth {
            for m in 0..=depth {
                out.push(Case::mn(m, n));
            }
        }
        out
    }
    fn sides(&self, env: &mut Env<'_>, case: Case) -> Result<Vec<Side>, PolyError> {
        let (m, n) = (case.m.unwrap_or(0), case.n);
        let lhs = &env.d(m) * &env.d(n);
        let mut rhs = BiPoly::zero();
        for k in 0..=m.min(n) {
            let top = env.lin((m + n - k) as i64, 0, 2);
            let c = choose(m + n - 2 * k, m - k) * sign_pow(k);
            rhs += &(&binom(&top, k)? * &env.d(m + n - 2 * k)).scale(&c);
        }
        Ok(alloc::vec![Side::new("product", f(lhs), f(rhs))])
    }
}

/// Consequences of the `binom(n+2r, n-k)` form: the normalized sum, its
/// binomial inverse, the alternating version, and the even/odd parts.
pub(crate) struct NewformConsequences;

impl Identity for NewformConsequences {
    fn id(&self) -> &'static str {
        "newform-consequences"
    }
    fn mode(&self) -> Mode {
        Mode::ClearedDenominator
    }
    fn sides(&self, env: &mut Env<'_>, case: Case) -> Result<Vec<Side>, PolyError> {
        let n = case.n;
        // binom(-2r-1, k) in every denominator
        let top = env.lin(-1, 0, -2);
        let xr = env.lin(0, 1, -1);
        let mxr = env.lin(-1, -1, -1);
        let ds: Vec<BiPoly> = (0..=n).map(|k| env.d(k)).collect();
        let g = Guard::HalfIntegers;

        let lhs = f(ds[n].scale(&sign_pow(n))).div_binom(&top, n)?;
        let rhs = sum((0..=n).map(|k| {
            let c = choose(n, k) * sign_pow(k) * pow2(k as i64);
            f(binom(&xr, k)?.scale(&c)).div_binom(&top, k)
        }))?;
        let normalized = Side::new("normalized-sum", lhs, rhs).guard(g);

        let weighted = |filter: &dyn Fn(usize) -> bool, alternate: bool| {
            sum((0..=n).filter(|k| filter(*k)).map(|k| {
                let mut c = choose(n, k);
                if alternate {
                    c *= sign_pow(k);
                }
                f(ds[k].scale(&c)).div_binom(&top, k)
            }))
        };
        let bx = binom(&xr, n)?;
        let bm = binom(&mxr, n)?;

        let inversion = Side::new(
            "binomial-inversion",
            weighted(&|_| true, false)?,
            f(bx.scale(&pow2(n as i64))).div_binom(&top, n)?,
        )
        .guard(g);
        let alternating = Side::new(
            "alternating",
            weighted(&|_| true, true)?,
            f(bm.scale(&pow2(n as i64))).div_binom(&top, n)?,
        )
        .guard(g);
        let half = pow2(n as i64 - 1);
        let even = Side::new(
            "even-part",
            weighted(&|k| k % 2 == 0, false)?,
            f((&bx + &bm).scale(&half)).div_binom(&top, n)?,
        )
        .guard(g);
        let odd = Side::new(
            "odd-part",
            weighted(&|k| k % 2 == 1, false)?,
            f((&bx - &bm).scale(&half)).div_binom(&top, n)?,
        )
        .guard(g);
        Ok(alloc::vec![normalized, inversion, alternating, even, odd])
    }
}

/// `d_n = P_n^(x-r-n, 2r)(3) = (-1)^n P_n^(2r, x-r-n)(-3) = P_n^(2r, -1-x-r-n)(-3)`
pub(crate) struct Jacobi;

impl Identity for Jacobi {
    fn id(&self) -> &'static str {
        "jacobi"
    }
    fn mode(&self) -> Mode {
        Mode::SymbolicPoly
    }
    fn sides(&self, env: &mut Env<'_>, case: Case) -> Result<Vec<Side>, PolyError> {
        let n = case.n;
        let ni = n as i64;
        let d = env.d(n);
        let alpha = env.lin(-ni, 1, -1);
        let two_r = env.lin(0, 0, 2);
        let p1 = env.jacobi(n, &alpha, &two_r, &int(3))?;
        let p2 = env.jacobi(n, &two_r, &alpha, &int(-3))?.scale(&sign_pow(n));
        let p3 = env.jacobi(n, &two_r, &env.lin(-1 - ni, -1, -1), &int(-3))?;
        Ok(alloc::vec![
            Side::new("at-3", f(d.clone()), f(p1)),
            Side::new("at-minus-3-swapped", f(d.clone()), f(p2)),
            Side::new("at-minus-3-reflected", f(d), f(p3)),
        ])
    }
}

/// `d_n^(r)(x) = (2r+1)_n / n! * M_n(x-r; 2r+1, -1)` and the shifted form
/// `d_n^(r)(x+r) = binom(b+n-1, n) M_n(x; b, -1)` with `b = 2r+1`.
pub(crate) struct Meixner;

impl Identity for Meixner {
    fn id(&self) -> &'static str {
        "meixner"
    }
    fn mode(&self) -> Mode {
        Mode::InterpolationGrid
    }
    fn degree_bound(&self, case: Case) -> usize {
        case.n
    }
    fn sides(&self, env: &mut Env<'_>, case: Case) -> Result<Vec<Side>, PolyError> {
        let n = case.n;
        let b = env.lin(1, 0, 2);
        let c = int(-1);
        let nfact = ExactRational::from_integer(factorial(n));
        let pref = crate::bipoly::pochhammer_poly(&b, n)?.scale(&nfact.recip());
        let m1 = env.meixner(n, &env.lin(0, 1, -1), &b, &c)?;
        let d = env.d(n);
        let connection = Side::new("connection", f(d), f(pref) * m1).guard(Guard::HalfIntegers);

        let shifted_d = env.d_at(n, &env.lin(0, 1, 1), &env.r());
        let m2 = env.meixner(n, &env.x(), &b, &c)?;
        let bin = binom(&env.lin(n as i64, 0, 2), n)?;
        let shifted = Side::new("shifted", f(shifted_d), f(bin) * m2).guard(Guard::HalfIntegers);
        Ok(alloc::vec![connection, shifted])
    }
}

/// Three-term recurrence, two-term recurrence, and their combination.
pub(crate) struct Recurrences;

impl Identity for Recurrences {
    fn id(&self) -> &'static str {
        "recurrences"
    }
    fn mode(&self) -> Mode {
        Mode::SymbolicPoly
    }
    fn sides(&self, env: &mut Env<'_>, case: Case) -> Result<Vec<Side>, PolyError> {
        let n = case.n;
        let ni = n as i64;
        let dn = env.d(n);
        let dn1 = env.d(n + 1);
        let dprev = if n == 0 { BiPoly::zero() } else { env.d(n - 1) };
        let dneg = env.d_at(n, &env.lin(0, -1, 0), &env.r());
        let s = sign_pow(n);
        let lhs = dn1.scale(&int(ni + 1));

        let three = &(&env.lin(1, 2, 0) * &dn) + &(&env.lin(ni, 0, 2) * &dprev);
        let two = &(&env.lin(ni + 1, 1, 1) * &dn) + &(&env.lin(0, 1, -1) * &dneg).scale(&s);
        let mut out = alloc::vec![
            Side::new("three-term", f(lhs.clone()), f(three)),
            Side::new("two-term", f(lhs), f(two)),
        ];
        if n >= 1 {
            let back = &env.lin(ni, 0, 2) * &dprev;
            let mixed = &(&env.lin(ni, -1, 1) * &dn) + &(&env.lin(0, 1, -1) * &dneg).scale(&s);
            out.push(Side::new("backward", f(back), f(mixed)));
        }
        Ok(out)
    }
}

/// Closed forms of `d_n^(r)(x)` at `x = -1/2, 0, -1, 1/2, 1, 3/2, 2`.
pub(crate) struct SpecialValues;

impl Identity for SpecialValues {
    fn id(&self) -> &'static str {
        "special-values"
    }
    fn mode(&self) -> Mode {
        Mode::ClearedDenominator
    }
    fn sides(&self, env: &mut Env<'_>, case: Case) -> Result<Vec<Side>, PolyError> {
        let n = case.n;
        let ni = n as i64;
        let m = half_floor(n);
        let s = sign_pow(n);
        let r = env.r();
        let at = |env: &mut Env<'_>, x: ExactRational| {
            let r = env.r();
            f(env.d_at(n, &konst(x), &r))
        };
        let central = binom(&env.lin(m as i64, 0, 1), m)?;
        let mut out = Vec::new();

        let minus_half = if n % 2 == 1 {
            BiPoly::zero()
        } else {
            binom(&env.linq(rat(-1, 2), int(0), int(-1)), n / 2)?.scale(&sign_pow(n / 2))
        };
        out.push(Side::new("x=-1/2", at(env, rat(-1, 2)), f(minus_half)));
        out.push(Side::new("x=0", at(env, int(0)), f(central.clone())));
        out.push(Side::new("x=-1", at(env, int(-1)), f(central.scale(&s))));

        if n >= 1 {
            let top = env.linq(rat(-3, 2), int(0), int(-1));
            let half = if n % 2 == 1 {
                let j = (n - 1) / 2;
                f(binom(&top, j)?.scale(&(int(2) * sign_pow(j))))
            } else {
                let j = n / 2 - 1;
                let lead = env.lin(2 * ni + 1, 0, 2).scale(&rat(1, ni));
                f(&lead * &binom(&top, j)?.scale(&sign_pow(j)))
            };
            out.push(Side::new("x=1/2", at(env, rat(1, 2)), half));

            let corner = env.d_at(n, &konst(rat(1, 2)), &konst(rat(-1, 2)));
            out.push(Side::new("x=1/2,r=-1/2", f(corner), F::constant(int(2))).once());
        }

        let one = f(&env.linq(int(2 * ni + 1), int(0), int(2) - &s) * &central)
            .div_affine(&env.lin(1, 0, 1))?;
        out.push(Side::new("x=1", at(env, int(1)), one).guard(Guard::RValues(&[(-1, 1)])));

        if n >= 1 {
            let h = half_floor(n + 1) as i64;
            let g = half_floor(n - 1);
            let two_plus_s = int(2) + &s;
            let first = f(&env.linq(int(4 * ni + 6), int(0), int(0))
                + &env.lin(-1, 0, 2).scale(&two_plus_s))
            .scale(&rat(ni + 1, 2 * h));
            let second = f(&env.lin(-3, 0, 2)
                * &(&env.lin(4 * ni - 2, 0, 0) + &env.lin(1, 0, 2).scale(&two_plus_s)))
            .div_affine(&env.lin(3, 0, 2))?;
            let tail = binom(&env.linq(rat(1, 2) + int(g as i64), int(0), int(1)), g)?;
            let rhs = (first - second).scale(&rat(1, 3)) * f(tail);
            out.push(
                Side::new("x=3/2", at(env, rat(3, 2)), rhs)
                    .guard(Guard::RValues(&[(-1, 1), (-3, 2)])),
            );
        }

        let quad = {
            let mut p = (&r * &r).scale(&(int(3) - int(2) * &s));
            p += &r.scale(&((int(4) - &s) * int(2 * ni + 1)));
            p += &konst(int(4 * ni * ni + 4 * ni + 2));
            p
        };
        let two = f(&quad * &central)
            .div_affine(&env.lin(1, 0, 1))?
            .div_affine(&env.lin(2, 0, 1))?;
        out.push(Side::new("x=2", at(env, int(2)), two).guard(Guard::RValues(&[(-1, 1), (-2, 1)])));
        Ok(out)
    }
}

/// Half-step shifts in `r` and `x`, their combination, the `x -> 1-x`
/// relation and the reflection `x -> -1-x`.
pub(crate) struct ShiftIdentities;

impl Identity for ShiftIdentities {
    fn id(&self) -> &'static str {
        "shift-identities"
    }
    fn mode(&self) -> Mode {
        Mode::SymbolicPoly
    }
    fn sides(&self, env: &mut Env<'_>, case: Case) -> Result<Vec<Side>, PolyError> {
        let n = case.n;
        let ni = n as i64;
        let s = sign_pow(n);
        let dn = env.d(n);
        let dneg = env.d_at(n, &env.lin(0, -1, 0), &env.r());
        let x_half = env.linq(rat(-1, 2), int(1), int(0));
        let mut out = Vec::new();
        if n >= 1 {
            let up = env.d_at(n - 1, &x_half, &env.linq(rat(1, 2), int(0), int(1)));
            let down = env.d_at(n + 1, &x_half, &env.linq(rat(-1, 2), int(0), int(1)));
            out.push(Side::new(
                "raise-r",
                f(up.scale(&int(2))),
                f(&dn - &dneg.scale(&s)),
            ));
            out.push(Side::new(
                "lower-r",
                f(down.scale(&int(ni + 1))),
                f(&(&env.lin(0, 1, 1) * &dn) + &(&env.lin(0, 1, -1) * &dneg).scale(&s)),
            ));
            out.push(Side::new(
                "combined",
                f(&(&env.lin(0, 2, -2) * &up) + &down.scale(&int(ni + 1))),
                f(&env.lin(0, 2, 0) * &dn),
            ));
        }
        let one_minus = env.d_at(n, &env.lin(1, -1, 0), &env.r());
        out.push(Side::new(
            "one-minus-x",
            f(&env.lin(-1, 1, -1) * &one_minus),
            f(&(&env.lin(0, 1, 1) * &dn).scale(&s) - &(&env.lin(2 * ni + 1, 0, 2) * &dneg)),
        ));
        let reflected = env.d_at(n, &env.lin(-1, -1, 0), &env.r());
        out.push(Side::new("reflection", f(dn), f(reflected.scale(&s))));
        Ok(out)
    }
}

/// Squares of the terminating `2F1(-n, -x; a; 2)`-type sums, parametrized
/// by `a = -2r-1` (equivalently `b = 2r+1`), and their specializations.
pub(crate) struct SquaredSums;

impl Identity for SquaredSums {
    fn id(&self) -> &'static str {
        "squared-sums"
    }
    fn mode(&self) -> Mode {
        Mode::InterpolationGrid
    }
    fn degree_bound(&self, case: Case) -> usize {
        2 * case.n
    }
    fn min_samples(&self, case: Case) -> usize {
        2 * case.n + 2
    }
    fn extra_samples(&self) -> Vec<ExactRational> {
        // a = -1 and a = -2
        alloc::vec![int(0), rat(1, 2)]
    }
    fn sides(&self, env: &mut Env<'_>, case: Case) -> Result<Vec<Side>, PolyError> {
        let n = case.n;
        let ni = n as i64;
        let x = env.x();
        let a = env.lin(-1, 0, -2);
        let g = Guard::HalfIntegers;
        let mut out = Vec::new();

        // general a
        let lsum = sum((0..=n).map(|k| {
            let c = choose(n, k) * powi(-2, k);
            f(binom(&x, k)?.scale(&c)).div_binom(&a, k)
        }))?;
        let rsum = sum((0..=n).map(|k| {
            let ki = k as i64;
            let t = &(&binom(&x, k)? * &binom(&env.lin(-1, -1, -2), k)?)
                * &binom(&env.lin(ni + ki, 0, 2), n - k)?;
            f(t.scale(&pow4(k))).div_binom(&a, k)
        }))?;
        let rhs = rsum.div_binom(&a, n)?.scale(&sign_pow(n));
        out.push(Side::new("general-a", lsum.pow(2), rhs).guard(g));

        // x = -1
        let lsum = sum((0..=n).map(|k| {
            F::constant(choose(n, k) * pow2(k as i64)).div_binom(&a, k)
        }))?;
        let rsum = sum((0..=n).map(|k| {
            let ki = k as i64;
            let ratio = if k == 0 {
                F::one()
            } else {
                f(env.lin(0, 0, -2)).div_affine(&env.lin(-ki, 0, -2))?
            };
            let t = binom(&env.lin(ni + ki, 0, 2), n - k)?.scale(&(sign_pow(n - k) * pow4(k)));
            Ok(ratio * f(t))
        }))?;
        out.push(Side::new("x=-1", lsum.pow(2), rsum.div_binom(&a, n)?).guard(g));

        // b = 2r+1 form, and the same right side as a Meixner square
        let lsum = sum((0..=n).map(|k| {
            let c = choose(n, k) * pow2(k as i64);
            f(binom(&x, k)?.scale(&c)).div_binom(&env.lin(k as i64, 0, 2), k)
        }))?;
        let rsum = sum((0..=n).map(|k| {
            let ki = k as i64;
            let t = &(&binom(&x, k)? * &binom(&env.lin(ki, 1, 2), k)?)
                * &binom(&env.lin(ni + ki, 0, 2), n - k)?;
            f(t.scale(&pow4(k))).div_binom(&env.lin(ki, 0, 2), k)
        }))?;
        let rhs_b = rsum.div_binom(&env.lin(ni, 0, 2), n)?;
        out.push(Side::new("b-form", lsum.pow(2), rhs_b.clone()).guard(g));
        let mx = env.meixner(n, &x, &env.lin(1, 0, 2), &int(-1))?;
        out.push(Side::new("meixner-square", mx.pow(2), rhs_b).guard(g));

        // a = -1/2
        let l: ExactRational = (0..=n)
            .map(|k| choose(n, k) / choose(2 * k, k) * powi(-8, k))
            .sum();
        let rr: ExactRational = (0..=n)
            .map(|k| {
                sign_pow(k) / int(1 - 2 * k as i64)
                    * binom_gen(&(int(ni + k as i64) - rat(1, 2)), n - k)
                    * pow4(n + k)
            })
            .sum::<ExactRational>()
            / choose(2 * n, n);
        out.push(Side::new("a=-1/2", F::constant(&l * &l), F::constant(rr)).once());

        // a = -2
        let lsum = sum((0..=n).map(|k| {
            let c = choose(n, k) * pow2(k as i64) / int(k as i64 + 1);
            Ok(f(binom(&x, k)?.scale(&c)))
        }))?;
        let rsum = sum((0..=n).map(|k| {
            let c = choose(n + k + 1, 2 * k + 1) * powi(-4, k) / int(k as i64 + 1);
            let minus2_x = &konst(int(-2)) - &x;
            Ok(f((&binom(&x, k)? * &binom(&minus2_x, k)?).scale(&c)))
        }))?;
        out.push(
            Side::new("a=-2", lsum.pow(2), rsum.scale(&rat(1, ni + 1))).once(),
        );
        Ok(out)
    }
}

/// `(1+2x) sum_{k<n} [(2r+k+1)...(2r+n) / ((k+1)...n)] d_k^2 = (n+2r) d_n d_{n-1}`
pub(crate) struct SumFormula;

impl Identity for SumFormula {
    fn id(&self) -> &'static str {
        "sum-formula"
    }
    fn mode(&self) -> Mode {
        Mode::SymbolicPoly
    }
    fn cases(&self, depth: usize) -> Vec<Case> {
        (1..=depth).map(Case::n).collect()
    }
    fn sides(&self, env: &mut Env<'_>, case: Case) -> Result<Vec<Side>, PolyError> {
        let n = case.n;
        let mut total = BiPoly::zero();
        for k in 0..n {
            let mut w = BiPoly::one();
            for j in k + 1..=n {
                w = &w * &env.lin(j as i64, 0, 2);
            }
            let denom: ExactRational = (k + 1..=n).map(|j| int(j as i64)).product();
            let dk = env.d(k);
            total += &(&w * &(&dk * &dk)).scale(&denom.recip());
        }
        let lhs = &env.lin(1, 2, 0) * &total;
        let rhs = &(&env.lin(n as i64, 0, 2) * &env.d(n)) * &env.d(n - 1);
        Ok(alloc::vec![Side::new("weighted-squares", f(lhs), f(rhs))])
    }
}

pub(crate) static REGISTRY: [&dyn Identity; 10] = [
    &Square,
    &Linearization,
    &NewformConsequences,
    &Jacobi,
    &Meixner,
    &Recurrences,
    &SpecialValues,
    &ShiftIdentities,
    &SquaredSums,
    &SumFormula,
];
