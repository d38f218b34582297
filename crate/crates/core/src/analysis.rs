// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Exact-sign checks of the inequalities satisfied by `d_n^(r)(x)` and a
//! grid scanner for the Turán-type sign claim.
//!
//! Everything is compared as exact rationals. A point outside the region a
//! claim is stated for is recorded as skipped, never as a violation.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::dcore::d_eval_sequence;
use crate::exactnum::{binom_gen, factorial, int, rat, sign_pow, ExactRational};
use crate::point::EvalPoint;

/// Explicit list of points and the largest `n` to check at each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub points: Vec<EvalPoint>,
    pub n_max: usize,
}

impl GridSpec {
    pub fn new(points: Vec<EvalPoint>, n_max: usize) -> Self {
        Self { points, n_max }
    }

    /// Every `(r, x)` pair, `r` outermost.
    pub fn product(r_values: &[ExactRational], x_values: &[ExactRational], n_max: usize) -> Self {
        let points = r_values
            .iter()
            .flat_map(|r| x_values.iter().map(move |x| EvalPoint::new(r.clone(), x.clone())))
            .collect();
        Self { points, n_max }
    }
}

/// `start, start + step, ..., end` (inclusive when it lands on `end`).
pub fn rational_range(start: &ExactRational, end: &ExactRational, step: &ExactRational) -> Vec<ExactRational> {
    assert!(step.is_positive(), "step must be positive");
    let mut out = Vec::new();
    let mut v = start.clone();
    while &v <= end {
        out.push(v.clone());
        v += step;
    }
    out
}

/// `r in {-1/4, 0, 1/2, 1, 2}` against `x` on both sides of `-1/2`, `n <= 40`.
pub fn default_inequality_grid() -> GridSpec {
    let rs = [rat(-1, 4), int(0), rat(1, 2), int(1), int(2)];
    let xs = [
        int(-3),
        int(-2),
        int(-1),
        rat(-3, 4),
        rat(-1, 3),
        int(0),
        rat(1, 4),
        int(1),
        rat(5, 2),
        int(4),
    ];
    GridSpec::product(&rs, &xs, 40)
}

/// `r = 0, 1/4, ..., 4` against `x = -1, -7/8, ..., 0`, `n <= 40`.
pub fn default_conjecture_grid() -> GridSpec {
    let rs = rational_range(&int(0), &int(4), &rat(1, 4));
    let xs = rational_range(&int(-1), &int(0), &rat(1, 8));
    GridSpec::product(&rs, &xs, 40)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub n: usize,
    pub at: EvalPoint,
    /// The quantity that should have been positive (or non-negative).
    pub value: ExactRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroHit {
    pub n: usize,
    pub at: EvalPoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSkip {
    pub at: EvalPoint,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub claim_id: String,
    pub grid: GridSpec,
    /// Number of `(n, point)` comparisons made.
    pub checks: usize,
    pub violations: Vec<Violation>,
    /// Points where the compared quantity is exactly zero. For a strict
    /// claim this is the boundary case; for a non-strict one, equality.
    pub zero_hits: Vec<ZeroHit>,
    pub skipped: Vec<ScanSkip>,
}

impl ScanReport {
    fn new(claim_id: &str, grid: &GridSpec) -> Self {
        Self {
            claim_id: claim_id.into(),
            grid: grid.clone(),
            checks: 0,
            violations: Vec::new(),
            zero_hits: Vec::new(),
            skipped: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn skip(&mut self, at: &EvalPoint, reason: &str) {
        self.skipped.push(ScanSkip {
            at: at.clone(),
            reason: reason.into(),
        });
    }

    /// `value < 0` is a violation, `value == 0` a zero hit; when `strict`,
    /// a zero is also a violation.
    fn record(&mut self, n: usize, at: &EvalPoint, value: ExactRational, strict: bool) {
        self.checks += 1;
        if value.is_zero() && !strict {
            self.zero_hits.push(ZeroHit { n, at: at.clone() });
        } else if !value.is_positive() {
            self.violations.push(Violation {
                n,
                at: at.clone(),
                value,
            });
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    /// The quantity needs `d_{n-1}`.
    NTooSmall { n: usize, min: usize },
    /// `1 + 2x = 0`.
    XIsMinusHalf,
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::NTooSmall { n, min } => write!(f, "n = {n} is below {min}"),
            AnalysisError::XIsMinusHalf => f.write_str("x = -1/2"),
        }
    }
}

/// Both sides of `d_n d_{n-1} / (1+2x) >= (binom(2r+n-1, n-1) + d_{n-1}^2) / n`.
pub fn ratio_bound_sides(n: usize, at: &EvalPoint) -> Result<(ExactRational, ExactRational), AnalysisError> {
    if n < 1 {
        return Err(AnalysisError::NTooSmall { n, min: 1 });
    }
    if at.x_is_minus_half() {
        return Err(AnalysisError::XIsMinusHalf);
    }
    let d = d_eval_sequence(n, at);
    Ok(ratio_sides_from(&d, n, at))
}

fn ratio_sides_from(d: &[ExactRational], n: usize, at: &EvalPoint) -> (ExactRational, ExactRational) {
    let one_2x = int(1) + int(2) * &at.x;
    let lhs = &d[n] * &d[n - 1] / one_2x;
    let top = int(2) * &at.r + int(n as i64 - 1);
    let rhs = (binom_gen(&top, n - 1) + &d[n - 1] * &d[n - 1]) / int(n as i64);
    (lhs, rhs)
}

fn above_half(at: &EvalPoint) -> bool {
    at.r > rat(-1, 2)
}

/// The lower bound on `d_n d_{n-1} / (1+2x)` for `r > -1/2`, `x != -1/2`,
/// `n >= 2`, and the strict positivity of that bound. Equality in the
/// first is a zero hit.
pub fn check_ratio_bound(grid: &GridSpec) -> ScanReport {
    let mut report = ScanReport::new("ratio-lower-bound", grid);
    for at in &grid.points {
        if !above_half(at) {
            report.skip(at, "needs r > -1/2");
            continue;
        }
        if at.x_is_minus_half() {
            report.skip(at, "needs x != -1/2");
            continue;
        }
        let d = d_eval_sequence(grid.n_max, at);
        for n in 2..=grid.n_max {
            let (lhs, rhs) = ratio_sides_from(&d, n, at);
            report.record(n, at, &lhs - &rhs, false);
            report.record(n, at, rhs, true);
        }
    }
    report
}

/// `(-1)^n d_n > 0` for `x < -1/2`, and `d_n > (2x+1)^n / n!` for
/// `x > -1/2`, `n >= 2`; both for `r > -1/2`.
pub fn check_positivity(grid: &GridSpec) -> ScanReport {
    let mut report = ScanReport::new("sign-and-power-bound", grid);
    for at in &grid.points {
        if !above_half(at) {
            report.skip(at, "needs r > -1/2");
            continue;
        }
        if at.x_is_minus_half() {
            report.skip(at, "needs x != -1/2");
            continue;
        }
        let d = d_eval_sequence(grid.n_max, at);
        let below = at.x < rat(-1, 2);
        let base = int(2) * &at.x + int(1);
        let mut power = int(1);
        for (n, dn) in d.iter().enumerate() {
            if n > 0 {
                power *= &base;
            }
            if below {
                report.record(n, at, sign_pow(n) * dn, true);
            } else if n >= 2 {
                let bound = &power / ExactRational::from_integer(factorial(n));
                report.record(n, at, dn - &bound, true);
                report.record(n, at, bound, true);
            }
        }
    }
    report
}

/// `(-1)^n (d_n^2 - d_{n+1} d_{n-1})`.
pub fn turan_value(n: usize, at: &EvalPoint) -> Result<ExactRational, AnalysisError> {
    if n < 1 {
        return Err(AnalysisError::NTooSmall { n, min: 1 });
    }
    let d = d_eval_sequence(n + 1, at);
    Ok(turan_from(&d, n))
}

fn turan_from(d: &[ExactRational], n: usize) -> ExactRational {
    sign_pow(n) * (&d[n] * &d[n] - &d[n + 1] * &d[n - 1])
}

/// Sign of [`turan_value`] over `r >= 0`, `-1 <= x <= 0`, `1 <= n <= n_max`.
/// Exact zeros are zero hits, negatives are violations.
pub fn scan_conjecture(grid: &GridSpec) -> ScanReport {
    let mut report = ScanReport::new("turan-sign", grid);
    for at in &grid.points {
        if at.r < int(0) || at.x < int(-1) || at.x > int(0) {
            report.skip(at, "outside r >= 0, -1 <= x <= 0");
            continue;
        }
        if grid.n_max == 0 {
            continue;
        }
        let d = d_eval_sequence(grid.n_max + 1, at);
        for n in 1..=grid.n_max {
            report.record(n, at, turan_from(&d, n), false);
        }
    }
    report
}

/// Whether `(n+2r) d_n d_{n-1} / (1+2x)` equals the weighted sum of
/// squares `sum_{k<n} [(2r+k+1)...(2r+n) / ((k+1)...n)] d_k^2` at `at`.
pub fn weighted_squares_consistent(n: usize, at: &EvalPoint) -> Result<bool, AnalysisError> {
    if n < 1 {
        return Err(AnalysisError::NTooSmall { n, min: 1 });
    }
    if at.x_is_minus_half() {
        return Err(AnalysisError::XIsMinusHalf);
    }
    let d = d_eval_sequence(n, at);
    let two_r = int(2) * &at.r;
    let mut total = ExactRational::zero();
    for (k, dk) in d.iter().enumerate().take(n) {
        let mut w = int(1);
        for j in k + 1..=n {
            w = w * (&two_r + int(j as i64)) / int(j as i64);
        }
        total += w * dk * dk;
    }
    let closed = (&two_r + int(n as i64)) * &d[n] * &d[n - 1] / (int(1) + int(2) * &at.x);
    Ok(total == closed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_bound_equality_case() {
        let (l, r) = ratio_bound_sides(2, &EvalPoint::ints(0, 1)).unwrap();
        assert_eq!((l, r), (int(5), int(5)));
        let (l, r) = ratio_bound_sides(2, &EvalPoint::ints(0, -1)).unwrap();
        assert_eq!((l, r), (int(1), int(1)));
        let (l, r) = ratio_bound_sides(3, &EvalPoint::rats((1, 2), (1, 2))).unwrap();
        assert!(l >= r && r > int(0));
    }

    #[test]
    fn positivity_examples() {
        let g = GridSpec::new(alloc::vec![EvalPoint::ints(0, -1), EvalPoint::ints(0, 2), EvalPoint::ints(1, 0)], 4);
        let rep = check_positivity(&g);
        assert!(rep.passed(), "{:?}", rep.violations);
        assert!(rep.checks > 0);
    }

    #[test]
    fn turan_boundary_zero() {
        assert_eq!(turan_value(1, &EvalPoint::ints(0, 0)).unwrap(), int(0));
        assert!(turan_value(0, &EvalPoint::ints(0, 0)).is_err());
        // at x = -1/2, d_1 = 0 and d_2 = r + 1/2
        assert_eq!(turan_value(1, &EvalPoint::rats((0, 1), (-1, 2))).unwrap(), rat(1, 2));
    }

    #[test]
    fn scan_separates_zeros_from_violations() {
        let rep = scan_conjecture(&GridSpec::new(alloc::vec![EvalPoint::ints(0, 0)], 1));
        assert!(rep.passed());
        assert_eq!(rep.zero_hits, alloc::vec![ZeroHit { n: 1, at: EvalPoint::ints(0, 0) }]);
        let empty = scan_conjecture(&GridSpec::new(Vec::new(), 40));
        assert_eq!(empty.checks, 0);
        assert!(empty.passed() && empty.zero_hits.is_empty());
    }

    #[test]
    fn out_of_region_points_are_skipped() {
        let rep = scan_conjecture(&GridSpec::new(alloc::vec![EvalPoint::ints(-1, 0), EvalPoint::ints(0, 1)], 3));
        assert_eq!(rep.skipped.len(), 2);
        assert_eq!(rep.checks, 0);
    }

    #[test]
    fn weighted_squares_match_closed_form() {
        for at in [EvalPoint::rats((1, 3), (2, 5)), EvalPoint::ints(2, -3)] {
            for n in 1..8 {
                assert!(weighted_squares_consistent(n, &at).unwrap());
            }
        }
    }

    #[test]
    fn ranges_are_inclusive() {
        assert_eq!(rational_range(&int(-1), &int(0), &rat(1, 8)).len(), 9);
        assert_eq!(default_conjecture_grid().points.len(), 17 * 9);
    }
}
