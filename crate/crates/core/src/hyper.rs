// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Terminating hypergeometric series
//! `pFq(a_1..a_p; b_1..b_q; z) = sum_k prod (a_i)_k / prod (b_j)_k * z^k / k!`
//! and the hypergeometric forms of `d_n^(r)(x)`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::dcore::d_eval;
use crate::exactnum::{factorial, int, nonpositive_integer, pochhammer, rat, sign_pow, ExactRational};
use crate::point::EvalPoint;
use crate::verify::{Counterexample, Fault, Mode, Skip, VerifyReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HyperError {
    /// No numerator parameter is a non-positive integer.
    NonTerminating,
    /// Denominator parameter `index` makes `(b)_k` vanish at step `k`
    /// before the series terminates.
    Pole { index: usize, k: usize },
    /// The Clausen product form needs `z != 1`.
    ZIsOne,
}

impl fmt::Display for HyperError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperError::NonTerminating => f.write_str("series does not terminate"),
            HyperError::Pole { index, k } => {
                write!(f, "denominator parameter {index} vanishes in (b)_{k}")
            }
            HyperError::ZIsOne => f.write_str("z must differ from 1"),
        }
    }
}

/// A validated terminating series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperSpec {
    numer: Vec<ExactRational>,
    denom: Vec<ExactRational>,
    z: ExactRational,
    terms: usize,
}

impl HyperSpec {
    /// Checks termination and scans the denominators for poles before any
    /// summation happens.
    pub fn new(
        numer: Vec<ExactRational>,
        denom: Vec<ExactRational>,
        z: ExactRational,
    ) -> Result<Self, HyperError> {
        let last = numer
            .iter()
            .filter_map(nonpositive_integer)
            .min()
            .ok_or(HyperError::NonTerminating)? as usize;
        for (index, b) in denom.iter().enumerate() {
            if let Some(m) = nonpositive_integer(b) {
                // (b)_k contains the factor b + m = 0 once k > m
                if (m as usize) < last {
                    return Err(HyperError::Pole {
                        index,
                        k: m as usize + 1,
                    });
                }
            }
        }
        Ok(Self {
            numer,
            denom,
            z,
            terms: last + 1,
        })
    }

    /// Index of the last (possibly) nonzero term.
    pub fn termination_index(&self) -> usize {
        self.terms - 1
    }

    pub fn numerator_params(&self) -> &[ExactRational] {
        &self.numer
    }

    pub fn denominator_params(&self) -> &[ExactRational] {
        &self.denom
    }

    pub fn argument(&self) -> &ExactRational {
        &self.z
    }
}

/// Sums the series through its termination index.
pub fn hyper_eval(spec: &HyperSpec) -> ExactRational {
    let mut term = ExactRational::one();
    let mut acc = ExactRational::zero();
    for k in 0..spec.terms {
        if k > 0 {
            let kk = int(k as i64 - 1);
            let mut ratio = spec.z.clone() / int(k as i64);
            for a in &spec.numer {
                ratio *= a + &kk;
            }
            for b in &spec.denom {
                ratio /= b + &kk;
            }
            term *= ratio;
        }
        acc += &term;
    }
    acc
}

/// `pFq` in one call.
pub fn hyper(
    numer: &[ExactRational],
    denom: &[ExactRational],
    z: &ExactRational,
) -> Result<ExactRational, HyperError> {
    HyperSpec::new(numer.to_vec(), denom.to_vec(), z.clone()).map(|s| hyper_eval(&s))
}

fn prefactor(n: usize, r: &ExactRational) -> ExactRational {
    pochhammer(&(int(2) * r + int(1)), n) / ExactRational::from_integer(factorial(n))
}

/// `(2r+1)_n / n! * 2F1(-n, r-x; 2r+1; 2)`
pub fn d_via_2f1(n: usize, at: &EvalPoint) -> Result<ExactRational, HyperError> {
    let c = int(2) * &at.r + int(1);
    let f = hyper(&[int(-(n as i64)), &at.r - &at.x], &[c], &int(2))?;
    Ok(prefactor(n, &at.r) * f)
}

/// `(-1)^n (2r+1)_n / n! * 2F1(-n, r+1+x; 2r+1; 2)`
pub fn d_via_2f1_reflected(n: usize, at: &EvalPoint) -> Result<ExactRational, HyperError> {
    let c = int(2) * &at.r + int(1);
    let f = hyper(&[int(-(n as i64)), &at.r + int(1) + &at.x], &[c], &int(2))?;
    Ok(sign_pow(n) * prefactor(n, &at.r) * f)
}

/// `((2r+1)_n / n!)^2 * 4F3(-n, r+1+x, 2r+1+n, r-x; 2r+1, (2r+1)/2, r+1; 1)`
pub fn d_squared_via_4f3(n: usize, at: &EvalPoint) -> Result<ExactRational, HyperError> {
    let (r, x) = (&at.r, &at.x);
    let c = int(2) * r + int(1);
    let f = hyper(
        &[int(-(n as i64)), r + int(1) + x, &c + int(n as i64), r - x],
        &[c.clone(), &c / int(2), r + int(1)],
        &int(1),
    )?;
    let p = prefactor(n, r);
    Ok(&p * &p * f)
}

/// Both sides of the terminating Clausen-type product
/// `2F1(-n,b;c;z) 2F1(-n,c-b;c;z) = (1-z)^n 4F3(-n,b,c+n,c-b; c,c/2,(c+1)/2; z^2/(4(z-1)))`.
pub fn clausen_sides(
    n: usize,
    b: &ExactRational,
    c: &ExactRational,
    z: &ExactRational,
) -> Result<(ExactRational, ExactRational), HyperError> {
    if z == &int(1) {
        return Err(HyperError::ZIsOne);
    }
    // Both sides are rational in (b, c) over n + 1 terms; an earlier
    // termination through c + n would evaluate a 0/0 term as 0.
    let lower = [c.clone(), c / int(2), (c + int(1)) / int(2)];
    for (index, p) in lower.iter().enumerate() {
        if let Some(m) = nonpositive_integer(p) {
            if (m as usize) < n {
                return Err(HyperError::Pole { index, k: m as usize + 1 });
            }
        }
    }
    let a = int(-(n as i64));
    let lhs = hyper(&[a.clone(), b.clone()], core::slice::from_ref(c), z)?
        * hyper(&[a.clone(), c - b], core::slice::from_ref(c), z)?;
    let w = z * z / (int(4) * (z - int(1)));
    let f43 = hyper(
        &[a, b.clone(), c + int(n as i64), c - b],
        &[c.clone(), c / int(2), (c + int(1)) / int(2)],
        &w,
    )?;
    let one_minus_z = int(1) - z;
    let pow = (0..n).fold(int(1), |acc, _| acc * &one_minus_z);
    Ok((lhs, pow * f43))
}

/// Checks the Clausen-type product at a single parameter set.
pub fn clausen_product_check(
    n: usize,
    b: &ExactRational,
    c: &ExactRational,
    z: &ExactRational,
) -> Result<VerifyReport, HyperError> {
    let (lhs, rhs) = clausen_sides(n, b, c, z)?;
    let mut report = VerifyReport::new(
        "clausen",
        Mode::PointGrid,
        format!("n={n} b={b} c={c} z={z}"),
    );
    report.checks = 1;
    if lhs != rhs {
        report.counterexample = Some(Counterexample {
            case: format!("n={n}"),
            side: "product".into(),
            point: Some(format!("b={b} c={c} z={z}")),
            lhs: format!("{lhs}"),
            rhs: format!("{rhs}"),
        });
    }
    Ok(report)
}

/// Deterministic `(b, c, z)` grid for the product check. Includes the
/// substitution `c = 2r+1, b = r+1+x, z = 2` at a few points and some
/// parameter sets that hit poles, which are skipped.
pub fn clausen_grid() -> Vec<(ExactRational, ExactRational, ExactRational)> {
    let bs = [rat(1, 3), int(2), rat(-5, 2), rat(7, 4), int(-3)];
    let cs = [int(3), rat(5, 2), rat(-13, 2), rat(1, 5), int(-4)];
    let zs = [int(2), rat(1, 2), int(-3), rat(5, 3)];
    let mut out = Vec::new();
    for b in &bs {
        for c in &cs {
            for z in &zs {
                out.push((b.clone(), c.clone(), z.clone()));
            }
        }
    }
    for (r, x) in [((1, 3), (2, 5)), ((2, 1), (-1, 1)), ((-1, 4), (3, 2))] {
        let r = rat(r.0, r.1);
        let x = rat(x.0, x.1);
        out.push((&r + int(1) + &x, int(2) * &r + int(1), int(2)));
    }
    out
}

/// Runs [`clausen_sides`] for every `n <= n_max` over [`clausen_grid`].
pub fn clausen_grid_check(n_max: usize, fault: Option<&Fault>) -> VerifyReport {
    let grid = clausen_grid();
    let mut report = VerifyReport::new(
        "clausen",
        Mode::PointGrid,
        format!("n=0..={n_max} over {} (b,c,z) triples", grid.len()),
    );
    for n in 0..=n_max {
        for (b, c, z) in &grid {
            let point = format!("b={b} c={c} z={z}");
            match clausen_sides(n, b, c, z) {
                Ok((lhs, mut rhs)) => {
                    if Fault::hits(fault, "clausen", n) {
                        rhs += int(1);
                    }
                    report.checks += 1;
                    if lhs != rhs {
                        report.counterexample = Some(Counterexample {
                            case: format!("n={n}"),
                            side: "product".into(),
                            point: Some(point),
                            lhs: format!("{lhs}"),
                            rhs: format!("{rhs}"),
                        });
                        return report;
                    }
                }
                Err(e) => report.skipped.push(Skip {
                    case: format!("n={n}"),
                    side: "product".into(),
                    point,
                    reason: format!("{e}"),
                }),
            }
        }
    }
    report
}

type Form = fn(usize, &EvalPoint) -> Result<ExactRational, HyperError>;

/// Checks the `2F1` forms and the `4F3` square form against [`d_eval`] at
/// every point and every `n <= n_max`.
pub fn hypergeometric_form_check(
    n_max: usize,
    points: &[EvalPoint],
    fault: Option<&Fault>,
) -> VerifyReport {
    let id = "hypergeometric-form";
    let mut report = VerifyReport::new(
        id,
        Mode::PointGrid,
        format!("n=0..={n_max} at {} points", points.len()),
    );
    for at in points {
        for n in 0..=n_max {
            let d = d_eval(n, at);
            let forms: [(&str, Form, ExactRational); 3] = [
                ("2f1", d_via_2f1, d.clone()),
                ("2f1-reflected", d_via_2f1_reflected, d.clone()),
                ("4f3-square", d_squared_via_4f3, &d * &d),
            ];
            for (i, (label, form, expected)) in forms.into_iter().enumerate() {
                let skip = |reason: &str| Skip {
                    case: format!("n={n}"),
                    side: label.into(),
                    point: format!("{at}"),
                    reason: reason.into(),
                };
                if at.r_is_excluded_half_integers() {
                    report.skipped.push(skip("r in {-1/2, -1, -3/2, ...}"));
                    continue;
                }
                match form(n, at) {
                    Ok(mut value) => {
                        if i == 0 && Fault::hits(fault, id, n) {
                            value += int(1);
                        }
                        report.checks += 1;
                        if value != expected {
                            report.counterexample = Some(Counterexample {
                                case: format!("n={n}"),
                                side: label.into(),
                                point: Some(format!("{at}")),
                                lhs: format!("{expected}"),
                                rhs: format!("{value}"),
                            });
                            return report;
                        }
                    }
                    Err(e) => report.skipped.push(skip(&format!("{e}"))),
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_term_2f1() {
        // 2F1(-1, b; c; z) = 1 - b z / c
        assert_eq!(hyper(&[int(-1), int(1)], &[int(2)], &int(2)).unwrap(), int(0));
        let (b, c, z) = (rat(3, 7), rat(-5, 2), rat(4, 9));
        let expect = int(1) - &b * &z / &c;
        assert_eq!(hyper(&[int(-1), b], &[c], &z).unwrap(), expect);
    }

    #[test]
    fn zero_argument_is_one() {
        let v = hyper(&[int(-4), rat(1, 3), int(7)], &[rat(5, 2), int(3)], &int(0)).unwrap();
        assert_eq!(v, int(1));
    }

    #[test]
    fn d2_at_r1_x0() {
        let at = EvalPoint::ints(1, 0);
        assert_eq!(d_via_2f1(2, &at).unwrap(), int(2));
        assert_eq!(d_via_2f1_reflected(2, &at).unwrap(), int(2));
        assert_eq!(d_squared_via_4f3(2, &at).unwrap(), int(4));
    }

    #[test]
    fn validation() {
        assert_eq!(
            HyperSpec::new(alloc::vec![rat(1, 2)], alloc::vec![], int(1)),
            Err(HyperError::NonTerminating)
        );
        // (-2)_3 hits zero before the 4th term
        assert_eq!(
            HyperSpec::new(alloc::vec![int(-3)], alloc::vec![int(-2)], int(1)),
            Err(HyperError::Pole { index: 0, k: 3 })
        );
        // denominator -3 with termination at 3: (-3)_3 = -6, no pole
        let s = HyperSpec::new(alloc::vec![int(-3)], alloc::vec![int(-3)], int(1)).unwrap();
        assert_eq!(s.termination_index(), 3);
        // smallest |a| wins
        let s = HyperSpec::new(alloc::vec![int(-5), int(-2), int(0)], alloc::vec![], int(1)).unwrap();
        assert_eq!(s.termination_index(), 0);
        assert_eq!(hyper_eval(&s), int(1));
    }

    #[test]
    fn vandermonde_oracle() {
        // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
        let (b, c) = (rat(2, 3), rat(11, 4));
        for n in 0..10 {
            let v = hyper(&[int(-(n as i64)), b.clone()], core::slice::from_ref(&c), &int(1)).unwrap();
            assert_eq!(v, pochhammer(&(&c - &b), n) / pochhammer(&c, n));
        }
    }

    #[test]
    fn clausen_small() {
        let r = clausen_product_check(0, &int(2), &int(3), &int(2)).unwrap();
        assert!(r.passed());
        let r = clausen_product_check(1, &int(2), &int(3), &int(2)).unwrap();
        assert!(r.passed());
        assert_eq!(clausen_product_check(1, &int(2), &int(3), &int(1)), Err(HyperError::ZIsOne));
        assert!(matches!(
            clausen_product_check(3, &int(2), &int(-1), &int(2)),
            Err(HyperError::Pole { .. })
        ));
    }

    #[test]
    fn clausen_at_d_square_substitution() {
        for (r, x) in [(rat(1, 3), rat(2, 5)), (int(2), rat(-7, 3))] {
            let b = &r + int(1) + &x;
            let c = int(2) * &r + int(1);
            assert!(clausen_product_check(2, &b, &c, &int(2)).unwrap().passed());
        }
    }

    #[test]
    fn fault_is_caught() {
        let ok = clausen_grid_check(3, None);
        assert!(ok.passed() && ok.checks > 0);
        let bad = clausen_grid_check(3, Some(&Fault::new("clausen", 2)));
        assert!(!bad.passed());
        assert_eq!(bad.counterexample.unwrap().case, "n=2");
    }
}
