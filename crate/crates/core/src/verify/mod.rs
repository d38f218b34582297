// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Exact machine checks of the identities satisfied by `d_n^(r)(x)`.
//!
//! Every identity family is written once (see `identities.rs`) and run by
//! one of three runners:
//!
//! * symbolic: both sides as polynomials or affine-denominator rational
//!   functions in `(x, r)`, compared exactly;
//! * interpolation: polynomials in `x` compared at `D + 1` or more distinct
//!   values of `r`, where `D` bounds the `r`-degree of the identity;
//! * pointwise: exact rationals at individual `(r, x)` points.
//!
//! The first two are proofs for the checked range; the third is evidence
//! and is used to cross-check the other two.

mod env;
mod identities;
mod report;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::bipoly::{PolyError, PolyFraction};
use crate::dcore::DCache;
use crate::exactnum::{int, rat, ExactRational};
use crate::hyper::{clausen_grid_check, hypergeometric_form_check};
use crate::point::EvalPoint;

use env::Env;
use identities::{Identity, Side, REGISTRY};

pub use identities::Case;
pub use report::{Counterexample, Fault, Interpolation, Mode, Skip, VerifyReport};

/// Ids of the families that are checked only at sample points.
const POINT_FAMILIES: [&str; 2] = ["hypergeometric-form", "clausen"];

/// Number of sample points used by the `hypergeometric-form` family.
pub const HYPERGEOMETRIC_POINTS: usize = 50;

/// Every identity id, in suite order.
pub fn identity_ids() -> Vec<&'static str> {
    REGISTRY
        .iter()
        .map(|i| i.id())
        .chain(POINT_FAMILIES)
        .collect()
}

/// Depth the default suite runs each family at.
pub fn default_depth(id: &str) -> Option<usize> {
    Some(match id {
        "square" => 12,
        "linearization" => 8,
        "newform-consequences" => 15,
        "jacobi" => 12,
        "meixner" => 12,
        "recurrences" => 25,
        "special-values" => 25,
        "shift-identities" => 20,
        "squared-sums" => 10,
        "sum-formula" => 15,
        "hypergeometric-form" => 15,
        "clausen" => 15,
        _ => return None,
    })
}

fn lookup(id: &str) -> Option<&'static dyn Identity> {
    REGISTRY.iter().copied().find(|i| i.id() == id)
}

fn range_text(cases: &[Case]) -> String {
    let n_lo = cases.iter().map(|c| c.n).min().unwrap_or(0);
    let n_hi = cases.iter().map(|c| c.n).max().unwrap_or(0);
    match cases.iter().filter_map(|c| c.m).max() {
        Some(m) => format!("m=0..={m} n={n_lo}..={n_hi}"),
        None if cases.is_empty() => "empty".into(),
        None => format!("n={n_lo}..={n_hi}"),
    }
}

fn apply_fault(sides: &mut [Side], id: &str, case: Case, fault: Option<&Fault>) {
    if Fault::hits(fault, id, case.n) {
        if let Some(first) = sides.first_mut() {
            first.rhs = &first.rhs + &PolyFraction::one();
        }
    }
}

fn construction_failure(case: Case, e: PolyError) -> Counterexample {
    Counterexample {
        case: case.to_string(),
        side: "construction".into(),
        point: None,
        lhs: format!("{e}"),
        rhs: String::new(),
    }
}

fn mismatch(case: Case, side: &Side, point: Option<String>) -> Counterexample {
    let (lhs, rhs) = if side.lhs.is_pole() || side.rhs.is_pole() {
        ("pole".into(), "pole".into())
    } else {
        let (a, b) = side.lhs.common_numerators(&side.rhs);
        (a.to_string(), b.to_string())
    };
    Counterexample {
        case: case.to_string(),
        side: side.label.into(),
        point,
        lhs,
        rhs,
    }
}

fn run_symbolic(ident: &dyn Identity, cases: &[Case], fault: Option<&Fault>) -> VerifyReport {
    let mut report = VerifyReport::new(ident.id(), ident.mode(), range_text(cases));
    let mut cache = DCache::new();
    // one skip record per guarded sub-identity: the symbolic comparison
    // says nothing at the excluded parameter values
    let mut noted: Vec<&'static str> = Vec::new();
    for &case in cases {
        let mut sides = match ident.sides(&mut Env::Symbolic(&mut cache), case) {
            Ok(s) => s,
            Err(e) => {
                report.counterexample = Some(construction_failure(case, e));
                return report;
            }
        };
        apply_fault(&mut sides, ident.id(), case, fault);
        for side in &sides {
            if let Some(excluded) = side.guard.describe() {
                if !noted.contains(&side.label) {
                    noted.push(side.label);
                    report.skipped.push(Skip {
                        case: "all".into(),
                        side: side.label.into(),
                        point: excluded,
                        reason: "excluded parameter values".into(),
                    });
                }
            }
            report.checks += 1;
            if !side.lhs.equals(&side.rhs) {
                report.counterexample = Some(mismatch(case, side, None));
                return report;
            }
        }
    }
    report
}

/// `r = 1, 2, ..., need` followed by the identity's extra samples.
fn interpolation_samples(ident: &dyn Identity, need: usize) -> Vec<ExactRational> {
    let mut out: Vec<ExactRational> = (1..=need as i64).map(int).collect();
    for extra in ident.extra_samples() {
        if !out.contains(&extra) {
            out.push(extra);
        }
    }
    out
}

fn run_interpolation(ident: &dyn Identity, cases: &[Case], fault: Option<&Fault>) -> VerifyReport {
    let mut report = VerifyReport::new(ident.id(), ident.mode(), range_text(cases));
    let mut cache = DCache::new();
    // (degree bound, fewest samples) of the case with the largest bound
    let mut widest: Option<(usize, usize)> = None;
    for &case in cases {
        let degree = ident.degree_bound(case);
        let need = ident.min_samples(case).max(degree + 1);
        let mut used: BTreeMap<&'static str, usize> = BTreeMap::new();
        for (i, r) in interpolation_samples(ident, need).into_iter().enumerate() {
            let at = EvalPoint::new(r.clone(), int(0));
            let mut sides = match ident.sides(&mut Env::FixedR(&mut cache, r.clone()), case) {
                Ok(s) => s,
                Err(e) => {
                    report.counterexample = Some(construction_failure(case, e));
                    return report;
                }
            };
            apply_fault(&mut sides, ident.id(), case, fault);
            for side in &sides {
                if side.once && i > 0 {
                    continue;
                }
                let point = format!("r={r}");
                if let Some(reason) = side.guard.blocks(&at) {
                    report.skipped.push(Skip {
                        case: case.to_string(),
                        side: side.label.into(),
                        point,
                        reason,
                    });
                    continue;
                }
                if side.lhs.is_pole() || side.rhs.is_pole() {
                    report.skipped.push(Skip {
                        case: case.to_string(),
                        side: side.label.into(),
                        point,
                        reason: "pole".into(),
                    });
                    continue;
                }
                report.checks += 1;
                if !side.lhs.equals(&side.rhs) {
                    report.counterexample = Some(mismatch(case, side, Some(point)));
                    return report;
                }
                if !side.once {
                    *used.entry(side.label).or_insert(0) += 1;
                }
            }
        }
        if let Some(min) = used.values().min() {
            if widest.is_none_or(|(d, _)| degree >= d) {
                widest = Some((degree, *min));
            }
            if *min <= degree {
                // not enough samples for a proof; treated as a failure
                report.counterexample = Some(Counterexample {
                    case: case.to_string(),
                    side: "interpolation".into(),
                    point: None,
                    lhs: format!("{min} samples"),
                    rhs: format!("degree bound {degree}"),
                });
                return report;
            }
        }
    }
    report.interpolation = widest.map(|(degree_bound, samples)| Interpolation {
        degree_bound,
        samples,
    });
    report
}

fn run_cases(ident: &dyn Identity, cases: &[Case], fault: Option<&Fault>) -> VerifyReport {
    match ident.mode() {
        Mode::InterpolationGrid => run_interpolation(ident, cases, fault),
        _ => run_symbolic(ident, cases, fault),
    }
}

/// Runs family `id` at `depth`. `None` for an unknown id.
pub fn verify_identity(id: &str, depth: usize, fault: Option<&Fault>) -> Option<VerifyReport> {
    match id {
        "hypergeometric-form" => Some(hypergeometric_form_check(
            depth,
            &sample_points(HYPERGEOMETRIC_POINTS),
            fault,
        )),
        "clausen" => Some(clausen_grid_check(depth, fault)),
        _ => {
            let ident = lookup(id)?;
            Some(run_cases(ident, &ident.cases(depth), fault))
        }
    }
}

/// Checks family `id` as exact rationals at each of `points`, the same
/// formulas the symbolic runners use. `None` for an unknown or point-only id.
pub fn verify_pointwise(
    id: &str,
    depth: usize,
    points: &[EvalPoint],
    fault: Option<&Fault>,
) -> Option<VerifyReport> {
    let ident = lookup(id)?;
    let cases = ident.cases(depth);
    let mut report = VerifyReport::new(
        id,
        Mode::PointGrid,
        format!("{} at {} points", range_text(&cases), points.len()),
    );
    for at in points {
        for &case in &cases {
            let mut env = Env::point(at.clone());
            let mut sides = match ident.sides(&mut env, case) {
                Ok(s) => s,
                Err(e) => {
                    report.counterexample = Some(construction_failure(case, e));
                    return Some(report);
                }
            };
            apply_fault(&mut sides, id, case, fault);
            for side in &sides {
                let skip = |reason: String| Skip {
                    case: case.to_string(),
                    side: side.label.into(),
                    point: at.to_string(),
                    reason,
                };
                if let Some(reason) = side.guard.blocks(at) {
                    report.skipped.push(skip(reason));
                    continue;
                }
                let (Some(l), Some(r)) = (side.lhs.as_constant(), side.rhs.as_constant()) else {
                    report.skipped.push(skip("pole".into()));
                    continue;
                };
                report.checks += 1;
                if l != r {
                    report.counterexample = Some(Counterexample {
                        case: case.to_string(),
                        side: side.label.into(),
                        point: Some(at.to_string()),
                        lhs: l.to_string(),
                        rhs: r.to_string(),
                    });
                    return Some(report);
                }
            }
        }
    }
    Some(report)
}

/// `count` deterministic rational points with `r` outside
/// `{-1/2, -1, -3/2, ...}`. Numerators and denominators cycle with
/// coprime strides so no two points coincide for small counts.
pub fn sample_points(count: usize) -> Vec<EvalPoint> {
    let mut out = Vec::with_capacity(count);
    let mut i: i64 = 0;
    while out.len() < count {
        let r = rat((7 * i) % 23 - 8, 1 + i % 5);
        let x = rat((11 * i) % 29 - 14, 1 + (3 * i) % 7);
        let at = EvalPoint::new(r, x);
        i += 1;
        if at.r_is_excluded_half_integers() || out.contains(&at) {
            continue;
        }
        out.push(at);
    }
    out
}

pub fn verify_square(n_max: usize) -> VerifyReport {
    run_cases(&identities::Square, &identities::Square.cases(n_max), None)
}

pub fn verify_linearization(m_max: usize, n_max: usize) -> VerifyReport {
    let cases: Vec<Case> = (0..=n_max)
        .flat_map(|n| (0..=m_max).map(move |m| Case::mn(m, n)))
        .collect();
    run_cases(&identities::Linearization, &cases, None)
}

pub fn verify_newform_consequences(n_max: usize) -> VerifyReport {
    by_id("newform-consequences", n_max)
}

pub fn verify_jacobi(n_max: usize) -> VerifyReport {
    by_id("jacobi", n_max)
}

pub fn verify_meixner(n_max: usize) -> VerifyReport {
    by_id("meixner", n_max)
}

pub fn verify_recurrences(n_max: usize) -> VerifyReport {
    by_id("recurrences", n_max)
}

pub fn verify_special_values(n_max: usize) -> VerifyReport {
    by_id("special-values", n_max)
}

pub fn verify_shift_identities(n_max: usize) -> VerifyReport {
    by_id("shift-identities", n_max)
}

pub fn verify_squared_sums(n_max: usize) -> VerifyReport {
    by_id("squared-sums", n_max)
}

pub fn verify_sum_formula(n_max: usize) -> VerifyReport {
    by_id("sum-formula", n_max)
}

fn by_id(id: &str, n_max: usize) -> VerifyReport {
    verify_identity(id, n_max, None).expect("registered id")
}

/// Which families to run, at what depth, and an optional fault.
#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    /// Per-family depth overrides; missing ids use [`default_depth`].
    pub depths: BTreeMap<String, usize>,
    /// Depth applied to every family not in `depths` (instead of the default).
    pub uniform_depth: Option<usize>,
    /// Restrict to these ids; `None` runs everything.
    pub only: Option<Vec<String>>,
    pub fault: Option<Fault>,
}

impl SuiteConfig {
    /// Every selected id with the depth it will run at. Unknown ids in
    /// `only` or `depths` are returned as the error.
    pub fn plan(&self) -> Result<Vec<(&'static str, usize)>, String> {
        let ids = identity_ids();
        let unknown = self
            .only
            .iter()
            .flatten()
            .chain(self.depths.keys())
            .find(|id| !ids.contains(&id.as_str()));
        if let Some(id) = unknown {
            return Err(id.clone());
        }
        Ok(ids
            .into_iter()
            .filter(|id| self.only.as_ref().is_none_or(|o| o.iter().any(|s| s == id)))
            .map(|id| {
                let depth = self
                    .depths
                    .get(id)
                    .copied()
                    .or(self.uniform_depth)
                    .or_else(|| default_depth(id))
                    .unwrap_or(0);
                (id, depth)
            })
            .collect())
    }
}

/// Runs the configured families in suite order.
///
/// # Panics
/// On an unknown id; check with [`SuiteConfig::plan`] first.
pub fn run_suite(config: &SuiteConfig) -> Vec<VerifyReport> {
    let plan = config.plan().expect("unknown identity id");
    plan.into_iter()
        .map(|(id, depth)| verify_identity(id, depth, config.fault.as_ref()).expect("registered id"))
        .collect()
}
