// SPDX-License-Identifier: Apache-2.0 OR MIT

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Both sides are polynomials in `x` and `r`, compared term by term.
    SymbolicPoly,
    /// Both sides are rational functions; compared after multiplying out to
    /// the least common denominator.
    ClearedDenominator,
    /// Compared as polynomials in `x` at `D + 1` or more values of `r`,
    /// where `D` bounds the `r`-degree of the cleared identity.
    InterpolationGrid,
    /// Compared as exact rationals at individual points (evidence only).
    PointGrid,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::SymbolicPoly => "symbolic_poly",
            Mode::ClearedDenominator => "cleared_denominator",
            Mode::InterpolationGrid => "interpolation_grid",
            Mode::PointGrid => "point_grid",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// e.g. `"n=3"` or `"m=2 n=5"`
    pub case: String,
    /// Which sub-identity of the report failed.
    pub side: String,
    /// Set for point and interpolation checks.
    pub point: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skip {
    pub case: String,
    pub side: String,
    pub point: String,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interpolation {
    /// `r`-degree bound of the largest case.
    pub degree_bound: usize,
    /// Fewest distinct `r` samples any sub-identity of that case was
    /// compared at; always `> degree_bound`.
    pub samples: usize,
}

/// Outcome of checking one identity family.
///
/// `passed()` is derived from the absence of a counterexample, so a failing
/// report always carries one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub identity_id: String,
    pub mode: Mode,
    pub range: String,
    /// Number of individual side-by-side comparisons performed.
    pub checks: usize,
    pub counterexample: Option<Counterexample>,
    pub skipped: Vec<Skip>,
    pub interpolation: Option<Interpolation>,
}

impl VerifyReport {
    pub fn new(identity_id: &str, mode: Mode, range: String) -> Self {
        Self {
            identity_id: identity_id.into(),
            mode,
            range,
            checks: 0,
            counterexample: None,
            skipped: Vec::new(),
            interpolation: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Request to perturb one reference formula: the right-hand side of the
/// first sub-identity of case `n` of `identity_id` gets `+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fault {
    pub identity_id: String,
    pub n: usize,
}

impl Fault {
    pub fn new(identity_id: &str, n: usize) -> Self {
        Self {
            identity_id: identity_id.into(),
            n,
        }
    }

    pub(crate) fn hits(fault: Option<&Fault>, id: &str, n: usize) -> bool {
        fault.is_some_and(|f| f.identity_id == id && f.n == n)
    }
}
