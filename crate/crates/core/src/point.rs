// SPDX-License-Identifier: Apache-2.0 OR MIT

use core::fmt;

use crate::exactnum::{int, nonpositive_integer, rat, ExactRational};

/// A parameter/argument pair `(r, x)` at which `d_n^(r)(x)` is evaluated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EvalPoint {
    pub r: ExactRational,
    pub x: ExactRational,
}

impl EvalPoint {
    pub fn new(r: ExactRational, x: ExactRational) -> Self {
        Self { r, x }
    }

    /// Integer or `p/q` coordinates.
    pub fn ints(r: i64, x: i64) -> Self {
        Self::new(int(r), int(x))
    }

    pub fn rats(r: (i64, i64), x: (i64, i64)) -> Self {
        Self::new(rat(r.0, r.1), rat(x.0, x.1))
    }

    /// `r` lies in `{-1/2, -1, -3/2, ...}`, where `binom(-2r-1, k)` and
    /// `(2r+1)_k` can vanish.
    pub fn r_is_excluded_half_integers(&self) -> bool {
        let two_r = &self.r * int(2);
        matches!(nonpositive_integer(&two_r), Some(m) if m >= 1)
    }

    /// `x == -1/2`, the sign change of `1 + 2x`.
    pub fn x_is_minus_half(&self) -> bool {
        self.x == rat(-1, 2)
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={} x={}", self.r, self.x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn excluded_half_integers() {
        for (p, q) in [(-1, 2), (-1, 1), (-3, 2), (-2, 1), (-7, 2)] {
            assert!(EvalPoint::new(rat(p, q), int(0)).r_is_excluded_half_integers());
        }
        for (p, q) in [(0, 1), (1, 2), (-1, 3), (-1, 4), (5, 1)] {
            assert!(!EvalPoint::new(rat(p, q), int(0)).r_is_excluded_half_integers());
        }
    }
}
