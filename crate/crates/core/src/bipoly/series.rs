// SPDX-License-Identifier: Apache-2.0 OR MIT

use alloc::vec::Vec;

use super::{BiPoly, PolyError};
use crate::exactnum::{int, ExactRational};

/// Power series in `t` with [`BiPoly`] coefficients, truncated after
/// `order` terms (so `t^order` and above are dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BiPoly>,
}

/// Sign of `t` in `(1 ± t)^E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TSign {
    Plus,
    Minus,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<BiPoly>) -> Self {
        Self { coeffs }
    }

    /// Series from rational coefficients.
    pub fn from_rationals<I: IntoIterator<Item = ExactRational>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(BiPoly::constant).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &BiPoly {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[BiPoly] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<BiPoly> {
        self.coeffs
    }

    /// Cauchy product truncated at the shared order.
    pub fn series_mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, PolyError> {
        if self.order() != other.order() {
            return Err(PolyError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let n = self.order();
        let mut out = alloc::vec![BiPoly::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Ok(TruncatedSeries::new(out))
    }
}

/// `(1 ± t)^E = sum_k binom(E, k) (±t)^k` for an affine exponent `E`.
pub fn binomial_series(
    exponent: &BiPoly,
    sign: TSign,
    order: usize,
) -> Result<TruncatedSeries, PolyError> {
    if exponent.total_degree() > 1 {
        return Err(PolyError::NotAffine);
    }
    let mut coeffs = Vec::with_capacity(order);
    let mut term = BiPoly::one();
    for k in 0..order {
        if k > 0 {
            // binom(E, k) = binom(E, k-1) * (E - k + 1) / k
            let step = exponent - &BiPoly::constant(int(k as i64 - 1));
            let mut scale = ExactRational::new(1.into(), (k as i64).into());
            if sign == TSign::Minus {
                scale = -scale;
            }
            term = (&term * &step).scale(&scale);
        }
        coeffs.push(term.clone());
    }
    Ok(TruncatedSeries::new(coeffs))
}
