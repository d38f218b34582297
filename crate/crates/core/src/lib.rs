// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Exact construction of the generalized Delannoy polynomials
//! `d_n^(r)(x) = sum_k binom(x+r+k, k) binom(x-r, n-k)`, machine checks of
//! the identities they satisfy, and exact-sign scans of their inequalities.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, report
//! serialization and the command line live in the companion `delannoy-cli`
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod bipoly;
pub mod dcore;
pub mod exactnum;
pub mod hyper;
pub mod point;
pub mod verify;

pub use bipoly::{BiPoly, PolyFraction, TruncatedSeries};
pub use dcore::{d_eval, DCache, DSequence, Route};
pub use exactnum::ExactRational;
pub use point::EvalPoint;
