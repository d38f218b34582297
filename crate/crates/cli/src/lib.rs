// SPDX-License-Identifier: Apache-2.0 OR MIT

//! File formats, report serialization and parallel drivers for the
//! `delannoy` command line tool.

pub mod grid;
pub mod output;
pub mod run;
