// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Line-oriented grid files.
//!
//! ```text
//! # comment
//! n_max=40
//! r=0 x=-1/2
//! r=1/4 x=0
//! ```

use delannoy_core::analysis::GridSpec;
use delannoy_core::exactnum::parse_rational;
use delannoy_core::EvalPoint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing n_max= header")]
    MissingNMax,
    #[error("n_max given twice (line {line})")]
    DuplicateNMax { line: usize },
}

fn line_err(line: usize, msg: impl Into<String>) -> GridError {
    GridError::Line {
        line,
        msg: msg.into(),
    }
}

/// Parses a grid file. `n_max_override` replaces (or stands in for) the
/// header value.
pub fn parse_grid(text: &str, n_max_override: Option<usize>) -> Result<GridSpec, GridError> {
    let mut n_max = None;
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(v) = body.strip_prefix("n_max=") {
            if n_max.is_some() {
                return Err(GridError::DuplicateNMax { line });
            }
            let v = v.trim().parse::<usize>().map_err(|_| line_err(line, format!("bad n_max {v:?}")))?;
            n_max = Some(v);
            continue;
        }
        let mut r = None;
        let mut x = None;
        for field in body.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| line_err(line, format!("expected key=value, got {field:?}")))?;
            let q = parse_rational(value).map_err(|e| line_err(line, e.to_string()))?;
            let slot = match key {
                "r" => &mut r,
                "x" => &mut x,
                _ => return Err(line_err(line, format!("unknown key {key:?}"))),
            };
            if slot.replace(q).is_some() {
                return Err(line_err(line, format!("{key} given twice")));
            }
        }
        match (r, x) {
            (Some(r), Some(x)) => points.push(EvalPoint::new(r, x)),
            _ => return Err(line_err(line, "expected r=<p/q> x=<p/q>")),
        }
    }
    let n_max = n_max_override.or(n_max).ok_or(GridError::MissingNMax)?;
    Ok(GridSpec::new(points, n_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use delannoy_core::exactnum::rat;

    #[test]
    fn parses_points_and_header() {
        let g = parse_grid("# scan\nn_max=7\n\nr=1/4 x=-1/2  # edge\nx=0 r=2\n", None).unwrap();
        assert_eq!(g.n_max, 7);
        assert_eq!(g.points, vec![EvalPoint::rats((1, 4), (-1, 2)), EvalPoint::new(rat(2, 1), rat(0, 1))]);
    }

    #[test]
    fn override_and_missing_header() {
        assert_eq!(parse_grid("r=0 x=0\n", Some(3)).unwrap().n_max, 3);
        assert_eq!(parse_grid("r=0 x=0\n", None), Err(GridError::MissingNMax));
    }

    #[test]
    fn reports_the_bad_line() {
        let cases = [
            "n_max=2\nr=0 x=0.5\n",
            "n_max=2\nr=0\n",
            "n_max=2\nr=0 y=1\n",
            "n_max=2\nr=0 r=1 x=1\n",
            "n_max=2\nr 0\n",
        ];
        for text in cases {
            match parse_grid(text, None) {
                Err(GridError::Line { line: 2, .. }) => {}
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert_eq!(parse_grid("n_max=1\nn_max=2\n", None), Err(GridError::DuplicateNMax { line: 2 }));
    }
}
