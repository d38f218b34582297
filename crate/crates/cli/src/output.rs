// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Serialization of reports and tables. Rationals are always written as
//! exact `p/q` (or integer) strings.

use delannoy_core::analysis::ScanReport;
use delannoy_core::verify::VerifyReport;
use delannoy_core::ExactRational;
use serde_json::{json, Map, Value};

pub fn verify_json(r: &VerifyReport) -> Value {
    let mut obj = Map::new();
    obj.insert("id".into(), json!(r.identity_id));
    obj.insert("mode".into(), json!(r.mode.name()));
    obj.insert("range".into(), json!(r.range));
    obj.insert("passed".into(), json!(r.passed()));
    obj.insert("checks".into(), json!(r.checks));
    if let Some(c) = &r.counterexample {
        obj.insert(
            "counterexample".into(),
            json!({
                "case": c.case,
                "side": c.side,
                "point": c.point,
                "lhs": c.lhs,
                "rhs": c.rhs,
            }),
        );
    }
    if let Some(i) = &r.interpolation {
        obj.insert(
            "interpolation".into(),
            json!({ "degree_bound": i.degree_bound, "samples": i.samples }),
        );
    }
    let skipped: Vec<Value> = r
        .skipped
        .iter()
        .map(|s| json!({ "case": s.case, "side": s.side, "point": s.point, "reason": s.reason }))
        .collect();
    obj.insert("skipped".into(), Value::Array(skipped));
    Value::Object(obj)
}

pub fn verify_text(r: &VerifyReport) -> String {
    let mut s = format!(
        "{} {} [{}] {} checks={} skipped={}",
        if r.passed() { "PASS" } else { "FAIL" },
        r.identity_id,
        r.mode,
        r.range,
        r.checks,
        r.skipped.len()
    );
    if let Some(i) = &r.interpolation {
        s += &format!(" degree_bound={} samples={}", i.degree_bound, i.samples);
    }
    if let Some(c) = &r.counterexample {
        s += &format!("\n  counterexample {} {}", c.case, c.side);
        if let Some(p) = &c.point {
            s += &format!(" at {p}");
        }
        s += &format!("\n    lhs: {}\n    rhs: {}", c.lhs, c.rhs);
    }
    s
}

fn q(v: &ExactRational) -> Value {
    json!(v.to_string())
}

pub fn scan_json(r: &ScanReport) -> Value {
    json!({
        "claim": r.claim_id,
        "n_max": r.grid.n_max,
        "points": r.grid.points.len(),
        "checks": r.checks,
        "passed": r.passed(),
        "violations": r.violations.iter().map(|v| json!({
            "n": v.n, "r": q(&v.at.r), "x": q(&v.at.x), "value": q(&v.value),
        })).collect::<Vec<_>>(),
        "zero_hits": r.zero_hits.iter().map(|z| json!({
            "n": z.n, "r": q(&z.at.r), "x": q(&z.at.x),
        })).collect::<Vec<_>>(),
        "skipped": r.skipped.iter().map(|s| json!({
            "r": q(&s.at.r), "x": q(&s.at.x), "reason": s.reason,
        })).collect::<Vec<_>>(),
    })
}

pub fn scan_text(r: &ScanReport) -> String {
    let mut s = format!(
        "{} {} points={} n_max={} checks={} violations={} zero_hits={} skipped={}",
        if r.passed() { "PASS" } else { "FAIL" },
        r.claim_id,
        r.grid.points.len(),
        r.grid.n_max,
        r.checks,
        r.violations.len(),
        r.zero_hits.len(),
        r.skipped.len()
    );
    for v in &r.violations {
        s += &format!("\n  violation n={} {} value={}", v.n, v.at, v.value);
    }
    for z in &r.zero_hits {
        s += &format!("\n  zero n={} {}", z.n, z.at);
    }
    s
}

/// A table of exact values: one row per `n`, one column per `x`.
pub struct Table {
    pub r: ExactRational,
    pub xs: Vec<ExactRational>,
    /// `rows[n][j]` is `d_n` at `xs[j]`.
    pub rows: Vec<Vec<ExactRational>>,
}

impl Table {
    pub fn csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["n".to_string()];
        header.extend(self.xs.iter().map(|x| x.to_string()));
        w.write_record(&header)?;
        for (n, row) in self.rows.iter().enumerate() {
            let mut rec = vec![n.to_string()];
            rec.extend(row.iter().map(|v| v.to_string()));
            w.write_record(&rec)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("ascii output"))
    }

    pub fn json(&self) -> Value {
        json!({
            "r": q(&self.r),
            "x": self.xs.iter().map(q).collect::<Vec<_>>(),
            "rows": self.rows.iter().enumerate().map(|(n, row)| json!({
                "n": n,
                "values": row.iter().map(q).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn text(&self) -> String {
        let cells: Vec<Vec<String>> = std::iter::once(
            std::iter::once("n".to_string()).chain(self.xs.iter().map(|x| format!("x={x}"))).collect(),
        )
        .chain(self.rows.iter().enumerate().map(|(n, row)| {
            std::iter::once(n.to_string()).chain(row.iter().map(|v| v.to_string())).collect()
        }))
        .collect();
        let widths: Vec<usize> = (0..=self.xs.len())
            .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        cells
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}
