// SPDX-License-Identifier: Apache-2.0 OR MIT

use delannoy_core::verify::{
    default_depth, identity_ids, run_suite, sample_points, verify_identity, verify_pointwise, Fault, Mode,
    SuiteConfig,
};

const POINT_ONLY: [&str; 2] = ["hypergeometric-form", "clausen"];

fn symbolic_ids() -> Vec<&'static str> {
    identity_ids().into_iter().filter(|id| !POINT_ONLY.contains(id)).collect()
}

#[test]
fn symbolic_and_pointwise_verdicts_agree() {
    let points = sample_points(24);
    for id in symbolic_ids() {
        let depth = default_depth(id).unwrap().min(6);
        let exact = verify_identity(id, depth, None).unwrap();
        let sampled = verify_pointwise(id, depth, &points, None).unwrap();
        assert!(exact.passed() && sampled.passed(), "{id}: {:?} {:?}", exact.counterexample, sampled.counterexample);
        assert!(sampled.checks >= 20, "{id}");

        let fault = Fault::new(id, 2);
        let exact = verify_identity(id, depth, Some(&fault)).unwrap();
        let sampled = verify_pointwise(id, depth, &points, Some(&fault)).unwrap();
        assert_eq!(exact.passed(), sampled.passed(), "{id}");
    }
}

#[test]
fn every_family_is_fault_sensitive() {
    for id in identity_ids() {
        for n in [1, 4] {
            let r = verify_identity(id, 5, Some(&Fault::new(id, n))).unwrap();
            let c = r.counterexample.as_ref().unwrap_or_else(|| panic!("{id} n={n} passed with a fault"));
            assert!(c.case.ends_with(&format!("n={n}")), "{id}: {}", c.case);
        }
    }
}

#[test]
fn a_fault_fails_exactly_one_report() {
    let config = SuiteConfig {
        uniform_depth: Some(3),
        fault: Some(Fault::new("shift-identities", 2)),
        ..Default::default()
    };
    let reports = run_suite(&config);
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| r.identity_id.as_str()).collect();
    assert_eq!(failed, ["shift-identities"]);
}

#[test]
fn depth_zero_suite_passes() {
    let reports = run_suite(&SuiteConfig {
        uniform_depth: Some(0),
        ..Default::default()
    });
    assert_eq!(reports.len(), identity_ids().len());
    assert!(reports.iter().all(|r| r.passed()));
}

#[test]
fn excluded_parameters_are_recorded() {
    let r = verify_identity("special-values", 3, None).unwrap();
    let x32 = r.skipped.iter().find(|s| s.side == "x=3/2").expect("x=3/2 exclusions");
    assert_eq!(x32.point, "r in {-1, -3/2}");
    let pts = [delannoy_core::EvalPoint::rats((-3, 2), (1, 3))];
    let p = verify_pointwise("special-values", 3, &pts, None).unwrap();
    assert!(p.passed());
    assert!(p.skipped.iter().any(|s| s.side == "x=3/2"));
}

#[test]
fn interpolation_reports_carry_the_proof_size() {
    for id in ["meixner", "squared-sums"] {
        let r = verify_identity(id, 4, None).unwrap();
        assert_eq!(r.mode, Mode::InterpolationGrid);
        let i = r.interpolation.unwrap();
        assert!(i.samples > i.degree_bound, "{id}: {i:?}");
    }
}

#[test]
fn reports_are_deterministic() {
    assert_eq!(verify_identity("squared-sums", 4, None), verify_identity("squared-sums", 4, None));
    assert_eq!(sample_points(30), sample_points(30));
}
