// SPDX-License-Identifier: Apache-2.0 OR MIT

use delannoy_core::dcore::{d_eval, d_eval_sequence, d_sequence, delannoy_dp};
use delannoy_core::exactnum::{parse_rational, rat, sign_pow};
use delannoy_core::{BiPoly, EvalPoint, ExactRational, PolyFraction, Route};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = ExactRational> {
    (-30i64..30, 1i64..9).prop_map(|(p, q)| rat(p, q))
}

fn point() -> impl Strategy<Value = EvalPoint> {
    (small_rat(), small_rat()).prop_map(|(r, x)| EvalPoint::new(r, x))
}

fn poly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..4, 0u32..4, small_rat()), 0..6).prop_map(BiPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_a_ring_map(p in poly(), q in poly(), at in point()) {
        prop_assert_eq!((&p * &q).eval(&at), p.eval(&at) * q.eval(&at));
        prop_assert_eq!((&p + &q).eval(&at), p.eval(&at) + q.eval(&at));
        prop_assert_eq!(&p - &p, BiPoly::zero());
    }

    #[test]
    fn composition_commutes_with_evaluation(p in poly(), a in poly(), b in poly(), at in point()) {
        let image = EvalPoint::new(b.eval(&at), a.eval(&at));
        prop_assert_eq!(p.compose(&a, &b).eval(&at), p.eval(&image));
    }

    #[test]
    fn scalar_and_symbolic_values_agree(n in 0usize..12, at in point()) {
        let seq = d_sequence(Route::ThreeTerm, n);
        prop_assert_eq!(seq.get(n).eval(&at), d_eval(n, &at));
    }

    #[test]
    fn reflection_holds_pointwise(n in 0usize..15, at in point()) {
        let mirrored = EvalPoint::new(at.r.clone(), -&at.x - rat(1, 1));
        prop_assert_eq!(d_eval(n, &at), sign_pow(n) * d_eval(n, &mirrored));
    }

    #[test]
    fn sequence_prefixes_are_stable(n in 1usize..20, at in point()) {
        let long = d_eval_sequence(n, &at);
        let short = d_eval_sequence(n - 1, &at);
        prop_assert_eq!(&long[..n], &short[..]);
    }

    #[test]
    fn delannoy_is_symmetric(n in 0usize..15, m in 0usize..15) {
        prop_assert_eq!(delannoy_dp(n, m), delannoy_dp(m, n));
    }

    #[test]
    fn rational_text_round_trips(v in small_rat()) {
        prop_assert_eq!(parse_rational(&v.to_string()).unwrap(), v);
    }

    #[test]
    fn fraction_sum_matches_pointwise(c0 in small_rat(), c1 in small_rat(), at in point()) {
        // 1/(x + c0) + 1/(r + c1), compared after evaluation
        let lx = &BiPoly::x() + &BiPoly::constant(c0.clone());
        let lr = &BiPoly::r() + &BiPoly::constant(c1.clone());
        prop_assume!(!lx.eval(&at).eq(&rat(0, 1)) && !lr.eval(&at).eq(&rat(0, 1)));
        let f = PolyFraction::one().div_affine(&lx).unwrap() + PolyFraction::one().div_affine(&lr).unwrap();
        let value = f.numerator().eval(&at) / f.denominator().eval(&at);
        prop_assert_eq!(value, lx.eval(&at).recip() + lr.eval(&at).recip());
    }
}
