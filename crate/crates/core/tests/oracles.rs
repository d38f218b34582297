// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Values pinned from independent sources: a computer algebra system
//! evaluating the defining binomial sum, hand expansion, and lattice-path
//! counts.

use delannoy_core::dcore::{d_eval, d_sequence, delannoy_dp};
use delannoy_core::exactnum::{parse_rational, rat};
use delannoy_core::{EvalPoint, Route};
use num_bigint::BigInt;

fn q(s: &str) -> delannoy_core::ExactRational {
    parse_rational(s).unwrap()
}

#[test]
fn cas_values_of_the_defining_sum() {
    let cases = [
        (5, (1, 3), (2, 7), "486574/151263"),
        (7, (-5, 4), (3, 2), "375/32"),
        (10, (2, 1), (-9, 5), "26446685837/244140625"),
    ];
    for (n, r, x, expected) in cases {
        assert_eq!(d_eval(n, &EvalPoint::rats(r, x)), q(expected), "n={n}");
    }
}

#[test]
fn cas_polynomial_text() {
    for route in Route::ALL {
        let seq = d_sequence(route, 3);
        assert_eq!(seq.get(0).to_string(), "1");
        assert_eq!(seq.get(1).to_string(), "2*x + 1");
        assert_eq!(seq.get(2).to_string(), "2*x^2 + 2*x + r + 1");
        assert_eq!(seq.get(3).to_string(), "4/3*x^3 + 2*x^2 + 2*x*r + 8/3*x + r + 1", "{}", route.name());
    }
}

#[test]
fn delannoy_table() {
    // central Delannoy numbers
    let central = [1u64, 3, 13, 63, 321, 1683, 8989, 48639];
    for (n, v) in central.iter().enumerate() {
        assert_eq!(delannoy_dp(n, n), BigInt::from(*v));
        assert_eq!(d_eval(n, &EvalPoint::ints(0, n as i64)), rat(*v as i64, 1));
    }
    assert_eq!(delannoy_dp(3, 5), BigInt::from(231));
    assert_eq!(delannoy_dp(5, 3), BigInt::from(231));
}

#[test]
fn special_points_from_closed_forms() {
    // d_n(-1/2) vanishes for odd n; d_4(0) = binom(r+2, 2)
    assert_eq!(d_eval(3, &EvalPoint::rats((1, 1), (-1, 2))), rat(0, 1));
    assert_eq!(d_eval(4, &EvalPoint::rats((3, 1), (0, 1))), rat(10, 1));
    // d_2(1) = 5 + r
    assert_eq!(d_eval(2, &EvalPoint::rats((2, 7), (1, 1))), rat(37, 7));
}
