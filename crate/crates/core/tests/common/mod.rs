#![allow(dead_code)]

use galext_core::rational::ratio;
use galext_core::{ExtensionParams, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| ratio(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=20, 1i64..=9, any::<bool>()).prop_map(|(p, q, neg)| ratio(if neg { -p } else { p }, q))
}

pub fn params() -> impl Strategy<Value = ExtensionParams> {
    (rational(), rational(), rational()).prop_map(|(k, m, l)| ExtensionParams::new(k, m, l))
}

pub fn massive_params() -> impl Strategy<Value = ExtensionParams> {
    (rational(), nonzero_rational(), rational()).prop_map(|(k, m, l)| ExtensionParams::new(k, m, l))
}
