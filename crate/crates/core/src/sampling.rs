//! Seeded random inputs shared by property suites and the CLI.

use num_bigint::BigInt;
use rand::Rng;

use crate::rational::{ExtensionParams, Rational};

/// Rational `p/q` with `|p| <= 12`, `1 <= q <= 7`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let p: i64 = rng.random_range(-12..=12);
    let q: i64 = rng.random_range(1..=7);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn random_nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    loop {
        let r = random_rational(rng);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

pub fn random_params<R: Rng + ?Sized>(rng: &mut R) -> ExtensionParams {
    ExtensionParams::new(random_rational(rng), random_rational(rng), random_rational(rng))
}
