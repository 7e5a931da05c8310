//! Seeded random rational points for the oracle checks.
//!
//! Numerators and denominators are drawn from `1..=7`; small values keep the
//! exact determinants cheap while still hitting generic points.

use std::collections::BTreeMap;

use rand::Rng;

use crate::diagrams::{ShiftedDiagram, Square};

use super::scalar::{rat, GaussianRational, Rational};

/// A random rational `±p/q` with `p, q ∈ 1..=7` (may not be zero).
pub fn random_nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = rng.gen_range(1..=7i64);
    let den = rng.gen_range(1..=7i64);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    rat(sign * num, den)
}

/// A random rational that is zero one time in five.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    if rng.gen_range(0..5) == 0 {
        rat(0, 1)
    } else {
        random_nonzero_rational(rng)
    }
}

/// Random coordinates for a point of the mixed cell `(λ, μ)`: real parts are
/// arbitrary, imaginary parts are nonzero on `μ` and zero off `μ`.
pub fn random_membership_values<R: Rng>(
    lambda: &ShiftedDiagram,
    mu: &ShiftedDiagram,
    rng: &mut R,
) -> BTreeMap<Square, GaussianRational> {
    lambda
        .squares()
        .into_iter()
        .map(|sq| {
            let re = random_rational(rng);
            let im = if mu.contains(sq) {
                random_nonzero_rational(rng)
            } else {
                rat(0, 1)
            };
            (sq, GaussianRational { re, im })
        })
        .collect()
}
