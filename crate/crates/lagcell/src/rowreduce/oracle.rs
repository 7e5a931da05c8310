//! The exact Jacobian oracle.
//!
//! For a cover `λ ⋖ λ'` and a subdiagram `μ ≤ λ`, the transition map sends a
//! point of the mixed cell `(λ, μ)` and a real `t ≠ 0` to a point of
//! `(λ', μ)`. Its real Jacobian, in the coordinates `x` on the boxes of `λ`,
//! `y` on the boxes of `μ`, and `t`, ordered lexicographically with `x`
//! before `y` per box, is a monomial `± t^e`. This module computes that
//! determinant from first principles: jets through [`transition_apply`],
//! then a fraction-free determinant. Nothing here knows the closed-form
//! sign and exponent it is used to validate.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::diagrams::{ShiftedDiagram, Square};
use crate::{Error, Result};

use super::jet::Jet;
use super::matrix::det_rational;
use super::scalar::{GaussianRational, Rational};
use super::transition::transition_apply;

/// Exact real Jacobian determinant of the transition map of `lambda ⋖
/// lambda_p` restricted to the mixed cell of `mu`, at the point `z` and
/// parameter `t`.
///
/// Preconditions: `mu ≤ lambda`, `t ≠ 0`, and `z` must lie in the cell:
/// imaginary parts vanish off `mu` and are nonzero on the corners of `mu`.
pub fn jacobian_oracle(
    lambda: &ShiftedDiagram,
    lambda_p: &ShiftedDiagram,
    mu: &ShiftedDiagram,
    z: &BTreeMap<Square, GaussianRational>,
    t: &Rational,
) -> Result<Rational> {
    if !mu.leq(lambda)? {
        return Err(Error::Domain(format!("μ = {} is not contained in λ = {}", mu, lambda)));
    }
    if t.is_zero() {
        return Err(Error::Domain("t must be nonzero".into()));
    }
    let corners: Vec<Square> = mu.corners();
    for sq in lambda.squares() {
        let v = z
            .get(&sq)
            .ok_or_else(|| Error::Domain(format!("missing coordinate for box {}", sq)))?;
        if !mu.contains(sq) && !v.im.is_zero() {
            return Err(Error::Domain(format!(
                "box {} lies outside μ but has nonzero imaginary part",
                sq
            )));
        }
        if corners.contains(&sq) && v.im.is_zero() {
            return Err(Error::Domain(format!(
                "corner {} of μ must have nonzero imaginary part",
                sq
            )));
        }
    }

    // Active real coordinates: x for every box of λ, y for every box of μ
    // (interleaved in box order, x before y), then t.
    let mut var_count = 0usize;
    let mut var_index: BTreeMap<(Square, bool), usize> = BTreeMap::new();
    for sq in lambda.squares() {
        var_index.insert((sq, false), var_count);
        var_count += 1;
        if mu.contains(sq) {
            var_index.insert((sq, true), var_count);
            var_count += 1;
        }
    }
    let t_var = var_count;
    var_count += 1;

    let jets: BTreeMap<Square, Jet> = lambda
        .squares()
        .into_iter()
        .map(|sq| {
            let mut jet = Jet::variable(
                z[&sq].clone(),
                var_index[&(sq, false)],
                var_count,
                GaussianRational::one(),
            );
            if mu.contains(sq) {
                let y = Jet::variable(
                    GaussianRational::zero(),
                    var_index[&(sq, true)],
                    var_count,
                    GaussianRational::i(),
                );
                jet = super::scalar::Scalar::s_add(&jet, &y);
            }
            (sq, jet)
        })
        .collect();
    let t_jet = Jet::variable(
        GaussianRational::from_rational(t.clone()),
        t_var,
        var_count,
        GaussianRational::one(),
    );

    let image = transition_apply(lambda, lambda_p, &jets, &t_jet)?;

    // The image must lie in the mixed cell of (λ', μ): exact membership.
    for sq in lambda_p.squares() {
        let jet = &image[&sq];
        if !mu.contains(sq) && !jet.value().im.is_zero() {
            return Err(Error::Integrity(format!(
                "image coordinate {} should be real but is {}",
                sq,
                jet.value()
            )));
        }
        if corners.contains(&sq) && jet.value().im.is_zero() {
            return Err(Error::Integrity(format!(
                "image coordinate {} should have nonzero imaginary part",
                sq
            )));
        }
    }

    // Real Jacobian rows: x' for every box of λ', y' for every box of μ,
    // interleaved in box order. The matrix is square:
    // |λ'| + |μ| = (|λ| + |μ| + 1) columns.
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(var_count);
    for sq in lambda_p.squares() {
        let jet = &image[&sq];
        rows.push(jet.partials().iter().map(|p| p.re.clone()).collect());
        if mu.contains(sq) {
            rows.push(jet.partials().iter().map(|p| p.im.clone()).collect());
        }
    }
    debug_assert_eq!(rows.len(), var_count);
    Ok(det_rational(&rows))
}
