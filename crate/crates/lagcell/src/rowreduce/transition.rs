//! The explicit transition maps of a cover `λ ⋖ λ'`.
//!
//! Moving a cell member of `C_λ` into `C_{λ'}` along the parameter `t ≠ 0`
//! rewrites every diagram coordinate by a closed-form expression in the old
//! coordinates and `t^{-1}`. [`transition_apply`] implements those case
//! splits directly and is generic over exact scalars, so the same code path
//! evaluates the map and (fed with jets) differentiates it.
//!
//! [`transition_via_rref`] rebuilds the map with no case analysis at all: it
//! materializes the cell matrix, performs the defining row modification, row
//! reduces exactly, and reads the new coordinates off the target pattern.
//! The two routes agreeing on random inputs pins every sign and cross term.

use std::collections::BTreeMap;

use crate::diagrams::{CoverCase, ShiftedDiagram, Square};
use crate::{Error, Result};

use super::matrix::identify;
use super::pattern::{materialize, pattern};
use super::scalar::{GaussianRational, Scalar};

fn square(k: usize, l: usize) -> Square {
    Square::new(k, l)
}

/// Applies the transition map of the cover `lambda ⋖ lambda_p` to the
/// coordinates `z` at parameter `t`. Errors on a non-cover pair, a missing
/// coordinate, or `t = 0`.
pub fn transition_apply<S: Scalar>(
    lambda: &ShiftedDiagram,
    lambda_p: &ShiftedDiagram,
    z: &BTreeMap<Square, S>,
    t: &S,
) -> Result<BTreeMap<Square, S>> {
    let rd = lambda.region_data(lambda_p)?;
    if t.s_is_zero() {
        return Err(Error::Domain("transition parameter t must be nonzero".into()));
    }
    for sq in lambda.squares() {
        if !z.contains_key(&sq) {
            return Err(Error::Domain(format!("missing coordinate for box {}", sq)));
        }
    }
    let at = |sq: Square| -> &S { &z[&sq] };
    let t_inv = t.s_inv();
    let t_inv2 = t_inv.s_mul(&t_inv);
    let s = rd.star;

    let mut out = BTreeMap::new();
    match rd.case {
        CoverCase::NewRow => {
            for sq in lambda_p.squares() {
                let (k, l) = (sq.row, sq.col);
                let znew = if l < s {
                    // Left of the new column: pick up a cross term.
                    let corr = t_inv.s_mul(&at(square(k, s)).s_mul(at(square(l, s))));
                    at(sq).s_add(&corr)
                } else if k < s && l == s {
                    // The new column rescales with a sign.
                    t_inv.s_mul(at(sq)).s_neg()
                } else if k == s && l == s {
                    t_inv.clone()
                } else {
                    at(sq).clone()
                };
                out.insert(sq, znew);
            }
        }
        CoverCase::SameRows => {
            let m = rd.new_square.col;
            for sq in lambda_p.squares() {
                let (k, l) = (sq.row, sq.col);
                let znew = if k > s || l > m {
                    at(sq).clone()
                } else if l < s {
                    // k <= l < s: both cross terms and the second-order term.
                    let c1 = t_inv.s_mul(&at(square(k, s)).s_mul(at(square(l, m))));
                    let c2 = t_inv.s_mul(&at(square(l, s)).s_mul(at(square(k, m))));
                    let c3 = t_inv2.s_mul(
                        &at(square(s, s))
                            .s_mul(at(square(k, m)))
                            .s_mul(at(square(l, m))),
                    );
                    at(sq).s_sub(&c1).s_sub(&c2).s_add(&c3)
                } else if k < s && l == s {
                    let c = t_inv2.s_mul(&at(square(s, s)).s_mul(at(square(k, m))));
                    t_inv.s_mul(at(sq)).s_sub(&c)
                } else if k < s && l < m {
                    // k < s < l < m: under the arch.
                    let c = t_inv.s_mul(&at(square(s, l)).s_mul(at(square(k, m))));
                    at(sq).s_sub(&c)
                } else if k < s && l == m {
                    t_inv.s_mul(at(sq)).s_neg()
                } else if k == s && l == s {
                    t_inv2.s_mul(at(sq))
                } else if k == s && l < m {
                    t_inv.s_mul(at(sq))
                } else {
                    debug_assert_eq!((k, l), (s, m));
                    t_inv.clone()
                };
                out.insert(sq, znew);
            }
        }
    }
    Ok(out)
}

/// The same transition computed with no closed forms: materialize the cell
/// matrix, apply the defining row modification of the cover, row reduce, and
/// read the new parameters off the target pattern.
pub fn transition_via_rref(
    lambda: &ShiftedDiagram,
    lambda_p: &ShiftedDiagram,
    z: &BTreeMap<Square, GaussianRational>,
    t: &GaussianRational,
) -> Result<BTreeMap<Square, GaussianRational>> {
    let rd = lambda.region_data(lambda_p)?;
    if t.is_zero() {
        return Err(Error::Domain("transition parameter t must be nonzero".into()));
    }
    let n = lambda.ambient_n();
    let p = pattern(&lambda.subset(), n)?;
    let mut m = materialize(&p, z)?;
    let num_i = n - lambda.num_rows();

    match rd.case {
        CoverCase::NewRow => {
            // w' = v_{|I|} + t f_n.
            m[num_i - 1][n] = m[num_i - 1][n].add(t);
        }
        CoverCase::SameRows => {
            let star = rd.star;
            let j_star = n - lambda.part(star) + 1;
            let j_star_new = j_star - 1;
            // v' = v_a - t e_{j_star} on the e-row whose pivot is e_{j_star - 1}.
            let subset = lambda.subset();
            let a = (1..=j_star_new).filter(|x| !subset.contains(x)).count();
            m[a - 1][j_star - 1] = m[a - 1][j_star - 1].sub(t);
            // w' = w_star + t f_{j_star - 1} on the f-row with pivot f_{j_star}.
            m[n - star][2 * n - j_star_new] = m[n - star][2 * n - j_star_new].add(t);
        }
    }

    let (p2, values) = identify(&m)?;
    if p2.subset() != &lambda_p.subset() {
        return Err(Error::Integrity(format!(
            "modified matrix landed in cell {:?}, expected {:?}",
            p2.subset(),
            lambda_p.subset()
        )));
    }
    Ok(values)
}
