//! Closed-form attaching degrees.
//!
//! The Jacobian determinant of the transition map of a cover is a monomial
//! `± t^e` whose sign and exponent are read off the cover's regions: the
//! column under the new box, the arch through the starred row, the roof of
//! rows below it, and their intersections with `μ` in the mixed case. The
//! attaching degree of a real or mixed cell pair is then an evaluation of
//! that monomial at `t = ±1`, weighted by how the component signs `ε` are
//! transported across the cover.
//!
//! Complex Schubert cells sit in even dimensions only, so every attaching
//! map in the complex structure has degree zero.

use crate::cells::{Cell, CellKind, Sign, SignAssignment};
use crate::diagrams::{CoverCase, RegionData, ShiftedDiagram, Square};
use crate::{Error, Result};

/// A monomial `sign · t^exponent` with `sign ∈ {+1, -1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignedMonomial {
    pub sign: i64,
    pub exponent: i64,
}

impl SignedMonomial {
    fn from_parity(parity: usize, exponent: i64) -> Self {
        SignedMonomial { sign: if parity % 2 == 0 { 1 } else { -1 }, exponent }
    }

    /// Evaluation at `t = 1`.
    pub fn at_plus_one(&self) -> i64 {
        self.sign
    }

    /// Evaluation at `t = -1`; only the exponent's parity matters, so
    /// negative exponents are reduced mod 2.
    pub fn at_minus_one(&self) -> i64 {
        if self.exponent.rem_euclid(2) == 0 {
            self.sign
        } else {
            -self.sign
        }
    }
}

impl std::fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = if self.sign >= 0 { "+" } else { "-" };
        write!(f, "{}t^{}", s, self.exponent)
    }
}

/// Complex Jacobian monomial of the cover `lambda ⋖ lambda_p`.
pub fn jacobian_complex(
    lambda: &ShiftedDiagram,
    lambda_p: &ShiftedDiagram,
) -> Result<SignedMonomial> {
    let rd = lambda.region_data(lambda_p)?;
    Ok(match rd.case {
        CoverCase::NewRow => {
            let c = rd.column.len();
            SignedMonomial::from_parity(c, -(c as i64) - 1)
        }
        CoverCase::SameRows => {
            let c = rd.column.len();
            let r = rd.roof.len();
            let a = rd.alpha.len();
            SignedMonomial::from_parity(c + r, -(a as i64) - 2)
        }
    })
}

/// Real Jacobian monomial of the transition restricted to the mixed cell of
/// `mu`: every region box also in `mu` contributes its factor a second time,
/// and the diagonal box `(star, star)` contributes once more if it is in
/// `mu`.
pub fn jacobian_mixed(
    lambda: &ShiftedDiagram,
    lambda_p: &ShiftedDiagram,
    mu: &ShiftedDiagram,
) -> Result<SignedMonomial> {
    if !mu.leq(lambda)? {
        return Err(Error::Domain(format!("μ = {} is not contained in λ = {}", mu, lambda)));
    }
    let rd = lambda.region_data(lambda_p)?;
    let in_mu = |set: &std::collections::BTreeSet<Square>| {
        set.iter().filter(|sq| mu.contains(**sq)).count()
    };
    Ok(match rd.case {
        CoverCase::NewRow => {
            let c = rd.column.len();
            let cm = in_mu(&rd.column);
            SignedMonomial::from_parity(c + cm, -((c + cm) as i64) - 1)
        }
        CoverCase::SameRows => {
            let c = rd.column.len();
            let cm = in_mu(&rd.column);
            let r = rd.roof.len();
            let rm = in_mu(&rd.roof);
            let a = rd.alpha.len();
            let am = in_mu(&rd.alpha);
            let diag = Square::new(rd.star, rd.star);
            let dm = usize::from(mu.contains(diag));
            SignedMonomial::from_parity(c + cm + r + rm, -((a + am + dm) as i64) - 2)
        }
    })
}

/// Degree of the attaching map between real Schubert cells one dimension
/// apart: zero unless `lambda ≤ lambda_p`, otherwise `T(1) - T(-1)` of the
/// complex Jacobian monomial, which lands in `{-2, 0, 2}`.
pub fn degree_real(lambda: &ShiftedDiagram, lambda_p: &ShiftedDiagram) -> Result<i64> {
    if lambda.ambient_n() != lambda_p.ambient_n() {
        return Err(Error::Domain("degree needs equal ambient ranks".into()));
    }
    if lambda.size() + 1 != lambda_p.size() {
        return Err(Error::Domain(format!(
            "degree is defined across a dimension gap of one, got |{}| and |{}|",
            lambda, lambda_p
        )));
    }
    if !lambda.le_unchecked(lambda_p) {
        return Ok(0);
    }
    let rd = lambda.region_data(lambda_p)?;
    let star = rd.star;
    Ok(match rd.case {
        CoverCase::NewRow => {
            let sign = if star % 2 == 0 { 1 } else { -1 };
            let osc = if (star + 1) % 2 == 0 { 1 } else { -1 };
            sign * (1 - osc)
        }
        CoverCase::SameRows => {
            let tail: usize = (star + 1..=lambda_p.num_rows())
                .map(|k| lambda_p.part(k))
                .sum();
            let sign = if (star + tail) % 2 == 0 { 1 } else { -1 };
            let osc = if lambda_p.part(star) % 2 == 0 { 1 } else { -1 };
            sign * (1 - osc)
        }
    })
}

/// Transport of a component sign assignment across a cover, for `t` of the
/// given sign. Corners in the new-box column flip for positive `t` and hold
/// for negative `t`; corners elsewhere on the arch (except the diagonal box)
/// do the opposite; all other corners, including the diagonal box, hold.
pub fn eps_transport(
    eps: &SignAssignment,
    rd: &RegionData,
    mu: &ShiftedDiagram,
    branch: Sign,
) -> Result<SignAssignment> {
    let corners = mu.corners();
    let domain: Vec<Square> = eps.signs().iter().map(|(sq, _)| *sq).collect();
    if domain != corners {
        return Err(Error::Domain(
            "sign assignment domain does not match corners of μ".into(),
        ));
    }
    let diag = Square::new(rd.star, rd.star);
    let flip: Vec<Square> = match branch {
        Sign::Plus => corners
            .iter()
            .copied()
            .filter(|sq| rd.column.contains(sq))
            .collect(),
        Sign::Minus => corners
            .iter()
            .copied()
            .filter(|sq| rd.alpha.contains(sq) && !rd.column.contains(sq) && *sq != diag)
            .collect(),
    };
    Ok(eps.flipped_on(flip.iter()))
}

/// Degree of the attaching map between two mixed-type cells one dimension
/// apart. Always lands in `{-2, -1, 0, 1, 2}`.
pub fn degree_mixed(c: &Cell, cp: &Cell) -> Result<i64> {
    let (CellKind::Mixed { lambda, mu, eps }, CellKind::Mixed { lambda: lambda_p, mu: mu_p, eps: eps_p }) =
        (c.kind(), cp.kind())
    else {
        return Err(Error::Domain("degree_mixed needs two mixed cells".into()));
    };
    if c.ambient_n() != cp.ambient_n() {
        return Err(Error::Domain("degree needs equal ambient ranks".into()));
    }
    if cp.dim() != c.dim() + 1 {
        return Err(Error::Domain(format!(
            "degree is defined across a dimension gap of one, got {} and {}",
            c.dim(),
            cp.dim()
        )));
    }
    // Frontier condition: no incidence unless both diagrams are nested.
    if !lambda.le_unchecked(lambda_p) || !mu.le_unchecked(mu_p) {
        return Ok(0);
    }
    if mu == mu_p {
        // λ grows by one box.
        let rd = lambda.region_data(lambda_p)?;
        let t = jacobian_mixed(lambda, lambda_p, mu)?;
        let eps_plus = eps_transport(eps, &rd, mu, Sign::Plus)?;
        let eps_minus = eps_transport(eps, &rd, mu, Sign::Minus)?;
        let mut deg = 0;
        if eps_p == &eps_plus {
            deg += t.at_plus_one();
        }
        if eps_p == &eps_minus {
            deg -= t.at_minus_one();
        }
        Ok(deg)
    } else if lambda == lambda_p {
        // μ grows by one box: one real coordinate becomes complex.
        let star_mu = mu_p
            .squares()
            .into_iter()
            .find(|sq| !mu.contains(*sq))
            .expect("μ' strictly contains μ");
        let mu_corners = mu.corners();
        let shared_agree = mu_p
            .corners()
            .into_iter()
            .filter(|sq| mu_corners.contains(sq))
            .all(|sq| eps.sign_at(sq) == eps_p.sign_at(sq));
        if !shared_agree {
            return Ok(0);
        }
        // Orientation correction: the vanishing y-coordinate moves past one
        // x-coordinate for every real box (in λ but not μ') that succeeds
        // the added box; complex boxes contribute x,y pairs and cancel.
        let parity = lambda
            .squares()
            .into_iter()
            .filter(|sq| !mu_p.contains(*sq) && *sq > star_mu)
            .count();
        let reorder = if parity % 2 == 0 { 1 } else { -1 };
        let e = eps_p
            .sign_at(star_mu)
            .expect("the added box is a corner of μ'")
            .value();
        Ok(-reorder * e)
    } else {
        // Both diagrams growing is impossible across a gap of one.
        Ok(0)
    }
}

/// Attaching degree for any two cells of the same structure.
pub fn degree(c: &Cell, cp: &Cell) -> Result<i64> {
    if c.ambient_n() != cp.ambient_n() {
        return Err(Error::Domain("degree needs equal ambient ranks".into()));
    }
    match (c.kind(), cp.kind()) {
        (CellKind::Complex(_), CellKind::Complex(_)) => Ok(0),
        (CellKind::Real(l), CellKind::Real(lp)) => degree_real(l, lp),
        (CellKind::Mixed { .. }, CellKind::Mixed { .. }) => degree_mixed(c, cp),
        _ => Err(Error::Domain("degree needs cells of the same kind".into())),
    }
}
