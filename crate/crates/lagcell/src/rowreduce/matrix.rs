//! Exact dense linear algebra over Gaussian rationals: trailing-pivot
//! echelon reduction, the Lagrangian test, cell identification, and
//! fraction-free determinants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::diagrams::Square;
use crate::{Error, Result};

use super::pattern::{pattern, RrefPattern, Slot};
use super::scalar::{GaussianRational, Rational};

/// Dense matrix over the Gaussian rationals, row major.
pub type GMatrix = Vec<Vec<GaussianRational>>;

/// Reduces `m` to the unique echelon form in which the pivot of each row is
/// its trailing nonzero entry, pivots are 1, pivot columns are otherwise
/// zero, and pivot columns increase down the rows. Zero rows are dropped.
///
/// This is ordinary reduced row echelon form computed against the reversed
/// column order, which is the normal form Schubert cells are defined by.
pub fn rref_trailing(m: &mut GMatrix) {
    if m.is_empty() {
        return;
    }
    let ncols = m[0].len();
    for row in m.iter_mut() {
        row.reverse();
    }
    // Standard RREF on the reversed matrix.
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(r) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = m[pivot_row][col].inv();
        for c in col..ncols {
            m[pivot_row][c] = m[pivot_row][c].mul(&inv);
        }
        for r in 0..m.len() {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..ncols {
                    let delta = factor.mul(&m[pivot_row][c]);
                    m[r][c] = m[r][c].sub(&delta);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    m.truncate(pivot_row);
    for row in m.iter_mut() {
        row.reverse();
    }
    // Reversing columns reverses the pivot order across rows.
    m.reverse();
}

/// Row rank by exact elimination.
pub fn rank(m: &GMatrix) -> usize {
    let mut work = m.to_vec();
    rref_trailing(&mut work);
    work.len()
}

/// Symplectic pairing of two row vectors in the column order
/// `q_1..q_n, p_n..p_1`.
fn omega(a: &[GaussianRational], b: &[GaussianRational]) -> GaussianRational {
    let n = a.len() / 2;
    let mut acc = GaussianRational::zero();
    for j in 0..n {
        // Column j is q_{j+1}; column 2n - 1 - j is p_{j+1}.
        let pj = 2 * n - 1 - j;
        acc = acc.add(&a[j].mul(&b[pj]).sub(&a[pj].mul(&b[j])));
    }
    acc
}

/// Whether the row space of a full-rank `n x 2n` matrix is complex
/// Lagrangian: the bilinear extension of the symplectic form vanishes on all
/// row pairs. Errors if the matrix is rank deficient or misshapen.
pub fn is_lagrangian(m: &GMatrix) -> Result<bool> {
    let nrows = m.len();
    if nrows == 0 || m[0].len() != 2 * nrows {
        return Err(Error::Domain(format!(
            "expected an n x 2n matrix, got {} x {}",
            nrows,
            m.first().map(|r| r.len()).unwrap_or(0)
        )));
    }
    if rank(m) != nrows {
        return Err(Error::Domain("matrix is rank deficient".into()));
    }
    for a in 0..nrows {
        for b in (a + 1)..nrows {
            if !omega(&m[a], &m[b]).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Identifies the Schubert cell of a full-rank `n x 2n` Lagrangian matrix:
/// reduces it to echelon form, reads the pivot pattern to recover the subset
/// `J`, and extracts the diagram parameters. The dependent entries are
/// checked against the isotropy relations on the way out.
pub fn identify(
    m: &GMatrix,
) -> Result<(RrefPattern, BTreeMap<Square, GaussianRational>)> {
    let nrows = m.len();
    if nrows == 0 || m[0].len() != 2 * nrows {
        return Err(Error::Domain("expected an n x 2n matrix".into()));
    }
    let n = nrows;
    let mut work = m.to_vec();
    rref_trailing(&mut work);
    if work.len() != n {
        return Err(Error::Domain("matrix is rank deficient".into()));
    }
    let mut subset = std::collections::BTreeSet::new();
    let mut pivot_cols = Vec::with_capacity(n);
    for row in &work {
        let pc = (0..2 * n)
            .rev()
            .find(|&c| !row[c].is_zero())
            .expect("nonzero row");
        pivot_cols.push(pc);
        if pc >= n {
            subset.insert(2 * n - pc);
        }
    }
    let p = pattern(&subset, n)?;
    if p.pivot_cols() != pivot_cols.as_slice() {
        return Err(Error::Integrity(
            "pivot layout does not match any Lagrangian cell pattern".into(),
        ));
    }
    let mut values = BTreeMap::new();
    for r in 0..n {
        for c in 0..2 * n {
            if let Slot::Independent { square } = p.slot(r, c) {
                values.insert(square, work[r][c].clone());
            }
        }
    }
    for r in 0..n {
        for c in 0..2 * n {
            let expected = match p.slot(r, c) {
                Slot::Pivot => GaussianRational::one(),
                Slot::ForcedZero => GaussianRational::zero(),
                Slot::Independent { square } => values[&square].clone(),
                Slot::Dependent { source, negate } => {
                    let v = values[&source].clone();
                    if negate {
                        v.neg()
                    } else {
                        v
                    }
                }
            };
            if work[r][c] != expected {
                return Err(Error::Integrity(format!(
                    "entry ({}, {}) violates the isotropy pattern",
                    r, c
                )));
            }
        }
    }
    Ok((p, values))
}

/// Determinant of the integer matrix by fraction-free Bareiss elimination.
fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = ((k + 1)..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Determinant of a square rational matrix: rows are cleared to integers and
/// the integer part runs through Bareiss elimination.
pub fn det_rational(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "determinant needs a square matrix");
    let mut scale = BigInt::one();
    let int_rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    Rational::new(det_bareiss(int_rows), scale)
}
