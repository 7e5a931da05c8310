//! Smith normal form and integral homology.
//!
//! `H_d = ker ∂_d / im ∂_{d+1}` is read off the Smith normal forms of the
//! boundary matrices: the free rank is `#cells_d - rank ∂_d - rank ∂_{d+1}`
//! and the torsion coefficients are the invariant factors of `∂_{d+1}` that
//! exceed one. Mod-2 Betti numbers come from ranks over the two-element
//! field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::chain::ChainComplex;
use crate::{Error, Result};

/// Coefficient choice for homology.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Coefficients {
    Z,
    Z2,
}

/// Invariant factors (nonzero diagonal, each dividing the next) and rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SnfOutcome {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

/// Smith normal form of an integer matrix, pivoting on the entry of minimal
/// absolute value to bound coefficient growth.
pub fn smith_normal_form(m: &[Vec<BigInt>]) -> SnfOutcome {
    let nrows = m.len();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let steps = nrows.min(ncols);
    let mut factors = Vec::new();

    for k in 0..steps {
        // Pivot: minimal absolute value among nonzero entries of the
        // trailing submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for r in k..nrows {
            for c in k..ncols {
                if a[r][c].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((r, c)),
                    Some((pr, pc)) => {
                        if a[r][c].abs() < a[pr][pc].abs() {
                            pivot = Some((r, c));
                        }
                    }
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap(k, pr);
        for row in a.iter_mut() {
            row.swap(k, pc);
        }

        loop {
            // Clear column k with Euclidean steps.
            let mut clean = true;
            for r in k + 1..nrows {
                if a[r][k].is_zero() {
                    continue;
                }
                let q = round_div(&a[r][k], &a[k][k]);
                if !q.is_zero() {
                    for c in k..ncols {
                        let sub = &q * &a[k][c];
                        a[r][c] -= sub;
                    }
                }
                if !a[r][k].is_zero() {
                    // Remainder is strictly smaller: swap it into the pivot.
                    a.swap(k, r);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Clear row k.
            for c in k + 1..ncols {
                if a[k][c].is_zero() {
                    continue;
                }
                let q = round_div(&a[k][c], &a[k][k]);
                if !q.is_zero() {
                    for r in k..nrows {
                        let sub = &q * &a[r][k];
                        a[r][c] -= sub;
                    }
                }
                if !a[k][c].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(k, c);
                    }
                    clean = false;
                    break;
                }
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let mut fixed = true;
            'outer: for r in k + 1..nrows {
                for c in k + 1..ncols {
                    if !(&a[r][c] % &a[k][k]).is_zero() {
                        for cc in k..ncols {
                            let add = a[r][cc].clone();
                            a[k][cc] += add;
                        }
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if a[k][k].is_negative() {
            for c in k..ncols {
                a[k][c] = -a[k][c].clone();
            }
        }
        factors.push(a[k][k].clone());
    }

    let rank = factors.len();
    SnfOutcome { factors, rank }
}

/// Division rounded to the nearest integer, so remainders satisfy
/// `|r| <= |b| / 2`.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r = &r + &r;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Rank of an integer matrix over the two-element field.
fn rank_mod2(m: &[Vec<i64>]) -> usize {
    let nrows = m.len();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut rows: Vec<Vec<u8>> = m
        .iter()
        .map(|r| r.iter().map(|&v| (v.rem_euclid(2)) as u8).collect())
        .collect();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| rows[r][c] == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..nrows {
            if r != rank && rows[r][c] == 1 {
                for cc in c..ncols {
                    rows[r][cc] ^= rows[rank][cc];
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// One homology group: `Z^free_rank ⊕ Z/t_1 ⊕ Z/t_2 ⊕ ...`
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn trivial() -> Self {
        HomologyGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        for t in &self.torsion {
            parts.push(format!("Z_{}", t));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Homology groups of a chain complex, indexed by dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyResult {
    pub coefficients: Coefficients,
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn group(&self, d: usize) -> HomologyGroup {
        self.groups.get(d).cloned().unwrap_or_else(HomologyGroup::trivial)
    }

    /// Alternating sum of free ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(d, g)| {
                let r = g.free_rank as i64;
                if d % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }
}

fn to_bigint_rows(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Homology of a verified chain complex. Errors with an integrity failure if
/// `∂ ∘ ∂ ≠ 0`.
pub fn homology(cc: &ChainComplex, coefficients: Coefficients) -> Result<HomologyResult> {
    let report = cc.verify_ddzero();
    if !report.is_ok() {
        return Err(Error::Integrity(format!(
            "∂∘∂ ≠ 0 at {} entries, first at dimension {}",
            report.violations.len(),
            report.violations[0].0
        )));
    }
    let max_dim = cc.max_dim();
    let dense: Vec<Vec<Vec<i64>>> =
        (0..=max_dim).map(|d| cc.boundary(d).to_dense()).collect();
    // One normal form per dimension, independent of the others.
    let snfs: Vec<SnfOutcome> = dense
        .par_iter()
        .enumerate()
        .map(|(d, m)| {
            if d == 0 {
                return SnfOutcome { factors: Vec::new(), rank: 0 };
            }
            match coefficients {
                Coefficients::Z => smith_normal_form(&to_bigint_rows(m)),
                Coefficients::Z2 => SnfOutcome { factors: Vec::new(), rank: rank_mod2(m) },
            }
        })
        .collect();
    let mut groups = Vec::with_capacity(max_dim + 1);
    for d in 0..=max_dim {
        let n_d = cc.cells_in_dim(d).len();
        let rank_d = snfs[d].rank;
        let up = snfs.get(d + 1);
        let rank_up = up.map(|s| s.rank).unwrap_or(0);
        let free_rank = n_d - rank_d - rank_up;
        let torsion: Vec<u64> = match coefficients {
            Coefficients::Z2 => Vec::new(),
            Coefficients::Z => up
                .map(|s| {
                    s.factors
                        .iter()
                        .filter(|f| **f > BigInt::from(1))
                        .map(|f| u64::try_from(f).expect("small torsion coefficient"))
                        .collect()
                })
                .unwrap_or_default(),
        };
        groups.push(HomologyGroup { free_rank, torsion });
    }
    Ok(HomologyResult { coefficients, groups })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::{Bounds, Space};
    use crate::chain::build;

    fn snf_i64(rows: &[&[i64]]) -> SnfOutcome {
        let m: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        smith_normal_form(&m)
    }

    fn factors(outcome: &SnfOutcome) -> Vec<i64> {
        outcome.factors.iter().map(|f| i64::try_from(f).unwrap()).collect()
    }

    #[test]
    fn snf_small_cases() {
        let s = snf_i64(&[&[2, 2]]);
        assert_eq!(factors(&s), vec![2]);
        assert_eq!(s.rank, 1);

        let s = snf_i64(&[&[-1], &[1]]);
        assert_eq!(factors(&s), vec![1]);
        assert_eq!(s.rank, 1);

        let s = snf_i64(&[&[-2, 2]]);
        assert_eq!(factors(&s), vec![2]);

        let s = snf_i64(&[&[0, 0], &[0, 0]]);
        assert_eq!(s.rank, 0);

        let s = snf_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        assert_eq!(factors(&s), vec![2, 2, 156]);
    }

    #[test]
    fn snf_factors_divide_in_order() {
        let s = snf_i64(&[&[6, 4], &[4, 6]]);
        let f = factors(&s);
        assert_eq!(f.len(), 2);
        assert_eq!(f[1] % f[0], 0);
        // Product of invariant factors is |det| for square full-rank input.
        assert_eq!(f.iter().product::<i64>(), 20);
    }

    #[test]
    fn complex_homology_rank_three() {
        let cc = build(3, Space::Complex, &Bounds::default()).unwrap();
        let h = homology(&cc, Coefficients::Z).unwrap();
        for d in [0, 2, 4, 8, 10, 12] {
            assert_eq!(h.group(d), HomologyGroup::free(1), "H_{}", d);
        }
        assert_eq!(h.group(6), HomologyGroup::free(2));
        for d in [1, 3, 5, 7, 9, 11] {
            assert!(h.group(d).is_trivial(), "H_{}", d);
        }
    }

    #[test]
    fn real_homology_rank_three() {
        let cc = build(3, Space::Real, &Bounds::default()).unwrap();
        let h = homology(&cc, Coefficients::Z).unwrap();
        for d in [0, 1, 5, 6] {
            assert_eq!(h.group(d), HomologyGroup::free(1), "H_{}", d);
        }
        for d in [2, 3] {
            assert_eq!(
                h.group(d),
                HomologyGroup { free_rank: 0, torsion: vec![2] },
                "H_{}",
                d
            );
        }
        assert!(h.group(4).is_trivial());
    }

    #[test]
    fn real_homology_rank_two() {
        let cc = build(2, Space::Real, &Bounds::default()).unwrap();
        let h = homology(&cc, Coefficients::Z).unwrap();
        assert_eq!(h.group(0), HomologyGroup::free(1));
        assert_eq!(h.group(1), HomologyGroup::free(1));
        assert_eq!(h.group(2), HomologyGroup { free_rank: 0, torsion: vec![2] });
        assert!(h.group(3).is_trivial());
    }

    #[test]
    fn mixed_rank_one_is_a_sphere() {
        let cc = build(1, Space::Mixed, &Bounds::default()).unwrap();
        let h = homology(&cc, Coefficients::Z).unwrap();
        assert_eq!(h.group(0), HomologyGroup::free(1));
        assert!(h.group(1).is_trivial());
        assert_eq!(h.group(2), HomologyGroup::free(1));
    }

    #[test]
    fn homology_rejects_broken_complex() {
        use crate::chain::SparseIntMatrix;
        let cc = build(3, Space::Real, &Bounds::default()).unwrap();
        // Flip one entry of ∂4 so that ∂3 ∘ ∂4 ≠ 0.
        let d4 = cc.boundary(4);
        let entries: Vec<(usize, usize, i64)> = d4
            .entries()
            .iter()
            .enumerate()
            .map(|(i, &(r, c, v))| (r, c, if i == 0 { -v } else { v }))
            .collect();
        let mut boundaries: Vec<SparseIntMatrix> =
            (0..=cc.max_dim()).map(|d| cc.boundary(d).clone()).collect();
        boundaries[4] = SparseIntMatrix::from_entries(d4.nrows(), d4.ncols(), entries);
        let cells_by_dim: Vec<Vec<crate::cells::Cell>> =
            (0..=cc.max_dim()).map(|d| cc.cells_in_dim(d).to_vec()).collect();
        let broken =
            ChainComplex::from_parts(cc.n(), cc.space(), cells_by_dim, boundaries).unwrap();
        assert!(matches!(
            homology(&broken, Coefficients::Z),
            Err(crate::Error::Integrity(_))
        ));
    }

    #[test]
    fn z2_betti_numbers_real_rank_three() {
        let cc = build(3, Space::Real, &Bounds::default()).unwrap();
        let h2 = homology(&cc, Coefficients::Z2).unwrap();
        // Universal coefficients: b2_d = free_d + t2(d) + t2(d-1).
        let hz = homology(&cc, Coefficients::Z).unwrap();
        for d in 0..=6 {
            let t2 = |d: i64| -> usize {
                if d < 0 {
                    return 0;
                }
                hz.group(d as usize).torsion.iter().filter(|&&t| t == 2).count()
            };
            let expected = hz.group(d).free_rank + t2(d as i64) + t2(d as i64 - 1);
            assert_eq!(h2.group(d).free_rank, expected, "b2 in degree {}", d);
        }
    }
}
