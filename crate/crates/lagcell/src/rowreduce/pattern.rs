//! Echelon patterns of Schubert cells.
//!
//! Fix the Darboux basis `e_1..e_n, f_1..f_n` and write row vectors in the
//! column order `q_1..q_n, p_n..p_1`. For a subset `J ⊆ {1,..,n}` with
//! complement `I`, the echelon form of a cell member has its `k`-th pivot at
//! the `k`-th element of `e_{i_1}, .., e_{i_|I|}, f_{j_|J|}, .., f_{j_1}`
//! (pivots are the trailing nonzero entry of each row). The isotropy
//! relations force the `e`-rows to mirror `p`-entries of the `f`-rows with a
//! sign, and the `q`-block to be symmetric; what remains is one independent
//! complex parameter per box of the diagram of `J`.

use std::collections::{BTreeMap, BTreeSet};

use crate::diagrams::{ShiftedDiagram, Square};
use crate::{Error, Result};

use super::matrix::GMatrix;
use super::scalar::GaussianRational;

/// What one matrix entry is, in terms of the diagram parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Slot {
    Pivot,
    ForcedZero,
    /// The defining occurrence of the parameter of `square`.
    Independent { square: Square },
    /// Determined by the parameter of `source` (negated for the mirrored
    /// `e`-row entries, plain for the symmetric `q`-entries).
    Dependent { source: Square, negate: bool },
}

/// The full slot table of the echelon form attached to a subset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RrefPattern {
    n: usize,
    subset: BTreeSet<usize>,
    lambda: ShiftedDiagram,
    pivot_cols: Vec<usize>,
    slots: Vec<Vec<Slot>>,
}

impl RrefPattern {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subset(&self) -> &BTreeSet<usize> {
        &self.subset
    }

    pub fn lambda(&self) -> &ShiftedDiagram {
        &self.lambda
    }

    /// Zero-based pivot column of each row, strictly increasing.
    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    pub fn slot(&self, row: usize, col: usize) -> Slot {
        self.slots[row][col]
    }

    /// Human-readable name of a zero-based column: `e3` or `f2`.
    pub fn col_label(&self, col: usize) -> String {
        if col < self.n {
            format!("e{}", col + 1)
        } else {
            format!("f{}", 2 * self.n - col)
        }
    }
}

/// Builds the slot table for `J ⊆ {1,..,n}`.
pub fn pattern(subset: &BTreeSet<usize>, n: usize) -> Result<RrefPattern> {
    let lambda = ShiftedDiagram::from_subset(subset, n)?;
    let j: Vec<usize> = subset.iter().copied().collect();
    let i: Vec<usize> = (1..=n).filter(|x| !subset.contains(x)).collect();
    let num_i = i.len();

    let mut slots = vec![vec![Slot::ForcedZero; 2 * n]; n];
    let mut pivot_cols = Vec::with_capacity(n);

    // e-rows: pivot at e_{i_a}; entries at e_{j_b} left of the pivot mirror
    // the p-entries of the f-rows with a sign flip.
    for a in 1..=num_i {
        let row = a - 1;
        let pivot = i[a - 1] - 1;
        slots[row][pivot] = Slot::Pivot;
        pivot_cols.push(pivot);
        for (b, &jb) in j.iter().enumerate() {
            if jb < i[a - 1] {
                slots[row][jb - 1] = Slot::Dependent {
                    source: Square::new(b + 1, n + 1 - a),
                    negate: true,
                };
            }
        }
    }

    // f-rows, stored bottom-up: row |I| + k holds the vector with pivot
    // f_{j_{|J| - k}}.
    for r in (num_i + 1)..=n {
        let row = r - 1;
        let b = n + 1 - r;
        let jb = j[b - 1];
        let pivot = 2 * n - jb;
        slots[row][pivot] = Slot::Pivot;
        pivot_cols.push(pivot);
        // q-entries: symmetric across the diagonal of the q-block.
        for (c0, &jc) in j.iter().enumerate() {
            let c = c0 + 1;
            let square = Square::new(b.min(c), b.max(c));
            slots[row][jc - 1] = if c >= b {
                Slot::Independent { square }
            } else {
                Slot::Dependent { source: square, negate: false }
            };
        }
        // p-entries at f_{i_a} for i_a > j_b.
        for (a0, &ia) in i.iter().enumerate() {
            let a = a0 + 1;
            if ia > jb {
                slots[row][2 * n - ia] = Slot::Independent {
                    square: Square::new(b, n + 1 - a),
                };
            }
        }
    }

    // Each diagram box owns exactly one independent slot.
    let mut seen = BTreeSet::new();
    for row in &slots {
        for slot in row {
            if let Slot::Independent { square } = slot {
                assert!(seen.insert(*square), "duplicate independent slot");
                assert!(lambda.contains(*square), "independent slot outside diagram");
            }
        }
    }
    assert_eq!(seen.len(), lambda.size(), "independent slot count");

    Ok(RrefPattern { n, subset: subset.clone(), lambda, pivot_cols, slots })
}

/// Fills the pattern with parameter values; errors on a missing box value.
pub fn materialize(
    p: &RrefPattern,
    values: &BTreeMap<Square, GaussianRational>,
) -> Result<GMatrix> {
    let lookup = |sq: Square| -> Result<GaussianRational> {
        values
            .get(&sq)
            .cloned()
            .ok_or_else(|| Error::Domain(format!("missing value for box {}", sq)))
    };
    let mut m = vec![vec![GaussianRational::zero(); 2 * p.n]; p.n];
    for (r, row) in p.slots.iter().enumerate() {
        for (c, slot) in row.iter().enumerate() {
            m[r][c] = match slot {
                Slot::ForcedZero => GaussianRational::zero(),
                Slot::Pivot => GaussianRational::one(),
                Slot::Independent { square } => lookup(*square)?,
                Slot::Dependent { source, negate } => {
                    let v = lookup(*source)?;
                    if *negate {
                        v.neg()
                    } else {
                        v
                    }
                }
            };
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rowreduce::matrix::is_lagrangian;
    use crate::rowreduce::sampling::random_rational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn subset(elems: &[usize]) -> BTreeSet<usize> {
        elems.iter().copied().collect()
    }

    #[test]
    fn pivots_and_dependencies_for_worked_subset() {
        let p = pattern(&subset(&[1, 3, 4]), 5).unwrap();
        // Pivots at e2, e5, f4, f3, f1.
        let labels: Vec<String> =
            p.pivot_cols().iter().map(|&c| p.col_label(c)).collect();
        assert_eq!(labels, vec!["e2", "e5", "f4", "f3", "f1"]);

        // r11 = -p12, r21 = -p15, r23 = -p25, r24 = -p35 as slot links.
        assert_eq!(
            p.slot(0, 0),
            Slot::Dependent { source: Square::new(1, 5), negate: true }
        );
        assert_eq!(
            p.slot(1, 0),
            Slot::Dependent { source: Square::new(1, 4), negate: true }
        );
        assert_eq!(
            p.slot(1, 2),
            Slot::Dependent { source: Square::new(2, 4), negate: true }
        );
        assert_eq!(
            p.slot(1, 3),
            Slot::Dependent { source: Square::new(3, 4), negate: true }
        );

        // q31 = q14, q33 = q24, q21 = q13 become symmetric q-slots.
        assert_eq!(
            p.slot(2, 0),
            Slot::Dependent { source: Square::new(1, 3), negate: false }
        );
        assert_eq!(
            p.slot(2, 2),
            Slot::Dependent { source: Square::new(2, 3), negate: false }
        );
        assert_eq!(
            p.slot(3, 2),
            Slot::Independent { square: Square::new(2, 2) }
        );
        assert_eq!(
            p.slot(4, 0),
            Slot::Independent { square: Square::new(1, 1) }
        );
    }

    #[test]
    fn empty_subset_gives_identity_block() {
        let p = pattern(&subset(&[]), 3).unwrap();
        for r in 0..3 {
            for c in 0..6 {
                let expected = if c == r { Slot::Pivot } else { Slot::ForcedZero };
                assert_eq!(p.slot(r, c), expected);
            }
        }
    }

    #[test]
    fn full_subset_has_all_parameters() {
        let p = pattern(&subset(&[1, 2, 3]), 3).unwrap();
        assert_eq!(p.lambda().parts(), &[3, 2, 1]);
        let mut independents = 0;
        for r in 0..3 {
            for c in 0..6 {
                if matches!(p.slot(r, c), Slot::Independent { .. }) {
                    independents += 1;
                }
            }
        }
        assert_eq!(independents, 6);
    }

    #[test]
    fn zero_values_materialize_to_pivot_basis() {
        let p = pattern(&subset(&[1, 3]), 4).unwrap();
        let values: BTreeMap<Square, GaussianRational> = p
            .lambda()
            .squares()
            .into_iter()
            .map(|sq| (sq, GaussianRational::zero()))
            .collect();
        let m = materialize(&p, &values).unwrap();
        for (r, &pc) in p.pivot_cols().iter().enumerate() {
            for c in 0..8 {
                let expected = if c == pc {
                    GaussianRational::one()
                } else {
                    GaussianRational::zero()
                };
                assert_eq!(m[r][c], expected);
            }
        }
        assert!(is_lagrangian(&m).unwrap());
    }

    #[test]
    fn two_by_four_symmetric_block() {
        // J = {1,2}, n = 2: the q-block is [[b, c], [a, b]] for z11=a, z12=b, z22=c.
        let p = pattern(&subset(&[1, 2]), 2).unwrap();
        let a = GaussianRational::from_int(3);
        let b = GaussianRational::from_int(5);
        let c = GaussianRational::from_int(7);
        let values: BTreeMap<Square, GaussianRational> = [
            (Square::new(1, 1), a.clone()),
            (Square::new(1, 2), b.clone()),
            (Square::new(2, 2), c.clone()),
        ]
        .into_iter()
        .collect();
        let m = materialize(&p, &values).unwrap();
        assert_eq!(m[0][0], b);
        assert_eq!(m[0][1], c);
        assert_eq!(m[1][0], a);
        assert_eq!(m[1][1], b);
        assert_eq!(m[0][2], GaussianRational::one());
        assert_eq!(m[1][3], GaussianRational::one());
        assert!(is_lagrangian(&m).unwrap());
    }

    #[test]
    fn missing_value_is_rejected() {
        let p = pattern(&subset(&[1, 2]), 2).unwrap();
        let values = BTreeMap::new();
        assert!(materialize(&p, &values).is_err());
    }

    #[test]
    fn random_parameters_are_lagrangian_for_all_subsets() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=5 {
            for mask in 0u32..(1 << n) {
                let j: BTreeSet<usize> =
                    (1..=n).filter(|b| mask & (1 << (b - 1)) != 0).collect();
                let p = pattern(&j, n).unwrap();
                let values: BTreeMap<Square, GaussianRational> = p
                    .lambda()
                    .squares()
                    .into_iter()
                    .map(|sq| {
                        (
                            sq,
                            GaussianRational {
                                re: random_rational(&mut rng),
                                im: random_rational(&mut rng),
                            },
                        )
                    })
                    .collect();
                let m = materialize(&p, &values).unwrap();
                assert!(is_lagrangian(&m).unwrap(), "J = {:?}, n = {}", j, n);
            }
        }
    }
}
