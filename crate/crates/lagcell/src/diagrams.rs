//! Shifted Young diagrams and the combinatorics of their covers.
//!
//! A shifted Young diagram with ambient rank `n` is a strictly decreasing
//! sequence of row lengths, row `k` occupying columns `k ..= k + len - 1`,
//! with the first row no longer than `n`. Diagrams index Schubert cells via
//! the subset correspondence `J ⊆ {1,..,n}  ↔  parts {n - j + 1 : j ∈ J}`.
//!
//! A cover `λ ⋖ λ'` adds one box, either as a new length-1 bottom row
//! ([`CoverCase::NewRow`]) or by extending one existing row
//! ([`CoverCase::SameRows`]). The regions attached to a cover (the arch
//! `alpha`, the column under the new box, and the roof of rows below the
//! starred row) drive every degree formula in [`crate::incidence`].

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// One box of a diagram, `1`-based, with `row <= col`.
///
/// Boxes are ordered lexicographically by `(row, col)`; that order fixes the
/// variable ordering of every Jacobian in this crate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Square {
    pub row: usize,
    pub col: usize,
}

impl Square {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= row, "square must satisfy 1 <= row <= col");
        Square { row, col }
    }

    /// Diagonal boxes `(k, k)` are the left ends of their rows.
    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A shifted Young diagram inside ambient rank `n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ShiftedDiagram {
    ambient_n: usize,
    parts: Vec<usize>,
}

/// Whether a cover adds a new row or extends an existing one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoverCase {
    NewRow,
    SameRows,
}

/// The box regions of a cover `λ ⋖ λ'`.
///
/// `star` is the row of the added box. For a [`CoverCase::SameRows`] cover,
/// `alpha` is the arch through the starred row, `column` the boxes above (and
/// including) the new box, and `roof` the boxes of `λ` strictly below the
/// starred row. For [`CoverCase::NewRow`], `alpha` and `roof` are empty and
/// `column` is the full column of the new box.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegionData {
    pub star: usize,
    pub case: CoverCase,
    pub new_square: Square,
    pub alpha: BTreeSet<Square>,
    pub column: BTreeSet<Square>,
    pub roof: BTreeSet<Square>,
}

impl ShiftedDiagram {
    /// Builds a diagram after validating strict decrease and the rank bound.
    pub fn new(ambient_n: usize, parts: Vec<usize>) -> Result<Self> {
        if ambient_n < 1 {
            return Err(Error::Domain("ambient rank must be at least 1".into()));
        }
        for w in parts.windows(2) {
            if w[0] <= w[1] {
                return Err(Error::Domain(format!(
                    "row lengths must strictly decrease, got {:?}",
                    parts
                )));
            }
        }
        if let Some(&first) = parts.first() {
            if first > ambient_n {
                return Err(Error::Domain(format!(
                    "first row length {} exceeds ambient rank {}",
                    first, ambient_n
                )));
            }
        }
        if parts.last() == Some(&0) {
            return Err(Error::Domain("row lengths must be positive".into()));
        }
        Ok(ShiftedDiagram { ambient_n, parts })
    }

    /// The empty diagram at the given rank.
    pub fn empty(ambient_n: usize) -> Self {
        assert!(ambient_n >= 1, "ambient rank must be at least 1");
        ShiftedDiagram { ambient_n, parts: Vec::new() }
    }

    /// The diagram of the subset `J ⊆ {1,..,n}`: row lengths `n - j + 1`.
    pub fn from_subset(subset: &BTreeSet<usize>, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("ambient rank must be at least 1".into()));
        }
        for &j in subset {
            if j < 1 || j > n {
                return Err(Error::Domain(format!(
                    "subset element {} outside 1..={}",
                    j, n
                )));
            }
        }
        // Ascending j gives descending n - j + 1 directly.
        let parts: Vec<usize> = subset.iter().map(|&j| n - j + 1).collect();
        ShiftedDiagram::new(n, parts)
    }

    /// The subset this diagram corresponds to; inverse of [`Self::from_subset`].
    pub fn subset(&self) -> BTreeSet<usize> {
        self.parts.iter().map(|&p| self.ambient_n - p + 1).collect()
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of the `1`-based `row`, or 0 if the row does not exist.
    pub fn part(&self, row: usize) -> usize {
        if row >= 1 && row <= self.parts.len() {
            self.parts[row - 1]
        } else {
            0
        }
    }

    /// Last column of the `1`-based `row`; rows start at their diagonal column.
    pub fn row_end_col(&self, row: usize) -> usize {
        self.part(row) + row - 1
    }

    pub fn contains(&self, sq: Square) -> bool {
        sq.row >= 1
            && sq.row <= self.parts.len()
            && sq.col >= sq.row
            && sq.col <= self.row_end_col(sq.row)
    }

    /// All boxes in lexicographic `(row, col)` order.
    pub fn squares(&self) -> Vec<Square> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &len) in self.parts.iter().enumerate() {
            let row = i + 1;
            for col in row..row + len {
                out.push(Square { row, col });
            }
        }
        out
    }

    /// Containment of diagrams at the same ambient rank.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        if self.ambient_n != other.ambient_n {
            return Err(Error::Domain(format!(
                "cannot compare diagrams of ambient ranks {} and {}",
                self.ambient_n, other.ambient_n
            )));
        }
        Ok(self.le_unchecked(other))
    }

    pub(crate) fn le_unchecked(&self, other: &Self) -> bool {
        self.parts.len() <= other.parts.len()
            && self
                .parts
                .iter()
                .zip(other.parts.iter())
                .all(|(a, b)| a <= b)
    }

    /// Removable boxes: row ends whose removal leaves a valid diagram.
    pub fn corners(&self) -> Vec<Square> {
        let mut out = Vec::new();
        for (i, &len) in self.parts.iter().enumerate() {
            let row = i + 1;
            let next = self.part(row + 1);
            let removable = if row == self.parts.len() {
                true
            } else {
                len - 1 > next
            };
            if removable {
                out.push(Square { row, col: len + row - 1 });
            }
        }
        out
    }

    /// Boxes that are not corners (the interior of the diagram).
    pub fn interior(&self) -> BTreeSet<Square> {
        let corners: BTreeSet<Square> = self.corners().into_iter().collect();
        self.squares()
            .into_iter()
            .filter(|sq| !corners.contains(sq))
            .collect()
    }

    /// The diagram with one corner removed. Errors if `sq` is not removable.
    pub fn remove_corner(&self, sq: Square) -> Result<Self> {
        if !self.corners().contains(&sq) {
            return Err(Error::Domain(format!("{} is not a removable box", sq)));
        }
        let mut parts = self.parts.clone();
        parts[sq.row - 1] -= 1;
        if parts[sq.row - 1] == 0 {
            parts.pop();
        }
        ShiftedDiagram::new(self.ambient_n, parts)
    }

    /// All diagrams covering `self`, each with its region data.
    pub fn covers_above(&self) -> Vec<(ShiftedDiagram, RegionData)> {
        let mut out = Vec::new();
        // Grow one existing row.
        for star in 1..=self.parts.len() {
            let mut parts = self.parts.clone();
            parts[star - 1] += 1;
            if ShiftedDiagram::new(self.ambient_n, parts.clone()).is_err() {
                continue;
            }
            let upper = ShiftedDiagram { ambient_n: self.ambient_n, parts };
            let rd = self.region_data(&upper).expect("constructed cover");
            out.push((upper, rd));
        }
        // Append a new bottom row of length 1.
        let can_new_row = match self.parts.last() {
            None => true,
            Some(&last) => last > 1,
        };
        if can_new_row {
            let mut parts = self.parts.clone();
            parts.push(1);
            if let Ok(upper) = ShiftedDiagram::new(self.ambient_n, parts) {
                let rd = self.region_data(&upper).expect("constructed cover");
                out.push((upper, rd));
            }
        }
        out.sort_by(|a, b| a.0.parts.cmp(&b.0.parts));
        out
    }

    /// Region data for the cover `self ⋖ upper`; errors if not a cover.
    pub fn region_data(&self, upper: &Self) -> Result<RegionData> {
        if self.ambient_n != upper.ambient_n {
            return Err(Error::Domain("region data needs equal ambient ranks".into()));
        }
        if !self.le_unchecked(upper) || self.size() + 1 != upper.size() {
            return Err(Error::Domain(format!(
                "{} is not covered by {}",
                self, upper
            )));
        }
        if upper.parts.len() > self.parts.len() {
            // New bottom row of length 1.
            let star = upper.parts.len();
            let new_square = Square { row: star, col: star };
            let column: BTreeSet<Square> =
                (1..=star).map(|k| Square { row: k, col: star }).collect();
            Ok(RegionData {
                star,
                case: CoverCase::NewRow,
                new_square,
                alpha: BTreeSet::new(),
                column,
                roof: BTreeSet::new(),
            })
        } else {
            let star = (1..=self.parts.len())
                .find(|&k| self.part(k) != upper.part(k))
                .expect("cover differs in exactly one row");
            let new_col = upper.row_end_col(star);
            let new_square = Square { row: star, col: new_col };
            let column: BTreeSet<Square> =
                (1..=star).map(|k| Square { row: k, col: new_col }).collect();
            let mut alpha = BTreeSet::new();
            for k in 1..=star {
                alpha.insert(Square { row: k, col: star });
                alpha.insert(Square { row: k, col: new_col });
            }
            for col in star..=new_col {
                alpha.insert(Square { row: star, col });
            }
            let roof: BTreeSet<Square> = self
                .squares()
                .into_iter()
                .filter(|sq| sq.row > star)
                .collect();
            Ok(RegionData {
                star,
                case: CoverCase::SameRows,
                new_square,
                alpha,
                column,
                roof,
            })
        }
    }

    /// The same diagram reinterpreted at ambient rank `n + m`.
    pub fn stabilized(&self, m: usize) -> Self {
        ShiftedDiagram {
            ambient_n: self.ambient_n + m,
            parts: self.parts.clone(),
        }
    }

    /// All `2^n` diagrams at rank `n`, one per subset, in no particular order.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        if n < 1 {
            return Err(Error::Domain("ambient rank must be at least 1".into()));
        }
        if n > 20 {
            return Err(Error::Resource(format!("rank {} enumeration too large", n)));
        }
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u32..(1 << n) {
            let subset: BTreeSet<usize> =
                (1..=n).filter(|j| mask & (1 << (j - 1)) != 0).collect();
            out.push(ShiftedDiagram::from_subset(&subset, n)?);
        }
        Ok(out)
    }

    /// All diagrams contained in `self` (including `self` and the empty one).
    pub fn sub_diagrams(&self) -> Vec<Self> {
        ShiftedDiagram::all(self.ambient_n)
            .expect("valid rank")
            .into_iter()
            .filter(|mu| mu.le_unchecked(self))
            .collect()
    }
}

impl fmt::Display for ShiftedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "φ");
        }
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(n: usize, parts: &[usize]) -> ShiftedDiagram {
        ShiftedDiagram::new(n, parts.to_vec()).unwrap()
    }

    fn subset(elems: &[usize]) -> BTreeSet<usize> {
        elems.iter().copied().collect()
    }

    #[test]
    fn subset_correspondence_table_rows() {
        let d = ShiftedDiagram::from_subset(&subset(&[1, 2, 3]), 3).unwrap();
        assert_eq!(d.parts(), &[3, 2, 1]);
        let d = ShiftedDiagram::from_subset(&subset(&[]), 3).unwrap();
        assert!(d.is_empty());
        let d = ShiftedDiagram::from_subset(&subset(&[1, 3]), 3).unwrap();
        assert_eq!(d.parts(), &[3, 1]);
    }

    #[test]
    fn subset_rejects_out_of_range() {
        assert!(ShiftedDiagram::from_subset(&subset(&[4]), 3).is_err());
        assert!(ShiftedDiagram::from_subset(&subset(&[0]), 3).is_err());
    }

    #[test]
    fn subset_round_trip_all_ranks() {
        for n in 1..=10 {
            for mask in 0u32..(1 << n) {
                let j: BTreeSet<usize> =
                    (1..=n).filter(|b| mask & (1 << (b - 1)) != 0).collect();
                let d = ShiftedDiagram::from_subset(&j, n).unwrap();
                assert_eq!(d.subset(), j);
            }
        }
    }

    #[test]
    fn containment_examples() {
        let n = 3;
        assert!(diagram(n, &[2, 1]).leq(&diagram(n, &[3, 1])).unwrap());
        assert!(!diagram(n, &[3, 1]).leq(&diagram(n, &[2, 1])).unwrap());
        for d in ShiftedDiagram::all(n).unwrap() {
            assert!(ShiftedDiagram::empty(n).leq(&d).unwrap());
        }
        assert!(diagram(3, &[2]).leq(&diagram(4, &[2])).is_err());
    }

    #[test]
    fn leq_is_partial_order() {
        let all = ShiftedDiagram::all(5).unwrap();
        for a in &all {
            assert!(a.le_unchecked(a));
            for b in &all {
                if a.le_unchecked(b) && b.le_unchecked(a) {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if a.le_unchecked(b) && b.le_unchecked(c) {
                        assert!(a.le_unchecked(c));
                    }
                }
            }
        }
    }

    #[test]
    fn corners_examples() {
        assert_eq!(
            diagram(4, &[4, 2]).corners(),
            vec![Square::new(1, 4), Square::new(2, 3)]
        );
        assert_eq!(diagram(3, &[2, 1]).corners(), vec![Square::new(2, 2)]);
        assert_eq!(diagram(3, &[1]).corners(), vec![Square::new(1, 1)]);
        assert!(ShiftedDiagram::empty(3).corners().is_empty());
    }

    #[test]
    fn corners_match_brute_force_removals() {
        for n in 1..=6 {
            for mu in ShiftedDiagram::all(n).unwrap() {
                let brute: Vec<Square> = mu
                    .squares()
                    .into_iter()
                    .filter(|&sq| {
                        // Remove the box at the end of its row (if it is one)
                        // and check validity by reconstructing.
                        if sq.col != mu.row_end_col(sq.row) {
                            return false;
                        }
                        let mut parts = mu.parts().to_vec();
                        parts[sq.row - 1] -= 1;
                        if parts[sq.row - 1] == 0 {
                            if sq.row != parts.len() {
                                return false;
                            }
                            parts.pop();
                        }
                        ShiftedDiagram::new(n, parts).is_ok()
                    })
                    .collect();
                assert_eq!(mu.corners(), brute, "corners of {}", mu);
            }
        }
    }

    #[test]
    fn corners_are_intersection_complement() {
        // The interior equals the intersection of all one-box-smaller subdiagrams.
        for n in 1..=5 {
            for mu in ShiftedDiagram::all(n).unwrap() {
                if mu.is_empty() {
                    continue;
                }
                let smaller: Vec<ShiftedDiagram> = mu
                    .sub_diagrams()
                    .into_iter()
                    .filter(|m| m.size() + 1 == mu.size())
                    .collect();
                let mut meet: BTreeSet<Square> = mu.squares().into_iter().collect();
                for m in &smaller {
                    let boxes: BTreeSet<Square> = m.squares().into_iter().collect();
                    meet = meet.intersection(&boxes).copied().collect();
                }
                assert_eq!(meet, mu.interior(), "interior of {}", mu);
            }
        }
    }

    #[test]
    fn covers_examples() {
        let covers = diagram(3, &[2]).covers_above();
        assert_eq!(covers.len(), 2);
        assert_eq!(covers[0].0.parts(), &[2, 1]);
        assert_eq!(covers[0].1.case, CoverCase::NewRow);
        assert_eq!(covers[0].1.star, 2);
        assert_eq!(covers[0].1.new_square, Square::new(2, 2));
        assert_eq!(covers[1].0.parts(), &[3]);
        assert_eq!(covers[1].1.case, CoverCase::SameRows);
        assert_eq!(covers[1].1.star, 1);
        assert_eq!(covers[1].1.new_square, Square::new(1, 3));

        assert!(diagram(3, &[3, 2, 1]).covers_above().is_empty());

        let covers = diagram(5, &[4, 2]).covers_above();
        let (up, rd) = covers
            .iter()
            .find(|(up, _)| up.parts() == [4, 3])
            .expect("[4,3] covers [4,2]");
        assert_eq!(up.parts(), &[4, 3]);
        assert_eq!(rd.case, CoverCase::SameRows);
        assert_eq!(rd.star, 2);
        assert_eq!(rd.new_square, Square::new(2, 4));
        assert_eq!(
            rd.column,
            [Square::new(1, 4), Square::new(2, 4)].into_iter().collect()
        );
        assert!(rd.roof.is_empty());
        assert_eq!(rd.alpha.len(), 5);
    }

    #[test]
    fn covers_are_minimal_upper_bounds() {
        for n in 1..=6 {
            let all = ShiftedDiagram::all(n).unwrap();
            for lambda in &all {
                let expected: BTreeSet<Vec<usize>> = all
                    .iter()
                    .filter(|up| {
                        lambda.le_unchecked(up) && up.size() == lambda.size() + 1
                    })
                    .map(|up| up.parts().to_vec())
                    .collect();
                let got: BTreeSet<Vec<usize>> = lambda
                    .covers_above()
                    .into_iter()
                    .map(|(up, _)| up.parts().to_vec())
                    .collect();
                assert_eq!(got, expected, "covers of {}", lambda);
            }
        }
    }

    #[test]
    fn region_data_new_row() {
        let rd = diagram(3, &[3, 2]).region_data(&diagram(3, &[3, 2, 1])).unwrap();
        assert_eq!(rd.case, CoverCase::NewRow);
        assert_eq!(rd.star, 3);
        assert_eq!(
            rd.column,
            [Square::new(1, 3), Square::new(2, 3), Square::new(3, 3)]
                .into_iter()
                .collect()
        );
        assert!(rd.alpha.is_empty());
        assert!(rd.roof.is_empty());
    }

    #[test]
    fn region_data_same_rows() {
        let rd = diagram(3, &[2, 1]).region_data(&diagram(3, &[3, 1])).unwrap();
        assert_eq!(rd.case, CoverCase::SameRows);
        assert_eq!(rd.star, 1);
        assert_eq!(rd.new_square, Square::new(1, 3));
        assert_eq!(rd.alpha.len(), 3);
        assert_eq!(rd.column, [Square::new(1, 3)].into_iter().collect());
        assert_eq!(rd.roof, [Square::new(2, 2)].into_iter().collect());

        // Cover used by the second printed Jacobian: J={1,4,5} -> J'={1,3,5}.
        let lam = ShiftedDiagram::from_subset(&subset(&[1, 4, 5]), 5).unwrap();
        let lam_p = ShiftedDiagram::from_subset(&subset(&[1, 3, 5]), 5).unwrap();
        assert_eq!(lam.parts(), &[5, 2, 1]);
        assert_eq!(lam_p.parts(), &[5, 3, 1]);
        let rd = lam.region_data(&lam_p).unwrap();
        assert_eq!(rd.star, 2);
        assert_eq!(rd.column.len(), 2);
        assert_eq!(rd.roof.len(), 1);
        let exponent = -2 * (rd.star as i64) - lam.part(rd.star) as i64 - 1;
        assert_eq!(exponent, -7);
    }

    #[test]
    fn region_data_rejects_non_covers() {
        assert!(diagram(3, &[1]).region_data(&diagram(3, &[3])).is_err());
        assert!(diagram(3, &[2]).region_data(&diagram(3, &[1])).is_err());
    }

    #[test]
    fn region_counts_same_rows() {
        for n in 1..=6 {
            for lambda in ShiftedDiagram::all(n).unwrap() {
                for (upper, rd) in lambda.covers_above() {
                    assert!(rd.column.contains(&rd.new_square));
                    assert!(rd.roof.is_disjoint(&rd.alpha));
                    match rd.case {
                        CoverCase::NewRow => {
                            assert_eq!(rd.column.len(), rd.star);
                            assert!(rd.alpha.is_empty());
                            assert!(rd.roof.is_empty());
                        }
                        CoverCase::SameRows => {
                            assert_eq!(rd.column.len(), rd.star);
                            assert_eq!(
                                rd.alpha.len(),
                                2 * rd.star + lambda.part(rd.star) - 1
                            );
                            assert!(rd.column.is_subset(&rd.alpha));
                            // Every alpha box except the new one lies in λ,
                            // and all of them lie in λ'.
                            for sq in &rd.alpha {
                                assert!(upper.contains(*sq));
                                if *sq != rd.new_square {
                                    assert!(lambda.contains(*sq));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
