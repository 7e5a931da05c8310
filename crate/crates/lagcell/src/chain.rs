//! Integer cellular chain complexes for the three CW structures.
//!
//! Boundary matrices are assembled from the closed-form degrees, querying a
//! degree only for dimension-gap-one pairs whose diagrams are nested (the
//! frontier condition makes every other entry structurally zero). Matrices
//! are stored as sparse coordinate lists; entries lie in `[-2, 2]`.

use rayon::prelude::*;

use crate::cells::{enumerate, Bounds, Cell, CellKind, Space};
use crate::incidence::degree;
use crate::{Error, Result};

/// Sparse integer matrix as a sorted coordinate list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseIntMatrix {
    nrows: usize,
    ncols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseIntMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseIntMatrix { nrows, ncols, entries: Vec::new() }
    }

    pub fn from_entries(
        nrows: usize,
        ncols: usize,
        mut entries: Vec<(usize, usize, i64)>,
    ) -> Self {
        entries.retain(|&(_, _, v)| v != 0);
        entries.sort_unstable();
        for &(r, c, _) in &entries {
            assert!(r < nrows && c < ncols, "entry out of bounds");
        }
        SparseIntMatrix { nrows, ncols, entries }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries
            .binary_search_by(|&(r, c, _)| (r, c).cmp(&(row, col)))
            .map(|i| self.entries[i].2)
            .unwrap_or(0)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.ncols]; self.nrows];
        for &(r, c, v) in &self.entries {
            m[r][c] = v;
        }
        m
    }

    /// Matrix product, dense accumulation over the sparse entries.
    pub fn multiply(&self, other: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.ncols, other.nrows, "shape mismatch in product");
        let mut acc = vec![vec![0i64; other.ncols]; self.nrows];
        for &(r, m, a) in &self.entries {
            for &(m2, c, b) in &other.entries {
                if m2 == m {
                    acc[r][c] += a * b;
                }
            }
        }
        let entries: Vec<(usize, usize, i64)> = acc
            .into_iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.into_iter()
                    .enumerate()
                    .filter(|&(_, v)| v != 0)
                    .map(move |(c, v)| (r, c, v))
            })
            .collect();
        SparseIntMatrix::from_entries(self.nrows, other.ncols, entries)
    }
}

/// Nonzero entries of some `∂ ∘ ∂`, reported as `(dimension, row, col, value)`.
#[derive(Clone, Debug, Default)]
pub struct DdZeroReport {
    pub violations: Vec<(usize, usize, usize, i64)>,
}

impl DdZeroReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A graded cell list with integer boundary matrices.
///
/// `boundary(d)` has one row per `(d-1)`-cell and one column per `d`-cell,
/// both in the canonical cell order; `boundary(0)` is the zero map out of
/// dimension zero.
#[derive(Clone, PartialEq, Debug)]
pub struct ChainComplex {
    n: usize,
    space: Space,
    cells_by_dim: Vec<Vec<Cell>>,
    boundaries: Vec<SparseIntMatrix>,
}

impl ChainComplex {
    /// Reassembles a complex from its parts, validating the shapes. Used when
    /// loading a serialized complex; `build` is the normal entry point.
    pub fn from_parts(
        n: usize,
        space: Space,
        cells_by_dim: Vec<Vec<Cell>>,
        boundaries: Vec<SparseIntMatrix>,
    ) -> Result<ChainComplex> {
        if boundaries.len() != cells_by_dim.len() {
            return Err(Error::Domain(
                "need one boundary matrix per dimension".into(),
            ));
        }
        for (d, b) in boundaries.iter().enumerate() {
            let expected_rows = if d == 0 { 0 } else { cells_by_dim[d - 1].len() };
            if b.nrows() != expected_rows || b.ncols() != cells_by_dim[d].len() {
                return Err(Error::Domain(format!(
                    "boundary {} has shape {}x{}, expected {}x{}",
                    d,
                    b.nrows(),
                    b.ncols(),
                    expected_rows,
                    cells_by_dim[d].len()
                )));
            }
        }
        Ok(ChainComplex { n, space, cells_by_dim, boundaries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn max_dim(&self) -> usize {
        self.cells_by_dim.len().saturating_sub(1)
    }

    pub fn cells_in_dim(&self, d: usize) -> &[Cell] {
        self.cells_by_dim
            .get(d)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    /// All cells with their dense global ids, in canonical order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, &Cell)> {
        self.cells_by_dim
            .iter()
            .flat_map(|v| v.iter())
            .enumerate()
    }

    pub fn num_cells(&self) -> usize {
        self.cells_by_dim.iter().map(|v| v.len()).sum()
    }

    /// Global id of the first cell of dimension `d`.
    pub fn dim_offset(&self, d: usize) -> usize {
        self.cells_by_dim[..d.min(self.cells_by_dim.len())]
            .iter()
            .map(|v| v.len())
            .sum()
    }

    pub fn boundary(&self, d: usize) -> &SparseIntMatrix {
        &self.boundaries[d]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells_by_dim
            .iter()
            .enumerate()
            .map(|(d, v)| {
                let count = v.len() as i64;
                if d % 2 == 0 {
                    count
                } else {
                    -count
                }
            })
            .sum()
    }

    /// Checks `∂_d ∘ ∂_{d+1} = 0` in every dimension.
    pub fn verify_ddzero(&self) -> DdZeroReport {
        let mut report = DdZeroReport::default();
        for d in 1..self.boundaries.len().saturating_sub(1) {
            let product = self.boundaries[d].multiply(&self.boundaries[d + 1]);
            for &(r, c, v) in product.entries() {
                report.violations.push((d, r, c, v));
            }
        }
        report
    }

    /// The subcomplex of `μ = φ` cells of a mixed complex, relabelled as the
    /// real CW structure.
    pub fn real_subcomplex(&self) -> Result<ChainComplex> {
        if self.space != Space::Mixed {
            return Err(Error::Domain(
                "the real subcomplex is extracted from a mixed complex".into(),
            ));
        }
        let mut cells_by_dim: Vec<Vec<Cell>> = Vec::new();
        let mut kept: Vec<Vec<usize>> = Vec::new();
        for dim_cells in &self.cells_by_dim {
            let mut cells = Vec::new();
            let mut idx = Vec::new();
            for (i, cell) in dim_cells.iter().enumerate() {
                if let CellKind::Mixed { lambda, mu, .. } = cell.kind() {
                    if mu.is_empty() {
                        cells.push(Cell::real(lambda.clone()));
                        idx.push(i);
                    }
                }
            }
            cells_by_dim.push(cells);
            kept.push(idx);
        }
        while cells_by_dim.last().is_some_and(|v| v.is_empty()) {
            cells_by_dim.pop();
            kept.pop();
        }
        let mut boundaries = vec![SparseIntMatrix::zero(
            0,
            cells_by_dim.first().map(|v| v.len()).unwrap_or(0),
        )];
        for d in 1..cells_by_dim.len() {
            let rows = &kept[d - 1];
            let cols = &kept[d];
            let full = &self.boundaries[d];
            let entries: Vec<(usize, usize, i64)> = rows
                .iter()
                .enumerate()
                .flat_map(|(ri, &orig_r)| {
                    cols.iter().enumerate().filter_map(move |(ci, &orig_c)| {
                        let v = full.get(orig_r, orig_c);
                        (v != 0).then_some((ri, ci, v))
                    })
                })
                .collect();
            boundaries.push(SparseIntMatrix::from_entries(rows.len(), cols.len(), entries));
        }
        Ok(ChainComplex { n: self.n, space: Space::Real, cells_by_dim, boundaries })
    }
}

/// Builds the chain complex of the requested structure at rank `n`.
pub fn build(n: usize, space: Space, bounds: &Bounds) -> Result<ChainComplex> {
    let cells = enumerate(n, space, bounds)?;
    let max_dim = cells.iter().map(|c| c.dim()).max().unwrap_or(0);
    let mut cells_by_dim: Vec<Vec<Cell>> = vec![Vec::new(); max_dim + 1];
    for cell in cells {
        let d = cell.dim();
        cells_by_dim[d].push(cell);
    }

    let mut boundaries =
        vec![SparseIntMatrix::zero(0, cells_by_dim[0].len())];
    for d in 1..=max_dim {
        let rows = &cells_by_dim[d - 1];
        let cols = &cells_by_dim[d];
        if space == Space::Complex {
            // Even cells only: every attaching map has degree zero.
            boundaries.push(SparseIntMatrix::zero(rows.len(), cols.len()));
            continue;
        }
        let columns: Vec<Vec<(usize, usize, i64)>> = cols
            .par_iter()
            .enumerate()
            .map(|(ci, upper)| {
                let mut out = Vec::new();
                for (ri, lower) in rows.iter().enumerate() {
                    if !incident(lower, upper) {
                        continue;
                    }
                    let deg = degree(lower, upper).expect("valid cell pair");
                    if deg != 0 {
                        out.push((ri, ci, deg));
                    }
                }
                out
            })
            .collect();
        let entries: Vec<(usize, usize, i64)> = columns.into_iter().flatten().collect();
        boundaries.push(SparseIntMatrix::from_entries(rows.len(), cols.len(), entries));
    }
    Ok(ChainComplex { n, space, cells_by_dim, boundaries })
}

/// Combinatorial frontier filter: a boundary entry can only be nonzero when
/// both index diagrams are nested.
fn incident(lower: &Cell, upper: &Cell) -> bool {
    if !lower.lambda().le_unchecked(upper.lambda()) {
        return false;
    }
    match (lower.mu(), upper.mu()) {
        (Some(mu), Some(mu_p)) => mu.le_unchecked(mu_p),
        (None, None) => true,
        _ => false,
    }
}

/// The same cell at rank `n + m`; attaching degrees are preserved.
pub fn stabilize(cell: &Cell, m: usize) -> Cell {
    cell.stabilized(m)
}
