//! Cells of the three CW structures and the canonical cell ordering.
//!
//! Complex Schubert cells are indexed by one diagram `λ` (real dimension
//! `2|λ|`), real Schubert cells by `λ` (dimension `|λ|`), and mixed-type cells
//! by a triple `(λ, μ, ε)` with `μ ≤ λ` and a sign on every corner of `μ`
//! (dimension `|λ| + |μ|`). The global ordering (by dimension, then `λ`,
//! then `μ`, then `ε` with `+` before `-`) is what makes boundary matrices
//! reproducible across runs.

use std::fmt;

use crate::diagrams::{ShiftedDiagram, Square};
use crate::{Error, Result};

/// Which CW structure is being built.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Space {
    Real,
    Complex,
    Mixed,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Real => write!(f, "real"),
            Space::Complex => write!(f, "complex"),
            Space::Mixed => write!(f, "mixed"),
        }
    }
}

/// Eager-enumeration limits; mixed cell counts grow much faster.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub real_complex: usize,
    pub mixed: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { real_complex: 8, mixed: 5 }
    }
}

impl Bounds {
    pub fn limit_for(&self, space: Space) -> usize {
        match space {
            Space::Real | Space::Complex => self.real_complex,
            Space::Mixed => self.mixed,
        }
    }
}

/// Sign of the imaginary part on one corner box. `Plus` sorts before `Minus`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A sign for every corner of some diagram `μ`, kept in lexicographic box
/// order. The empty assignment is the unique one for `μ = φ`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignAssignment {
    signs: Vec<(Square, Sign)>,
}

impl SignAssignment {
    /// Validates that the domain is exactly `corners(mu)`.
    pub fn new(mu: &ShiftedDiagram, mut signs: Vec<(Square, Sign)>) -> Result<Self> {
        signs.sort_by_key(|(sq, _)| *sq);
        let domain: Vec<Square> = signs.iter().map(|(sq, _)| *sq).collect();
        if domain != mu.corners() {
            return Err(Error::Domain(format!(
                "sign assignment domain {:?} does not match corners of {}",
                domain, mu
            )));
        }
        Ok(SignAssignment { signs })
    }

    pub fn empty() -> Self {
        SignAssignment { signs: Vec::new() }
    }

    /// All `2^k` assignments on the corners of `mu`, in lexicographic order
    /// with `+` before `-` (the first corner varies slowest).
    pub fn all_for(mu: &ShiftedDiagram) -> Vec<SignAssignment> {
        let corners = mu.corners();
        let k = corners.len();
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0u32..(1 << k) {
            let signs: Vec<(Square, Sign)> = corners
                .iter()
                .enumerate()
                .map(|(i, &sq)| {
                    let bit = (mask >> (k - 1 - i)) & 1;
                    (sq, if bit == 0 { Sign::Plus } else { Sign::Minus })
                })
                .collect();
            out.push(SignAssignment { signs });
        }
        out
    }

    pub fn sign_at(&self, sq: Square) -> Option<Sign> {
        self.signs
            .iter()
            .find(|(s, _)| *s == sq)
            .map(|(_, sign)| *sign)
    }

    pub fn signs(&self) -> &[(Square, Sign)] {
        &self.signs
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// A copy with the sign flipped on every box of `flip` that is in the
    /// domain.
    pub fn flipped_on<'a, I: IntoIterator<Item = &'a Square>>(&self, flip: I) -> Self {
        let mut out = self.clone();
        for sq in flip {
            for (s, sign) in out.signs.iter_mut() {
                if s == sq {
                    *sign = sign.flipped();
                }
            }
        }
        out
    }

    /// Compact rendering like `+-`; empty assignment renders as `()`.
    pub fn render(&self) -> String {
        if self.signs.is_empty() {
            "()".to_string()
        } else {
            self.signs.iter().map(|(_, s)| s.as_char()).collect()
        }
    }
}

/// A cell of one of the three CW structures.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum CellKind {
    Complex(ShiftedDiagram),
    Real(ShiftedDiagram),
    Mixed {
        lambda: ShiftedDiagram,
        mu: ShiftedDiagram,
        eps: SignAssignment,
    },
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cell {
    kind: CellKind,
}

impl Cell {
    pub fn complex(lambda: ShiftedDiagram) -> Self {
        Cell { kind: CellKind::Complex(lambda) }
    }

    pub fn real(lambda: ShiftedDiagram) -> Self {
        Cell { kind: CellKind::Real(lambda) }
    }

    pub fn mixed(
        lambda: ShiftedDiagram,
        mu: ShiftedDiagram,
        eps: SignAssignment,
    ) -> Result<Self> {
        if !mu.leq(&lambda)? {
            return Err(Error::Domain(format!(
                "mixed cell needs μ ≤ λ, got μ={} λ={}",
                mu, lambda
            )));
        }
        if eps.signs().iter().map(|(sq, _)| *sq).collect::<Vec<_>>() != mu.corners() {
            return Err(Error::Domain(
                "sign assignment does not match corners of μ".into(),
            ));
        }
        Ok(Cell { kind: CellKind::Mixed { lambda, mu, eps } })
    }

    pub fn kind(&self) -> &CellKind {
        &self.kind
    }

    pub fn space(&self) -> Space {
        match &self.kind {
            CellKind::Complex(_) => Space::Complex,
            CellKind::Real(_) => Space::Real,
            CellKind::Mixed { .. } => Space::Mixed,
        }
    }

    pub fn lambda(&self) -> &ShiftedDiagram {
        match &self.kind {
            CellKind::Complex(l) | CellKind::Real(l) => l,
            CellKind::Mixed { lambda, .. } => lambda,
        }
    }

    pub fn mu(&self) -> Option<&ShiftedDiagram> {
        match &self.kind {
            CellKind::Mixed { mu, .. } => Some(mu),
            _ => None,
        }
    }

    pub fn eps(&self) -> Option<&SignAssignment> {
        match &self.kind {
            CellKind::Mixed { eps, .. } => Some(eps),
            _ => None,
        }
    }

    pub fn ambient_n(&self) -> usize {
        self.lambda().ambient_n()
    }

    pub fn dim(&self) -> usize {
        match &self.kind {
            CellKind::Complex(l) => 2 * l.size(),
            CellKind::Real(l) => l.size(),
            CellKind::Mixed { lambda, mu, .. } => lambda.size() + mu.size(),
        }
    }

    /// The same cell at ambient rank `n + m`; degrees of attaching maps are
    /// invariant under this inclusion.
    pub fn stabilized(&self, m: usize) -> Cell {
        let kind = match &self.kind {
            CellKind::Complex(l) => CellKind::Complex(l.stabilized(m)),
            CellKind::Real(l) => CellKind::Real(l.stabilized(m)),
            CellKind::Mixed { lambda, mu, eps } => CellKind::Mixed {
                lambda: lambda.stabilized(m),
                mu: mu.stabilized(m),
                eps: eps.clone(),
            },
        };
        Cell { kind }
    }

    /// Sort key implementing the canonical cell order.
    pub fn sort_key(&self) -> (usize, Vec<usize>, Vec<usize>, Vec<Sign>) {
        let mu_parts = self.mu().map(|m| m.parts().to_vec()).unwrap_or_default();
        let eps_signs = self
            .eps()
            .map(|e| e.signs().iter().map(|(_, s)| *s).collect())
            .unwrap_or_default();
        (
            self.dim(),
            self.lambda().parts().to_vec(),
            mu_parts,
            eps_signs,
        )
    }

    /// Per-box decoration string, rows joined by `/`: `.` for a complex box,
    /// `∘` for a real box, `+`/`-` for a corner with its sign. The empty
    /// diagram renders as `φ`.
    pub fn decorated(&self) -> String {
        let lambda = self.lambda();
        if lambda.is_empty() {
            return "φ".to_string();
        }
        match &self.kind {
            CellKind::Complex(l) => l.to_string(),
            CellKind::Real(l) => render_rows(l, |_| '∘'),
            CellKind::Mixed { lambda, mu, eps } => {
                let interior = mu.interior();
                render_rows(lambda, |sq| {
                    if let Some(sign) = eps.sign_at(sq) {
                        sign.as_char()
                    } else if interior.contains(&sq) {
                        '.'
                    } else {
                        debug_assert!(!mu.contains(sq));
                        '∘'
                    }
                })
            }
        }
    }
}

fn render_rows(lambda: &ShiftedDiagram, decorate: impl Fn(Square) -> char) -> String {
    let mut rows = Vec::new();
    for row in 1..=lambda.num_rows() {
        let mut s = String::new();
        for col in row..=lambda.row_end_col(row) {
            s.push(decorate(Square::new(row, col)));
        }
        rows.push(s);
    }
    rows.join("/")
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            CellKind::Complex(l) => write!(f, "C{}", l),
            CellKind::Real(l) => write!(f, "R{}", l),
            CellKind::Mixed { lambda, mu, eps } => {
                write!(f, "{}+i{}:{}", lambda, mu, eps.render())
            }
        }
    }
}

fn check_rank(n: usize, space: Space, bounds: &Bounds) -> Result<()> {
    if n < 1 {
        return Err(Error::Domain("rank must be at least 1".into()));
    }
    let limit = bounds.limit_for(space);
    if n > limit {
        return Err(Error::Resource(format!(
            "rank {} exceeds the {} enumeration bound {}; raise the bound explicitly to proceed",
            n, space, limit
        )));
    }
    Ok(())
}

fn sorted_diagrams(n: usize) -> Vec<ShiftedDiagram> {
    let mut all = ShiftedDiagram::all(n).expect("validated rank");
    all.sort_by(|a, b| (a.size(), a.parts()).cmp(&(b.size(), b.parts())));
    all
}

/// All cells of the requested structure at rank `n`, canonically ordered.
pub fn enumerate(n: usize, space: Space, bounds: &Bounds) -> Result<Vec<Cell>> {
    check_rank(n, space, bounds)?;
    let mut cells: Vec<Cell> = match space {
        Space::Complex => sorted_diagrams(n).into_iter().map(Cell::complex).collect(),
        Space::Real => sorted_diagrams(n).into_iter().map(Cell::real).collect(),
        Space::Mixed => {
            let mut out = Vec::new();
            for lambda in sorted_diagrams(n) {
                for mu in lambda.sub_diagrams() {
                    for eps in SignAssignment::all_for(&mu) {
                        out.push(
                            Cell::mixed(lambda.clone(), mu.clone(), eps)
                                .expect("μ ≤ λ by construction"),
                        );
                    }
                }
            }
            out
        }
    };
    cells.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(cells)
}
