//! Serialization of chain complexes: a JSON document with dense cell ids and
//! nonzero boundary entries, and a DOT digraph of the attaching maps.

use serde::{Deserialize, Serialize};

use crate::cells::{Cell, Sign, SignAssignment, Space};
use crate::chain::{ChainComplex, SparseIntMatrix};
use crate::diagrams::ShiftedDiagram;
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// JSON form of a chain complex. Cell ids are dense, zero based, and follow
/// the canonical cell order; only nonzero degrees are listed.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub schema_version: u32,
    pub n: usize,
    pub space: String,
    pub cells: Vec<CellRecord>,
    pub boundary: Vec<BoundaryRecord>,
    pub provenance: Provenance,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CellRecord {
    pub id: usize,
    pub kind: String,
    pub lambda: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<String>,
    pub dim: usize,
}

/// One nonzero entry of a boundary matrix: the `source` cell attaches onto
/// the `target` cell (one dimension down) with the given degree.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct BoundaryRecord {
    pub target_id: usize,
    pub source_id: usize,
    pub degree: i64,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Provenance {
    pub tool_version: String,
    pub seed: Option<u64>,
}

fn space_name(space: Space) -> &'static str {
    match space {
        Space::Real => "real",
        Space::Complex => "complex",
        Space::Mixed => "mixed",
    }
}

fn space_from_name(name: &str) -> Result<Space> {
    match name {
        "real" => Ok(Space::Real),
        "complex" => Ok(Space::Complex),
        "mixed" => Ok(Space::Mixed),
        other => Err(Error::Domain(format!("unknown space '{}'", other))),
    }
}

/// Converts a built complex into its document form.
pub fn to_document(cc: &ChainComplex, seed: Option<u64>) -> ComplexDocument {
    let mut cells = Vec::with_capacity(cc.num_cells());
    for (id, cell) in cc.cells() {
        let (kind, mu, eps) = match cell.space() {
            Space::Complex => ("complex", None, None),
            Space::Real => ("real", None, None),
            Space::Mixed => (
                "mixed",
                cell.mu().map(|m| m.parts().to_vec()),
                cell.eps().map(|e| {
                    e.signs().iter().map(|(_, s)| s.as_char()).collect::<String>()
                }),
            ),
        };
        cells.push(CellRecord {
            id,
            kind: kind.to_string(),
            lambda: cell.lambda().parts().to_vec(),
            mu,
            eps,
            dim: cell.dim(),
        });
    }
    let mut boundary = Vec::new();
    for d in 1..=cc.max_dim() {
        let row_offset = cc.dim_offset(d - 1);
        let col_offset = cc.dim_offset(d);
        for &(r, c, v) in cc.boundary(d).entries() {
            boundary.push(BoundaryRecord {
                target_id: row_offset + r,
                source_id: col_offset + c,
                degree: v,
            });
        }
    }
    boundary.sort_by_key(|b| (b.source_id, b.target_id));
    ComplexDocument {
        schema_version: SCHEMA_VERSION,
        n: cc.n(),
        space: space_name(cc.space()).to_string(),
        cells,
        boundary,
        provenance: Provenance {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
        },
    }
}

fn cell_from_record(rec: &CellRecord, n: usize) -> Result<Cell> {
    let lambda = ShiftedDiagram::new(n, rec.lambda.clone())?;
    match rec.kind.as_str() {
        "complex" => Ok(Cell::complex(lambda)),
        "real" => Ok(Cell::real(lambda)),
        "mixed" => {
            let mu_parts = rec
                .mu
                .clone()
                .ok_or_else(|| Error::Domain("mixed cell record without μ".into()))?;
            let mu = ShiftedDiagram::new(n, mu_parts)?;
            let eps_str = rec
                .eps
                .clone()
                .ok_or_else(|| Error::Domain("mixed cell record without ε".into()))?;
            let corners = mu.corners();
            if eps_str.len() != corners.len() {
                return Err(Error::Domain(format!(
                    "ε string '{}' does not match {} corners",
                    eps_str,
                    corners.len()
                )));
            }
            let signs: Vec<_> = corners
                .into_iter()
                .zip(eps_str.chars())
                .map(|(sq, ch)| match ch {
                    '+' => Ok((sq, Sign::Plus)),
                    '-' => Ok((sq, Sign::Minus)),
                    other => Err(Error::Domain(format!("bad sign character '{}'", other))),
                })
                .collect::<Result<_>>()?;
            let eps = SignAssignment::new(&mu, signs)?;
            Cell::mixed(lambda, mu, eps)
        }
        other => Err(Error::Domain(format!("unknown cell kind '{}'", other))),
    }
}

/// Rebuilds a chain complex from its document form.
pub fn from_document(doc: &ComplexDocument) -> Result<ChainComplex> {
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Domain(format!(
            "unsupported schema version {}",
            doc.schema_version
        )));
    }
    let space = space_from_name(&doc.space)?;
    let max_dim = doc.cells.iter().map(|c| c.dim).max().unwrap_or(0);
    let mut cells_by_dim: Vec<Vec<Cell>> = vec![Vec::new(); max_dim + 1];
    let mut dim_and_index = Vec::with_capacity(doc.cells.len());
    for (expected_id, rec) in doc.cells.iter().enumerate() {
        if rec.id != expected_id {
            return Err(Error::Domain("cell ids must be dense and ordered".into()));
        }
        let cell = cell_from_record(rec, doc.n)?;
        if cell.dim() != rec.dim {
            return Err(Error::Domain(format!(
                "cell {} claims dimension {} but has dimension {}",
                rec.id,
                rec.dim,
                cell.dim()
            )));
        }
        dim_and_index.push((rec.dim, cells_by_dim[rec.dim].len()));
        cells_by_dim[rec.dim].push(cell);
    }
    let mut entries_by_dim: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); max_dim + 1];
    for b in &doc.boundary {
        if b.degree == 0 {
            return Err(Error::Domain("boundary records must be nonzero".into()));
        }
        let (sd, si) = *dim_and_index
            .get(b.source_id)
            .ok_or_else(|| Error::Domain("boundary source id out of range".into()))?;
        let (td, ti) = *dim_and_index
            .get(b.target_id)
            .ok_or_else(|| Error::Domain("boundary target id out of range".into()))?;
        if td + 1 != sd {
            return Err(Error::Domain(
                "boundary record does not cross one dimension".into(),
            ));
        }
        entries_by_dim[sd].push((ti, si, b.degree));
    }
    let mut boundaries = Vec::with_capacity(max_dim + 1);
    for d in 0..=max_dim {
        let nrows = if d == 0 { 0 } else { cells_by_dim[d - 1].len() };
        boundaries.push(SparseIntMatrix::from_entries(
            nrows,
            cells_by_dim[d].len(),
            entries_by_dim[d].clone(),
        ));
    }
    ChainComplex::from_parts(doc.n, space, cells_by_dim, boundaries)
}

/// Stable pretty JSON rendering of the document.
pub fn to_json(doc: &ComplexDocument) -> String {
    serde_json::to_string_pretty(doc).expect("document serializes")
}

/// DOT digraph of the attaching maps: one node per cell labelled
/// `λ;μ;ε/dim`, one edge per nonzero degree from the higher cell to the
/// lower, dashed for negative degrees, penwidth 2 for |degree| = 2.
pub fn to_dot(cc: &ChainComplex) -> String {
    let mut out = String::new();
    out.push_str("digraph attaching_maps {\n");
    out.push_str("  rankdir=BT;\n");
    for (id, cell) in cc.cells() {
        let label = match cell.space() {
            Space::Mixed => format!(
                "{};{};{}/{}",
                parts_label(cell.lambda()),
                parts_label(cell.mu().expect("mixed cell")),
                cell.eps().expect("mixed cell").render(),
                cell.dim()
            ),
            _ => format!("{}/{}", parts_label(cell.lambda()), cell.dim()),
        };
        out.push_str(&format!("  c{} [label=\"{}\"];\n", id, label));
    }
    for d in 1..=cc.max_dim() {
        let row_offset = cc.dim_offset(d - 1);
        let col_offset = cc.dim_offset(d);
        for &(r, c, v) in cc.boundary(d).entries() {
            let mut attrs = vec![format!("deg={}", v)];
            if v < 0 {
                attrs.push("style=dashed".to_string());
            }
            if v.abs() == 2 {
                attrs.push("penwidth=2".to_string());
            }
            out.push_str(&format!(
                "  c{} -> c{} [{}];\n",
                col_offset + c,
                row_offset + r,
                attrs.join(", ")
            ));
        }
    }
    out.push_str("}\n");
    out
}

fn parts_label(d: &ShiftedDiagram) -> String {
    if d.is_empty() {
        "0".to_string()
    } else {
        format!(
            "[{}]",
            d.parts()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::Bounds;
    use crate::chain::build;

    #[test]
    fn json_round_trip_is_identity() {
        let bounds = Bounds::default();
        for (n, space) in [(1, Space::Mixed), (3, Space::Real), (3, Space::Complex), (2, Space::Mixed)] {
            let cc = build(n, space, &bounds).unwrap();
            let doc = to_document(&cc, Some(7));
            let json = to_json(&doc);
            let parsed: ComplexDocument = serde_json::from_str(&json).unwrap();
            assert_eq!(parsed, doc);
            let rebuilt = from_document(&parsed).unwrap();
            assert_eq!(rebuilt, cc);
        }
    }

    #[test]
    fn listed_degrees_are_nonzero_and_ids_dense() {
        let cc = build(3, Space::Real, &Bounds::default()).unwrap();
        let doc = to_document(&cc, None);
        for (i, c) in doc.cells.iter().enumerate() {
            assert_eq!(c.id, i);
        }
        assert!(doc.boundary.iter().all(|b| b.degree != 0));
    }

    #[test]
    fn deterministic_json_bytes() {
        let cc = build(2, Space::Mixed, &Bounds::default()).unwrap();
        let a = to_json(&to_document(&cc, Some(3)));
        let b = to_json(&to_document(&cc, Some(3)));
        assert_eq!(a, b);
    }

    #[test]
    fn dot_for_projective_line() {
        let cc = build(1, Space::Mixed, &Bounds::default()).unwrap();
        let dot = to_dot(&cc);
        assert_eq!(dot.matches("label=").count(), 4);
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.contains("deg=-1, style=dashed"));
        assert!(dot.contains("deg=1"));
    }

    #[test]
    fn dot_for_complex_cells_has_no_edges() {
        let cc = build(3, Space::Complex, &Bounds::default()).unwrap();
        let dot = to_dot(&cc);
        assert_eq!(dot.matches("label=").count(), 8);
        assert_eq!(dot.matches("->").count(), 0);
    }

    #[test]
    fn dot_marks_degree_two_edges() {
        let cc = build(3, Space::Real, &Bounds::default()).unwrap();
        let dot = to_dot(&cc);
        assert!(dot.contains("deg=-2, style=dashed, penwidth=2"));
        assert!(dot.contains("deg=2, penwidth=2"));
    }
}
