//! Incidence complexes for 3-dimensional orbit decompositions.
//!
//! Cells are given by explicit boundary lists (with multiplicity) rather
//! than a 3D analogue of rotation systems: only validation and fan checks
//! are needed downstream, not 3-manifold reconstruction.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

pub type CellId = usize;
pub type HypLabel = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Cell3Error {
    #[error("boundary of {dim}-cell {cell} references missing cell {reference}")]
    BadBoundaryReference {
        dim: usize,
        cell: CellId,
        reference: CellId,
    },
    #[error("1-cell {cell} must have exactly two endpoints")]
    BadEdgeEndpoints { cell: CellId },
    #[error("complex has no 3-cells")]
    Empty,
}

/// One violated invariant, with the offending cell ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Cell3Issue {
    /// 0-cell not on exactly 3 distinct hypersurface labels.
    VertexCorankViolation {
        vertex: CellId,
        labels: Vec<HypLabel>,
    },
    /// Link of a 0-cell is not an octahedron boundary
    /// (wants 6 edge-ends, 12 face-corners, 8 domain-corners).
    LinkViolation {
        vertex: CellId,
        edge_ends: usize,
        face_corners: usize,
        domain_corners: usize,
    },
    /// 2-cell does not bound exactly two 3-cells, once each.
    TwoCellBoundingViolation {
        cell: CellId,
        incidences: usize,
        repeated: bool,
    },
    /// A 0-cell of a 3-cell's closure does not meet exactly 3 of its facets.
    NonSimpleCorner {
        domain: CellId,
        vertex: CellId,
        facets: usize,
    },
    /// Corner multiplicity did not divide evenly; the incidence data is not
    /// that of a polytopal cell.
    MalformedCorner {
        cell_dim: usize,
        cell: CellId,
        vertex: CellId,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex3 {
    n_vertices: usize,
    /// Endpoints of each 1-cell (exactly two, possibly equal).
    edge_boundary: Vec<[CellId; 2]>,
    /// 1-cells on each 2-cell boundary, with multiplicity.
    face_boundary: Vec<Vec<CellId>>,
    /// 2-cells on each 3-cell boundary, with multiplicity.
    domain_boundary: Vec<Vec<CellId>>,
    /// Hypersurface label of each 2-cell.
    face_label: Vec<HypLabel>,
}

impl CellComplex3 {
    pub fn new(
        n_vertices: usize,
        edge_boundary: Vec<[CellId; 2]>,
        face_boundary: Vec<Vec<CellId>>,
        domain_boundary: Vec<Vec<CellId>>,
        face_label: Vec<HypLabel>,
    ) -> Result<Self, Cell3Error> {
        if domain_boundary.is_empty() {
            return Err(Cell3Error::Empty);
        }
        for (e, ends) in edge_boundary.iter().enumerate() {
            for &v in ends {
                if v >= n_vertices {
                    return Err(Cell3Error::BadBoundaryReference {
                        dim: 1,
                        cell: e,
                        reference: v,
                    });
                }
            }
        }
        for (f, bnd) in face_boundary.iter().enumerate() {
            if bnd.is_empty() {
                return Err(Cell3Error::BadBoundaryReference {
                    dim: 2,
                    cell: f,
                    reference: 0,
                });
            }
            for &e in bnd {
                if e >= edge_boundary.len() {
                    return Err(Cell3Error::BadBoundaryReference {
                        dim: 2,
                        cell: f,
                        reference: e,
                    });
                }
            }
        }
        assert_eq!(face_label.len(), face_boundary.len());
        for (o, bnd) in domain_boundary.iter().enumerate() {
            if bnd.is_empty() {
                return Err(Cell3Error::BadBoundaryReference {
                    dim: 3,
                    cell: o,
                    reference: 0,
                });
            }
            for &f in bnd {
                if f >= face_boundary.len() {
                    return Err(Cell3Error::BadBoundaryReference {
                        dim: 3,
                        cell: o,
                        reference: f,
                    });
                }
            }
        }
        Ok(CellComplex3 {
            n_vertices,
            edge_boundary,
            face_boundary,
            domain_boundary,
            face_label,
        })
    }

    pub fn n_cells(&self, dim: usize) -> usize {
        match dim {
            0 => self.n_vertices,
            1 => self.edge_boundary.len(),
            2 => self.face_boundary.len(),
            3 => self.domain_boundary.len(),
            _ => 0,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.n_cells(0) as i64 - self.n_cells(1) as i64 + self.n_cells(2) as i64
            - self.n_cells(3) as i64
    }

    pub fn edge_endpoints(&self, e: CellId) -> [CellId; 2] {
        self.edge_boundary[e]
    }

    pub fn face_edges(&self, f: CellId) -> &[CellId] {
        &self.face_boundary[f]
    }

    pub fn domain_facets(&self, o: CellId) -> &[CellId] {
        &self.domain_boundary[o]
    }

    pub fn face_label(&self, f: CellId) -> HypLabel {
        self.face_label[f]
    }

    pub fn labels(&self) -> BTreeSet<HypLabel> {
        self.face_label.iter().copied().collect()
    }

    pub fn edge_boundaries(&self) -> &[[CellId; 2]] {
        &self.edge_boundary
    }

    pub fn face_boundaries(&self) -> &[Vec<CellId>] {
        &self.face_boundary
    }

    pub fn domain_boundaries(&self) -> &[Vec<CellId>] {
        &self.domain_boundary
    }

    /// Multiplicity of vertex v as an endpoint of edge e.
    fn end_mult(&self, e: CellId, v: CellId) -> usize {
        self.edge_boundary[e].iter().filter(|&&x| x == v).count()
    }

    /// Number of corners of 2-cell f at vertex v: each corner of a disk cell
    /// uses two edge-ends at that vertex.
    fn corner_mult2(&self, f: CellId, v: CellId) -> Result<usize, ()> {
        let ends: usize = self.face_boundary[f]
            .iter()
            .map(|&e| self.end_mult(e, v))
            .sum();
        if ends.is_multiple_of(2) {
            Ok(ends / 2)
        } else {
            Err(())
        }
    }

    /// Number of corners of 3-cell o at vertex v: each corner of a polytopal
    /// cell uses three face-corners.
    fn corner_mult3(&self, o: CellId, v: CellId) -> Result<usize, ()> {
        let mut corners = 0usize;
        for &f in &self.domain_boundary[o] {
            corners += self.corner_mult2(f, v)?;
        }
        if corners.is_multiple_of(3) {
            Ok(corners / 3)
        } else {
            Err(())
        }
    }

    /// Distinct hypersurface labels through a 0-cell.
    pub fn vertex_labels(&self, v: CellId) -> Vec<HypLabel> {
        let mut labels = BTreeSet::new();
        for (f, bnd) in self.face_boundary.iter().enumerate() {
            if bnd.iter().any(|&e| self.end_mult(e, v) > 0) {
                labels.insert(self.face_label[f]);
            }
        }
        labels.into_iter().collect()
    }

    /// Distinct labels of the 2-cells containing a 1-cell.
    pub fn edge_labels(&self, e: CellId) -> Vec<HypLabel> {
        let mut labels = BTreeSet::new();
        for (f, bnd) in self.face_boundary.iter().enumerate() {
            if bnd.contains(&e) {
                labels.insert(self.face_label[f]);
            }
        }
        labels.into_iter().collect()
    }

    /// Vertices in the closure of 2-cell f.
    pub fn face_vertices(&self, f: CellId) -> BTreeSet<CellId> {
        self.face_boundary[f]
            .iter()
            .flat_map(|&e| self.edge_boundary[e].iter().copied())
            .collect()
    }

    /// Vertices in the closure of 3-cell o.
    pub fn domain_vertices(&self, o: CellId) -> BTreeSet<CellId> {
        self.domain_boundary[o]
            .iter()
            .flat_map(|&f| self.face_vertices(f))
            .collect()
    }

    /// 1-cells in the closure of 3-cell o.
    pub fn domain_edges(&self, o: CellId) -> BTreeSet<CellId> {
        self.domain_boundary[o]
            .iter()
            .flat_map(|&f| self.face_boundary[f].iter().copied())
            .collect()
    }

    /// Lists every violated invariant; an empty report means valid.
    pub fn validate(&self) -> Vec<Cell3Issue> {
        let mut issues = Vec::new();

        for v in 0..self.n_vertices {
            let labels = self.vertex_labels(v);
            if labels.len() != 3 {
                issues.push(Cell3Issue::VertexCorankViolation { vertex: v, labels });
            }
        }

        // Octahedral link counts.
        for v in 0..self.n_vertices {
            let edge_ends: usize = (0..self.edge_boundary.len())
                .map(|e| self.end_mult(e, v))
                .sum();
            let mut face_corners = 0usize;
            let mut malformed = false;
            for f in 0..self.face_boundary.len() {
                match self.corner_mult2(f, v) {
                    Ok(c) => face_corners += c,
                    Err(()) => {
                        issues.push(Cell3Issue::MalformedCorner {
                            cell_dim: 2,
                            cell: f,
                            vertex: v,
                        });
                        malformed = true;
                    }
                }
            }
            let mut domain_corners = 0usize;
            for o in 0..self.domain_boundary.len() {
                match self.corner_mult3(o, v) {
                    Ok(c) => domain_corners += c,
                    Err(()) => {
                        issues.push(Cell3Issue::MalformedCorner {
                            cell_dim: 3,
                            cell: o,
                            vertex: v,
                        });
                        malformed = true;
                    }
                }
            }
            if !malformed && (edge_ends != 6 || face_corners != 12 || domain_corners != 8) {
                issues.push(Cell3Issue::LinkViolation {
                    vertex: v,
                    edge_ends,
                    face_corners,
                    domain_corners,
                });
            }
        }

        // Every 2-cell bounds exactly two 3-cells, and never one twice.
        for f in 0..self.face_boundary.len() {
            let mut total = 0usize;
            let mut repeated = false;
            for bnd in &self.domain_boundary {
                let m = bnd.iter().filter(|&&x| x == f).count();
                total += m;
                if m > 1 {
                    repeated = true;
                }
            }
            if total != 2 || repeated {
                issues.push(Cell3Issue::TwoCellBoundingViolation {
                    cell: f,
                    incidences: total,
                    repeated,
                });
            }
        }

        // Each 3-cell closure is a simple polytope: every 0-cell of it meets
        // exactly 3 of its facets.
        for o in 0..self.domain_boundary.len() {
            for &v in &self.domain_vertices(o) {
                let facets = self.domain_boundary[o]
                    .iter()
                    .filter(|&&f| self.face_vertices(f).contains(&v))
                    .count();
                if facets != 3 {
                    issues.push(Cell3Issue::NonSimpleCorner {
                        domain: o,
                        vertex: v,
                        facets,
                    });
                }
            }
        }

        issues
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_references() {
        let err = CellComplex3::new(1, vec![[0, 1]], vec![vec![0]], vec![vec![0]], vec![0]);
        assert_eq!(
            err,
            Err(Cell3Error::BadBoundaryReference {
                dim: 1,
                cell: 0,
                reference: 1
            })
        );
        assert!(CellComplex3::new(0, vec![], vec![], vec![], vec![]).is_err());
    }

    #[test]
    fn corank_violation_detected() {
        // A lone theta-like scrap: one vertex on two labels only.
        let c = CellComplex3::new(
            1,
            vec![[0, 0]],
            vec![vec![0], vec![0]],
            vec![vec![0, 1]],
            vec![0, 1],
        )
        .unwrap();
        let issues = c.validate();
        assert!(issues
            .iter()
            .any(|i| matches!(i, Cell3Issue::VertexCorankViolation { vertex: 0, .. })));
    }
}
