//! Free involutions and quotient complexes.
//!
//! A surface involution is given at the dart level; a 3D involution is given
//! cell-wise per dimension. Quotients keep the lowest-id representative of
//! every orbit, so cell counts halve exactly in each dimension.

use thiserror::Error;

use super::cell3::{Cell3Error, CellComplex3, CellId};
use super::{ComplexError, DartId, SurfaceComplex, SurfaceKind, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("map is not an involution at cell {cell} (dimension {dim})")]
    NotInvolutive { dim: usize, cell: usize },
    #[error("involution fixes cell {cell} (dimension {dim})")]
    NotFree { dim: usize, cell: usize },
    #[error("map does not preserve incidences at cell {cell} (dimension {dim})")]
    NotIncidencePreserving { dim: usize, cell: usize },
    #[error("quotient of a twisted complex is not supported")]
    TwistedInput,
    #[error("quotient violated a structural invariant: {0}")]
    QuotientInvariant(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Cell3(#[from] Cell3Error),
}

/// Dart-level involution of a surface complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceInvolution {
    pub dart_map: Vec<DartId>,
}

impl SurfaceInvolution {
    pub fn vertex_image(&self, v: VertexId) -> VertexId {
        self.dart_map[4 * v] / 4
    }
}

/// Validates the involution on `c`: involutive, free on vertices/edges/faces,
/// rotation- and pairing-preserving. Returns the global rotation sense
/// (`true` when orientation-preserving).
fn check_surface_involution(
    c: &SurfaceComplex,
    s: &SurfaceInvolution,
) -> Result<bool, InvolutionError> {
    let n = c.n_darts();
    if s.dart_map.len() != n || s.dart_map.iter().any(|&d| d >= n) {
        return Err(InvolutionError::NotIncidencePreserving { dim: 0, cell: 0 });
    }
    let m = &s.dart_map;
    for d in 0..n {
        if m[m[d]] != d {
            return Err(InvolutionError::NotInvolutive { dim: 0, cell: d });
        }
    }
    // Vertex consistency and sense.
    let mut global_sense: Option<bool> = None;
    for v in 0..c.n_vertices() {
        let images: Vec<VertexId> = (0..4).map(|slot| c.vertex_of(m[4 * v + slot])).collect();
        let u = images[0];
        if images.iter().any(|&x| x != u) {
            return Err(InvolutionError::NotIncidencePreserving { dim: 0, cell: v });
        }
        if u == v {
            return Err(InvolutionError::NotFree { dim: 0, cell: v });
        }
        let preserving = (0..4).all(|slot| m[c.sigma(4 * v + slot)] == c.sigma(m[4 * v + slot]));
        let reversing = (0..4).all(|slot| m[c.sigma(4 * v + slot)] == c.sigma_inv(m[4 * v + slot]));
        let sense = match (preserving, reversing) {
            (true, false) => true,
            (false, true) => false,
            _ => return Err(InvolutionError::NotIncidencePreserving { dim: 0, cell: v }),
        };
        match global_sense {
            None => global_sense = Some(sense),
            Some(g) if g != sense => {
                return Err(InvolutionError::NotIncidencePreserving { dim: 0, cell: v })
            }
            Some(_) => {}
        }
    }
    // Edge preservation and freeness.
    for d in 0..n {
        if m[c.alpha(d)] != c.alpha(m[d]) {
            return Err(InvolutionError::NotIncidencePreserving {
                dim: 1,
                cell: c.edge_of(d),
            });
        }
    }
    for (e, &(a, _)) in c.edges().iter().enumerate() {
        if c.edge_of(m[a]) == e {
            return Err(InvolutionError::NotFree { dim: 1, cell: e });
        }
    }
    // Face freeness (face image via corner images).
    let sense = global_sense.expect("nonempty complex");
    for f in 0..c.n_faces() {
        let corner = {
            let s0 = c.faces()[f].states[0];
            if s0.positive {
                c.sigma_inv(s0.dart)
            } else {
                s0.dart
            }
        };
        let image_corner = if sense {
            m[corner]
        } else {
            c.sigma_inv(m[corner])
        };
        if c.face_at_corner(image_corner) == f {
            return Err(InvolutionError::NotFree { dim: 2, cell: f });
        }
    }
    Ok(sense)
}

/// Quotient of an untwisted surface complex by a free involution. The
/// orientation-reversing case yields a complex with twisted edges wherever
/// the chosen orbit representatives sit on different sheets.
pub fn quotient_surface(
    c: &SurfaceComplex,
    s: &SurfaceInvolution,
) -> Result<SurfaceComplex, InvolutionError> {
    if c.has_twists() {
        return Err(InvolutionError::TwistedInput);
    }
    let sense = check_surface_involution(c, s)?;
    let m = &s.dart_map;

    // Representative vertices, in increasing id order.
    let reps: Vec<VertexId> = (0..c.n_vertices())
        .filter(|&v| v < s.vertex_image(v))
        .collect();
    let mut new_id_of_rep = vec![usize::MAX; c.n_vertices()];
    for (i, &v) in reps.iter().enumerate() {
        new_id_of_rep[v] = i;
    }
    // Quotient dart of a cover dart: the same slot on the representative.
    let quotient_dart = |d: DartId| -> DartId {
        let r = if new_id_of_rep[c.vertex_of(d)] != usize::MAX {
            d
        } else {
            m[d]
        };
        4 * new_id_of_rep[c.vertex_of(r)] + c.slot_of(r)
    };

    let mut pairing: Vec<(DartId, DartId)> = Vec::new();
    let mut twists: Vec<usize> = Vec::new();
    let mut edge_seen = vec![false; c.n_edges()];
    for (e, &(a, b)) in c.edges().iter().enumerate() {
        if edge_seen[e] {
            continue;
        }
        edge_seen[e] = true;
        edge_seen[c.edge_of(m[a])] = true;
        let qa = quotient_dart(a);
        let qb = quotient_dart(b);
        // The representative ends may come from different cover edges; with
        // an orientation-reversing involution that gluing is twisted.
        let ra = if new_id_of_rep[c.vertex_of(a)] != usize::MAX {
            a
        } else {
            m[a]
        };
        let rb = if new_id_of_rep[c.vertex_of(b)] != usize::MAX {
            b
        } else {
            m[b]
        };
        let mixed = c.edge_of(ra) != c.edge_of(rb);
        if !sense && mixed {
            twists.push(pairing.len());
        }
        pairing.push((qa, qb));
    }

    let rotations: Vec<Vec<DartId>> = (0..reps.len())
        .map(|v| (0..4).map(|slot| 4 * v + slot).collect())
        .collect();

    let declared = c.surface().map(|_| {
        let chi = c.euler_characteristic() / 2;
        if sense {
            SurfaceKind::orientable(((2 - chi) / 2) as u32)
        } else {
            SurfaceKind::non_orientable((2 - chi) as u32)
        }
    });

    let q = SurfaceComplex::build(&rotations, &pairing, &twists, declared)?;
    for (dim, half, full) in [
        (0, q.n_vertices(), c.n_vertices()),
        (1, q.n_edges(), c.n_edges()),
        (2, q.n_faces(), c.n_faces()),
    ] {
        if 2 * half != full {
            return Err(InvolutionError::QuotientInvariant(format!(
                "dimension {dim}: {full} cells quotient to {half}"
            )));
        }
    }
    Ok(q)
}

/// Cell-wise involution of a 3D incidence complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution3 {
    pub map: [Vec<CellId>; 4],
}

#[allow(clippy::needless_range_loop)]
fn check_involution3(c: &CellComplex3, s: &Involution3) -> Result<(), InvolutionError> {
    for dim in 0..4 {
        let m = &s.map[dim];
        if m.len() != c.n_cells(dim) {
            return Err(InvolutionError::NotIncidencePreserving { dim, cell: 0 });
        }
        for cell in 0..m.len() {
            if m[cell] >= m.len() || s.map[dim][m[cell]] != cell {
                return Err(InvolutionError::NotInvolutive { dim, cell });
            }
            if m[cell] == cell {
                return Err(InvolutionError::NotFree { dim, cell });
            }
        }
    }
    // Incidence preservation: boundaries map to boundaries as multisets.
    let sorted = |mut v: Vec<CellId>| {
        v.sort_unstable();
        v
    };
    for (e, ends) in c.edge_boundaries().iter().enumerate() {
        let image = sorted(ends.iter().map(|&v| s.map[0][v]).collect());
        let target = sorted(c.edge_endpoints(s.map[1][e]).to_vec());
        if image != target {
            return Err(InvolutionError::NotIncidencePreserving { dim: 1, cell: e });
        }
    }
    for (f, bnd) in c.face_boundaries().iter().enumerate() {
        let image = sorted(bnd.iter().map(|&e| s.map[1][e]).collect());
        let target = sorted(c.face_edges(s.map[2][f]).to_vec());
        if image != target {
            return Err(InvolutionError::NotIncidencePreserving { dim: 2, cell: f });
        }
        if c.face_label(f) != c.face_label(s.map[2][f]) {
            return Err(InvolutionError::NotIncidencePreserving { dim: 2, cell: f });
        }
    }
    for (o, bnd) in c.domain_boundaries().iter().enumerate() {
        let image = sorted(bnd.iter().map(|&f| s.map[2][f]).collect());
        let target = sorted(c.domain_facets(s.map[3][o]).to_vec());
        if image != target {
            return Err(InvolutionError::NotIncidencePreserving { dim: 3, cell: o });
        }
    }
    Ok(())
}

/// Quotient of a 3D complex by a free, label-preserving involution.
#[allow(clippy::needless_range_loop)]
pub fn quotient_cell3(c: &CellComplex3, s: &Involution3) -> Result<CellComplex3, InvolutionError> {
    check_involution3(c, s)?;
    let mut rep_id: [Vec<usize>; 4] = Default::default();
    let mut rep_count = [0usize; 4];
    for dim in 0..4 {
        rep_id[dim] = vec![usize::MAX; c.n_cells(dim)];
        for cell in 0..c.n_cells(dim) {
            if cell < s.map[dim][cell] {
                rep_id[dim][cell] = rep_count[dim];
                rep_count[dim] += 1;
            }
        }
        if 2 * rep_count[dim] != c.n_cells(dim) {
            return Err(InvolutionError::QuotientInvariant(format!(
                "dimension {dim}: odd orbit structure"
            )));
        }
    }
    let project = |dim: usize, cell: CellId, s: &Involution3, rep_id: &[Vec<usize>; 4]| -> CellId {
        let r = if rep_id[dim][cell] != usize::MAX {
            cell
        } else {
            s.map[dim][cell]
        };
        rep_id[dim][r]
    };

    let mut edge_boundary = Vec::with_capacity(rep_count[1]);
    for (e, ends) in c.edge_boundaries().iter().enumerate() {
        if rep_id[1][e] == usize::MAX {
            continue;
        }
        edge_boundary.push([
            project(0, ends[0], s, &rep_id),
            project(0, ends[1], s, &rep_id),
        ]);
    }
    let mut face_boundary = Vec::with_capacity(rep_count[2]);
    let mut face_label = Vec::with_capacity(rep_count[2]);
    for (f, bnd) in c.face_boundaries().iter().enumerate() {
        if rep_id[2][f] == usize::MAX {
            continue;
        }
        face_boundary.push(bnd.iter().map(|&e| project(1, e, s, &rep_id)).collect());
        face_label.push(c.face_label(f));
    }
    let mut domain_boundary = Vec::with_capacity(rep_count[3]);
    for (o, bnd) in c.domain_boundaries().iter().enumerate() {
        if rep_id[3][o] == usize::MAX {
            continue;
        }
        domain_boundary.push(bnd.iter().map(|&f| project(2, f, s, &rep_id)).collect());
    }

    Ok(CellComplex3::new(
        rep_count[0],
        edge_boundary,
        face_boundary,
        domain_boundary,
        face_label,
    )?)
}

/// The identity map as a (non-free) involution, for error-path tests.
pub fn identity_involution3(c: &CellComplex3) -> Involution3 {
    Involution3 {
        map: [
            (0..c.n_cells(0)).collect(),
            (0..c.n_cells(1)).collect(),
            (0..c.n_cells(2)).collect(),
            (0..c.n_cells(3)).collect(),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::octahedral;
    use super::*;

    /// Antipodal dart map on the octahedral complex: vertex v -> its
    /// antipode, slots reversed in orientation.
    fn octahedral_antipodal() -> SurfaceInvolution {
        let c = octahedral();
        let antipode = [1usize, 0, 3, 2, 5, 4];
        // Build neighbor tables back from the pairing to map slots.
        let mut dart_map = vec![usize::MAX; c.n_darts()];
        for v in 0..6 {
            let av = antipode[v];
            for slot in 0..4 {
                let d = 4 * v + slot;
                // Neighbor through d, then its antipode; find the slot of av
                // whose neighbor is that antipode and whose strand matches.
                let u = c.vertex_of(c.alpha(d));
                let au = antipode[u];
                let target = (0..4)
                    .map(|t| 4 * av + t)
                    .find(|&t| c.vertex_of(c.alpha(t)) == au && (t % 2) == (d % 2))
                    .expect("antipodal neighbor slot");
                dart_map[d] = target;
            }
        }
        SurfaceInvolution { dart_map }
    }

    #[test]
    fn antipodal_quotient_is_projective_plane() {
        let c = octahedral();
        let s = octahedral_antipodal();
        let q = quotient_surface(&c, &s).unwrap();
        assert_eq!(q.n_vertices(), 3);
        assert_eq!(q.n_edges(), 6);
        assert_eq!(q.n_faces(), 4);
        assert_eq!(q.euler_characteristic(), 1);
        assert!(!q.computed_orientable());
        assert_eq!(q.surface(), Some(SurfaceKind::non_orientable(1)));
    }

    #[test]
    fn identity_is_not_free() {
        let c = octahedral();
        let s = SurfaceInvolution {
            dart_map: (0..c.n_darts()).collect(),
        };
        assert!(matches!(
            quotient_surface(&c, &s),
            Err(InvolutionError::NotFree { dim: 0, .. })
        ));
    }

    #[test]
    fn non_involutive_map_rejected() {
        let c = octahedral();
        let mut dart_map: Vec<usize> = (0..c.n_darts()).map(|d| (d + 4) % c.n_darts()).collect();
        dart_map[0] = 8;
        assert!(matches!(
            quotient_surface(&c, &s_of(dart_map)),
            Err(InvolutionError::NotInvolutive { .. })
        ));
    }

    fn s_of(dart_map: Vec<usize>) -> SurfaceInvolution {
        SurfaceInvolution { dart_map }
    }

    #[test]
    fn pairing_breaking_map_rejected() {
        let c = octahedral();
        let good = octahedral_antipodal();
        // Swap two darts at one vertex: still involutive vertex-wise but no
        // longer edge-preserving or rotation-compatible.
        let mut bad = good.dart_map.clone();
        let (x, y) = (bad[0], bad[1]);
        bad[0] = y;
        bad[1] = x;
        bad[y] = 0;
        bad[x] = 1;
        assert!(matches!(
            quotient_surface(&c, &s_of(bad)),
            Err(InvolutionError::NotIncidencePreserving { .. })
        ));
    }
}
