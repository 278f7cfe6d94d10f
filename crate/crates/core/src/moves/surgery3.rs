//! Concentric-sphere surgery on 3D incidence complexes. Each of the eight
//! domains at a corner splits into a tetrahedral piece, a shell piece and
//! the truncated original; the two new spheres are cut into octahedral
//! patterns by the three hypersurfaces through the corner.
//!
//! Modified cells keep their ids (the original edge keeps its far segment,
//! faces and domains keep their truncated parts); all new cells are
//! appended, so removing the pair right after inserting it restores the
//! complex cell for cell.

use std::collections::BTreeMap;

use super::{choose_sphere_vectors, MoveError, SpherePair};
use crate::complex::cell3::{CellComplex3, CellId};
use crate::fan::{fan_compatible_3d, Fan};
use crate::scalar::Scalar;

/// Link of a corner: edge ends, face corners (pairs of edge ends), domain
/// corners (triples of face corners), all with multiplicity one.
struct CornerLink {
    /// (edge id, far endpoint).
    edge_ends: Vec<(CellId, CellId)>,
    /// (face id, indices into edge_ends of its two edges at the corner).
    face_corners: Vec<(CellId, [usize; 2])>,
    /// (domain id, indices into face_corners of its three faces there).
    domain_corners: Vec<(CellId, [usize; 3])>,
}

fn corner_link(c: &CellComplex3, x: CellId) -> Result<CornerLink, MoveError> {
    let mut edge_ends = Vec::new();
    for e in 0..c.n_cells(1) {
        let ends = c.edge_endpoints(e);
        match (ends[0] == x, ends[1] == x) {
            (true, true) => {
                return Err(MoveError::IncompatibleInput(format!(
                    "edge {e} has both endpoints at the corner"
                )))
            }
            (true, false) => edge_ends.push((e, ends[1])),
            (false, true) => edge_ends.push((e, ends[0])),
            (false, false) => {}
        }
    }
    if edge_ends.len() != 6 {
        return Err(MoveError::IncompatibleInput(format!(
            "corner {x} has {} edge ends, expected 6",
            edge_ends.len()
        )));
    }
    let end_index: BTreeMap<CellId, usize> = edge_ends
        .iter()
        .enumerate()
        .map(|(i, &(e, _))| (e, i))
        .collect();

    let mut face_corners = Vec::new();
    for f in 0..c.n_cells(2) {
        let mine: Vec<usize> = c
            .face_edges(f)
            .iter()
            .filter_map(|e| end_index.get(e).copied())
            .collect();
        match mine.len() {
            0 => {}
            2 => face_corners.push((f, [mine[0], mine[1]])),
            n => {
                return Err(MoveError::IncompatibleInput(format!(
                    "face {f} meets the corner through {n} edges"
                )))
            }
        }
    }
    if face_corners.len() != 12 {
        return Err(MoveError::IncompatibleInput(format!(
            "corner {x} has {} face corners, expected 12",
            face_corners.len()
        )));
    }
    let fc_index: BTreeMap<CellId, usize> = face_corners
        .iter()
        .enumerate()
        .map(|(i, &(f, _))| (f, i))
        .collect();

    let mut domain_corners = Vec::new();
    for o in 0..c.n_cells(3) {
        let mine: Vec<usize> = c
            .domain_facets(o)
            .iter()
            .filter_map(|f| fc_index.get(f).copied())
            .collect();
        match mine.len() {
            0 => {}
            3 => domain_corners.push((o, [mine[0], mine[1], mine[2]])),
            n => {
                return Err(MoveError::IncompatibleInput(format!(
                    "domain {o} meets the corner through {n} faces"
                )))
            }
        }
    }
    if domain_corners.len() != 8 {
        return Err(MoveError::IncompatibleInput(format!(
            "corner {x} has {} domain corners, expected 8",
            domain_corners.len()
        )));
    }
    Ok(CornerLink {
        edge_ends,
        face_corners,
        domain_corners,
    })
}

/// Inserts two concentric spheres around corner `x` of a 3D complex.
pub fn insert_spheres_3d<S: Scalar>(
    c: &CellComplex3,
    fan: &Fan<S>,
    x: CellId,
    w_prime: Option<Vec<S>>,
) -> Result<(CellComplex3, Fan<S>, SpherePair<S>), MoveError> {
    if x >= c.n_cells(0) {
        return Err(MoveError::NotAVertex(x));
    }
    let report = fan_compatible_3d(c, fan)?;
    if !report.compatible {
        return Err(MoveError::IncompatibleInput(
            "fan is not compatible with the complex".into(),
        ));
    }
    let link = corner_link(c, x)?;

    let corner_labels = c.vertex_labels(x);
    if corner_labels.len() != 3 {
        return Err(MoveError::IncompatibleInput(format!(
            "corner {x} lies on {} hypersurfaces",
            corner_labels.len()
        )));
    }
    let corner_vectors: Result<Vec<Vec<S>>, _> = corner_labels
        .iter()
        .map(|&l| fan.vector(l).map(<[S]>::to_vec))
        .collect();
    let (inner_vec, outer_vec) = choose_sphere_vectors(&corner_vectors?, fan, w_prime)?;
    let inner_label = fan.labels().max().map_or(0, |m| m + 1);
    let outer_label = inner_label + 1;

    let n0 = c.n_cells(0);
    let n1 = c.n_cells(1);
    let n2 = c.n_cells(2);
    // New 0-cells: inner then outer crossing per edge end.
    let p_in = |end: usize| n0 + end;
    let p_out = |end: usize| n0 + 6 + end;
    // New 1-cells: stub x->inner, shell inner->outer per end; then per
    // sphere one arc per face corner.
    let e_stub = |end: usize| n1 + end;
    let e_shell = |end: usize| n1 + 6 + end;
    let e_arc_in = |fc: usize| n1 + 12 + fc;
    let e_arc_out = |fc: usize| n1 + 24 + fc;
    // New 2-cells: tip and shell piece per face corner, then one sphere
    // patch per domain corner and sphere.
    let f_tip = |fc: usize| n2 + fc;
    let f_shell = |fc: usize| n2 + 12 + fc;
    let f_patch_in = |dc: usize| n2 + 24 + dc;
    let f_patch_out = |dc: usize| n2 + 32 + dc;

    let mut edges = c.edge_boundaries().to_vec();
    let mut faces = c.face_boundaries().to_vec();
    let mut labels: Vec<usize> = (0..n2).map(|f| c.face_label(f)).collect();
    let mut domains = c.domain_boundaries().to_vec();

    // The original edge keeps its far segment; one stub per edge end. The
    // center endpoint is replaced in place to keep the endpoint order.
    for (end, &(e, _)) in link.edge_ends.iter().enumerate() {
        let slot = edges[e]
            .iter()
            .position(|&v| v == x)
            .expect("end at corner");
        edges[e][slot] = p_out(end);
        edges.push([x, p_in(end)]); // e_stub(end)
    }
    for end in 0..6 {
        edges.push([p_in(end), p_out(end)]); // e_shell(end)
    }
    debug_assert_eq!(edges.len(), n1 + 12);
    for &(_, [a, b]) in &link.face_corners {
        edges.push([p_in(a), p_in(b)]); // e_arc_in
    }
    for &(_, [a, b]) in &link.face_corners {
        edges.push([p_out(a), p_out(b)]); // e_arc_out
    }

    // Truncated faces gain their outer arc; tips and shells are new.
    for (fc, &(f, _)) in link.face_corners.iter().enumerate() {
        faces[f].push(e_arc_out(fc));
    }
    for (fc, &(f, [a, b])) in link.face_corners.iter().enumerate() {
        faces.push(vec![e_stub(a), e_stub(b), e_arc_in(fc)]);
        labels.push(c.face_label(f));
    }
    for (fc, &(f, [a, b])) in link.face_corners.iter().enumerate() {
        faces.push(vec![e_shell(a), e_shell(b), e_arc_in(fc), e_arc_out(fc)]);
        labels.push(c.face_label(f));
    }
    for &(_, fcs) in &link.domain_corners {
        faces.push(fcs.iter().map(|&fc| e_arc_in(fc)).collect());
        labels.push(inner_label);
    }
    for &(_, fcs) in &link.domain_corners {
        faces.push(fcs.iter().map(|&fc| e_arc_out(fc)).collect());
        labels.push(outer_label);
    }

    // Truncated domains gain their outer patch; tetra and shell pieces are new.
    for (dc, &(o, _)) in link.domain_corners.iter().enumerate() {
        domains[o].push(f_patch_out(dc));
    }
    for (dc, &(_, fcs)) in link.domain_corners.iter().enumerate() {
        let mut bnd: Vec<CellId> = fcs.iter().map(|&fc| f_tip(fc)).collect();
        bnd.push(f_patch_in(dc));
        domains.push(bnd);
    }
    for (dc, &(_, fcs)) in link.domain_corners.iter().enumerate() {
        let mut bnd: Vec<CellId> = fcs.iter().map(|&fc| f_shell(fc)).collect();
        bnd.push(f_patch_in(dc));
        bnd.push(f_patch_out(dc));
        domains.push(bnd);
    }

    let out = CellComplex3::new(n0 + 12, edges, faces, domains, labels)?;
    let issues = out.validate();
    if !issues.is_empty() {
        return Err(MoveError::Internal(format!(
            "inserted complex invalid: {issues:?}"
        )));
    }
    let mut new_fan = fan.clone();
    new_fan.insert(inner_label, inner_vec.clone())?;
    new_fan.insert(outer_label, outer_vec.clone())?;
    let verify = fan_compatible_3d(&out, &new_fan)?;
    if !verify.compatible {
        return Err(MoveError::Internal(
            "inserted complex failed fan compatibility".into(),
        ));
    }
    Ok((
        out,
        new_fan,
        SpherePair {
            vertex: x,
            inner_label,
            outer_label,
            inner_vector: inner_vec,
            outer_vector: outer_vec,
        },
    ))
}

/// Removes a concentric sphere pair from a 3D complex, by structural
/// pattern detection on the two labels.
#[allow(clippy::needless_range_loop)]
pub fn remove_spheres_3d<S: Scalar>(
    c: &CellComplex3,
    fan: &Fan<S>,
    pair: &SpherePair<S>,
) -> Result<(CellComplex3, Fan<S>), MoveError> {
    let x = pair.vertex;
    if x >= c.n_cells(0) {
        return Err(MoveError::NotAVertex(x));
    }
    // Patch 2-cells, arc 1-cells and 0-cells of one sphere.
    type SphereCells = (Vec<CellId>, Vec<CellId>, Vec<CellId>);
    let sphere = |label: usize| -> Result<SphereCells, MoveError> {
        let patches: Vec<CellId> = (0..c.n_cells(2))
            .filter(|&f| c.face_label(f) == label)
            .collect();
        if patches.len() != 8 {
            return Err(MoveError::NotASpherePair(format!(
                "label {label} has {} patches, expected 8",
                patches.len()
            )));
        }
        let mut arcs: Vec<CellId> = patches
            .iter()
            .flat_map(|&f| c.face_edges(f).to_vec())
            .collect();
        arcs.sort_unstable();
        arcs.dedup();
        if arcs.len() != 12 {
            return Err(MoveError::NotASpherePair(format!(
                "sphere {label} has {} arcs, expected 12",
                arcs.len()
            )));
        }
        let mut vertices: Vec<CellId> = arcs
            .iter()
            .flat_map(|&e| c.edge_endpoints(e).to_vec())
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() != 6 {
            return Err(MoveError::NotASpherePair(format!(
                "sphere {label} has {} vertices, expected 6",
                vertices.len()
            )));
        }
        Ok((patches, arcs, vertices))
    };
    let (patch_in, arc_in, vert_in) = sphere(pair.inner_label)?;
    let (patch_out, arc_out, vert_out) = sphere(pair.outer_label)?;

    let on = |set: &[CellId], v: CellId| set.binary_search(&v).is_ok();
    // Stubs x -> inner sphere, shells inner -> outer, far edges out.
    let mut stubs = Vec::new();
    let mut shells = Vec::new();
    let mut far_edges = Vec::new();
    for e in 0..c.n_cells(1) {
        if arc_in.binary_search(&e).is_ok() || arc_out.binary_search(&e).is_ok() {
            continue;
        }
        let [a, b] = c.edge_endpoints(e);
        let class = (
            a == x || b == x,
            on(&vert_in, a) || on(&vert_in, b),
            on(&vert_out, a) || on(&vert_out, b),
        );
        match class {
            (true, true, false) => stubs.push(e),
            (false, true, true) => shells.push(e),
            (false, false, true) => far_edges.push(e),
            (false, false, false) => {}
            _ => {
                return Err(MoveError::NotASpherePair(format!(
                    "edge {e} touches the sphere pair unexpectedly"
                )))
            }
        }
    }
    if stubs.len() != 6 || shells.len() != 6 || far_edges.len() != 6 {
        return Err(MoveError::NotASpherePair(format!(
            "found {} stubs, {} shells, {} far edges",
            stubs.len(),
            shells.len(),
            far_edges.len()
        )));
    }

    // Classify 2-cells touching the spheres.
    let mut tips = Vec::new();
    let mut shell_faces = Vec::new();
    let mut truncated = Vec::new(); // faces to strip of their outer arc
    for f in 0..c.n_cells(2) {
        if c.face_label(f) == pair.inner_label || c.face_label(f) == pair.outer_label {
            continue;
        }
        let bnd = c.face_edges(f);
        let n_stub = bnd
            .iter()
            .filter(|e| stubs.binary_search(e).is_ok())
            .count();
        let n_shell = bnd
            .iter()
            .filter(|e| shells.binary_search(e).is_ok())
            .count();
        let n_in = bnd
            .iter()
            .filter(|e| arc_in.binary_search(e).is_ok())
            .count();
        let n_out = bnd
            .iter()
            .filter(|e| arc_out.binary_search(e).is_ok())
            .count();
        match (n_stub, n_shell, n_in, n_out) {
            (2, 0, 1, 0) => tips.push(f),
            (0, 2, 1, 1) => shell_faces.push(f),
            (0, 0, 0, 1) => truncated.push(f),
            (0, 0, 0, 0) => {}
            _ => {
                return Err(MoveError::NotASpherePair(format!(
                    "face {f} touches the spheres unexpectedly"
                )))
            }
        }
    }
    if tips.len() != 12 || shell_faces.len() != 12 || truncated.len() != 12 {
        return Err(MoveError::NotASpherePair(format!(
            "found {} tips, {} shells, {} truncated faces",
            tips.len(),
            shell_faces.len(),
            truncated.len()
        )));
    }

    // Classify 3-cells.
    let mut dead_domains = Vec::new();
    let mut truncated_domains = Vec::new();
    for o in 0..c.n_cells(3) {
        let bnd = c.domain_facets(o);
        let has_in = bnd.iter().any(|f| patch_in.binary_search(f).is_ok());
        let has_out = bnd.iter().any(|f| patch_out.binary_search(f).is_ok());
        let has_tip = bnd.iter().any(|f| tips.binary_search(f).is_ok());
        match (has_in, has_out, has_tip) {
            (true, _, _) => dead_domains.push(o),
            (false, true, false) => truncated_domains.push(o),
            (false, false, false) => {}
            _ => return Err(MoveError::NotASpherePair(format!("domain {o} malformed"))),
        }
    }
    if dead_domains.len() != 16 || truncated_domains.len() != 8 {
        return Err(MoveError::NotASpherePair(format!(
            "found {} sphere domains and {} truncated domains",
            dead_domains.len(),
            truncated_domains.len()
        )));
    }
    // Truncated domains must keep at least 4 facets once the patch is gone.
    for &o in &truncated_domains {
        let live = c
            .domain_facets(o)
            .iter()
            .filter(|f| patch_out.binary_search(f).is_err())
            .count();
        if live < 4 {
            return Err(MoveError::WouldCreateDegenerateDomain(o));
        }
    }

    // Rebuild with compacted ids.
    let dead_v: Vec<CellId> = {
        let mut v: Vec<CellId> = vert_in.iter().chain(&vert_out).copied().collect();
        v.sort_unstable();
        v
    };
    let dead_e: Vec<CellId> = {
        let mut v: Vec<CellId> = arc_in
            .iter()
            .chain(&arc_out)
            .chain(&stubs)
            .chain(&shells)
            .copied()
            .collect();
        v.sort_unstable();
        v
    };
    let dead_f: Vec<CellId> = {
        let mut v: Vec<CellId> = patch_in
            .iter()
            .chain(&patch_out)
            .chain(&tips)
            .chain(&shell_faces)
            .copied()
            .collect();
        v.sort_unstable();
        v
    };
    let compact = |dead: &[CellId], n: usize| -> Vec<Option<usize>> {
        let mut map = vec![None; n];
        let mut next = 0;
        for (i, slot) in map.iter_mut().enumerate() {
            if dead.binary_search(&i).is_err() {
                *slot = Some(next);
                next += 1;
            }
        }
        map
    };
    let map_v = compact(&dead_v, c.n_cells(0));
    let map_e = compact(&dead_e, c.n_cells(1));
    let map_f = compact(&dead_f, c.n_cells(2));

    let mut edges = Vec::new();
    for e in 0..c.n_cells(1) {
        if map_e[e].is_none() {
            continue;
        }
        let [a, b] = c.edge_endpoints(e);
        // Far edges reattach to the center vertex, keeping endpoint order.
        let fix = |v: CellId| if on(&vert_out, v) { x } else { v };
        edges.push([map_v[fix(a)].unwrap(), map_v[fix(b)].unwrap()]);
    }
    let mut faces = Vec::new();
    let mut labels = Vec::new();
    for f in 0..c.n_cells(2) {
        if map_f[f].is_none() {
            continue;
        }
        faces.push(
            c.face_edges(f)
                .iter()
                .filter_map(|&e| map_e[e])
                .collect::<Vec<_>>(),
        );
        labels.push(c.face_label(f));
    }
    let mut domains = Vec::new();
    for o in 0..c.n_cells(3) {
        if dead_domains.binary_search(&o).is_ok() {
            continue;
        }
        domains.push(
            c.domain_facets(o)
                .iter()
                .filter_map(|&f| map_f[f])
                .collect::<Vec<_>>(),
        );
    }
    let out = CellComplex3::new(c.n_cells(0) - 12, edges, faces, domains, labels)?;
    let issues = out.validate();
    if !issues.is_empty() {
        return Err(MoveError::Internal(format!(
            "removal left an invalid complex: {issues:?}"
        )));
    }
    let mut new_fan = fan.clone();
    new_fan.remove(pair.inner_label);
    new_fan.remove(pair.outer_label);
    Ok((out, new_fan))
}

/// Applies `insert_spheres_3d` k times at corner 0.
pub fn augment_cell3<S: Scalar>(
    c: &CellComplex3,
    fan: &Fan<S>,
    k: usize,
) -> Result<(CellComplex3, Fan<S>), MoveError> {
    let mut state = (c.clone(), fan.clone());
    for _ in 0..k {
        let (next_c, next_fan, _) = insert_spheres_3d(&state.0, &state.1, 0, None)?;
        state = (next_c, next_fan);
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::super::dim3::generate_s3;
    use super::*;
    use crate::Rat;

    #[test]
    fn insert_into_s3_adds_sixteen_domains() {
        let (c, fan) = generate_s3::<Rat>();
        let (c2, fan2, pair) = insert_spheres_3d(&c, &fan, 0, None).unwrap();
        assert_eq!(c2.n_cells(3), 48);
        assert_eq!(c2.n_cells(0), 36);
        assert_eq!(c2.euler_characteristic(), 0);
        assert_eq!(fan2.len(), 7);
        assert_eq!(pair.inner_label, 5);
        assert_eq!(pair.outer_label, 6);
        assert!(c2.validate().is_empty());
    }

    #[test]
    fn insert_then_remove_is_identity_3d() {
        let (c, fan) = generate_s3::<Rat>();
        let (c2, fan2, pair) = insert_spheres_3d(&c, &fan, 0, None).unwrap();
        let (c3, fan3) = remove_spheres_3d(&c2, &fan2, &pair).unwrap();
        assert_eq!(c3, c);
        assert_eq!(fan3, fan);
    }

    #[test]
    fn augmentation_adds_sixteen_per_step() {
        use num_rational::Rational64;
        let (c, fan) = generate_s3::<Rational64>();
        let (c2, fan2) = augment_cell3(&c, &fan, 2).unwrap();
        assert_eq!(c2.n_cells(3), 32 + 2 * 16);
        assert_eq!(fan2.len(), 9);
        assert!(c2.validate().is_empty());
    }

    #[test]
    fn corner_vectors_opposite_and_interior() {
        let (c, fan) = generate_s3::<Rat>();
        let (_, _, pair) = insert_spheres_3d(&c, &fan, 0, None).unwrap();
        // Corner 0 is a torus vertex on labels {0, 1, 3}: vectors
        // (-1,0,0), (1,-1,0), (1,0,-1); their sum is the outer vector.
        assert_eq!(
            pair.outer_vector,
            vec![Rat::from_int(1), Rat::from_int(-1), Rat::from_int(-1)]
        );
        assert_eq!(
            pair.inner_vector,
            vec![Rat::from_int(-1), Rat::from_int(1), Rat::from_int(1)]
        );
    }
}
