//! Concentric-circle surgery on surface complexes: inserting two circles
//! around a fixed point splits each of the four local domains into three;
//! removal is the exact inverse.

use super::{choose_sphere_vectors, MoveError, SpherePair};
use crate::complex::{DartId, LoopId, SurfaceComplex, VertexId};
use crate::fan::{fan_compatible_2d, Fan};
use crate::scalar::Scalar;

/// Inserts two concentric circles around vertex `x`. The outer circle gets
/// `w_prime` (or, in auto mode, the sum of the two corner vectors); the
/// inner circle gets the opposite vector, perturbed while it coincides in
/// direction with an existing one. Output is re-verified compatible.
pub fn insert_spheres_2d<S: Scalar>(
    c: &SurfaceComplex,
    fan: &Fan<S>,
    x: VertexId,
    w_prime: Option<Vec<S>>,
) -> Result<(SurfaceComplex, Fan<S>, SpherePair<S>), MoveError> {
    if x >= c.n_vertices() {
        return Err(MoveError::NotAVertex(x));
    }
    let report = fan_compatible_2d(c, fan)?;
    if !report.compatible {
        return Err(MoveError::IncompatibleInput(
            "fan is not compatible with the complex".into(),
        ));
    }

    let (l0, l1) = c.loops_at_vertex(x);
    let (la, lb) = (l0.min(l1), l0.max(l1));
    if la == lb {
        return Err(MoveError::IncompatibleInput(
            "both strands at the vertex lie on one loop".into(),
        ));
    }
    let corner = vec![fan.vector(la)?.to_vec(), fan.vector(lb)?.to_vec()];
    let (inner_vec, outer_vec) = choose_sphere_vectors(&corner, fan, w_prime)?;

    let old_v = c.n_vertices();
    let p_in = |k: usize| old_v + k;
    let p_out = |k: usize| old_v + 4 + k;
    let dart = |v: usize, s: usize| 4 * v + s;

    let mut pairing: Vec<(DartId, DartId)> = Vec::new();
    let mut twists: Vec<usize> = Vec::new();
    let push = |pairing: &mut Vec<(DartId, DartId)>,
                twists: &mut Vec<usize>,
                pair: (DartId, DartId),
                twisted: bool| {
        if twisted {
            twists.push(pairing.len());
        }
        pairing.push(pair);
    };

    // Edges away from x survive unchanged.
    for (e, &(a, b)) in c.edges().iter().enumerate() {
        if c.vertex_of(a) != x && c.vertex_of(b) != x {
            push(&mut pairing, &mut twists, (a, b), c.edge_twisted(e));
        }
    }
    // Each strand end at x is rerouted through one inner and one outer
    // crossing; the original edge's twist stays on the far segment.
    for k in 0..4 {
        let d = dart(x, k);
        let partner = c.alpha(d);
        push(&mut pairing, &mut twists, (d, dart(p_in(k), 0)), false);
        push(
            &mut pairing,
            &mut twists,
            (dart(p_in(k), 2), dart(p_out(k), 0)),
            false,
        );
        let twisted = c.edge_twisted(c.edge_of(d));
        if c.vertex_of(partner) != x {
            push(
                &mut pairing,
                &mut twists,
                (dart(p_out(k), 2), partner),
                twisted,
            );
        } else {
            let l = c.slot_of(partner);
            if k < l {
                push(
                    &mut pairing,
                    &mut twists,
                    (dart(p_out(k), 2), dart(p_out(l), 2)),
                    twisted,
                );
            }
        }
    }
    // Circle arcs: slot 3 points toward the next strand in rotation order.
    for k in 0..4 {
        let next = (k + 1) % 4;
        push(
            &mut pairing,
            &mut twists,
            (dart(p_in(k), 3), dart(p_in(next), 1)),
            false,
        );
        push(
            &mut pairing,
            &mut twists,
            (dart(p_out(k), 3), dart(p_out(next), 1)),
            false,
        );
    }

    let rotations: Vec<Vec<DartId>> = (0..old_v + 8)
        .map(|v| (0..4).map(|s| dart(v, s)).collect())
        .collect();
    let out = SurfaceComplex::build(&rotations, &pairing, &twists, c.surface())?;

    let inner_label = out.loop_of_dart(dart(p_in(0), 1));
    let outer_label = out.loop_of_dart(dart(p_out(0), 1));
    if inner_label != c.n_loops() || outer_label != c.n_loops() + 1 {
        return Err(MoveError::Internal(format!(
            "unexpected circle labels {inner_label}, {outer_label}"
        )));
    }

    let mut new_fan = fan.clone();
    new_fan.insert(inner_label, inner_vec.clone())?;
    new_fan.insert(outer_label, outer_vec.clone())?;
    let verify = fan_compatible_2d(&out, &new_fan)?;
    if !verify.compatible {
        return Err(MoveError::Internal(
            "inserted complex failed fan compatibility".into(),
        ));
    }

    let pair = SpherePair {
        vertex: x,
        inner_label,
        outer_label,
        inner_vector: inner_vec,
        outer_vector: outer_vec,
    };
    Ok((out, new_fan, pair))
}

/// Removes a concentric circle pair, restoring the complex that
/// `insert_spheres_2d` started from, cell for cell when applied directly to
/// its output. The pattern is detected structurally, so pairs read from
/// files work too.
pub fn remove_spheres_2d<S: Scalar>(
    c: &SurfaceComplex,
    fan: &Fan<S>,
    pair: &SpherePair<S>,
) -> Result<(SurfaceComplex, Fan<S>), MoveError> {
    let x = pair.vertex;
    if x >= c.n_vertices() {
        return Err(MoveError::NotAVertex(x));
    }
    if pair.inner_label >= c.n_loops() || pair.outer_label >= c.n_loops() {
        return Err(MoveError::NotASpherePair(
            "circle label out of range".into(),
        ));
    }

    // Walk the four radial chains x -> q_k (inner) -> r_k (outer) -> far.
    let mut inner_vertices = Vec::new();
    let mut outer_vertices = Vec::new();
    let mut far_darts = Vec::new();
    let mut far_twists = Vec::new();
    for k in 0..4 {
        let d = 4 * x + k;
        let p1 = c.alpha(d);
        let q = c.vertex_of(p1);
        if q == x {
            return Err(MoveError::NotASpherePair(format!(
                "slot {k} loops back to the center"
            )));
        }
        if c.loop_of_dart(c.sigma(p1)) != pair.inner_label {
            return Err(MoveError::NotASpherePair(format!(
                "slot {k} does not cross the inner circle first"
            )));
        }
        let out1 = c.sigma2(p1);
        let p2 = c.alpha(out1);
        let r = c.vertex_of(p2);
        if r == x || r == q {
            return Err(MoveError::NotASpherePair(format!(
                "slot {k} chain collapses"
            )));
        }
        if c.loop_of_dart(c.sigma(p2)) != pair.outer_label {
            return Err(MoveError::NotASpherePair(format!(
                "slot {k} does not cross the outer circle second"
            )));
        }
        let far_stub = c.sigma2(p2);
        inner_vertices.push(q);
        outer_vertices.push(r);
        far_darts.push(c.alpha(far_stub));
        far_twists.push(c.edge_twisted(c.edge_of(far_stub)));
    }
    for list in [&inner_vertices, &outer_vertices] {
        let mut sorted = list.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != 4 {
            return Err(MoveError::NotASpherePair(
                "circle vertices are not distinct".into(),
            ));
        }
    }
    // The circles must consist of exactly these vertices and four edges each.
    for (label, vertices) in [
        (pair.inner_label, &inner_vertices),
        (pair.outer_label, &outer_vertices),
    ] {
        let lp = &c.loops()[label];
        if lp.edge_count() != 4 {
            return Err(MoveError::NotASpherePair(format!(
                "circle {label} has wrong length"
            )));
        }
        let mut lv = lp.vertices.clone();
        lv.sort_unstable();
        let mut expect = vertices.clone();
        expect.sort_unstable();
        if lv != expect {
            return Err(MoveError::NotASpherePair(format!(
                "circle {label} does not stay around the center vertex"
            )));
        }
    }

    // Far darts must leave the excised disk entirely.
    let removed: Vec<VertexId> = {
        let mut v: Vec<VertexId> = inner_vertices
            .iter()
            .chain(&outer_vertices)
            .copied()
            .collect();
        v.sort_unstable();
        v
    };
    for &fd in &far_darts {
        let v = c.vertex_of(fd);
        if removed.binary_search(&v).is_ok() {
            return Err(MoveError::NotASpherePair(
                "outer stub re-enters the sphere pair".into(),
            ));
        }
    }

    // Each face outside the outer circle must keep at least 3 corners after
    // the annulus collapses back onto the center vertex.
    for (e, _) in c.edges().iter().enumerate() {
        if c.loop_of_edge(e) != pair.outer_label {
            continue;
        }
        let (fa, fb) = c.edge_faces(e);
        for f in [fa, fb] {
            let touches_inner = c.faces()[f]
                .states
                .iter()
                .any(|s| c.loop_of_dart(s.dart) == pair.inner_label);
            if !touches_inner && c.faces()[f].len() < 4 {
                return Err(MoveError::WouldCreateDegenerateDomain(f));
            }
        }
    }

    // Rebuild without the eight circle vertices.
    let keep: Vec<VertexId> = (0..c.n_vertices())
        .filter(|v| removed.binary_search(v).is_err())
        .collect();
    let mut new_id = vec![usize::MAX; c.n_vertices()];
    for (i, &v) in keep.iter().enumerate() {
        new_id[v] = i;
    }
    let map_dart = |d: DartId| 4 * new_id[d / 4] + d % 4;

    let mut pairing: Vec<(DartId, DartId)> = Vec::new();
    let mut twists: Vec<usize> = Vec::new();
    for (e, &(a, b)) in c.edges().iter().enumerate() {
        let (va, vb) = (c.vertex_of(a), c.vertex_of(b));
        if removed.binary_search(&va).is_ok() || removed.binary_search(&vb).is_ok() {
            continue;
        }
        if va == x || vb == x {
            // Radial stubs are rebuilt below.
            continue;
        }
        if c.edge_twisted(e) {
            twists.push(pairing.len());
        }
        pairing.push((map_dart(a), map_dart(b)));
    }
    for k in 0..4 {
        let d = 4 * x + k;
        let far = far_darts[k];
        if c.vertex_of(far) == x && c.slot_of(far) < k {
            continue; // Self-loop through the pair, already reconnected.
        }
        if far_twists[k] {
            twists.push(pairing.len());
        }
        pairing.push((map_dart(d), map_dart(far)));
    }
    let rotations: Vec<Vec<DartId>> = (0..keep.len())
        .map(|v| (0..4).map(|s| 4 * v + s).collect())
        .collect();
    let out = SurfaceComplex::build(&rotations, &pairing, &twists, c.surface())?;

    // Rebuild the fan by matching surviving loops through representative darts.
    let mut new_fan_entries: Vec<(LoopId, Vec<S>)> = Vec::new();
    for lp in out.loops() {
        let new_dart = lp.darts[0];
        let old_vertex = keep[new_dart / 4];
        let old_dart = 4 * old_vertex + new_dart % 4;
        let old_loop = c.loop_of_dart(old_dart);
        if old_loop == pair.inner_label || old_loop == pair.outer_label {
            return Err(MoveError::Internal("circle loop survived removal".into()));
        }
        new_fan_entries.push((lp.id, fan.vector(old_loop)?.to_vec()));
    }
    if new_fan_entries.len() + 2 != fan.len() {
        return Err(MoveError::Internal(
            "loop count after removal is off".into(),
        ));
    }
    let new_fan = Fan::new(fan.dimension(), new_fan_entries)?;
    Ok((out, new_fan))
}

/// Applies `insert_spheres_2d` k times at the lowest vertex id.
pub fn augment_surface<S: Scalar>(
    c: &SurfaceComplex,
    fan: &Fan<S>,
    k: usize,
) -> Result<(SurfaceComplex, Fan<S>), MoveError> {
    let mut state = (c.clone(), fan.clone());
    for _ in 0..k {
        let (next_c, next_fan, _) = insert_spheres_2d(&state.0, &state.1, 0, None)?;
        state = (next_c, next_fan);
    }
    Ok(state)
}
