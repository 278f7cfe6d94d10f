//! Combinatorial cell complexes encoding orbit decompositions.
//!
//! Dimension 2 uses a rotation system (combinatorial map): every vertex has
//! exactly four darts in cyclic order, and an involution pairs darts into
//! edges. Faces and loops are derived, never stored by the caller. An
//! optional per-edge twist flag extends the encoding to non-orientable
//! surfaces (quotients by orientation-reversing involutions); untwisted
//! complexes behave exactly like classical oriented maps.
//!
//! Internally dart ids are canonical: dart `4*v + s` is the dart of vertex
//! `v` in rotation slot `s`. The builder accepts arbitrary contiguous dart
//! numbering and normalizes.

pub mod cell3;
pub mod involution;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

pub type DartId = usize;
pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;
pub type LoopId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("complex must have at least one vertex")]
    EmptyComplex,
    #[error("vertex {vertex} does not have exactly 4 darts")]
    NonQuadrivalentVertex { vertex: VertexId },
    #[error("dart {dart} is dangling (missing or repeated in rotations/pairing)")]
    DanglingDart { dart: DartId },
    #[error("dart {dart} is paired with itself")]
    SelfPairedDart { dart: DartId },
    #[error("face starting at dart {dart} revisits a corner and is not a disk")]
    NonDiskFace { dart: DartId },
    #[error("declared surface has Euler characteristic {declared}, complex has {computed}")]
    SurfaceMismatch { declared: i64, computed: i64 },
    #[error("twist index {edge} out of range")]
    BadTwistIndex { edge: usize },
}

/// Declared topological type of the underlying surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceKind {
    pub orientable: bool,
    /// Genus when orientable, crosscap count otherwise.
    pub genus_or_crosscaps: u32,
}

impl SurfaceKind {
    pub fn sphere() -> Self {
        SurfaceKind {
            orientable: true,
            genus_or_crosscaps: 0,
        }
    }

    pub fn orientable(genus: u32) -> Self {
        SurfaceKind {
            orientable: true,
            genus_or_crosscaps: genus,
        }
    }

    pub fn non_orientable(crosscaps: u32) -> Self {
        SurfaceKind {
            orientable: false,
            genus_or_crosscaps: crosscaps,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        if self.orientable {
            2 - 2 * i64::from(self.genus_or_crosscaps)
        } else {
            2 - i64::from(self.genus_or_crosscaps)
        }
    }
}

/// A dart together with the side of the surface it is traversed on.
/// `positive` is the default sense; twisted edges flip it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedDart {
    pub dart: DartId,
    pub positive: bool,
}

/// A face: one closed boundary walk. For untwisted complexes the walk is the
/// orbit of `dart -> sigma(alpha(dart))` and `states` carries only positive
/// darts, which then partition the dart set over all faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    pub states: Vec<SignedDart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

/// A hypersurface loop: the through-strand trace. `darts` holds one dart per
/// edge of the loop, in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loop {
    pub id: LoopId,
    pub darts: Vec<DartId>,
    /// Vertices in traversal order; a self-crossing loop lists a vertex twice.
    pub vertices: Vec<VertexId>,
}

impl Loop {
    pub fn edge_count(&self) -> usize {
        self.darts.len()
    }
}

/// Validation findings that do not make a complex unusable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SurfaceFlag {
    /// Both darts of the edge sit on one vertex. No construction in this
    /// crate emits one, but the data model allows it.
    SelfLoopEdge {
        edge: EdgeId,
    },
    Disconnected {
        components: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceComplex {
    n_vertices: usize,
    /// Edge pairing: alpha[d] = the other dart of d's edge.
    alpha: Vec<DartId>,
    /// edges[e] = (min dart, max dart), sorted by min dart.
    edges: Vec<(DartId, DartId)>,
    edge_of_dart: Vec<EdgeId>,
    twist: Vec<bool>,
    surface: Option<SurfaceKind>,
    faces: Vec<Face>,
    /// Face occupying each corner; corner `c` spans darts `c` to `sigma(c)`.
    corner_face: Vec<FaceId>,
    loops: Vec<Loop>,
    loop_of_edge: Vec<LoopId>,
}

impl SurfaceComplex {
    /// Builds and validates a complex from per-vertex rotations (cyclic dart
    /// lists) and an edge pairing, both over an arbitrary contiguous dart
    /// numbering. `twists` lists indices into `pairing` whose edges are
    /// twisted.
    pub fn build(
        rotations: &[Vec<DartId>],
        pairing: &[(DartId, DartId)],
        twists: &[usize],
        surface: Option<SurfaceKind>,
    ) -> Result<Self, ComplexError> {
        if rotations.is_empty() {
            return Err(ComplexError::EmptyComplex);
        }
        let n_vertices = rotations.len();
        let n_darts = 4 * n_vertices;

        // Map external dart ids onto canonical 4v+s.
        let mut canon: BTreeMap<DartId, DartId> = BTreeMap::new();
        for (v, rot) in rotations.iter().enumerate() {
            if rot.len() != 4 {
                return Err(ComplexError::NonQuadrivalentVertex { vertex: v });
            }
            for (s, &d) in rot.iter().enumerate() {
                if canon.insert(d, 4 * v + s).is_some() {
                    return Err(ComplexError::DanglingDart { dart: d });
                }
            }
        }

        let mut alpha: Vec<Option<DartId>> = vec![None; n_darts];
        let mut twisted_edge_inputs = vec![false; pairing.len()];
        for &e in twists {
            if e >= pairing.len() {
                return Err(ComplexError::BadTwistIndex { edge: e });
            }
            twisted_edge_inputs[e] = true;
        }
        let mut edge_twist_by_dart: Vec<bool> = vec![false; n_darts];
        for (i, &(a, b)) in pairing.iter().enumerate() {
            let ca = *canon
                .get(&a)
                .ok_or(ComplexError::DanglingDart { dart: a })?;
            let cb = *canon
                .get(&b)
                .ok_or(ComplexError::DanglingDart { dart: b })?;
            if ca == cb {
                return Err(ComplexError::SelfPairedDart { dart: a });
            }
            for &(c, orig) in &[(ca, a), (cb, b)] {
                if alpha[c].is_some() {
                    return Err(ComplexError::DanglingDart { dart: orig });
                }
            }
            alpha[ca] = Some(cb);
            alpha[cb] = Some(ca);
            edge_twist_by_dart[ca] = twisted_edge_inputs[i];
            edge_twist_by_dart[cb] = twisted_edge_inputs[i];
        }
        let mut alpha_full = Vec::with_capacity(n_darts);
        for (d, a) in alpha.iter().enumerate() {
            match a {
                Some(p) => alpha_full.push(*p),
                None => return Err(ComplexError::DanglingDart { dart: d }),
            }
        }

        // Canonical edge list, sorted by smaller dart.
        let mut edges: Vec<(DartId, DartId)> = (0..n_darts)
            .filter(|&d| d < alpha_full[d])
            .map(|d| (d, alpha_full[d]))
            .collect();
        edges.sort_unstable();
        let mut edge_of_dart = vec![0usize; n_darts];
        let mut twist = vec![false; edges.len()];
        for (e, &(a, b)) in edges.iter().enumerate() {
            edge_of_dart[a] = e;
            edge_of_dart[b] = e;
            twist[e] = edge_twist_by_dart[a];
        }

        let mut complex = SurfaceComplex {
            n_vertices,
            alpha: alpha_full,
            edges,
            edge_of_dart,
            twist,
            surface,
            faces: Vec::new(),
            corner_face: Vec::new(),
            loops: Vec::new(),
            loop_of_edge: Vec::new(),
        };
        complex.trace_faces()?;
        complex.trace_loops();

        if let Some(kind) = complex.surface {
            let computed = complex.euler_characteristic();
            if computed != kind.euler_characteristic()
                || kind.orientable != complex.computed_orientable()
            {
                return Err(ComplexError::SurfaceMismatch {
                    declared: kind.euler_characteristic(),
                    computed,
                });
            }
        }
        Ok(complex)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_darts(&self) -> usize {
        4 * self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn n_loops(&self) -> usize {
        self.loops.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.n_vertices as i64 - self.n_edges() as i64 + self.n_faces() as i64
    }

    pub fn surface(&self) -> Option<SurfaceKind> {
        self.surface
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn loops(&self) -> &[Loop] {
        &self.loops
    }

    pub fn edges(&self) -> &[(DartId, DartId)] {
        &self.edges
    }

    pub fn edge_twisted(&self, e: EdgeId) -> bool {
        self.twist[e]
    }

    pub fn has_twists(&self) -> bool {
        self.twist.iter().any(|&t| t)
    }

    pub fn vertex_of(&self, d: DartId) -> VertexId {
        d / 4
    }

    pub fn slot_of(&self, d: DartId) -> usize {
        d % 4
    }

    pub fn dart_at(&self, v: VertexId, slot: usize) -> DartId {
        4 * v + (slot % 4)
    }

    /// Rotation successor at the dart's vertex.
    pub fn sigma(&self, d: DartId) -> DartId {
        4 * (d / 4) + (d + 1) % 4
    }

    pub fn sigma_inv(&self, d: DartId) -> DartId {
        4 * (d / 4) + (d + 3) % 4
    }

    /// Opposite slot at the same vertex (the other end of the through-strand).
    pub fn sigma2(&self, d: DartId) -> DartId {
        4 * (d / 4) + (d + 2) % 4
    }

    pub fn alpha(&self, d: DartId) -> DartId {
        self.alpha[d]
    }

    pub fn edge_of(&self, d: DartId) -> EdgeId {
        self.edge_of_dart[d]
    }

    pub fn loop_of_edge(&self, e: EdgeId) -> LoopId {
        self.loop_of_edge[e]
    }

    pub fn loop_of_dart(&self, d: DartId) -> LoopId {
        self.loop_of_edge[self.edge_of_dart[d]]
    }

    /// The two loops crossing at a vertex: strand of slots {0,2} first.
    pub fn loops_at_vertex(&self, v: VertexId) -> (LoopId, LoopId) {
        (self.loop_of_dart(4 * v), self.loop_of_dart(4 * v + 1))
    }


    /// Face occupying the corner spanned from dart `c` to `sigma(c)`.
    pub fn face_at_corner(&self, c: DartId) -> FaceId {
        self.corner_face[c]
    }

    /// Next state of the face boundary walk.
    fn face_step(&self, s: SignedDart) -> SignedDart {
        let crossed = self.alpha[s.dart];
        let positive = s.positive != self.twist[self.edge_of_dart[s.dart]];
        let dart = if positive {
            self.sigma(crossed)
        } else {
            self.sigma_inv(crossed)
        };
        SignedDart { dart, positive }
    }

    /// Mirror state: same edge side traversed in the opposite direction.
    fn face_mirror(&self, s: SignedDart) -> SignedDart {
        let positive = !(s.positive != self.twist[self.edge_of_dart[s.dart]]);
        SignedDart {
            dart: self.alpha[s.dart],
            positive,
        }
    }

    /// Corner occupied when the walk leaves along state `s`.
    fn corner_of_state(&self, s: SignedDart) -> DartId {
        if s.positive {
            self.sigma_inv(s.dart)
        } else {
            s.dart
        }
    }

    fn trace_faces(&mut self) -> Result<(), ComplexError> {
        let n_darts = self.n_darts();
        let n_states = 2 * n_darts;
        let state_index = |s: SignedDart| 2 * s.dart + usize::from(!s.positive);
        let mut orbit_of_state: Vec<Option<usize>> = vec![None; n_states];
        let mut orbits: Vec<Vec<SignedDart>> = Vec::new();

        for d in 0..n_darts {
            for positive in [true, false] {
                let start = SignedDart { dart: d, positive };
                if orbit_of_state[state_index(start)].is_some() {
                    continue;
                }
                let id = orbits.len();
                let mut walk = Vec::new();
                let mut s = start;
                loop {
                    orbit_of_state[state_index(s)] = Some(id);
                    walk.push(s);
                    s = self.face_step(s);
                    if s == start {
                        break;
                    }
                }
                orbits.push(walk);
            }
        }

        // Pair each orbit with its mirror; the pair is one face.
        let mut face_of_orbit: Vec<Option<FaceId>> = vec![None; orbits.len()];
        let mut faces: Vec<Face> = Vec::new();
        let mut corner_face: Vec<Option<FaceId>> = vec![None; n_darts];
        for (oid, walk) in orbits.iter().enumerate() {
            if face_of_orbit[oid].is_some() {
                continue;
            }
            let mirror = orbit_of_state[state_index(self.face_mirror(walk[0]))]
                .expect("mirror state traced");
            if mirror == oid {
                return Err(ComplexError::NonDiskFace { dart: walk[0].dart });
            }
            let face_id = faces.len();
            face_of_orbit[oid] = Some(face_id);
            face_of_orbit[mirror] = Some(face_id);
            // Canonical representative: the orbit holding the least state.
            let key = |w: &[SignedDart]| {
                w.iter()
                    .map(|s| (usize::from(!s.positive), s.dart))
                    .min()
                    .unwrap()
            };
            let rep = if key(walk) <= key(&orbits[mirror]) {
                walk
            } else {
                &orbits[mirror]
            };
            // Rotate so the walk starts at its least state.
            let start = rep
                .iter()
                .enumerate()
                .min_by_key(|(_, s)| (usize::from(!s.positive), s.dart))
                .map(|(i, _)| i)
                .unwrap();
            let mut states: Vec<SignedDart> = Vec::with_capacity(rep.len());
            states.extend_from_slice(&rep[start..]);
            states.extend_from_slice(&rep[..start]);
            for s in &states {
                let corner = self.corner_of_state(*s);
                if corner_face[corner].is_some() {
                    return Err(ComplexError::NonDiskFace { dart: s.dart });
                }
                corner_face[corner] = Some(face_id);
            }
            faces.push(Face {
                id: face_id,
                states,
            });
        }

        self.faces = faces;
        self.corner_face = corner_face
            .into_iter()
            .map(|f| f.expect("corner covered"))
            .collect();
        Ok(())
    }

    fn trace_loops(&mut self) {
        let n_darts = self.n_darts();
        let mut loop_of_edge = vec![usize::MAX; self.edges.len()];
        let mut loops: Vec<Loop> = Vec::new();
        for d0 in 0..n_darts {
            if loop_of_edge[self.edge_of_dart[d0]] != usize::MAX {
                continue;
            }
            let id = loops.len();
            let mut darts = Vec::new();
            let mut vertices = Vec::new();
            let mut d = d0;
            loop {
                darts.push(d);
                vertices.push(self.vertex_of(d));
                loop_of_edge[self.edge_of_dart[d]] = id;
                d = self.sigma2(self.alpha[d]);
                if d == d0 {
                    break;
                }
            }
            loops.push(Loop {
                id,
                darts,
                vertices,
            });
        }
        self.loops = loops;
        self.loop_of_edge = loop_of_edge;
    }

    /// Cyclic sequence of loop labels along a face boundary.
    pub fn face_label_sequence(&self, f: FaceId) -> Vec<LoopId> {
        self.faces[f]
            .states
            .iter()
            .map(|s| self.loop_of_dart(s.dart))
            .collect()
    }

    /// Vertices visited by a face boundary walk, in order.
    pub fn face_vertex_sequence(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f]
            .states
            .iter()
            .map(|s| self.vertex_of(self.corner_of_state(*s)))
            .collect()
    }

    /// Ids of the two faces on either side of edge `e`. A state (d, sign)
    /// occupies the corner given by `corner_of_state`, and both passes of a
    /// corner belong to one face, so two corner lookups suffice.
    pub fn edge_faces(&self, e: EdgeId) -> (FaceId, FaceId) {
        let (a, _b) = self.edges[e];
        let fa = self.corner_face[self.corner_of_state(SignedDart {
            dart: a,
            positive: true,
        })];
        let fb = self.corner_face[self.corner_of_state(SignedDart {
            dart: a,
            positive: false,
        })];
        (fa, fb)
    }

    /// Whether the complex is connected (through edges).
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n_vertices];
        let mut components = 0;
        for start in 0..self.n_vertices {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for s in 0..4 {
                    let u = self.vertex_of(self.alpha[4 * v + s]);
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        components
    }

    /// Orientability computed from the twist signature: the complex is
    /// orientable iff vertex senses can be chosen so that every edge is
    /// coherent (twist parity of every cycle is even).
    pub fn computed_orientable(&self) -> bool {
        let mut spin: Vec<Option<bool>> = vec![None; self.n_vertices];
        for start in 0..self.n_vertices {
            if spin[start].is_some() {
                continue;
            }
            spin[start] = Some(true);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let sv = spin[v].unwrap();
                for s in 0..4 {
                    let d = 4 * v + s;
                    let u = self.vertex_of(self.alpha[d]);
                    let su = sv != self.twist[self.edge_of_dart[d]];
                    match spin[u] {
                        None => {
                            spin[u] = Some(su);
                            stack.push(u);
                        }
                        Some(existing) if existing != su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Non-fatal validation findings.
    pub fn flags(&self) -> Vec<SurfaceFlag> {
        let mut flags = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if self.vertex_of(a) == self.vertex_of(b) {
                flags.push(SurfaceFlag::SelfLoopEdge { edge: e });
            }
        }
        let components = self.component_count();
        if components > 1 {
            flags.push(SurfaceFlag::Disconnected { components });
        }
        flags
    }

    /// Rotations in the builder's format (canonical dart ids).
    pub fn rotations(&self) -> Vec<Vec<DartId>> {
        (0..self.n_vertices)
            .map(|v| (0..4).map(|s| 4 * v + s).collect())
            .collect()
    }

    /// Edge pairing in the builder's format.
    pub fn pairing(&self) -> Vec<(DartId, DartId)> {
        self.edges.clone()
    }

    pub fn twisted_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.twist[e]).collect()
    }
}
