//! Exact rational fan vectors, cones, and compatibility of a fan with the
//! combinatorics of a complex, domain by domain.
//!
//! Every decision here is a sign test or a small exact solve. Angles are
//! never computed: "spans an angle in (0, pi)" is the sign of a cross
//! product, completeness in 3D is certified by corner-cone independence,
//! pairwise disjoint interiors, and facet pairing with opposite sides.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::complex::cell3::{CellComplex3, CellId, HypLabel};
use crate::complex::{LoopId, SurfaceComplex};
use crate::linalg::{cross2_sign, det3, dot, rank, solve_columns, strict_homogeneous_feasible};
use crate::scalar::{sign, Scalar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FanError {
    #[error("fan vector for label {label} is zero")]
    ZeroVector { label: HypLabel },
    #[error("fan vector for label {label} has wrong arity")]
    WrongArity { label: HypLabel },
    #[error("label {label} not present in fan")]
    UnknownLabel { label: HypLabel },
    #[error("vector has wrong dimension")]
    DimensionMismatch,
    #[error("cone generators are dependent")]
    DependentGenerators,
    #[error("fan labels {fan:?} do not match complex hypersurface labels {complex:?}")]
    LabelMismatch {
        fan: Vec<HypLabel>,
        complex: Vec<HypLabel>,
    },
}

/// Exact vector attached to one hypersurface label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanVector<S: Scalar> {
    pub label: HypLabel,
    pub coords: Vec<S>,
}

/// Assignment of a nonzero exact vector to every hypersurface label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan<S: Scalar> {
    dimension: usize,
    vectors: BTreeMap<HypLabel, Vec<S>>,
}

impl<S: Scalar> Fan<S> {
    pub fn new(
        dimension: usize,
        entries: impl IntoIterator<Item = (HypLabel, Vec<S>)>,
    ) -> Result<Self, FanError> {
        let mut vectors = BTreeMap::new();
        for (label, coords) in entries {
            if coords.len() != dimension {
                return Err(FanError::WrongArity { label });
            }
            if coords.iter().all(|c| c.is_zero()) {
                return Err(FanError::ZeroVector { label });
            }
            vectors.insert(label, coords);
        }
        Ok(Fan { dimension, vectors })
    }

    pub fn from_integer_entries(
        dimension: usize,
        entries: &[(HypLabel, &[i64])],
    ) -> Result<Self, FanError> {
        Fan::new(
            dimension,
            entries
                .iter()
                .map(|(l, v)| (*l, v.iter().map(|&x| S::from_int(x)).collect())),
        )
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn labels(&self) -> impl Iterator<Item = HypLabel> + '_ {
        self.vectors.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector(&self, label: HypLabel) -> Result<&[S], FanError> {
        self.vectors
            .get(&label)
            .map(Vec::as_slice)
            .ok_or(FanError::UnknownLabel { label })
    }

    pub fn insert(&mut self, label: HypLabel, coords: Vec<S>) -> Result<(), FanError> {
        if coords.len() != self.dimension {
            return Err(FanError::WrongArity { label });
        }
        if coords.iter().all(|c| c.is_zero()) {
            return Err(FanError::ZeroVector { label });
        }
        self.vectors.insert(label, coords);
        Ok(())
    }

    pub fn remove(&mut self, label: HypLabel) -> Option<Vec<S>> {
        self.vectors.remove(&label)
    }

    pub fn entries(&self) -> impl Iterator<Item = (HypLabel, &[S])> + '_ {
        self.vectors.iter().map(|(l, v)| (*l, v.as_slice()))
    }

    /// Whether some existing vector is positively proportional to `w`.
    pub fn direction_present(&self, w: &[S]) -> bool {
        self.vectors.values().any(|v| positively_parallel(v, w))
    }
}

/// Exact test for positive proportionality of nonzero vectors.
pub fn positively_parallel<S: Scalar>(a: &[S], b: &[S]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if !crate::linalg::in_span(&[a.to_vec()], b) {
        return false;
    }
    // b = t a for some t; its sign shows on any nonzero coordinate.
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() {
            return !y.is_zero() && (x.is_positive() == y.is_positive());
        }
    }
    false
}

/// Simplicial cone: 1..=n independent generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone<S: Scalar> {
    generators: Vec<Vec<S>>,
}

impl<S: Scalar> Cone<S> {
    pub fn new(generators: Vec<Vec<S>>) -> Result<Self, FanError> {
        if generators.is_empty() {
            return Err(FanError::DependentGenerators);
        }
        let dim = generators[0].len();
        if generators.iter().any(|g| g.len() != dim) || generators.len() > dim {
            return Err(FanError::DimensionMismatch);
        }
        if rank(&generators) != generators.len() {
            return Err(FanError::DependentGenerators);
        }
        Ok(Cone { generators })
    }

    pub fn generators(&self) -> &[Vec<S>] {
        &self.generators
    }

    /// Exact membership: w = sum alpha_i g_i with alpha_i >= 0 (or > 0 when
    /// strict), solved in rationals.
    pub fn contains(&self, w: &[S], strict: bool) -> Result<bool, FanError> {
        if w.len() != self.generators[0].len() {
            return Err(FanError::DimensionMismatch);
        }
        match solve_columns(&self.generators, w) {
            None => Ok(false),
            Some(alpha) => Ok(alpha.iter().all(|a| {
                if strict {
                    a.is_positive()
                } else {
                    !a.is_negative()
                }
            })),
        }
    }
}

/// Why a face or domain fails compatibility.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Incompat {
    /// Fewer than 3 boundary labels can never span a full turn.
    Digon,
    /// Consecutive labels with positively proportional vectors.
    ZeroAngle { position: usize },
    /// Consecutive labels with opposite vectors (angle exactly pi).
    StraightAngle { position: usize },
    /// The turning sign changes along the walk.
    TurningSignFlip { position: usize },
    /// Consistent turns but more than one full turn.
    WindingNotOne { winding: usize },
    /// A corner whose three vectors are dependent.
    DegenerateCorner { vertex: CellId },
    /// Two facet vectors along an edge are dependent.
    DegenerateEdge { edge: CellId },
    /// Two corner cones share interior points.
    OverlappingCones { vertex_a: CellId, vertex_b: CellId },
    /// The third vectors at an edge's endpoints are not strictly on opposite
    /// sides of the edge's 2-cone.
    EdgeSideViolation { edge: CellId },
    /// The domain's incidence data is not that of a simple polytope.
    MalformedDomain { detail: String },
}

/// Verdict for one face or domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CellVerdict {
    Compatible,
    Incompatible(Incompat),
}

impl CellVerdict {
    pub fn is_compatible(&self) -> bool {
        matches!(self, CellVerdict::Compatible)
    }
}

/// Decides whether the cyclic sequence of loop labels around a 2D face is
/// compatible with the fan: consecutive vectors span angles in (0, pi) with
/// one consistent turning sign, and the walk makes exactly one full turn.
pub fn face_compatible_2d<S: Scalar>(
    labels: &[LoopId],
    fan: &Fan<S>,
) -> Result<CellVerdict, FanError> {
    let k = labels.len();
    let mut vs: Vec<&[S]> = Vec::with_capacity(k);
    for &l in labels {
        vs.push(fan.vector(l)?);
    }
    if k < 3 {
        return Ok(CellVerdict::Incompatible(Incompat::Digon));
    }

    let mut turn_sign: i8 = 0;
    for j in 0..k {
        let a = vs[j];
        let b = vs[(j + 1) % k];
        let c = cross2_sign(a, b);
        if c == 0 {
            let d = sign(&dot(a, b));
            return Ok(CellVerdict::Incompatible(if d > 0 {
                Incompat::ZeroAngle { position: j }
            } else {
                Incompat::StraightAngle { position: j }
            }));
        }
        if turn_sign == 0 {
            turn_sign = c;
        } else if c != turn_sign {
            return Ok(CellVerdict::Incompatible(Incompat::TurningSignFlip {
                position: j,
            }));
        }
    }

    // All turns sweep the same way by less than pi each; the total is a
    // positive number of full turns. Count how many arcs (v_j, v_{j+1}]
    // contain the reference direction v_0.
    let r = vs[0];
    let mut winding = 0usize;
    for j in 0..k {
        let a = vs[j];
        let b = vs[(j + 1) % k];
        let hits_end = positively_parallel(b, r);
        let strictly_inside = if turn_sign > 0 {
            cross2_sign(a, r) > 0 && cross2_sign(r, b) > 0
        } else {
            cross2_sign(a, r) < 0 && cross2_sign(r, b) < 0
        };
        if hits_end || strictly_inside {
            winding += 1;
        }
    }
    if winding == 1 {
        Ok(CellVerdict::Compatible)
    } else {
        Ok(CellVerdict::Incompatible(Incompat::WindingNotOne {
            winding,
        }))
    }
}

/// Combinatorics of one 3-cell, extracted for the fan check: corners with
/// their three facet ids, edges with their two facet ids and endpoints.
#[derive(Debug, Clone)]
pub struct DomainView {
    pub domain: CellId,
    /// (facet 2-cell id, hypersurface label), distinct facets.
    pub facets: Vec<(CellId, HypLabel)>,
    /// (vertex, the three facets of this domain through it).
    pub corners: Vec<(CellId, [CellId; 3])>,
    /// (edge, the two facets of this domain through it, endpoint vertices).
    pub edges: Vec<(CellId, [CellId; 2], [CellId; 2])>,
}

/// Extracts the polytope combinatorics of a 3-cell. Fails with a diagnostic
/// when the incidences are not those of a simple polytope.
pub fn domain_view(c: &CellComplex3, o: CellId) -> Result<DomainView, Incompat> {
    let mut facets: Vec<(CellId, HypLabel)> = Vec::new();
    let mut seen = BTreeSet::new();
    for &f in c.domain_facets(o) {
        if !seen.insert(f) {
            return Err(Incompat::MalformedDomain {
                detail: format!("facet {f} repeated in domain {o}"),
            });
        }
        facets.push((f, c.face_label(f)));
    }

    let facet_vertices: BTreeMap<CellId, BTreeSet<CellId>> = facets
        .iter()
        .map(|&(f, _)| (f, c.face_vertices(f)))
        .collect();

    let mut corners: Vec<(CellId, [CellId; 3])> = Vec::new();
    for &v in &c.domain_vertices(o) {
        let through: Vec<CellId> = facets
            .iter()
            .map(|&(f, _)| f)
            .filter(|f| facet_vertices[f].contains(&v))
            .collect();
        let [a, b, cc]: [CellId; 3] =
            through.try_into().map_err(|_| Incompat::MalformedDomain {
                detail: format!("vertex {v} is not a 3-facet corner of domain {o}"),
            })?;
        corners.push((v, [a, b, cc]));
    }

    let mut edges: Vec<(CellId, [CellId; 2], [CellId; 2])> = Vec::new();
    for &e in &c.domain_edges(o) {
        let through: Vec<CellId> = facets
            .iter()
            .map(|&(f, _)| f)
            .filter(|&f| c.face_edges(f).contains(&e))
            .collect();
        let [fa, fb]: [CellId; 2] = through.try_into().map_err(|_| Incompat::MalformedDomain {
            detail: format!("edge {e} is not on exactly 2 facets of domain {o}"),
        })?;
        edges.push((e, [fa, fb], c.edge_endpoints(e)));
    }

    // Each corner must see its three facet pairs as the three incident edges.
    for &(v, fs) in &corners {
        let mut pairs: Vec<[CellId; 2]> = edges
            .iter()
            .filter(|&&(e, _, ends)| {
                let _ = e;
                ends.contains(&v)
            })
            .map(|&(_, fpair, _)| {
                let mut p = fpair;
                p.sort_unstable();
                p
            })
            .collect();
        pairs.sort_unstable();
        let mut expect: Vec<[CellId; 2]> = vec![
            [fs[0].min(fs[1]), fs[0].max(fs[1])],
            [fs[0].min(fs[2]), fs[0].max(fs[2])],
            [fs[1].min(fs[2]), fs[1].max(fs[2])],
        ];
        expect.sort_unstable();
        if pairs != expect {
            return Err(Incompat::MalformedDomain {
                detail: format!("corner {v} of domain {o} does not match its edge fan"),
            });
        }
    }

    Ok(DomainView {
        domain: o,
        facets,
        corners,
        edges,
    })
}

/// Decides whether the corner cones of a 3-cell form a complete simplicial
/// fan dual to the domain: (a) independent generators at every corner,
/// (b) pairwise disjoint cone interiors, (c) every edge's 2-cone shared by
/// its two endpoint cones on strictly opposite sides.
pub fn domain_compatible_3d<S: Scalar>(
    view: &DomainView,
    fan: &Fan<S>,
) -> Result<CellVerdict, FanError> {
    let label_of: BTreeMap<CellId, HypLabel> = view.facets.iter().copied().collect();
    let vec_of = |f: CellId, fan: &Fan<S>| -> Result<Vec<S>, FanError> {
        Ok(fan.vector(label_of[&f])?.to_vec())
    };

    if view.corners.len() < 4 {
        return Ok(CellVerdict::Incompatible(Incompat::MalformedDomain {
            detail: format!("domain {} has fewer than 4 corners", view.domain),
        }));
    }

    // (a) corner cones are simplicial.
    let mut cones: Vec<(CellId, [Vec<S>; 3])> = Vec::new();
    for &(v, fs) in &view.corners {
        let g = [
            vec_of(fs[0], fan)?,
            vec_of(fs[1], fan)?,
            vec_of(fs[2], fan)?,
        ];
        if det3(&g[0], &g[1], &g[2]).is_zero() {
            return Ok(CellVerdict::Incompatible(Incompat::DegenerateCorner {
                vertex: v,
            }));
        }
        cones.push((v, g));
    }

    // (b) pairwise disjoint interiors, exactly: interior of a simplicial
    // cone is cut out by three strict functionals (adjugate rows).
    let functionals = |g: &[Vec<S>; 3]| -> [Vec<S>; 3] {
        let d = det3(&g[0], &g[1], &g[2]);
        let s = if d.is_positive() { S::one() } else { -S::one() };
        // alpha_0(x) = det(x, g1, g2)/det, etc.; scale by sign(det) only.
        let row = |a: &Vec<S>, b: &Vec<S>| -> Vec<S> {
            vec![
                s.clone() * (a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone()),
                s.clone() * (a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone()),
                s.clone() * (a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()),
            ]
        };
        [row(&g[1], &g[2]), row(&g[2], &g[0]), row(&g[0], &g[1])]
    };
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            let fi = functionals(&cones[i].1);
            let fj = functionals(&cones[j].1);
            let rows: Vec<Vec<S>> = fi.iter().chain(fj.iter()).cloned().collect();
            if strict_homogeneous_feasible(&rows) {
                return Ok(CellVerdict::Incompatible(Incompat::OverlappingCones {
                    vertex_a: cones[i].0,
                    vertex_b: cones[j].0,
                }));
            }
        }
    }

    // (c) facet pairing along edges, opposite sides.
    let corner_facets: BTreeMap<CellId, [CellId; 3]> = view.corners.iter().copied().collect();
    for &(e, [fa, fb], [va, vb]) in &view.edges {
        let wa = vec_of(fa, fan)?;
        let wb = vec_of(fb, fan)?;
        if rank(&[wa.clone(), wb.clone()]) != 2 {
            return Ok(CellVerdict::Incompatible(Incompat::DegenerateEdge {
                edge: e,
            }));
        }
        let third = |v: CellId| -> Result<Vec<S>, FanError> {
            let fs = corner_facets[&v];
            let f = fs
                .iter()
                .copied()
                .find(|&f| f != fa && f != fb)
                .expect("simple corner");
            vec_of(f, fan)
        };
        let ga = third(va)?;
        let gb = third(vb)?;
        let sa = sign(&det3(&wa, &wb, &ga));
        let sb = sign(&det3(&wa, &wb, &gb));
        if sa == 0 || sb == 0 || sa == sb {
            return Ok(CellVerdict::Incompatible(Incompat::EdgeSideViolation {
                edge: e,
            }));
        }
    }

    Ok(CellVerdict::Compatible)
}

/// Per-top-cell compatibility report.
#[derive(Debug, Clone, Serialize)]
pub struct FanReport {
    pub cells: Vec<(CellId, CellVerdict)>,
    pub compatible: bool,
}

impl FanReport {
    fn from_cells(cells: Vec<(CellId, CellVerdict)>) -> Self {
        let compatible = cells.iter().all(|(_, v)| v.is_compatible());
        FanReport { cells, compatible }
    }
}

fn check_labels<S: Scalar>(
    fan: &Fan<S>,
    complex_labels: impl IntoIterator<Item = HypLabel>,
) -> Result<(), FanError> {
    let fan_labels: Vec<HypLabel> = fan.labels().collect();
    let complex_labels: Vec<HypLabel> = complex_labels.into_iter().collect();
    if fan_labels != complex_labels {
        return Err(FanError::LabelMismatch {
            fan: fan_labels,
            complex: complex_labels,
        });
    }
    Ok(())
}

/// Fan compatibility with every face of a 2D complex.
pub fn fan_compatible_2d<S: Scalar>(
    c: &SurfaceComplex,
    fan: &Fan<S>,
) -> Result<FanReport, FanError> {
    check_labels(fan, (0..c.n_loops()).collect::<Vec<_>>())?;
    let mut cells = Vec::new();
    for f in 0..c.n_faces() {
        let labels = c.face_label_sequence(f);
        cells.push((f, face_compatible_2d(&labels, fan)?));
    }
    Ok(FanReport::from_cells(cells))
}

/// Fan compatibility with every domain of a 3D complex.
pub fn fan_compatible_3d<S: Scalar>(c: &CellComplex3, fan: &Fan<S>) -> Result<FanReport, FanError> {
    check_labels(fan, c.labels())?;
    let mut cells = Vec::new();
    for o in 0..c.n_cells(3) {
        let verdict = match domain_view(c, o) {
            Ok(view) => domain_compatible_3d(&view, fan)?,
            Err(reason) => CellVerdict::Incompatible(reason),
        };
        cells.push((o, verdict));
    }
    Ok(FanReport::from_cells(cells))
}

/// Result of a genericity test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Genericity {
    Generic,
    /// `witness`: a co-occurring label subset whose span contains w.
    NonGeneric {
        witness: Vec<HypLabel>,
    },
}

impl Genericity {
    pub fn is_generic(&self) -> bool {
        matches!(self, Genericity::Generic)
    }
}

/// Label subsets that co-occur at vertices of a complex; only these need to
/// be avoided by a generic direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoOccurrence {
    pub vertex_labels: Vec<Vec<HypLabel>>,
}

impl CoOccurrence {
    pub fn of_surface(c: &SurfaceComplex) -> Self {
        let sets: BTreeSet<Vec<HypLabel>> = (0..c.n_vertices())
            .map(|v| {
                let (a, b) = c.loops_at_vertex(v);
                let mut s = vec![a, b];
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        CoOccurrence {
            vertex_labels: sets.into_iter().collect(),
        }
    }

    pub fn of_cell3(c: &CellComplex3) -> Self {
        let sets: BTreeSet<Vec<HypLabel>> = (0..c.n_cells(0)).map(|v| c.vertex_labels(v)).collect();
        CoOccurrence {
            vertex_labels: sets.into_iter().collect(),
        }
    }

    /// All proper nonempty subsets of each vertex label set, deduplicated.
    fn proper_subsets(&self, n: usize) -> BTreeSet<Vec<HypLabel>> {
        let mut out = BTreeSet::new();
        for set in &self.vertex_labels {
            let k = set.len();
            for mask in 1u32..(1 << k) {
                if (mask.count_ones() as usize) < n {
                    let subset: Vec<HypLabel> = (0..k)
                        .filter(|&i| mask & (1 << i) != 0)
                        .map(|i| set[i])
                        .collect();
                    out.insert(subset);
                }
            }
        }
        out
    }
}

/// Whether `w` avoids the span of every co-occurring subset of fewer than
/// `n` fan vectors. On failure returns the violating subset.
pub fn is_generic<S: Scalar>(
    w: &[S],
    fan: &Fan<S>,
    cooccur: &CoOccurrence,
) -> Result<Genericity, FanError> {
    if w.len() != fan.dimension() {
        return Err(FanError::DimensionMismatch);
    }
    for subset in cooccur.proper_subsets(fan.dimension()) {
        let vectors: Result<Vec<Vec<S>>, FanError> = subset
            .iter()
            .map(|&l| fan.vector(l).map(<[S]>::to_vec))
            .collect();
        if crate::linalg::in_span(&vectors?, w) {
            return Ok(Genericity::NonGeneric { witness: subset });
        }
    }
    Ok(Genericity::Generic)
}

/// Strict mode: checks all subsets of all fan labels of size < n.
pub fn is_generic_strict<S: Scalar>(w: &[S], fan: &Fan<S>) -> Result<Genericity, FanError> {
    let all: Vec<HypLabel> = fan.labels().collect();
    let strict = CoOccurrence {
        vertex_labels: vec![all],
    };
    // proper_subsets caps at size n-1 but enumerates within each set; for the
    // strict variant enumerate subsets of the full label set directly.
    let n = fan.dimension();
    let labels = &strict.vertex_labels[0];
    if w.len() != n {
        return Err(FanError::DimensionMismatch);
    }
    let mut out: BTreeSet<Vec<HypLabel>> = BTreeSet::new();
    subsets_up_to(labels, n - 1, &mut out);
    for subset in out {
        let vectors: Result<Vec<Vec<S>>, FanError> = subset
            .iter()
            .map(|&l| fan.vector(l).map(<[S]>::to_vec))
            .collect();
        if crate::linalg::in_span(&vectors?, w) {
            return Ok(Genericity::NonGeneric { witness: subset });
        }
    }
    Ok(Genericity::Generic)
}

fn subsets_up_to(labels: &[HypLabel], max_size: usize, out: &mut BTreeSet<Vec<HypLabel>>) {
    fn rec(
        labels: &[HypLabel],
        start: usize,
        current: &mut Vec<HypLabel>,
        max_size: usize,
        out: &mut BTreeSet<Vec<HypLabel>>,
    ) {
        if !current.is_empty() {
            out.insert(current.clone());
        }
        if current.len() == max_size {
            return;
        }
        for i in start..labels.len() {
            current.push(labels[i]);
            rec(labels, i + 1, current, max_size, out);
            current.pop();
        }
    }
    let mut current = Vec::new();
    rec(labels, 0, &mut current, max_size, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn fan2(entries: &[(usize, [i64; 2])]) -> Fan<Rat> {
        Fan::new(
            2,
            entries
                .iter()
                .map(|&(l, v)| (l, v.iter().map(|&x| Rat::from_int(x)).collect())),
        )
        .unwrap()
    }

    fn fan3(entries: &[(usize, [i64; 3])]) -> Fan<Rat> {
        Fan::new(
            3,
            entries
                .iter()
                .map(|&(l, v)| (l, v.iter().map(|&x| Rat::from_int(x)).collect())),
        )
        .unwrap()
    }

    fn rv(coords: &[i64]) -> Vec<Rat> {
        coords.iter().map(|&x| Rat::from_int(x)).collect()
    }

    fn octahedral_fan() -> Fan<Rat> {
        fan2(&[(0, [1, 0]), (1, [0, 1]), (2, [-1, -1])])
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(
            Fan::<Rat>::new(2, vec![(0, rv(&[0, 0]))]),
            Err(FanError::ZeroVector { label: 0 })
        );
    }

    #[test]
    fn triangle_face_compatible() {
        let fan = octahedral_fan();
        assert_eq!(
            face_compatible_2d(&[0, 1, 2], &fan).unwrap(),
            CellVerdict::Compatible
        );
        // Invariant under rotation and reversal.
        assert_eq!(
            face_compatible_2d(&[1, 2, 0], &fan).unwrap(),
            CellVerdict::Compatible
        );
        assert_eq!(
            face_compatible_2d(&[2, 1, 0], &fan).unwrap(),
            CellVerdict::Compatible
        );
    }

    #[test]
    fn digon_always_incompatible() {
        let fan = octahedral_fan();
        assert_eq!(
            face_compatible_2d(&[0, 1], &fan).unwrap(),
            CellVerdict::Incompatible(Incompat::Digon)
        );
    }

    #[test]
    fn unknown_label_is_error() {
        let fan = octahedral_fan();
        assert_eq!(
            face_compatible_2d(&[0, 1, 7], &fan),
            Err(FanError::UnknownLabel { label: 7 })
        );
    }

    #[test]
    fn four_vector_cyclic_orders() {
        // Of the three circular orders of four fixed directions, exactly the
        // angular one is compatible; the others flip the turning sign.
        let fan = fan2(&[(0, [1, 0]), (1, [1, 1]), (2, [0, 1]), (3, [-1, -2])]);
        assert_eq!(
            face_compatible_2d(&[0, 1, 2, 3], &fan).unwrap(),
            CellVerdict::Compatible
        );
        for order in [[0usize, 2, 1, 3], [0, 1, 3, 2]] {
            assert!(matches!(
                face_compatible_2d(&order, &fan).unwrap(),
                CellVerdict::Incompatible(Incompat::TurningSignFlip { .. })
            ));
        }
    }

    #[test]
    fn winding_twice_detected() {
        // Four directions walked twice around: consistent turns, winding 2.
        let fan = fan2(&[(0, [1, 0]), (1, [0, 1]), (2, [-1, 0]), (3, [0, -1])]);
        assert_eq!(
            face_compatible_2d(&[0, 1, 2, 3, 0, 1, 2, 3], &fan).unwrap(),
            CellVerdict::Incompatible(Incompat::WindingNotOne { winding: 2 })
        );
    }

    #[test]
    fn rescaling_invariance() {
        let base = [(0usize, [1i64, 0]), (1, [0, 1]), (2, [-1, -1])];
        let scaled = fan2(&[(0, [3, 0]), (1, [0, 7]), (2, [-5, -5])]);
        for labels in [vec![0usize, 1, 2], vec![0, 2, 1]] {
            assert_eq!(
                face_compatible_2d(&labels, &fan2(&base)).unwrap(),
                face_compatible_2d(&labels, &scaled).unwrap()
            );
        }
    }

    #[test]
    fn cone_membership() {
        let cone = Cone::new(vec![rv(&[1, 0]), rv(&[0, 1])]).unwrap();
        // Positive combination, strictly inside.
        assert!(cone.contains(&rv(&[1, 1]), true).unwrap());
        // Boundary: on a generator ray.
        assert!(cone.contains(&rv(&[1, 0]), false).unwrap());
        assert!(!cone.contains(&rv(&[1, 0]), true).unwrap());
        assert!(cone.contains(&rv(&[2, 1]), true).unwrap());
        let other = Cone::new(vec![rv(&[0, 1]), rv(&[-1, -1])]).unwrap();
        assert!(!other.contains(&rv(&[2, 1]), false).unwrap());
        // Strict implies non-strict.
        for w in [[3, 5], [-2, 7], [0, 4]] {
            let w = rv(&w);
            if cone.contains(&w, true).unwrap() {
                assert!(cone.contains(&w, false).unwrap());
            }
        }
        assert_eq!(
            cone.contains(&rv(&[1, 2, 3]), false),
            Err(FanError::DimensionMismatch)
        );
        assert_eq!(
            Cone::new(vec![rv(&[1, 1]), rv(&[2, 2])]),
            Err(FanError::DependentGenerators)
        );
    }

    #[test]
    fn one_generator_cone() {
        let ray = Cone::new(vec![rv(&[1, 2])]).unwrap();
        assert!(ray.contains(&rv(&[2, 4]), true).unwrap());
        assert!(!ray.contains(&rv(&[-1, -2]), false).unwrap());
        assert!(!ray.contains(&rv(&[1, 1]), false).unwrap());
    }

    #[test]
    fn genericity_2d() {
        let fan = octahedral_fan();
        let co = CoOccurrence {
            vertex_labels: vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        };
        assert!(is_generic(&rv(&[2, 1]), &fan, &co).unwrap().is_generic());
        assert_eq!(
            is_generic(&rv(&[1, 0]), &fan, &co).unwrap(),
            Genericity::NonGeneric { witness: vec![0] }
        );
        assert_eq!(
            is_generic(&rv(&[-2, -2]), &fan, &co).unwrap(),
            Genericity::NonGeneric { witness: vec![2] }
        );
    }

    #[test]
    fn genericity_3d_pair_witness() {
        let fan = fan3(&[
            (0, [-1, 0, 0]),
            (1, [1, -1, 0]),
            (2, [1, 1, 0]),
            (3, [1, 0, -1]),
            (4, [1, 0, 1]),
        ]);
        // Vertices of the two-solid-tori picture: torus corners see
        // {0, one of 1|2, one of 3|4}; core corners see {1,2,3|4}.
        let co = CoOccurrence {
            vertex_labels: vec![
                vec![0, 1, 3],
                vec![0, 1, 4],
                vec![0, 2, 3],
                vec![0, 2, 4],
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![3, 4, 1],
                vec![3, 4, 2],
            ],
        };
        // (0,1,1) = -v1 + v4, and {1,4} co-occur.
        let g = is_generic(&rv(&[0, 1, 1]), &fan, &co).unwrap();
        match g {
            Genericity::NonGeneric { witness } => {
                let vectors: Vec<Vec<Rat>> = witness
                    .iter()
                    .map(|&l| fan.vector(l).unwrap().to_vec())
                    .collect();
                assert!(crate::linalg::in_span(&vectors, &rv(&[0, 1, 1])));
            }
            Genericity::Generic => panic!("(0,1,1) must be non-generic"),
        }
        assert!(is_generic(&rv(&[3, 1, 1]), &fan, &co).unwrap().is_generic());
        // Strict mode agrees here.
        assert!(is_generic_strict(&rv(&[3, 1, 1]), &fan)
            .unwrap()
            .is_generic());
    }

    /// The triangular-prism domain of the two-solid-tori decomposition,
    /// hand-built: corners/edges as in the sector-times-interval cell.
    fn prism_view() -> DomainView {
        // Facet ids: 0 -> label 1 (first axial plane), 1 -> label 2 (second
        // axial plane), 2 -> label 3 (bottom disk), 3 -> label 4 (top disk),
        // 4 -> label 0 (boundary torus).
        DomainView {
            domain: 0,
            facets: vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
            corners: vec![
                (0, [0, 1, 2]), // bottom apex
                (1, [0, 1, 3]), // top apex
                (2, [0, 2, 4]), // bottom outer on first plane
                (3, [1, 2, 4]), // bottom outer on second plane
                (4, [0, 3, 4]), // top outer on first plane
                (5, [1, 3, 4]), // top outer on second plane
            ],
            edges: vec![
                (0, [0, 1], [0, 1]), // core
                (1, [0, 2], [0, 2]),
                (2, [1, 2], [0, 3]),
                (3, [0, 3], [1, 4]),
                (4, [1, 3], [1, 5]),
                (5, [2, 4], [2, 3]),
                (6, [3, 4], [4, 5]),
                (7, [0, 4], [2, 4]),
                (8, [1, 4], [3, 5]),
            ],
        }
    }

    #[test]
    fn prism_domain_compatible_with_torus_fan() {
        let fan = fan3(&[
            (0, [-1, 0, 0]),
            (1, [1, -1, 0]),
            (2, [1, 1, 0]),
            (3, [1, 0, -1]),
            (4, [1, 0, 1]),
        ]);
        assert_eq!(
            domain_compatible_3d(&prism_view(), &fan).unwrap(),
            CellVerdict::Compatible
        );
    }

    #[test]
    fn prism_domain_detects_broken_fan() {
        // Flipping the torus vector leaves a corner of direction space
        // doubly covered: the overlap test must fire.
        let fan = fan3(&[
            (0, [1, 0, 0]),
            (1, [1, -1, 0]),
            (2, [1, 1, 0]),
            (3, [1, 0, -1]),
            (4, [1, 0, 1]),
        ]);
        let verdict = domain_compatible_3d(&prism_view(), &fan).unwrap();
        assert!(!verdict.is_compatible(), "got {verdict:?}");
    }

    #[test]
    fn coplanar_corner_detected() {
        let fan = fan3(&[
            (0, [-1, 0, 0]),
            (1, [1, -1, 0]),
            (2, [1, 1, 0]),
            (3, [1, 0, 0]), // coplanar with 1 and 2
            (4, [1, 0, 1]),
        ]);
        let verdict = domain_compatible_3d(&prism_view(), &fan).unwrap();
        assert_eq!(
            verdict,
            CellVerdict::Incompatible(Incompat::DegenerateCorner { vertex: 0 })
        );
    }
}
