//! Example generators for surfaces: the three-circle sphere decomposition
//! and the symmetric genus-g families (eight domains, or sixteen with a free
//! antipodal involution for quotienting).
//!
//! The genus-g complexes are built from explicit face boundary walks: the
//! surface is the boundary of a slab with g holes along an axis, cut by the
//! three coordinate planes (and, for the sixteen-domain variant, by two
//! extra parallel planes near the ends). One octant walk is written down;
//! the other faces are its reflections, reversed on orientation-reversing
//! ones so that every directed edge is used exactly once.

use std::collections::BTreeMap;

use super::MoveError;
use crate::complex::involution::SurfaceInvolution;
use crate::complex::{DartId, SurfaceComplex, SurfaceKind};
use crate::fan::{fan_compatible_2d, Fan};
use crate::fansearch::{search_fan, SearchOutcome, DEFAULT_BUDGET};
use crate::scalar::Scalar;

/// The classical three-circle decomposition of the sphere: V=6, E=12, F=8,
/// three loops, fan {(1,0), (0,1), (-1,-1)}.
pub fn generate_octahedral<S: Scalar>() -> (SurfaceComplex, Fan<S>) {
    // Vertices 0..6 = +X,-X,+Y,-Y,+Z,-Z; neighbor cycles seen from outside.
    let neighbors: [[usize; 4]; 6] = [
        [2, 4, 3, 5],
        [2, 5, 3, 4],
        [1, 4, 0, 5],
        [0, 4, 1, 5],
        [2, 1, 3, 0],
        [2, 0, 3, 1],
    ];
    let rotations: Vec<Vec<DartId>> = (0..6)
        .map(|v| (0..4).map(|s| 4 * v + s).collect())
        .collect();
    let mut pairing = Vec::new();
    for v in 0..6 {
        for s in 0..4 {
            let u = neighbors[v][s];
            let back = neighbors[u].iter().position(|&w| w == v).unwrap();
            if v < u {
                pairing.push((4 * v + s, 4 * u + back));
            }
        }
    }
    let complex = SurfaceComplex::build(&rotations, &pairing, &[], Some(SurfaceKind::sphere()))
        .expect("octahedral table is valid");
    let fan = Fan::from_integer_entries(2, &[(0, &[1, 0]), (1, &[0, 1]), (2, &[-1, -1])])
        .expect("nonzero vectors");
    debug_assert!(fan_compatible_2d(&complex, &fan).unwrap().compatible);
    (complex, fan)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusVariant {
    Eight,
    Sixteen,
}

/// A generated genus-g complex with its searched fan and, for the sixteen
/// variant, the free antipodal involution.
#[derive(Debug, Clone)]
pub struct GenusComplex<S: Scalar> {
    pub complex: SurfaceComplex,
    pub fan: Fan<S>,
    pub involution: Option<SurfaceInvolution>,
}

/// Symbolic vertices of the slab-with-holes model. Sign arguments are +1/-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum VKey {
    /// Outer boundary on the x-axis.
    XOut(i8),
    /// Left / right x-axis point of hole i (1-based).
    HoleL(u32),
    HoleR(u32),
    /// Outer boundary on the y-axis (front/back).
    YOut(i8),
    /// Center hole on the y-axis (odd genus only).
    YHole(i8),
    /// Central bar on the z-axis (even genus only).
    Z(i8),
    /// Sixteen variant: plane circle meets the outer boundary / the end bar.
    PlaneOut(i8, i8),
    PlaneBar(i8, i8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum EKey {
    /// Outer boundary quadrant arc (sx, sy).
    Out(i8, i8),
    /// Sixteen variant: outer arc split by the plane: outer part (at XOut)
    /// and inner part (toward YOut).
    OutA(i8, i8),
    OutB(i8, i8),
    /// Front / back half of hole i.
    HoleF(u32),
    HoleB(u32),
    /// Quarter of the center hole (odd genus): (sx, sy).
    HoleQ(i8, i8),
    /// Top / bottom of bar j (0-based, j = 0..=g).
    BarT(u32),
    BarB(u32),
    /// Quarters of the central bar (even genus): (sx, sz).
    CBar(i8, i8),
    /// Quarters of the x=0 curve (even genus): (sy, sz).
    Cen(i8, i8),
    /// Front / back x=0 curves (odd genus): (sy, sz).
    FrontBack(i8, i8),
    /// Sixteen variant: end-bar splits: (plane sign, sz).
    BarSplitOuter(i8, i8),
    BarSplitInner(i8, i8),
    /// Sixteen variant: plane circle quarters: (plane sign, sy, sz).
    PlaneArc(i8, i8, i8),
}

struct SlabModel {
    g: u32,
    sixteen: bool,
}

impl SlabModel {
    fn center_hole(&self) -> Option<u32> {
        (self.g % 2 == 1).then_some(self.g.div_ceil(2))
    }

    fn central_bar(&self) -> Option<u32> {
        self.g.is_multiple_of(2).then_some(self.g / 2)
    }

    fn bar_left(&self, j: u32) -> VKey {
        if j == 0 {
            VKey::XOut(-1)
        } else {
            VKey::HoleR(j)
        }
    }

    fn bar_right(&self, j: u32) -> VKey {
        if j == self.g {
            VKey::XOut(1)
        } else {
            VKey::HoleL(j + 1)
        }
    }

    fn endpoints(&self, e: EKey) -> (VKey, VKey) {
        match e {
            EKey::Out(sx, sy) => (VKey::XOut(sx), VKey::YOut(sy)),
            EKey::OutA(sx, sy) => (VKey::XOut(sx), VKey::PlaneOut(sx, sy)),
            EKey::OutB(sx, sy) => (VKey::PlaneOut(sx, sy), VKey::YOut(sy)),
            EKey::HoleF(i) | EKey::HoleB(i) => (VKey::HoleL(i), VKey::HoleR(i)),
            EKey::HoleQ(sx, sy) => {
                let c = self.center_hole().expect("odd genus");
                let x = if sx < 0 {
                    VKey::HoleL(c)
                } else {
                    VKey::HoleR(c)
                };
                (x, VKey::YHole(sy))
            }
            EKey::BarT(j) | EKey::BarB(j) => (self.bar_left(j), self.bar_right(j)),
            EKey::CBar(sx, sz) => {
                let cb = self.central_bar().expect("even genus");
                let x = if sx < 0 {
                    self.bar_left(cb)
                } else {
                    self.bar_right(cb)
                };
                (x, VKey::Z(sz))
            }
            EKey::Cen(sy, sz) => (VKey::YOut(sy), VKey::Z(sz)),
            EKey::FrontBack(sy, sz) => {
                let _ = sz;
                (VKey::YOut(sy), VKey::YHole(sy))
            }
            EKey::BarSplitOuter(s, sz) => {
                let _ = sz;
                (VKey::PlaneBar(s, sz), VKey::XOut(s))
            }
            EKey::BarSplitInner(s, sz) => {
                let inner = if s > 0 {
                    self.bar_left(self.g)
                } else {
                    self.bar_right(0)
                };
                (inner, VKey::PlaneBar(s, sz))
            }
            EKey::PlaneArc(s, sy, sz) => (VKey::PlaneOut(s, sy), VKey::PlaneBar(s, sz)),
        }
    }

    fn reflect_v(&self, v: VKey, axis: usize) -> VKey {
        match (axis, v) {
            (0, VKey::XOut(s)) => VKey::XOut(-s),
            (0, VKey::HoleL(i)) => VKey::HoleR(self.g + 1 - i),
            (0, VKey::HoleR(i)) => VKey::HoleL(self.g + 1 - i),
            (0, VKey::PlaneOut(s, sy)) => VKey::PlaneOut(-s, sy),
            (0, VKey::PlaneBar(s, sz)) => VKey::PlaneBar(-s, sz),
            (1, VKey::YOut(s)) => VKey::YOut(-s),
            (1, VKey::YHole(s)) => VKey::YHole(-s),
            (1, VKey::PlaneOut(s, sy)) => VKey::PlaneOut(s, -sy),
            (2, VKey::Z(s)) => VKey::Z(-s),
            (2, VKey::PlaneBar(s, sz)) => VKey::PlaneBar(s, -sz),
            _ => v,
        }
    }

    fn reflect_e(&self, e: EKey, axis: usize) -> EKey {
        match (axis, e) {
            (0, EKey::Out(sx, sy)) => EKey::Out(-sx, sy),
            (0, EKey::OutA(sx, sy)) => EKey::OutA(-sx, sy),
            (0, EKey::OutB(sx, sy)) => EKey::OutB(-sx, sy),
            (0, EKey::HoleF(i)) => EKey::HoleF(self.g + 1 - i),
            (0, EKey::HoleB(i)) => EKey::HoleB(self.g + 1 - i),
            (0, EKey::HoleQ(sx, sy)) => EKey::HoleQ(-sx, sy),
            (0, EKey::BarT(j)) => EKey::BarT(self.g - j),
            (0, EKey::BarB(j)) => EKey::BarB(self.g - j),
            (0, EKey::CBar(sx, sz)) => EKey::CBar(-sx, sz),
            (0, EKey::BarSplitOuter(s, sz)) => EKey::BarSplitOuter(-s, sz),
            (0, EKey::BarSplitInner(s, sz)) => EKey::BarSplitInner(-s, sz),
            (0, EKey::PlaneArc(s, sy, sz)) => EKey::PlaneArc(-s, sy, sz),
            (1, EKey::Out(sx, sy)) => EKey::Out(sx, -sy),
            (1, EKey::OutA(sx, sy)) => EKey::OutA(sx, -sy),
            (1, EKey::OutB(sx, sy)) => EKey::OutB(sx, -sy),
            (1, EKey::HoleF(i)) => EKey::HoleB(i),
            (1, EKey::HoleB(i)) => EKey::HoleF(i),
            (1, EKey::HoleQ(sx, sy)) => EKey::HoleQ(sx, -sy),
            (1, EKey::Cen(sy, sz)) => EKey::Cen(-sy, sz),
            (1, EKey::FrontBack(sy, sz)) => EKey::FrontBack(-sy, sz),
            (1, EKey::PlaneArc(s, sy, sz)) => EKey::PlaneArc(s, -sy, sz),
            (2, EKey::BarT(j)) => EKey::BarB(j),
            (2, EKey::BarB(j)) => EKey::BarT(j),
            (2, EKey::CBar(sx, sz)) => EKey::CBar(sx, -sz),
            (2, EKey::Cen(sy, sz)) => EKey::Cen(sy, -sz),
            (2, EKey::FrontBack(sy, sz)) => EKey::FrontBack(sy, -sz),
            (2, EKey::BarSplitOuter(s, sz)) => EKey::BarSplitOuter(s, -sz),
            (2, EKey::BarSplitInner(s, sz)) => EKey::BarSplitInner(s, -sz),
            (2, EKey::PlaneArc(s, sy, sz)) => EKey::PlaneArc(s, sy, -sz),
            _ => e,
        }
    }

    /// Boundary walk of the face in the all-positive octant, as directed
    /// edges chained tail-to-head.
    fn base_walk(&self) -> Vec<(EKey, bool)> {
        let g = self.g;
        let mut walk: Vec<(EKey, bool)> = Vec::new();
        let tail_start; // hole index from which the plain run to XOut(+) goes
        if let Some(c) = self.center_hole() {
            self.push_out_start(&mut walk);
            walk.push((EKey::FrontBack(1, 1), true)); // YOut(+) -> YHole(+)
            walk.push((EKey::HoleQ(1, 1), false)); // YHole(+) -> HoleR(c)
            walk.push((EKey::BarT(c), true)); // HoleR(c) -> next
            tail_start = c + 1;
        } else {
            let cb = self.central_bar().expect("even genus");
            self.push_out_start(&mut walk);
            walk.push((EKey::Cen(1, 1), true)); // YOut(+) -> Z(+)
            walk.push((EKey::CBar(1, 1), false)); // Z(+) -> bar_right(cb) = HoleL(cb+1)
            walk.push((EKey::HoleF(cb + 1), true));
            walk.push((EKey::BarT(cb + 1), true));
            tail_start = cb + 2;
        }
        for i in tail_start..=g {
            walk.push((EKey::HoleF(i), true));
            walk.push((EKey::BarT(i), true));
        }
        if self.sixteen {
            // The final bar edge is split by the plane; close through it.
            let last = walk.pop().expect("nonempty");
            match last {
                (EKey::BarT(j), true) if j == g => {}
                other => panic!("unexpected walk tail {other:?}"),
            }
            walk.push((EKey::BarSplitInner(1, 1), true));
            walk.push((EKey::PlaneArc(1, 1, 1), false));
        }
        walk
    }

    fn push_out_start(&self, walk: &mut Vec<(EKey, bool)>) {
        if self.sixteen {
            walk.push((EKey::OutB(1, 1), true)); // PlaneOut(+) -> YOut(+)
        } else {
            walk.push((EKey::Out(1, 1), true)); // XOut(+) -> YOut(+)
        }
    }

    /// The triangle sliced off beyond the plane x = +a (sixteen variant).
    fn base_triangle(&self) -> Vec<(EKey, bool)> {
        vec![
            (EKey::OutA(1, 1), true),          // XOut(+) -> PlaneOut(+,+)
            (EKey::PlaneArc(1, 1, 1), true),   // PlaneOut(+,+) -> PlaneBar(+,+)
            (EKey::BarSplitOuter(1, 1), true), // PlaneBar(+,+) -> XOut(+)
        ]
    }

    fn reflect_walk(&self, walk: &[(EKey, bool)], signs: (i8, i8, i8)) -> Vec<(EKey, bool)> {
        let axes: Vec<usize> = [signs.0, signs.1, signs.2]
            .iter()
            .enumerate()
            .filter(|(_, &s)| s < 0)
            .map(|(i, _)| i)
            .collect();
        let mut mapped: Vec<(EKey, bool)> = walk
            .iter()
            .map(|&(e, fwd)| {
                let mut image = e;
                let (mut p0, mut p1) = self.endpoints(e);
                for &axis in &axes {
                    image = self.reflect_e(image, axis);
                    p0 = self.reflect_v(p0, axis);
                    p1 = self.reflect_v(p1, axis);
                }
                let (q0, q1) = self.endpoints(image);
                let fwd_image = if (p0, p1) == (q0, q1) {
                    fwd
                } else if (p1, p0) == (q0, q1) {
                    !fwd
                } else {
                    panic!("reflection broke endpoints of {e:?}");
                };
                (image, fwd_image)
            })
            .collect();
        if axes.len() % 2 == 1 {
            mapped.reverse();
            for item in &mut mapped {
                item.1 = !item.1;
            }
        }
        mapped
    }

    fn all_faces(&self) -> Vec<Vec<(EKey, bool)>> {
        let mut faces = Vec::new();
        let signs: Vec<(i8, i8, i8)> = [1i8, -1]
            .iter()
            .flat_map(|&sx| {
                [1i8, -1].iter().flat_map(move |&sy| {
                    [1i8, -1]
                        .iter()
                        .map(move |&sz| (sx, sy, sz))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let base = self.base_walk();
        for &s in &signs {
            faces.push(self.reflect_walk(&base, s));
        }
        if self.sixteen {
            let triangle = self.base_triangle();
            for &s in &signs {
                faces.push(self.reflect_walk(&triangle, s));
            }
        }
        faces
    }

    /// Full antipodal map, cell by cell.
    fn antipode_v(&self, v: VKey) -> VKey {
        self.reflect_v(self.reflect_v(self.reflect_v(v, 0), 1), 2)
    }

    fn antipode_e(&self, e: EKey) -> EKey {
        self.reflect_e(self.reflect_e(self.reflect_e(e, 0), 1), 2)
    }
}

/// Assembles a rotation system from face boundary walks: the rotation at a
/// vertex is recovered as sigma = phi o alpha, where phi is the face
/// successor and alpha the edge flip. Returns the complex plus the canonical
/// dart id of each directed symbolic edge.
/// The built complex plus the canonical dart of each directed symbolic edge.
type Assembled = (SurfaceComplex, BTreeMap<(EKey, bool), DartId>);

fn assemble(
    model: &SlabModel,
    faces: &[Vec<(EKey, bool)>],
    surface: SurfaceKind,
) -> Result<Assembled, MoveError> {
    // Index vertices and edges in key order for determinism.
    let mut edge_ids: BTreeMap<EKey, usize> = BTreeMap::new();
    let mut vertex_ids: BTreeMap<VKey, usize> = BTreeMap::new();
    for walk in faces {
        for &(e, _) in walk {
            let next = edge_ids.len();
            edge_ids.entry(e).or_insert(next);
            let (p0, p1) = model.endpoints(e);
            for p in [p0, p1] {
                let next = vertex_ids.len();
                vertex_ids.entry(p).or_insert(next);
            }
        }
    }

    // Directed edge -> external dart, vertices via endpoints.
    let dart_of = |e: EKey, fwd: bool| -> usize { 2 * edge_ids[&e] + usize::from(!fwd) };
    let vertex_of_dart = |model: &SlabModel, e: EKey, fwd: bool| -> usize {
        let (p0, p1) = model.endpoints(e);
        vertex_ids[if fwd { &p0 } else { &p1 }]
    };

    let n_darts = 2 * edge_ids.len();
    let mut phi: Vec<Option<usize>> = vec![None; n_darts];
    for walk in faces {
        for a in 0..walk.len() {
            let (e1, f1) = walk[a];
            let (e2, f2) = walk[(a + 1) % walk.len()];
            let d1 = dart_of(e1, f1);
            if phi[d1].replace(dart_of(e2, f2)).is_some() {
                return Err(MoveError::Internal(format!(
                    "directed edge {e1:?}/{f1} used twice in face walks"
                )));
            }
        }
    }
    let phi: Vec<usize> = phi
        .into_iter()
        .enumerate()
        .map(|(d, x)| x.ok_or(MoveError::Internal(format!("dart {d} missing from walks"))))
        .collect::<Result<_, _>>()?;

    // sigma = phi o alpha; orbits are the vertex rotations.
    let key_by_id: Vec<EKey> = {
        let mut v = vec![None; edge_ids.len()];
        for (&k, &id) in &edge_ids {
            v[id] = Some(k);
        }
        v.into_iter().map(Option::unwrap).collect()
    };
    let vertex_of = |d: usize| vertex_of_dart(model, key_by_id[d / 2], d.is_multiple_of(2));
    let alpha = |d: usize| d ^ 1;
    let sigma: Vec<usize> = (0..n_darts).map(|d| phi[alpha(d)]).collect();
    let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); vertex_ids.len()];
    let mut seen = vec![false; n_darts];
    for start in 0..n_darts {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut d = start;
        loop {
            seen[d] = true;
            orbit.push(d);
            d = sigma[d];
            if d == start {
                break;
            }
        }
        if orbit.len() != 4 {
            return Err(MoveError::Internal(format!(
                "rotation orbit of size {} at dart {start}",
                orbit.len()
            )));
        }
        let v = vertex_of(orbit[0]);
        if orbit.iter().any(|&d| vertex_of(d) != v) {
            return Err(MoveError::Internal(
                "rotation orbit spans two vertices".into(),
            ));
        }
        if !rotations[v].is_empty() {
            return Err(MoveError::Internal(format!(
                "vertex {v} received two orbits"
            )));
        }
        rotations[v] = orbit;
    }

    let pairing: Vec<(usize, usize)> = (0..edge_ids.len()).map(|e| (2 * e, 2 * e + 1)).collect();
    let complex = SurfaceComplex::build(&rotations, &pairing, &[], Some(surface))?;

    // Canonical dart of each directed symbolic edge.
    let mut canon: BTreeMap<(EKey, bool), DartId> = BTreeMap::new();
    for (v, rot) in rotations.iter().enumerate() {
        for (slot, &ext) in rot.iter().enumerate() {
            canon.insert((key_by_id[ext / 2], ext % 2 == 0), 4 * v + slot);
        }
    }
    Ok((complex, canon))
}

/// Builds the symmetric genus-g decomposition with 8 faces (or 16, carrying
/// the antipodal involution). A compatible fan is found by search; failure
/// is loud.
pub fn generate_genus_g<S: Scalar>(
    g: u32,
    variant: GenusVariant,
) -> Result<GenusComplex<S>, MoveError> {
    if g < 1 {
        return Err(MoveError::IncompatibleInput(
            "genus must be at least 1".into(),
        ));
    }
    let model = SlabModel {
        g,
        sixteen: variant == GenusVariant::Sixteen,
    };
    let faces = model.all_faces();
    let (complex, canon) = assemble(&model, &faces, SurfaceKind::orientable(g))?;

    let involution = match variant {
        GenusVariant::Eight => None,
        GenusVariant::Sixteen => {
            let mut dart_map = vec![usize::MAX; complex.n_darts()];
            for (&(e, fwd), &dart) in &canon {
                let image_e = model.antipode_e(e);
                let (p0, p1) = model.endpoints(e);
                let (q0, q1) = model.endpoints(image_e);
                let a0 = model.antipode_v(p0);
                let a1 = model.antipode_v(p1);
                let image_fwd = if (a0, a1) == (q0, q1) {
                    fwd
                } else if (a1, a0) == (q0, q1) {
                    !fwd
                } else {
                    return Err(MoveError::Internal("antipode broke an edge".into()));
                };
                dart_map[dart] = canon[&(image_e, image_fwd)];
            }
            Some(SurfaceInvolution { dart_map })
        }
    };

    let fan = match search_fan::<S>(&complex, DEFAULT_BUDGET)
        .map_err(|e| MoveError::Internal(e.to_string()))?
    {
        SearchOutcome::Found(fan) => fan,
        _ => return Err(MoveError::FanSearchFailed),
    };
    Ok(GenusComplex {
        complex,
        fan,
        involution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::involution::quotient_surface;
    use crate::Rat;

    #[test]
    fn octahedral_is_compatible() {
        let (c, fan) = generate_octahedral::<Rat>();
        assert_eq!(
            (c.n_vertices(), c.n_edges(), c.n_faces(), c.n_loops()),
            (6, 12, 8, 3)
        );
        let report = fan_compatible_2d(&c, &fan).unwrap();
        assert!(report.compatible);
    }

    #[test]
    fn genus_one_eight_counts() {
        let result = generate_genus_g::<Rat>(1, GenusVariant::Eight).unwrap();
        let c = &result.complex;
        assert_eq!(c.n_faces(), 8);
        assert_eq!(c.euler_characteristic(), 0);
        assert_eq!(c.n_vertices(), 8);
        assert_eq!(c.n_edges(), 16);
        // Every face has g+3 = 4 sides.
        for f in c.faces() {
            assert_eq!(f.len(), 4);
        }
        assert!(fan_compatible_2d(c, &result.fan).unwrap().compatible);
    }

    #[test]
    fn genus_two_and_three_counts() {
        for g in [2u32, 3] {
            let result = generate_genus_g::<Rat>(g, GenusVariant::Eight).unwrap();
            let c = &result.complex;
            assert_eq!(c.n_faces(), 8, "g={g}");
            assert_eq!(c.euler_characteristic(), 2 - 2 * g as i64);
            assert_eq!(c.n_vertices(), 2 * g as usize + 6);
            assert_eq!(c.n_edges(), 2 * c.n_vertices());
            for f in c.faces() {
                assert_eq!(f.len(), g as usize + 3, "g={g}");
            }
            assert!(fan_compatible_2d(c, &result.fan).unwrap().compatible);
        }
    }

    #[test]
    fn torus_augmentation_stays_in_the_4k_family() {
        let result = generate_genus_g::<Rat>(1, GenusVariant::Eight).unwrap();
        let (c2, fan2) = crate::moves::augment_surface(&result.complex, &result.fan, 1).unwrap();
        assert_eq!(c2.n_faces(), 16);
        assert!(fan_compatible_2d(&c2, &fan2).unwrap().compatible);
    }

    #[test]
    fn sixteen_variant_carries_free_involution() {
        for g in [1u32, 2] {
            let result = generate_genus_g::<Rat>(g, GenusVariant::Sixteen).unwrap();
            let c = &result.complex;
            assert_eq!(c.n_faces(), 16, "g={g}");
            assert_eq!(c.euler_characteristic(), 2 - 2 * g as i64);
            assert!(fan_compatible_2d(c, &result.fan).unwrap().compatible);
            let s = result.involution.expect("sixteen carries an involution");
            let q = quotient_surface(c, &s).unwrap();
            assert_eq!(q.n_faces(), 8, "g={g}");
            assert_eq!(q.euler_characteristic(), (2 - 2 * g as i64) / 2);
            assert!(!q.computed_orientable());
        }
    }
}
