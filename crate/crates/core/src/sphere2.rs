//! Theorems specific to the 2-sphere: checkerboard coloring, color balance,
//! eyes and eyelashes, vertex parities, the N/V/F parity equivalences and
//! the corner pairing behind them.
//!
//! All region computations are flood fills over the face-adjacency graph,
//! forbidding crossings of the given loops; no geometry is used.

use serde::Serialize;
use thiserror::Error;

use crate::complex::{FaceId, LoopId, SurfaceComplex, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Sphere2Error {
    #[error("complex is not a connected sphere (chi = {chi}, components = {components})")]
    NotASphere { chi: i64, components: usize },
    #[error("face adjacency is not 2-colorable (conflict at face {face})")]
    NotBipartite { face: FaceId },
    #[error("loops {0} and {1} do not intersect")]
    DisjointLoops(LoopId, LoopId),
    #[error("loop {0} out of range")]
    UnknownLoop(LoopId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Color {
    Black,
    White,
}

impl Color {
    fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Checkerboard coloring of the faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceColoring {
    pub colors: Vec<Color>,
}

fn require_sphere(c: &SurfaceComplex) -> Result<(), Sphere2Error> {
    let chi = c.euler_characteristic();
    let components = c.component_count();
    if chi != 2 || components != 1 {
        return Err(Sphere2Error::NotASphere { chi, components });
    }
    Ok(())
}

/// Breadth-first 2-coloring of the face adjacency graph; face 0 is white.
pub fn bicolor(c: &SurfaceComplex) -> Result<FaceColoring, Sphere2Error> {
    require_sphere(c)?;
    let mut colors: Vec<Option<Color>> = vec![None; c.n_faces()];
    let adjacency = face_adjacency(c);
    let mut queue = std::collections::VecDeque::new();
    for start in 0..c.n_faces() {
        if colors[start].is_some() {
            continue;
        }
        colors[start] = Some(Color::White);
        queue.push_back(start);
        while let Some(f) = queue.pop_front() {
            let mine = colors[f].unwrap();
            for &g in &adjacency[f] {
                match colors[g] {
                    None => {
                        colors[g] = Some(mine.other());
                        queue.push_back(g);
                    }
                    Some(existing) if existing == mine => {
                        return Err(Sphere2Error::NotBipartite { face: g })
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(FaceColoring {
        colors: colors.into_iter().map(Option::unwrap).collect(),
    })
}

fn face_adjacency(c: &SurfaceComplex) -> Vec<Vec<FaceId>> {
    let mut adjacency: Vec<Vec<FaceId>> = vec![Vec::new(); c.n_faces()];
    for e in 0..c.n_edges() {
        let (fa, fb) = c.edge_faces(e);
        adjacency[fa].push(fb);
        adjacency[fb].push(fa);
    }
    adjacency
}

/// Flood-fill components of the face set, crossing only edges whose loop is
/// not in `barrier`.
fn face_components(c: &SurfaceComplex, barrier: &[LoopId]) -> Vec<Vec<FaceId>> {
    let mut component: Vec<Option<usize>> = vec![None; c.n_faces()];
    let mut components: Vec<Vec<FaceId>> = Vec::new();
    for start in 0..c.n_faces() {
        if component[start].is_some() {
            continue;
        }
        let id = components.len();
        let mut members = Vec::new();
        let mut stack = vec![start];
        component[start] = Some(id);
        while let Some(f) = stack.pop() {
            members.push(f);
            for e in 0..c.n_edges() {
                if barrier.contains(&c.loop_of_edge(e)) {
                    continue;
                }
                let (fa, fb) = c.edge_faces(e);
                for (from, to) in [(fa, fb), (fb, fa)] {
                    if from == f && component[to].is_none() {
                        component[to] = Some(id);
                        stack.push(to);
                    }
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

#[derive(Debug, Clone, Serialize)]
pub struct RegionBalance {
    pub faces: usize,
    pub black: usize,
    pub white: usize,
    pub balanced: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ColorBalanceReport {
    pub regions: Vec<RegionBalance>,
    pub pass: bool,
}

/// Region selector for the balance check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Whole,
    ComplementOf(LoopId),
}

/// Counts black and white faces per region; every region must balance.
pub fn color_balance(
    c: &SurfaceComplex,
    coloring: &FaceColoring,
    region: Region,
) -> Result<ColorBalanceReport, Sphere2Error> {
    require_sphere(c)?;
    let groups: Vec<Vec<FaceId>> = match region {
        Region::Whole => vec![(0..c.n_faces()).collect()],
        Region::ComplementOf(i) => {
            if i >= c.n_loops() {
                return Err(Sphere2Error::UnknownLoop(i));
            }
            face_components(c, &[i])
        }
    };
    let regions: Vec<RegionBalance> = groups
        .iter()
        .map(|faces| {
            let black = faces
                .iter()
                .filter(|&&f| coloring.colors[f] == Color::Black)
                .count();
            let white = faces.len() - black;
            RegionBalance {
                faces: faces.len(),
                black,
                white,
                balanced: black == white,
            }
        })
        .collect();
    let pass = regions.iter().all(|r| r.balanced);
    Ok(ColorBalanceReport { regions, pass })
}

/// One connected component of the complement of two crossing loops. It is an
/// eye when exactly two crossing points of the loops lie on its closure.
#[derive(Debug, Clone, Serialize)]
pub struct EyeComponent {
    pub loops: (LoopId, LoopId),
    pub faces: Vec<FaceId>,
    /// Vertices of L_i meet L_j on the closure.
    pub corners: Vec<VertexId>,
    /// Other boundary vertices on the first loop.
    pub eyelashes_on_i: Vec<VertexId>,
    /// Other boundary vertices on the second loop.
    pub eyelashes_on_j: Vec<VertexId>,
}

impl EyeComponent {
    pub fn is_eye(&self) -> bool {
        self.corners.len() == 2
    }
}

/// Components of the complement of two crossing loops, with corner and
/// eyelash bookkeeping.
pub fn eyes(c: &SurfaceComplex, i: LoopId, j: LoopId) -> Result<Vec<EyeComponent>, Sphere2Error> {
    require_sphere(c)?;
    if i >= c.n_loops() {
        return Err(Sphere2Error::UnknownLoop(i));
    }
    if j >= c.n_loops() {
        return Err(Sphere2Error::UnknownLoop(j));
    }
    let crossing = (0..c.n_vertices()).any(|v| {
        let (a, b) = c.loops_at_vertex(v);
        (a == i && b == j) || (a == j && b == i)
    });
    if i == j || !crossing {
        return Err(Sphere2Error::DisjointLoops(i, j));
    }

    let components = face_components(c, &[i, j]);
    let mut out = Vec::new();
    for faces in components {
        let is_member = |f: FaceId| faces.binary_search(&f).is_ok();
        let mut corners = Vec::new();
        let mut eyelashes_on_i = Vec::new();
        let mut eyelashes_on_j = Vec::new();
        for v in 0..c.n_vertices() {
            let touches = (0..4).any(|s| is_member(c.face_at_corner(4 * v + s)));
            if !touches {
                continue;
            }
            let (a, b) = c.loops_at_vertex(v);
            let (lo, hi) = (a.min(b), a.max(b));
            if (lo, hi) == (i.min(j), i.max(j)) {
                corners.push(v);
            } else if a == i || b == i {
                eyelashes_on_i.push(v);
            } else if a == j || b == j {
                eyelashes_on_j.push(v);
            }
        }
        out.push(EyeComponent {
            loops: (i, j),
            faces,
            corners,
            eyelashes_on_i,
            eyelashes_on_j,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct EyeReport {
    pub balanced: bool,
    pub corner_domains_differ: bool,
    pub eyelash_count_i: usize,
    pub eyelash_count_j: usize,
    pub eyelashes_odd: bool,
    pub pass: bool,
}

/// The three eye laws: balanced colors inside, oppositely colored corner
/// domains, odd eyelash count on each loop.
pub fn eye_checks(c: &SurfaceComplex, eye: &EyeComponent, coloring: &FaceColoring) -> EyeReport {
    let is_member = |f: FaceId| eye.faces.binary_search(&f).is_ok();
    let black = eye
        .faces
        .iter()
        .filter(|&&f| coloring.colors[f] == Color::Black)
        .count();
    let balanced = 2 * black == eye.faces.len();

    // The unique member face at each corner.
    let mut corner_colors = Vec::new();
    for &v in &eye.corners {
        let mine: Vec<FaceId> = (0..4)
            .map(|s| c.face_at_corner(4 * v + s))
            .filter(|&f| is_member(f))
            .collect();
        if let [f] = mine.as_slice() {
            corner_colors.push(Some(coloring.colors[*f]));
        } else {
            corner_colors.push(None);
        }
    }
    let corner_domains_differ = matches!(
        corner_colors.as_slice(),
        [Some(a), Some(b)] if a != b
    );

    let eyelash_count_i = eye.eyelashes_on_i.len();
    let eyelash_count_j = eye.eyelashes_on_j.len();
    let eyelashes_odd = eyelash_count_i % 2 == 1 && eyelash_count_j % 2 == 1;
    let pass = balanced && corner_domains_differ && eyelashes_odd && eye.is_eye();
    EyeReport {
        balanced,
        corner_domains_differ,
        eyelash_count_i,
        eyelash_count_j,
        eyelashes_odd,
        pass,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexParityReport {
    pub vertices_on_loop: usize,
    pub on_loop_multiple_of_4: bool,
    pub side_vertex_counts: Vec<usize>,
    pub sides_odd: bool,
    /// 4 V(U) + 3 V(L_i) = 2 E(closure(U)) per side.
    pub euler_relation_holds: bool,
    pub pass: bool,
}

/// Parity laws for one loop: the number of vertices on it is a multiple of
/// 4, and each side of its complement contains an odd number of vertices.
pub fn vertex_parities(c: &SurfaceComplex, i: LoopId) -> Result<VertexParityReport, Sphere2Error> {
    require_sphere(c)?;
    if i >= c.n_loops() {
        return Err(Sphere2Error::UnknownLoop(i));
    }
    let on_loop: Vec<VertexId> = (0..c.n_vertices())
        .filter(|&v| {
            let (a, b) = c.loops_at_vertex(v);
            a == i || b == i
        })
        .collect();
    let components = face_components(c, &[i]);
    let mut side_vertex_counts = Vec::new();
    let mut euler_relation_holds = true;
    for faces in &components {
        let is_member = |f: FaceId| faces.binary_search(&f).is_ok();
        let inside = (0..c.n_vertices())
            .filter(|&v| {
                let (a, b) = c.loops_at_vertex(v);
                a != i && b != i && is_member(c.face_at_corner(4 * v))
            })
            .count();
        side_vertex_counts.push(inside);
        let closure_edges = (0..c.n_edges())
            .filter(|&e| {
                let (fa, fb) = c.edge_faces(e);
                is_member(fa) || is_member(fb)
            })
            .count();
        if 4 * inside + 3 * on_loop.len() != 2 * closure_edges {
            euler_relation_holds = false;
        }
    }
    let on_loop_multiple_of_4 = on_loop.len().is_multiple_of(4);
    let sides_odd = components.len() == 2 && side_vertex_counts.iter().all(|&n| n % 2 == 1);
    let pass = on_loop_multiple_of_4 && sides_odd && euler_relation_holds;
    Ok(VertexParityReport {
        vertices_on_loop: on_loop.len(),
        on_loop_multiple_of_4,
        side_vertex_counts,
        sides_odd,
        euler_relation_holds,
        pass,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ParityTheoremReport {
    pub loops: usize,
    pub vertices: usize,
    pub faces: usize,
    pub loops_odd: bool,
    pub vertices_2_mod_4: bool,
    pub faces_multiple_of_4: bool,
    pub pass: bool,
}

/// The parity equivalences: N odd, V = 2 mod 4, F = 0 mod 4.
pub fn parity_theorem(c: &SurfaceComplex) -> Result<ParityTheoremReport, Sphere2Error> {
    require_sphere(c)?;
    let loops = c.n_loops();
    let vertices = c.n_vertices();
    let faces = c.n_faces();
    let loops_odd = loops % 2 == 1;
    let vertices_2_mod_4 = vertices % 4 == 2;
    let faces_multiple_of_4 = faces.is_multiple_of(4);
    Ok(ParityTheoremReport {
        loops,
        vertices,
        faces,
        loops_odd,
        vertices_2_mod_4,
        faces_multiple_of_4,
        pass: loops_odd && vertices_2_mod_4 && faces_multiple_of_4,
    })
}

/// A perfect matching of the vertices into eye-corner pairs.
#[derive(Debug, Clone, Serialize)]
pub struct CornerPairing {
    /// (pair of vertices, witnessing loop pair).
    pub pairs: Vec<([VertexId; 2], (LoopId, LoopId))>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CornerPairingReport {
    pub pairing: Option<CornerPairing>,
    /// Per loop: the number of pairs split by it (fixed side: the one
    /// containing face 0 of the complement).
    pub pairs_split_by_loop: Vec<usize>,
    pub splits_all_odd: bool,
    /// Per pair: the number of loops separating it.
    pub loops_separating_pair: Vec<usize>,
    pub separators_all_odd: bool,
    /// Both sums count the incidence matrix, so they must agree.
    pub double_count_identity: bool,
    pub pass: bool,
}

/// Searches for a perfect matching of the vertices where every pair is the
/// corner set of some eye; verifies the parity consequences. Backtracking
/// returns the lexicographically least pairing.
pub fn corner_pairing(c: &SurfaceComplex) -> Result<CornerPairingReport, Sphere2Error> {
    require_sphere(c)?;
    // Candidate pairs from every crossing loop pair.
    let mut candidates: std::collections::BTreeMap<[VertexId; 2], (LoopId, LoopId)> =
        std::collections::BTreeMap::new();
    for i in 0..c.n_loops() {
        for j in i + 1..c.n_loops() {
            match eyes(c, i, j) {
                Ok(components) => {
                    for comp in components {
                        if let [a, b] = comp.corners.as_slice() {
                            candidates.entry([*a.min(b), *a.max(b)]).or_insert((i, j));
                        }
                    }
                }
                Err(Sphere2Error::DisjointLoops(..)) => continue,
                Err(e) => return Err(e),
            }
        }
    }

    let n = c.n_vertices();
    let mut partner_options: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &[a, b] in candidates.keys() {
        partner_options[a].push(b);
        partner_options[b].push(a);
    }
    for opts in &mut partner_options {
        opts.sort_unstable();
    }

    // Depth-first matching on the lowest unmatched vertex, partners tried in
    // ascending order: the first complete matching is lexicographically
    // least.
    let mut matched: Vec<Option<VertexId>> = vec![None; n];
    fn solve(matched: &mut Vec<Option<VertexId>>, options: &[Vec<VertexId>]) -> bool {
        let v = match matched.iter().position(Option::is_none) {
            Some(v) => v,
            None => return true,
        };
        for &u in &options[v] {
            if u > v && matched[u].is_none() {
                matched[v] = Some(u);
                matched[u] = Some(v);
                if solve(matched, options) {
                    return true;
                }
                matched[v] = None;
                matched[u] = None;
            }
        }
        false
    }
    let found = solve(&mut matched, &partner_options);

    if !found {
        return Ok(CornerPairingReport {
            pairing: None,
            pairs_split_by_loop: Vec::new(),
            splits_all_odd: false,
            loops_separating_pair: Vec::new(),
            separators_all_odd: false,
            double_count_identity: false,
            pass: false,
        });
    }

    let mut pairs = Vec::new();
    for v in 0..n {
        if let Some(u) = matched[v] {
            if v < u {
                pairs.push(([v, u], candidates[&[v, u]]));
            }
        }
    }

    // Fixed side of each loop: the component of its complement containing
    // the lowest face id. Membership of a vertex: strictly inside that side.
    let mut inside: Vec<Vec<bool>> = Vec::with_capacity(c.n_loops());
    for i in 0..c.n_loops() {
        let components = face_components(c, &[i]);
        let side = components
            .iter()
            .find(|faces| faces.binary_search(&0).is_ok())
            .expect("face 0 is somewhere");
        let is_member = |f: FaceId| side.binary_search(&f).is_ok();
        inside.push(
            (0..n)
                .map(|v| {
                    let (a, b) = c.loops_at_vertex(v);
                    a != i && b != i && is_member(c.face_at_corner(4 * v))
                })
                .collect(),
        );
    }

    let pairs_split_by_loop: Vec<usize> = (0..c.n_loops())
        .map(|i| {
            pairs
                .iter()
                .filter(|([a, b], _)| inside[i][*a] != inside[i][*b])
                .count()
        })
        .collect();
    let loops_separating_pair: Vec<usize> = pairs
        .iter()
        .map(|([a, b], _)| {
            (0..c.n_loops())
                .filter(|&i| inside[i][*a] != inside[i][*b])
                .count()
        })
        .collect();
    let splits_all_odd = pairs_split_by_loop.iter().all(|&k| k % 2 == 1);
    let separators_all_odd = loops_separating_pair.iter().all(|&k| k % 2 == 1);
    let double_count_identity =
        pairs_split_by_loop.iter().sum::<usize>() == loops_separating_pair.iter().sum::<usize>();
    let pass = splits_all_odd && separators_all_odd && double_count_identity;
    Ok(CornerPairingReport {
        pairing: Some(CornerPairing { pairs }),
        pairs_split_by_loop,
        splits_all_odd,
        loops_separating_pair,
        separators_all_odd,
        double_count_identity,
        pass,
    })
}

/// Runs the entire suite on one sphere complex; used by tests and the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct SphereSuiteReport {
    pub parity: ParityTheoremReport,
    pub balance_pass: bool,
    pub eyes_pass: bool,
    pub vertex_parities_pass: bool,
    pub corner_pairing_pass: bool,
    pub pass: bool,
}

pub fn sphere_suite(c: &SurfaceComplex) -> Result<SphereSuiteReport, Sphere2Error> {
    let coloring = bicolor(c)?;
    let mut balance_pass = color_balance(c, &coloring, Region::Whole)?.pass;
    for i in 0..c.n_loops() {
        balance_pass &= color_balance(c, &coloring, Region::ComplementOf(i))?.pass;
    }
    let mut eyes_pass = true;
    for i in 0..c.n_loops() {
        for j in i + 1..c.n_loops() {
            match eyes(c, i, j) {
                Ok(components) => {
                    for comp in components.iter().filter(|comp| comp.is_eye()) {
                        eyes_pass &= eye_checks(c, comp, &coloring).pass;
                    }
                }
                Err(Sphere2Error::DisjointLoops(..)) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    let mut vertex_parities_pass = true;
    for i in 0..c.n_loops() {
        vertex_parities_pass &= vertex_parities(c, i)?.pass;
    }
    let parity = parity_theorem(c)?;
    let corner_pairing_pass = corner_pairing(c)?.pass;
    let pass =
        parity.pass && balance_pass && eyes_pass && vertex_parities_pass && corner_pairing_pass;
    Ok(SphereSuiteReport {
        parity,
        balance_pass,
        eyes_pass,
        vertex_parities_pass,
        corner_pairing_pass,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::generators::generate_octahedral;
    use crate::Rat;

    fn octahedral() -> SurfaceComplex {
        generate_octahedral::<Rat>().0
    }

    #[test]
    fn octahedral_checkerboard() {
        let c = octahedral();
        let coloring = bicolor(&c).unwrap();
        let black = coloring
            .colors
            .iter()
            .filter(|&&x| x == Color::Black)
            .count();
        assert_eq!(black, 4);
        let whole = color_balance(&c, &coloring, Region::Whole).unwrap();
        assert!(whole.pass);
        for i in 0..3 {
            let sides = color_balance(&c, &coloring, Region::ComplementOf(i)).unwrap();
            assert_eq!(sides.regions.len(), 2);
            assert!(sides.regions.iter().all(|r| r.black == 2 && r.white == 2));
        }
    }

    #[test]
    fn octahedral_eyes() {
        let c = octahedral();
        let components = eyes(&c, 0, 1).unwrap();
        assert_eq!(components.len(), 4);
        let coloring = bicolor(&c).unwrap();
        for comp in &components {
            assert!(comp.is_eye());
            let report = eye_checks(&c, comp, &coloring);
            assert!(report.pass, "{report:?}");
            assert_eq!(report.eyelash_count_i, 1);
            assert_eq!(report.eyelash_count_j, 1);
        }
        assert!(matches!(
            eyes(&c, 0, 0),
            Err(Sphere2Error::DisjointLoops(0, 0))
        ));
    }

    #[test]
    fn octahedral_vertex_parities() {
        let c = octahedral();
        for i in 0..3 {
            let report = vertex_parities(&c, i).unwrap();
            assert!(report.pass, "{report:?}");
            assert_eq!(report.vertices_on_loop, 4);
            assert_eq!(report.side_vertex_counts, vec![1, 1]);
        }
    }

    #[test]
    fn octahedral_parity_theorem() {
        let c = octahedral();
        let report = parity_theorem(&c).unwrap();
        assert!(report.pass);
        assert_eq!((report.loops, report.vertices, report.faces), (3, 6, 8));
    }

    #[test]
    fn octahedral_corner_pairing() {
        let c = octahedral();
        let report = corner_pairing(&c).unwrap();
        assert!(report.pass, "{report:?}");
        let pairing = report.pairing.unwrap();
        assert_eq!(pairing.pairs.len(), 3);
        // Lexicographically least: vertex 0 pairs with its smallest
        // available eye partner.
        assert_eq!(pairing.pairs[0].0[0], 0);
    }

    #[test]
    fn non_sphere_rejected() {
        let rotations = vec![vec![0, 1, 2, 3]];
        let pairing = vec![(0, 2), (1, 3)];
        let torus = SurfaceComplex::build(&rotations, &pairing, &[], None).unwrap();
        assert!(matches!(
            bicolor(&torus),
            Err(Sphere2Error::NotASphere { .. })
        ));
    }

    /// Two loops crossing exactly twice: four digon faces.
    fn digon_complex() -> SurfaceComplex {
        let rotations = vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]];
        let pairing = vec![(0, 4), (1, 7), (2, 6), (3, 5)];
        SurfaceComplex::build(&rotations, &pairing, &[], None).unwrap()
    }

    #[test]
    fn zero_eyelash_eyes_fail_their_checks() {
        // Each complement component of the two loops has 2 corners and no
        // eyelashes; zero is even, so the eye law must reject it, matching
        // the search's verdict that no fan exists for this complex.
        let c = digon_complex();
        let coloring = bicolor(&c).unwrap();
        let components = eyes(&c, 0, 1).unwrap();
        assert_eq!(components.len(), 4);
        for comp in &components {
            assert!(comp.is_eye());
            let report = eye_checks(&c, comp, &coloring);
            assert_eq!((report.eyelash_count_i, report.eyelash_count_j), (0, 0));
            assert!(!report.pass);
        }
    }

    #[test]
    fn two_vertex_loop_fails_mod_four() {
        let c = digon_complex();
        let report = vertex_parities(&c, 0).unwrap();
        assert_eq!(report.vertices_on_loop, 2);
        assert!(!report.on_loop_multiple_of_4);
    }

    #[test]
    fn single_loop_pair_has_trivial_pairing() {
        let c = digon_complex();
        let report = corner_pairing(&c).unwrap();
        let pairing = report.pairing.expect("the two crossing points pair up");
        assert_eq!(pairing.pairs.len(), 1);
        assert_eq!(pairing.pairs[0].0, [0, 1]);
    }

    #[test]
    fn four_crossing_components_are_raw() {
        // An equator crossed four times by a wave: the two polar components
        // meet the crossing set in all four points and are reported raw;
        // the four lenses along the equator are eyes.
        // Slots at each vertex: 0 = equator east, 1 = wave on the north
        // side, 2 = equator west, 3 = wave on the south side.
        let dart = |v: usize, s: usize| 4 * v + s;
        let mut pairing = Vec::new();
        for k in 0..4usize {
            pairing.push((dart(k, 0), dart((k + 1) % 4, 2)));
        }
        // North arcs join v0-v1 and v2-v3; south arcs v1-v2 and v3-v0.
        pairing.push((dart(0, 1), dart(1, 1)));
        pairing.push((dart(2, 1), dart(3, 1)));
        pairing.push((dart(1, 3), dart(2, 3)));
        pairing.push((dart(3, 3), dart(0, 3)));
        let rotations: Vec<Vec<usize>> = (0..4)
            .map(|v| (0..4).map(|s| dart(v, s)).collect())
            .collect();
        let c = SurfaceComplex::build(&rotations, &pairing, &[], None).unwrap();
        assert_eq!(c.euler_characteristic(), 2);
        assert_eq!(c.n_loops(), 2);
        let components = eyes(&c, 0, 1).unwrap();
        assert_eq!(components.len(), 6);
        let raw = components.iter().filter(|comp| !comp.is_eye()).count();
        let lens = components.iter().filter(|comp| comp.is_eye()).count();
        assert_eq!((raw, lens), (2, 4));
        for comp in components.iter().filter(|comp| !comp.is_eye()) {
            assert_eq!(comp.corners.len(), 4);
        }
    }

    #[test]
    fn suite_passes_after_surgery() {
        let (c, fan) = generate_octahedral::<Rat>();
        let (c2, _, _) = crate::moves::insert_spheres_2d(&c, &fan, 0, None).unwrap();
        let report = sphere_suite(&c2).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.parity.loops, 5);
    }
}
