//! The one-parameter flow induced by a generic direction: per-vertex
//! indices, edge orientation, cycle detection, level assignment, domain
//! counting and Morse inequalities.
//!
//! Orientation is computed from local data only: at an endpoint p of a
//! 1-cell e, the coordinate of w along the unique hypersurface through p not
//! containing e decides whether p attracts along e. No flow is integrated.

use serde::Serialize;
use thiserror::Error;

use crate::complex::cell3::{CellComplex3, CellId, HypLabel};
use crate::complex::SurfaceComplex;
use crate::fan::{CoOccurrence, Fan, FanError, Genericity};
use crate::linalg::solve_columns;
use crate::scalar::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlowError {
    #[error("direction is not generic (witness labels {witness:?})")]
    NonGenericDirection { witness: Vec<HypLabel> },
    #[error("hypersurface vectors at vertex {vertex} are dependent")]
    DegenerateVertexBasis { vertex: CellId },
    #[error("edge {edge} has equal endpoint signs; fan and complex are inconsistent")]
    InconsistentEdgeSigns { edge: CellId },
    #[error("flow graph has a cycle")]
    CyclicFlowGraph,
    #[error("1-cell {edge} is not on the right number of hypersurfaces")]
    MalformedEdge { edge: CellId },
    #[error(transparent)]
    Fan(#[from] FanError),
}

/// A direction certified generic for a particular fan and complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Direction<S: Scalar> {
    w: Vec<S>,
}

impl<S: Scalar> Direction<S> {
    pub fn new(w: Vec<S>, fan: &Fan<S>, cooccur: &CoOccurrence) -> Result<Self, FlowError> {
        match crate::fan::is_generic(&w, fan, cooccur)? {
            Genericity::Generic => Ok(Direction { w }),
            Genericity::NonGeneric { witness } => Err(FlowError::NonGenericDirection { witness }),
        }
    }

    pub fn coords(&self) -> &[S] {
        &self.w
    }

    pub fn negated(&self) -> Direction<S> {
        Direction {
            w: self.w.iter().map(|x| -x.clone()).collect(),
        }
    }
}

/// Coordinates of w in the adapted basis at a fixed point, and the count of
/// positive ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexIndex<S: Scalar> {
    pub vertex: CellId,
    pub labels: Vec<HypLabel>,
    pub alphas: Vec<S>,
    pub index: usize,
}

/// Uniform flow view of a complex: label set at each fixed point, and for
/// each 1-cell its two ends with the label of the unique hypersurface
/// through that end not containing the cell.
#[derive(Debug, Clone)]
pub struct FlowInput {
    pub dimension: usize,
    pub vertex_labels: Vec<Vec<HypLabel>>,
    pub edges: Vec<FlowEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowEdge {
    pub id: CellId,
    /// (endpoint vertex, label deciding the sign at that end).
    pub ends: [(CellId, HypLabel); 2],
}

impl FlowInput {
    pub fn of_surface(c: &SurfaceComplex) -> Result<Self, FlowError> {
        let vertex_labels = (0..c.n_vertices())
            .map(|v| {
                let (a, b) = c.loops_at_vertex(v);
                vec![a, b]
            })
            .collect();
        let mut edges = Vec::with_capacity(c.n_edges());
        for (e, &(da, db)) in c.edges().iter().enumerate() {
            let end = |d: usize| {
                let v = c.vertex_of(d);
                // The strand not containing this end: the other slot parity.
                let other = c.loop_of_dart(c.sigma(d));
                (v, other)
            };
            edges.push(FlowEdge {
                id: e,
                ends: [end(da), end(db)],
            });
        }
        Ok(FlowInput {
            dimension: 2,
            vertex_labels,
            edges,
        })
    }

    pub fn of_cell3(c: &CellComplex3) -> Result<Self, FlowError> {
        let vertex_labels: Vec<Vec<HypLabel>> =
            (0..c.n_cells(0)).map(|v| c.vertex_labels(v)).collect();
        let mut edges = Vec::with_capacity(c.n_cells(1));
        for e in 0..c.n_cells(1) {
            let on = c.edge_labels(e);
            if on.len() != 2 {
                return Err(FlowError::MalformedEdge { edge: e });
            }
            let [p, q] = c.edge_endpoints(e);
            let end = |v: CellId| -> Result<(CellId, HypLabel), FlowError> {
                let rest: Vec<HypLabel> = vertex_labels[v]
                    .iter()
                    .copied()
                    .filter(|l| !on.contains(l))
                    .collect();
                match rest.as_slice() {
                    [u] => Ok((v, *u)),
                    _ => Err(FlowError::MalformedEdge { edge: e }),
                }
            };
            edges.push(FlowEdge {
                id: e,
                ends: [end(p)?, end(q)?],
            });
        }
        Ok(FlowInput {
            dimension: 3,
            vertex_labels,
            edges,
        })
    }
}

/// Solves w in the adapted basis at one fixed point.
pub fn vertex_index<S: Scalar>(
    vertex: CellId,
    labels: &[HypLabel],
    fan: &Fan<S>,
    w: &Direction<S>,
) -> Result<VertexIndex<S>, FlowError> {
    let columns: Result<Vec<Vec<S>>, FanError> = labels
        .iter()
        .map(|&l| fan.vector(l).map(<[S]>::to_vec))
        .collect();
    let columns = columns?;
    let alphas =
        solve_columns(&columns, w.coords()).ok_or(FlowError::DegenerateVertexBasis { vertex })?;
    if alphas.iter().any(|a| a.is_zero()) {
        return Err(FlowError::NonGenericDirection {
            witness: labels.to_vec(),
        });
    }
    let index = alphas.iter().filter(|a| a.is_positive()).count();
    Ok(VertexIndex {
        vertex,
        labels: labels.to_vec(),
        alphas,
        index,
    })
}

/// Numbers of fixed points per index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexCounts {
    pub counts: Vec<usize>,
}

impl IndexCounts {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn alternating_sum(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

pub fn index_counts<S: Scalar>(
    input: &FlowInput,
    fan: &Fan<S>,
    w: &Direction<S>,
) -> Result<IndexCounts, FlowError> {
    let mut counts = vec![0usize; input.dimension + 1];
    for (v, labels) in input.vertex_labels.iter().enumerate() {
        let vi = vertex_index(v, labels, fan, w)?;
        counts[vi.index] += 1;
    }
    Ok(IndexCounts { counts })
}

/// Directed arc of the flow graph: tail repels, head attracts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FlowArc {
    pub edge: CellId,
    pub tail: CellId,
    pub head: CellId,
}

#[derive(Debug, Clone)]
pub struct FlowGraph<S: Scalar> {
    pub nodes: Vec<VertexIndex<S>>,
    pub arcs: Vec<FlowArc>,
}

impl<S: Scalar> FlowGraph<S> {
    pub fn index_counts(&self, dimension: usize) -> IndexCounts {
        let mut counts = vec![0usize; dimension + 1];
        for n in &self.nodes {
            counts[n.index] += 1;
        }
        IndexCounts { counts }
    }
}

/// Orients every 1-cell by the sign of w along the deciding label at each
/// end; the two end signs must disagree, making the orientation unique.
pub fn orient_edges<S: Scalar>(
    input: &FlowInput,
    fan: &Fan<S>,
    w: &Direction<S>,
) -> Result<FlowGraph<S>, FlowError> {
    let mut nodes = Vec::with_capacity(input.vertex_labels.len());
    for (v, labels) in input.vertex_labels.iter().enumerate() {
        nodes.push(vertex_index(v, labels, fan, w)?);
    }
    let mut arcs = Vec::with_capacity(input.edges.len());
    for edge in &input.edges {
        let sign_at = |(v, u): (CellId, HypLabel)| -> Result<bool, FlowError> {
            let node = &nodes[v];
            let pos = node
                .labels
                .iter()
                .position(|&l| l == u)
                .ok_or(FlowError::MalformedEdge { edge: edge.id })?;
            Ok(node.alphas[pos].is_positive())
        };
        let s0 = sign_at(edge.ends[0])?;
        let s1 = sign_at(edge.ends[1])?;
        if s0 == s1 {
            return Err(FlowError::InconsistentEdgeSigns { edge: edge.id });
        }
        // Positive coordinate means the end attracts: it is the head.
        let (tail, head) = if s0 {
            (edge.ends[1].0, edge.ends[0].0)
        } else {
            (edge.ends[0].0, edge.ends[1].0)
        };
        arcs.push(FlowArc {
            edge: edge.id,
            tail,
            head,
        });
    }
    Ok(FlowGraph { nodes, arcs })
}

/// Exhaustive depth-first search with back-arc reporting; returns every
/// directed cycle closed by a back arc, deterministically.
pub fn detect_cycles<S: Scalar>(g: &FlowGraph<S>) -> Vec<Vec<CellId>> {
    let n = g.nodes.len();
    let mut out: Vec<Vec<CellId>> = Vec::new();
    let mut adjacency: Vec<Vec<CellId>> = vec![Vec::new(); n];
    for arc in &g.arcs {
        adjacency[arc.tail].push(arc.head);
    }
    for adj in &mut adjacency {
        adj.sort_unstable();
    }

    // 0 = unvisited, 1 = on stack, 2 = done.
    let mut state = vec![0u8; n];
    let mut stack: Vec<(CellId, usize)> = Vec::new();
    let mut path: Vec<CellId> = Vec::new();
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        stack.push((start, 0));
        state[start] = 1;
        path.push(start);
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < adjacency[v].len() {
                let u = adjacency[v][*next];
                *next += 1;
                match state[u] {
                    0 => {
                        state[u] = 1;
                        stack.push((u, 0));
                        path.push(u);
                    }
                    1 => {
                        let pos = path.iter().position(|&x| x == u).expect("on path");
                        out.push(path[pos..].to_vec());
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
                path.pop();
            }
        }
    }
    out
}

/// Topological-order levels, strictly increasing along every arc: the level
/// of a node is the length of the longest directed path into it.
pub fn assign_levels<S: Scalar>(g: &FlowGraph<S>) -> Result<Vec<i64>, FlowError> {
    let n = g.nodes.len();
    let mut indegree = vec![0usize; n];
    let mut adjacency: Vec<Vec<CellId>> = vec![Vec::new(); n];
    for arc in &g.arcs {
        adjacency[arc.tail].push(arc.head);
        indegree[arc.head] += 1;
    }
    let mut levels = vec![0i64; n];
    let mut queue: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| indegree[v] == 0)
        .map(std::cmp::Reverse)
        .collect();
    let mut seen = 0usize;
    while let Some(std::cmp::Reverse(v)) = queue.pop() {
        seen += 1;
        for &u in &adjacency[v] {
            levels[u] = levels[u].max(levels[v] + 1);
            indegree[u] -= 1;
            if indegree[u] == 0 {
                queue.push(std::cmp::Reverse(u));
            }
        }
    }
    if seen != n {
        return Err(FlowError::CyclicFlowGraph);
    }
    Ok(levels)
}

/// Report of the domain-count law F = k 2^n and the jigsaw grouping.
#[derive(Debug, Clone, Serialize)]
pub struct DomainCountReport {
    pub dimension: usize,
    pub domains: usize,
    pub counts: IndexCounts,
    pub attractor_law_holds: bool,
    pub repeller_law_holds: bool,
    /// Every top cell has exactly one attractor and one repeller corner.
    pub corners_unique: bool,
    /// Grouping domains by attractor yields groups of size exactly 2^n.
    pub jigsaw_groups: Vec<(CellId, usize)>,
    pub jigsaw_law_holds: bool,
    pub pass: bool,
}

/// Checks F = c_n 2^n = c_0 2^n plus the per-domain corner structure, given
/// the list of corner vertices for every top cell.
pub fn check_domain_count<S: Scalar>(
    input: &FlowInput,
    top_cell_corners: &[Vec<CellId>],
    fan: &Fan<S>,
    w: &Direction<S>,
) -> Result<DomainCountReport, FlowError> {
    let n = input.dimension;
    let counts = index_counts(input, fan, w)?;
    let domains = top_cell_corners.len();
    let pow = 1usize << n;
    let attractor_law_holds = domains == counts.counts[n] * pow;
    let repeller_law_holds = domains == counts.counts[0] * pow;

    let mut index_of_vertex = vec![usize::MAX; input.vertex_labels.len()];
    for (v, labels) in input.vertex_labels.iter().enumerate() {
        index_of_vertex[v] = vertex_index(v, labels, fan, w)?.index;
    }

    let mut corners_unique = true;
    let mut groups: std::collections::BTreeMap<CellId, usize> = std::collections::BTreeMap::new();
    for corners in top_cell_corners {
        let attractors: Vec<CellId> = corners
            .iter()
            .copied()
            .filter(|&v| index_of_vertex[v] == n)
            .collect();
        let repellers: Vec<CellId> = corners
            .iter()
            .copied()
            .filter(|&v| index_of_vertex[v] == 0)
            .collect();
        if attractors.len() != 1 || repellers.len() != 1 {
            corners_unique = false;
            continue;
        }
        *groups.entry(attractors[0]).or_insert(0) += 1;
    }
    let jigsaw_groups: Vec<(CellId, usize)> = groups.into_iter().collect();
    let jigsaw_law_holds = corners_unique
        && jigsaw_groups.iter().all(|&(_, size)| size == pow)
        && jigsaw_groups.len() == counts.counts[n];

    let pass = attractor_law_holds && repeller_law_holds && corners_unique && jigsaw_law_holds;
    Ok(DomainCountReport {
        dimension: n,
        domains,
        counts,
        attractor_law_holds,
        repeller_law_holds,
        corners_unique,
        jigsaw_groups,
        jigsaw_law_holds,
        pass,
    })
}

/// Corner vertex lists of the top cells of a surface complex.
pub fn surface_top_cell_corners(c: &SurfaceComplex) -> Vec<Vec<CellId>> {
    (0..c.n_faces())
        .map(|f| c.face_vertex_sequence(f))
        .collect()
}

/// Corner vertex lists of the 3-cells of an incidence complex.
pub fn cell3_top_cell_corners(c: &CellComplex3) -> Vec<Vec<CellId>> {
    (0..c.n_cells(3))
        .map(|o| c.domain_vertices(o).into_iter().collect())
        .collect()
}

/// The loop-pair recomputation of c_n on the sphere:
/// c_n = sum over pairs i<j with w strictly inside cone(v_i, v_j) of
/// |L_i meet L_j|, which must also be even.
#[derive(Debug, Clone, Serialize)]
pub struct AttractorPairReport {
    pub pair_contributions: Vec<((HypLabel, HypLabel), usize)>,
    pub pair_sum: usize,
    pub c_n: usize,
    pub matches_index_count: bool,
    pub sum_is_even: bool,
    pub pass: bool,
}

pub fn attractor_pair_decomposition_s2<S: Scalar>(
    c: &SurfaceComplex,
    fan: &Fan<S>,
    w: &Direction<S>,
) -> Result<AttractorPairReport, FlowError> {
    let input = FlowInput::of_surface(c)?;
    let counts = index_counts(&input, fan, w)?;
    let c_n = counts.counts[2];

    let mut crossings: std::collections::BTreeMap<(HypLabel, HypLabel), usize> =
        std::collections::BTreeMap::new();
    for v in 0..c.n_vertices() {
        let (a, b) = c.loops_at_vertex(v);
        if a != b {
            *crossings.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
    }

    let mut pair_contributions = Vec::new();
    let mut pair_sum = 0usize;
    for (&(i, j), &count) in &crossings {
        let vi = fan.vector(i)?.to_vec();
        let vj = fan.vector(j)?.to_vec();
        let inside = match crate::fan::Cone::new(vec![vi, vj]) {
            Ok(cone) => cone.contains(w.coords(), true)?,
            Err(_) => false,
        };
        if inside {
            pair_contributions.push(((i, j), count));
            pair_sum += count;
        }
    }
    let matches_index_count = pair_sum == c_n;
    let sum_is_even = pair_sum.is_multiple_of(2);
    Ok(AttractorPairReport {
        pair_contributions,
        pair_sum,
        c_n,
        matches_index_count,
        sum_is_even,
        pass: matches_index_count && sum_is_even,
    })
}

/// Morse inequality report for caller-supplied Betti numbers.
#[derive(Debug, Clone, Serialize)]
pub struct MorseReport {
    pub alternating_ok: Vec<bool>,
    pub equality_at_top: bool,
    pub weak_ok: Vec<bool>,
    pub total_at_least_betti_sum: bool,
    pub pass: bool,
}

pub fn morse_inequalities(counts: &IndexCounts, betti: &[i64]) -> MorseReport {
    let n = counts.counts.len() - 1;
    assert_eq!(betti.len(), n + 1, "betti numbers must match dimension");
    let alt = |xs: &dyn Fn(usize) -> i64, i: usize| -> i64 {
        (0..=i)
            .map(|j| {
                let v = xs(j);
                if (i - j).is_multiple_of(2) {
                    v
                } else {
                    -v
                }
            })
            .sum()
    };
    let c = |j: usize| counts.counts[j] as i64;
    let b = |j: usize| betti[j];
    let alternating_ok: Vec<bool> = (0..=n).map(|i| alt(&c, i) >= alt(&b, i)).collect();
    let equality_at_top = alt(&c, n) == alt(&b, n);
    let weak_ok: Vec<bool> = (0..=n).map(|i| c(i) >= b(i)).collect();
    let total_at_least_betti_sum = counts.total() as i64 >= betti.iter().sum::<i64>();
    let pass = alternating_ok.iter().all(|&x| x)
        && equality_at_top
        && weak_ok.iter().all(|&x| x)
        && total_at_least_betti_sum;
    MorseReport {
        alternating_ok,
        equality_at_top,
        weak_ok,
        total_at_least_betti_sum,
        pass,
    }
}
