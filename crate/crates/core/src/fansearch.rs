//! Realizability search: find a fan compatible with every face of a 2D
//! complex, or certify that none exists over all circular orderings of the
//! loop directions.
//!
//! For a fixed circular ordering, every face must visit the circle of
//! directions winding exactly once; whether the angular gaps can be chosen
//! so that each face step stays under a half turn is a system of circular
//! difference constraints, solved exactly. A satisfying assignment is
//! realized as integer vectors on the boundary of a square, which is
//! centrally symmetric, so "less than a half turn" transfers exactly from
//! parameter space to direction space.

use serde::Serialize;
use thiserror::Error;

use crate::complex::{LoopId, SurfaceComplex};
use crate::fan::{fan_compatible_2d, Fan, FanError};
use crate::scalar::Scalar;
use crate::sphere2;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error("search invariant violated: {0}")]
    Internal(String),
}

/// Three-valued search result.
#[derive(Debug, Clone)]
pub enum SearchOutcome<S: Scalar> {
    Found(Fan<S>),
    Infeasible,
    BudgetExhausted,
}

impl<S: Scalar> SearchOutcome<S> {
    pub fn fan(&self) -> Option<&Fan<S>> {
        match self {
            SearchOutcome::Found(fan) => Some(fan),
            _ => None,
        }
    }
}

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Backtracking search over circular orderings of the loop directions.
/// Any returned fan has been re-verified by the independent compatibility
/// checker, never trusted from search state.
pub fn search_fan<S: Scalar>(
    c: &SurfaceComplex,
    budget: u64,
) -> Result<SearchOutcome<S>, SearchError> {
    let n = c.n_loops();
    let faces: Vec<Vec<LoopId>> = (0..c.n_faces()).map(|f| c.face_label_sequence(f)).collect();

    // Faces that no assignment can satisfy: too short, or consecutive equal
    // labels (zero angle).
    for face in &faces {
        if face.len() < 3 {
            return Ok(SearchOutcome::Infeasible);
        }
        let k = face.len();
        if (0..k).any(|a| face[a] == face[(a + 1) % k]) {
            return Ok(SearchOutcome::Infeasible);
        }
    }
    if n < 3 {
        // Fewer than 3 directions cannot make any face wind exactly once.
        return Ok(SearchOutcome::Infeasible);
    }

    let mut search = Search {
        faces: &faces,
        n,
        budget,
        nodes: 0,
    };
    let mut order = vec![0usize];
    match search.descend(&mut order) {
        Descend::Found(order) => {
            let fan = realize(c, &order)?;
            Ok(SearchOutcome::Found(fan))
        }
        Descend::Exhausted => Ok(SearchOutcome::Infeasible),
        Descend::OutOfBudget => Ok(SearchOutcome::BudgetExhausted),
    }
}

enum Descend {
    Found(Vec<LoopId>),
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    faces: &'a [Vec<LoopId>],
    n: usize,
    budget: u64,
    nodes: u64,
}

impl Search<'_> {
    fn descend(&mut self, order: &mut Vec<LoopId>) -> Descend {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Descend::OutOfBudget;
        }
        let placed = order.len();
        if placed == self.n {
            // Kill the reflection symmetry: demand the neighbor after label
            // 0 to be smaller than the neighbor before it.
            if self.n >= 3 && order[1] > order[self.n - 1] {
                return Descend::Exhausted;
            }
            if position_assignment(self.faces, order).is_some() {
                return Descend::Found(order.clone());
            }
            return Descend::Exhausted;
        }
        let label = placed; // labels are inserted in increasing order
        for position in 1..=placed {
            order.insert(position, label);
            if self.partial_ok(order) {
                match self.descend(order) {
                    Descend::Exhausted => {}
                    other => {
                        order.remove(position);
                        return other;
                    }
                }
            }
            order.remove(position);
        }
        Descend::Exhausted
    }

    /// Necessary condition on a partial order: the subsequence of placed
    /// labels of every face must wind exactly once in either direction
    /// (the relative cyclic order is stable under later insertions).
    fn partial_ok(&self, order: &[LoopId]) -> bool {
        let mut position = vec![usize::MAX; self.n];
        for (p, &l) in order.iter().enumerate() {
            position[l] = p;
        }
        let m = order.len();
        for face in self.faces {
            let placed: Vec<usize> = face
                .iter()
                .filter(|&&l| position[l] != usize::MAX)
                .map(|&l| position[l])
                .collect();
            if placed.len() < 2 {
                continue;
            }
            let mut advance = 0usize;
            let mut steps = 0usize;
            for a in 0..placed.len() {
                let from = placed[a];
                let to = placed[(a + 1) % placed.len()];
                if from != to {
                    steps += 1;
                    advance += (to + m - from) % m;
                }
            }
            // Winding once forward sums to m, once backward to (steps-1)*m.
            if steps >= 2 && advance != m && advance != (steps - 1) * m {
                return false;
            }
        }
        true
    }
}

/// Orients every face walk forward with respect to the circular order: a
/// face advancing once around keeps its direction, one advancing once the
/// other way is reversed. Returns None if some face does not wind exactly
/// once in either direction.
fn normalize_faces(faces: &[Vec<LoopId>], order: &[LoopId]) -> Option<Vec<Vec<LoopId>>> {
    let n = order.len();
    let mut position = vec![usize::MAX; n];
    for (p, &l) in order.iter().enumerate() {
        position[l] = p;
    }
    let mut out = Vec::with_capacity(faces.len());
    for face in faces {
        let k = face.len();
        let advance: usize = (0..k)
            .map(|a| {
                let from = position[face[a]];
                let to = position[face[(a + 1) % k]];
                (to + n - from) % n
            })
            .sum();
        if advance == n {
            out.push(face.clone());
        } else if advance == (k - 1) * n {
            let mut reversed = face.clone();
            reversed.reverse();
            out.push(reversed);
        } else {
            return None;
        }
    }
    Some(out)
}

/// A feasible position (in turns, as exact rationals in [0,1)) for every
/// label, or None: can angular gaps be chosen for this circular order so
/// that every face step spans less than half a turn? Equal spacing is tried
/// first, then the circular difference constraints are solved exactly
/// (Bellman-Ford over rationals with a symbolic strictness margin).
fn position_assignment(raw_faces: &[Vec<LoopId>], order: &[LoopId]) -> Option<Vec<(i64, i64)>> {
    let faces = normalize_faces(raw_faces, order)?;
    let faces = &faces;
    let n = order.len();
    let mut position = vec![usize::MAX; n];
    for (p, &l) in order.iter().enumerate() {
        position[l] = p;
    }

    // Equal spacing works when every face step spans fewer than n/2 slots.
    let equal_ok = faces.iter().all(|face| {
        (0..face.len()).all(|a| {
            let from = position[face[a]];
            let to = position[face[(a + 1) % face.len()]];
            let step = (to + n - from) % n;
            2 * step < n
        })
    });
    if equal_ok {
        return Some((0..n).map(|l| (position[l] as i64, n as i64)).collect());
    }

    // Difference constraints on slot positions u_0 = 0 <= u_1 <= ... < 1,
    // u_b - u_a <= w, with strict inequalities realized by a margin eps.
    // Arc constraints u_b - u_a < 1/2 wrap as u_b - u_a < -1/2 when the face
    // step passes position 0.
    let mut constraints: Vec<(usize, usize, i64, bool)> = Vec::new(); // (a, b, halves, strict): u_b - u_a <= halves/2 - eps*strict
    for slot in 0..n - 1 {
        // u_{k+1} >= u_k + eps  <=>  u_k - u_{k+1} <= -eps.
        constraints.push((slot + 1, slot, 0, true));
    }
    // u_{n-1} <= 1 - eps  <=>  u_{n-1} - u_0 <= 2/2 - eps.
    constraints.push((0, n - 1, 2, true));
    for face in faces {
        for a in 0..face.len() {
            let from = position[face[a]];
            let to = position[face[(a + 1) % face.len()]];
            if from < to {
                constraints.push((from, to, 1, true));
            } else {
                // Wrapping arc: (u_to + 1) - u_from < 1/2.
                constraints.push((from, to, -1, true));
            }
        }
    }
    constraints.sort_unstable();
    constraints.dedup();

    // eps = 1 / (4 * (#constraints + n)); weights in units of eps for exact
    // integer arithmetic: w = halves * H/2 - strict, with H = 4*(m+n).
    let m = constraints.len() as i64;
    let h = 4 * (m + n as i64);
    debug_assert!(h % 2 == 0);
    let weight = |halves: i64, strict: bool| -> i64 { halves * (h / 2) - i64::from(strict) };

    // Bellman-Ford from u_0 = 0; all nodes reachable through the chain
    // constraints, so no virtual source is needed.
    let mut dist: Vec<Option<i64>> = vec![None; n];
    dist[0] = Some(0);
    for round in 0..n {
        let mut changed = false;
        for &(a, b, halves, strict) in &constraints {
            if let Some(da) = dist[a] {
                let candidate = da + weight(halves, strict);
                if dist[b].is_none_or(|db| candidate < db) {
                    dist[b] = Some(candidate);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
        if round == n - 1 && changed {
            return None; // negative cycle: infeasible
        }
    }
    let base = dist[0].unwrap();
    if base < 0 {
        return None;
    }
    // Positions in turns: u_slot = dist_slot / h, shifted so u_0 = 0.
    let mut u = vec![(0i64, 1i64); n];
    for (slot, d) in dist.iter().enumerate() {
        let d = (*d).expect("chain constraints reach every slot") - base;
        u[order[slot]] = (d, h);
    }
    Some(u)
}

/// Direction at parameter t (in turns) on the boundary of the square
/// [-1,1]^2, as an exact integer vector. The parametrization is odd:
/// f(t + 1/2) = -f(t), so arcs shorter than a half turn in parameter space
/// are angular arcs shorter than pi.
fn square_direction(num: i64, den: i64) -> (i64, i64) {
    assert!(den > 0 && num >= 0 && num < den);
    // 8t = seg + frac, frac = p/q in [0,1).
    let seg = (8 * num) / den;
    let p = 8 * num - seg * den;
    let q = den;
    // Return q * f(t) to stay integral.
    let (x, y) = match seg {
        0 => (q, p),
        1 => (q - p, q),
        2 => (-p, q),
        3 => (-q, q - p),
        4 => (-q, -p),
        5 => (p - q, -q),
        6 => (p, -q),
        _ => (q, p - q),
    };
    let g = gcd(x, y);
    let g = if g == 0 { 1 } else { g };
    (x / g, y / g)
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a.abs()
}

/// Places the labels at their assigned positions, verifies exactly, and
/// returns the fan.
fn realize<S: Scalar>(c: &SurfaceComplex, order: &[LoopId]) -> Result<Fan<S>, SearchError> {
    let faces: Vec<Vec<LoopId>> = (0..c.n_faces()).map(|f| c.face_label_sequence(f)).collect();
    let positions = position_assignment(&faces, order)
        .ok_or_else(|| SearchError::Internal("accepted order lost feasibility".into()))?;
    let entries: Vec<(LoopId, Vec<S>)> = positions
        .iter()
        .enumerate()
        .map(|(label, &(num, den))| {
            let (x, y) = square_direction(num, den);
            (label, vec![S::from_int(x), S::from_int(y)])
        })
        .collect();
    let fan = Fan::new(2, entries)?;
    let verify = fan_compatible_2d(c, &fan)?;
    if !verify.compatible {
        return Err(SearchError::Internal(format!(
            "realized fan failed verification: {:?}",
            verify.cells.iter().find(|(_, v)| !v.is_compatible())
        )));
    }
    Ok(fan)
}

/// Outcome of the full realizability pipeline.
#[derive(Debug, Clone, Serialize)]
pub enum Realizability {
    /// A necessary condition already fails.
    RejectedBy {
        check: String,
    },
    Realizable,
    Infeasible,
    BudgetExhausted,
}

#[derive(Debug, Clone, Serialize)]
pub struct RealizabilityReport {
    pub verdict: Realizability,
    #[serde(skip)]
    pub fan: Option<crate::Fan>,
}

/// Runs the parity rejectors first, then the search.
pub fn realizability_report(
    c: &SurfaceComplex,
    budget: u64,
) -> Result<RealizabilityReport, SearchError> {
    // The parity laws apply on the sphere; elsewhere go straight to search.
    if c.euler_characteristic() == 2 && c.component_count() == 1 {
        if let Ok(parity) = sphere2::parity_theorem(c) {
            if !parity.pass {
                return Ok(RealizabilityReport {
                    verdict: Realizability::RejectedBy {
                        check: "parity_theorem".into(),
                    },
                    fan: None,
                });
            }
        }
        for i in 0..c.n_loops() {
            if let Ok(report) = sphere2::vertex_parities(c, i) {
                if !report.pass {
                    return Ok(RealizabilityReport {
                        verdict: Realizability::RejectedBy {
                            check: format!("vertex_parities({i})"),
                        },
                        fan: None,
                    });
                }
            }
        }
        if let Ok(coloring) = sphere2::bicolor(c) {
            for i in 0..c.n_loops() {
                for j in i + 1..c.n_loops() {
                    if let Ok(components) = sphere2::eyes(c, i, j) {
                        for comp in components.iter().filter(|e| e.is_eye()) {
                            if !sphere2::eye_checks(c, comp, &coloring).pass {
                                return Ok(RealizabilityReport {
                                    verdict: Realizability::RejectedBy {
                                        check: format!("eye_checks({i},{j})"),
                                    },
                                    fan: None,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    match search_fan::<crate::Rat>(c, budget)? {
        SearchOutcome::Found(fan) => Ok(RealizabilityReport {
            verdict: Realizability::Realizable,
            fan: Some(fan),
        }),
        SearchOutcome::Infeasible => Ok(RealizabilityReport {
            verdict: Realizability::Infeasible,
            fan: None,
        }),
        SearchOutcome::BudgetExhausted => Ok(RealizabilityReport {
            verdict: Realizability::BudgetExhausted,
            fan: None,
        }),
    }
}
