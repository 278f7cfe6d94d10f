//! Small exact linear algebra: determinants, Gaussian elimination and cone
//! membership for systems of dimension at most 3 (plus a generic fallback).
//!
//! Everything is fraction-free where convenient but fundamentally works over
//! the [`Scalar`](crate::scalar::Scalar) field, so no pivoting strategy is
//! needed for correctness.

use crate::scalar::{sign, Scalar};

/// 2D cross product (determinant of the 2x2 matrix with rows `a`, `b`).
pub fn cross2<S: Scalar>(a: &[S], b: &[S]) -> S {
    a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()
}

/// Sign of the 2D cross product.
pub fn cross2_sign<S: Scalar>(a: &[S], b: &[S]) -> i8 {
    sign(&cross2(a, b))
}

/// Dot product of equal-length vectors.
pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Determinant of the 3x3 matrix with the given rows.
pub fn det3<S: Scalar>(a: &[S], b: &[S], c: &[S]) -> S {
    a[0].clone() * (b[1].clone() * c[2].clone() - b[2].clone() * c[1].clone())
        - a[1].clone() * (b[0].clone() * c[2].clone() - b[2].clone() * c[0].clone())
        + a[2].clone() * (b[0].clone() * c[1].clone() - b[1].clone() * c[0].clone())
}

/// Determinant of a square matrix given by rows.
#[allow(clippy::needless_range_loop)]
pub fn det<S: Scalar>(rows: &[Vec<S>]) -> S {
    let n = rows.len();
    match n {
        0 => S::one(),
        1 => rows[0][0].clone(),
        2 => cross2(&rows[0], &rows[1]),
        3 => det3(&rows[0], &rows[1], &rows[2]),
        _ => {
            // Plain elimination; fine for the sizes we ever see.
            let mut m: Vec<Vec<S>> = rows.to_vec();
            let mut result = S::one();
            for col in 0..n {
                let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
                    Some(p) => p,
                    None => return S::zero(),
                };
                if pivot != col {
                    m.swap(pivot, col);
                    result = -result;
                }
                let p = m[col][col].clone();
                result = result * p.clone();
                for r in col + 1..n {
                    let factor = m[r][col].clone() / p.clone();
                    for c in col..n {
                        let sub = factor.clone() * m[col][c].clone();
                        m[r][c] = m[r][c].clone() - sub;
                    }
                }
            }
            result
        }
    }
}

/// Solves the linear system `columns * alpha = rhs` where `columns` are the
/// column vectors of the matrix, each of length `dim`, and `rhs` has length
/// `dim`. The system may be rectangular (fewer columns than rows); `None` is
/// returned when it is inconsistent or the solution is not unique.
#[allow(clippy::needless_range_loop)]
pub fn solve_columns<S: Scalar>(columns: &[Vec<S>], rhs: &[S]) -> Option<Vec<S>> {
    let dim = rhs.len();
    let k = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == dim));

    // Augmented row-major matrix [A | rhs] with A[r][c] = columns[c][r].
    let mut m: Vec<Vec<S>> = (0..dim)
        .map(|r| {
            let mut row: Vec<S> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();

    let mut pivot_row_of_col: Vec<Option<usize>> = vec![None; k];
    let mut row = 0;
    for col in 0..k {
        let pivot = match (row..dim).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        m.swap(row, pivot);
        let p = m[row][col].clone();
        for c in col..=k {
            m[row][c] = m[row][c].clone() / p.clone();
        }
        for r in 0..dim {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=k {
                    let sub = factor.clone() * m[row][c].clone();
                    m[r][c] = m[r][c].clone() - sub;
                }
            }
        }
        pivot_row_of_col[col] = Some(row);
        row += 1;
    }

    // Unique solution requires full column rank.
    if pivot_row_of_col.iter().any(|p| p.is_none()) {
        return None;
    }
    // Consistency: rows below the rank must have zero rhs.
    for r in row..dim {
        if !m[r][k].is_zero() {
            return None;
        }
    }
    Some(
        pivot_row_of_col
            .iter()
            .map(|p| m[p.unwrap()][k].clone())
            .collect(),
    )
}

/// Rank of the matrix whose rows are the given vectors.
#[allow(clippy::needless_range_loop)]
pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let mut r = 0;
    for c in 0..cols {
        let pivot = match (r..m.len()).find(|&i| !m[i][c].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        m.swap(r, pivot);
        let p = m[r][c].clone();
        for j in c..cols {
            m[r][j] = m[r][j].clone() / p.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let sub = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - sub;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Whether `w` lies in the linear span of `vectors`.
pub fn in_span<S: Scalar>(vectors: &[Vec<S>], w: &[S]) -> bool {
    let mut rows: Vec<Vec<S>> = vectors.to_vec();
    let base = rank(&rows);
    rows.push(w.to_vec());
    rank(&rows) == base
}

/// Strict feasibility of a homogeneous system of strict linear inequalities
/// `row . x > 0` via Fourier-Motzkin elimination. Returns true iff some real
/// (equivalently rational) point satisfies every inequality.
pub fn strict_homogeneous_feasible<S: Scalar>(rows: &[Vec<S>]) -> bool {
    if rows.is_empty() {
        return true;
    }
    let dim = rows[0].len();
    let mut current: Vec<Vec<S>> = rows.to_vec();
    for _ in 0..dim {
        // Eliminate the last variable of each row.
        let var = current.first().map_or(0, |r| r.len() - 1);
        let mut pos: Vec<Vec<S>> = Vec::new();
        let mut neg: Vec<Vec<S>> = Vec::new();
        let mut zero: Vec<Vec<S>> = Vec::new();
        for r in &current {
            match sign(&r[var]) {
                1 => pos.push(r.clone()),
                -1 => neg.push(r.clone()),
                _ => zero.push(r[..var].to_vec()),
            }
        }
        let mut next: Vec<Vec<S>> = zero;
        // Combine p (coef > 0) and q (coef < 0): |q_var| * p + p_var * q.
        for p in &pos {
            for q in &neg {
                let a = p[var].clone();
                let b = -q[var].clone();
                let combined: Vec<S> = (0..var)
                    .map(|i| b.clone() * p[i].clone() + a.clone() * q[i].clone())
                    .collect();
                next.push(combined);
            }
        }
        // A strict pair with nothing left is satisfiable in this variable
        // alone; only the combined constraints survive.
        current = next;
        if current.is_empty() {
            return true;
        }
        if current.first().is_none_or(|r| r.is_empty()) {
            // All variables eliminated: 0 > 0 must not be demanded.
            return false;
        }
    }
    // All remaining rows are zero-dimensional: infeasible (0 > 0).
    current.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        Scalar::from_int(n)
    }

    fn v(coords: &[i64]) -> Vec<BigRational> {
        coords.iter().map(|&c| r(c)).collect()
    }

    #[test]
    fn cross_and_det() {
        assert_eq!(cross2(&v(&[1, 0]), &v(&[0, 1])), r(1));
        assert_eq!(det3(&v(&[1, 0, 0]), &v(&[0, 1, 0]), &v(&[0, 0, 1])), r(1));
        assert_eq!(det3(&v(&[1, 2, 3]), &v(&[2, 4, 6]), &v(&[0, 0, 1])), r(0));
    }

    #[test]
    fn solve_square() {
        // w = 2*(1,0) + 1*(0,1)
        let alpha = solve_columns(&[v(&[1, 0]), v(&[0, 1])], &v(&[2, 1])).unwrap();
        assert_eq!(alpha, v(&[2, 1]));
        // Dependent columns: no unique solution.
        assert!(solve_columns(&[v(&[1, 1]), v(&[2, 2])], &v(&[1, 1])).is_none());
    }

    #[test]
    fn solve_rectangular() {
        // One generator in the plane; w on the ray.
        let alpha = solve_columns(&[v(&[1, 2])], &v(&[3, 6])).unwrap();
        assert_eq!(alpha, v(&[3]));
        // Off the ray: inconsistent.
        assert!(solve_columns(&[v(&[1, 2])], &v(&[3, 5])).is_none());
    }

    #[test]
    fn rank_and_span() {
        assert_eq!(rank(&[v(&[1, 0, 0]), v(&[0, 1, 0])]), 2);
        assert!(in_span(&[v(&[1, 0]), v(&[0, 1])], &v(&[5, -3])));
        assert!(!in_span(&[v(&[1, 1, 0]), v(&[1, -1, 0])], &v(&[0, 1, 1])));
    }

    #[test]
    fn fourier_motzkin() {
        // x > 0, y > 0, x + y > 0: feasible.
        assert!(strict_homogeneous_feasible(&[
            v(&[1, 0]),
            v(&[0, 1]),
            v(&[1, 1])
        ]));
        // x > 0 and -x > 0: infeasible.
        assert!(!strict_homogeneous_feasible(&[v(&[1, 0]), v(&[-1, 0])]));
        // Open half planes meeting in a line direction only: x > 0, -x+y > 0, -y > 0.
        assert!(!strict_homogeneous_feasible(&[
            v(&[1, 0]),
            v(&[-1, 1]),
            v(&[0, -1])
        ]));
    }
}
