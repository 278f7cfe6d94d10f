//! Three-dimensional examples: the two-solid-tori decomposition of the
//! 3-sphere cut by the boundary torus, two axial planes and two disk pairs
//! per solid torus, and its antipodal quotient.
//!
//! Angles are quantized to quarter turns: q in {0,1,2,3}. The first solid
//! torus has disk coordinate z1 (axial planes from the z1-lines, horizontal
//! disks from the z2-lines); the second swaps the roles.

use super::MoveError;
use crate::complex::cell3::CellComplex3;
use crate::complex::involution::{quotient_cell3, Involution3};
#[cfg(test)]
use crate::fan::fan_compatible_3d;
use crate::fan::Fan;
use crate::scalar::Scalar;

/// Hypersurface labels of the construction.
pub const LABEL_TORUS: usize = 0;
pub const LABEL_H1_LAMBDA: usize = 1;
pub const LABEL_H1_MU: usize = 2;
pub const LABEL_H2_LAMBDA: usize = 3;
pub const LABEL_H2_MU: usize = 4;

const Q: usize = 4;

fn wrap(q: usize) -> usize {
    q % Q
}

// 0-cells: 16 torus vertices, 4 on each core circle.
fn v_torus(qt: usize, qp: usize) -> usize {
    4 * wrap(qt) + wrap(qp)
}
fn v_core1(qp: usize) -> usize {
    16 + wrap(qp)
}
fn v_core2(qt: usize) -> usize {
    20 + wrap(qt)
}

// 1-cells.
fn e_tv(qt: usize, qp: usize) -> usize {
    4 * wrap(qt) + wrap(qp) // vertical torus arc: theta fixed, phi qp..qp+1
}
fn e_th(qt: usize, qp: usize) -> usize {
    16 + 4 * wrap(qt) + wrap(qp) // horizontal torus arc: phi fixed, theta qt..qt+1
}
fn e_r1(qt: usize, qp: usize) -> usize {
    32 + 4 * wrap(qt) + wrap(qp) // radius of the first solid torus
}
fn e_r2(qt: usize, qp: usize) -> usize {
    48 + 4 * wrap(qt) + wrap(qp)
}
fn e_core1(qp: usize) -> usize {
    64 + wrap(qp)
}
fn e_core2(qt: usize) -> usize {
    68 + wrap(qt)
}

// 2-cells.
fn f_torus(qt: usize, qp: usize) -> usize {
    4 * wrap(qt) + wrap(qp)
}
fn f_plane1(qt: usize, qp: usize) -> usize {
    16 + 4 * wrap(qt) + wrap(qp) // axial half-plane in A1 at theta=qt, phi qp..qp+1
}
fn f_disk1(qp: usize, qt: usize) -> usize {
    32 + 4 * wrap(qp) + wrap(qt) // disk sector in A1 at phi=qp, theta qt..qt+1
}
fn f_plane2(qp: usize, qt: usize) -> usize {
    48 + 4 * wrap(qp) + wrap(qt)
}
fn f_disk2(qt: usize, qp: usize) -> usize {
    64 + 4 * wrap(qt) + wrap(qp)
}

// 3-cells.
fn d_first(qt: usize, qp: usize) -> usize {
    4 * wrap(qt) + wrap(qp)
}
fn d_second(qp: usize, qt: usize) -> usize {
    16 + 4 * wrap(qp) + wrap(qt)
}

/// The decomposition of the 3-sphere along the boundary torus and the four
/// line hypersurfaces, with its exact fan.
pub fn generate_s3<S: Scalar>() -> (CellComplex3, Fan<S>) {
    let mut edges: Vec<[usize; 2]> = vec![[0, 0]; 72];
    for qt in 0..Q {
        for qp in 0..Q {
            edges[e_tv(qt, qp)] = [v_torus(qt, qp), v_torus(qt, qp + 1)];
            edges[e_th(qt, qp)] = [v_torus(qt, qp), v_torus(qt + 1, qp)];
            edges[e_r1(qt, qp)] = [v_core1(qp), v_torus(qt, qp)];
            edges[e_r2(qt, qp)] = [v_core2(qt), v_torus(qt, qp)];
        }
    }
    for q in 0..Q {
        edges[e_core1(q)] = [v_core1(q), v_core1(q + 1)];
        edges[e_core2(q)] = [v_core2(q), v_core2(q + 1)];
    }

    let mut faces: Vec<Vec<usize>> = vec![Vec::new(); 80];
    let mut labels: Vec<usize> = vec![0; 80];
    for qt in 0..Q {
        for qp in 0..Q {
            faces[f_torus(qt, qp)] = vec![
                e_tv(qt, qp),
                e_tv(qt + 1, qp),
                e_th(qt, qp),
                e_th(qt, qp + 1),
            ];
            labels[f_torus(qt, qp)] = LABEL_TORUS;

            faces[f_plane1(qt, qp)] =
                vec![e_core1(qp), e_r1(qt, qp), e_r1(qt, qp + 1), e_tv(qt, qp)];
            labels[f_plane1(qt, qp)] = if qt % 2 == 0 {
                LABEL_H1_LAMBDA
            } else {
                LABEL_H1_MU
            };

            faces[f_disk1(qp, qt)] = vec![e_r1(qt, qp), e_r1(qt + 1, qp), e_th(qt, qp)];
            labels[f_disk1(qp, qt)] = if qp % 2 == 0 {
                LABEL_H2_LAMBDA
            } else {
                LABEL_H2_MU
            };

            faces[f_plane2(qp, qt)] =
                vec![e_core2(qt), e_r2(qt, qp), e_r2(qt + 1, qp), e_th(qt, qp)];
            labels[f_plane2(qp, qt)] = if qp % 2 == 0 {
                LABEL_H2_LAMBDA
            } else {
                LABEL_H2_MU
            };

            faces[f_disk2(qt, qp)] = vec![e_r2(qt, qp), e_r2(qt, qp + 1), e_tv(qt, qp)];
            labels[f_disk2(qt, qp)] = if qt % 2 == 0 {
                LABEL_H1_LAMBDA
            } else {
                LABEL_H1_MU
            };
        }
    }

    let mut domains: Vec<Vec<usize>> = vec![Vec::new(); 32];
    for qt in 0..Q {
        for qp in 0..Q {
            domains[d_first(qt, qp)] = vec![
                f_plane1(qt, qp),
                f_plane1(qt + 1, qp),
                f_disk1(qp, qt),
                f_disk1(qp + 1, qt),
                f_torus(qt, qp),
            ];
            domains[d_second(qp, qt)] = vec![
                f_plane2(qp, qt),
                f_plane2(qp + 1, qt),
                f_disk2(qt, qp),
                f_disk2(qt + 1, qp),
                f_torus(qt, qp),
            ];
        }
    }

    let complex = CellComplex3::new(24, edges, faces, domains, labels)
        .expect("construction indices are in range");
    debug_assert!(complex.validate().is_empty());
    let fan = Fan::from_integer_entries(
        3,
        &[
            (LABEL_TORUS, &[-1, 0, 0]),
            (LABEL_H1_LAMBDA, &[1, -1, 0]),
            (LABEL_H1_MU, &[1, 1, 0]),
            (LABEL_H2_LAMBDA, &[1, 0, -1]),
            (LABEL_H2_MU, &[1, 0, 1]),
        ],
    )
    .expect("nonzero vectors");
    (complex, fan)
}

/// The antipodal map on the generated complex: both angles advance by a
/// half turn. Free and label-preserving.
pub fn antipodal_involution_s3() -> Involution3 {
    let mut map0 = vec![0usize; 24];
    let mut map1 = vec![0usize; 72];
    let mut map2 = vec![0usize; 80];
    let mut map3 = vec![0usize; 32];
    for qt in 0..Q {
        for qp in 0..Q {
            map0[v_torus(qt, qp)] = v_torus(qt + 2, qp + 2);
            map1[e_tv(qt, qp)] = e_tv(qt + 2, qp + 2);
            map1[e_th(qt, qp)] = e_th(qt + 2, qp + 2);
            map1[e_r1(qt, qp)] = e_r1(qt + 2, qp + 2);
            map1[e_r2(qt, qp)] = e_r2(qt + 2, qp + 2);
            map2[f_torus(qt, qp)] = f_torus(qt + 2, qp + 2);
            map2[f_plane1(qt, qp)] = f_plane1(qt + 2, qp + 2);
            map2[f_disk1(qp, qt)] = f_disk1(qp + 2, qt + 2);
            map2[f_plane2(qp, qt)] = f_plane2(qp + 2, qt + 2);
            map2[f_disk2(qt, qp)] = f_disk2(qt + 2, qp + 2);
            map3[d_first(qt, qp)] = d_first(qt + 2, qp + 2);
            map3[d_second(qp, qt)] = d_second(qp + 2, qt + 2);
        }
    }
    for q in 0..Q {
        map0[v_core1(q)] = v_core1(q + 2);
        map0[v_core2(q)] = v_core2(q + 2);
        map1[e_core1(q)] = e_core1(q + 2);
        map1[e_core2(q)] = e_core2(q + 2);
    }
    Involution3 {
        map: [map0, map1, map2, map3],
    }
}

/// The projective-space example: quotient of the 3-sphere construction by
/// the antipodal involution; the fan carries over label for label.
pub fn generate_rp3<S: Scalar>() -> Result<(CellComplex3, Fan<S>), MoveError> {
    let (s3, fan) = generate_s3::<S>();
    let quotient = quotient_cell3(&s3, &antipodal_involution_s3())?;
    debug_assert!(quotient.validate().is_empty());
    Ok((quotient, fan))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn s3_counts_and_validation() {
        let (c, fan) = generate_s3::<Rat>();
        assert_eq!(
            (c.n_cells(0), c.n_cells(1), c.n_cells(2), c.n_cells(3)),
            (24, 72, 80, 32)
        );
        assert_eq!(c.euler_characteristic(), 0);
        let issues = c.validate();
        assert!(issues.is_empty(), "{issues:?}");
        let report = fan_compatible_3d(&c, &fan).unwrap();
        assert!(
            report.compatible,
            "{:?}",
            report.cells.iter().find(|(_, v)| !v.is_compatible())
        );
    }

    #[test]
    fn s3_domains_are_prisms() {
        let (c, _) = generate_s3::<Rat>();
        for o in 0..c.n_cells(3) {
            assert_eq!(c.domain_facets(o).len(), 5);
            assert_eq!(c.domain_vertices(o).len(), 6);
        }
    }

    #[test]
    fn rp3_is_half_of_s3() {
        let (c, fan) = generate_rp3::<Rat>().unwrap();
        assert_eq!(
            (c.n_cells(0), c.n_cells(1), c.n_cells(2), c.n_cells(3)),
            (12, 36, 40, 16)
        );
        assert_eq!(c.euler_characteristic(), 0);
        let issues = c.validate();
        assert!(issues.is_empty(), "{issues:?}");
        let report = fan_compatible_3d(&c, &fan).unwrap();
        assert!(report.compatible);
    }

    #[test]
    fn identity_quotient_fails() {
        let (c, _) = generate_s3::<Rat>();
        let id = crate::complex::involution::identity_involution3(&c);
        assert!(matches!(
            quotient_cell3(&c, &id),
            Err(crate::complex::involution::InvolutionError::NotFree { .. })
        ));
    }
}
