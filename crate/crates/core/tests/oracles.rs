//! Independent oracles for the compatibility checkers.
//!
//! The 3D checker certifies completeness through corner-cone independence,
//! pairwise interior disjointness and facet pairing. The oracle here goes a
//! different way: exact point location of a dense grid of rational
//! directions in the corner cones (via the cone-membership solve). The two
//! must agree on every generated example and on deliberately broken fans.

use hypfan_core::complex::cell3::CellComplex3;
use hypfan_core::fan::{
    domain_compatible_3d, domain_view, face_compatible_2d, fan_compatible_2d, fan_compatible_3d,
    CellVerdict, Cone, Fan,
};
use hypfan_core::linalg::cross2_sign;
use hypfan_core::moves::{
    generate_genus_g, generate_octahedral, generate_rp3, generate_s3, insert_spheres_3d,
    GenusVariant,
};
use num_rational::Rational64;

use hypfan_core::scalar::Scalar;

/// The oracle grids run over 64-bit rationals: the generic kernels accept
/// any exact scalar, and the small determinants here stay far from overflow.
type R64 = Rational64;

fn rat(n: i64, d: i64) -> R64 {
    R64::from_ratio(n, d)
}

/// Exact point-location oracle for one domain: every direction in a grid
/// must lie in at least one closed corner cone, and a direction strictly
/// inside some cone must be strictly inside exactly one.
fn domain_complete_by_point_location(c: &CellComplex3, fan: &Fan<R64>, o: usize) -> bool {
    let view = match domain_view(c, o) {
        Ok(view) => view,
        Err(_) => return false,
    };
    let mut cones = Vec::new();
    for &(_, facets) in &view.corners {
        let generators: Vec<Vec<R64>> = facets
            .iter()
            .map(|f| {
                let label = view.facets.iter().find(|(g, _)| g == f).unwrap().1;
                fan.vector(label).unwrap().to_vec()
            })
            .collect();
        match Cone::new(generators) {
            Ok(cone) => cones.push(cone),
            Err(_) => return false,
        }
    }
    let range = -3i64..=3;
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                if (a, b, c) == (0, 0, 0) {
                    continue;
                }
                let w = vec![rat(a, 1), rat(b, 1), rat(c, 1)];
                let covered = cones
                    .iter()
                    .filter(|cone| cone.contains(&w, false).unwrap())
                    .count();
                let strict = cones
                    .iter()
                    .filter(|cone| cone.contains(&w, true).unwrap())
                    .count();
                if covered == 0 || strict > 1 {
                    return false;
                }
            }
        }
    }
    true
}

fn oracle_agrees_everywhere(c: &CellComplex3, fan: &Fan<R64>) {
    let report = fan_compatible_3d(c, fan).unwrap();
    for (o, verdict) in &report.cells {
        let oracle = domain_complete_by_point_location(c, fan, *o);
        assert_eq!(
            verdict.is_compatible(),
            oracle,
            "checker and oracle disagree on domain {o}: {verdict:?}"
        );
    }
}

#[test]
fn oracle_agrees_on_s3() {
    let (c, fan) = generate_s3::<R64>();
    oracle_agrees_everywhere(&c, &fan);
}

#[test]
fn oracle_agrees_on_rp3() {
    let (c, fan) = generate_rp3::<R64>().unwrap();
    oracle_agrees_everywhere(&c, &fan);
}

#[test]
fn oracle_agrees_after_3d_insertion() {
    let (c, fan) = generate_s3::<R64>();
    let (c2, fan2, _) = insert_spheres_3d(&c, &fan, 0, None).unwrap();
    oracle_agrees_everywhere(&c2, &fan2);
}

#[test]
fn oracle_and_checker_both_reject_broken_fan() {
    // Flip the torus vector: directions near +x become doubly covered and
    // directions near -x uncovered.
    let (c, _) = generate_s3::<R64>();
    let fan = Fan::from_integer_entries(
        3,
        &[
            (0, &[1, 0, 0]),
            (1, &[1, -1, 0]),
            (2, &[1, 1, 0]),
            (3, &[1, 0, -1]),
            (4, &[1, 0, 1]),
        ],
    )
    .unwrap();
    let report = fan_compatible_3d(&c, &fan).unwrap();
    assert!(!report.compatible);
    for (o, verdict) in &report.cells {
        if !verdict.is_compatible() {
            assert!(
                !domain_complete_by_point_location(&c, &fan, *o),
                "oracle misses the defect the checker found in domain {o}"
            );
        }
    }
}

/// 2D oracle: a compatible face's consecutive arcs tile the circle exactly
/// once, so every probe direction is interior to exactly one arc or on a
/// shared endpoint of two. Probes are drawn from a fine square sweep.
fn face_tiles_circle(labels: &[usize], fan: &Fan<R64>) -> bool {
    let k = labels.len();
    let vectors: Vec<Vec<R64>> = labels
        .iter()
        .map(|&l| fan.vector(l).unwrap().to_vec())
        .collect();
    let turn = cross2_sign(&vectors[0], &vectors[1]);
    if turn == 0 {
        return false;
    }
    let probes: Vec<Vec<R64>> = (0..64).map(|i| square_probe(i, 64)).collect();
    for r in &probes {
        let mut interior = 0;
        let mut boundary = 0;
        for j in 0..k {
            let a = &vectors[j];
            let b = &vectors[(j + 1) % k];
            let (ca, cb) = (cross2_sign(a, r), cross2_sign(r, b));
            let inside = if turn > 0 {
                ca > 0 && cb > 0
            } else {
                ca < 0 && cb < 0
            };
            if inside {
                interior += 1;
            }
            if ca == 0 || cb == 0 {
                boundary += 1;
            }
        }
        let ok = (interior == 1 && boundary == 0) || (interior == 0 && boundary == 2);
        if !ok {
            return false;
        }
    }
    true
}

fn square_probe(i: usize, n: usize) -> Vec<R64> {
    // Walk the boundary of the square [-n, n]^2: dense, all distinct.
    let quarter = i % 4;
    let t = (i / 4) as i64 * 4 + 1; // odd offsets avoid the corner diagonals
    let m = n as i64;
    let (x, y) = match quarter {
        0 => (m, t - m),
        1 => (t - m, m),
        2 => (-m, m - t),
        _ => (m - t, -m),
    };
    vec![rat(x, 1), rat(y, 1)]
}

#[test]
fn circle_tiling_oracle_matches_2d_checker() {
    let (oct, fan) = generate_octahedral::<R64>();
    for f in 0..oct.n_faces() {
        let labels = oct.face_label_sequence(f);
        let verdict = face_compatible_2d(&labels, &fan).unwrap();
        assert_eq!(verdict, CellVerdict::Compatible);
        assert!(
            face_tiles_circle(&labels, &fan),
            "face {f} fails the tiling oracle"
        );
    }
    // A wrong cyclic order must fail both.
    let bad = vec![0usize, 2, 1];
    let verdict = face_compatible_2d(&bad, &fan).unwrap();
    let tiles = face_tiles_circle(&bad, &fan);
    assert_eq!(verdict.is_compatible(), tiles);
}

#[test]
fn genus_fans_verify_and_tile() {
    for g in [1u32, 2] {
        let result = generate_genus_g::<R64>(g, GenusVariant::Eight).unwrap();
        assert!(
            fan_compatible_2d(&result.complex, &result.fan)
                .unwrap()
                .compatible
        );
        for f in 0..result.complex.n_faces() {
            let labels = result.complex.face_label_sequence(f);
            assert!(face_tiles_circle(&labels, &result.fan), "g={g} face {f}");
        }
    }
}

#[test]
fn saddles_have_in_and_out_arcs_in_dimension_3() {
    use hypfan_core::fan::CoOccurrence;
    use hypfan_core::flow::{orient_edges, Direction, FlowInput};

    let (c, fan) = generate_s3::<R64>();
    let co = CoOccurrence::of_cell3(&c);
    let input = FlowInput::of_cell3(&c).unwrap();
    for w in [[3i64, 1, 1], [5, 2, -1], [-7, 3, 2]] {
        let w: Vec<R64> = w.iter().map(|&x| rat(x, 1)).collect();
        let direction = Direction::new(w, &fan, &co).unwrap();
        let graph = orient_edges(&input, &fan, &direction).unwrap();
        for node in &graph.nodes {
            if node.index > 0 && node.index < 3 {
                assert!(graph.arcs.iter().any(|a| a.head == node.vertex));
                assert!(graph.arcs.iter().any(|a| a.tail == node.vertex));
            }
        }
    }
}

#[test]
fn global_rescaling_never_changes_verdicts() {
    let (c, fan) = generate_s3::<R64>();
    let scaled = Fan::new(
        3,
        fan.entries().map(|(label, coords)| {
            let factor = rat(3 + label as i64, 1);
            (label, coords.iter().map(|x| x * factor).collect())
        }),
    )
    .unwrap();
    let a = fan_compatible_3d(&c, &fan).unwrap();
    let b = fan_compatible_3d(&c, &scaled).unwrap();
    for ((o1, v1), (o2, v2)) in a.cells.iter().zip(&b.cells) {
        assert_eq!(o1, o2);
        assert_eq!(v1, v2);
    }
    // Same for the 2D check and the per-domain views.
    let (oct, oct_fan) = generate_octahedral::<R64>();
    let scaled2 = Fan::new(
        2,
        oct_fan
            .entries()
            .map(|(label, coords)| (label, coords.iter().map(|x| x * rat(7, 2)).collect())),
    )
    .unwrap();
    assert_eq!(
        fan_compatible_2d(&oct, &oct_fan).unwrap().compatible,
        fan_compatible_2d(&oct, &scaled2).unwrap().compatible
    );
    let view = domain_view(&c, 0).unwrap();
    assert_eq!(
        domain_compatible_3d(&view, &fan).unwrap(),
        domain_compatible_3d(&view, &scaled).unwrap()
    );
}
