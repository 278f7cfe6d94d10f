//! Certified constructions: example generators, the concentric-sphere
//! insertion/removal surgery, iterated augmentation, and replayable move
//! scripts.

pub mod dim3;
pub mod generators;
pub mod script;
pub mod surgery2;
pub mod surgery3;

use thiserror::Error;

use crate::complex::cell3::Cell3Error;
use crate::complex::involution::InvolutionError;
use crate::complex::{ComplexError, VertexId};
use crate::fan::FanError;
use crate::scalar::Scalar;

pub use dim3::{antipodal_involution_s3, generate_rp3, generate_s3};
pub use generators::{generate_genus_g, generate_octahedral, GenusComplex, GenusVariant};
pub use script::{replay, MoveOp, MoveScript, ReplayState};
pub use surgery2::{augment_surface, insert_spheres_2d, remove_spheres_2d};
pub use surgery3::{augment_cell3, insert_spheres_3d, remove_spheres_3d};

#[derive(Debug, Error)]
pub enum MoveError {
    #[error("cell {0} is not a vertex of the complex")]
    NotAVertex(VertexId),
    #[error("vector does not lie strictly inside the corner cone")]
    VectorOutsideCorner,
    #[error("input not suitable for this move: {0}")]
    IncompatibleInput(String),
    #[error("labels do not form a concentric sphere pair: {0}")]
    NotASpherePair(String),
    #[error("removal would leave a domain with too few corners (cell {0})")]
    WouldCreateDegenerateDomain(usize),
    #[error("no compatible fan found for the generated complex")]
    FanSearchFailed,
    #[error("move produced an invalid result: {0}")]
    Internal(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Cell3(#[from] Cell3Error),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
}

/// Record of one sphere-insertion move: the two new hypersurface labels
/// (inner sphere around the vertex, outer sphere), and their fan vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpherePair<S: Scalar> {
    pub vertex: VertexId,
    pub inner_label: usize,
    pub outer_label: usize,
    /// Vector of the inner sphere: opposite (or a perturbation of the
    /// opposite) of the outer vector.
    pub inner_vector: Vec<S>,
    /// Vector of the outer sphere: strictly inside the corner cone.
    pub outer_vector: Vec<S>,
}

/// Picks the outer vector (inside the corner cone) and the inner vector
/// (its opposite, nudged deeper into the opposite cone while its direction
/// collides with an existing fan direction).
pub(crate) fn choose_sphere_vectors<S: Scalar>(
    corner_vectors: &[Vec<S>],
    fan: &crate::fan::Fan<S>,
    w_prime: Option<Vec<S>>,
) -> Result<(Vec<S>, Vec<S>), MoveError> {
    let dim = corner_vectors[0].len();
    let outer = match w_prime {
        Some(w) => {
            if w.len() != dim {
                return Err(MoveError::Fan(FanError::DimensionMismatch));
            }
            let cone = crate::fan::Cone::new(corner_vectors.to_vec()).map_err(MoveError::Fan)?;
            if !cone.contains(&w, true).map_err(MoveError::Fan)? {
                return Err(MoveError::VectorOutsideCorner);
            }
            w
        }
        None => {
            let mut sum = vec![S::zero(); dim];
            for v in corner_vectors {
                for (s, x) in sum.iter_mut().zip(v) {
                    *s = s.clone() + x.clone();
                }
            }
            sum
        }
    };
    let last = corner_vectors.last().expect("nonempty corner");
    let mut bump = 0i64;
    loop {
        let candidate: Vec<S> = outer
            .iter()
            .zip(last)
            .map(|(o, l)| -(o.clone() + S::from_int(bump) * l.clone()))
            .collect();
        let collides = fan.direction_present(&candidate)
            || crate::fan::positively_parallel(&candidate, &outer);
        if !collides {
            return Ok((candidate, outer));
        }
        bump += 1;
        if bump > 64 {
            return Err(MoveError::Internal(
                "no collision-free inner vector found".into(),
            ));
        }
    }
}
