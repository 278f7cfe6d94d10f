//! Replayable move scripts: a JSON array of {"op": ..., "args": {...}}
//! entries. Replaying the same script always reproduces the same complex,
//! cell for cell.

use serde::{Deserialize, Serialize};

use super::dim3::{generate_rp3, generate_s3};
use super::generators::{generate_genus_g, generate_octahedral, GenusVariant};
use super::surgery2::{insert_spheres_2d, remove_spheres_2d};
use super::surgery3::{insert_spheres_3d, remove_spheres_3d};
use super::{MoveError, SpherePair};
use crate::complex::cell3::CellComplex3;
use crate::complex::SurfaceComplex;
use crate::scalar::Scalar;
use crate::{Fan, Rat};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "op", content = "args", rename_all = "snake_case")]
pub enum MoveOp {
    GenerateOctahedral,
    GenerateGenus {
        g: u32,
        variant: String,
    },
    GenerateS3,
    GenerateRp3,
    InsertSpheres {
        vertex: usize,
        #[serde(default)]
        w_prime: Option<Vec<[i64; 2]>>,
    },
    RemoveSpheres {
        vertex: usize,
        inner_label: usize,
        outer_label: usize,
    },
    Augment {
        k: usize,
    },
}

pub type MoveScript = Vec<MoveOp>;

/// State carried through a replay: the current complex and fan.
#[derive(Debug, Clone)]
pub enum ReplayState {
    Surface(SurfaceComplex, Fan),
    Cell3(CellComplex3, Fan),
}

impl ReplayState {
    pub fn domain_count(&self) -> usize {
        match self {
            ReplayState::Surface(c, _) => c.n_faces(),
            ReplayState::Cell3(c, _) => c.n_cells(3),
        }
    }

    pub fn fan(&self) -> &Fan {
        match self {
            ReplayState::Surface(_, fan) | ReplayState::Cell3(_, fan) => fan,
        }
    }
}

fn parse_w_prime(w: &Option<Vec<[i64; 2]>>) -> Result<Option<Vec<Rat>>, MoveError> {
    match w {
        None => Ok(None),
        Some(entries) => {
            let mut out = Vec::with_capacity(entries.len());
            for &[num, den] in entries {
                if den == 0 {
                    return Err(MoveError::IncompatibleInput("zero denominator".into()));
                }
                out.push(Rat::from_ratio(num, den));
            }
            Ok(Some(out))
        }
    }
}

/// Executes a script from scratch. The first operation must be a generator.
pub fn replay(script: &[MoveOp]) -> Result<ReplayState, MoveError> {
    let mut state: Option<ReplayState> = None;
    for op in script {
        state = Some(step(state, op)?);
    }
    state.ok_or_else(|| MoveError::IncompatibleInput("empty script".into()))
}

fn step(state: Option<ReplayState>, op: &MoveOp) -> Result<ReplayState, MoveError> {
    match op {
        MoveOp::GenerateOctahedral => {
            let (c, fan) = generate_octahedral();
            Ok(ReplayState::Surface(c, fan))
        }
        MoveOp::GenerateGenus { g, variant } => {
            let variant = match variant.as_str() {
                "eight" | "8" => GenusVariant::Eight,
                "sixteen" | "16" => GenusVariant::Sixteen,
                other => {
                    return Err(MoveError::IncompatibleInput(format!(
                        "unknown genus variant {other:?}"
                    )))
                }
            };
            let result = generate_genus_g(*g, variant)?;
            Ok(ReplayState::Surface(result.complex, result.fan))
        }
        MoveOp::GenerateS3 => {
            let (c, fan) = generate_s3();
            Ok(ReplayState::Cell3(c, fan))
        }
        MoveOp::GenerateRp3 => {
            let (c, fan) = generate_rp3()?;
            Ok(ReplayState::Cell3(c, fan))
        }
        MoveOp::InsertSpheres { vertex, w_prime } => {
            let w = parse_w_prime(w_prime)?;
            match require(state)? {
                ReplayState::Surface(c, fan) => {
                    let (c2, fan2, _) = insert_spheres_2d(&c, &fan, *vertex, w)?;
                    Ok(ReplayState::Surface(c2, fan2))
                }
                ReplayState::Cell3(c, fan) => {
                    let (c2, fan2, _) = insert_spheres_3d(&c, &fan, *vertex, w)?;
                    Ok(ReplayState::Cell3(c2, fan2))
                }
            }
        }
        MoveOp::RemoveSpheres {
            vertex,
            inner_label,
            outer_label,
        } => match require(state)? {
            ReplayState::Surface(c, fan) => {
                let pair = pair_from_fan(&fan, *vertex, *inner_label, *outer_label)?;
                let (c2, fan2) = remove_spheres_2d(&c, &fan, &pair)?;
                Ok(ReplayState::Surface(c2, fan2))
            }
            ReplayState::Cell3(c, fan) => {
                let pair = pair_from_fan(&fan, *vertex, *inner_label, *outer_label)?;
                let (c2, fan2) = remove_spheres_3d(&c, &fan, &pair)?;
                Ok(ReplayState::Cell3(c2, fan2))
            }
        },
        MoveOp::Augment { k } => match require(state)? {
            ReplayState::Surface(c, fan) => {
                let (c2, fan2) = super::surgery2::augment_surface(&c, &fan, *k)?;
                Ok(ReplayState::Surface(c2, fan2))
            }
            ReplayState::Cell3(c, fan) => {
                let (c2, fan2) = super::surgery3::augment_cell3(&c, &fan, *k)?;
                Ok(ReplayState::Cell3(c2, fan2))
            }
        },
    }
}

fn require(state: Option<ReplayState>) -> Result<ReplayState, MoveError> {
    state.ok_or_else(|| MoveError::IncompatibleInput("script must start with a generator".into()))
}

fn pair_from_fan(
    fan: &Fan,
    vertex: usize,
    inner_label: usize,
    outer_label: usize,
) -> Result<SpherePair<Rat>, MoveError> {
    Ok(SpherePair {
        vertex,
        inner_label,
        outer_label,
        inner_vector: fan.vector(inner_label)?.to_vec(),
        outer_vector: fan.vector(outer_label)?.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn script_round_trips_through_json() {
        let script = vec![
            MoveOp::GenerateOctahedral,
            MoveOp::InsertSpheres {
                vertex: 0,
                w_prime: None,
            },
            MoveOp::RemoveSpheres {
                vertex: 0,
                inner_label: 3,
                outer_label: 4,
            },
            MoveOp::Augment { k: 2 },
        ];
        let text = serde_json::to_string(&script).unwrap();
        assert!(text.contains("\"op\":\"generate_octahedral\""));
        let back: MoveScript = serde_json::from_str(&text).unwrap();
        assert_eq!(back, script);
    }

    #[test]
    fn replay_is_deterministic_and_counts_match() {
        let script = vec![
            MoveOp::GenerateOctahedral,
            MoveOp::InsertSpheres {
                vertex: 0,
                w_prime: None,
            },
            MoveOp::Augment { k: 1 },
        ];
        let a = replay(&script).unwrap();
        let b = replay(&script).unwrap();
        assert_eq!(a.domain_count(), 24);
        match (a, b) {
            (ReplayState::Surface(ca, fa), ReplayState::Surface(cb, fb)) => {
                assert_eq!(ca, cb);
                assert_eq!(fa, fb);
            }
            _ => panic!("surface expected"),
        }
    }

    #[test]
    fn insert_remove_script_is_identity() {
        let base = replay(&[MoveOp::GenerateOctahedral]).unwrap();
        let round = replay(&[
            MoveOp::GenerateOctahedral,
            MoveOp::InsertSpheres {
                vertex: 2,
                w_prime: None,
            },
            MoveOp::RemoveSpheres {
                vertex: 2,
                inner_label: 3,
                outer_label: 4,
            },
        ])
        .unwrap();
        match (base, round) {
            (ReplayState::Surface(ca, fa), ReplayState::Surface(cb, fb)) => {
                assert_eq!(ca, cb);
                assert_eq!(fa, fb);
            }
            _ => panic!("surface expected"),
        }
    }

    #[test]
    fn moves_before_generator_fail() {
        let err = replay(&[MoveOp::Augment { k: 1 }]);
        assert!(err.is_err());
    }
}
