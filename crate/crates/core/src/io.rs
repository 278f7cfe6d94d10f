//! JSON file formats: complexes (dimension 2 and 3), fans, and the bundle
//! documents the pipeline tools exchange on stdin/stdout.
//!
//! Dimension 2: {"dimension": 2, "vertices": [[d,d,d,d], ...],
//! "edges": [[a,b], ...], "surface": {...}?, "twists": [edge index, ...]?}.
//! Dart ids are non-negative and contiguous from 0. Dimension 3:
//! {"dimension": 3, "cells": {"0": [...], "1": [...], "2": [...],
//! "3": [...]}} with per-cell "boundary" lists and a per-2-cell
//! "hypersurface" label. Fans: {"dimension": n, "vectors": {label:
//! [coord, ...]}} where a coordinate is an integer or a [num, den] pair.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::cell3::{Cell3Error, CellComplex3};
use crate::complex::{ComplexError, SurfaceComplex, SurfaceKind};
use crate::fan::FanError;
use crate::{Fan, Rat};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported dimension {0}")]
    BadDimension(usize),
    #[error("bad rational coordinate")]
    BadRational,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Cell3(#[from] Cell3Error),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error("document is missing field {0:?}")]
    MissingField(&'static str),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SurfaceDoc {
    dimension: usize,
    vertices: Vec<Vec<usize>>,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    surface: Option<SurfaceKindDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    twists: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SurfaceKindDoc {
    orientable: bool,
    genus_or_crosscaps: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Cell3Doc {
    dimension: usize,
    cells: Cell3Cells,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Cell3Cells {
    #[serde(rename = "0")]
    zero: Vec<CellDoc>,
    #[serde(rename = "1")]
    one: Vec<CellDoc>,
    #[serde(rename = "2")]
    two: Vec<CellDoc>,
    #[serde(rename = "3")]
    three: Vec<CellDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CellDoc {
    #[serde(default)]
    boundary: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hypersurface: Option<usize>,
}

/// Complex of either dimension, as read from a file.
#[derive(Debug, Clone)]
pub enum AnyComplex {
    Surface(SurfaceComplex),
    Cell3(CellComplex3),
}

impl AnyComplex {
    pub fn dimension(&self) -> usize {
        match self {
            AnyComplex::Surface(_) => 2,
            AnyComplex::Cell3(_) => 3,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        match self {
            AnyComplex::Surface(c) => c.euler_characteristic(),
            AnyComplex::Cell3(c) => c.euler_characteristic(),
        }
    }
}

pub fn complex_from_json(text: &str) -> Result<AnyComplex, IoError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let dimension = value
        .get("dimension")
        .and_then(serde_json::Value::as_u64)
        .ok_or(IoError::MissingField("dimension"))? as usize;
    match dimension {
        2 => {
            let doc: SurfaceDoc = serde_json::from_value(value)?;
            let surface = doc.surface.map(|s| SurfaceKind {
                orientable: s.orientable,
                genus_or_crosscaps: s.genus_or_crosscaps,
            });
            let pairing: Vec<(usize, usize)> = doc.edges.iter().map(|&[a, b]| (a, b)).collect();
            Ok(AnyComplex::Surface(SurfaceComplex::build(
                &doc.vertices,
                &pairing,
                &doc.twists,
                surface,
            )?))
        }
        3 => {
            let doc: Cell3Doc = serde_json::from_value(value)?;
            let edges: Vec<[usize; 2]> = doc
                .cells
                .one
                .iter()
                .enumerate()
                .map(|(e, cell)| match cell.boundary.as_slice() {
                    [a, b] => Ok([*a, *b]),
                    _ => Err(IoError::Cell3(Cell3Error::BadEdgeEndpoints { cell: e })),
                })
                .collect::<Result<_, _>>()?;
            let faces: Vec<Vec<usize>> = doc
                .cells
                .two
                .iter()
                .map(|cell| cell.boundary.clone())
                .collect();
            let labels: Vec<usize> = doc
                .cells
                .two
                .iter()
                .map(|cell| {
                    cell.hypersurface
                        .ok_or(IoError::MissingField("hypersurface"))
                })
                .collect::<Result<_, _>>()?;
            let domains: Vec<Vec<usize>> = doc
                .cells
                .three
                .iter()
                .map(|cell| cell.boundary.clone())
                .collect();
            Ok(AnyComplex::Cell3(CellComplex3::new(
                doc.cells.zero.len(),
                edges,
                faces,
                domains,
                labels,
            )?))
        }
        other => Err(IoError::BadDimension(other)),
    }
}

pub fn complex_to_json(complex: &AnyComplex) -> String {
    match complex {
        AnyComplex::Surface(c) => {
            let doc = SurfaceDoc {
                dimension: 2,
                vertices: c.rotations(),
                edges: c.pairing().iter().map(|&(a, b)| [a, b]).collect(),
                surface: c.surface().map(|s| SurfaceKindDoc {
                    orientable: s.orientable,
                    genus_or_crosscaps: s.genus_or_crosscaps,
                }),
                twists: c.twisted_edges(),
            };
            serde_json::to_string_pretty(&doc).expect("serializable")
        }
        AnyComplex::Cell3(c) => {
            let doc = Cell3Doc {
                dimension: 3,
                cells: Cell3Cells {
                    zero: (0..c.n_cells(0))
                        .map(|_| CellDoc {
                            boundary: Vec::new(),
                            hypersurface: None,
                        })
                        .collect(),
                    one: c
                        .edge_boundaries()
                        .iter()
                        .map(|e| CellDoc {
                            boundary: e.to_vec(),
                            hypersurface: None,
                        })
                        .collect(),
                    two: (0..c.n_cells(2))
                        .map(|f| CellDoc {
                            boundary: c.face_edges(f).to_vec(),
                            hypersurface: Some(c.face_label(f)),
                        })
                        .collect(),
                    three: c
                        .domain_boundaries()
                        .iter()
                        .map(|o| CellDoc {
                            boundary: o.clone(),
                            hypersurface: None,
                        })
                        .collect(),
                },
            };
            serde_json::to_string_pretty(&doc).expect("serializable")
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum RationalDoc {
    Integer(i64),
    Pair([i64; 2]),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FanDoc {
    dimension: usize,
    vectors: BTreeMap<String, Vec<RationalDoc>>,
}

pub fn fan_from_json(text: &str) -> Result<Fan, IoError> {
    let doc: FanDoc = serde_json::from_str(text)?;
    let mut entries: Vec<(usize, Vec<Rat>)> = Vec::new();
    for (label, coords) in &doc.vectors {
        let label: usize = label.parse().map_err(|_| IoError::BadRational)?;
        let coords: Result<Vec<Rat>, IoError> = coords
            .iter()
            .map(|r| match r {
                RationalDoc::Integer(n) => Ok(Rat::from_integer(BigInt::from(*n))),
                RationalDoc::Pair([n, d]) => {
                    if *d == 0 {
                        Err(IoError::BadRational)
                    } else {
                        Ok(Rat::new(BigInt::from(*n), BigInt::from(*d)))
                    }
                }
            })
            .collect();
        entries.push((label, coords?));
    }
    Ok(Fan::new(doc.dimension, entries)?)
}

pub fn fan_to_json(fan: &Fan) -> String {
    let vectors: BTreeMap<String, Vec<RationalDoc>> = fan
        .entries()
        .map(|(label, coords)| {
            let coords = coords
                .iter()
                .map(|c| {
                    let numer: i64 =
                        num_traits::ToPrimitive::to_i64(c.numer()).expect("coordinate fits in i64");
                    let denom: i64 =
                        num_traits::ToPrimitive::to_i64(c.denom()).expect("coordinate fits in i64");
                    if denom == 1 {
                        RationalDoc::Integer(numer)
                    } else {
                        RationalDoc::Pair([numer, denom])
                    }
                })
                .collect();
            (label.to_string(), coords)
        })
        .collect();
    serde_json::to_string_pretty(&FanDoc {
        dimension: fan.dimension(),
        vectors,
    })
    .expect("serializable")
}

/// Bundle document: a complex plus (optionally) its fan; the unit the CLI
/// pipes between subcommands.
pub struct Bundle {
    pub complex: AnyComplex,
    pub fan: Option<Fan>,
}

pub fn bundle_from_json(text: &str) -> Result<Bundle, IoError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if let Some(complex_value) = value.get("complex") {
        let complex = complex_from_json(&complex_value.to_string())?;
        let fan = match value.get("fan") {
            Some(f) => Some(fan_from_json(&f.to_string())?),
            None => None,
        };
        Ok(Bundle { complex, fan })
    } else {
        // A bare complex document is also accepted.
        Ok(Bundle {
            complex: complex_from_json(text)?,
            fan: None,
        })
    }
}

pub fn bundle_to_json(bundle: &Bundle) -> String {
    let complex: serde_json::Value =
        serde_json::from_str(&complex_to_json(&bundle.complex)).expect("own output parses");
    let mut doc = serde_json::Map::new();
    doc.insert("complex".into(), complex);
    if let Some(fan) = &bundle.fan {
        let fan: serde_json::Value =
            serde_json::from_str(&fan_to_json(fan)).expect("own output parses");
        doc.insert("fan".into(), fan);
    }
    serde_json::to_string_pretty(&serde_json::Value::Object(doc)).expect("serializable")
}
