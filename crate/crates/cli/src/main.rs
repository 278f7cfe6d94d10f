//! hypfan: validate, analyze and transform hyperbolic orbit decompositions.
//!
//! Subcommands exchange JSON bundle documents ({"complex": ..., "fan": ...})
//! on stdin/stdout, so they compose into pipelines:
//!
//!   hypfan generate octahedral | hypfan flow --w 2,1
//!
//! Exit codes: 0 all asserted checks pass, 1 a check fails, 2 usage error,
//! 3 internal invariant violation.

mod dot;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypfan_core::fan::{domain_compatible_3d, domain_view, CellVerdict, CoOccurrence};
use hypfan_core::fansearch::{self, Realizability};
use hypfan_core::flow::{self, Direction, FlowInput};
use hypfan_core::io::{self, AnyComplex, Bundle};
use hypfan_core::moves::{self, GenusVariant, MoveScript};
use hypfan_core::rng::SplitMix64;
use hypfan_core::sphere2;
use hypfan_core::{rat, Fan, Rat};

#[derive(Parser)]
#[command(
    name = "hypfan",
    version,
    about = "Hyperbolic orbit decompositions toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args)]
struct InputArgs {
    /// Input file; stdin when omitted.
    file: Option<String>,
    /// Fan file (overrides any fan in the bundle).
    #[arg(long)]
    fan: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a complex (and alongside it a fan when provided).
    Validate {
        #[command(flatten)]
        input: InputArgs,
        /// Worker threads for the per-domain fan checks.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the full sphere suite: coloring, balances, eyes, parities.
    CheckS2 {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Analyze the flow of a generic direction.
    Flow {
        #[command(flatten)]
        input: InputArgs,
        /// Direction components, e.g. "2,1" or "3/2,1,-1".
        #[arg(long)]
        w: Option<String>,
        /// Betti numbers for the Morse inequalities, e.g. "1,0,1".
        #[arg(long)]
        betti: Option<String>,
        /// Sample this many seeded random generic directions and log cycle
        /// findings instead of analyzing a single direction.
        #[arg(long)]
        scan: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Generate a named example with its fan.
    Generate {
        #[command(subcommand)]
        what: GenerateWhat,
    },
    /// Apply a surgery move to the piped bundle.
    Move {
        #[command(subcommand)]
        which: MoveWhich,
    },
    /// Search for a compatible fan.
    Search {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = fansearch::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Replay a move script.
    Replay { script: String },
    /// Emit DOT (optionally with a face coloring or an oriented flow).
    Export {
        #[command(flatten)]
        input: InputArgs,
        /// Overlay the checkerboard face coloring.
        #[arg(long)]
        color: bool,
        /// Orient the edges by this direction and emit the flow digraph.
        #[arg(long)]
        w: Option<String>,
    },
}

#[derive(Subcommand)]
enum GenerateWhat {
    /// The three-circle sphere example.
    Octahedral,
    /// Symmetric genus-g surface.
    Genus {
        #[arg(long)]
        g: u32,
        /// 8 or 16 domains.
        #[arg(long, default_value = "8")]
        variant: String,
    },
    /// The two-solid-tori 3-sphere example.
    S3,
    /// Its antipodal quotient.
    Rp3,
}

#[derive(Subcommand)]
enum MoveWhich {
    /// Insert two concentric spheres around a vertex.
    Insert {
        #[arg(long)]
        vertex: usize,
        /// Outer sphere vector, e.g. "1,1"; auto when omitted.
        #[arg(long)]
        w_prime: Option<String>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Remove a concentric sphere pair.
    Remove {
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        inner: usize,
        #[arg(long)]
        outer: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Insert k times at the lowest vertex id.
    Augment {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Check,
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check => 1,
            Failure::Internal(_) => 3,
        }
    }
}

#[derive(serde::Serialize)]
struct Verdict {
    name: String,
    pass: bool,
    details: serde_json::Value,
}

#[derive(serde::Serialize)]
struct Report {
    verdicts: Vec<Verdict>,
}

impl Report {
    fn pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = String::new();
                for v in &self.verdicts {
                    out.push_str(if v.pass { "pass  " } else { "FAIL  " });
                    out.push_str(&v.name);
                    out.push('\n');
                }
                out
            }
            _ => {
                let mut text = serde_json::to_string_pretty(self).expect("serializable");
                text.push('\n');
                text
            }
        }
    }
}

fn verdict(name: &str, pass: bool, details: impl serde::Serialize) -> Verdict {
    Verdict {
        name: name.to_string(),
        pass,
        details: serde_json::to_value(details).expect("serializable"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Check => {}
                Failure::Internal(msg) => eprintln!("internal error: {msg}"),
            }
            ExitCode::from(failure.code())
        }
    }
}

fn read_input(path: &Option<String>) -> Result<String, Failure> {
    match path {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
        }
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn load_bundle(input: &InputArgs) -> Result<Bundle, Failure> {
    let text = read_input(&input.file)?;
    let mut bundle =
        io::bundle_from_json(&text).map_err(|e| Failure::Usage(format!("parse: {e}")))?;
    if let Some(path) = &input.fan {
        let fan_text =
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
        bundle.fan =
            Some(io::fan_from_json(&fan_text).map_err(|e| Failure::Usage(format!("fan: {e}")))?);
    }
    Ok(bundle)
}

fn parse_rationals(text: &str) -> Result<Vec<Rat>, Failure> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            match part.split_once('/') {
                Some((n, d)) => {
                    let n: i64 = n
                        .parse()
                        .map_err(|_| Failure::Usage(format!("bad rational {part}")))?;
                    let d: i64 = d
                        .parse()
                        .map_err(|_| Failure::Usage(format!("bad rational {part}")))?;
                    if d == 0 {
                        return Err(Failure::Usage(format!("zero denominator in {part}")));
                    }
                    Ok(rat(n, d))
                }
                None => {
                    let n: i64 = part
                        .parse()
                        .map_err(|_| Failure::Usage(format!("bad integer {part}")))?;
                    Ok(rat(n, 1))
                }
            }
        })
        .collect()
}

fn parse_betti(text: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad betti {p}")))
        })
        .collect()
}

fn require_fan(bundle: &Bundle) -> Result<&Fan, Failure> {
    bundle
        .fan
        .as_ref()
        .ok_or_else(|| Failure::Usage("a fan is required (--fan or bundle)".into()))
}

fn cooccurrence(complex: &AnyComplex) -> CoOccurrence {
    match complex {
        AnyComplex::Surface(c) => CoOccurrence::of_surface(c),
        AnyComplex::Cell3(c) => CoOccurrence::of_cell3(c),
    }
}

fn flow_input(complex: &AnyComplex) -> Result<FlowInput, Failure> {
    match complex {
        AnyComplex::Surface(c) => FlowInput::of_surface(c),
        AnyComplex::Cell3(c) => FlowInput::of_cell3(c),
    }
    .map_err(|e| Failure::Usage(e.to_string()))
}

fn generic_direction(
    complex: &AnyComplex,
    fan: &Fan,
    w: &[Rat],
) -> Result<Direction<Rat>, Failure> {
    Direction::new(w.to_vec(), fan, &cooccurrence(complex))
        .map_err(|e| Failure::Usage(e.to_string()))
}

/// Per-domain fan compatibility, fanned out over worker threads; results
/// are collected by index so the output never depends on scheduling.
fn compat_verdicts(
    complex: &AnyComplex,
    fan: &Fan,
    jobs: usize,
) -> Result<Vec<CellVerdict>, Failure> {
    match complex {
        AnyComplex::Surface(c) => {
            let report = hypfan_core::fan::fan_compatible_2d(c, fan)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(report.cells.into_iter().map(|(_, v)| v).collect())
        }
        AnyComplex::Cell3(c) => {
            let n = c.n_cells(3);
            let jobs = jobs.clamp(1, n.max(1));
            let mut results: Vec<Option<CellVerdict>> = vec![None; n];
            std::thread::scope(|scope| -> Result<(), Failure> {
                let mut handles = Vec::new();
                for worker in 0..jobs {
                    let handle =
                        scope.spawn(move || -> Result<Vec<(usize, CellVerdict)>, String> {
                            let mut mine = Vec::new();
                            for o in (worker..n).step_by(jobs) {
                                let v = match domain_view(c, o) {
                                    Ok(view) => domain_compatible_3d(&view, fan)
                                        .map_err(|e| e.to_string())?,
                                    Err(reason) => CellVerdict::Incompatible(reason),
                                };
                                mine.push((o, v));
                            }
                            Ok(mine)
                        });
                    handles.push(handle);
                }
                for handle in handles {
                    let mine = handle
                        .join()
                        .map_err(|_| Failure::Internal("worker panicked".into()))?
                        .map_err(Failure::Usage)?;
                    for (o, v) in mine {
                        results[o] = Some(v);
                    }
                }
                Ok(())
            })?;
            Ok(results
                .into_iter()
                .map(|v| v.expect("all domains checked"))
                .collect())
        }
    }
}

fn emit(report: &Report, format: Format) -> Result<(), Failure> {
    print!("{}", report.render(format));
    if report.pass() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Validate {
            input,
            jobs,
            format,
        } => {
            let bundle = load_bundle(&input)?;
            let mut verdicts = Vec::new();
            match &bundle.complex {
                AnyComplex::Surface(c) => {
                    let flags = c.flags();
                    verdicts.push(verdict(
                        "surface structure",
                        true,
                        serde_json::json!({
                            "vertices": c.n_vertices(),
                            "edges": c.n_edges(),
                            "faces": c.n_faces(),
                            "loops": c.n_loops(),
                            "euler_characteristic": c.euler_characteristic(),
                            "flags": flags,
                        }),
                    ));
                    verdicts.push(verdict("E = 2V", c.n_edges() == 2 * c.n_vertices(), ()));
                }
                AnyComplex::Cell3(c) => {
                    let issues = c.validate();
                    verdicts.push(verdict(
                        "incidence invariants",
                        issues.is_empty(),
                        serde_json::json!({
                            "cells": [c.n_cells(0), c.n_cells(1), c.n_cells(2), c.n_cells(3)],
                            "euler_characteristic": c.euler_characteristic(),
                            "issues": issues,
                        }),
                    ));
                }
            }
            if let Some(fan) = &bundle.fan {
                let cells = compat_verdicts(&bundle.complex, fan, jobs)?;
                let pass = cells.iter().all(CellVerdict::is_compatible);
                verdicts.push(verdict("fan compatibility", pass, cells));
            }
            emit(&Report { verdicts }, format)
        }
        Command::CheckS2 { input, format } => {
            let bundle = load_bundle(&input)?;
            let c = match &bundle.complex {
                AnyComplex::Surface(c) => c,
                AnyComplex::Cell3(_) => {
                    return Err(Failure::Usage("check-s2 needs a 2D complex".into()))
                }
            };
            let suite = sphere2::sphere_suite(c).map_err(|e| Failure::Usage(e.to_string()))?;
            let report = Report {
                verdicts: vec![
                    verdict("parity theorem", suite.parity.pass, &suite.parity),
                    verdict("color balance", suite.balance_pass, ()),
                    verdict("eye laws", suite.eyes_pass, ()),
                    verdict("vertex parities", suite.vertex_parities_pass, ()),
                    verdict("corner pairing", suite.corner_pairing_pass, ()),
                ],
            };
            emit(&report, format)
        }
        Command::Flow {
            input,
            w,
            betti,
            scan,
            seed,
            format,
        } => {
            let bundle = load_bundle(&input)?;
            let fan = require_fan(&bundle)?;
            let fin = flow_input(&bundle.complex)?;
            if let Some(samples) = scan {
                return scan_cycles(&bundle, fan, &fin, samples, seed, format);
            }
            let w = w.ok_or_else(|| Failure::Usage("--w is required".into()))?;
            let w = parse_rationals(&w)?;
            let direction = generic_direction(&bundle.complex, fan, &w)?;
            let graph = flow::orient_edges(&fin, fan, &direction)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            if format == Format::Dot {
                print!("{}", dot::flow_dot(&graph));
                return Ok(());
            }
            let counts = graph.index_counts(fin.dimension);
            let cycles = flow::detect_cycles(&graph);
            let levels = flow::assign_levels(&graph).ok();
            let corners = match &bundle.complex {
                AnyComplex::Surface(c) => flow::surface_top_cell_corners(c),
                AnyComplex::Cell3(c) => flow::cell3_top_cell_corners(c),
            };
            let domain_report = flow::check_domain_count(&fin, &corners, fan, &direction)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let mut verdicts = vec![
                verdict("index counts", true, &counts),
                verdict(
                    "euler identity",
                    counts.alternating_sum() == bundle.complex.euler_characteristic(),
                    counts.alternating_sum(),
                ),
                verdict(
                    "attractors equal repellers",
                    counts.counts[0] == counts.counts[fin.dimension],
                    (),
                ),
                verdict("domain count law", domain_report.pass, &domain_report),
            ];
            match &bundle.complex {
                AnyComplex::Surface(_) => {
                    verdicts.push(verdict("flow acyclic", cycles.is_empty(), &cycles));
                    verdicts.push(verdict("levels assigned", levels.is_some(), &levels));
                }
                AnyComplex::Cell3(_) => {
                    // Open in dimension 3: record, never assert.
                    verdicts.push(verdict("cycles (logged)", true, &cycles));
                }
            }
            if let AnyComplex::Surface(c) = &bundle.complex {
                if c.euler_characteristic() == 2 {
                    let pairs = flow::attractor_pair_decomposition_s2(c, fan, &direction)
                        .map_err(|e| Failure::Usage(e.to_string()))?;
                    verdicts.push(verdict("attractor pair formula", pairs.pass, &pairs));
                }
            }
            if let Some(betti) = betti {
                let betti = parse_betti(&betti)?;
                if betti.len() != fin.dimension + 1 {
                    return Err(Failure::Usage("betti arity mismatch".into()));
                }
                let morse = flow::morse_inequalities(&counts, &betti);
                verdicts.push(verdict("morse inequalities", morse.pass, &morse));
            }
            emit(&Report { verdicts }, format)
        }
        Command::Generate { what } => {
            let bundle = match what {
                GenerateWhat::Octahedral => {
                    let (c, fan) = moves::generate_octahedral();
                    Bundle {
                        complex: AnyComplex::Surface(c),
                        fan: Some(fan),
                    }
                }
                GenerateWhat::Genus { g, variant } => {
                    let variant = match variant.as_str() {
                        "8" | "eight" => GenusVariant::Eight,
                        "16" | "sixteen" => GenusVariant::Sixteen,
                        other => return Err(Failure::Usage(format!("unknown variant {other}"))),
                    };
                    let result = moves::generate_genus_g(g, variant)
                        .map_err(|e| Failure::Usage(e.to_string()))?;
                    Bundle {
                        complex: AnyComplex::Surface(result.complex),
                        fan: Some(result.fan),
                    }
                }
                GenerateWhat::S3 => {
                    let (c, fan) = moves::generate_s3();
                    Bundle {
                        complex: AnyComplex::Cell3(c),
                        fan: Some(fan),
                    }
                }
                GenerateWhat::Rp3 => {
                    let (c, fan) =
                        moves::generate_rp3().map_err(|e| Failure::Internal(e.to_string()))?;
                    Bundle {
                        complex: AnyComplex::Cell3(c),
                        fan: Some(fan),
                    }
                }
            };
            println!("{}", io::bundle_to_json(&bundle));
            Ok(())
        }
        Command::Move { which } => {
            let out = match which {
                MoveWhich::Insert {
                    vertex,
                    w_prime,
                    input,
                } => {
                    let w_prime = match &w_prime {
                        Some(text) => Some(parse_rationals(text)?),
                        None => None,
                    };
                    let bundle = load_bundle(&input)?;
                    let fan = require_fan(&bundle)?.clone();
                    match bundle.complex {
                        AnyComplex::Surface(c) => {
                            let (c2, fan2, _) = moves::insert_spheres_2d(&c, &fan, vertex, w_prime)
                                .map_err(|e| Failure::Usage(e.to_string()))?;
                            Bundle {
                                complex: AnyComplex::Surface(c2),
                                fan: Some(fan2),
                            }
                        }
                        AnyComplex::Cell3(c) => {
                            let (c2, fan2, _) = moves::insert_spheres_3d(&c, &fan, vertex, w_prime)
                                .map_err(|e| Failure::Usage(e.to_string()))?;
                            Bundle {
                                complex: AnyComplex::Cell3(c2),
                                fan: Some(fan2),
                            }
                        }
                    }
                }
                MoveWhich::Remove {
                    vertex,
                    inner,
                    outer,
                    input,
                } => {
                    let bundle = load_bundle(&input)?;
                    let fan = require_fan(&bundle)?.clone();
                    let pair = moves::SpherePair {
                        vertex,
                        inner_label: inner,
                        outer_label: outer,
                        inner_vector: fan
                            .vector(inner)
                            .map_err(|e| Failure::Usage(e.to_string()))?
                            .to_vec(),
                        outer_vector: fan
                            .vector(outer)
                            .map_err(|e| Failure::Usage(e.to_string()))?
                            .to_vec(),
                    };
                    match bundle.complex {
                        AnyComplex::Surface(c) => {
                            let (c2, fan2) = moves::remove_spheres_2d(&c, &fan, &pair)
                                .map_err(|e| Failure::Usage(e.to_string()))?;
                            Bundle {
                                complex: AnyComplex::Surface(c2),
                                fan: Some(fan2),
                            }
                        }
                        AnyComplex::Cell3(c) => {
                            let (c2, fan2) = moves::remove_spheres_3d(&c, &fan, &pair)
                                .map_err(|e| Failure::Usage(e.to_string()))?;
                            Bundle {
                                complex: AnyComplex::Cell3(c2),
                                fan: Some(fan2),
                            }
                        }
                    }
                }
                MoveWhich::Augment { k, input } => {
                    let bundle = load_bundle(&input)?;
                    let fan = require_fan(&bundle)?.clone();
                    match bundle.complex {
                        AnyComplex::Surface(c) => {
                            let (c2, fan2) = moves::augment_surface(&c, &fan, k)
                                .map_err(|e| Failure::Usage(e.to_string()))?;
                            Bundle {
                                complex: AnyComplex::Surface(c2),
                                fan: Some(fan2),
                            }
                        }
                        AnyComplex::Cell3(c) => {
                            let (c2, fan2) = moves::surgery3::augment_cell3(&c, &fan, k)
                                .map_err(|e| Failure::Usage(e.to_string()))?;
                            Bundle {
                                complex: AnyComplex::Cell3(c2),
                                fan: Some(fan2),
                            }
                        }
                    }
                }
            };
            println!("{}", io::bundle_to_json(&out));
            Ok(())
        }
        Command::Search { input, budget } => {
            let bundle = load_bundle(&input)?;
            let c = match &bundle.complex {
                AnyComplex::Surface(c) => c,
                AnyComplex::Cell3(_) => return Err(Failure::Usage("fan search is 2D only".into())),
            };
            let report = fansearch::realizability_report(c, budget)
                .map_err(|e| Failure::Internal(e.to_string()))?;
            match (&report.verdict, report.fan) {
                (Realizability::Realizable, Some(fan)) => {
                    println!("{}", io::fan_to_json(&fan));
                    Ok(())
                }
                (verdict, _) => {
                    eprintln!(
                        "{}",
                        serde_json::to_string_pretty(verdict).expect("serializable")
                    );
                    Err(Failure::Check)
                }
            }
        }
        Command::Replay { script } => {
            let text = std::fs::read_to_string(&script)
                .map_err(|e| Failure::Usage(format!("{script}: {e}")))?;
            let script: MoveScript =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("script: {e}")))?;
            let state = moves::replay(&script).map_err(|e| Failure::Usage(e.to_string()))?;
            let bundle = match state {
                moves::ReplayState::Surface(c, fan) => Bundle {
                    complex: AnyComplex::Surface(c),
                    fan: Some(fan),
                },
                moves::ReplayState::Cell3(c, fan) => Bundle {
                    complex: AnyComplex::Cell3(c),
                    fan: Some(fan),
                },
            };
            println!("{}", io::bundle_to_json(&bundle));
            Ok(())
        }
        Command::Export { input, color, w } => {
            let bundle = load_bundle(&input)?;
            if let Some(w) = w {
                let fan = require_fan(&bundle)?;
                let fin = flow_input(&bundle.complex)?;
                let w = parse_rationals(&w)?;
                let direction = generic_direction(&bundle.complex, fan, &w)?;
                let graph = flow::orient_edges(&fin, fan, &direction)
                    .map_err(|e| Failure::Usage(e.to_string()))?;
                print!("{}", dot::flow_dot(&graph));
                return Ok(());
            }
            let coloring = if color {
                match &bundle.complex {
                    AnyComplex::Surface(c) => {
                        Some(sphere2::bicolor(c).map_err(|e| Failure::Usage(e.to_string()))?)
                    }
                    AnyComplex::Cell3(_) => {
                        return Err(Failure::Usage("--color needs a 2D complex".into()))
                    }
                }
            } else {
                None
            };
            print!("{}", dot::complex_dot(&bundle.complex, coloring.as_ref()));
            Ok(())
        }
    }
}

/// Samples seeded random generic directions and records cycle findings
/// without asserting anything (open in dimension 3).
fn scan_cycles(
    bundle: &Bundle,
    fan: &Fan,
    fin: &FlowInput,
    samples: usize,
    seed: u64,
    format: Format,
) -> Result<(), Failure> {
    let mut rng = SplitMix64::new(seed);
    let co = cooccurrence(&bundle.complex);
    let mut findings = Vec::new();
    let mut produced = 0usize;
    let mut attempts = 0usize;
    while produced < samples && attempts < samples * 1000 + 100 {
        attempts += 1;
        let w: Vec<Rat> = (0..fin.dimension)
            .map(|_| rat(rng.next_in(99), 1))
            .collect();
        let direction = match Direction::new(w.clone(), fan, &co) {
            Ok(d) => d,
            Err(_) => continue,
        };
        produced += 1;
        let graph = flow::orient_edges(fin, fan, &direction)
            .map_err(|e| Failure::Internal(e.to_string()))?;
        let cycles = flow::detect_cycles(&graph);
        findings.push(serde_json::json!({
            "w": w.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "cycles": cycles,
        }));
    }
    let any_cycles = findings
        .iter()
        .any(|f| !f["cycles"].as_array().map(Vec::is_empty).unwrap_or(true));
    let report = Report {
        verdicts: vec![verdict(
            &format!("cycle scan over {produced} generic directions (logged, not asserted)"),
            true,
            serde_json::json!({"any_cycles": any_cycles, "findings": findings}),
        )],
    };
    print!("{}", report.render(format));
    Ok(())
}
