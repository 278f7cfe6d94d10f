//! Deterministic DOT emission: bare complexes as undirected graphs, face
//! colorings as filled face nodes, flow graphs as digraphs with per-node
//! indices. Identical inputs give byte-identical output.

use std::fmt::Write;

use hypfan_core::flow::FlowGraph;
use hypfan_core::io::AnyComplex;
use hypfan_core::sphere2::{Color, FaceColoring};
use hypfan_core::Rat;

pub fn complex_dot(complex: &AnyComplex, coloring: Option<&FaceColoring>) -> String {
    let mut out = String::new();
    out.push_str("graph complex {\n");
    out.push_str("  node [shape=circle];\n");
    match complex {
        AnyComplex::Surface(c) => {
            for v in 0..c.n_vertices() {
                let (a, b) = c.loops_at_vertex(v);
                writeln!(out, "  v{v} [label=\"v{v}\\nL{a}&L{b}\"];").unwrap();
            }
            for (e, &(da, db)) in c.edges().iter().enumerate() {
                writeln!(
                    out,
                    "  v{} -- v{} [label=\"L{}\"];",
                    c.vertex_of(da),
                    c.vertex_of(db),
                    c.loop_of_edge(e)
                )
                .unwrap();
            }
            if let Some(coloring) = coloring {
                out.push_str("  node [shape=box, style=filled];\n");
                for (f, color) in coloring.colors.iter().enumerate() {
                    let (fill, font) = match color {
                        Color::Black => ("black", "white"),
                        Color::White => ("white", "black"),
                    };
                    writeln!(
                        out,
                        "  f{f} [fillcolor={fill}, fontcolor={font}, label=\"f{f}\"];"
                    )
                    .unwrap();
                }
                for f in 0..c.n_faces() {
                    let mut vertices = c.face_vertex_sequence(f);
                    vertices.sort_unstable();
                    vertices.dedup();
                    for v in vertices {
                        writeln!(out, "  f{f} -- v{v} [style=dotted];").unwrap();
                    }
                }
            }
        }
        AnyComplex::Cell3(c) => {
            for v in 0..c.n_cells(0) {
                let labels = c.vertex_labels(v);
                writeln!(out, "  v{v} [label=\"v{v}\\n{labels:?}\"];").unwrap();
            }
            for e in 0..c.n_cells(1) {
                let [a, b] = c.edge_endpoints(e);
                writeln!(out, "  v{a} -- v{b} [label=\"e{e}\"];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn flow_dot(g: &FlowGraph<Rat>) -> String {
    let mut out = String::new();
    out.push_str("digraph flow {\n");
    out.push_str("  node [shape=circle];\n");
    for node in &g.nodes {
        writeln!(
            out,
            "  v{} [label=\"v{}\\nind {}\"];",
            node.vertex, node.vertex, node.index
        )
        .unwrap();
    }
    let mut arcs = g.arcs.clone();
    arcs.sort_by_key(|a| a.edge);
    for arc in arcs {
        writeln!(
            out,
            "  v{} -> v{} [label=\"e{}\"];",
            arc.tail, arc.head, arc.edge
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
