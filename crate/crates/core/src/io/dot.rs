//! Graphviz DOT renderings. Output is deterministic for a given input.

use std::fmt::Write;

use crate::coloring::FaceColoring;
use crate::factors::WeakHamiltonian;
use crate::map::PlanarMap;
use crate::moduli::{ChromaticGraph, Cliques, WeakHamiltonianGraph};

const FACE_FILL: [&str; 4] = ["tomato", "gold", "palegreen", "skyblue"];

fn map_body(map: &PlanarMap, out: &mut String, style: impl Fn(usize) -> &'static str) {
    out.push_str("  node [shape=circle];\n");
    for v in 0..map.num_vertices() {
        writeln!(out, "  v{v};").unwrap();
    }
    for e in 0..map.num_edges() {
        let (a, b) = map.endpoints(e);
        writeln!(out, "  v{a} -- v{b} [label=\"e{e}\"{}];", style(e)).unwrap();
    }
}

/// The underlying graph of a map, one DOT edge per map edge.
pub fn map_dot(map: &PlanarMap) -> String {
    let mut out = String::from("graph map {\n");
    map_body(map, &mut out, |_| "");
    out.push_str("}\n");
    out
}

/// Edges of the weak Hamiltonian bold, the complementary matching dashed.
/// `index` names the graph so several overlays can share one file.
pub fn wh_overlay_dot(map: &PlanarMap, index: usize, h: &WeakHamiltonian) -> String {
    let mut out = format!("graph h{index} {{\n");
    map_body(map, &mut out, |e| if h.edges().contains(e) { ", style=bold, penwidth=3" } else { ", style=dashed" });
    out.push_str("}\n");
    out
}

/// The weak Hamiltonian graph with each chromatic clique drawn as a
/// grey-filled cluster holding its three edges.
pub fn wh_graph_dot(g: &WeakHamiltonianGraph, cliques: Option<&Cliques>) -> String {
    let mut out = String::from("graph weak_hamiltonian_graph {\n  node [shape=ellipse];\n");
    for (i, h) in g.vertices().iter().enumerate() {
        writeln!(out, "  h{i} [label=\"h{i}\\nN={}\"];", h.num_cycles()).unwrap();
    }
    match cliques {
        Some(cliques) => {
            for (id, c) in cliques.cliques.iter().enumerate() {
                let [a, b, d] = c.members;
                writeln!(out, "  subgraph cluster_c{id} {{").unwrap();
                writeln!(out, "    label=\"c{id}\";\n    style=filled;\n    fillcolor=grey85;\n    color=grey50;")
                    .unwrap();
                writeln!(out, "    h{a}; h{b}; h{d};").unwrap();
                for (x, y) in [(a, b), (a, d), (b, d)] {
                    writeln!(out, "    h{x} -- h{y};").unwrap();
                }
                out.push_str("  }\n");
            }
            let stray = g.edges().iter().enumerate().filter(|(e, _)| cliques.clique_of_edge.get(*e).is_none());
            for (_, (a, b)) in stray {
                writeln!(out, "  h{a} -- h{b};").unwrap();
            }
        }
        None => {
            for (a, b) in g.edges() {
                writeln!(out, "  h{a} -- h{b};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Chromatic graph; each edge is labelled with the shared weak Hamiltonian.
pub fn chromatic_dot(chi: &ChromaticGraph, cliques: &Cliques) -> String {
    let mut out = String::from("graph chromatic {\n  node [shape=box];\n");
    for (id, c) in cliques.cliques.iter().enumerate() {
        let [a, b, d] = c.members;
        writeln!(out, "  c{id} [label=\"c{id}\\n{{h{a}, h{b}, h{d}}}\"];").unwrap();
    }
    for ((a, b), h) in chi.edges.iter().zip(&chi.shared_wh) {
        writeln!(out, "  c{a} -- c{b} [label=\"h{h}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Faces as filled nodes of the dual graph, one dual edge per map edge.
pub fn coloring_dot(map: &PlanarMap, coloring: &FaceColoring) -> String {
    let mut out = String::from("graph coloring {\n  node [shape=circle, style=filled];\n");
    for f in 0..map.num_faces() {
        let c = coloring.colors().get(f).copied().unwrap_or(0);
        let fill = FACE_FILL.get((c as usize).wrapping_sub(1)).unwrap_or(&"white");
        writeln!(out, "  f{f} [label=\"f{f}:{c}\", fillcolor={fill}];").unwrap();
    }
    let dual = map.dual_adjacency();
    for (e, [a, b]) in dual.records().iter().enumerate() {
        writeln!(out, "  f{a} -- f{b} [label=\"e{e}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}
