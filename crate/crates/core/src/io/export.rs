//! JSON exports. Keys keep insertion order and arrays of scalars stay on one
//! line, so the text is byte-stable and diffs well.

use serde_json::{json, Value};

use crate::coloring::FaceColoring;
use crate::factors::WeakHamiltonian;
use crate::map::PlanarMap;
use crate::moduli::{ChromaticGraph, ChromaticMode, Cliques, StructureReport, WeakHamiltonianGraph};
use crate::resolution::FaceCorrespondence;

/// Render a value with two-space indentation, keeping arrays of scalars on
/// one line. Ends with a newline.
pub fn to_text(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(value: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth + 1);
    match value {
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(item, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push(']');
        }
        Value::Object(fields) if fields.is_empty() => out.push_str("{}"),
        Value::Object(fields) => {
            out.push_str("{\n");
            for (i, (key, item)) in fields.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(item, depth + 1, out);
                out.push_str(if i + 1 < fields.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

pub fn faces_json(map: &PlanarMap) -> Value {
    let faces = map.faces();
    let dual = map.dual_adjacency();
    json!({
        "num_vertices": map.num_vertices(),
        "num_edges": map.num_edges(),
        "num_faces": faces.len(),
        "faces": faces.faces(),
        "face_of": faces.face_of_all(),
        "edge_faces": dual.records(),
    })
}

pub fn wh_entry(index: usize, h: &WeakHamiltonian) -> Value {
    json!({
        "index": index,
        "edges": h.edges().to_vec(),
        "cycles": h.cycles(),
        "cycle_lengths": h.cycle_lengths(),
    })
}

pub fn wh_list_json(map: &PlanarMap, whs: &[WeakHamiltonian]) -> Value {
    json!({
        "num_edges": map.num_edges(),
        "count": whs.len(),
        "weak_hamiltonians": whs.iter().enumerate().map(|(i, h)| wh_entry(i, h)).collect::<Vec<_>>(),
    })
}

/// A mutation `source -> target` with the selection mask that produced it.
pub fn mutation_json(source: usize, mask: &str, target: Option<usize>, h: &WeakHamiltonian) -> Value {
    json!({
        "source": source,
        "selection": mask,
        "target": target,
        "edges": h.edges().to_vec(),
        "cycles": h.cycles(),
    })
}

pub fn wh_graph_json(g: &WeakHamiltonianGraph) -> Value {
    json!({
        "vertices": g.vertices().iter().map(|h| h.edges().to_vec()).collect::<Vec<_>>(),
        "num_cycles": g.vertices().iter().map(WeakHamiltonian::num_cycles).collect::<Vec<_>>(),
        "edges": pairs(g.edges()),
    })
}

pub fn cliques_json(cliques: &Cliques) -> Value {
    json!({
        "cliques": cliques.cliques.iter().map(|c| c.members).collect::<Vec<_>>(),
        "clique_of_edge": cliques.clique_of_edge,
    })
}

pub fn chromatic_json(chi: &ChromaticGraph, cliques: &Cliques) -> Value {
    let mut out = json!({
        "mode": match chi.mode {
            ChromaticMode::Simple => "simple",
            ChromaticMode::Multigraph => "multigraph",
        },
        "num_vertices": chi.num_vertices,
        "cliques": cliques.cliques.iter().map(|c| c.members).collect::<Vec<_>>(),
        "edges": pairs(&chi.edges),
        "shared_wh": chi.shared_wh,
    });
    if chi.mode == ChromaticMode::Multigraph {
        out["witnesses"] = chi.witnesses.iter().map(|w| json!({"wh": w.wh, "cliques": w.cliques})).collect();
    }
    out
}

/// Clique id next to the canonical coloring it stands for.
pub fn coloring_table_json(table: &[FaceColoring]) -> Value {
    table.iter().enumerate().map(|(id, c)| json!({"clique": id, "coloring": c.colors()})).collect()
}

/// A coloring as a bare array indexed by face id.
pub fn coloring_json(coloring: &FaceColoring) -> Value {
    json!(coloring.colors())
}

pub fn oracle_json(palette: u8, colorings: &[FaceColoring]) -> Value {
    json!({
        "palette": palette,
        "count": colorings.len(),
        "colorings": colorings.iter().map(FaceColoring::colors).collect::<Vec<_>>(),
    })
}

pub fn correspondence_json(corr: &FaceCorrespondence) -> Value {
    json!({
        "forward": corr.forward.iter().enumerate().map(|(f, &g)| [f, g]).collect::<Vec<_>>(),
        "new_faces": corr.new_faces,
    })
}

pub fn report_json(report: &StructureReport) -> Value {
    json!({
        "passed": report.passed(),
        "checks": report.checks.iter().map(|c| {
            let mut entry = json!({"name": c.name, "passed": c.passed});
            if let Some(note) = &c.note {
                entry["note"] = json!(note);
            }
            if !c.counterexamples.is_empty() {
                entry["counterexamples"] = json!(c.counterexamples);
            }
            entry
        }).collect::<Vec<_>>(),
    })
}

fn pairs(edges: &[(usize, usize)]) -> Vec<[usize; 2]> {
    edges.iter().map(|&(a, b)| [a, b]).collect()
}

/// Read colorings from JSON: a bare array of colors, an array of such
/// arrays, or an object with a `colorings` (or `colors`) field. The palette
/// is taken from a `palette` field when present, otherwise 4.
pub fn parse_colorings(text: &str) -> Result<Vec<FaceColoring>, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let palette = value.get("palette").and_then(Value::as_u64).unwrap_or(4);
    let palette = u8::try_from(palette).map_err(|_| format!("palette {palette} out of range"))?;
    let body = match &value {
        Value::Object(fields) => fields
            .get("colorings")
            .or_else(|| fields.get("colors"))
            .ok_or("expected a `colorings` or `colors` field")?,
        other => other,
    };
    let rows: Vec<&Value> = match body {
        Value::Array(items) if items.iter().all(Value::is_array) && !items.is_empty() => items.iter().collect(),
        Value::Array(_) => vec![body],
        _ => return Err("expected an array of colors".into()),
    };
    rows.into_iter()
        .map(|row| {
            let colors: Vec<u8> = serde_json::from_value(row.clone()).map_err(|e| format!("bad color list: {e}"))?;
            FaceColoring::new(palette, colors).map_err(|e| e.to_string())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::enumerate_weak_hamiltonians;
    use crate::io::generate::prism;

    #[test]
    fn compact_layout() {
        let v = json!({"a": [1, 2], "b": [[0, 1], [2, 3]], "c": {}});
        assert_eq!(to_text(&v), "{\n  \"a\": [1, 2],\n  \"b\": [\n    [0, 1],\n    [2, 3]\n  ],\n  \"c\": {}\n}\n");
    }

    #[test]
    fn wh_entries_are_sorted_edge_lists() {
        let p3 = prism(3);
        let whs = enumerate_weak_hamiltonians(&p3).unwrap();
        let v = wh_list_json(&p3, &whs);
        assert_eq!(v["count"], 3);
        for entry in v["weak_hamiltonians"].as_array().unwrap() {
            let edges: Vec<usize> = serde_json::from_value(entry["edges"].clone()).unwrap();
            assert!(edges.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn coloring_inputs() {
        let bare = parse_colorings("[1, 2, 3]").unwrap();
        assert_eq!(bare.len(), 1);
        assert_eq!(bare[0].colors(), &[1, 2, 3]);
        let oracle = parse_colorings(r#"{"palette": 3, "count": 2, "colorings": [[1, 2], [2, 1]]}"#).unwrap();
        assert_eq!(oracle.len(), 2);
        assert_eq!(oracle[1].palette(), 3);
        assert!(parse_colorings("[1, 5]").is_err());
        assert!(parse_colorings("{\"x\": 1}").is_err());
    }
}
