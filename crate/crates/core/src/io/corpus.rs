//! Exhaustive families of bridgeless cubic planar maps.
//!
//! Starting from the theta map, a new edge is drawn across a face between
//! two points subdividing boundary edges of that face. This keeps the map
//! cubic, planar and bridgeless. Results are deduplicated up to orientation
//! preserving or reversing map isomorphism.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::io::generate::theta;
use crate::map::{build_map, PlanarMap};

/// Subdivide the edge of dart `d` with a new vertex of degree two. Returns
/// the new vertex and the dart leaving it in the direction of `d`.
fn subdivide(rotations: &mut Vec<Vec<usize>>, vertex_of: &mut Vec<usize>, d: usize) -> (usize, usize) {
    let twin = d ^ 1;
    let far = vertex_of[twin];
    let x = rotations.len();
    let ahead = vertex_of.len();
    let back = ahead + 1;
    let slot = rotations[far].iter().position(|&z| z == twin).expect("twin sits at its vertex");
    rotations[far][slot] = back;
    rotations.push(vec![twin, ahead]);
    vertex_of[twin] = x;
    vertex_of.extend([x, far]);
    (x, ahead)
}

/// Join points inside the boundary edges of darts `d1` and `d2` (both to the
/// right of `face`) by a new edge drawn through `face`. `d1 == d2` gives a
/// digon.
pub fn insert_chord(map: &PlanarMap, d1: usize, d2: usize) -> PlanarMap {
    let faces = map.faces();
    assert_eq!(faces.face_of(d1), faces.face_of(d2), "darts must bound the same face");
    let mut rotations = map.rotations().to_vec();
    let mut vertex_of: Vec<usize> = (0..map.num_darts()).map(|d| map.vertex_of(d)).collect();
    let (x1, ahead1) = subdivide(&mut rotations, &mut vertex_of, d1);
    let (x2, _) = if d1 == d2 {
        subdivide(&mut rotations, &mut vertex_of, ahead1)
    } else {
        subdivide(&mut rotations, &mut vertex_of, d2)
    };
    let chord = vertex_of.len();
    // [back toward the tail, chord into the face, ahead]
    rotations[x1].insert(1, chord);
    rotations[x2].insert(1, chord + 1);
    build_map(rotations).expect("chord insertion keeps the map valid")
}

/// Every map obtained from `map` by one chord insertion, deduplicated.
fn children(map: &PlanarMap) -> Vec<(Vec<u32>, PlanarMap)> {
    let mut out = Vec::new();
    for face in map.faces().faces() {
        for (i, &d1) in face.iter().enumerate() {
            for &d2 in &face[i..] {
                let child = insert_chord(map, d1, d2);
                out.push((child.unoriented_code(), child));
            }
        }
    }
    out
}

/// All bridgeless cubic planar maps (parallel edges allowed) with at most
/// `max_vertices` vertices reachable from the theta map by chord
/// insertions, up to isomorphism and reflection, sorted by vertex count and
/// canonical code.
pub fn cubic_maps_up_to(max_vertices: usize) -> Vec<PlanarMap> {
    let mut all: Vec<PlanarMap> = Vec::new();
    if max_vertices < 2 {
        return all;
    }
    let start = theta();
    let mut layer: BTreeMap<Vec<u32>, PlanarMap> = BTreeMap::from([(start.unoriented_code(), start)]);
    loop {
        let next_vertices = layer.values().next().map(|m| m.num_vertices() + 2).unwrap_or(usize::MAX);
        let current: Vec<PlanarMap> = layer.values().cloned().collect();
        all.extend(current.iter().cloned());
        if next_vertices > max_vertices {
            break;
        }
        layer = current.par_iter().flat_map_iter(children).collect::<Vec<_>>().into_iter().collect();
    }
    all
}

/// Like [`cubic_maps_up_to`] but keeping only maps without parallel edges.
pub fn simple_cubic_maps_up_to(max_vertices: usize) -> Vec<PlanarMap> {
    cubic_maps_up_to(max_vertices).into_iter().filter(is_simple).collect()
}

pub fn is_simple(map: &PlanarMap) -> bool {
    let mut pairs: Vec<(usize, usize)> = (0..map.num_edges())
        .map(|e| {
            let (a, b) = map.endpoints(e);
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    pairs.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::generate::{prism, tetrahedron};

    #[test]
    fn chord_in_theta_gives_k4_or_digon_maps() {
        let t = theta();
        let k4 = insert_chord(&t, 0, 5);
        assert_eq!(k4.unoriented_code(), tetrahedron().unoriented_code());
        let digon = insert_chord(&t, 0, 0);
        assert_eq!((digon.num_vertices(), digon.num_edges(), digon.num_faces()), (4, 6, 4));
        assert!(!is_simple(&digon));
    }

    #[test]
    fn small_families() {
        let maps = cubic_maps_up_to(6);
        let simple: Vec<_> = maps.iter().filter(|m| is_simple(m)).collect();
        // K4 and the triangular prism are the simple cubic planar maps on <= 6 vertices
        assert_eq!(simple.len(), 2);
        assert!(simple.iter().any(|m| m.unoriented_code() == prism(3).unoriented_code()));
        assert!(maps.iter().all(|m| m.is_cubic()));
    }
}
