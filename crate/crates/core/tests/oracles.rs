//! Library results against brute-force oracles that share no code with it.

use std::collections::BTreeSet;

use wham::coloring::count_colorings;
use wham::factors::{enumerate_weak_hamiltonians, perfect_matchings};
use wham::io::corpus::cubic_maps_up_to;
use wham::io::generate::{prism, tetrahedron};
use wham::map::{build_map, lowpoint_bridges, MapError};
use wham::moduli::{ChromaticMode, ModuliGraphs};
use wham::PlanarMap;

fn edge_list(map: &PlanarMap) -> Vec<(usize, usize)> {
    (0..map.num_edges()).map(|e| map.endpoints(e)).collect()
}

/// Every subset of edges as a bitmask: perfect matchings, and 2-factors all
/// of whose cycles are even.
fn subset_oracle(map: &PlanarMap) -> (BTreeSet<Vec<usize>>, BTreeSet<Vec<usize>>) {
    let edges = edge_list(map);
    let n = map.num_vertices();
    assert!(edges.len() <= 20, "oracle is exponential in the edge count");
    let mut matchings = BTreeSet::new();
    let mut even_factors = BTreeSet::new();
    for mask in 0u32..1 << edges.len() {
        let chosen: Vec<usize> = (0..edges.len()).filter(|&e| mask >> e & 1 == 1).collect();
        let mut degree = vec![0; n];
        for &e in &chosen {
            degree[edges[e].0] += 1;
            degree[edges[e].1] += 1;
        }
        if degree.iter().all(|&d| d == 1) {
            matchings.insert(chosen);
        } else if degree.iter().all(|&d| d == 2) {
            // each component of a 2-regular graph is a cycle through all its vertices
            let mut label: Vec<usize> = (0..n).collect();
            let mut changed = true;
            while changed {
                changed = false;
                for &e in &chosen {
                    let (a, b) = edges[e];
                    let low = label[a].min(label[b]);
                    if label[a] != low || label[b] != low {
                        label[a] = low;
                        label[b] = low;
                        changed = true;
                    }
                }
            }
            let all_even = (0..n).all(|root| label.iter().filter(|&&l| l == root).count() % 2 == 0);
            if all_even {
                even_factors.insert(chosen);
            }
        }
    }
    (matchings, even_factors)
}

fn small_corpus() -> Vec<PlanarMap> {
    let mut maps = cubic_maps_up_to(10);
    maps.extend([tetrahedron(), prism(3), prism(4), prism(5)]);
    maps
}

#[test]
fn enumeration_matches_subset_oracle() {
    for map in small_corpus() {
        let (matchings, even_factors) = subset_oracle(&map);
        let found: BTreeSet<Vec<usize>> = perfect_matchings(&map).unwrap().iter().map(|m| m.to_vec()).collect();
        assert_eq!(found, matchings);
        let whs: BTreeSet<Vec<usize>> =
            enumerate_weak_hamiltonians(&map).unwrap().iter().map(|h| h.edges().to_vec()).collect();
        assert_eq!(whs, even_factors);
    }
}

#[test]
fn named_counts() {
    // (map, perfect matchings, weak Hamiltonians)
    let cases = [(tetrahedron(), 3, 3), (prism(3), 4, 3), (prism(4), 9, 9), (prism(5), 11, 10)];
    for (map, m, w) in cases {
        let (matchings, even_factors) = subset_oracle(&map);
        assert_eq!((matchings.len(), even_factors.len()), (m, w));
    }
}

/// Count face orbits straight from the rotation lists.
fn orbit_count(rotations: &[Vec<usize>]) -> usize {
    let darts: usize = rotations.iter().map(Vec::len).sum();
    let mut next_ccw = vec![0; darts];
    for rot in rotations {
        for (i, &d) in rot.iter().enumerate() {
            next_ccw[d] = rot[(i + 1) % rot.len()];
        }
    }
    let mut seen = vec![false; darts];
    let mut orbits = 0;
    for start in 0..darts {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = next_ccw[d ^ 1];
        }
    }
    orbits
}

#[test]
fn faces_match_orbit_count() {
    for map in cubic_maps_up_to(12) {
        assert_eq!(map.num_faces(), orbit_count(map.rotations()));
        assert_eq!(map.num_vertices() + map.num_faces(), map.num_edges() + 2);
    }
}

/// Bridges by deleting each edge and testing connectivity.
fn bridges_by_deletion(num_vertices: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    (0..edges.len())
        .filter(|&skip| {
            let mut reached = vec![false; num_vertices];
            let mut stack = vec![0];
            reached[0] = true;
            while let Some(v) = stack.pop() {
                for (e, &(a, b)) in edges.iter().enumerate() {
                    if e == skip {
                        continue;
                    }
                    for (x, y) in [(a, b), (b, a)] {
                        if x == v && !reached[y] {
                            reached[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
            reached.iter().any(|r| !r)
        })
        .collect()
}

#[test]
fn bridge_detection_agrees_with_deletion() {
    for map in cubic_maps_up_to(10) {
        assert!(lowpoint_bridges(&map).is_empty());
        assert!(bridges_by_deletion(map.num_vertices(), &edge_list(&map)).is_empty());
    }
    // two copies of K4 joined through subdivided edges: the joining edge is the only bridge
    let k4 = tetrahedron();
    let mut rotations: Vec<Vec<usize>> = k4.rotations().to_vec();
    let shift = k4.num_darts();
    rotations.extend(k4.rotations().iter().map(|r| r.iter().map(|d| d + shift).collect::<Vec<_>>()));
    // subdivide edge 0 of each copy and join the two new vertices by a new edge
    let base = 2 * shift;
    let far_a = k4.vertex_of(1);
    let far_b = k4.vertex_of(1) + k4.num_vertices();
    let replace = |rot: &mut Vec<usize>, old: usize, new: usize| {
        let i = rot.iter().position(|&d| d == old).unwrap();
        rot[i] = new;
    };
    replace(&mut rotations[far_a], 1, base + 1);
    replace(&mut rotations[far_b], shift + 1, base + 3);
    rotations.push(vec![1, base + 4, base]);
    rotations.push(vec![shift + 1, base + 5, base + 2]);
    let bridge_edge = (base + 4) / 2;
    assert_eq!(build_map(rotations.clone()).unwrap_err(), MapError::Bridge { edge: bridge_edge });

    let mut edges = vec![(usize::MAX, usize::MAX); (base + 6) / 2];
    for (v, rot) in rotations.iter().enumerate() {
        for &d in rot {
            if d % 2 == 0 {
                edges[d / 2].0 = v;
            } else {
                edges[d / 2].1 = v;
            }
        }
    }
    assert_eq!(bridges_by_deletion(rotations.len(), &edges), vec![bridge_edge]);
}

/// Proper k-colorings by running through all k^F assignments.
fn coloring_count_by_product(map: &PlanarMap, k: u64) -> u64 {
    let f = map.num_faces() as u32;
    let sides = map.dual_adjacency().records().to_vec();
    (0..k.pow(f))
        .filter(|&code| {
            let color = |face: usize| code / k.pow(face as u32) % k;
            sides.iter().all(|&[a, b]| color(a) != color(b))
        })
        .count() as u64
}

#[test]
fn coloring_counts_match_product_oracle() {
    for map in small_corpus() {
        if map.num_faces() > 8 {
            continue;
        }
        let total = coloring_count_by_product(&map, 4);
        assert_eq!(count_colorings(&map, 4, false), total);
        assert_eq!(count_colorings(&map, 3, false), coloring_count_by_product(&map, 3));
        let m = ModuliGraphs::build(&map, ChromaticMode::Simple).unwrap();
        assert_eq!(total, 24 * m.cliques.len() as u64);
    }
}

#[test]
fn named_coloring_counts() {
    assert_eq!(coloring_count_by_product(&tetrahedron(), 4), 24);
    assert_eq!(coloring_count_by_product(&prism(3), 4), 24);
    assert_eq!(coloring_count_by_product(&prism(4), 4), 96);
}
