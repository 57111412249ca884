use std::collections::BTreeSet;

use wham::io::corpus::cubic_maps_up_to;
use wham::io::planar_code::parse_planar_code;
use wham::map::build_map;

const FIXTURE: &[u8] = include_bytes!("data/cubic_le14.pc");

/// Unoriented codes of every cubic map on `n` vertices, found by trying
/// every pairing of the `3n` darts against the fixed rotations
/// `(3v, 3v+1, 3v+2)`.
fn all_pairings(n: usize) -> BTreeSet<Vec<u32>> {
    fn pair_up(partner: &mut Vec<usize>, n: usize, out: &mut BTreeSet<Vec<u32>>) {
        let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
            // renumber so that the two darts of edge e are 2e and 2e + 1
            let mut id = vec![usize::MAX; partner.len()];
            let mut next = 0;
            for d in 0..partner.len() {
                if id[d] == usize::MAX {
                    id[d] = next;
                    id[partner[d]] = next + 1;
                    next += 2;
                }
            }
            let rotations = (0..n).map(|v| (0..3).map(|i| id[3 * v + i]).collect()).collect();
            if let Ok(map) = build_map(rotations) {
                out.insert(map.unoriented_code());
            }
            return;
        };
        for other in first + 1..partner.len() {
            if partner[other] == usize::MAX && other / 3 != first / 3 {
                partner[first] = other;
                partner[other] = first;
                pair_up(partner, n, out);
                partner[first] = usize::MAX;
                partner[other] = usize::MAX;
            }
        }
    }
    let mut out = BTreeSet::new();
    pair_up(&mut vec![usize::MAX; 3 * n], n, &mut out);
    out
}

fn generated_codes(n: usize) -> BTreeSet<Vec<u32>> {
    cubic_maps_up_to(n).iter().filter(|m| m.num_vertices() == n).map(|m| m.unoriented_code()).collect()
}

#[test]
fn chord_closure_is_complete_on_small_sizes() {
    for n in [2, 4] {
        assert_eq!(generated_codes(n), all_pairings(n), "n = {n}");
    }
}

#[test]
#[ignore = "tries about 3.4e7 pairings; run with --ignored --release"]
fn chord_closure_is_complete_on_six_vertices() {
    assert_eq!(generated_codes(6), all_pairings(6));
}

#[test]
fn fixture_matches_generator() {
    let maps = parse_planar_code(FIXTURE).unwrap();
    assert_eq!(maps.len(), 2239);
    assert!(maps.iter().all(|m| m.is_cubic() && m.num_vertices() <= 14));
    let fixture: Vec<_> = maps.iter().map(|m| m.unoriented_code()).collect();
    let distinct: BTreeSet<_> = fixture.iter().cloned().collect();
    assert_eq!(distinct.len(), fixture.len());
    let generated: BTreeSet<_> = cubic_maps_up_to(12).iter().map(|m| m.unoriented_code()).collect();
    assert!(generated.is_subset(&distinct));
}

/// No two vertices separate the graph.
fn three_connected(map: &wham::PlanarMap) -> bool {
    let n = map.num_vertices();
    let edges: Vec<(usize, usize)> = (0..map.num_edges()).map(|e| map.endpoints(e)).collect();
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            let start = (0..n).find(|&v| v != a && v != b).unwrap();
            let mut seen = vec![false; n];
            seen[a] = true;
            seen[b] = true;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(x, y) in &edges {
                    for (p, q) in [(x, y), (y, x)] {
                        if p == v && !seen[q] {
                            seen[q] = true;
                            stack.push(q);
                        }
                    }
                }
            }
            seen.iter().all(|&s| s)
        })
    })
}

#[test]
fn cubic_polyhedra_counts() {
    // cubic polyhedra on 4, 6, ..., 14 vertices, which have unique embeddings
    // up to reflection: 1, 1, 2, 5, 14, 50
    let maps = parse_planar_code(FIXTURE).unwrap();
    let counts: Vec<usize> = (2..=7)
        .map(|k| {
            maps.iter()
                .filter(|m| m.num_vertices() == 2 * k && wham::io::corpus::is_simple(m) && three_connected(m))
                .count()
        })
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 5, 14, 50]);
}
