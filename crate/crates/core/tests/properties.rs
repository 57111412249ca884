//! Invariants over random bridgeless cubic maps grown from the theta map by
//! chord insertions.

use proptest::prelude::*;

use wham::coloring::{
    canonical_coloring, enumerate_colorings_bruteforce, four_coloring_from_pair, is_proper, two_coloring_from_wh,
    wh_from_coloring, PairPartition,
};
use wham::factors::{enumerate_weak_hamiltonians, is_weak_hamiltonian};
use wham::io::corpus::insert_chord;
use wham::io::document::{emit_map_document, parse_map_document};
use wham::io::generate::theta;
use wham::io::planar_code::{emit_planar_code, parse_planar_code};
use wham::map::build_map;
use wham::moduli::{validate_structure, ChromaticMode, ModuliGraphs};
use wham::mutation::{all_mutations, covers_all_edges, is_mutation_pair, mutate, MatchingSelection};
use wham::PlanarMap;

/// Grow a map by chord insertions; each step picks a face and two of its
/// boundary darts from the raw numbers.
fn grow(steps: &[(usize, usize, usize)]) -> PlanarMap {
    let mut map = theta();
    for &(f, a, b) in steps {
        let face = map.faces().face(f % map.num_faces()).to_vec();
        let (i, j) = (a % face.len(), b % face.len());
        map = insert_chord(&map, face[i.min(j)], face[i.max(j)]);
    }
    map
}

fn cubic_map(max_steps: usize) -> impl Strategy<Value = PlanarMap> {
    prop::collection::vec((0usize..64, 0usize..64, 0usize..64), 0..=max_steps).prop_map(|s| grow(&s))
}

/// Rename vertices and edges, and flip the orientation of some edges.
fn relabel(map: &PlanarMap, vertex_perm: &[usize], edge_perm: &[usize], flips: &[bool]) -> PlanarMap {
    let dart = |d: usize| 2 * edge_perm[d / 2] + ((d % 2 == 1) ^ flips[d / 2]) as usize;
    let mut rotations = vec![Vec::new(); map.num_vertices()];
    for v in 0..map.num_vertices() {
        rotations[vertex_perm[v]] = map.rotation(v).iter().map(|&d| dart(d)).collect();
    }
    build_map(rotations).unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn grown_maps_are_valid_cubic_spheres(map in cubic_map(5)) {
        prop_assert!(map.is_cubic());
        prop_assert_eq!(map.num_vertices() + map.num_faces(), map.num_edges() + 2);
    }

    #[test]
    fn codes_ignore_labels(
        (map, vp, ep, flips) in cubic_map(4).prop_flat_map(|m| {
            let (v, e) = (m.num_vertices(), m.num_edges());
            (Just(m), permutation(v), permutation(e), prop::collection::vec(any::<bool>(), e))
        })
    ) {
        let other = relabel(&map, &vp, &ep, &flips);
        prop_assert_eq!(other.canonical_code(), map.canonical_code());
        prop_assert_eq!(map.mirrored().unoriented_code(), map.unoriented_code());
    }

    #[test]
    fn serializations_round_trip(map in cubic_map(6)) {
        let back = parse_map_document(&emit_map_document(&map, None)).unwrap();
        prop_assert_eq!(&back, &map);
        let coded = parse_planar_code(&emit_planar_code(std::slice::from_ref(&map))).unwrap();
        prop_assert_eq!(coded[0].canonical_code(), map.canonical_code());
    }

    #[test]
    fn mutation_laws(map in cubic_map(5)) {
        let whs = enumerate_weak_hamiltonians(&map).unwrap();
        for h in &whs {
            let muts = all_mutations(&map, h);
            prop_assert_eq!(muts.len(), 1usize << h.num_cycles());
            prop_assert!(muts.windows(2).all(|w| w[0] < w[1]));
            for m in &muts {
                prop_assert!(is_weak_hamiltonian(&map, m.edges()));
                prop_assert!(covers_all_edges(h.edges(), m.edges()));
                prop_assert!(is_mutation_pair(&map, m, h));
            }
            for sel in MatchingSelection::all(h.num_cycles()) {
                let a = mutate(&map, h, &sel).unwrap();
                let b = mutate(&map, h, &sel.flipped()).unwrap();
                prop_assert_eq!(&(h.edges() ^ a.edges()), b.edges());
            }
        }
        for (i, h1) in whs.iter().enumerate() {
            for h2 in &whs[i + 1..] {
                prop_assert_eq!(is_mutation_pair(&map, h1, h2), covers_all_edges(h1.edges(), h2.edges()));
                prop_assert_eq!(is_mutation_pair(&map, h1, h2), is_mutation_pair(&map, h2, h1));
            }
        }
    }

    #[test]
    fn parity_coloring_changes_exactly_across_h(map in cubic_map(6)) {
        let dual = map.dual_adjacency();
        for h in enumerate_weak_hamiltonians(&map).unwrap() {
            let phi = two_coloring_from_wh(&map, &h).unwrap();
            for (e, &[a, b]) in dual.records().iter().enumerate() {
                prop_assert_eq!(phi.color(a) != phi.color(b), h.edges().contains(e));
            }
        }
    }

    #[test]
    fn moduli_structure_holds(map in cubic_map(5)) {
        let m = ModuliGraphs::build(&map, ChromaticMode::Simple).unwrap();
        let report = validate_structure(&m.wh_graph, &m.cliques);
        prop_assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn round_trips(map in cubic_map(4)) {
        let m = ModuliGraphs::build(&map, ChromaticMode::Simple).unwrap();
        let g = &m.wh_graph;
        for &(a, b) in g.edges() {
            let (h1, h2) = (g.vertex(a), g.vertex(b));
            let phi = four_coloring_from_pair(&map, h1, h2).unwrap();
            prop_assert!(is_proper(&map, &phi));
            let got: Vec<_> = PairPartition::ALL
                .iter()
                .map(|&p| wh_from_coloring(&map, &phi, p).unwrap().into_edges())
                .collect();
            prop_assert_eq!(got, vec![h1.edges().clone(), h2.edges().clone(), h1.edges() ^ h2.edges()]);
        }
        let canonical = enumerate_colorings_bruteforce(&map, 4, true);
        prop_assert_eq!(canonical.len(), m.cliques.len());
        for phi in canonical {
            let h1 = wh_from_coloring(&map, &phi, PairPartition::OneTwo).unwrap();
            let h2 = wh_from_coloring(&map, &phi, PairPartition::OneThree).unwrap();
            let back = four_coloring_from_pair(&map, &h1, &h2).unwrap();
            prop_assert_eq!(canonical_coloring(&back), phi);
        }
    }
}
