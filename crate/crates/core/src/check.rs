//! The full invariant suite behind `wham check`.
//!
//! Maps with vertices of degree four or more are resolved first and the
//! cubic checks run on the resolution. Coloring checks use the brute-force
//! oracle, which is exponential in the number of faces.

use std::collections::BTreeSet;

use crate::coloring::{
    canonical_coloring, count_colorings, enumerate_colorings_bruteforce, four_coloring_from_pair, is_proper,
    two_coloring_from_wh, wh_from_coloring, PairPartition,
};
use crate::factors::{complement, enumerate_weak_hamiltonians, is_weak_hamiltonian, perfect_matchings};
use crate::map::{lowpoint_bridges, PlanarMap};
use crate::moduli::{
    coloring_to_clique, validate_structure, CheckResult, ChromaticMode, ModuliGraphs, StructureReport,
};
use crate::mutation::{all_mutations, covers_all_edges, mutate, MatchingSelection};
use crate::resolution::{pull_back_coloring, resolve};

/// Run every applicable check on `map`.
pub fn run_checks(map: &PlanarMap) -> StructureReport {
    let mut checks = map_checks(map);
    if (0..map.num_vertices()).any(|v| map.degree(v) < 3) {
        checks.push(
            CheckResult::new("cubic_suite", None).with_note("skipped: a vertex of degree below 3 cannot be resolved"),
        );
        return StructureReport { checks };
    }
    let cubic = if map.is_cubic() {
        map.clone()
    } else {
        let (resolved, resolution) = resolution_checks(map);
        checks.extend(resolution);
        resolved
    };
    checks.extend(cubic_checks(&cubic));
    StructureReport { checks }
}

fn map_checks(map: &PlanarMap) -> Vec<CheckResult> {
    let (v, e, f) = (map.num_vertices() as i64, map.num_edges() as i64, map.num_faces() as i64);
    let mut seen = vec![0usize; map.num_darts()];
    for face in map.faces().faces() {
        for &d in face {
            seen[d] += 1;
        }
    }
    vec![
        CheckResult::new("map.euler", (v - e + f != 2).then(|| format!("V - E + F = {}", v - e + f))),
        CheckResult::new("map.bridgeless", lowpoint_bridges(map).into_iter().map(|b| format!("edge {b} is a bridge"))),
        CheckResult::new(
            "map.face_partition",
            seen.iter().enumerate().filter(|(_, &k)| k != 1).map(|(d, k)| format!("dart {d} lies on {k} faces")),
        ),
    ]
}

fn resolution_checks(map: &PlanarMap) -> (PlanarMap, Vec<CheckResult>) {
    let (resolved, corr) = resolve(map).expect("degrees checked by the caller");
    let blown: Vec<usize> = (0..map.num_vertices()).filter(|&v| map.degree(v) >= 4).collect();
    let extra_vertices: usize = blown.iter().map(|&v| map.degree(v) - 1).sum();
    let extra_edges: usize = blown.iter().map(|&v| map.degree(v)).sum();
    let want = (map.num_vertices() + extra_vertices, map.num_edges() + extra_edges, map.num_faces() + blown.len());
    let got = (resolved.num_vertices(), resolved.num_edges(), resolved.num_faces());

    let mut all: Vec<usize> = corr.forward.iter().chain(&corr.new_faces).copied().collect();
    all.sort_unstable();
    let partition_ok = all == (0..resolved.num_faces()).collect::<Vec<_>>();

    let mut checks = vec![
        CheckResult::new("resolution.cubic", (!resolved.is_cubic()).then(|| "resolved map is not cubic".to_string())),
        CheckResult::new("resolution.counts", (got != want).then(|| format!("(V, E, F) = {got:?}, expected {want:?}"))),
        CheckResult::new(
            "resolution.correspondence",
            (!partition_ok).then(|| "old and new faces do not partition the resolved faces".to_string()),
        ),
    ];
    // any coloring of the resolution restricts to one of the original map
    let pull_back = match ModuliGraphs::build(&resolved, ChromaticMode::Simple) {
        Ok(m) => m
            .coloring_table(&resolved)
            .unwrap_or_default()
            .iter()
            .enumerate()
            .filter_map(|(id, phi)| match pull_back_coloring(phi, &corr) {
                Ok(psi) if is_proper(map, &psi) => None,
                Ok(_) => Some(format!("coloring of clique {id} pulls back to an improper coloring")),
                Err(e) => Some(e.to_string()),
            })
            .collect(),
        Err(e) => vec![e.to_string()],
    };
    checks.push(CheckResult::new("resolution.pull_back", pull_back));
    (resolved, checks)
}

fn cubic_checks(map: &PlanarMap) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    let whs = match enumerate_weak_hamiltonians(map) {
        Ok(whs) => whs,
        Err(e) => return vec![CheckResult::new("factors.enumeration", Some(e.to_string()))],
    };

    let matchings = perfect_matchings(map).unwrap_or_default();
    let expected: BTreeSet<_> =
        matchings.iter().map(|m| complement(map, m)).filter(|s| is_weak_hamiltonian(map, s)).collect();
    let listed: BTreeSet<_> = whs.iter().map(|h| h.edges().clone()).collect();
    let mut failures: Vec<String> =
        whs.windows(2).filter(|w| w[0] >= w[1]).map(|_| "enumeration is not strictly sorted".to_string()).collect();
    if expected != listed {
        failures.push(format!(
            "{} weak Hamiltonians listed, {} matching complements qualify",
            listed.len(),
            expected.len()
        ));
    }
    checks.push(CheckResult::new("factors.enumeration", failures));

    let mutations: Vec<Vec<usize>> = whs
        .iter()
        .map(|h| all_mutations(map, h).iter().map(|m| whs.binary_search(m).unwrap_or(usize::MAX)).collect())
        .collect();
    checks.push(CheckResult::new(
        "mutation.count",
        mutations.iter().enumerate().filter_map(|(i, ms)| {
            let distinct: BTreeSet<_> = ms.iter().collect();
            let want = 1usize << whs[i].num_cycles();
            (distinct.len() != want || ms.contains(&usize::MAX))
                .then(|| format!("h{i} has {} distinct listed mutations, expected {want}", distinct.len()))
        }),
    ));
    checks.push(CheckResult::new(
        "mutation.cover",
        mutations.iter().enumerate().flat_map(|(i, ms)| {
            let whs = &whs;
            ms.iter()
                .filter(move |&&j| j != usize::MAX && !covers_all_edges(whs[i].edges(), whs[j].edges()))
                .map(move |j| format!("h{i} and its mutation h{j} miss an edge"))
        }),
    ));
    checks.push(CheckResult::new(
        "mutation.symmetry",
        mutations.iter().enumerate().flat_map(|(i, ms)| {
            let mutations = &mutations;
            ms.iter()
                .filter(move |&&j| j != usize::MAX && !mutations[j].contains(&i))
                .map(move |j| format!("h{j} is a mutation of h{i} but not conversely"))
        }),
    ));
    checks.push(CheckResult::new(
        "mutation.complementary_selections",
        whs.iter().enumerate().flat_map(|(i, h)| {
            MatchingSelection::all(h.num_cycles()).filter_map(move |sel| {
                let a = mutate(map, h, &sel).ok()?;
                let b = mutate(map, h, &sel.flipped()).ok()?;
                (&(h.edges() ^ a.edges()) != b.edges()).then(|| format!("h{i}: h + mu(S) differs from mu(S')"))
            })
        }),
    ));
    let mut union_failures = Vec::new();
    for i in 0..whs.len() {
        for j in i + 1..whs.len() {
            let related = mutations[i].binary_search(&j).is_ok();
            if related != covers_all_edges(whs[i].edges(), whs[j].edges()) {
                union_failures.push(format!("h{i}, h{j}: mutation relation and union criterion disagree"));
            }
        }
    }
    checks.push(CheckResult::new("mutation.union_criterion", union_failures));

    checks.push(CheckResult::new(
        "coloring.parity",
        whs.iter().enumerate().filter_map(|(i, h)| {
            let phi = match two_coloring_from_wh(map, h) {
                Ok(phi) => phi,
                Err(e) => return Some(format!("h{i}: {e}")),
            };
            let dual = map.dual_adjacency();
            let bad = dual
                .records()
                .iter()
                .enumerate()
                .any(|(e, &[a, b])| (phi.color(a) != phi.color(b)) != h.edges().contains(e));
            bad.then(|| format!("h{i}: colors do not change exactly across its edges"))
        }),
    ));

    let moduli = match ModuliGraphs::build(map, ChromaticMode::Simple) {
        Ok(m) => m,
        Err(e) => {
            checks.push(CheckResult::new("moduli.build", Some(e.to_string())));
            return checks;
        }
    };
    let g = &moduli.wh_graph;
    for mut c in validate_structure(g, &moduli.cliques).checks {
        c.name = format!("moduli.{}", c.name);
        checks.push(c);
    }

    checks.push(CheckResult::new(
        "coloring.round_trip_a",
        g.edges().iter().filter_map(|&(a, b)| {
            let (h1, h2) = (g.vertex(a), g.vertex(b));
            let phi = match four_coloring_from_pair(map, h1, h2) {
                Ok(phi) if is_proper(map, &phi) => phi,
                Ok(_) => return Some(format!("h{a}, h{b}: coloring is not proper")),
                Err(e) => return Some(format!("h{a}, h{b}: {e}")),
            };
            let sum = h1.edges() ^ h2.edges();
            let recovered = PairPartition::ALL.map(|p| wh_from_coloring(map, &phi, p).ok().map(|h| h.into_edges()));
            let want = [Some(h1.edges().clone()), Some(h2.edges().clone()), Some(sum)];
            (recovered != want).then(|| format!("h{a}, h{b}: partitions do not recover the pair"))
        }),
    ));

    let canonical = enumerate_colorings_bruteforce(map, 4, true);
    let table = moduli.coloring_table(map).unwrap_or_default();
    checks.push(CheckResult::new(
        "coloring.round_trip_b",
        canonical.iter().enumerate().filter_map(|(k, phi)| {
            let h1 = wh_from_coloring(map, phi, PairPartition::OneTwo).ok()?;
            let h2 = wh_from_coloring(map, phi, PairPartition::OneThree).ok()?;
            let back = four_coloring_from_pair(map, &h1, &h2).ok().map(|c| canonical_coloring(&c));
            (back.as_ref() != Some(phi)).then(|| format!("coloring {k} does not survive the round trip"))
        }),
    ));

    let mut sorted_table = table.clone();
    sorted_table.sort();
    let mut clique_failures: Vec<String> = Vec::new();
    if sorted_table != canonical {
        clique_failures.push(format!(
            "{} clique colorings but {} colorings up to relabeling",
            table.len(),
            canonical.len()
        ));
    }
    clique_failures.extend(table.iter().enumerate().filter_map(|(id, phi)| {
        match coloring_to_clique(map, g, &moduli.cliques, phi) {
            Ok(back) if back == id => None,
            Ok(back) => Some(format!("coloring of clique {id} maps back to clique {back}")),
            Err(e) => Some(format!("clique {id}: {e}")),
        }
    }));
    checks.push(CheckResult::new("coloring.clique_bijection", clique_failures));

    let total = count_colorings(map, 4, false);
    let cliques = moduli.cliques.len() as u64;
    checks.push(CheckResult::new(
        "coloring.oracle_identity",
        (total != 24 * cliques).then(|| format!("{total} proper 4-colorings, 24 x {cliques} cliques")),
    ));
    checks.push(CheckResult::new(
        "coloring.existence",
        (whs.is_empty() != (total == 0)).then(|| format!("{} weak Hamiltonians but {total} colorings", whs.len())),
    ));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::generate::{k23, octahedron, prism, tetrahedron, theta};

    #[test]
    fn standard_maps_pass() {
        for map in [tetrahedron(), prism(3), prism(4), prism(5), theta()] {
            let report = run_checks(&map);
            let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
            assert!(failed.is_empty(), "{failed:?}");
        }
    }

    #[test]
    fn octahedron_is_resolved_first() {
        let report = run_checks(&octahedron());
        assert!(report.get("resolution.counts").unwrap().passed);
        assert!(report.get("resolution.pull_back").unwrap().passed);
        assert!(report.passed());
    }

    #[test]
    fn k23_skips_the_cubic_suite() {
        let report = run_checks(&k23());
        assert!(report.passed());
        assert!(report.get("cubic_suite").unwrap().note.is_some());
    }
}
