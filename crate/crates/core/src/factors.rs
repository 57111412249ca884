//! Perfect matchings, 2-factors and weak Hamiltonians of cubic maps.
//!
//! On a cubic map the complement of a 2-factor is a perfect matching and
//! vice versa, so weak Hamiltonians are enumerated as complements of perfect
//! matchings whose cycles all have even length.

use rayon::prelude::*;
use thiserror::Error;

use crate::edges::EdgeSubset;
use crate::map::PlanarMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("map is not cubic (vertex {vertex} has degree {degree})")]
    NotCubic { vertex: usize, degree: usize },
    #[error("edge subset is not 2-regular: vertex {vertex} meets {degree} chosen edges")]
    NotTwoRegular { vertex: usize, degree: usize },
    #[error("2-factor has a cycle of odd length {length}")]
    OddCycle { length: usize },
    #[error("edge subset has length {got}, map has {expected} edges")]
    SizeMismatch { expected: usize, got: usize },
}

pub(crate) fn require_cubic(map: &PlanarMap) -> Result<(), FactorError> {
    match (0..map.num_vertices()).find(|&v| map.degree(v) != 3) {
        Some(vertex) => Err(FactorError::NotCubic { vertex, degree: map.degree(vertex) }),
        None => Ok(()),
    }
}

fn require_len(map: &PlanarMap, s: &EdgeSubset) -> Result<(), FactorError> {
    if s.len() != map.num_edges() {
        return Err(FactorError::SizeMismatch { expected: map.num_edges(), got: s.len() });
    }
    Ok(())
}

/// A 2-factor with only even cycles, together with its cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakHamiltonian {
    edges: EdgeSubset,
    cycles: Vec<Vec<usize>>,
}

impl WeakHamiltonian {
    /// Checks that `edges` is a spanning 2-factor with even cycles.
    pub fn new(map: &PlanarMap, edges: EdgeSubset) -> Result<Self, FactorError> {
        require_len(map, &edges)?;
        let cycles = decompose(map, &edges, true)?;
        if let Some(c) = cycles.iter().find(|c| c.len() % 2 == 1) {
            return Err(FactorError::OddCycle { length: c.len() });
        }
        Ok(WeakHamiltonian { edges, cycles })
    }

    pub fn edges(&self) -> &EdgeSubset {
        &self.edges
    }

    /// Cycles as edge-id sequences in traversal order, each starting at its
    /// smallest edge, listed by that smallest edge.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    pub fn into_edges(self) -> EdgeSubset {
        self.edges
    }
}

/// The set complement inside `F2^E`.
pub fn complement(map: &PlanarMap, s: &EdgeSubset) -> EdgeSubset {
    debug_assert_eq!(s.len(), map.num_edges());
    s.complement()
}

/// Decompose a 2-regular edge subset into cycles.
pub fn cycle_decomposition(map: &PlanarMap, s: &EdgeSubset) -> Result<Vec<Vec<usize>>, FactorError> {
    require_len(map, s)?;
    decompose(map, s, false)
}

fn decompose(map: &PlanarMap, s: &EdgeSubset, spanning: bool) -> Result<Vec<Vec<usize>>, FactorError> {
    const NONE: usize = usize::MAX;
    // the (at most two) chosen darts at each vertex
    let mut chosen = vec![[NONE; 2]; map.num_vertices()];
    let mut degree = vec![0usize; map.num_vertices()];
    for e in s.iter() {
        for d in [2 * e, 2 * e + 1] {
            let v = map.vertex_of(d);
            if degree[v] < 2 {
                chosen[v][degree[v]] = d;
            }
            degree[v] += 1;
        }
    }
    for (vertex, &deg) in degree.iter().enumerate() {
        if deg > 2 || deg == 1 || (spanning && deg != 2) {
            return Err(FactorError::NotTwoRegular { vertex, degree: deg });
        }
    }
    let other = |arriving: usize| {
        let [a, b] = chosen[map.vertex_of(arriving)];
        if a == arriving {
            b
        } else {
            a
        }
    };

    let mut visited = vec![false; map.num_edges()];
    let mut cycles = Vec::new();
    for e0 in s.iter() {
        if visited[e0] {
            continue;
        }
        // walk towards whichever neighbouring edge has the smaller id
        let ahead = other(2 * e0 + 1) >> 1;
        let behind = other(2 * e0) >> 1;
        let start = if ahead <= behind { 2 * e0 } else { 2 * e0 + 1 };
        let mut cycle = Vec::new();
        let mut d = start;
        loop {
            visited[d >> 1] = true;
            cycle.push(d >> 1);
            d = other(d ^ 1);
            if d == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// True iff `s` is a spanning 2-factor whose cycles all have even length.
pub fn is_weak_hamiltonian(map: &PlanarMap, s: &EdgeSubset) -> bool {
    s.len() == map.num_edges()
        && matches!(decompose(map, s, true), Ok(cycles) if cycles.iter().all(|c| c.len() % 2 == 0))
}

struct MatchingSearch<'a> {
    map: &'a PlanarMap,
    covered: Vec<bool>,
    chosen: Vec<usize>,
}

impl MatchingSearch<'_> {
    fn lowest_uncovered(&self) -> Option<usize> {
        self.covered.iter().position(|&c| !c)
    }

    /// Edges joining `v` to another uncovered vertex.
    fn options(&self, v: usize) -> Vec<usize> {
        self.map.rotation(v).iter().filter(|&&d| !self.covered[self.map.vertex_of(d ^ 1)]).map(|&d| d >> 1).collect()
    }

    fn apply(&mut self, e: usize, on: bool) {
        let (u, w) = self.map.endpoints(e);
        self.covered[u] = on;
        self.covered[w] = on;
        if on {
            self.chosen.push(e);
        } else {
            self.chosen.pop();
        }
    }

    fn run(&mut self, out: &mut Vec<EdgeSubset>) {
        let Some(v) = self.lowest_uncovered() else {
            out.push(EdgeSubset::from_edges(self.map.num_edges(), self.chosen.iter().copied()));
            return;
        };
        for e in self.options(v) {
            self.apply(e, true);
            self.run(out);
            self.apply(e, false);
        }
    }
}

/// Number of partial-matching prefixes to fan out before searching subtrees
/// in parallel.
const PARALLEL_PREFIXES: usize = 32;

/// All perfect matchings of a cubic map, sorted.
///
/// Branch and bound: the lowest uncovered vertex is matched along each of its
/// edges in turn, and a branch dies as soon as that vertex has no uncovered
/// neighbour.
pub fn perfect_matchings(map: &PlanarMap) -> Result<Vec<EdgeSubset>, FactorError> {
    require_cubic(map)?;
    if map.num_vertices() % 2 == 1 {
        return Ok(Vec::new());
    }
    let fresh = || MatchingSearch { map, covered: vec![false; map.num_vertices()], chosen: Vec::new() };

    // breadth-first expansion of the first few levels
    let mut prefixes: Vec<Vec<usize>> = vec![Vec::new()];
    let mut complete = Vec::new();
    while !prefixes.is_empty() && prefixes.len() < PARALLEL_PREFIXES {
        let mut next = Vec::new();
        for prefix in prefixes {
            let mut search = fresh();
            for &e in &prefix {
                search.apply(e, true);
            }
            match search.lowest_uncovered() {
                None => complete.push(prefix),
                Some(v) => {
                    for e in search.options(v) {
                        let mut longer = prefix.clone();
                        longer.push(e);
                        next.push(longer);
                    }
                }
            }
        }
        prefixes = next;
    }

    let mut matchings: Vec<EdgeSubset> = prefixes
        .into_par_iter()
        .flat_map_iter(|prefix| {
            let mut search = fresh();
            for &e in &prefix {
                search.apply(e, true);
            }
            let mut out = Vec::new();
            search.run(&mut out);
            out
        })
        .collect();
    matchings.extend(complete.into_iter().map(|p| EdgeSubset::from_edges(map.num_edges(), p)));
    matchings.sort_unstable();
    Ok(matchings)
}

/// All weak Hamiltonians of a cubic map, sorted by edge set.
///
/// A map with an odd number of vertices has none whatever its degrees, since
/// even cycles cover an even number of vertices; any other non-cubic map is
/// rejected.
pub fn enumerate_weak_hamiltonians(map: &PlanarMap) -> Result<Vec<WeakHamiltonian>, FactorError> {
    if map.num_vertices() % 2 == 1 {
        return Ok(Vec::new());
    }
    require_cubic(map)?;
    let mut all: Vec<WeakHamiltonian> = perfect_matchings(map)?
        .into_par_iter()
        .filter_map(|m| WeakHamiltonian::new(map, m.complement()).ok())
        .collect();
    all.sort_unstable();
    Ok(all)
}
