//! The weak Hamiltonian graph, its chromatic cliques, and the chromatic graph.
//!
//! Vertices of the weak Hamiltonian graph are the weak Hamiltonians of a
//! cubic map, joined when one is a mutation of the other. Each edge
//! `{h1, h2}` lies in exactly one triangle `{h1, h2, h1 + h2}` whose members
//! sum to zero in `F2^E`; these are the chromatic cliques, and each stands
//! for one 4-coloring up to relabeling.
//!
//! The chromatic graph has one vertex per chromatic clique. Cliques overlap
//! whenever a weak Hamiltonian has two or more cycles, so the contraction is
//! read as: two cliques are adjacent iff they share a weak Hamiltonian.
//! Identifying overlapping cliques transitively would collapse the 5-prism's
//! five cliques to a point instead of a 5-cycle.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{
    canonical_coloring, four_coloring_from_pair, wh_triple_from_coloring, ColoringError, FaceColoring,
};
use crate::edges::EdgeSubset;
use crate::factors::{enumerate_weak_hamiltonians, FactorError, WeakHamiltonian};
use crate::iso::SimpleGraph;
use crate::map::PlanarMap;
use crate::mutation::all_mutations;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error("h{a} + h{b} is not a weak Hamiltonian")]
    MissingThirdVertex { a: usize, b: usize },
    #[error("h{c} = h{a} + h{b} is not adjacent to both")]
    ThirdVertexNotAdjacent { a: usize, b: usize, c: usize },
    #[error("edge h{a} -- h{b} lies in two chromatic cliques")]
    EdgeInTwoCliques { a: usize, b: usize },
    #[error("cliques {first} and {second} share more than one weak Hamiltonian")]
    OverlapTooLarge { first: usize, second: usize },
    #[error("coloring does not correspond to any chromatic clique")]
    UnknownClique,
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Weak Hamiltonians joined by the mutation relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakHamiltonianGraph {
    vertices: Vec<WeakHamiltonian>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<EdgeSubset, usize>,
}

impl WeakHamiltonianGraph {
    /// Assemble a graph from explicit parts. Edges are normalized to
    /// `(min, max)`, sorted and deduplicated; no mutation check is made.
    pub fn from_parts(vertices: Vec<WeakHamiltonian>, edges: Vec<(usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            if a != b {
                adjacency[b].push(a);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let index = vertices.iter().enumerate().map(|(i, h)| (h.edges().clone(), i)).collect();
        WeakHamiltonianGraph { vertices, edges, adjacency, index }
    }

    pub fn vertices(&self) -> &[WeakHamiltonian] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &WeakHamiltonian {
        &self.vertices[i]
    }

    /// Sorted `(a, b)` pairs with `a < b`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Position of an edge in [`Self::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    /// Vertex id of the weak Hamiltonian with this edge set.
    pub fn find(&self, edges: &EdgeSubset) -> Option<usize> {
        self.index.get(edges).copied()
    }

    /// Copy of the graph with one edge deleted.
    pub fn without_edge(&self, edge: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(edge);
        Self::from_parts(self.vertices.clone(), edges)
    }

    pub fn to_simple_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.num_vertices(), self.edges.iter().copied())
    }
}

/// Vertices are the weak Hamiltonians in sorted order; `{i, j}` is an edge
/// when `h_j` is one of the `2^N` mutations of `h_i`.
pub fn build_wh_graph(map: &PlanarMap) -> Result<WeakHamiltonianGraph, ModuliError> {
    let vertices = enumerate_weak_hamiltonians(map)?;
    let lookup =
        |h: &WeakHamiltonian| vertices.binary_search(h).expect("every mutation is an enumerated weak Hamiltonian");
    let edges: Vec<(usize, usize)> = vertices
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, h)| {
            all_mutations(map, h)
                .iter()
                .map(|m| {
                    let j = lookup(m);
                    (i.min(j), i.max(j))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(WeakHamiltonianGraph::from_parts(vertices, edges))
}

/// Three pairwise-adjacent weak Hamiltonians summing to zero, sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChromaticClique {
    pub members: [usize; 3],
}

impl ChromaticClique {
    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    fn pairs(&self) -> [(usize, usize); 3] {
        let [a, b, c] = self.members;
        [(a, b), (a, c), (b, c)]
    }
}

/// Chromatic cliques sorted by member triple, and the clique of every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cliques {
    pub cliques: Vec<ChromaticClique>,
    /// Indexed like [`WeakHamiltonianGraph::edges`].
    pub clique_of_edge: Vec<usize>,
}

impl Cliques {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Ids of the cliques containing vertex `v`, ascending.
    pub fn containing(&self, v: usize) -> Vec<usize> {
        (0..self.cliques.len()).filter(|&c| self.cliques[c].contains(v)).collect()
    }

    /// Id of the clique with exactly these members.
    pub fn find(&self, mut members: [usize; 3]) -> Option<usize> {
        members.sort_unstable();
        self.cliques.binary_search(&ChromaticClique { members }).ok()
    }
}

/// Close every edge `{h1, h2}` to the triangle `{h1, h2, h1 + h2}`.
pub fn find_chromatic_cliques(g: &WeakHamiltonianGraph) -> Result<Cliques, ModuliError> {
    let mut triple_of_edge = Vec::with_capacity(g.num_edges());
    for &(a, b) in g.edges() {
        let sum = g.vertex(a).edges() ^ g.vertex(b).edges();
        let c = g.find(&sum).ok_or(ModuliError::MissingThirdVertex { a, b })?;
        if !(g.has_edge(a, c) && g.has_edge(b, c)) {
            return Err(ModuliError::ThirdVertexNotAdjacent { a, b, c });
        }
        let mut members = [a, b, c];
        members.sort_unstable();
        triple_of_edge.push(members);
    }
    let ids: BTreeMap<[usize; 3], usize> = {
        let mut sorted = triple_of_edge.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.into_iter().enumerate().map(|(i, t)| (t, i)).collect()
    };
    let cliques: Vec<ChromaticClique> = ids.keys().map(|&members| ChromaticClique { members }).collect();
    let clique_of_edge: Vec<usize> = triple_of_edge.iter().map(|t| ids[t]).collect();

    for (id, clique) in cliques.iter().enumerate() {
        for (a, b) in clique.pairs() {
            let e = g.edge_index(a, b).ok_or(ModuliError::ThirdVertexNotAdjacent { a, b, c: a })?;
            if clique_of_edge[e] != id {
                return Err(ModuliError::EdgeInTwoCliques { a, b });
            }
        }
    }
    Ok(Cliques { cliques, clique_of_edge })
}

/// How chromatic-graph edges are reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChromaticMode {
    /// One edge per adjacent pair of cliques.
    #[default]
    Simple,
    /// One edge per (shared weak Hamiltonian, pair of cliques containing it).
    Multigraph,
}

/// A weak Hamiltonian lying in two or more chromatic cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub wh: usize,
    pub cliques: Vec<usize>,
}

/// One vertex per chromatic clique; cliques sharing a weak Hamiltonian are
/// adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticGraph {
    pub num_vertices: usize,
    pub mode: ChromaticMode,
    /// Sorted `(a, b)` clique pairs with `a < b`.
    pub edges: Vec<(usize, usize)>,
    /// The weak Hamiltonian shared by the cliques of each edge.
    pub shared_wh: Vec<usize>,
    /// Every weak Hamiltonian in two or more cliques, ascending.
    pub witnesses: Vec<Witness>,
}

impl ChromaticGraph {
    pub fn to_simple_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.num_vertices, self.edges.iter().copied())
    }
}

pub fn build_chromatic_graph(
    g: &WeakHamiltonianGraph,
    cliques: &Cliques,
    mode: ChromaticMode,
) -> Result<ChromaticGraph, ModuliError> {
    let mut cliques_of = vec![Vec::new(); g.num_vertices()];
    for (id, clique) in cliques.cliques.iter().enumerate() {
        for &v in &clique.members {
            cliques_of[v].push(id);
        }
    }
    // (clique, clique) -> shared weak Hamiltonians
    let mut shared: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (v, ids) in cliques_of.iter().enumerate() {
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                shared.entry((a, b)).or_default().push(v);
            }
        }
    }
    if let Some((&(first, second), _)) = shared.iter().find(|(_, vs)| vs.len() > 1) {
        return Err(ModuliError::OverlapTooLarge { first, second });
    }

    let mut edges = Vec::new();
    let mut shared_wh = Vec::new();
    for (&pair, vs) in &shared {
        let copies = match mode {
            ChromaticMode::Simple => &vs[..1],
            ChromaticMode::Multigraph => &vs[..],
        };
        for &v in copies {
            edges.push(pair);
            shared_wh.push(v);
        }
    }
    let witnesses = cliques_of
        .into_iter()
        .enumerate()
        .filter(|(_, ids)| ids.len() >= 2)
        .map(|(wh, cliques)| Witness { wh, cliques })
        .collect();
    Ok(ChromaticGraph { num_vertices: cliques.len(), mode, edges, shared_wh, witnesses })
}

/// The canonical 4-coloring represented by a clique.
pub fn clique_to_coloring(
    map: &PlanarMap,
    g: &WeakHamiltonianGraph,
    clique: &ChromaticClique,
) -> Result<FaceColoring, ModuliError> {
    let [a, b, _] = clique.members;
    let phi = four_coloring_from_pair(map, g.vertex(a), g.vertex(b))?;
    Ok(canonical_coloring(&phi))
}

/// The clique formed by the three weak Hamiltonians of a proper 4-coloring.
pub fn coloring_to_clique(
    map: &PlanarMap,
    g: &WeakHamiltonianGraph,
    cliques: &Cliques,
    coloring: &FaceColoring,
) -> Result<usize, ModuliError> {
    let triple = wh_triple_from_coloring(map, coloring)?;
    let mut members = [0; 3];
    for (slot, h) in members.iter_mut().zip(&triple) {
        *slot = g.find(h.edges()).ok_or(ModuliError::UnknownClique)?;
    }
    cliques.find(members).ok_or(ModuliError::UnknownClique)
}

/// Outcome of one structural check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// At most [`MAX_COUNTEREXAMPLES`] descriptions of violations.
    pub counterexamples: Vec<String>,
    pub note: Option<String>,
}

pub const MAX_COUNTEREXAMPLES: usize = 10;

impl CheckResult {
    pub fn new(name: &str, failures: impl IntoIterator<Item = String>) -> Self {
        let mut iter = failures.into_iter();
        let counterexamples: Vec<String> = iter.by_ref().take(MAX_COUNTEREXAMPLES).collect();
        CheckResult { name: name.to_string(), passed: counterexamples.is_empty(), counterexamples, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// A list of named checks.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StructureReport {
    pub checks: Vec<CheckResult>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Check the structure laws of the weak Hamiltonian graph against `cliques`.
pub fn validate_structure(g: &WeakHamiltonianGraph, cliques: &Cliques) -> StructureReport {
    let n = g.num_vertices();
    let mut checks = Vec::new();

    checks.push(CheckResult::new(
        "simple_graph",
        g.edges().iter().filter(|(a, b)| a == b || *b >= n).map(|(a, b)| format!("bad edge ({a}, {b})")),
    ));

    checks.push(CheckResult::new(
        "degree_law",
        (0..n).filter_map(|v| {
            let want = 1usize << g.vertex(v).num_cycles();
            (g.degree(v) != want).then(|| format!("h{v} has degree {} but 2^N = {want}", g.degree(v)))
        }),
    ));

    checks.push(CheckResult::new(
        "third_vertex",
        g.edges().iter().filter_map(|&(a, b)| {
            let sum = g.vertex(a).edges() ^ g.vertex(b).edges();
            match g.find(&sum) {
                None => Some(format!("h{a} + h{b} is not a vertex")),
                Some(c) if !(g.has_edge(a, c) && g.has_edge(b, c)) => {
                    Some(format!("h{c} = h{a} + h{b} is not adjacent to both"))
                }
                Some(_) => None,
            }
        }),
    ));

    checks.push(CheckResult::new(
        "clique_sum_zero",
        cliques.cliques.iter().enumerate().filter_map(|(id, c)| {
            let [a, b, d] = c.members;
            let sum = &(g.vertex(a).edges() ^ g.vertex(b).edges()) ^ g.vertex(d).edges();
            let adjacent = c.pairs().iter().all(|&(x, y)| x != y && g.has_edge(x, y));
            (!sum.is_empty() || !adjacent).then(|| format!("clique {id} {:?} is not a zero-sum triangle", c.members))
        }),
    ));

    // every graph edge in exactly one clique, and no clique edge outside the graph
    let mut hits = vec![0usize; g.num_edges()];
    let mut stray = Vec::new();
    for (id, c) in cliques.cliques.iter().enumerate() {
        for (a, b) in c.pairs() {
            match g.edge_index(a, b) {
                Some(e) => hits[e] += 1,
                None => stray.push(format!("clique {id} uses missing edge h{a} -- h{b}")),
            }
        }
    }
    checks.push(CheckResult::new(
        "clique_coverage",
        stray.into_iter().chain(hits.iter().enumerate().filter(|(_, &k)| k != 1).map(|(e, k)| {
            let (a, b) = g.edges()[e];
            format!("edge h{a} -- h{b} lies in {k} cliques")
        })),
    ));

    let mut membership = vec![0usize; n];
    for c in &cliques.cliques {
        for &v in &c.members {
            membership[v] += 1;
        }
    }
    checks.push(CheckResult::new(
        "clique_membership",
        (0..n).filter_map(|v| {
            let want = 1usize << (g.vertex(v).num_cycles() - 1);
            (membership[v] != want).then(|| format!("h{v} lies in {} cliques, expected {want}", membership[v]))
        }),
    ));

    let mut overlaps = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let common = cliques.cliques[i].members.iter().filter(|v| cliques.cliques[j].contains(**v)).count();
            if common > 1 {
                overlaps.push(format!("cliques {i} and {j} share {common} vertices"));
            }
        }
    }
    checks.push(CheckResult::new("clique_overlap", overlaps));

    checks.push(CheckResult::new(
        "clique_count",
        (3 * cliques.len() != g.num_edges()).then(|| format!("{} cliques for {} edges", cliques.len(), g.num_edges())),
    ));

    StructureReport { checks }
}

/// Everything derived from one cubic map.
#[derive(Debug, Clone)]
pub struct ModuliGraphs {
    pub wh_graph: WeakHamiltonianGraph,
    pub cliques: Cliques,
    pub chromatic: ChromaticGraph,
}

impl ModuliGraphs {
    pub fn build(map: &PlanarMap, mode: ChromaticMode) -> Result<Self, ModuliError> {
        let wh_graph = build_wh_graph(map)?;
        let cliques = find_chromatic_cliques(&wh_graph)?;
        let chromatic = build_chromatic_graph(&wh_graph, &cliques, mode)?;
        Ok(ModuliGraphs { wh_graph, cliques, chromatic })
    }

    /// Canonical coloring of every clique, in clique order.
    pub fn coloring_table(&self, map: &PlanarMap) -> Result<Vec<FaceColoring>, ModuliError> {
        self.cliques.cliques.iter().map(|c| clique_to_coloring(map, &self.wh_graph, c)).collect()
    }
}
