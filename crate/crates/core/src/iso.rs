//! Small simple graphs and an exact isomorphism test for them.

use thiserror::Error;

/// Largest graph [`graph_iso_small`] accepts.
pub const MAX_ISO_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("graph has {vertices} vertices; isomorphism is limited to {MAX_ISO_VERTICES}")]
    TooLarge { vertices: usize },
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(num_vertices: usize) -> Self {
        SimpleGraph { adjacency: vec![Vec::new(); num_vertices] }
    }

    /// Self-loops and repeated pairs are dropped.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(num_vertices: usize, edges: I) -> Self {
        let mut g = Self::new(num_vertices);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b || self.has_edge(a, b) {
            return;
        }
        for (x, y) in [(a, b), (b, a)] {
            let list = &mut self.adjacency[x];
            let pos = list.partition_point(|&z| z < y);
            list.insert(pos, y);
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, ns) in self.adjacency.iter().enumerate() {
            out.extend(ns.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = (0..self.num_vertices()).map(|v| self.degree(v)).collect();
        ds.sort_unstable();
        ds
    }

    /// Degree plus the sorted degrees of the neighbours.
    fn signature(&self, v: usize) -> (usize, Vec<usize>) {
        let mut around: Vec<usize> = self.adjacency[v].iter().map(|&w| self.degree(w)).collect();
        around.sort_unstable();
        (self.degree(v), around)
    }
}

/// Exact isomorphism test by backtracking over vertices with matching
/// degree signatures.
pub fn graph_iso_small(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<bool, IsoError> {
    for g in [g1, g2] {
        if g.num_vertices() > MAX_ISO_VERTICES {
            return Err(IsoError::TooLarge { vertices: g.num_vertices() });
        }
    }
    let n = g1.num_vertices();
    if n != g2.num_vertices() || g1.num_edges() != g2.num_edges() || g1.degree_sequence() != g2.degree_sequence() {
        return Ok(false);
    }
    let sig1: Vec<_> = (0..n).map(|v| g1.signature(v)).collect();
    let sig2: Vec<_> = (0..n).map(|v| g2.signature(v)).collect();
    let mut sorted1 = sig1.clone();
    let mut sorted2 = sig2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return Ok(false);
    }

    // map high-degree vertices first; each later vertex tends to touch mapped ones
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g1.degree(v)));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g1, g2, &sig1, &sig2, &order, 0, &mut image, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    sig1: &[(usize, Vec<usize>)],
    sig2: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else { return true };
    for w in 0..g2.num_vertices() {
        if used[w] || sig1[v] != sig2[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| g1.has_edge(u, v) == g2.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(g1, g2, sig1, sig2, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}
