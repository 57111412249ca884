//! Rotation-system representation of maps on the sphere.
//!
//! Darts are numbered `0..2E`. The two darts of edge `e` are `2e` and
//! `2e + 1`, so the edge involution is `d ^ 1`. Each vertex carries the
//! counterclockwise cyclic list of its darts, and faces are the orbits of
//! `phi(d) = sigma(alpha(d))`.

use std::fmt;

use thiserror::Error;

/// Reasons a rotation system is rejected by [`build_map`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("map has no darts")]
    Empty,
    #[error("dart {dart} is {problem}")]
    DanglingDart { dart: usize, problem: DartProblem },
    #[error("edge {edge} is a loop")]
    Loop { edge: usize },
    #[error("map is not connected ({components} components)")]
    Disconnected { components: usize },
    #[error("map is not a sphere: V - E + F = {euler}")]
    NonSphere { euler: i64 },
    #[error("edge {edge} is a bridge")]
    Bridge { edge: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DartProblem {
    OutOfRange,
    Repeated,
    Unpaired,
}

impl fmt::Display for DartProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DartProblem::OutOfRange => "out of range",
            DartProblem::Repeated => "repeated",
            DartProblem::Unpaired => "missing its partner dart",
        })
    }
}

/// Faces of a map as dart cycles, ordered by their smallest dart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<usize>>,
    face_of: Vec<usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Dart cycle of face `f`, starting at its smallest dart.
    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// The face lying to the right of dart `d`.
    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    pub fn face_of_all(&self) -> &[usize] {
        &self.face_of
    }
}

/// The two faces on either side of every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualAdjacency {
    sides: Vec<[usize; 2]>,
    neighbors: Vec<Vec<(usize, usize)>>,
}

impl DualAdjacency {
    /// Faces to the right of dart `2e` and of dart `2e + 1`.
    pub fn sides(&self, edge: usize) -> [usize; 2] {
        self.sides[edge]
    }

    pub fn records(&self) -> &[[usize; 2]] {
        &self.sides
    }

    /// `(edge, other face)` for every edge on the boundary of `face`, in
    /// edge order. Multi-adjacency shows up as repeated faces.
    pub fn neighbors(&self, face: usize) -> &[(usize, usize)] {
        &self.neighbors[face]
    }

    pub fn num_faces(&self) -> usize {
        self.neighbors.len()
    }
}

/// A validated, connected, bridgeless, loopless map of genus 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarMap {
    rotations: Vec<Vec<usize>>,
    vertex_of: Vec<usize>,
    sigma: Vec<usize>,
    faces: FaceSet,
}

/// Validate per-vertex counterclockwise dart lists and assemble a map.
pub fn build_map(rotations: Vec<Vec<usize>>) -> Result<PlanarMap, MapError> {
    let num_darts: usize = rotations.iter().map(Vec::len).sum();
    if num_darts == 0 {
        return Err(MapError::Empty);
    }

    let mut vertex_of = vec![usize::MAX; num_darts];
    let mut sigma = vec![usize::MAX; num_darts];
    for (v, rot) in rotations.iter().enumerate() {
        for (i, &d) in rot.iter().enumerate() {
            if d >= num_darts {
                return Err(MapError::DanglingDart { dart: d, problem: DartProblem::OutOfRange });
            }
            if vertex_of[d] != usize::MAX {
                return Err(MapError::DanglingDart { dart: d, problem: DartProblem::Repeated });
            }
            vertex_of[d] = v;
            sigma[d] = rot[(i + 1) % rot.len()];
        }
    }
    // With every index in range and none repeated, all darts are present;
    // an odd count leaves the last one without a partner.
    if num_darts % 2 == 1 {
        return Err(MapError::DanglingDart { dart: num_darts - 1, problem: DartProblem::Unpaired });
    }

    for e in 0..num_darts / 2 {
        if vertex_of[2 * e] == vertex_of[2 * e + 1] {
            return Err(MapError::Loop { edge: e });
        }
    }

    let components = count_components(rotations.len(), &vertex_of);
    if components != 1 {
        return Err(MapError::Disconnected { components });
    }

    let faces = trace_faces(&sigma);
    let euler = rotations.len() as i64 - (num_darts / 2) as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(MapError::NonSphere { euler });
    }

    for e in 0..num_darts / 2 {
        if faces.face_of[2 * e] == faces.face_of[2 * e + 1] {
            return Err(MapError::Bridge { edge: e });
        }
    }

    Ok(PlanarMap { rotations, vertex_of, sigma, faces })
}

fn count_components(num_vertices: usize, vertex_of: &[usize]) -> usize {
    let mut parent: Vec<usize> = (0..num_vertices).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = num_vertices;
    for e in 0..vertex_of.len() / 2 {
        let a = find(&mut parent, vertex_of[2 * e]);
        let b = find(&mut parent, vertex_of[2 * e + 1]);
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components
}

fn trace_faces(sigma: &[usize]) -> FaceSet {
    let mut face_of = vec![usize::MAX; sigma.len()];
    let mut faces = Vec::new();
    // Scanning darts in increasing order starts every orbit at its minimum.
    for start in 0..sigma.len() {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut cycle = Vec::new();
        let mut d = start;
        loop {
            face_of[d] = id;
            cycle.push(d);
            d = sigma[d ^ 1];
            if d == start {
                break;
            }
        }
        faces.push(cycle);
    }
    FaceSet { faces, face_of }
}

impl PlanarMap {
    pub fn num_darts(&self) -> usize {
        self.vertex_of.len()
    }

    pub fn num_edges(&self) -> usize {
        self.vertex_of.len() / 2
    }

    pub fn num_vertices(&self) -> usize {
        self.rotations.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertex_of[d]
    }

    #[inline]
    pub fn alpha(&self, d: usize) -> usize {
        d ^ 1
    }

    #[inline]
    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }

    #[inline]
    pub fn phi(&self, d: usize) -> usize {
        self.sigma[d ^ 1]
    }

    /// The endpoints of edge `e`, as the vertices of darts `2e` and `2e + 1`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.vertex_of[2 * e], self.vertex_of[2 * e + 1])
    }

    /// Edges at `v` in rotation order.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotations[v].iter().map(|d| d >> 1)
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn is_cubic(&self) -> bool {
        self.rotations.iter().all(|r| r.len() == 3)
    }

    pub fn dual_adjacency(&self) -> DualAdjacency {
        let mut neighbors = vec![Vec::new(); self.num_faces()];
        let sides: Vec<[usize; 2]> =
            (0..self.num_edges()).map(|e| [self.faces.face_of(2 * e), self.faces.face_of(2 * e + 1)]).collect();
        for (e, &[a, b]) in sides.iter().enumerate() {
            neighbors[a].push((e, b));
            neighbors[b].push((e, a));
        }
        DualAdjacency { sides, neighbors }
    }

    /// The same map seen from the other side of the sphere.
    pub fn mirrored(&self) -> PlanarMap {
        let rotations = self.rotations.iter().map(|r| r.iter().rev().copied().collect()).collect();
        build_map(rotations).expect("mirror image of a valid map is valid")
    }

    /// The dual map: one vertex per face, whose rotation is the face's dart
    /// cycle. Dart `d` keeps its id and crosses its edge.
    pub fn dual(&self) -> PlanarMap {
        build_map(self.faces.faces().to_vec()).expect("dual of a bridgeless loopless map is valid")
    }

    /// A relabeling-invariant code: two maps have equal codes iff they are
    /// isomorphic by an orientation-preserving map isomorphism.
    pub fn canonical_code(&self) -> Vec<u32> {
        (0..self.num_darts()).map(|root| self.code_from(root)).min().expect("map has darts")
    }

    /// Canonical code up to orientation-preserving or -reversing isomorphism.
    pub fn unoriented_code(&self) -> Vec<u32> {
        self.canonical_code().min(self.mirrored().canonical_code())
    }

    fn code_from(&self, root: usize) -> Vec<u32> {
        let n = self.num_darts();
        let mut label = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[root] = 0;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let d = order[head];
            head += 1;
            for next in [self.sigma[d], d ^ 1] {
                if label[next] == u32::MAX {
                    label[next] = order.len() as u32;
                    order.push(next);
                }
            }
        }
        let mut code = Vec::with_capacity(2 * n);
        for &d in &order {
            code.push(label[self.sigma[d]]);
            code.push(label[d ^ 1]);
        }
        code
    }
}

/// Bridges of the underlying multigraph found by a lowpoint search, with no
/// reference to the embedding. A valid map has none.
pub fn lowpoint_bridges(map: &PlanarMap) -> Vec<usize> {
    let n = map.num_vertices();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut bridges = Vec::new();
    let mut clock = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        // (vertex, edge used to enter it, next rotation index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, via, i) = *top;
            if i < map.degree(v) {
                top.2 += 1;
                let d = map.rotation(v)[i];
                let e = d >> 1;
                if e == via {
                    continue;
                }
                let w = map.vertex_of(d ^ 1);
                if disc[w] == usize::MAX {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        bridges.push(via);
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> Vec<Vec<usize>> {
        vec![vec![0, 2, 4], vec![1, 5, 3]]
    }

    #[test]
    fn theta_faces_are_digons() {
        let map = build_map(theta()).unwrap();
        let faces = map.faces();
        assert_eq!(faces.faces(), &[vec![0, 5], vec![1, 2], vec![3, 4]]);
        let dual = map.dual_adjacency();
        assert_eq!(dual.records(), &[[0, 1], [1, 2], [2, 0]]);
    }

    #[test]
    fn theta_with_same_cyclic_order_is_a_torus() {
        let err = build_map(vec![vec![0, 2, 4], vec![1, 3, 5]]).unwrap_err();
        assert_eq!(err, MapError::NonSphere { euler: 0 });
    }

    #[test]
    fn dart_errors() {
        assert_eq!(build_map(vec![]).unwrap_err(), MapError::Empty);
        assert_eq!(
            build_map(vec![vec![0, 7], vec![1, 2]]).unwrap_err(),
            MapError::DanglingDart { dart: 7, problem: DartProblem::OutOfRange }
        );
        assert_eq!(
            build_map(vec![vec![0, 1], vec![1, 2]]).unwrap_err(),
            MapError::DanglingDart { dart: 1, problem: DartProblem::Repeated }
        );
        assert_eq!(
            build_map(vec![vec![0, 2], vec![1]]).unwrap_err(),
            MapError::DanglingDart { dart: 2, problem: DartProblem::Unpaired }
        );
    }

    #[test]
    fn loops_and_components_rejected() {
        assert_eq!(build_map(vec![vec![0, 1]]).unwrap_err(), MapError::Loop { edge: 0 });
        let two_thetas = vec![vec![0, 2, 4], vec![1, 5, 3], vec![6, 8, 10], vec![7, 11, 9]];
        assert_eq!(build_map(two_thetas).unwrap_err(), MapError::Disconnected { components: 2 });
        assert_eq!(
            build_map(vec![vec![0, 2, 4], vec![1, 5, 3], vec![]]).unwrap_err(),
            MapError::Disconnected { components: 2 }
        );
    }

    #[test]
    fn pendant_edge_is_a_bridge() {
        // theta with an extra pendant vertex hanging off vertex 0
        let err = build_map(vec![vec![0, 2, 4, 6], vec![1, 5, 3], vec![7]]).unwrap_err();
        assert_eq!(err, MapError::Bridge { edge: 3 });
    }

    #[test]
    fn digon_cycle_of_two_vertices_is_valid() {
        let map = build_map(vec![vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(map.num_faces(), 2);
        assert!(!map.is_cubic());
        assert!(lowpoint_bridges(&map).is_empty());
    }

    #[test]
    fn canonical_code_ignores_relabeling() {
        let a = build_map(theta()).unwrap();
        // swap vertices and rename edges 0 <-> 2
        let b = build_map(vec![vec![5, 3, 1], vec![4, 0, 2]]).unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
    }

    #[test]
    fn dual_swaps_vertices_and_faces() {
        let t = build_map(theta()).unwrap();
        let d = t.dual();
        assert_eq!((d.num_vertices(), d.num_edges(), d.num_faces()), (3, 3, 2));
        assert_eq!(d.dual().canonical_code(), t.canonical_code());
    }
}
