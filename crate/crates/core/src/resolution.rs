//! Blowups and resolution of maps with vertices of degree four or more.

use thiserror::Error;

use crate::coloring::FaceColoring;
use crate::map::{build_map, PlanarMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("no vertex {vertex}")]
    NoSuchVertex { vertex: usize },
    #[error("vertex {vertex} has degree {degree}; blowups need degree at least 3")]
    DegreeTooLow { vertex: usize, degree: usize },
    #[error("coloring has no color for resolved face {face}")]
    IncompleteCorrespondence { face: usize },
}

/// How faces of a map relate to faces of its blowup or resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCorrespondence {
    /// `forward[f]` is the resolved face corresponding to original face `f`.
    pub forward: Vec<usize>,
    /// Resolved faces created by blowup cycles, sorted.
    pub new_faces: Vec<usize>,
}

impl FaceCorrespondence {
    pub fn identity(num_faces: usize) -> Self {
        FaceCorrespondence { forward: (0..num_faces).collect(), new_faces: Vec::new() }
    }

    /// `self` followed by `next`.
    fn then(&self, next: &FaceCorrespondence) -> FaceCorrespondence {
        let mut new_faces: Vec<usize> = self.new_faces.iter().map(|&f| next.forward[f]).collect();
        new_faces.extend_from_slice(&next.new_faces);
        new_faces.sort_unstable();
        FaceCorrespondence { forward: self.forward.iter().map(|&f| next.forward[f]).collect(), new_faces }
    }
}

/// Replace `vertex` by a cycle of degree-3 vertices, one per incident edge.
///
/// For `vertex` with rotation `d_0 .. d_{k-1}`, vertex `w_0` keeps the id of
/// `vertex` and `w_1 .. w_{k-1}` are appended; `w_i` keeps dart `d_i`. New
/// edge `E + i` runs from `w_i` to `w_{i+1}`, so the new k-gon face sits to
/// the right of the darts `2(E + i) + 1`.
pub fn blowup(map: &PlanarMap, vertex: usize) -> Result<(PlanarMap, FaceCorrespondence), ResolutionError> {
    if vertex >= map.num_vertices() {
        return Err(ResolutionError::NoSuchVertex { vertex });
    }
    let k = map.degree(vertex);
    if k < 3 {
        return Err(ResolutionError::DegreeTooLow { vertex, degree: k });
    }
    let old_edges = map.num_edges();
    let out_dart = |i: usize| 2 * (old_edges + i);
    let in_dart = |i: usize| 2 * (old_edges + i) + 1;

    let mut rotations: Vec<Vec<usize>> = map.rotations().to_vec();
    let around = map.rotation(vertex).to_vec();
    let ring: Vec<Vec<usize>> = (0..k).map(|i| vec![around[i], out_dart(i), in_dart((i + k - 1) % k)]).collect();
    let mut ring = ring.into_iter();
    rotations[vertex] = ring.next().expect("k >= 3");
    rotations.extend(ring);

    let blown = build_map(rotations).expect("blowup of a valid map is valid");
    let forward: Vec<usize> = map.faces().faces().iter().map(|cycle| blown.faces().face_of(cycle[0])).collect();
    let new_faces = vec![blown.faces().face_of(in_dart(0))];
    Ok((blown, FaceCorrespondence { forward, new_faces }))
}

/// Blow up every vertex of degree four or more, in increasing vertex order.
pub fn resolve(map: &PlanarMap) -> Result<(PlanarMap, FaceCorrespondence), ResolutionError> {
    if let Some(v) = (0..map.num_vertices()).find(|&v| map.degree(v) < 3) {
        return Err(ResolutionError::DegreeTooLow { vertex: v, degree: map.degree(v) });
    }
    let mut current = map.clone();
    let mut corr = FaceCorrespondence::identity(map.num_faces());
    // blowups append vertices, so the original ids stay put
    for v in 0..map.num_vertices() {
        if current.degree(v) >= 4 {
            let (next, step) = blowup(&current, v)?;
            corr = corr.then(&step);
            current = next;
        }
    }
    Ok((current, corr))
}

/// `psi(F) = phi(F~)`: color each original face like its resolved copy.
pub fn pull_back_coloring(coloring: &FaceColoring, corr: &FaceCorrespondence) -> Result<FaceColoring, ResolutionError> {
    let colors = corr
        .forward
        .iter()
        .map(|&f| {
            if f < coloring.len() {
                Ok(coloring.color(f))
            } else {
                Err(ResolutionError::IncompleteCorrespondence { face: f })
            }
        })
        .collect::<Result<Vec<u8>, _>>()?;
    Ok(FaceColoring::new(coloring.palette(), colors).expect("colors come from a valid coloring"))
}
