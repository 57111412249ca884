//! Face colorings and their correspondence with weak Hamiltonians.
//!
//! A weak Hamiltonian `h` 2-colors the faces: crossing an edge changes the
//! color exactly when the edge lies in `h`. Two weak Hamiltonians covering
//! every edge give a proper 4-coloring through `J_2 x J_2 -> J_4`, and
//! conversely each of the three ways to split `J_4` into two pairs turns a
//! proper 4-coloring back into a weak Hamiltonian.

use std::collections::VecDeque;

use rayon::prelude::*;
use thiserror::Error;

use crate::edges::EdgeSubset;
use crate::factors::{require_cubic, FactorError, WeakHamiltonian};
use crate::map::{DualAdjacency, PlanarMap};
use crate::mutation::covers_all_edges;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("parity labelling is inconsistent across edge {edge}")]
    ParityInconsistency { edge: usize },
    #[error("the two weak Hamiltonians do not cover every edge")]
    NotCoveringPair,
    #[error("coloring is not proper: {0}")]
    ImproperColoring(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("{0} is not a bijection J_2 x J_2 -> J_4")]
    BadGamma(String),
    #[error(transparent)]
    Factor(#[from] FactorError),
}

/// Colors in `1..=palette` indexed by face id. Properness is checked by
/// [`is_proper`], not enforced here.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceColoring {
    palette: u8,
    colors: Vec<u8>,
}

impl FaceColoring {
    pub fn new(palette: u8, colors: Vec<u8>) -> Result<Self, ColoringError> {
        if !(1..=4).contains(&palette) {
            return Err(ColoringError::InvalidColoring(format!("palette size {palette} not in 1..=4")));
        }
        if let Some((face, c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > palette) {
            return Err(ColoringError::InvalidColoring(format!("face {face} has color {c} outside 1..={palette}")));
        }
        Ok(FaceColoring { palette, colors })
    }

    pub fn palette(&self) -> u8 {
        self.palette
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, face: usize) -> u8 {
        self.colors[face]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Swap the two colors of a 2-coloring.
    pub fn swapped(&self) -> FaceColoring {
        assert_eq!(self.palette, 2, "only 2-colorings have a canonical swap");
        FaceColoring { palette: 2, colors: self.colors.iter().map(|&c| 3 - c).collect() }
    }
}

/// The three splittings of `J_4` into two pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairPartition {
    /// `{1,2} | {3,4}`
    OneTwo,
    /// `{1,3} | {2,4}`
    OneThree,
    /// `{1,4} | {2,3}`
    OneFour,
}

impl PairPartition {
    pub const ALL: [PairPartition; 3] = [PairPartition::OneTwo, PairPartition::OneThree, PairPartition::OneFour];

    /// 1-based index as used on the command line.
    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i.checked_sub(1)?).copied()
    }

    pub fn index(self) -> usize {
        self as usize + 1
    }

    /// 1 for the pair containing color 1, otherwise 2.
    pub fn class(self, color: u8) -> u8 {
        let partner = match self {
            PairPartition::OneTwo => 2,
            PairPartition::OneThree => 3,
            PairPartition::OneFour => 4,
        };
        if color == 1 || color == partner {
            1
        } else {
            2
        }
    }
}

/// A bijection `J_2 x J_2 -> J_4`, stored as `table[a - 1][b - 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gamma {
    table: [[u8; 2]; 2],
}

impl Gamma {
    pub fn new(table: [[u8; 2]; 2]) -> Result<Self, ColoringError> {
        let mut seen = [false; 5];
        for &c in table.iter().flatten() {
            if !(1..=4).contains(&c) || seen[c as usize] {
                return Err(ColoringError::BadGamma(format!("{table:?}")));
            }
            seen[c as usize] = true;
        }
        Ok(Gamma { table })
    }

    /// `(1,1) -> 1, (1,2) -> 2, (2,1) -> 3, (2,2) -> 4`. Under it the first
    /// coordinate is the `{1,2}|{3,4}` class and the second the `{1,3}|{2,4}`
    /// class.
    pub fn canonical() -> Self {
        Gamma { table: [[1, 2], [3, 4]] }
    }

    pub fn apply(&self, a: u8, b: u8) -> u8 {
        self.table[a as usize - 1][b as usize - 1]
    }
}

impl Default for Gamma {
    fn default() -> Self {
        Gamma::canonical()
    }
}

/// Faces labelled 1 or 2, changing label exactly across the edges of `s`,
/// with face 0 labelled 1. Found by a breadth-first walk of the dual; every
/// non-tree dual edge is re-checked. On the sphere this succeeds exactly when
/// `s` is an even subgraph.
pub fn parity_coloring(map: &PlanarMap, s: &EdgeSubset) -> Result<FaceColoring, ColoringError> {
    let dual = map.dual_adjacency();
    let mut color = vec![0u8; map.num_faces()];
    color[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        for &(e, g) in dual.neighbors(f) {
            let want = if s.contains(e) { 3 - color[f] } else { color[f] };
            if color[g] == 0 {
                color[g] = want;
                queue.push_back(g);
            } else if color[g] != want {
                return Err(ColoringError::ParityInconsistency { edge: e });
            }
        }
    }
    Ok(FaceColoring { palette: 2, colors: color })
}

/// The 2-coloring defined by a weak Hamiltonian.
pub fn two_coloring_from_wh(map: &PlanarMap, h: &WeakHamiltonian) -> Result<FaceColoring, ColoringError> {
    parity_coloring(map, h.edges())
}

/// `Phi(F) = gamma(phi_1(F), phi_2(F))` with the canonical `gamma`.
pub fn four_coloring_from_pair(
    map: &PlanarMap,
    h1: &WeakHamiltonian,
    h2: &WeakHamiltonian,
) -> Result<FaceColoring, ColoringError> {
    four_coloring_from_pair_with(map, h1, h2, &Gamma::canonical())
}

pub fn four_coloring_from_pair_with(
    map: &PlanarMap,
    h1: &WeakHamiltonian,
    h2: &WeakHamiltonian,
    gamma: &Gamma,
) -> Result<FaceColoring, ColoringError> {
    if !covers_all_edges(h1.edges(), h2.edges()) {
        return Err(ColoringError::NotCoveringPair);
    }
    let phi1 = two_coloring_from_wh(map, h1)?;
    let phi2 = two_coloring_from_wh(map, h2)?;
    let colors = phi1.colors.iter().zip(&phi2.colors).map(|(&a, &b)| gamma.apply(a, b)).collect();
    Ok(FaceColoring { palette: 4, colors })
}

fn first_conflict(dual: &DualAdjacency, coloring: &FaceColoring) -> Option<usize> {
    dual.records().iter().position(|&[a, b]| coloring.colors[a] == coloring.colors[b])
}

/// True iff the coloring covers every face and differs across every edge.
pub fn is_proper(map: &PlanarMap, coloring: &FaceColoring) -> bool {
    coloring.len() == map.num_faces() && first_conflict(&map.dual_adjacency(), coloring).is_none()
}

fn require_proper_four(map: &PlanarMap, coloring: &FaceColoring) -> Result<(), ColoringError> {
    if coloring.palette != 4 {
        return Err(ColoringError::ImproperColoring(format!("palette {} instead of 4", coloring.palette)));
    }
    if coloring.len() != map.num_faces() {
        return Err(ColoringError::ImproperColoring(format!(
            "{} colors for {} faces",
            coloring.len(),
            map.num_faces()
        )));
    }
    if let Some(e) = first_conflict(&map.dual_adjacency(), coloring) {
        return Err(ColoringError::ImproperColoring(format!("both sides of edge {e} share a color")));
    }
    Ok(())
}

/// Edges separating the two color classes of `partition`.
pub fn wh_from_coloring(
    map: &PlanarMap,
    coloring: &FaceColoring,
    partition: PairPartition,
) -> Result<WeakHamiltonian, ColoringError> {
    require_cubic(map)?;
    require_proper_four(map, coloring)?;
    let dual = map.dual_adjacency();
    let edges = EdgeSubset::from_edges(
        map.num_edges(),
        dual.records()
            .iter()
            .enumerate()
            .filter(|(_, &[a, b])| partition.class(coloring.colors[a]) != partition.class(coloring.colors[b]))
            .map(|(e, _)| e),
    );
    Ok(WeakHamiltonian::new(map, edges)?)
}

/// The weak Hamiltonians of all three pair partitions, in partition order.
pub fn wh_triple_from_coloring(
    map: &PlanarMap,
    coloring: &FaceColoring,
) -> Result<[WeakHamiltonian; 3], ColoringError> {
    let [a, b, c] = PairPartition::ALL;
    Ok([wh_from_coloring(map, coloring, a)?, wh_from_coloring(map, coloring, b)?, wh_from_coloring(map, coloring, c)?])
}

/// Relabel colors by order of first appearance over faces.
pub fn canonical_coloring(coloring: &FaceColoring) -> FaceColoring {
    let mut relabel = [0u8; 5];
    let mut next = 1;
    let colors = coloring
        .colors
        .iter()
        .map(|&c| {
            if relabel[c as usize] == 0 {
                relabel[c as usize] = next;
                next += 1;
            }
            relabel[c as usize]
        })
        .collect();
    FaceColoring { palette: coloring.palette, colors }
}

struct ColoringSearch<'a> {
    /// neighbours of each face with smaller id
    earlier: &'a [Vec<usize>],
    palette: u8,
    canonical: bool,
}

impl ColoringSearch<'_> {
    fn visit(&self, colors: &mut Vec<u8>, used: u8, sink: &mut dyn FnMut(&[u8])) {
        let f = colors.len();
        if f == self.earlier.len() {
            sink(colors);
            return;
        }
        let top = if self.canonical { self.palette.min(used + 1) } else { self.palette };
        for c in 1..=top {
            if self.earlier[f].iter().any(|&g| colors[g] == c) {
                continue;
            }
            colors.push(c);
            self.visit(colors, used.max(c), sink);
            colors.pop();
        }
    }
}

fn earlier_neighbors(map: &PlanarMap) -> Vec<Vec<usize>> {
    let dual = map.dual_adjacency();
    (0..map.num_faces())
        .map(|f| {
            let mut ns: Vec<usize> = dual.neighbors(f).iter().map(|&(_, g)| g).filter(|&g| g < f).collect();
            ns.sort_unstable();
            ns.dedup();
            ns
        })
        .collect()
}

/// Every proper coloring with colors `1..=k`, by backtracking over faces in
/// id order; results come out in lexicographic order. With `canonical_only`
/// a face may only use a color at most one above those already used, which
/// yields one representative per relabeling orbit.
pub fn enumerate_colorings_bruteforce(map: &PlanarMap, k: u8, canonical_only: bool) -> Vec<FaceColoring> {
    assert!((1..=4).contains(&k), "palette size {k} not in 1..=4");
    let earlier = earlier_neighbors(map);
    let search = ColoringSearch { earlier: &earlier, palette: k, canonical: canonical_only };
    let first_colors: Vec<u8> = if canonical_only { vec![1] } else { (1..=k).collect() };
    first_colors
        .par_iter()
        .map(|&c| {
            let mut out = Vec::new();
            let mut colors = vec![c];
            search.visit(&mut colors, c, &mut |cs| out.push(FaceColoring { palette: k, colors: cs.to_vec() }));
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Number of proper colorings with colors `1..=k`, without storing them.
pub fn count_colorings(map: &PlanarMap, k: u8, canonical_only: bool) -> u64 {
    assert!((1..=4).contains(&k), "palette size {k} not in 1..=4");
    let earlier = earlier_neighbors(map);
    let search = ColoringSearch { earlier: &earlier, palette: k, canonical: canonical_only };
    let first_colors: Vec<u8> = if canonical_only { vec![1] } else { (1..=k).collect() };
    first_colors
        .par_iter()
        .map(|&c| {
            let mut n = 0u64;
            search.visit(&mut vec![c], c, &mut |_| n += 1);
            n
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::enumerate_weak_hamiltonians;
    use crate::io::generate::{prism, tetrahedron};
    use crate::mutation::all_mutations;

    #[test]
    fn partition_classes() {
        let classes = |p: PairPartition| (1..=4).map(|c| p.class(c)).collect::<Vec<_>>();
        assert_eq!(classes(PairPartition::OneTwo), vec![1, 1, 2, 2]);
        assert_eq!(classes(PairPartition::OneThree), vec![1, 2, 1, 2]);
        assert_eq!(classes(PairPartition::OneFour), vec![1, 2, 2, 1]);
        assert_eq!(PairPartition::from_index(3), Some(PairPartition::OneFour));
        assert_eq!(PairPartition::from_index(0), None);
        assert_eq!(PairPartition::from_index(4), None);
    }

    #[test]
    fn gamma_must_be_bijective() {
        assert!(Gamma::new([[1, 2], [2, 4]]).is_err());
        assert!(Gamma::new([[4, 3], [2, 1]]).is_ok());
    }

    #[test]
    fn prism4_rings_two_coloring() {
        let p4 = prism(4);
        let rings = WeakHamiltonian::new(&p4, EdgeSubset::from_edges(12, 0..8)).unwrap();
        let phi = two_coloring_from_wh(&p4, &rings).unwrap();
        let ring_faces: Vec<usize> = (0..6).filter(|&f| p4.faces().face(f).iter().all(|&d| d / 2 < 8)).collect();
        for f in 0..6 {
            let expected =
                if ring_faces.contains(&f) { phi.color(ring_faces[0]) } else { 3 - phi.color(ring_faces[0]) };
            assert_eq!(phi.color(f), expected);
        }
        assert_eq!(phi.color(0), 1);
    }

    #[test]
    fn odd_subgraph_is_inconsistent() {
        let k4 = tetrahedron();
        let err = parity_coloring(&k4, &EdgeSubset::from_edges(6, [0])).unwrap_err();
        assert!(matches!(err, ColoringError::ParityInconsistency { .. }));
    }

    #[test]
    fn k4_pairs_color_all_faces_differently() {
        let k4 = tetrahedron();
        let whs = enumerate_weak_hamiltonians(&k4).unwrap();
        for h1 in &whs {
            for h2 in all_mutations(&k4, h1) {
                let phi = four_coloring_from_pair(&k4, h1, &h2).unwrap();
                let mut cs = phi.colors().to_vec();
                cs.sort();
                assert_eq!(cs, vec![1, 2, 3, 4]);
            }
            assert_eq!(four_coloring_from_pair(&k4, h1, h1).unwrap_err(), ColoringError::NotCoveringPair);
        }
    }

    #[test]
    fn properness() {
        let k4 = tetrahedron();
        assert!(!is_proper(&k4, &FaceColoring::new(4, vec![1; 4]).unwrap()));
        assert!(is_proper(&k4, &FaceColoring::new(4, vec![1, 2, 3, 4]).unwrap()));
        assert!(!is_proper(&k4, &FaceColoring::new(4, vec![1, 2, 3]).unwrap()));
        let err = wh_from_coloring(&k4, &FaceColoring::new(4, vec![1, 1, 3, 4]).unwrap(), PairPartition::OneTwo);
        assert!(matches!(err, Err(ColoringError::ImproperColoring(_))));
        assert!(FaceColoring::new(4, vec![0, 1]).is_err());
        assert!(FaceColoring::new(2, vec![3]).is_err());
    }

    #[test]
    fn k4_coloring_gives_hamilton_cycle_separating_pairs() {
        let k4 = tetrahedron();
        let phi = FaceColoring::new(4, vec![1, 2, 3, 4]).unwrap();
        let h = wh_from_coloring(&k4, &phi, PairPartition::OneTwo).unwrap();
        let dual = k4.dual_adjacency();
        // exactly the 4 edges between a {1,2}-face and a {3,4}-face
        let expected: Vec<usize> = (0..6)
            .filter(|&e| {
                let [a, b] = dual.sides(e);
                (a < 2) != (b < 2)
            })
            .collect();
        assert_eq!(h.edges().to_vec(), expected);
        assert_eq!(h.cycle_lengths(), vec![4]);
    }

    #[test]
    fn oracle_counts_on_small_maps() {
        assert_eq!(enumerate_colorings_bruteforce(&tetrahedron(), 4, false).len(), 24);
        assert_eq!(count_colorings(&prism(3), 4, false), 24);
        assert_eq!(count_colorings(&prism(4), 4, false), 96);
        assert_eq!(enumerate_colorings_bruteforce(&prism(4), 4, true).len(), 4);
        assert_eq!(count_colorings(&tetrahedron(), 3, false), 0);
    }

    #[test]
    fn canonical_form_relabels_by_first_occurrence() {
        let c = FaceColoring::new(4, vec![3, 1, 3, 4, 2]).unwrap();
        assert_eq!(canonical_coloring(&c).colors(), &[1, 2, 1, 3, 4]);
        let colorings = enumerate_colorings_bruteforce(&tetrahedron(), 4, false);
        let mut canon: Vec<_> = colorings.iter().map(canonical_coloring).collect();
        canon.sort();
        canon.dedup();
        assert_eq!(canon.len(), 1);
    }
}
