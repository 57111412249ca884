//! Edge subsets as vectors over F2.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor};

const BLOCK: usize = 64;

/// An indicator vector in `F2^E`.
///
/// Ordering is lexicographic on the indicator vector `(b_0, b_1, ...)` with
/// `0 < 1`, so a set missing edge 0 sorts before one containing it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    len: usize,
    blocks: Vec<u64>,
}

impl EdgeSubset {
    pub fn empty(len: usize) -> Self {
        EdgeSubset { len, blocks: vec![0; len.div_ceil(BLOCK)] }
    }

    pub fn full(len: usize) -> Self {
        let mut s = EdgeSubset { len, blocks: vec![u64::MAX; len.div_ceil(BLOCK)] };
        s.trim();
        s
    }

    /// Panics if an edge id is `>= len`.
    pub fn from_edges<I: IntoIterator<Item = usize>>(len: usize, edges: I) -> Self {
        let mut s = Self::empty(len);
        for e in edges {
            s.insert(e);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.len % BLOCK;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the ambient edge set.
    pub fn len(&self) -> usize {
        self.len
    }

    /// True when the subset has no edges (not when the ambient space is empty).
    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.len && self.blocks[e / BLOCK] >> (e % BLOCK) & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        assert!(e < self.len, "edge {e} outside F2^{}", self.len);
        self.blocks[e / BLOCK] |= 1 << (e % BLOCK);
    }

    pub fn remove(&mut self, e: usize) {
        assert!(e < self.len, "edge {e} outside F2^{}", self.len);
        self.blocks[e / BLOCK] &= !(1 << (e % BLOCK));
    }

    pub fn toggle(&mut self, e: usize) {
        assert!(e < self.len, "edge {e} outside F2^{}", self.len);
        self.blocks[e / BLOCK] ^= 1 << (e % BLOCK);
    }

    pub fn complement(&self) -> Self {
        let mut s = EdgeSubset { len: self.len, blocks: self.blocks.iter().map(|b| !b).collect() };
        s.trim();
        s
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.len)
    }

    pub fn is_subset(&self, other: &EdgeSubset) -> bool {
        self.len == other.len && self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &EdgeSubset) -> bool {
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & b == 0)
    }

    /// Edge ids in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * BLOCK + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &EdgeSubset, f: impl Fn(u64, u64) -> u64) -> EdgeSubset {
        assert_eq!(self.len, other.len, "edge subsets of different maps");
        EdgeSubset { len: self.len, blocks: self.blocks.iter().zip(&other.blocks).map(|(&a, &b)| f(a, b)).collect() }
    }
}

impl BitXor for &EdgeSubset {
    type Output = EdgeSubset;
    fn bitxor(self, rhs: &EdgeSubset) -> EdgeSubset {
        self.zip_with(rhs, |a, b| a ^ b)
    }
}

impl BitOr for &EdgeSubset {
    type Output = EdgeSubset;
    fn bitor(self, rhs: &EdgeSubset) -> EdgeSubset {
        self.zip_with(rhs, |a, b| a | b)
    }
}

impl BitAnd for &EdgeSubset {
    type Output = EdgeSubset;
    fn bitand(self, rhs: &EdgeSubset) -> EdgeSubset {
        self.zip_with(rhs, |a, b| a & b)
    }
}

impl Ord for EdgeSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.blocks.iter().zip(&other.blocks) {
                let diff = a ^ b;
                if diff != 0 {
                    let first = diff.trailing_zeros();
                    // whichever has a 0 at the first differing position is smaller
                    return if a >> first & 1 == 0 { Ordering::Less } else { Ordering::Greater };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for EdgeSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSubset/{}", self.len)?;
        f.debug_set().entries(self.iter()).finish()
    }
}
