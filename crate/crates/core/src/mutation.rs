//! Mutations of weak Hamiltonians.
//!
//! A mutation keeps the complementary matching `C⊥` and replaces every cycle
//! `C_i` by one of its two alternating perfect matchings. A weak Hamiltonian
//! with `N` cycles therefore has exactly `2^N` mutations.

use rayon::prelude::*;
use thiserror::Error;

use crate::edges::EdgeSubset;
use crate::factors::{FactorError, WeakHamiltonian};
use crate::map::PlanarMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MutationError {
    #[error("cycle of odd length {length} has no perfect matching")]
    OddCycle { length: usize },
    #[error("selection has {got} entries but the weak Hamiltonian has {expected} cycles")]
    SelectionLengthMismatch { expected: usize, got: usize },
    #[error("invalid selection bitmask `{0}`")]
    BadMask(String),
    #[error("mutation is not a weak Hamiltonian: {0}")]
    Invalid(#[from] FactorError),
}

/// One bit per cycle of a weak Hamiltonian, in cycle order. Bit `false`
/// picks the alternating matching containing the cycle's smallest edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatchingSelection {
    bits: Vec<bool>,
}

impl MatchingSelection {
    pub fn new(bits: Vec<bool>) -> Self {
        MatchingSelection { bits }
    }

    /// Bit `i` of `mask` selects for cycle `i`.
    pub fn from_mask(mask: u64, num_cycles: usize) -> Result<Self, MutationError> {
        if num_cycles < 64 && mask >> num_cycles != 0 {
            return Err(MutationError::BadMask(format!("{mask:#b} has bits beyond the {num_cycles} cycles")));
        }
        Ok(MatchingSelection { bits: (0..num_cycles).map(|i| i < 64 && mask >> i & 1 == 1).collect() })
    }

    /// Parses `0b...` binary or plain decimal.
    pub fn parse(text: &str, num_cycles: usize) -> Result<Self, MutationError> {
        let text = text.trim();
        let mask = match text.strip_prefix("0b") {
            Some(bin) => u64::from_str_radix(bin, 2),
            None => text.parse(),
        }
        .map_err(|_| MutationError::BadMask(text.to_string()))?;
        Self::from_mask(mask, num_cycles)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// The selection picking the other matching on every cycle.
    pub fn flipped(&self) -> Self {
        MatchingSelection { bits: self.bits.iter().map(|b| !b).collect() }
    }

    /// All `2^n` selections, in increasing mask order.
    pub fn all(num_cycles: usize) -> impl Iterator<Item = MatchingSelection> {
        assert!(num_cycles < 64, "2^{num_cycles} selections cannot be enumerated");
        (0..1u64 << num_cycles).map(move |mask| Self::from_mask(mask, num_cycles).expect("mask in range"))
    }
}

/// The two alternating perfect matchings of an even cycle given in traversal
/// order; the one containing the smallest edge comes first.
pub fn cycle_matchings(cycle: &[usize], num_edges: usize) -> Result<(EdgeSubset, EdgeSubset), MutationError> {
    if cycle.len() % 2 == 1 {
        return Err(MutationError::OddCycle { length: cycle.len() });
    }
    let pick = |parity: usize| {
        EdgeSubset::from_edges(num_edges, cycle.iter().enumerate().filter(|(i, _)| i % 2 == parity).map(|(_, &e)| e))
    };
    let (even, odd) = (pick(0), pick(1));
    let smallest = cycle.iter().min().copied();
    Ok(match smallest {
        Some(e) if odd.contains(e) => (odd, even),
        _ => (even, odd),
    })
}

/// `C⊥` together with the selected matching of every cycle.
pub fn mutate(map: &PlanarMap, h: &WeakHamiltonian, sel: &MatchingSelection) -> Result<WeakHamiltonian, MutationError> {
    if sel.len() != h.num_cycles() {
        return Err(MutationError::SelectionLengthMismatch { expected: h.num_cycles(), got: sel.len() });
    }
    let mut edges = h.edges().complement();
    for (cycle, &second) in h.cycles().iter().zip(sel.bits()) {
        let (first_matching, second_matching) = cycle_matchings(cycle, map.num_edges())?;
        edges = &edges | if second { &second_matching } else { &first_matching };
    }
    Ok(WeakHamiltonian::new(map, edges)?)
}

/// All `2^N` mutations of `h`, sorted.
pub fn all_mutations(map: &PlanarMap, h: &WeakHamiltonian) -> Vec<WeakHamiltonian> {
    let selections: Vec<_> = MatchingSelection::all(h.num_cycles()).collect();
    let mut out: Vec<WeakHamiltonian> = selections
        .par_iter()
        .map(|sel| mutate(map, h, sel).expect("mutation of a weak Hamiltonian is a weak Hamiltonian"))
        .collect();
    out.sort_unstable();
    out
}

/// Whether `h2` is a mutation of `h1`: it contains `C⊥` of `h1` and meets
/// every cycle of `h1` in one of its two alternating matchings.
pub fn is_mutation_pair(map: &PlanarMap, h1: &WeakHamiltonian, h2: &WeakHamiltonian) -> bool {
    let n = map.num_edges();
    if h1.edges().len() != n || h2.edges().len() != n {
        return false;
    }
    if !h1.edges().complement().is_subset(h2.edges()) {
        return false;
    }
    h1.cycles().iter().all(|cycle| {
        let Ok((a, b)) = cycle_matchings(cycle, n) else { return false };
        let on_cycle = h2.edges() & &(&a | &b);
        on_cycle == a || on_cycle == b
    })
}

/// The union criterion: the two edge sets together cover every edge.
pub fn covers_all_edges(h1: &EdgeSubset, h2: &EdgeSubset) -> bool {
    (h1 | h2).is_full()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::enumerate_weak_hamiltonians;
    use crate::io::generate::{prism, tetrahedron};

    #[test]
    fn matchings_of_small_cycles() {
        let (a, b) = cycle_matchings(&[0, 1, 2, 3], 4).unwrap();
        assert_eq!(a.to_vec(), vec![0, 2]);
        assert_eq!(b.to_vec(), vec![1, 3]);
        let (a, b) = cycle_matchings(&[5, 0, 3, 1, 4, 2], 6).unwrap();
        assert_eq!(a.to_vec(), vec![0, 1, 2]);
        assert_eq!(b.to_vec(), vec![3, 4, 5]);
        assert_eq!(cycle_matchings(&[0, 1, 2], 3).unwrap_err(), MutationError::OddCycle { length: 3 });
    }

    #[test]
    fn selection_masks() {
        let s = MatchingSelection::parse("0b10", 2).unwrap();
        assert_eq!(s.bits(), &[false, true]);
        assert_eq!(MatchingSelection::parse("3", 2).unwrap().bits(), &[true, true]);
        assert!(matches!(MatchingSelection::parse("4", 2), Err(MutationError::BadMask(_))));
        assert!(matches!(MatchingSelection::parse("x", 2), Err(MutationError::BadMask(_))));
        assert_eq!(s.flipped().bits(), &[true, false]);
        assert_eq!(MatchingSelection::all(3).count(), 8);
    }

    #[test]
    fn k4_mutations_are_the_other_hamiltonians() {
        let k4 = tetrahedron();
        let whs = enumerate_weak_hamiltonians(&k4).unwrap();
        for h in &whs {
            let muts = all_mutations(&k4, h);
            let others: Vec<_> = whs.iter().filter(|g| *g != h).cloned().collect();
            assert_eq!(muts, others);
        }
    }

    #[test]
    fn prism4_rings_mutate_to_four_hamiltonians() {
        let p4 = prism(4);
        let rings = WeakHamiltonian::new(&p4, EdgeSubset::from_edges(12, 0..8)).unwrap();
        let muts = all_mutations(&p4, &rings);
        assert_eq!(muts.len(), 4);
        for m in &muts {
            assert!(covers_all_edges(rings.edges(), m.edges()));
            assert!(is_mutation_pair(&p4, &rings, m));
            assert!(is_mutation_pair(&p4, m, &rings));
        }
    }

    #[test]
    fn selection_length_checked() {
        let k4 = tetrahedron();
        let h = &enumerate_weak_hamiltonians(&k4).unwrap()[0];
        let err = mutate(&k4, h, &MatchingSelection::new(vec![false, false])).unwrap_err();
        assert_eq!(err, MutationError::SelectionLengthMismatch { expected: 1, got: 2 });
    }
}
