//! Weak Hamiltonians of bridgeless planar maps.
//!
//! A weak Hamiltonian of a cubic map is a 2-factor whose cycles all have
//! even length. This crate enumerates them, relates them to proper face
//! 4-colorings, and builds two graphs on top: the weak Hamiltonian graph,
//! whose edges are mutations, and the chromatic graph obtained from its
//! chromatic cliques, whose vertices are the 4-colorings up to relabeling.
//!
//! Maps are rotation systems on the sphere (see [`map`]). Maps with vertices
//! of degree four or more are reduced to cubic maps by [`resolution`].

pub mod check;
pub mod coloring;
pub mod edges;
pub mod factors;
pub mod io;
pub mod iso;
pub mod map;
pub mod moduli;
pub mod mutation;
pub mod resolution;

pub use coloring::{FaceColoring, PairPartition};
pub use edges::EdgeSubset;
pub use factors::WeakHamiltonian;
pub use map::{build_map, FaceSet, PlanarMap};
pub use moduli::{ChromaticGraph, ModuliGraphs, WeakHamiltonianGraph};
pub use mutation::MatchingSelection;

use thiserror::Error;

/// Any error raised by the crate, for callers that do not care which layer
/// produced it.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Map(#[from] map::MapError),
    #[error(transparent)]
    Resolution(#[from] resolution::ResolutionError),
    #[error(transparent)]
    Factor(#[from] factors::FactorError),
    #[error(transparent)]
    Mutation(#[from] mutation::MutationError),
    #[error(transparent)]
    Coloring(#[from] coloring::ColoringError),
    #[error(transparent)]
    Moduli(#[from] moduli::ModuliError),
    #[error(transparent)]
    Iso(#[from] iso::IsoError),
    #[error(transparent)]
    Document(#[from] io::document::DocumentError),
    #[error(transparent)]
    PlanarCode(#[from] io::planar_code::PlanarCodeError),
    #[error(transparent)]
    Generator(#[from] io::generate::GeneratorError),
}

impl Error {
    /// Short machine-readable name of the failure, e.g. `NotCubic`.
    pub fn kind(&self) -> &'static str {
        use coloring::ColoringError as C;
        use factors::FactorError as F;
        use map::MapError as M;
        fn factor(e: &F) -> &'static str {
            match e {
                F::NotCubic { .. } => "NotCubic",
                F::NotTwoRegular { .. } => "NotTwoRegular",
                F::OddCycle { .. } => "OddCycle",
                F::SizeMismatch { .. } => "SizeMismatch",
            }
        }
        match self {
            Error::Map(e) => match e {
                M::Empty => "Empty",
                M::DanglingDart { .. } => "DanglingDart",
                M::Loop { .. } => "Loop",
                M::Disconnected { .. } => "Disconnected",
                M::NonSphere { .. } => "NonSphere",
                M::Bridge { .. } => "Bridge",
            },
            Error::Resolution(e) => match e {
                resolution::ResolutionError::NoSuchVertex { .. } => "NoSuchVertex",
                resolution::ResolutionError::DegreeTooLow { .. } => "DegreeTooLow",
                resolution::ResolutionError::IncompleteCorrespondence { .. } => "IncompleteCorrespondence",
            },
            Error::Factor(e) => factor(e),
            Error::Mutation(e) => match e {
                mutation::MutationError::OddCycle { .. } => "OddCycle",
                mutation::MutationError::SelectionLengthMismatch { .. } => "SelectionLengthMismatch",
                mutation::MutationError::BadMask(_) => "BadMask",
                mutation::MutationError::Invalid(f) => factor(f),
            },
            Error::Coloring(e) => match e {
                C::ParityInconsistency { .. } => "ParityInconsistency",
                C::NotCoveringPair => "NotCoveringPair",
                C::ImproperColoring(_) => "ImproperColoring",
                C::InvalidColoring(_) => "InvalidColoring",
                C::BadGamma(_) => "BadGamma",
                C::Factor(f) => factor(f),
            },
            Error::Moduli(e) => match e {
                moduli::ModuliError::MissingThirdVertex { .. } => "MissingThirdVertex",
                moduli::ModuliError::ThirdVertexNotAdjacent { .. } => "ThirdVertexNotAdjacent",
                moduli::ModuliError::EdgeInTwoCliques { .. } => "EdgeInTwoCliques",
                moduli::ModuliError::OverlapTooLarge { .. } => "OverlapTooLarge",
                moduli::ModuliError::UnknownClique => "UnknownClique",
                moduli::ModuliError::Factor(f) => factor(f),
                moduli::ModuliError::Coloring(c) => Error::Coloring(c.clone()).kind(),
            },
            Error::Iso(_) => "TooLarge",
            Error::Document(e) => match e {
                io::document::DocumentError::Parse(_) => "ParseError",
                io::document::DocumentError::Invalid(_) => "ParseError",
                io::document::DocumentError::Map(m) => Error::Map(m.clone()).kind(),
            },
            Error::PlanarCode(e) => match e {
                io::planar_code::PlanarCodeError::BadHeader => "BadHeader",
                io::planar_code::PlanarCodeError::TruncatedRecord { .. } => "TruncatedRecord",
                io::planar_code::PlanarCodeError::BadNeighbor { .. } => "BadNeighbor",
                io::planar_code::PlanarCodeError::Map { source, .. } => Error::Map(source.clone()).kind(),
            },
            Error::Generator(e) => match e {
                io::generate::GeneratorError::UnknownGenerator(_) => "UnknownGenerator",
                io::generate::GeneratorError::BadParameter(_) => "BadParameter",
            },
        }
    }
}
