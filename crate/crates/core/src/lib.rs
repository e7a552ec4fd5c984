//! Degree sequences that force a graph to be a tree, unicyclic or bicyclic.
//!
//! [`classifier`] decides membership from closed-form families;
//! [`enumeration`] checks the same question by exhausting every
//! realization; [`witness`] builds a disconnected realization when one
//! exists. [`switching`] holds the edge exchanges the constructions use.

pub mod classifier;
pub mod cli;
pub mod enumeration;
pub mod graph;
pub mod sequence;
pub mod switching;
pub mod verify;
pub mod witness;

pub use classifier::{classify, Family, ForciblyVerdict};
pub use enumeration::TargetClass;
pub use graph::Graph;
pub use sequence::{parse_sequence, DegreeSequence};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/switching.md")]
    mod switching {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/witnesses.md")]
    mod witnesses {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
