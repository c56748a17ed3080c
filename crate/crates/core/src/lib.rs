//! Clique cluster-whiskered graphs and the combinatorial commutative algebra
//! around them.
//!
//! The crate builds whiskered graphs `G^π`, `G^cc`, `G^mc` and `G^md` from a
//! base graph and a clique cluster-partition, certifies vertex
//! decomposability of their independence complexes, enumerates the facet
//! poset of `Ind G^π`, and computes graded Betti numbers of cover ideals both
//! through a homology oracle and through the deletion/link recursion.

pub mod bits;
pub mod complex;
pub mod decomposability;
pub mod error;
pub mod generate;
pub mod graph;
pub mod homology;
pub mod poset;
pub mod properties;
pub mod resolution;
pub mod whisker;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::{Chordality, Graph, VertexSet};
pub use homology::FieldSpec;
pub use resolution::{BettiTable, MonomialIdeal};
pub use whisker::{Kind, PartitionSpec, WhiskeredGraph};
