//! Exact combinatorics of central hyperplane arrangements.
//!
//! The pipeline: an [`Arrangement`] (rational normals or a raw tope set)
//! is enumerated into [`Chambers`]; from there the crate builds posets of
//! regions, positive path classes on the arrangement graph, property-D
//! verdicts with explicit violating paths, and the bounded positive cover
//! complex with its step-by-step retraction certificate. All geometric
//! decisions are made over arbitrary-precision rationals.

pub mod arrangement;
pub mod catalog;
pub mod chambers;
pub mod complex;
pub mod dot;
pub mod error;
pub mod exact;
pub mod feasibility;
pub mod graph;
pub mod homology;
pub mod input;
pub mod paths;
pub mod poset;
pub mod property_d;
pub mod report;
pub mod sign;

pub use arrangement::{Arrangement, Hyperplane, Mode};
pub use chambers::{
    enumerate_chambers, is_simplicial_arrangement, is_simplicial_chamber, Chamber, ChamberId,
    Chambers,
};
pub use complex::{
    contractibility_report, order_complex, verify_retraction_step, BoundedCoverComplex,
    SimplicialComplexData,
};
pub use error::{Error, Result};
pub use feasibility::{strict_feasible, strict_witness};
pub use graph::ArrangementGraph;
pub use input::parse_arrangement;
pub use paths::{PathClass, PathSpace, PositivePath};
pub use poset::{
    interval_isomorphic_to_lower_set, lattice_properties, Interval, LatticeProperties,
    NonLatticeWitness, RegionPoset,
};
pub use property_d::{
    build_counterexample_path, end_decompositions, property_d_at, verify_property_d_bounded,
    PropertyDOutcome,
};
pub use sign::{Sign, SignVector};
