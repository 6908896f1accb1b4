//! Doubly balanced connected partitions of vertex-weighted graphs.
//!
//! Given a 2- or 3-connected graph with signed node weights (supply and
//! demand), the solvers split the nodes into connected parts whose weight
//! sums are near zero and whose sizes are near equal. The algorithms are
//! generic over [`Scalar`]; use [`Rational`] for the exact guarantees.

pub mod bcpi;
pub mod dbcp;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod scalar;
pub mod structure;
pub mod weights;

pub use error::{Error, Result};
pub use graph::{
    connected_induced, connectivity_level, find_separation_pairs, is_connected, is_k_connected,
    Graph, SeparationPair,
};
pub use scalar::Scalar;
pub use weights::{validate_instance, Diagnostics, Partition, Regime, WeightAssignment};

/// Arbitrary-precision rational; the scalar every exact guarantee is stated for.
pub type Rational = num_rational::BigRational;
/// Weights over [`Rational`].
pub type Weights = WeightAssignment<Rational>;
/// Partition over [`Rational`].
pub type RationalPartition = Partition<Rational>;
