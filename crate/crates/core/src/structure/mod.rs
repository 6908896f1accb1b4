//! Structural decompositions: st-numberings, nonseparating cycles and ear
//! decompositions, pseudo-paths, contraction, and series-parallel pairs.

mod contract;
mod cycle;
mod ears;
mod series_parallel;
mod st;

pub use st::{is_pseudo_path, is_st_numbering, pseudo_path, st_numbering, PseudoPath, StNumbering};
pub use cycle::{all_induced_cycles, is_nonseparating_induced_cycle, nonseparating_induced_cycle};
pub use ears::{is_nonseparating_ear_decomposition, nonseparating_ear_decomposition, EarDecomposition};
pub use contract::{decompose_q, ContractedEdge, ContractedGraph, Decomposition};
pub use series_parallel::{is_series_parallel, series_parallel_separation_pair};
