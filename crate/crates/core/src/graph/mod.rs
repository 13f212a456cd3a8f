//! Intersection-graph combinatorics.

pub mod bound;
pub mod family;
pub mod fat;
pub mod sweep;

pub use bound::{euler_edge_lower, reduced_edge_bound, EdgeBound, ReducedCounts};
pub use family::{PairCountReport, ParallelFamily};
pub use fat::{BeachballKind, BoundaryEnd, FatGraph, Reduction, Slot, Surface};
pub use sweep::{
    edge_bound_sweep, euler_chain_sweep, extended_s_cycle_sweep, pair_count_sweep, parity_sweep, s_cycle_sweep,
    SweepRecord, SweepVerdict,
};
