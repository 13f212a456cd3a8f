pub mod calculus;
pub mod certify;
pub mod classify;
pub mod dsl;
pub mod error;
pub mod eval;
pub mod graph;
pub mod spec;
pub mod torus_bundle;
pub mod value;
