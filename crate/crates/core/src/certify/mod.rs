//! Rigorous interval enclosures for the hyperbolic estimates.

pub mod dyadic;
pub mod interval;
pub mod optimize;
pub mod tube;

pub use dyadic::{Dyadic, Round};
pub use interval::{pi, CertInterval, DEFAULT_PRECISION, MIN_PRECISION};
pub use tube::{
    constants_suite, cusp_chain_bound, genus_lower_from_scl, h_of_r, maximize_h, min_core_length,
    wrapping_genus_lower, Certificate, CuspData, HMaximum, TubeParams, Verdict,
};
