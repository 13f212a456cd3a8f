//! Euler-characteristic bounds from reduced graphs and parallel-family caps.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value::{int, Rational};

/// Vertex, edge and disk-face counts of a reduced graph on a surface of
/// Euler characteristic `chi_surface`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedCounts {
    pub v_bar: u64,
    pub e_bar: u64,
    pub f_bar: u64,
    pub chi_surface: i64,
}

impl ReducedCounts {
    /// Euler characteristic of the surface with the vertex disks removed.
    pub fn chi_punctured(&self) -> i64 {
        self.chi_surface - self.v_bar as i64
    }
}

/// `e_bar / 3`, a lower bound for `-chi` of the punctured surface.
///
/// Also checks the chain `chi <= f - e` and `3 chi <= -e` against the counts.
pub fn euler_edge_lower(c: &ReducedCounts) -> Result<Rational> {
    if 2 * c.e_bar < 3 * c.f_bar {
        return Err(Error::PreconditionViolated(format!(
            "reduced graph has 2*{} < 3*{}: some face has fewer than three sides",
            c.e_bar, c.f_bar
        )));
    }
    let (e, f) = (c.e_bar as i64, c.f_bar as i64);
    let chi = c.chi_punctured();
    if chi > f - e {
        return Err(Error::InternalBoundViolation(format!(
            "chi = {chi} exceeds f - e = {}; counts are inconsistent",
            f - e
        )));
    }
    if 3 * chi > -e {
        return Err(Error::InternalBoundViolation(format!("3 chi = {} > -e = {}", 3 * chi, -e)));
    }
    Ok(Rational::new(c.e_bar as i128, 3))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBound {
    #[serde(with = "crate::value::rational_str")]
    pub e_bar_lower: Rational,
    #[serde(with = "crate::value::rational_str")]
    pub neg_chi_lower: Rational,
    #[serde(with = "crate::value::rational_str")]
    pub genus_lower: Rational,
}

/// Lower bounds from the largest parallel-family sizes.
///
/// With `e_i` interior and `e_b` boundary edges, `2 e_i + e_b = p n`, so
/// `e_bar >= p n / max(2 cap_interior, cap_boundary)`; then `-chi >= e_bar / 3`
/// and the genus, `-chi / 2p`, is at least `e_bar / 6p`.
pub fn reduced_edge_bound(
    p: u64,
    n: u64,
    cap_interior: Option<Rational>,
    cap_boundary: Option<Rational>,
) -> Result<EdgeBound> {
    if p == 0 || n == 0 {
        return Err(Error::PreconditionViolated("p and n must be positive".into()));
    }
    let terms: Vec<Rational> = cap_interior.map(|c| c * int(2)).into_iter().chain(cap_boundary).collect();
    let Some(denom) = terms.into_iter().max() else { return Err(Error::NoCaps) };
    if denom <= Rational::zero() {
        return Err(Error::PreconditionViolated("caps must be positive".into()));
    }
    let e_bar_lower = int((p * n) as i128) / denom;
    Ok(EdgeBound {
        e_bar_lower,
        neg_chi_lower: e_bar_lower / int(3),
        genus_lower: e_bar_lower / int(6 * p as i128),
    })
}
