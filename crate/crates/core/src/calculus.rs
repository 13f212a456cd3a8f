//! Closed-form genus formulas and bound propagators: homology spheres,
//! surgery, connected sums, satellites and cables, and the Euler
//! characteristic bookkeeping for horizontal surfaces in Seifert fiber spaces.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value::{int, rat, GenusValue, Rational, TrivialityStatus};

/// Rational genus of a knot of Seifert genus `g` in a homology sphere:
/// 0 for the unknot, `g - 1/2` otherwise.
pub fn genus_from_seifert(g: u32) -> GenusValue {
    if g == 0 {
        GenusValue::zero()
    } else {
        GenusValue::exact(int(g as i128) - rat(1, 2))
    }
}

/// Core of `m/n` surgery on a knot in a homology sphere has genus `base / m`.
pub fn surgery_genus(base: &GenusValue, m: u64) -> GenusValue {
    assert!(m > 0, "surgery numerator must be positive");
    base.scale(rat(1, m as i128))
}

/// Genus and triviality of a connected sum.
///
/// Summands may come in either order; the `p`-trivial one is moved to the
/// right before a formula case is selected.
pub fn connect_sum_genus(
    v1: &GenusValue,
    t1: TrivialityStatus,
    v2: &GenusValue,
    t2: TrivialityStatus,
) -> Result<(GenusValue, TrivialityStatus)> {
    use TrivialityStatus::*;
    match (t1, t2) {
        (Unknown, _) | (_, Unknown) => Err(Error::UnknownTriviality),
        (PTrivial(_), NotPTrivial) => connect_sum_genus(v2, t2, v1, t1),
        // K2 trivial: the sum is K1.
        (PTrivial(p1), PTrivial(1)) => Ok((GenusValue::zero(), PTrivial(p1))),
        (PTrivial(1), PTrivial(p2)) => Ok((GenusValue::zero(), PTrivial(p2))),
        (NotPTrivial, NotPTrivial) => Ok((v1.add(v2, rat(1, 2)), NotPTrivial)),
        (NotPTrivial, PTrivial(p2)) => {
            let shift = rat(1, 2) - rat(1, 2 * p2 as i128);
            Ok((v1.add(&GenusValue::zero(), shift), NotPTrivial))
        }
        (PTrivial(p1), PTrivial(p2)) => {
            let (p1, p2) = (p1 as i128, p2 as i128);
            let value = rat(1, 2) - rat(p1 + p2, 2 * p1 * p2);
            // Zero only for p1 = p2 = 2, the RP^1 # RP^1 curve, whose exterior
            // (a twisted I-bundle over the Klein bottle) still has incompressible boundary.
            Ok((GenusValue::exact(value), NotPTrivial))
        }
    }
}

/// A satellite of winding number `k` of a knot with incompressible exterior
/// boundary has genus at least `k` times the companion's.
pub fn satellite_lower(base: &GenusValue, winding: u64) -> GenusValue {
    assert!(winding > 0);
    GenusValue::with_strictness(base.lo() * int(winding as i128), base.lo_strict(), None, false)
        .expect("half-line is never empty")
}

/// A non-trivial cable of a non-trivial cable of a knot that is not
/// `m`-trivial for any `m` has genus strictly above 1/12.
pub fn double_cable_lower() -> GenusValue {
    GenusValue::greater_than(rat(1, 12))
}

/// Upper bound `(eta(S0) + (q-1)/2) / qk` from the planar-surface construction
/// for a `(p, q)`-cable of the core of `-kq^2/b` surgery.
pub fn cable_upper_case_d(eta_s0: Rational, q: u64, k: u64) -> GenusValue {
    assert!(!eta_s0.is_negative());
    assert!(q >= 2 && k >= 1);
    let q = q as i128;
    GenusValue::at_most((eta_s0 + rat(q - 1, 2)) / int(q * k as i128))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertHorizontalData {
    /// Euler characteristic of the base surface underlying the orbifold.
    pub chi_base: i64,
    pub multiplicities: Vec<u32>,
    /// Degree of the branched covering F -> B.
    pub degree: u32,
}

/// `chi(F) = k (chi(B) - sum (1 - 1/q_i))`, checked against `chi(F) <= -k/6`
/// whenever it is negative.
pub fn horizontal_euler(d: &SeifertHorizontalData) -> Result<Rational> {
    if d.multiplicities.iter().any(|&q| q < 2) || d.degree == 0 {
        return Err(Error::PreconditionViolated(
            "multiplicities must be >= 2 and degree >= 1".into(),
        ));
    }
    let k = int(d.degree as i128);
    let cone: Rational = d
        .multiplicities
        .iter()
        .map(|&q| Rational::one() - rat(1, q as i128))
        .sum();
    let chi = k * (int(d.chi_base as i128) - cone);
    if chi.is_negative() && chi > -k / int(6) {
        return Err(Error::InternalBoundViolation(format!(
            "chi(F) = {chi} exceeds -k/6 = {} for {d:?}",
            -k / int(6)
        )));
    }
    Ok(chi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerticalTorusData {
    /// Fiber class is `alpha*a + beta*b`.
    pub alpha: i64,
    pub beta: i64,
    pub ell0: i64,
    pub ell1: i64,
    pub m: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerticalTorusReport {
    pub k0: u64,
    pub k1: u64,
    pub p: u64,
    /// `k0 + k1 >= p` when both sides are horizontal.
    pub sum_covers_p: bool,
}

impl VerticalTorusData {
    /// Covering indices `k_i = |beta*ell_i - alpha*m|` and `p = |ell1 - ell0|`.
    pub fn check(&self) -> Result<VerticalTorusReport> {
        if self.beta == 0 {
            return Err(Error::PreconditionViolated(
                "beta = 0: the knot is an ordinary fiber".into(),
            ));
        }
        let m = self.m as i64;
        let k0 = (self.beta * self.ell0 - self.alpha * m).unsigned_abs();
        let k1 = (self.beta * self.ell1 - self.alpha * m).unsigned_abs();
        let p = (self.ell1 - self.ell0).unsigned_abs();
        Ok(VerticalTorusReport { k0, k1, p, sum_covers_p: k0 + k1 >= p })
    }

    /// When the far side is vertical with `s` boundary curves, so that
    /// `(ell1, m) = s(alpha, beta)`, returns whether `s*k0 = m*p`.
    /// `None` if the data are not of that shape.
    pub fn vertical_side_identity(&self, s: u64) -> Result<Option<bool>> {
        let r = self.check()?;
        let s_i = s as i64;
        if s == 0 || self.ell1 != s_i * self.alpha || self.m as i64 != s_i * self.beta {
            return Ok(None);
        }
        Ok(Some(s * r.k0 == self.m * r.p))
    }
}

pub fn vertical_torus_check(d: &VerticalTorusData) -> Result<VerticalTorusReport> {
    d.check()
}

/// `eta` of a connected surface: `-chi/2` if negative, else 0.
pub fn eta_of_chi(chi: i64) -> Rational {
    if chi < 0 {
        rat(-chi as i128, 2)
    } else {
        Rational::zero()
    }
}
