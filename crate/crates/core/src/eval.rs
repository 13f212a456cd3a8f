//! Folds a [`KnotSpec`] into the tightest genus bound the formulas certify.

use num_integer::Integer;

use crate::calculus::{
    cable_upper_case_d, connect_sum_genus, double_cable_lower, genus_from_seifert, satellite_lower,
    surgery_genus,
};
use crate::error::{Error, Result};
use crate::spec::KnotSpec;
use crate::torus_bundle::{fiber_curve_genus, knot_order};
use crate::value::{GenusResult, GenusValue, KnotOrder, TrivialityStatus};

pub fn eval_spec(k: &KnotSpec) -> Result<GenusResult> {
    k.validate()?;
    eval(k)
}

fn homology_sphere_knot(value: GenusValue, triviality: TrivialityStatus) -> GenusResult {
    GenusResult { value, triviality, order: KnotOrder::Finite(1) }
}

fn eval(k: &KnotSpec) -> Result<GenusResult> {
    use TrivialityStatus::*;
    match k {
        KnotSpec::Unknot => Ok(homology_sphere_knot(GenusValue::zero(), PTrivial(1))),
        KnotSpec::Seed { genus, .. } => {
            let t = if *genus == 0 { PTrivial(1) } else { NotPTrivial };
            Ok(homology_sphere_knot(genus_from_seifert(*genus), t))
        }
        KnotSpec::TorusKnot { u, v } => {
            // Classical Seifert genus of a torus knot.
            let g = ((u - 1) * (v - 1) / 2) as u32;
            Ok(homology_sphere_knot(genus_from_seifert(g), NotPTrivial))
        }
        KnotSpec::Surgery { base, m, .. } => {
            if !base.in_homology_sphere() {
                return Err(Error::UnsupportedComposition(format!(
                    "surgery on {base}, which does not lie in a homology sphere"
                )));
            }
            let b = eval(base)?;
            let triviality = match b.triviality {
                PTrivial(1) => PTrivial(*m),
                NotPTrivial => NotPTrivial,
                _ => Unknown,
            };
            Ok(GenusResult {
                value: surgery_genus(&b.value, *m),
                triviality,
                order: KnotOrder::Finite(*m),
            })
        }
        KnotSpec::ConnectSum(a, b) => {
            let (ra, rb) = (eval(a)?, eval(b)?);
            let (value, triviality) =
                connect_sum_genus(&ra.value, ra.triviality, &rb.value, rb.triviality)?;
            let order = match (ra.order, rb.order) {
                (KnotOrder::Finite(x), KnotOrder::Finite(y)) => KnotOrder::Finite(x.lcm(&y)),
                (KnotOrder::Infinite, _) | (_, KnotOrder::Infinite) => KnotOrder::Infinite,
                _ => KnotOrder::Unknown,
            };
            Ok(GenusResult { value, triviality, order })
        }
        KnotSpec::Cable { base, p, q } => eval_cable(base, *p, *q),
        KnotSpec::Satellite { base, winding } => {
            let r = eval(base)?;
            let value = if r.triviality == NotPTrivial {
                satellite_lower(&r.value, *winding)
            } else {
                GenusValue::unknown()
            };
            Ok(GenusResult { value, triviality: Unknown, order: multiple_order(r.order, *winding) })
        }
        KnotSpec::TorusBundleFiber(a) => {
            let order = knot_order(a)?;
            if order == KnotOrder::Infinite {
                return Err(Error::UnsupportedComposition(format!(
                    "fiber class of {a} has infinite order; it bounds no rational Seifert surface"
                )));
            }
            Ok(GenusResult { value: fiber_curve_genus(a)?, triviality: Unknown, order })
        }
    }
}

/// Order of `w` times a class of the given order.
fn multiple_order(order: KnotOrder, w: u64) -> KnotOrder {
    match order {
        KnotOrder::Finite(o) => KnotOrder::Finite(o / o.gcd(&w)),
        other => other,
    }
}

fn eval_cable(base: &KnotSpec, p: i64, q: i64) -> Result<GenusResult> {
    let r = eval(base)?;
    if q == 1 {
        // A (p, 1) curve on the boundary torus is isotopic to the core.
        return Ok(r);
    }
    let q_u = q as u64;
    let mut value = if r.triviality == TrivialityStatus::NotPTrivial {
        satellite_lower(&r.value, q_u)
    } else {
        GenusValue::unknown()
    };
    if let KnotSpec::Cable { base: inner, q: q_inner, .. } = base {
        if *q_inner >= 2 && eval(inner)?.triviality == TrivialityStatus::NotPTrivial {
            value = value.refine(&double_cable_lower())?;
        }
    }
    if let Some(upper) = case_d_upper(base, p, q)? {
        value = value.refine(&upper)?;
    }
    Ok(GenusResult { value, triviality: TrivialityStatus::Unknown, order: multiple_order(r.order, q_u) })
}

/// Upper bound for a `(p, q)`-cable of the core of `-kq^2/b` surgery on a
/// homology-sphere knot, when the slope has that form and `a k q^2 - b(1 + kpq) = 1`
/// is solvable.
fn case_d_upper(base: &KnotSpec, p: i64, q: i64) -> Result<Option<GenusValue>> {
    let KnotSpec::Surgery { base: k0, m, n } = base else { return Ok(None) };
    if p < 2 || q < 2 {
        return Ok(None);
    }
    let (m, q2) = (*m as i128, (q * q) as i128);
    if m % q2 != 0 {
        return Ok(None);
    }
    let k = m / q2;
    let b = -(*n as i128);
    if (1 + b * (1 + k * p as i128 * q as i128)).rem_euclid(k * q2) != 0 {
        return Ok(None);
    }
    let Some(eta_s0) = eval(k0)?.value.exact_value() else { return Ok(None) };
    Ok(Some(cable_upper_case_d(eta_s0, q as u64, k as u64)))
}
