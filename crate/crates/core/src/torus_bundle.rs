//! Knots in a fiber of a torus bundle over the circle.
//!
//! The monodromy acts on `H_1(T^2)` by a matrix in SL(2, Z), always written
//! in an ordered basis whose first member is the class of the knot.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value::{int, rat, GenusValue, KnotOrder, Rational};

/// `[[alpha, beta], [gamma, delta]]` with determinant one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnimodularMatrix {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub delta: i64,
}

impl UnimodularMatrix {
    pub const IDENTITY: UnimodularMatrix = UnimodularMatrix { alpha: 1, beta: 0, gamma: 0, delta: 1 };

    pub fn new(alpha: i64, beta: i64, gamma: i64, delta: i64) -> Result<Self> {
        let det = alpha * delta - beta * gamma;
        if det != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(UnimodularMatrix { alpha, beta, gamma, delta })
    }

    /// `[[1, p], [0, 1]]`.
    pub fn parabolic(p: i64) -> Self {
        UnimodularMatrix { alpha: 1, beta: p, gamma: 0, delta: 1 }
    }

    pub fn trace(&self) -> i64 {
        self.alpha + self.delta
    }

    pub fn det(&self) -> i64 {
        self.alpha * self.delta - self.beta * self.gamma
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn inverse(&self) -> Self {
        UnimodularMatrix {
            alpha: self.delta,
            beta: -self.beta,
            gamma: -self.gamma,
            delta: self.alpha,
        }
    }

    /// `b * self * b^-1`.
    pub fn conjugate_by(&self, b: &UnimodularMatrix) -> Self {
        *b * *self * b.inverse()
    }

    fn reject_identity(&self) -> Result<()> {
        if self.is_identity() {
            Err(Error::IdentityMonodromy)
        } else {
            Ok(())
        }
    }
}

impl Mul for UnimodularMatrix {
    type Output = UnimodularMatrix;

    fn mul(self, o: UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix {
            alpha: self.alpha * o.alpha + self.beta * o.gamma,
            beta: self.alpha * o.beta + self.beta * o.delta,
            gamma: self.gamma * o.alpha + self.delta * o.gamma,
            delta: self.gamma * o.beta + self.delta * o.delta,
        }
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]", self.alpha, self.beta, self.gamma, self.delta)
    }
}

/// Order of the first basis vector in `Z^2 / (A - I) Z^2`.
///
/// When `det(A - I) != 0` the order divides `|det(A - I)| = |2 - trace|`, so a
/// bounded search suffices. When the trace is 2 the image of `A - I` has rank
/// one and contains multiples of `(1, 0)` only if its second row vanishes.
pub fn knot_order(a: &UnimodularMatrix) -> Result<KnotOrder> {
    a.reject_identity()?;
    let (m00, m01, m10, m11) = (a.alpha - 1, a.beta, a.gamma, a.delta - 1);
    let det = m00 * m11 - m01 * m10;
    if det == 0 {
        if m10 == 0 && m11 == 0 {
            return Ok(KnotOrder::Finite(m00.gcd(&m01).unsigned_abs()));
        }
        return Ok(KnotOrder::Infinite);
    }
    // (A - I) x = (n, 0)  <=>  x = adj(A - I) (n, 0) / det
    let order = (1..=det.abs())
        .find(|n| (n * m11) % det == 0 && (n * m10) % det == 0)
        .expect("order divides |det(A - I)|");
    Ok(KnotOrder::Finite(order as u64))
}

/// The `p >= 1` with `A` conjugate to `[[1, p], [0, 1]]`: the gcd of the
/// entries of `A - I`, which unimodular conjugation leaves unchanged.
pub fn parabolic_p(a: &UnimodularMatrix) -> Result<u64> {
    a.reject_identity()?;
    if a.trace() != 2 {
        return Err(Error::NotParabolic(a.trace()));
    }
    let g = [a.alpha - 1, a.beta, a.gamma, a.delta - 1]
        .into_iter()
        .fold(0i64, |acc, x| acc.gcd(&x));
    Ok(g.unsigned_abs())
}

/// Exact rational genus of the fiber curve whose class is the first basis vector.
///
/// Trace 2 gives `1/2p`; otherwise `|gamma| / 2|trace - 2|`, which is zero in
/// the `[[-1, b], [0, -1]]` family.
pub fn fiber_curve_genus(a: &UnimodularMatrix) -> Result<GenusValue> {
    a.reject_identity()?;
    let t = a.trace();
    if t == 2 {
        let p = parabolic_p(a)?;
        return Ok(GenusValue::exact(rat(1, 2 * p as i128)));
    }
    Ok(GenusValue::exact(rat(
        a.gamma.unsigned_abs() as i128,
        2 * (t - 2).unsigned_abs() as i128,
    )))
}

/// Solution data for a horizontal surface in the pair-of-pants product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HorizontalData {
    pub ell0: i64,
    pub ell1: i64,
    pub m: u64,
    pub ell: i64,
}

impl HorizontalData {
    /// `m / 2|ell|`, the genus bound from the surface; `None` when `ell = 0`.
    pub fn seifert_bound(&self) -> Option<Rational> {
        (self.ell != 0).then(|| rat(self.m as i128, 2 * self.ell.unsigned_abs() as i128))
    }
}

/// Minimal solution of `gamma*ell0 + (delta - 1)*m = 0`, `m >= 1`.
pub fn horizontal_solution(a: &UnimodularMatrix) -> Result<HorizontalData> {
    a.reject_identity()?;
    let t = a.trace();
    if a.gamma == 0 && t == -2 {
        return Err(Error::VerticalCase);
    }
    let (ell0, m) = if a.gamma == 0 {
        // gamma = 0 forces delta = 1 here, so ell0 is free; take 0.
        (0i64, 1i64)
    } else {
        let g = a.gamma.gcd(&(a.delta - 1));
        let m = a.gamma.abs() / g;
        (-(a.delta - 1) * m / a.gamma, m)
    };
    debug_assert_eq!(a.gamma * ell0 + (a.delta - 1) * m, 0);
    let ell1 = a.alpha * ell0 + a.beta * m;
    let data = HorizontalData { ell0, ell1, m: m as u64, ell: ell1 - ell0 };
    if t != 2 && a.gamma != 0 {
        // m / ell = gamma / (trace - 2)
        if (m as i128) * (t as i128 - 2) != (a.gamma as i128) * (data.ell as i128) {
            return Err(Error::InternalBoundViolation(format!(
                "m/ell = {m}/{} differs from gamma/(trace-2) = {}/{}",
                data.ell,
                a.gamma,
                t - 2
            )));
        }
    }
    Ok(data)
}

/// For trace -2 or `|trace| <= 1` the fiber-curve genus is 0 or at least 1/8.
pub fn small_trace_gap(a: &UnimodularMatrix) -> Result<bool> {
    let t = a.trace();
    if !(t == -2 || t.abs() <= 1) {
        return Err(Error::PreconditionViolated(format!("trace {t} is outside {{-2,-1,0,1}}")));
    }
    let v = fiber_curve_genus(a)?.lo();
    Ok(v.is_zero() || v >= rat(1, 8))
}

/// Case H family: `[[1, n], [0, 1]] * A`.
pub fn case_h_matrix(base: &UnimodularMatrix, n: i64) -> UnimodularMatrix {
    UnimodularMatrix::parabolic(n) * *base
}

/// `|gamma / 2(alpha + delta + n*gamma - 2)|`, the closed form along the Case H family.
pub fn case_h_formula(base: &UnimodularMatrix, n: i64) -> Rational {
    let denom = base.alpha + base.delta + n * base.gamma - 2;
    assert!(denom != 0, "trace 2 member of the Case H family");
    let r = rat(base.gamma as i128, 2 * denom as i128);
    if r < int(0) {
        -r
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> UnimodularMatrix {
        UnimodularMatrix::new(a, b, c, d).unwrap()
    }

    /// Smallest n with n*(1,0) in the column span of A - I, by searching
    /// integer preimages in a box.
    fn brute_order(a: &UnimodularMatrix, max_n: i64, boxr: i64) -> Option<i64> {
        let (m00, m01, m10, m11) = (a.alpha - 1, a.beta, a.gamma, a.delta - 1);
        (1..=max_n).find(|&n| {
            (-boxr..=boxr).any(|x| (-boxr..=boxr).any(|y| m00 * x + m01 * y == n && m10 * x + m11 * y == 0))
        })
    }

    #[test]
    fn knot_order_examples() {
        assert_eq!(knot_order(&UnimodularMatrix::parabolic(7)).unwrap(), KnotOrder::Finite(7));
        assert_eq!(knot_order(&m(2, 1, 1, 1)).unwrap(), KnotOrder::Finite(1));
        assert_eq!(knot_order(&m(-1, 0, 0, -1)).unwrap(), KnotOrder::Finite(2));
        assert_eq!(knot_order(&m(1, 0, 1, 1)).unwrap(), KnotOrder::Infinite);
        assert_eq!(knot_order(&UnimodularMatrix::IDENTITY), Err(Error::IdentityMonodromy));
    }

    #[test]
    fn knot_order_matches_brute_force() {
        let mut checked = 0;
        for a in -4..=4 {
            for b in -4..=4 {
                for c in -4..=4 {
                    for d in -4..=4 {
                        let Ok(mat) = UnimodularMatrix::new(a, b, c, d) else { continue };
                        if mat.is_identity() || mat.trace() == 2 {
                            continue;
                        }
                        let expect = brute_order(&mat, 12, 30).unwrap();
                        assert_eq!(knot_order(&mat).unwrap(), KnotOrder::Finite(expect as u64), "{mat}");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn parabolic_p_examples() {
        assert_eq!(parabolic_p(&UnimodularMatrix::parabolic(5)).unwrap(), 5);
        assert_eq!(parabolic_p(&m(1, 0, 1, 1)).unwrap(), 1);
        assert_eq!(parabolic_p(&m(2, 1, 1, 1)), Err(Error::NotParabolic(3)));
    }

    #[test]
    fn parabolic_p_survives_conjugation_sweep() {
        let a = UnimodularMatrix::parabolic(5);
        let mut seen = 0;
        for x in -3..=3 {
            for y in -3..=3 {
                for z in -3..=3 {
                    for w in -3..=3 {
                        let Ok(b) = UnimodularMatrix::new(x, y, z, w) else { continue };
                        let c = a.conjugate_by(&b);
                        assert_eq!(c.trace(), 2);
                        assert_eq!(parabolic_p(&c).unwrap(), 5, "conjugate {c}");
                        seen += 1;
                    }
                }
            }
        }
        assert!(seen > 50);
    }

    #[test]
    fn fiber_genus_examples() {
        assert_eq!(fiber_curve_genus(&UnimodularMatrix::parabolic(3)).unwrap(), GenusValue::exact(rat(1, 6)));
        assert_eq!(fiber_curve_genus(&m(-1, 7, 0, -1)).unwrap(), GenusValue::zero());
        assert_eq!(fiber_curve_genus(&m(2, 1, 1, 1)).unwrap(), GenusValue::exact(rat(1, 2)));
        let base = m(2, 1, 1, 1);
        for n in 0..20 {
            let a = case_h_matrix(&base, n);
            assert_eq!(fiber_curve_genus(&a).unwrap().lo(), case_h_formula(&base, n));
        }
    }

    #[test]
    fn horizontal_examples() {
        let h = horizontal_solution(&UnimodularMatrix::parabolic(4)).unwrap();
        assert_eq!((h.ell0, h.m, h.ell), (0, 1, 4));
        let h = horizontal_solution(&m(2, 1, 1, 1)).unwrap();
        assert_eq!((h.ell0, h.m, h.ell1, h.ell), (0, 1, 1, 1));
        let h = horizontal_solution(&m(3, 1, 2, 1)).unwrap();
        assert_eq!((h.ell0, h.m, h.ell), (0, 1, 1));
        assert_eq!(h.seifert_bound(), Some(rat(1, 2)));
        assert_eq!(horizontal_solution(&m(-1, 3, 0, -1)), Err(Error::VerticalCase));
    }

    #[test]
    fn small_trace_gap_examples() {
        assert!(small_trace_gap(&m(0, -1, 1, 0)).unwrap());
        assert_eq!(fiber_curve_genus(&m(0, -1, 1, 0)).unwrap().lo(), rat(1, 4));
        assert!(small_trace_gap(&m(-1, 1, 0, -1)).unwrap());
        assert!(matches!(small_trace_gap(&m(2, 1, 1, 1)), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn genus_depends_only_on_gamma_and_trace() {
        // alpha + delta and gamma fixed, beta forced by det = 1.
        for gamma in [1i64, 2, 3, 5] {
            for t in [-5i64, -3, -1, 0, 1, 3, 4, 7] {
                let mut values = vec![];
                for alpha in -10..=10 {
                    let delta = t - alpha;
                    let num = alpha * delta - 1;
                    if num % gamma != 0 {
                        continue;
                    }
                    let a = m(alpha, num / gamma, gamma, delta);
                    values.push(fiber_curve_genus(&a).unwrap());
                }
                assert!(values.windows(2).all(|w| w[0] == w[1]));
            }
        }
    }
}
