//! Golden-section search and sign certification over subdivided intervals.

use super::dyadic::{Dyadic, Round};
use super::interval::CertInterval;

/// Sign an interval function is certified to have on a whole range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// Bisects `[lo, hi]` until `f` has the requested sign on every piece.
///
/// Returns the number of pieces used, or `None` when a piece narrower than
/// `2^-max_depth` still straddles zero.
pub fn certify_sign<F>(f: &F, lo: &Dyadic, hi: &Dyadic, sign: Sign, prec: u32, max_depth: u32) -> Option<usize>
where
    F: Fn(&CertInterval) -> CertInterval,
{
    let mut stack = vec![(lo.clone(), hi.clone(), 0u32)];
    let mut pieces = 0usize;
    while let Some((a, b, depth)) = stack.pop() {
        let v = f(&CertInterval::new(a.clone(), b.clone(), prec));
        let ok = match sign {
            Sign::Positive => v.certainly_positive(),
            Sign::Negative => v.certainly_negative(),
        };
        if ok {
            pieces += 1;
            continue;
        }
        if depth >= max_depth {
            return None;
        }
        let mid = a.add_exact(&b).mul_pow2(-1);
        stack.push((mid.clone(), b, depth + 1));
        stack.push((a, mid, depth + 1));
    }
    Some(pieces)
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`.
///
/// Comparisons use point enclosures; the search stops once the bracket is
/// narrower than `tol` or two probes can no longer be told apart.
pub fn golden_section_max<F>(f: &F, lo: Dyadic, hi: Dyadic, tol: &Dyadic, prec: u32) -> (Dyadic, Dyadic)
where
    F: Fn(&CertInterval) -> CertInterval,
{
    // 0.6180339887... to 64 bits; any ratio in (1/2, 1) keeps the search correct.
    let g = Dyadic::new(num_bigint::BigInt::from(0x9E37_79B9_7F4A_7C15u64), -64);
    let (mut a, mut b) = (lo, hi);
    while b.sub_exact(&a) > *tol {
        let step = b.sub_exact(&a).mul(&g, prec, Round::Down);
        let x1 = b.sub_exact(&step);
        let x2 = a.add_exact(&step);
        let f1 = f(&CertInterval::point(x1.clone(), prec));
        let f2 = f(&CertInterval::point(x2.clone(), prec));
        if f1.hi() < f2.lo() {
            a = x1;
        } else if f2.hi() < f1.lo() {
            b = x2;
        } else {
            break;
        }
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parabola(x: &CertInterval) -> CertInterval {
        // 1 - (x - 1/3)^2
        let c = CertInterval::from_ratio(1, 3, x.precision());
        &CertInterval::from_i64(1, x.precision()) - &(x - &c).square()
    }

    #[test]
    fn finds_parabola_peak() {
        let tol = Dyadic::from_ratio_pow2(1, 30);
        let (a, b) = golden_section_max(&parabola, Dyadic::zero(), Dyadic::from_i64(2), &tol, 96);
        let third = num_rational::BigRational::new(1.into(), 3.into());
        assert!(a.to_rational() <= third && third <= b.to_rational());
        assert!(b.sub_exact(&a) <= tol);
    }

    #[test]
    fn certifies_sign_away_from_root() {
        let f = |x: &CertInterval| x - &CertInterval::from_ratio(1, 3, x.precision());
        let third_hi = Dyadic::from_ratio_pow2(11, 5);
        assert!(certify_sign(&f, &third_hi, &Dyadic::from_i64(3), Sign::Positive, 64, 30).is_some());
        assert!(certify_sign(&f, &Dyadic::zero(), &Dyadic::from_i64(1), Sign::Positive, 64, 20).is_none());
    }
}
