//! Margulis tube constants: the tube function `h`, its maximum, the minimal
//! core length, the wrapping-area lower bound and the cusp chain.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::dyadic::Dyadic;
use super::interval::{pi, to_big, CertInterval, MIN_PRECISION};
use super::optimize::{certify_sign, golden_section_max, Sign};
use crate::error::{Error, Result};
use crate::value::{GenusValue, Rational};

/// Coefficient in the tube function.
pub const H_COEFF: &str = "3.3957";
pub const TUBE_RADIUS: &str = "0.531";
pub const CORE_LENGTH: &str = "0.162286";
pub const CUSP_AREA: &str = "3.35";
pub const NORMALIZED_MERIDIAN: &str = "7.515";

fn clamp(prec: u32) -> u32 {
    prec.max(MIN_PRECISION)
}

/// Length, radius and cone angle of a Margulis tube.
#[derive(Debug, Clone)]
pub struct TubeParams {
    pub core_length: CertInterval,
    pub radius: CertInterval,
    pub cone_angle: CertInterval,
}

impl TubeParams {
    pub fn new(core_length: CertInterval, radius: CertInterval, cone_angle: CertInterval) -> Result<Self> {
        let prec = core_length.precision();
        let two_pi = &pi(prec) * &CertInterval::from_i64(2, prec);
        if !core_length.certainly_positive() || !radius.certainly_positive() {
            return Err(Error::PreconditionViolated("tube length and radius must be positive".into()));
        }
        if !cone_angle.certainly_positive() || cone_angle.lo() > two_pi.hi() {
            return Err(Error::PreconditionViolated("cone angle must lie in (0, 2pi]".into()));
        }
        Ok(TubeParams { core_length, radius, cone_angle })
    }

    pub fn wrapping_lower(&self) -> CertInterval {
        wrapping_genus_lower(&self.core_length, &self.radius)
    }
}

/// `3.3957 tanh(R) / cosh(2R)`.
pub fn h_of_r(r: &CertInterval) -> CertInterval {
    let p = r.precision();
    let c = CertInterval::from_decimal(H_COEFF, p);
    let two_r = r * &CertInterval::from_i64(2, p);
    &(&c * &r.tanh()) / &two_r.cosh()
}

/// Numerator of `h'` after clearing positive factors: `cosh 2R - sinh^2 2R`.
pub fn h_derivative_numerator(r: &CertInterval) -> CertInterval {
    let two_r = r * &CertInterval::from_i64(2, r.precision());
    &two_r.cosh() - &two_r.sinh().square()
}

/// Certified maximum of `h` on `(0, 3]`.
#[derive(Debug, Clone)]
pub struct HMaximum {
    pub r_star: CertInterval,
    pub h_star: CertInterval,
    /// Pieces used to certify `h' > 0` left of the bracket and `h' < 0` right of it.
    pub rising_pieces: usize,
    pub falling_pieces: usize,
}

/// Locates and certifies the unique interior maximum of `h` on `(0, 3]`.
///
/// Golden-section search narrows a bracket; the sign of the derivative
/// numerator is then certified positive on `[0, a]` and negative on `[b, 3]`,
/// so the maximum lies in `[a, b]` and `h` is unimodal on the whole range.
pub fn maximize_h(prec: u32) -> Result<HMaximum> {
    let p = clamp(prec);
    let tol = Dyadic::from_ratio_pow2(1, 24);
    let (mut a, mut b) = golden_section_max(&h_of_r, Dyadic::zero(), Dyadic::from_i64(3), &tol, p);
    let n_at = |x: &Dyadic| h_derivative_numerator(&CertInterval::point(x.clone(), p));
    let mut widen = tol.clone();
    for _ in 0..40 {
        let ok_a = n_at(&a).certainly_positive();
        let ok_b = n_at(&b).certainly_negative();
        if ok_a && ok_b {
            break;
        }
        if !ok_a {
            a = a.sub_exact(&widen).max(Dyadic::zero());
        }
        if !ok_b {
            b = b.add_exact(&widen).min(Dyadic::from_i64(3));
        }
        widen = widen.mul_pow2(1);
    }
    let rising = certify_sign(&h_derivative_numerator, &Dyadic::zero(), &a, Sign::Positive, p, 60);
    let falling = certify_sign(&h_derivative_numerator, &b, &Dyadic::from_i64(3), Sign::Negative, p, 60);
    let (Some(rising_pieces), Some(falling_pieces)) = (rising, falling) else {
        return Err(Error::InternalBoundViolation("could not certify unimodality of h".into()));
    };
    let bracket = CertInterval::new(a.clone(), b.clone(), p);
    let lower = h_of_r(&CertInterval::point(a, p)).lo().clone().max(h_of_r(&CertInterval::point(b, p)).lo().clone());
    let upper = h_of_r(&bracket).hi().clone();
    Ok(HMaximum { r_star: bracket, h_star: CertInterval::new(lower, upper, p), rising_pieces, falling_pieces })
}

/// `h_max / 2pi`, the shortest core length a tube of this shape can have.
pub fn min_core_length(prec: u32) -> Result<CertInterval> {
    let p = clamp(prec);
    let m = maximize_h(p)?;
    Ok(&m.h_star / &(&pi(p) * &CertInterval::from_i64(2, p)))
}

/// `l sinh(R) R / (R + 1)`, a lower bound for the wrapped area per sheet.
pub fn wrapping_product(l: &CertInterval, r: &CertInterval) -> CertInterval {
    let one = CertInterval::from_i64(1, r.precision());
    &(&(l * &r.sinh()) * r) / &(r + &one)
}

/// `l sinh(R) R / ((R + 1) 4pi)`.
pub fn wrapping_genus_lower(l: &CertInterval, r: &CertInterval) -> CertInterval {
    let p = l.precision().max(r.precision());
    let four_pi = &pi(p) * &CertInterval::from_i64(4, p);
    &wrapping_product(l, r) / &four_pi
}

/// Cusp area and the lengths of the meridian and the filling slope.
#[derive(Debug, Clone)]
pub struct CuspData {
    pub area: CertInterval,
    pub len_meridian: CertInterval,
    pub len_slope: CertInterval,
    pub delta: u32,
}

impl CuspData {
    pub fn new(area: CertInterval, len_meridian: CertInterval, len_slope: CertInterval, delta: u32) -> Result<Self> {
        if !area.certainly_positive() {
            return Err(Error::PreconditionViolated("cusp area must be positive".into()));
        }
        if !len_meridian.certainly_positive() || !len_slope.certainly_positive() {
            return Err(Error::PreconditionViolated("curve lengths must be positive".into()));
        }
        if delta == 0 {
            return Err(Error::PreconditionViolated("intersection number must be at least 1".into()));
        }
        Ok(CuspData { area, len_meridian, len_slope, delta })
    }

    /// Cusp data from the area and normalized meridian length. The slope is
    /// given the least length allowed by `A <= l(slope) l(mu) / delta`.
    pub fn from_normalized(area: CertInterval, normalized_meridian: CertInterval, delta: u32) -> Result<Self> {
        let p = area.precision();
        let root = area.sqrt();
        let len_meridian = &normalized_meridian * &root;
        let len_slope = &(&root * &CertInterval::from_i64(delta as i64, p)) / &normalized_meridian;
        CuspData::new(area, len_meridian, len_slope, delta)
    }

    /// `l(mu) / sqrt(A)`.
    pub fn normalized_meridian(&self) -> CertInterval {
        &self.len_meridian / &self.area.sqrt()
    }

    /// `l(slope) / (12 delta)`.
    pub fn slope_bound(&self) -> CertInterval {
        &self.len_slope / &CertInterval::from_i64(12 * self.delta as i64, self.len_slope.precision())
    }
}

/// `sqrt(A) / (12 l_N(mu))`, a lower bound for `|chi(S)| / 2p`.
pub fn cusp_chain_bound(d: &CuspData) -> CertInterval {
    let p = d.area.precision();
    &d.area.sqrt() / &(&d.normalized_meridian() * &CertInterval::from_i64(12, p))
}

/// `[scl_lower, inf)`.
pub fn genus_lower_from_scl(scl_lower: Rational) -> Result<GenusValue> {
    if scl_lower < Rational::from_integer(0) {
        return Err(Error::PreconditionViolated(format!("scl bound {scl_lower} is negative")));
    }
    Ok(GenusValue::at_least(scl_lower))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Certified,
    Inconclusive,
}

/// A checked inequality together with the enclosure it was decided on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub interval_lo: String,
    pub interval_hi: String,
    pub rounding_mode: String,
    pub verdict: Verdict,
}

const DIGITS: u32 = 12;

impl Certificate {
    fn build(claim: String, iv: &CertInterval, ok: bool) -> Certificate {
        let (lo, hi) = iv.to_decimal(DIGITS);
        Certificate {
            claim,
            interval_lo: lo,
            interval_hi: hi,
            rounding_mode: format!("outward, {} bits", iv.precision()),
            verdict: if ok { Verdict::Certified } else { Verdict::Inconclusive },
        }
    }

    /// Certifies `value > t` when every point of the enclosure exceeds `t`.
    pub fn greater_than(name: &str, iv: &CertInterval, t: &BigRational, t_text: &str) -> Certificate {
        Certificate::build(format!("{name} > {t_text}"), iv, iv.certainly_greater(t))
    }

    pub fn less_than(name: &str, iv: &CertInterval, t: &BigRational, t_text: &str) -> Certificate {
        Certificate::build(format!("{name} < {t_text}"), iv, &iv.hi_rational() < t)
    }

    /// Certifies that the enclosure, widened by `tol`, contains `x`.
    pub fn approximately(name: &str, iv: &CertInterval, x: &str, tol: &str) -> Certificate {
        let xv = super::interval::parse_decimal(x).expect("decimal literal");
        let tv = super::interval::parse_decimal(tol).expect("decimal literal");
        Certificate::build(format!("{name} = {x} +- {tol}"), iv, iv.contains_within(&xv, &tv))
    }

    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }
}

fn ratio(n: i64, d: i64) -> BigRational {
    to_big(&Rational::new(n as i128, d as i128))
}

/// Every tube and cusp constant, checked at the given precision.
pub fn constants_suite(prec: u32) -> Result<Vec<Certificate>> {
    let p = clamp(prec);
    let dec = |s: &str| CertInterval::from_decimal(s, p);
    let m = maximize_h(p)?;
    let core = &m.h_star / &(&pi(p) * &CertInterval::from_i64(2, p));
    let h_531 = h_of_r(&dec(TUBE_RADIUS));
    let published = wrapping_genus_lower(&dec(CORE_LENGTH), &dec(TUBE_RADIUS));
    let chained = wrapping_genus_lower(&core, &dec(TUBE_RADIUS));
    let cusp = CuspData::from_normalized(dec(CUSP_AREA), dec(NORMALIZED_MERIDIAN), 1)?;
    let chain = cusp_chain_bound(&cusp);
    Ok(vec![
        Certificate::approximately("h(0.531)", &h_531, "1.019675", "1e-5"),
        Certificate::less_than("h(2)", &h_of_r(&CertInterval::from_i64(2, p)), &ratio(13, 100), "0.13"),
        Certificate::approximately("argmax h", &m.r_star, "0.531", "2e-3"),
        Certificate::approximately("max h", &m.h_star, "1.019675", "1e-4"),
        Certificate::approximately("max h / 2pi", &core, "0.162286", "1e-5"),
        Certificate::greater_than("max h / 2pi", &core, &ratio(1622, 10000), "0.1622"),
        Certificate::approximately(
            "l sinh(R) R/(R+1) at (0.162286, 0.531)",
            &wrapping_product(&dec(CORE_LENGTH), &dec(TUBE_RADIUS)),
            "0.03131",
            "1e-5",
        ),
        Certificate::approximately("wrapping bound at (0.162286, 0.531)", &published, "2.491e-3", "1e-6"),
        Certificate::greater_than("wrapping bound at (0.162286, 0.531)", &published, &ratio(1, 402), "1/402"),
        Certificate::greater_than("wrapping bound at (max h / 2pi, 0.531)", &chained, &ratio(1, 402), "1/402"),
        Certificate::approximately("cusp bound at (3.35, 7.515)", &chain, "0.0203", "5e-5"),
        Certificate::greater_than("cusp bound at (3.35, 7.515)", &chain, &ratio(1, 50), "1/50"),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::interval::parse_decimal;
    use crate::value::rat;

    const P: u32 = 128;

    fn dec(s: &str) -> CertInterval {
        CertInterval::from_decimal(s, P)
    }

    fn big(s: &str) -> BigRational {
        parse_decimal(s).unwrap()
    }

    #[test]
    fn h_at_published_radius() {
        let h = h_of_r(&dec("0.531"));
        assert!(h.width() < big("1e-30"));
        // Independent 40-digit evaluation.
        assert!(h.contains_within(&big("1.0196709729202528453595"), &big("1e-14")));
        assert!(h.contains_within(&big("1.019675"), &big("1e-5")));
    }

    #[test]
    fn h_decays() {
        assert!(h_of_r(&CertInterval::from_i64(2, P)).hi_rational() < big("0.13"));
        let tiny = h_of_r(&CertInterval::point(Dyadic::from_ratio_pow2(1, 40), P));
        assert!(tiny.hi_rational() < big("1e-11"));
    }

    #[test]
    fn maximum_is_bracketed() {
        let m = maximize_h(P).unwrap();
        assert!(m.r_star.width() < big("1e-4"));
        // Golden-ratio point of cosh 2R.
        assert!(m.r_star.contains(&big("0.5306375309525178")));
        assert!(m.h_star.contains_within(&big("1.0196713430468405231"), &big("1e-9")));
        assert!(m.h_star.width() < big("1e-5"));
        for end in [m.r_star.lo(), m.r_star.hi()] {
            assert!(h_of_r(&CertInterval::point(end.clone(), P)).hi() <= m.h_star.hi());
        }
    }

    #[test]
    fn maximize_is_reproducible() {
        let a = maximize_h(96).unwrap();
        let b = maximize_h(96).unwrap();
        assert_eq!(a.r_star, b.r_star);
        assert_eq!(a.h_star, b.h_star);
    }

    #[test]
    fn core_length() {
        let l = min_core_length(P).unwrap();
        assert!(l.lo_rational() > big("0.1622"));
        assert!(l.contains_within(&big("0.162286"), &big("1e-5")));
        assert!(l.width() < big("1e-5"));
    }

    #[test]
    fn wrapping_bound() {
        let w = wrapping_genus_lower(&dec("0.162286"), &dec("0.531"));
        assert!(w.certainly_greater(&ratio(1, 402)));
        assert!(w.contains_within(&big("0.00249175653472607386"), &big("1e-9")));
        assert!(wrapping_genus_lower(&CertInterval::from_i64(0, P), &dec("0.531")).lo().is_zero());
    }

    #[test]
    fn cusp_chain() {
        let d = CuspData::from_normalized(dec("3.35"), dec("7.515"), 1).unwrap();
        let c = cusp_chain_bound(&d);
        assert!(c.certainly_greater(&ratio(1, 50)));
        assert!(c.contains_within(&big("0.0203"), &big("5e-5")));
        let d4 = CuspData::from_normalized(dec("13.4"), dec("7.515"), 1).unwrap();
        let c4 = cusp_chain_bound(&d4);
        let doubled = &c * &CertInterval::from_i64(2, P);
        assert!(c4.contains_within(&doubled.lo_rational(), &big("1e-30")));
        assert!(d.slope_bound().contains_within(&c.lo_rational(), &big("1e-30")));
    }

    #[test]
    fn invalid_inputs() {
        assert!(CuspData::from_normalized(dec("3.35"), dec("7.515"), 0).is_err());
        assert!(CuspData::new(dec("-1"), dec("1"), dec("1"), 1).is_err());
        assert!(TubeParams::new(dec("0.16"), dec("0.531"), dec("7")).is_err());
        let t = TubeParams::new(dec("0.162286"), dec("0.531"), dec("6.28")).unwrap();
        assert!(t.wrapping_lower().certainly_greater(&ratio(1, 402)));
    }

    #[test]
    fn scl_pass_through() {
        assert_eq!(genus_lower_from_scl(rat(1, 2)).unwrap(), GenusValue::at_least(rat(1, 2)));
        assert_eq!(genus_lower_from_scl(rat(1, 12)).unwrap(), GenusValue::at_least(rat(1, 12)));
        assert!(genus_lower_from_scl(rat(-1, 2)).is_err());
    }

    #[test]
    fn suite_is_all_certified() {
        let certs = constants_suite(P).unwrap();
        for c in &certs {
            assert!(c.is_certified(), "{c:?}");
        }
    }
}
