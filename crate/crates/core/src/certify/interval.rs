//! Outward-rounded intervals and enclosures of the elementary functions
//! used by the tube estimates.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dyadic::{Dyadic, Round};
use crate::value::Rational;

pub const DEFAULT_PRECISION: u32 = 128;
pub const MIN_PRECISION: u32 = 64;

/// A closed interval `[lo, hi]` of dyadics whose arithmetic encloses the
/// exact real result. `prec` is the number of significant bits kept at
/// each rounding step.
#[derive(Clone, PartialEq, Eq)]
pub struct CertInterval {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl CertInterval {
    pub fn new(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo:?} > {hi:?}");
        CertInterval { lo, hi, prec }
    }

    pub fn point(x: Dyadic, prec: u32) -> Self {
        CertInterval { lo: x.clone(), hi: x, prec }
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::point(Dyadic::from_i64(n), prec)
    }

    pub fn from_ratio(num: i64, den: i64, prec: u32) -> Self {
        let (n, d) = (BigInt::from(num), BigInt::from(den));
        CertInterval {
            lo: Dyadic::from_ratio(&n, &d, prec, Round::Down),
            hi: Dyadic::from_ratio(&n, &d, prec, Round::Up),
            prec,
        }
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let r = to_big(r);
        CertInterval {
            lo: Dyadic::from_rational(&r, prec, Round::Down),
            hi: Dyadic::from_rational(&r, prec, Round::Up),
            prec,
        }
    }

    /// Enclosure of a decimal literal such as `"3.3957"` or `"-0.5"`.
    pub fn from_decimal(s: &str, prec: u32) -> Self {
        let r = parse_decimal(s).unwrap_or_else(|| panic!("bad decimal literal {s:?}"));
        CertInterval {
            lo: Dyadic::from_rational(&r, prec, Round::Down),
            hi: Dyadic::from_rational(&r, prec, Round::Up),
            prec,
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(mut self, prec: u32) -> Self {
        self.prec = prec;
        self
    }

    pub fn width(&self) -> BigRational {
        self.hi.to_rational() - self.lo.to_rational()
    }

    pub fn width_f64(&self) -> f64 {
        self.hi.sub_exact(&self.lo).to_f64()
    }

    pub fn mid_f64(&self) -> f64 {
        self.lo.add_exact(&self.hi).mul_pow2(-1).to_f64()
    }

    pub fn lo_rational(&self) -> BigRational {
        self.lo.to_rational()
    }

    pub fn hi_rational(&self) -> BigRational {
        self.hi.to_rational()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo.to_rational() <= x && x <= &self.hi.to_rational()
    }

    /// Whether `x` lies within `tol` of the interval.
    pub fn contains_within(&self, x: &BigRational, tol: &BigRational) -> bool {
        &(self.lo.to_rational() - tol) <= x && x <= &(self.hi.to_rational() + tol)
    }

    pub fn is_subset_of(&self, lo: &BigRational, hi: &BigRational) -> bool {
        lo <= &self.lo.to_rational() && &self.hi.to_rational() <= hi
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn certainly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Every point strictly exceeds `t`.
    pub fn certainly_greater(&self, t: &BigRational) -> bool {
        &self.lo.to_rational() > t
    }

    pub fn hull(&self, o: &CertInterval) -> CertInterval {
        CertInterval {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
            prec: self.prec.max(o.prec),
        }
    }

    pub fn square(&self) -> CertInterval {
        let p = self.prec;
        let (a, b) = (self.lo.abs(), self.hi.abs());
        let (small, big) = if a <= b { (a, b) } else { (b, a) };
        let lo = if self.contains_zero() { Dyadic::zero() } else { small.mul(&small, p, Round::Down) };
        CertInterval { lo, hi: big.mul(&big, p, Round::Up), prec: p }
    }

    pub fn recip(&self) -> CertInterval {
        assert!(!self.contains_zero(), "reciprocal of an interval containing zero");
        let one = Dyadic::one();
        CertInterval {
            lo: one.div(&self.hi, self.prec, Round::Down),
            hi: one.div(&self.lo, self.prec, Round::Up),
            prec: self.prec,
        }
    }

    pub fn sqrt(&self) -> CertInterval {
        assert!(!self.lo.is_negative(), "sqrt of an interval with negative points");
        CertInterval {
            lo: self.lo.sqrt(self.prec, Round::Down),
            hi: self.hi.sqrt(self.prec, Round::Up),
            prec: self.prec,
        }
    }

    pub fn exp(&self) -> CertInterval {
        CertInterval {
            lo: exp_point(&self.lo, self.prec).lo,
            hi: exp_point(&self.hi, self.prec).hi,
            prec: self.prec,
        }
    }

    pub fn sinh(&self) -> CertInterval {
        CertInterval {
            lo: sinh_point(&self.lo, self.prec).lo,
            hi: sinh_point(&self.hi, self.prec).hi,
            prec: self.prec,
        }
    }

    pub fn cosh(&self) -> CertInterval {
        let p = self.prec;
        let at_lo = cosh_point(&self.lo, p);
        let at_hi = cosh_point(&self.hi, p);
        if self.contains_zero() {
            CertInterval { lo: Dyadic::one(), hi: at_lo.hi.max(at_hi.hi), prec: p }
        } else if self.lo.is_positive() {
            CertInterval { lo: at_lo.lo, hi: at_hi.hi, prec: p }
        } else {
            CertInterval { lo: at_hi.lo, hi: at_lo.hi, prec: p }
        }
    }

    pub fn tanh(&self) -> CertInterval {
        CertInterval {
            lo: tanh_point(&self.lo, self.prec).lo,
            hi: tanh_point(&self.hi, self.prec).hi,
            prec: self.prec,
        }
    }

    /// Decimal rendering `[lo, hi]` rounded outward.
    pub fn to_decimal(&self, digits: u32) -> (String, String) {
        (self.lo.to_decimal(digits, Round::Down), self.hi.to_decimal(digits, Round::Up))
    }
}

pub fn to_big(r: &Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// Exact value of a decimal literal.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (mantissa, exp10) = match body.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (body, 0),
    };
    let (int_part, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac.is_empty() {
        return None;
    }
    let digits = format!("{int_part}{frac}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = digits.parse().ok()?;
    let scale = exp10 - frac.len() as i32;
    let ten = BigInt::from(10);
    let r = if scale >= 0 {
        BigRational::from_integer(n * ten.pow(scale as u32))
    } else {
        BigRational::new(n, ten.pow((-scale) as u32))
    };
    Some(if neg { -r } else { r })
}

impl Add for &CertInterval {
    type Output = CertInterval;
    fn add(self, o: &CertInterval) -> CertInterval {
        let p = self.prec.max(o.prec);
        CertInterval { lo: self.lo.add(&o.lo, p, Round::Down), hi: self.hi.add(&o.hi, p, Round::Up), prec: p }
    }
}

impl Sub for &CertInterval {
    type Output = CertInterval;
    fn sub(self, o: &CertInterval) -> CertInterval {
        let p = self.prec.max(o.prec);
        CertInterval { lo: self.lo.sub(&o.hi, p, Round::Down), hi: self.hi.sub(&o.lo, p, Round::Up), prec: p }
    }
}

impl Neg for &CertInterval {
    type Output = CertInterval;
    fn neg(self) -> CertInterval {
        CertInterval { lo: self.hi.neg(), hi: self.lo.neg(), prec: self.prec }
    }
}

impl Mul for &CertInterval {
    type Output = CertInterval;
    fn mul(self, o: &CertInterval) -> CertInterval {
        let p = self.prec.max(o.prec);
        let products = [
            self.lo.mul_exact(&o.lo),
            self.lo.mul_exact(&o.hi),
            self.hi.mul_exact(&o.lo),
            self.hi.mul_exact(&o.hi),
        ];
        let lo = products.iter().min().unwrap().round(p, Round::Down);
        let hi = products.iter().max().unwrap().round(p, Round::Up);
        CertInterval { lo, hi, prec: p }
    }
}

impl Div for &CertInterval {
    type Output = CertInterval;
    fn div(self, o: &CertInterval) -> CertInterval {
        assert!(!o.contains_zero(), "division by an interval containing zero");
        let p = self.prec.max(o.prec);
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&o.lo, &o.hi] {
                let d = a.div(b, p, Round::Down);
                let u = a.div(b, p, Round::Up);
                lo = Some(lo.map_or(d.clone(), |x| x.min(d)));
                hi = Some(hi.map_or(u.clone(), |x| x.max(u)));
            }
        }
        CertInterval { lo: lo.unwrap(), hi: hi.unwrap(), prec: p }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CertInterval {
            type Output = CertInterval;
            fn $m(self, o: CertInterval) -> CertInterval {
                (&self).$m(&o)
            }
        }
        impl $tr<&CertInterval> for CertInterval {
            type Output = CertInterval;
            fn $m(self, o: &CertInterval) -> CertInterval {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Debug for CertInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal(12);
        write!(f, "[{lo}, {hi}]")
    }
}

impl fmt::Display for CertInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Enclosure of `e^x` at a single dyadic point.
///
/// `x` is halved `s` times until `|x| <= 2^-8`, the Taylor series is summed
/// with a tail bound, and the result squared `s` times. Working precision
/// carries `s` extra guard bits for the squarings.
fn exp_point(x: &Dyadic, prec: u32) -> CertInterval {
    if x.is_zero() {
        return CertInterval::point(Dyadic::one(), prec);
    }
    let s = (x.magnitude().unwrap() + 9).max(0);
    let wp = prec + s as u32 + 16;
    let y = CertInterval::point(x.mul_pow2(-s), wp);
    // |y| <= 2^-8, so terms shrink by at least 2^-8 per step.
    let mut sum = CertInterval::from_i64(1, wp);
    let mut term = CertInterval::from_i64(1, wp);
    let mut k = 1i64;
    let tol = Dyadic::from_ratio_pow2(1, wp as i64 + 4);
    loop {
        term = &(&term * &y) / &CertInterval::from_i64(k, wp);
        sum = &sum + &term;
        k += 1;
        let bound = term.lo.abs().max(term.hi.abs());
        if bound < tol {
            break;
        }
    }
    // Remaining tail is bounded by 2 * |next term| <= 2 * |term| * |y| / k < |term|.
    let tail_bound = term.lo.abs().max(term.hi.abs());
    let tail = CertInterval::new(tail_bound.neg(), tail_bound, wp);
    let mut r = &sum + &tail;
    for _ in 0..s {
        r = r.square();
    }
    CertInterval::new(r.lo.round(prec, Round::Down), r.hi.round(prec, Round::Up), prec)
}

fn sinh_point(x: &Dyadic, prec: u32) -> CertInterval {
    let wp = prec + 16;
    let e = exp_point(x, wp);
    let r = &(&e - &e.recip()) * &CertInterval::from_ratio(1, 2, wp);
    narrow(r, prec)
}

fn cosh_point(x: &Dyadic, prec: u32) -> CertInterval {
    let wp = prec + 16;
    let e = exp_point(x, wp);
    let r = &(&e + &e.recip()) * &CertInterval::from_ratio(1, 2, wp);
    narrow(r, prec)
}

/// `tanh x = 1 - 2 / (e^{2x} + 1)`.
fn tanh_point(x: &Dyadic, prec: u32) -> CertInterval {
    let wp = prec + 16;
    let e2 = exp_point(&x.mul_pow2(1), wp);
    let one = CertInterval::from_i64(1, wp);
    let two = CertInterval::from_i64(2, wp);
    let r = &one - &(&two / &(&e2 + &one));
    narrow(r, prec)
}

fn narrow(r: CertInterval, prec: u32) -> CertInterval {
    CertInterval::new(r.lo.round(prec, Round::Down), r.hi.round(prec, Round::Up), prec)
}

/// `atan(1/k)` for an integer `k >= 2` by the alternating series.
fn atan_inv(k: i64, prec: u32) -> CertInterval {
    let x = CertInterval::from_ratio(1, k, prec);
    let x2 = x.square();
    let mut power = x.clone();
    let mut sum = x.clone();
    let tol = Dyadic::from_ratio_pow2(1, prec as i64 + 4);
    let mut n = 1i64;
    loop {
        power = &power * &x2;
        let term = &power / &CertInterval::from_i64(2 * n + 1, prec);
        sum = if n % 2 == 1 { &sum - &term } else { &sum + &term };
        n += 1;
        if term.hi < tol {
            // The next term is smaller than this one; the alternating tail is within it.
            let t = term.hi.clone();
            return &sum + &CertInterval::new(t.neg(), t, prec);
        }
    }
}

/// Enclosure of pi via `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(prec: u32) -> CertInterval {
    let wp = prec + 16;
    let a = atan_inv(5, wp);
    let b = atan_inv(239, wp);
    let r = &(&a * &CertInterval::from_i64(16, wp)) - &(&b * &CertInterval::from_i64(4, wp));
    narrow(r, prec)
}

/// Exact rational zero-width test helper for tests and reports.
pub fn big_ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big_one() -> BigRational {
    BigRational::one()
}

pub fn big_zero() -> BigRational {
    BigRational::zero()
}

pub fn abs_big(r: &BigRational) -> BigRational {
    r.abs()
}
