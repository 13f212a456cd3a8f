//! Certified knowledge about a rational genus: exact rationals, closed or
//! half-open intervals of them, triviality status and homology order.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = Ratio<i128>;

pub fn rat(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

/// Parses `a` or `a/b`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i128 = n.trim().parse().ok()?;
            let d: i128 = d.trim().parse().ok()?;
            (d != 0).then(|| rat(n, d))
        }
        None => s.parse().ok().map(int),
    }
}

/// Serde adapter writing a [`Rational`] as `"p/q"`.
pub mod rational_str {
    use super::{parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
    }
}

/// Same as [`rational_str`] with `None` written as `"inf"`.
pub mod upper_str {
    use super::{parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&r.to_string()),
            None => s.serialize_str("inf"),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let s = String::deserialize(d)?;
        if s == "inf" {
            return Ok(None);
        }
        parse_rational(&s)
            .map(Some)
            .ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
    }
}

/// An interval `[lo, hi]` of non-negative rationals, `hi` possibly `+inf`.
///
/// Either endpoint may be strict, which is how bounds like `> 1/12` are
/// carried. An exact value has `lo == hi` with both endpoints closed.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenusValue {
    #[serde(with = "rational_str")]
    lo: Rational,
    #[serde(with = "upper_str")]
    hi: Option<Rational>,
    lo_strict: bool,
    hi_strict: bool,
}

impl GenusValue {
    fn new(lo: Rational, hi: Option<Rational>, lo_strict: bool, hi_strict: bool) -> Result<Self> {
        let v = GenusValue {
            lo,
            hi_strict: hi_strict && hi.is_some(),
            hi,
            lo_strict,
        };
        if v.lo.is_negative() || v.is_empty() {
            return Err(Error::EmptyIntersection(v.to_string(), "[0, inf)".into()));
        }
        Ok(v)
    }

    fn is_empty(&self) -> bool {
        match &self.hi {
            None => false,
            Some(hi) => match self.lo.cmp(hi) {
                Ordering::Greater => true,
                Ordering::Equal => self.lo_strict || self.hi_strict,
                Ordering::Less => false,
            },
        }
    }

    pub fn exact(r: Rational) -> Self {
        assert!(!r.is_negative(), "rational genus is non-negative");
        GenusValue { lo: r, hi: Some(r), lo_strict: false, hi_strict: false }
    }

    pub fn zero() -> Self {
        Self::exact(Rational::zero())
    }

    /// `[r, inf)`.
    pub fn at_least(r: Rational) -> Self {
        assert!(!r.is_negative());
        GenusValue { lo: r, hi: None, lo_strict: false, hi_strict: false }
    }

    /// `(r, inf)`.
    pub fn greater_than(r: Rational) -> Self {
        assert!(!r.is_negative());
        GenusValue { lo: r, hi: None, lo_strict: true, hi_strict: false }
    }

    /// `[0, r]`.
    pub fn at_most(r: Rational) -> Self {
        Self::between(Rational::zero(), r)
    }

    /// `[lo, hi]`; panics if `lo > hi` or `lo < 0`.
    pub fn between(lo: Rational, hi: Rational) -> Self {
        Self::new(lo, Some(hi), false, false).expect("lo <= hi")
    }

    /// Interval with explicit strictness flags.
    pub fn with_strictness(
        lo: Rational,
        lo_strict: bool,
        hi: Option<Rational>,
        hi_strict: bool,
    ) -> Result<Self> {
        Self::new(lo, hi, lo_strict, hi_strict)
    }

    /// `[0, inf)`: nothing is known.
    pub fn unknown() -> Self {
        Self::at_least(Rational::zero())
    }

    pub fn lo(&self) -> Rational {
        self.lo
    }

    pub fn hi(&self) -> Option<Rational> {
        self.hi
    }

    pub fn lo_strict(&self) -> bool {
        self.lo_strict
    }

    pub fn hi_strict(&self) -> bool {
        self.hi_strict
    }

    pub fn is_exact(&self) -> bool {
        self.hi == Some(self.lo) && !self.lo_strict && !self.hi_strict
    }

    pub fn exact_value(&self) -> Option<Rational> {
        self.is_exact().then_some(self.lo)
    }

    pub fn is_zero(&self) -> bool {
        self.exact_value().is_some_and(|r| r.is_zero())
    }

    pub fn contains(&self, r: Rational) -> bool {
        let above = match r.cmp(&self.lo) {
            Ordering::Greater => true,
            Ordering::Equal => !self.lo_strict,
            Ordering::Less => false,
        };
        let below = match &self.hi {
            None => true,
            Some(hi) => match r.cmp(hi) {
                Ordering::Less => true,
                Ordering::Equal => !self.hi_strict,
                Ordering::Greater => false,
            },
        };
        above && below
    }

    /// True when every point of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &GenusValue) -> bool {
        let lo_ok = match self.lo.cmp(&other.lo) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo_strict || !other.lo_strict,
            Ordering::Less => false,
        };
        let hi_ok = match (&self.hi, &other.hi) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => match a.cmp(b) {
                Ordering::Less => true,
                Ordering::Equal => self.hi_strict || !other.hi_strict,
                Ordering::Greater => false,
            },
        };
        lo_ok && hi_ok
    }

    /// Every point is `>= t` (strictness-aware).
    pub fn certainly_at_least(&self, t: Rational) -> bool {
        self.lo >= t
    }

    /// Every point is `> t`.
    pub fn certainly_greater(&self, t: Rational) -> bool {
        self.lo > t || (self.lo == t && self.lo_strict)
    }

    /// Every point is `<= t`.
    pub fn certainly_at_most(&self, t: Rational) -> bool {
        self.hi.is_some_and(|hi| hi <= t)
    }

    /// Every point is `< t`.
    pub fn certainly_less(&self, t: Rational) -> bool {
        self.hi.is_some_and(|hi| hi < t || (hi == t && self.hi_strict))
    }

    /// Multiply both endpoints by `c > 0`.
    pub fn scale(&self, c: Rational) -> GenusValue {
        assert!(c.is_positive(), "scale factor must be positive, got {c}");
        GenusValue {
            lo: self.lo * c,
            hi: self.hi.map(|h| h * c),
            ..*self
        }
    }

    /// `[a.lo + b.lo + shift, a.hi + b.hi + shift]`; strict if either addend is.
    pub fn add(&self, other: &GenusValue, shift: Rational) -> GenusValue {
        let lo = self.lo + other.lo + shift;
        assert!(!lo.is_negative(), "sum of genus bounds went negative");
        GenusValue {
            lo,
            hi: self.hi.zip(other.hi).map(|(a, b)| a + b + shift),
            lo_strict: self.lo_strict || other.lo_strict,
            hi_strict: self.hi_strict || other.hi_strict,
        }
    }

    /// Intersection of two certified bounds.
    pub fn refine(&self, other: &GenusValue) -> Result<GenusValue> {
        let (lo, lo_strict) = match self.lo.cmp(&other.lo) {
            Ordering::Greater => (self.lo, self.lo_strict),
            Ordering::Less => (other.lo, other.lo_strict),
            Ordering::Equal => (self.lo, self.lo_strict || other.lo_strict),
        };
        let (hi, hi_strict) = match (self.hi, other.hi) {
            (None, None) => (None, false),
            (Some(a), None) => (Some(a), self.hi_strict),
            (None, Some(b)) => (Some(b), other.hi_strict),
            (Some(a), Some(b)) => match a.cmp(&b) {
                Ordering::Less => (Some(a), self.hi_strict),
                Ordering::Greater => (Some(b), other.hi_strict),
                Ordering::Equal => (Some(a), self.hi_strict || other.hi_strict),
            },
        };
        GenusValue::new(lo, hi, lo_strict, hi_strict)
            .map_err(|_| Error::EmptyIntersection(self.to_string(), other.to_string()))
    }
}

pub fn iv_scale(v: &GenusValue, c: Rational) -> GenusValue {
    v.scale(c)
}

pub fn iv_add(a: &GenusValue, b: &GenusValue, shift: Rational) -> GenusValue {
    a.add(b, shift)
}

pub fn iv_refine(a: &GenusValue, b: &GenusValue) -> Result<GenusValue> {
    a.refine(b)
}

impl fmt::Display for GenusValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.exact_value() {
            return write!(f, "{r}");
        }
        let open = if self.lo_strict { '(' } else { '[' };
        match self.hi {
            None => write!(f, "{open}{}, inf)", self.lo),
            Some(hi) => {
                let close = if self.hi_strict { ')' } else { ']' };
                write!(f, "{open}{}, {hi}{close}", self.lo)
            }
        }
    }
}

impl fmt::Debug for GenusValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenusValue({self})")
    }
}

/// Whether the knot has a `p`-Seifert surface that is a disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TrivialityStatus {
    NotPTrivial,
    /// `PTrivial(1)` means the knot bounds a disk.
    PTrivial(u64),
    Unknown,
}

impl TrivialityStatus {
    pub fn p(&self) -> Option<u64> {
        match self {
            TrivialityStatus::PTrivial(p) => Some(*p),
            _ => None,
        }
    }
}

impl fmt::Display for TrivialityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrivialityStatus::NotPTrivial => f.write_str("not p-trivial"),
            TrivialityStatus::PTrivial(p) => write!(f, "{p}-trivial"),
            TrivialityStatus::Unknown => f.write_str("unknown triviality"),
        }
    }
}

/// Order of the knot class in first homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KnotOrder {
    Finite(u64),
    Infinite,
    Unknown,
}

impl KnotOrder {
    pub fn finite(&self) -> Option<u64> {
        match self {
            KnotOrder::Finite(n) => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for KnotOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotOrder::Finite(n) => write!(f, "{n}"),
            KnotOrder::Infinite => f.write_str("infinite"),
            KnotOrder::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusResult {
    pub value: GenusValue,
    pub triviality: TrivialityStatus,
    pub order: KnotOrder,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scale_examples() {
        assert_eq!(GenusValue::exact(rat(1, 2)).scale(rat(1, 19)), GenusValue::exact(rat(1, 38)));
        assert_eq!(GenusValue::at_least(rat(1, 402)).scale(int(2)), GenusValue::at_least(rat(1, 201)));
        assert_eq!(GenusValue::exact(rat(9, 2)).scale(rat(1, 19)), GenusValue::exact(rat(9, 38)));
        let strict = GenusValue::greater_than(rat(1, 12)).scale(int(3));
        assert!(strict.lo_strict());
    }

    #[test]
    fn add_examples() {
        let half = GenusValue::exact(rat(1, 2));
        assert_eq!(half.add(&half, rat(1, 2)), GenusValue::exact(rat(3, 2)));
        assert_eq!(GenusValue::zero().add(&GenusValue::zero(), int(0)), GenusValue::zero());
        let sum = GenusValue::at_least(rat(1, 12)).add(&GenusValue::zero(), rat(1, 4));
        assert_eq!(sum, GenusValue::at_least(rat(1, 3)));
    }

    #[test]
    fn refine_examples() {
        let a = GenusValue::at_most(rat(1, 4));
        let b = GenusValue::at_least(rat(1, 12));
        assert_eq!(a.refine(&b).unwrap(), GenusValue::between(rat(1, 12), rat(1, 4)));

        let e = GenusValue::exact(rat(9, 38));
        assert_eq!(e.refine(&GenusValue::unknown()).unwrap(), e);

        let left = GenusValue::with_strictness(int(0), false, Some(rat(1, 24)), true).unwrap();
        let right = GenusValue::greater_than(rat(1, 12));
        assert!(matches!(left.refine(&right), Err(Error::EmptyIntersection(..))));
    }

    #[test]
    fn touching_strict_endpoints_are_empty() {
        let below = GenusValue::with_strictness(int(0), false, Some(rat(1, 12)), false).unwrap();
        let above = GenusValue::greater_than(rat(1, 12));
        assert!(below.refine(&above).is_err());
        let closed = GenusValue::at_least(rat(1, 12));
        assert_eq!(below.refine(&closed).unwrap(), GenusValue::exact(rat(1, 12)));
    }

    #[test]
    fn strictness_aware_comparisons() {
        let v = GenusValue::greater_than(rat(1, 12));
        assert!(v.certainly_greater(rat(1, 12)));
        assert!(v.certainly_at_least(rat(1, 12)));
        assert!(!v.contains(rat(1, 12)));
        assert!(!GenusValue::at_least(rat(1, 12)).certainly_greater(rat(1, 12)));
        let w = GenusValue::with_strictness(int(0), false, Some(rat(1, 24)), true).unwrap();
        assert!(w.certainly_less(rat(1, 24)));
        assert!(w.certainly_at_most(rat(1, 24)));
    }

    #[test]
    fn display() {
        assert_eq!(GenusValue::exact(rat(9, 38)).to_string(), "9/38");
        assert_eq!(GenusValue::greater_than(rat(1, 12)).to_string(), "(1/12, inf)");
        assert_eq!(GenusValue::between(int(0), rat(1, 4)).to_string(), "[0, 1/4]");
    }

    #[test]
    fn serde_round_trip() {
        let v = GenusValue::greater_than(rat(1, 12));
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.contains("\"1/12\"") && s.contains("\"inf\""));
        let back: GenusValue = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("19/1"), Some(int(19)));
        assert_eq!(parse_rational("-12/5"), Some(rat(-12, 5)));
        assert_eq!(parse_rational("4/8"), Some(rat(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
