//! Binary floating values `mant * 2^exp` over big integers, with rounding in
//! an explicit direction.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
        }
    }
}

/// `mant * 2^exp`, kept with an odd mantissa (or zero with `exp = 0`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

/// `floor(n / d)` or `ceil(n / d)` for `d > 0`.
fn div_round(n: &BigInt, d: &BigInt, dir: Round) -> BigInt {
    debug_assert!(d.is_positive());
    match dir {
        Round::Down => n.div_floor(d),
        Round::Up => -((-n).div_floor(d)),
    }
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        if mant.is_zero() {
            return Dyadic { mant, exp: 0 };
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        Dyadic { mant: mant >> tz, exp: exp + tz as i64 }
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mant: BigInt::one(), exp: 0 }
    }

    pub fn from_i64(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    /// `n / 2^k`.
    pub fn from_ratio_pow2(n: i64, k: i64) -> Self {
        Dyadic::new(BigInt::from(n), -k)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    /// `floor(log2 |x|)`; `None` for zero.
    pub fn magnitude(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.mant.bits() as i64 - 1 + self.exp)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    /// Keep at most `prec` significant bits, rounding in `dir`.
    pub fn round(&self, prec: u32, dir: Round) -> Dyadic {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let d = BigInt::one() << shift;
        Dyadic::new(div_round(&self.mant, &d, dir), self.exp + shift as i64)
    }

    pub fn add_exact(&self, o: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &o.mant << (o.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub_exact(&self, o: &Dyadic) -> Dyadic {
        self.add_exact(&o.neg())
    }

    pub fn mul_exact(&self, o: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &o.mant, self.exp + o.exp)
    }

    pub fn add(&self, o: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        self.add_exact(o).round(prec, dir)
    }

    pub fn sub(&self, o: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        self.sub_exact(o).round(prec, dir)
    }

    pub fn mul(&self, o: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        self.mul_exact(o).round(prec, dir)
    }

    /// Quotient with `prec` significant bits, rounded in `dir`. Panics on zero divisor.
    pub fn div(&self, o: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        assert!(!o.is_zero(), "division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let (num, den) = if o.is_negative() {
            (-&self.mant, -&o.mant)
        } else {
            (self.mant.clone(), o.mant.clone())
        };
        let shift = (prec as i64 + 2 + den.bits() as i64 - num.bits() as i64).max(0);
        let q = div_round(&(num << shift as u64), &den, dir);
        Dyadic::new(q, self.exp - o.exp - shift).round(prec, dir)
    }

    /// Square root of a non-negative value.
    pub fn sqrt(&self, prec: u32, dir: Round) -> Dyadic {
        assert!(!self.is_negative(), "sqrt of negative value");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // Scale so the integer root has at least prec + 2 bits and the exponent is even.
        let mut shift = (2 * (prec as i64 + 2) - self.mant.bits() as i64).max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let n = &self.mant << shift as u64;
        let mut r = n.sqrt();
        if dir == Round::Up && &r * &r != n {
            r += 1;
        }
        Dyadic::new(r, (self.exp - shift) / 2).round(prec, dir)
    }

    /// Nearest dyadic in `dir` to the rational `num / den`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32, dir: Round) -> Dyadic {
        let (n, d) = if den.is_negative() { (-num, -den) } else { (num.clone(), den.clone()) };
        Dyadic::new(n, 0).div(&Dyadic::new(d, 0), prec, dir)
    }

    pub fn from_rational(r: &BigRational, prec: u32, dir: Round) -> Dyadic {
        Dyadic::from_ratio(r.numer(), r.denom(), prec, dir)
    }

    /// Exact rational value.
    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.mant.bits() as i64;
        let keep = bits.min(60);
        let m = &self.mant >> (bits - keep) as u64;
        let m: i64 = m.try_into().expect("fits in 60 bits");
        (m as f64) * 2f64.powi((self.exp + bits - keep) as i32)
    }

    /// Decimal string with `digits` digits after the point, rounded in `dir`.
    pub fn to_decimal(&self, digits: u32, dir: Round) -> String {
        let r = self.to_rational() * BigRational::from_integer(BigInt::from(10).pow(digits));
        let v = div_round(r.numer(), r.denom(), dir);
        let neg = v.is_negative();
        let s = v.abs().to_string();
        let s = format!("{:0>width$}", s, width = digits as usize + 1);
        let (int_part, frac) = s.split_at(s.len() - digits as usize);
        format!("{}{int_part}.{frac}", if neg { "-" } else { "" })
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.sub_exact(other);
        match d.mant.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mant, self.exp)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: i64) -> Dyadic {
        Dyadic::from_i64(n)
    }

    #[test]
    fn rounding_brackets_quotient() {
        let third_lo = d(1).div(&d(3), 64, Round::Down);
        let third_hi = d(1).div(&d(3), 64, Round::Up);
        let third = BigRational::new(1.into(), 3.into());
        assert!(third_lo.to_rational() < third && third < third_hi.to_rational());
        let gap = third_hi.to_rational() - third_lo.to_rational();
        assert!(gap < BigRational::new(1.into(), BigInt::one() << 64));
    }

    #[test]
    fn negative_division_rounds_correctly() {
        let lo = d(-1).div(&d(3), 32, Round::Down);
        let hi = d(1).div(&d(-3), 32, Round::Up);
        let t = BigRational::new((-1).into(), 3.into());
        assert!(lo.to_rational() < t && t < hi.to_rational());
    }

    #[test]
    fn sqrt_brackets() {
        let lo = d(2).sqrt(80, Round::Down);
        let hi = d(2).sqrt(80, Round::Up);
        let two = BigRational::from_integer(2.into());
        assert!(lo.to_rational() * lo.to_rational() < two);
        assert!(hi.to_rational() * hi.to_rational() > two);
        assert_eq!(d(9).sqrt(10, Round::Up), d(3));
        let quarter = Dyadic::from_ratio_pow2(1, 2);
        assert_eq!(quarter.sqrt(10, Round::Down), Dyadic::from_ratio_pow2(1, 1));
    }

    #[test]
    fn round_and_order() {
        let x = Dyadic::new(BigInt::from(0b1011_0111), 0);
        assert_eq!(x.round(4, Round::Down), d(0b1011_0000));
        assert_eq!(x.round(4, Round::Up), d(0b1100_0000));
        assert!(d(-3) < d(2));
        assert!(Dyadic::from_ratio_pow2(3, 4) < Dyadic::from_ratio_pow2(1, 2));
    }

    #[test]
    fn decimal_output() {
        let x = Dyadic::from_ratio_pow2(1, 3);
        assert_eq!(x.to_decimal(4, Round::Down), "0.1250");
        let t = d(1).div(&d(3), 64, Round::Up);
        assert_eq!(t.to_decimal(5, Round::Up), "0.33334");
        assert_eq!(t.neg().to_decimal(5, Round::Down), "-0.33334");
        assert_eq!(x.to_f64(), 0.125);
    }
}
