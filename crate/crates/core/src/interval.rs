//! Closed intervals with rational endpoints and outward-rounded arithmetic.
//!
//! Every operation returns an interval containing all results of the exact
//! operation on members of the operands. [`Interval::round_out`] widens the
//! endpoints to dyadic rationals so that long computations keep their
//! numerators and denominators small.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::decimal;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Total order on rationals by cross-multiplication, much cheaper than the
/// `Ord` impl of `BigRational` for large operands.
pub fn cmp_q(a: &BigRational, b: &BigRational) -> Ordering {
    (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
}

fn le(a: &BigRational, b: &BigRational) -> bool {
    cmp_q(a, b) != Ordering::Greater
}

fn lt(a: &BigRational, b: &BigRational) -> bool {
    cmp_q(a, b) == Ordering::Less
}

fn min(a: BigRational, b: BigRational) -> BigRational {
    if le(&a, &b) {
        a
    } else {
        b
    }
}

fn max(a: BigRational, b: BigRational) -> BigRational {
    if le(&b, &a) {
        a
    } else {
        b
    }
}

impl Interval {
    /// Panics if `lo > hi`.
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(le(&lo, &hi), "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::point(int(n))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn is_point(&self) -> bool {
        cmp_q(&self.lo, &self.hi) == Ordering::Equal
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        le(&self.lo, x) && le(x, &self.hi)
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Certified strict comparison: every member of `self` is below every
    /// member of `other`.
    pub fn certainly_lt(&self, other: &Interval) -> bool {
        lt(&self.hi, &other.lo)
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        le(&self.lo, &other.hi) && le(&other.lo, &self.hi)
    }

    /// Hull of the absolute values.
    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            Interval::new(BigRational::zero(), max(-self.lo.clone(), self.hi.clone()))
        }
    }

    /// Upper bound on `|x|` over the interval.
    pub fn magnitude(&self) -> BigRational {
        max(self.lo.abs(), self.hi.abs())
    }

    /// Reciprocal; `None` if the interval contains zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval::new(self.hi.recip(), self.lo.recip()))
    }

    pub fn div(&self, rhs: &Interval) -> Option<Interval> {
        rhs.recip().map(|r| self * &r)
    }

    pub fn pow(&self, e: u32) -> Interval {
        let mut acc = Interval::from_int(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self^e` by repeated squaring, rounding outwards to `2^-bits` after
    /// every product.
    pub fn pow_rounded(&self, mut e: u32, bits: u32) -> Interval {
        let mut acc = Interval::from_int(1);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).round_out(bits);
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).round_out(bits);
            }
        }
        acc
    }

    /// Widens the endpoints to multiples of `2^-bits`.
    pub fn round_out(&self, bits: u32) -> Interval {
        let scale = BigInt::one() << bits;
        let lo = (&self.lo * int(scale.clone())).floor() / int(scale.clone());
        let hi = (&self.hi * int(scale.clone())).ceil() / int(scale);
        Interval { lo, hi }
    }

    /// Enclosure of the square root, with endpoints on a `2^-bits` grid.
    /// `None` if the interval has negative members.
    pub fn sqrt(&self, bits: u32) -> Option<Interval> {
        if self.lo.is_negative() {
            return None;
        }
        let four_k = int(BigInt::one() << (2 * bits));
        let scale = int(BigInt::one() << bits);
        let lo_n = (&self.lo * &four_k).floor().to_integer();
        let hi_n = (&self.hi * &four_k).ceil().to_integer();
        let lo = int(lo_n.sqrt()) / &scale;
        let s = hi_n.sqrt();
        let hi_root = if &s * &s < hi_n { s + 1u32 } else { s };
        let hi = int(hi_root) / &scale;
        Some(Interval { lo, hi })
    }

    /// Decimal rendering with `places` fraction digits when both endpoints
    /// round to the same string.
    pub fn render(&self, places: u32) -> Option<String> {
        let a = decimal::render(&self.lo, places);
        let b = decimal::render(&self.hi, places);
        (a == b).then_some(a)
    }

    /// Whether `|self - other| < tol` holds for every pair of members.
    pub fn within(&self, other: &Interval, tol: &BigRational) -> bool {
        let d = (self - other).magnitude();
        lt(&d, tol)
    }

    /// Returns `(lo, hi)`.
    pub fn into_bounds(self) -> (BigRational, BigRational) {
        (self.lo, self.hi)
    }

    /// Midpoint as a float, for diagnostics only.
    pub fn approx_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.mid().to_f64().unwrap_or(f64::NAN)
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let a = &self.lo * &rhs.lo;
        let b = &self.lo * &rhs.hi;
        let c = &self.hi * &rhs.lo;
        let d = &self.hi * &rhs.hi;
        let lo = min(min(a.clone(), b.clone()), min(c.clone(), d.clone()));
        let hi = max(max(a, b), max(c, d));
        Interval { lo, hi }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }
}

impl Add<&BigRational> for &Interval {
    type Output = Interval;
    fn add(self, rhs: &BigRational) -> Interval {
        Interval { lo: &self.lo + rhs, hi: &self.hi + rhs }
    }
}

impl Mul<&BigRational> for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &BigRational) -> Interval {
        self * &Interval::point(rhs.clone())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
