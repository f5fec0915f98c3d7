use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A rational number whose denominator is a power of two.
///
/// Stored as `num / 2^log2den` in lowest terms: `num` is odd, or zero with
/// `log2den == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    num: BigInt,
    log2den: u32,
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, log2den: u32) -> Self {
        let mut d = Dyadic { num: num.into(), log2den };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic::default()
    }

    pub fn one() -> Self {
        Dyadic::from(1)
    }

    /// `2^e` for any integer `e`.
    pub fn pow2(e: i64) -> Self {
        if e >= 0 {
            Dyadic { num: BigInt::one() << (e as usize), log2den: 0 }
        } else {
            Dyadic { num: BigInt::one(), log2den: (-e) as u32 }
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn log2den(&self) -> u32 {
        self.log2den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.log2den == 0 && self.num.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.log2den == 0
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<&BigInt> {
        self.is_integer().then_some(&self.num)
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    /// Multiplies by `2^e`.
    pub fn shl(&self, e: i64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        if e >= 0 {
            let e = e as u32;
            if e <= self.log2den {
                Dyadic { num: self.num.clone(), log2den: self.log2den - e }
            } else {
                Dyadic { num: &self.num << ((e - self.log2den) as usize), log2den: 0 }
            }
        } else {
            Dyadic::new(self.num.clone(), self.log2den + (-e) as u32)
        }
    }

    pub fn half(&self) -> Self {
        self.shl(-1)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.log2den = 0;
            return;
        }
        if self.log2den == 0 {
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0);
        let s = tz.min(self.log2den as u64);
        if s > 0 {
            self.num >>= s as usize;
            self.log2den -= s as u32;
        }
    }

    /// Exact quotient, if it is again dyadic.
    pub fn checked_div(&self, rhs: &Dyadic) -> Option<Dyadic> {
        if rhs.is_zero() {
            return None;
        }
        Dyadic::from_rational(&(self.to_rational() / rhs.to_rational()))
    }

    /// Exact conversion to a big rational.
    pub fn to_rational(&self) -> num_rational::BigRational {
        num_rational::BigRational::new(self.num.clone(), BigInt::one() << (self.log2den as usize))
    }

    /// Exact conversion from a rational whose denominator is a power of two.
    pub fn from_rational(r: &num_rational::BigRational) -> Option<Self> {
        let den = r.denom();
        if den.is_negative() {
            return None;
        }
        let tz = den.trailing_zeros().unwrap_or(0);
        if (den >> (tz as usize)).is_one() {
            Some(Dyadic::new(r.numer().clone(), tz as u32))
        } else {
            None
        }
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Dyadic { num: BigInt::from(v), log2den: 0 }
    }
}

impl From<i32> for Dyadic {
    fn from(v: i32) -> Self {
        Dyadic::from(v as i64)
    }
}

impl From<BigInt> for Dyadic {
    fn from(v: BigInt) -> Self {
        Dyadic { num: v, log2den: 0 }
    }
}

impl Add<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (num, log2den) = match self.log2den.cmp(&rhs.log2den) {
            Ordering::Equal => (&self.num + &rhs.num, self.log2den),
            Ordering::Less => {
                (&(&self.num << ((rhs.log2den - self.log2den) as usize)) + &rhs.num, rhs.log2den)
            }
            Ordering::Greater => {
                (&self.num + &(&rhs.num << ((self.log2den - rhs.log2den) as usize)), self.log2den)
            }
        };
        Dyadic::new(num, log2den)
    }
}

impl Sub<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        Dyadic::new(&self.num * &rhs.num, self.log2den + rhs.log2den)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -&self.num, log2den: self.log2den }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num, log2den: self.log2den }
    }
}

impl AddAssign<&Dyadic> for Dyadic {
    fn add_assign(&mut self, rhs: &Dyadic) {
        *self = &*self + rhs;
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self - other;
        d.num.sign().cmp(&num_bigint::Sign::NoSign).then(Ordering::Equal)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, BigInt::one() << (self.log2den as usize))
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
