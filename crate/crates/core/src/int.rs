//! Exact integers: machine words with checked arithmetic, promoted to
//! arbitrary precision when a result does not fit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

#[derive(Clone, Debug)]
pub enum Int {
    Small(i64),
    Big(Box<BigInt>),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(Box::new(b)),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    /// Representative in `0..m`.
    pub fn rem_euclid_u64(&self, m: u64) -> u64 {
        match self {
            Int::Small(v) => (*v as i128).rem_euclid(m as i128) as u64,
            Int::Big(b) => b.mod_floor(&BigInt::from(m)).to_u64().unwrap(),
        }
    }

    /// `Some(self / d)` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: i64) -> Option<Int> {
        assert!(d != 0, "division by zero");
        match self {
            Int::Small(v) => {
                if v % d == 0 {
                    v.checked_div(d).map(Int::Small).or_else(|| {
                        Some(Int::from_big(BigInt::from(*v) / BigInt::from(d)))
                    })
                } else {
                    None
                }
            }
            Int::Big(b) => {
                let (q, r) = b.div_rem(&BigInt::from(d));
                r.is_zero().then(|| Int::from_big(q))
            }
        }
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Int {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Int {
        Int::Small(v as i64)
    }
}

impl From<u64> for Int {
    fn from(v: u64) -> Int {
        i64::try_from(v)
            .map(Int::Small)
            .unwrap_or_else(|_| Int::Big(Box::new(BigInt::from(v))))
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Int {
        Int::from_big(b)
    }
}

impl PartialEq for Int {
    fn eq(&self, other: &Int) -> bool {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a == b,
            // normalized: Big never holds a value that fits in i64
            (Int::Big(a), Int::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Int {}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Int) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Int) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl std::hash::Hash for Int {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            Int::Small(v) => v.hash(state),
            Int::Big(b) => b.hash(state),
        }
    }
}

impl<'a> Add<&'a Int> for &'a Int {
    type Output = Int;
    fn add(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub<&'a Int> for &'a Int {
    type Output = Int;
    fn sub(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() - rhs.to_big())
    }
}

impl<'a> Mul<&'a Int> for &'a Int {
    type Output = Int;
    fn mul(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_mul(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() * rhs.to_big())
    }
}

impl Add for Int {
    type Output = Int;
    fn add(self, rhs: Int) -> Int {
        &self + &rhs
    }
}

impl Sub for Int {
    type Output = Int;
    fn sub(self, rhs: Int) -> Int {
        &self - &rhs
    }
}

impl Mul for Int {
    type Output = Int;
    fn mul(self, rhs: Int) -> Int {
        &self * &rhs
    }
}

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        *self = &*self + rhs;
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl Zero for Int {
    fn zero() -> Int {
        Int::ZERO
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl One for Int {
    fn one() -> Int {
        Int::ONE
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

// Machine-sized values serialize as JSON numbers, larger ones as decimal strings.
impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Int::Small(v) => s.serialize_i64(*v),
            Int::Big(b) => s.serialize_str(&b.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(i64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(Int::Small(v)),
            Repr::Str(s) => s
                .trim()
                .parse::<BigInt>()
                .map(Int::from_big)
                .map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes() {
        let a = Int::from(i64::MAX);
        let b = &a + &Int::ONE;
        assert!(matches!(b, Int::Big(_)));
        assert_eq!(&b - &Int::ONE, a);
        let sq = &a * &a;
        assert_eq!(sq.to_big(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        assert_eq!(-Int::from(i64::MIN), Int::from(BigInt::from(i64::MIN) * -1));
    }

    #[test]
    fn exact_division() {
        assert_eq!(Int::from(12).div_exact(3), Some(Int::from(4)));
        assert_eq!(Int::from(13).div_exact(3), None);
        assert_eq!(Int::from(-7).rem_euclid_u64(5), 3);
    }

    #[test]
    fn json_round_trip() {
        let big = Int::from(BigInt::from(3).pow(60));
        let s = serde_json::to_string(&vec![Int::from(-5), big.clone()]).unwrap();
        let back: Vec<Int> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, vec![Int::from(-5), big]);
    }
}
