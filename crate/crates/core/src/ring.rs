//! Coefficient rings: the integers and prime fields.

use crate::error::{Error, Result};
use crate::int::Int;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    Integers,
    PrimeField(u32),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    pub fn prime_field(p: u32) -> Result<Ring> {
        if is_prime(p as u64) {
            Ok(Ring::PrimeField(p))
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Ring::Integers => 0,
            Ring::PrimeField(p) => *p,
        }
    }

    pub fn reduce(&self, x: Int) -> Int {
        match self {
            Ring::Integers => x,
            Ring::PrimeField(p) => Int::Small(x.rem_euclid_u64(*p as u64) as i64),
        }
    }

    pub fn from_i64(&self, v: i64) -> Int {
        self.reduce(Int::from(v))
    }

    pub fn add(&self, a: &Int, b: &Int) -> Int {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Int, b: &Int) -> Int {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Int, b: &Int) -> Int {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Int) -> Int {
        self.reduce(-a)
    }

    /// Multiplicative inverse in a prime field; `None` for zero or over ℤ
    /// unless the element is ±1.
    pub fn inv(&self, a: &Int) -> Option<Int> {
        match self {
            Ring::Integers => match a.as_i64() {
                Some(1) => Some(Int::ONE),
                Some(-1) => Some(Int::from(-1)),
                _ => None,
            },
            Ring::PrimeField(p) => {
                let a = a.rem_euclid_u64(*p as u64);
                (a != 0).then(|| Int::Small(inv_mod(a, *p as u64) as i64))
            }
        }
    }

    /// Signed representative: for 𝔽_p the value in (−p/2, p/2].
    pub fn balanced(&self, a: &Int) -> Int {
        match self {
            Ring::Integers => a.clone(),
            Ring::PrimeField(p) => {
                let v = a.rem_euclid_u64(*p as u64) as i64;
                if 2 * v > *p as i64 {
                    Int::Small(v - *p as i64)
                } else {
                    Int::Small(v)
                }
            }
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// Exact binomial coefficient C(n, k) over ℤ.
pub fn binom_int(n: u64, k: u64) -> Int {
    if k > n {
        return Int::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1u32);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Int::from(acc)
}

/// C(n, k) reduced into `ring`.
pub fn binom(n: u64, k: u64, ring: Ring) -> Result<Int> {
    if k > n {
        return Err(Error::OutOfRange(format!("binom({n},{k}) requires k ≤ n")));
    }
    Ok(ring.reduce(binom_int(n, k)))
}

/// The q-binomial at q = −1: zero when both arguments are odd, otherwise
/// C(⌊(k+l)/2⌋, ⌊k/2⌋).
pub fn binom_minus1(k: u64, l: u64) -> Int {
    if k % 2 == 1 && l % 2 == 1 {
        Int::ZERO
    } else {
        binom_int((k + l) / 2, k / 2)
    }
}

pub fn factorial(n: u64) -> Int {
    let mut acc = BigInt::from(1u32);
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Int::from(acc)
}

pub fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_examples() {
        assert_eq!(binom(3, 1, Ring::PrimeField(3)).unwrap(), Int::ZERO);
        assert_eq!(binom(2, 1, Ring::Integers).unwrap(), Int::from(2));
        assert_eq!(binom(4, 2, Ring::PrimeField(3)).unwrap(), Int::ZERO);
        let e = binom(1, 2, Ring::Integers).unwrap_err();
        assert!(e.to_string().contains("out of range"));
    }

    #[test]
    fn binom_against_factorials() {
        for n in 0..20u64 {
            for k in 0..=n {
                let f = factorial(n).to_big() / (factorial(k).to_big() * factorial(n - k).to_big());
                assert_eq!(binom_int(n, k).to_big(), f);
            }
        }
    }

    #[test]
    fn binom_minus1_examples() {
        assert_eq!(binom_minus1(1, 1), Int::ZERO);
        assert_eq!(binom_minus1(1, 2), Int::ONE);
        assert_eq!(binom_minus1(2, 2), Int::from(2));
    }

    // Gaussian binomial at q = −1 via the q-Pascal rule, compared with the closed form.
    #[test]
    fn binom_minus1_matches_q_pascal() {
        let n = 14usize;
        let mut g = vec![vec![0i64; n + 1]; n + 1];
        for m in 0..=n {
            g[m][0] = 1;
            g[m][m] = 1;
            for k in 1..m {
                let qk = if k % 2 == 1 { -1 } else { 1 };
                g[m][k] = g[m - 1][k - 1] + qk * g[m - 1][k];
            }
        }
        for m in 0..=n {
            for k in 0..=m {
                assert_eq!(binom_minus1(k as u64, (m - k) as u64), Int::from(g[m][k]), "{k},{}", m - k);
            }
        }
    }

    #[test]
    fn field_inverse() {
        let r = Ring::PrimeField(7);
        for a in 1..7 {
            let i = r.inv(&Int::from(a)).unwrap();
            assert_eq!(r.mul(&i, &Int::from(a)), Int::ONE);
        }
        assert!(Ring::prime_field(9).is_err());
    }
}
