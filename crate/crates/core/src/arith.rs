//! Exact integer and rational arithmetic, primality, square-free levels and the
//! Legendre symbol.
//!
//! Rationals are `num`'s `BigRational`, which normalizes after every operation:
//! the denominator is positive and coprime to the numerator.

use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// A reduced fraction of arbitrary-precision integers.
pub type ExactRational = BigRational;

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> ExactRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Converts a rational whose reduced denominator is 1 into a non-negative integer.
///
/// `context` names the formula for the error report.
pub fn to_natural(value: &ExactRational, context: &str) -> Result<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::IntegralityFailure {
            context: context.to_string(),
            value: format_rational(value),
        });
    }
    Ok(value.to_integer().magnitude().clone())
}

/// `n/d` with no spaces; integers print without the `/1`.
pub fn format_rational(value: &ExactRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Numerator/denominator pair as it appears in serialized reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FractionParts {
    pub numerator: String,
    pub denominator: String,
}

impl From<&ExactRational> for FractionParts {
    fn from(value: &ExactRational) -> Self {
        FractionParts {
            numerator: value.numer().to_string(),
            denominator: value.denom().to_string(),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod modulus` by square-and-multiply.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, modulus);
        }
        b = mul_mod(b, b, modulus);
        exp >>= 1;
    }
    result
}

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test, correct for every `u64`.
///
/// Trial division by the primes up to 37, then Miller-Rabin with those same
/// twelve bases, which is a proven deterministic witness set below 3.3·10²⁴.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Validates that `p` is an odd prime.
pub fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::EvenPrime(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// The Legendre symbol `(a/p)` via Euler's criterion.
///
/// Returns 0 when `p | a`, 1 for a non-zero quadratic residue and -1 otherwise.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i8> {
    require_odd_prime(p)?;
    let residue = (a as i128).rem_euclid(p as i128) as u64;
    if residue == 0 {
        return Ok(0);
    }
    match pow_mod(residue, (p - 1) / 2, p) {
        1 => Ok(1),
        r if r == p - 1 => Ok(-1),
        // unreachable for prime p
        r => unreachable!("Euler criterion gave {r} mod prime {p}"),
    }
}

/// An odd square-free level `N = p₁⋯pₙ` with `3 ≤ p₁ < ⋯ < pₙ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareFreeLevel {
    primes: Vec<u64>,
    level: u64,
}

impl SquareFreeLevel {
    /// Factors `n` by trial division.
    pub fn parse(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::LevelTooSmall(n));
        }
        if n % 2 == 0 {
            return Err(Error::EvenLevel(n));
        }
        let mut primes = Vec::new();
        let mut rest = n;
        let mut d = 3u64;
        while d.checked_mul(d).is_some_and(|sq| sq <= rest) {
            if rest % d == 0 {
                rest /= d;
                if rest % d == 0 {
                    return Err(Error::NotSquareFree { level: n, prime: d });
                }
                primes.push(d);
            }
            d += 2;
        }
        if rest > 1 {
            primes.push(rest);
        }
        Ok(SquareFreeLevel { primes, level: n })
    }

    /// Builds a level from an explicit list of odd primes (any order).
    pub fn from_primes(primes: &[u64]) -> Result<Self> {
        let mut sorted = primes.to_vec();
        sorted.sort_unstable();
        let mut level = 1u64;
        for (i, &p) in sorted.iter().enumerate() {
            require_odd_prime(p)?;
            if i > 0 && sorted[i - 1] == p {
                return Err(Error::NotSquareFree {
                    level: sorted.iter().product(),
                    prime: p,
                });
            }
            level = level
                .checked_mul(p)
                .ok_or_else(|| Error::InvalidRange(format!("level {sorted:?} overflows u64")))?;
        }
        if sorted.is_empty() {
            return Err(Error::LevelTooSmall(1));
        }
        Ok(SquareFreeLevel {
            primes: sorted,
            level,
        })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn is_prime(&self) -> bool {
        self.primes.len() == 1
    }
}

impl fmt::Display for SquareFreeLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.level)
    }
}

pub fn parse_square_free_level(n: u64) -> Result<SquareFreeLevel> {
    SquareFreeLevel::parse(n)
}

/// Evaluates `c₀ + c₁x + c₂x² + …` exactly.
pub fn eval_poly(coeffs: &[i64], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, &c| acc * x + BigInt::from(c))
}

/// `x⁻ᵉ` for a positive integer `x`.
pub fn inverse_power(x: u64, e: u32) -> ExactRational {
    BigRational::new(BigInt::one(), num::pow(BigInt::from(x), e as usize))
}

pub fn big_to_u64(value: &BigUint) -> Option<u64> {
    value.to_u64()
}
