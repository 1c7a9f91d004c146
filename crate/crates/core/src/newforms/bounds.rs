//! Lower and upper bounds on `dim S_k^new(Γ(N))`.
//!
//! The lower bound divides `dim S_k(Γ(N))` by the largest irrep dimension
//! (summed over the primes of `N`); the upper bounds are evaluated exactly as
//! the published expressions, including the special case at `p = 3`. For a
//! prime `p ≠ 3` the prime-level upper bound is twice the square-free upper
//! bound at the same level.

use num::bigint::BigInt;

use crate::arith::{format_rational, int, require_odd_prime, ExactRational, SquareFreeLevel};
use crate::dims::{self, Weight};
use crate::error::{Error, Result};
use crate::irreps;

/// An exact interval `0 < lower ≤ upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPair {
    lower: ExactRational,
    upper: ExactRational,
}

impl BoundPair {
    fn new(lower: ExactRational, upper: ExactRational, context: &str) -> Result<Self> {
        if lower <= int(0) || lower > upper {
            return Err(Error::IntegralityFailure {
                context: format!("bound ordering for {context}"),
                value: format!("[{}, {}]", format_rational(&lower), format_rational(&upper)),
            });
        }
        Ok(BoundPair { lower, upper })
    }

    pub fn lower(&self) -> &ExactRational {
        &self.lower
    }

    pub fn upper(&self) -> &ExactRational {
        &self.upper
    }

    /// `(⌈lower⌉, ⌊upper⌋)`, the integers the bounds admit.
    pub fn integer_envelope(&self) -> (BigInt, BigInt) {
        (
            self.lower.ceil().to_integer(),
            self.upper.floor().to_integer(),
        )
    }
}

/// Bounds at an odd prime level.
pub fn bounds_prime(k: Weight, p: u64) -> Result<BoundPair> {
    if k.get() < 4 {
        return Err(Error::WeightOutOfRange { k: k.get(), min: 4 });
    }
    require_odd_prime(p)?;
    let kernel = ExactRational::from_integer(dims::principal_prime_kernel(k.get(), p));
    let pr = ExactRational::from_integer(BigInt::from(p));
    let one = int(1);

    let lower = &kernel * &pr * (&pr - &one) * (&pr - &one) / int(34560);
    let upper = if p == 3 {
        let kk = ExactRational::from_integer(BigInt::from(k.get()));
        (int(6) * &kk * &kk * &kk - int(27) * &kk * &kk - &kk + int(82)) / int(12)
    } else {
        let p4 = &pr * &pr * &pr * &pr;
        &kernel * &pr * (p4 - &one) / int(17280)
    };

    // lower · a₁(p) must reproduce dim S_k(Γ(p))
    let a1 = irreps::irrep_dim(1, p)?.to_rational();
    let dim = dims::dim_principal_prime(k, p)?.to_rational();
    if &lower * a1 != dim {
        return Err(Error::IntegralityFailure {
            context: format!("lower-bound identity at k = {k}, p = {p}"),
            value: format_rational(&lower),
        });
    }
    BoundPair::new(lower, upper, &format!("k = {k}, p = {p}"))
}

/// Bounds at an odd square-free level `N = p₁⋯pₙ`.
pub fn bounds_squarefree(k: Weight, level: &SquareFreeLevel) -> Result<BoundPair> {
    let dim = dims::dim_principal(k, level)?.to_rational();
    let primes = level.primes();

    let mut largest_sum = BigInt::from(0);
    for &p in primes {
        largest_sum += BigInt::from(irreps::irrep_dim(1, p)?.value().clone());
    }
    let p2_minus_1 = |p: u64| BigInt::from(p) * BigInt::from(p) - 1;
    let divisor: BigInt = if primes[0] == 3 {
        BigInt::from(6) + primes[1..].iter().map(|&p| p2_minus_1(p)).sum::<BigInt>()
    } else {
        primes.iter().map(|&p| p2_minus_1(p)).sum()
    };

    let lower = &dim / ExactRational::from_integer(largest_sum);
    let upper = &dim / ExactRational::from_integer(divisor);
    BoundPair::new(lower, upper, &format!("k = {k}, N = {level}"))
}
