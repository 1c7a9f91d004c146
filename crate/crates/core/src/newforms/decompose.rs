//! Non-negative integer solutions of `Σ cₙ·aₙ(p) = D`.
//!
//! The search runs depth-first over the irrep indices in descending order of
//! dimension, pruning on the remaining target and on the gcd of the dimensions
//! still available. Results are returned in lexicographic order of
//! `(c₁, c₂, …)`.

use num::Integer;
use serde::Serialize;

use crate::arith::require_odd_prime;
use crate::dims::DimValue;
use crate::error::{Error, Result};
use crate::irreps;

pub const DEFAULT_SOLUTION_CAP: usize = 1_000_000;

/// Largest target for which [`count_decompositions`] runs its table.
pub const COUNT_TARGET_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecomposeOptions {
    /// Also use the non-unitary rows 16 and 17.
    pub include_nonunitary: bool,
    pub cap: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            include_nonunitary: false,
            cap: DEFAULT_SOLUTION_CAP,
        }
    }
}

impl DecomposeOptions {
    fn index_count(&self) -> usize {
        if self.include_nonunitary {
            17
        } else {
            15
        }
    }
}

/// Multiplicities `c₁…c₁₅` (or `c₁…c₁₇`) with `Σ cₙ·aₙ(p) = target`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Decomposition {
    prime: u64,
    target: u64,
    multiplicities: Vec<u64>,
}

impl Decomposition {
    /// Checks the defining equation against the irrep table.
    pub fn new(prime: u64, target: u64, multiplicities: Vec<u64>) -> Result<Self> {
        if multiplicities.len() != 15 && multiplicities.len() != 17 {
            return Err(Error::IndexOutOfRange(multiplicities.len()));
        }
        let dims = irreps::dims_u64(prime, multiplicities.len())?;
        let sum = multiplicities
            .iter()
            .zip(&dims)
            .try_fold(0u64, |acc, (&c, &a)| {
                c.checked_mul(a).and_then(|t| acc.checked_add(t))
            });
        if sum != Some(target) {
            return Err(Error::IntegralityFailure {
                context: format!("decomposition of {target} at p = {prime}"),
                value: format!("{multiplicities:?}"),
            });
        }
        Ok(Decomposition {
            prime,
            target,
            multiplicities,
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    /// `c₁, c₂, …` in index order.
    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// `cₙ` for `n` in `1..=17`; zero for indices not covered.
    pub fn multiplicity(&self, index: usize) -> u64 {
        index
            .checked_sub(1)
            .and_then(|i| self.multiplicities.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// `Σ cₙ`, the number of irreducible constituents.
    pub fn total(&self) -> u64 {
        self.multiplicities.iter().sum()
    }

    pub fn includes_nonunitary(&self) -> bool {
        self.multiplicities.len() == 17
    }

    /// Sparse form such as `1*a14` or `2*a15 + 1*a3`; `0` for the empty sum.
    pub fn terms(&self) -> String {
        let terms: Vec<String> = self
            .multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, c)| format!("{c}*a{}", i + 1))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

fn target_u64(target: &DimValue) -> Result<u64> {
    target
        .to_u64()
        .ok_or_else(|| Error::TargetTooLarge(target.to_string()))
}

/// All unitary decompositions of `target` at `p`, with the default cap.
pub fn decompose(
    p: u64,
    target: &DimValue,
    include_nonunitary: bool,
) -> Result<Vec<Decomposition>> {
    decompose_with(
        p,
        target,
        &DecomposeOptions {
            include_nonunitary,
            ..Default::default()
        },
    )
}

struct Search<'a> {
    order: &'a [(usize, u64)],
    // gcd of the dimensions from position i onwards
    suffix_gcd: Vec<u64>,
    current: Vec<u64>,
    found: Vec<Vec<u64>>,
    cap: usize,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, remaining: u64) -> Result<()> {
        if remaining % self.suffix_gcd[pos] != 0 {
            return Ok(());
        }
        let (index, dim) = self.order[pos];
        if pos + 1 == self.order.len() {
            self.current[index - 1] = remaining / dim;
            self.found.push(self.current.clone());
            self.current[index - 1] = 0;
            if self.found.len() > self.cap {
                return Err(Error::TooManySolutions { cap: self.cap });
            }
            return Ok(());
        }
        for c in (0..=remaining / dim).rev() {
            self.current[index - 1] = c;
            self.run(pos + 1, remaining - c * dim)?;
        }
        self.current[index - 1] = 0;
        Ok(())
    }
}

pub fn decompose_with(
    p: u64,
    target: &DimValue,
    options: &DecomposeOptions,
) -> Result<Vec<Decomposition>> {
    require_odd_prime(p)?;
    let target = target_u64(target)?;
    let count = options.index_count();
    let dims = irreps::dims_u64(p, count)?;

    let mut order: Vec<(usize, u64)> = dims.iter().enumerate().map(|(i, &d)| (i + 1, d)).collect();
    order.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut suffix_gcd = vec![0u64; count + 1];
    for i in (0..count).rev() {
        suffix_gcd[i] = suffix_gcd[i + 1].gcd(&order[i].1);
    }

    let mut search = Search {
        order: &order,
        suffix_gcd,
        current: vec![0; count],
        found: Vec::new(),
        cap: options.cap,
    };
    search.run(0, target)?;

    let mut found = search.found;
    found.sort_unstable();
    found
        .into_iter()
        .map(|m| Decomposition::new(p, target, m))
        .collect()
}

/// Number of decompositions of `target`, by dynamic programming over the
/// targets `0..=target`. `None` when the target exceeds
/// [`COUNT_TARGET_LIMIT`] or the count overflows `u128`.
pub fn count_decompositions(
    p: u64,
    target: &DimValue,
    include_nonunitary: bool,
) -> Result<Option<u128>> {
    require_odd_prime(p)?;
    let target = match target.to_u64() {
        Some(t) if t <= COUNT_TARGET_LIMIT => t as usize,
        _ => return Ok(None),
    };
    let count = if include_nonunitary { 17 } else { 15 };
    let mut ways = vec![Some(0u128); target + 1];
    ways[0] = Some(1);
    for dim in irreps::dims_u64(p, count)? {
        let dim = dim as usize;
        for s in dim..=target {
            ways[s] = match (ways[s], ways[s - dim]) {
                (Some(a), Some(b)) => a.checked_add(b),
                _ => None,
            };
        }
    }
    Ok(ways[target])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: u64) -> DimValue {
        DimValue::from_u64(v)
    }

    fn unit(index: usize, count: usize) -> Vec<u64> {
        let mut m = vec![0; count];
        m[index - 1] = 1;
        m
    }

    #[test]
    fn unique_decomposition_of_fifteen() {
        let sols = decompose(3, &dv(15), false).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].multiplicities(), unit(14, 15).as_slice());
        assert_eq!(sols[0].multiplicity(14), 1);
        assert_eq!(sols[0].total(), 1);
        assert_eq!(sols[0].terms(), "1*a14");
    }

    #[test]
    fn zero_target() {
        let sols = decompose(3, &dv(0), false).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].total(), 0);
        assert_eq!(sols[0].terms(), "0");
    }

    #[test]
    fn below_minimum_dimension() {
        assert!(decompose(3, &dv(5), false).unwrap().is_empty());
    }

    #[test]
    fn twelve_is_two_copies_of_a15() {
        let sols = decompose(3, &dv(12), false).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].multiplicity(15), 2);
        assert_eq!(sols[0].total(), 2);
    }

    #[test]
    fn nonunitary_rows_add_solutions() {
        // 10 = a16(3), 8 = a17(3)
        assert!(decompose(3, &dv(10), false).unwrap().is_empty());
        let sols = decompose(3, &dv(10), true).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].multiplicities(), unit(16, 17).as_slice());
        assert!(sols[0].includes_nonunitary());
    }

    #[test]
    fn output_is_lexicographic() {
        let sols = decompose(3, &dv(120), false).unwrap();
        assert!(sols.len() > 1);
        assert!(sols
            .windows(2)
            .all(|w| w[0].multiplicities() < w[1].multiplicities()));
        // a₉(3) = a₁₀(3) = 40 gives distinct index vectors
        let sols = decompose(3, &dv(40), false).unwrap();
        let singles: Vec<&Decomposition> = sols.iter().filter(|d| d.total() == 1).collect();
        assert_eq!(singles.len(), 2);
    }

    #[test]
    fn cap_aborts() {
        let options = DecomposeOptions {
            include_nonunitary: false,
            cap: 10,
        };
        assert_eq!(
            decompose_with(5, &dv(5655), &options),
            Err(Error::TooManySolutions { cap: 10 })
        );
        let exact = decompose(3, &dv(120), false).unwrap().len();
        let options = DecomposeOptions {
            include_nonunitary: false,
            cap: exact,
        };
        assert_eq!(decompose_with(3, &dv(120), &options).unwrap().len(), exact);
    }

    #[test]
    fn rejects_even_prime_and_huge_targets() {
        assert_eq!(decompose(2, &dv(15), false), Err(Error::EvenPrime(2)));
        let huge = DimValue::from(num::BigUint::from(u64::MAX) * 4u32);
        assert!(matches!(
            decompose(3, &huge, false),
            Err(Error::TargetTooLarge(_))
        ));
    }

    #[test]
    fn construction_rechecks_equation() {
        assert!(Decomposition::new(3, 15, unit(14, 15)).is_ok());
        assert!(Decomposition::new(3, 16, unit(14, 15))
            .unwrap_err()
            .is_integrity_failure());
        assert!(Decomposition::new(3, 15, vec![0; 3]).is_err());
    }

    #[test]
    fn counting_matches_enumeration() {
        for target in [0, 15, 76, 120, 200] {
            let listed = decompose(3, &dv(target), false).unwrap().len() as u128;
            assert_eq!(
                count_decompositions(3, &dv(target), false).unwrap(),
                Some(listed)
            );
        }
        assert_eq!(
            count_decompositions(5, &dv(5655), false).unwrap(),
            Some(19_005_458)
        );
        assert_eq!(
            count_decompositions(3, &dv(COUNT_TARGET_LIMIT + 1), false).unwrap(),
            None
        );
    }
}
