//! Dimensions of the non-trivial irreducible representations of `GSp(4,F_p)`.
//!
//! Each row is a product of small integer polynomials in `p`, optionally halved.
//! Rows 16 and 17 belong to non-unitary representations and are excluded from
//! decompositions by default.

use num::bigint::BigInt;
use num::{Integer, One};
use serde::Serialize;

use crate::arith::{self, require_odd_prime};
use crate::dims::DimValue;
use crate::error::{Error, Result};

// Polynomial factors, lowest degree first.
const P: &[i64] = &[0, 1];
const P_PLUS_1: &[i64] = &[1, 1];
const P_MINUS_1: &[i64] = &[-1, 1];
const P2_PLUS_1: &[i64] = &[1, 0, 1];
const P2_MINUS_1: &[i64] = &[-1, 0, 1];
const P4: &[i64] = &[0, 0, 0, 0, 1];
const P4_MINUS_1: &[i64] = &[-1, 0, 0, 0, 1];

/// One row of the `GSp(4,F_p)` dimension table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IrrepEntry {
    pub index: usize,
    /// Human-readable formula, e.g. `(p^2+1)(p+1)^2`.
    pub formula: &'static str,
    factors: &'static [&'static [i64]],
    halved: bool,
    pub unitary_relevant: bool,
}

impl IrrepEntry {
    const fn new(
        index: usize,
        formula: &'static str,
        factors: &'static [&'static [i64]],
        halved: bool,
    ) -> Self {
        IrrepEntry {
            index,
            formula,
            factors,
            halved,
            unitary_relevant: index <= 15,
        }
    }

    /// Evaluates the row at an odd prime `p`.
    pub fn dim_at(&self, p: u64) -> Result<DimValue> {
        require_odd_prime(p)?;
        let x = BigInt::from(p);
        let product = self
            .factors
            .iter()
            .fold(BigInt::one(), |acc, f| acc * arith::eval_poly(f, &x));
        let value = if self.halved {
            let (half, rem) = product.div_rem(&BigInt::from(2));
            if rem != BigInt::from(0) {
                return Err(Error::IntegralityFailure {
                    context: format!("a_{}({p}) = {}", self.index, self.formula),
                    value: format!("{product}/2"),
                });
            }
            half
        } else {
            product
        };
        DimValue::from_rational(&value.into(), &format!("a_{}({p})", self.index))
    }
}

pub static IRREP_TABLE: [IrrepEntry; 17] = [
    IrrepEntry::new(1, "(p^2+1)(p+1)^2", &[P2_PLUS_1, P_PLUS_1, P_PLUS_1], false),
    IrrepEntry::new(2, "p(p^2+1)(p+1)", &[P, P2_PLUS_1, P_PLUS_1], false),
    IrrepEntry::new(3, "p^2(p^2+1)", &[P, P, P2_PLUS_1], false),
    IrrepEntry::new(4, "p^4", &[P4], false),
    IrrepEntry::new(5, "p^4-1", &[P4_MINUS_1], false),
    IrrepEntry::new(6, "p^2(p^2-1)", &[P, P, P2_MINUS_1], false),
    IrrepEntry::new(7, "(p^2-1)^2", &[P2_MINUS_1, P2_MINUS_1], false),
    IrrepEntry::new(8, "p(p^2+1)(p-1)", &[P, P2_PLUS_1, P_MINUS_1], false),
    IrrepEntry::new(
        9,
        "(p^2+1)(p-1)^2",
        &[P2_PLUS_1, P_MINUS_1, P_MINUS_1],
        false,
    ),
    IrrepEntry::new(10, "(p^2+1)(p+1)", &[P2_PLUS_1, P_PLUS_1], false),
    IrrepEntry::new(11, "p(p^2+1)", &[P, P2_PLUS_1], false),
    IrrepEntry::new(12, "(p^2+1)(p-1)", &[P2_PLUS_1, P_MINUS_1], false),
    IrrepEntry::new(13, "1/2 p(p+1)^2", &[P, P_PLUS_1, P_PLUS_1], true),
    IrrepEntry::new(14, "1/2 p(p^2+1)", &[P, P2_PLUS_1], true),
    IrrepEntry::new(15, "1/2 p(p-1)^2", &[P, P_MINUS_1, P_MINUS_1], true),
    IrrepEntry::new(16, "p^2+1", &[P2_PLUS_1], false),
    IrrepEntry::new(17, "p^2-1", &[P2_MINUS_1], false),
];

pub fn entry(index: usize) -> Result<&'static IrrepEntry> {
    if (1..=17).contains(&index) {
        Ok(&IRREP_TABLE[index - 1])
    } else {
        Err(Error::IndexOutOfRange(index))
    }
}

/// `a_n(p)`.
pub fn irrep_dim(index: usize, p: u64) -> Result<DimValue> {
    entry(index)?.dim_at(p)
}

/// `a_n(p)` for `n` in `1..=count` as machine integers, in index order.
pub(crate) fn dims_u64(p: u64, count: usize) -> Result<Vec<u64>> {
    (1..=count)
        .map(|n| {
            irrep_dim(n, p)?
                .to_u64()
                .ok_or_else(|| Error::InvalidRange(format!("a_{n}({p}) exceeds u64")))
        })
        .collect()
}

/// Rows 1..=15 at `p`, sorted by ascending dimension then index.
pub fn unitary_dims(p: u64) -> Result<Vec<(usize, DimValue)>> {
    let mut rows = IRREP_TABLE
        .iter()
        .filter(|e| e.unitary_relevant)
        .map(|e| Ok((e.index, e.dim_at(p)?)))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    Ok(rows)
}

/// One row of the table evaluated at a prime, as exported by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrepRow {
    pub index: usize,
    pub formula: &'static str,
    pub value: String,
    pub unitary: bool,
}

pub fn table_at(p: u64) -> Result<Vec<IrrepRow>> {
    IRREP_TABLE
        .iter()
        .map(|e| {
            Ok(IrrepRow {
                index: e.index,
                formula: e.formula,
                value: e.dim_at(p)?.to_string(),
                unitary: e.unitary_relevant,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(index: usize, p: u64) -> u64 {
        irrep_dim(index, p).unwrap().to_u64().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(v(1, 3), 160);
        assert_eq!(v(14, 3), 15);
        assert_eq!(v(4, 5), 625);
    }

    #[test]
    fn errors() {
        assert_eq!(irrep_dim(0, 3), Err(Error::IndexOutOfRange(0)));
        assert_eq!(irrep_dim(18, 3), Err(Error::IndexOutOfRange(18)));
        assert_eq!(irrep_dim(1, 2), Err(Error::EvenPrime(2)));
        assert_eq!(irrep_dim(1, 9), Err(Error::NotPrime(9)));
        assert_eq!(unitary_dims(2), Err(Error::EvenPrime(2)));
    }

    #[test]
    fn all_rows_at_three() {
        let dims: Vec<u64> = (1..=17).map(|n| v(n, 3)).collect();
        assert_eq!(
            dims,
            [160, 120, 90, 81, 80, 72, 64, 60, 40, 40, 30, 20, 24, 15, 6, 10, 8]
        );
    }

    #[test]
    fn unitary_flags() {
        for e in &IRREP_TABLE {
            assert_eq!(e.unitary_relevant, e.index < 16, "a_{}", e.index);
        }
    }

    #[test]
    fn unitary_dims_ordering() {
        let rows = unitary_dims(3).unwrap();
        assert_eq!(rows.len(), 15);
        assert_eq!(rows.first().unwrap(), &(15, DimValue::from_u64(6)));
        assert_eq!(rows.last().unwrap(), &(1, DimValue::from_u64(160)));
        // a₉(3) = a₁₀(3) = 40, tie broken by index
        let pos9 = rows.iter().position(|r| r.0 == 9).unwrap();
        assert_eq!(rows[pos9 + 1].0, 10);
        assert_eq!(unitary_dims(5).unwrap()[0], (15, DimValue::from_u64(40)));
        for p in [5, 7, 11, 97] {
            let rows = unitary_dims(p).unwrap();
            assert_eq!(rows[0].0, 15);
            assert_eq!(rows[14].0, 1);
            assert!(rows.windows(2).all(|w| w[0].1 < w[1].1));
        }
    }

    #[test]
    fn pairwise_distinct_except_at_three() {
        for p in (5..=100).filter(|&p| arith::is_prime(p)) {
            let mut dims: Vec<u64> = (1..=17).map(|n| v(n, p)).collect();
            dims.sort_unstable();
            dims.dedup();
            assert_eq!(dims.len(), 17, "p = {p}");
        }
        // (p-1)^2 = p+1 exactly at p = 3
        assert_eq!(v(9, 3), v(10, 3));
    }

    #[test]
    fn table_export() {
        let rows = table_at(5).unwrap();
        assert_eq!(rows.len(), 17);
        assert_eq!(rows[12].formula, "1/2 p(p+1)^2");
        assert_eq!(rows[12].value, "90");
        assert!(!rows[16].unitary);
    }
}
