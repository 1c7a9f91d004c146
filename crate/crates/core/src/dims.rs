//! Dimension formulas for spaces of degree-2 Siegel cusp forms.
//!
//! Provenance of each family:
//!
//! * `Sp(4,Z)`: Eie's closed form `N₁ + N₂ + N₃ + N₄`, evaluated for `k ≥ 4`.
//!   It vanishes for `4 ≤ k ≤ 9`.
//! * `Γ₀(p)`: no explicit formula is available. Weight 1 vanishes for every
//!   level (Ibukiyama–Skoruppa); weight 4 is tabulated for `p ≤ 13`
//!   (Poor–Yuen). Everything else is [`Error::NotTabulated`].
//! * `K(p)`: Ibukiyama's weight-4 formula for primes `p ≥ 5`; the values at
//!   `p = 2, 3` come from the Poor–Yuen table.
//! * `Γ(N)`: the product formula for odd square-free `N` and its specialization
//!   to a prime level, valid for `k ≥ 4`.

use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::{One, Zero};
use serde::Serialize;

use crate::arith::{self, int, inverse_power, ratio, ExactRational, SquareFreeLevel};
use crate::error::{Error, Result};

/// A weight `k ≥ 1`. Each formula enforces its own lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Weight(u32);

impl Weight {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::WeightOutOfRange { k, min: 1 });
        }
        Ok(Weight(k))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn at_least(self, min: u32) -> Result<u32> {
        if self.0 < min {
            Err(Error::WeightOutOfRange { k: self.0, min })
        } else {
            Ok(self.0)
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The dimension of a space of cusp forms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimValue(BigUint);

impl DimValue {
    /// Fails with [`Error::IntegralityFailure`] unless `value` is a non-negative integer.
    pub fn from_rational(value: &ExactRational, context: &str) -> Result<Self> {
        arith::to_natural(value, context).map(DimValue)
    }

    pub fn from_u64(value: u64) -> Self {
        DimValue(BigUint::from(value))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        arith::big_to_u64(&self.0)
    }

    pub fn to_rational(&self) -> ExactRational {
        ExactRational::from_integer(BigInt::from(self.0.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<BigUint> for DimValue {
    fn from(value: BigUint) -> Self {
        DimValue(value)
    }
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Coefficient data for the full-level formula, kept separate from the
/// evaluation so the transcription can be checked (and corrupted in tests).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullLevelCoefficients {
    /// `N₁` numerators over `2⁷·3³`, indexed by `k mod 12`.
    pub n1: [i64; 12],
    /// `N₃ = (a·k + b) / (2⁵·3³)`, `(a, b)` indexed by `k mod 12`.
    pub n3: [(i64, i64); 12],
    /// `N₄` cubic over `2⁷·3³·5` for even k, low degree first.
    pub n4_even: [i64; 4],
    /// Same for odd k.
    pub n4_odd: [i64; 4],
}

impl FullLevelCoefficients {
    pub const EIE: FullLevelCoefficients = FullLevelCoefficients {
        n1: [
            1131, 229, -229, -1131, 427, -571, 123, -203, 203, -123, 571, -427,
        ],
        n3: [
            (17, -294),
            (-25, 325),
            (-25, 254),
            (17, -261),
            (17, -86),
            (-1, 53),
            (-1, -42),
            (-7, 91),
            (-7, 2),
            (-1, -27),
            (-1, 166),
            (17, -181),
        ],
        n4_even: [-3231, -52, 96, 2],
        n4_odd: [-9051, 2018, -114, 2],
    };

    /// The exact rational `N₁ + N₂ + N₃ + N₄` at weight `k`.
    pub fn evaluate(&self, k: u32) -> ExactRational {
        let r12 = (k % 12) as usize;
        let kk = i64::from(k);
        let n1 = ratio(self.n1[r12], 128 * 27);
        let n2 = match k % 5 {
            0 => ratio(1, 5),
            3 => ratio(-1, 5),
            _ => ExactRational::zero(),
        };
        let (slope, constant) = self.n3[r12];
        let n3 = ratio(slope * kk + constant, 32 * 27);
        let cubic = if k % 2 == 0 {
            &self.n4_even
        } else {
            &self.n4_odd
        };
        let n4 = ExactRational::new(
            arith::eval_poly(cubic, &BigInt::from(k)),
            BigInt::from(128 * 27 * 5),
        );
        n1 + n2 + n3 + n4
    }
}

/// `dim S_k(Sp(4,Z))` for `k ≥ 4`.
pub fn dim_full_level(k: Weight) -> Result<DimValue> {
    dim_full_level_with(&FullLevelCoefficients::EIE, k)
}

pub fn dim_full_level_with(coeffs: &FullLevelCoefficients, k: Weight) -> Result<DimValue> {
    let k = k.at_least(4)?;
    DimValue::from_rational(&coeffs.evaluate(k), &format!("dim S_{k}(Sp(4,Z))"))
}

/// Tabulated `dim S_4(Γ₀(p))`.
pub const GAMMA0_WEIGHT4_TABLE: [(u64, u64); 6] =
    [(2, 0), (3, 1), (5, 1), (7, 3), (11, 7), (13, 11)];

/// `dim S_k(Γ₀(N))`, available only at weight 1 (any `N ≥ 1`) and at weight 4
/// for the tabulated primes.
pub fn dim_gamma0(k: Weight, level: u64) -> Result<DimValue> {
    match k.get() {
        1 if level >= 1 => Ok(DimValue::from_u64(0)),
        4 => GAMMA0_WEIGHT4_TABLE
            .iter()
            .find(|(p, _)| *p == level)
            .map(|&(_, d)| DimValue::from_u64(d))
            .ok_or(Error::NotTabulated { k: 4, level }),
        k => Err(Error::NotTabulated { k, level }),
    }
}

/// Tabulated `dim S_4(K(p))`. Only the `p = 2, 3` entries are used for
/// evaluation; the rest are checked against the formula.
pub const PARAMODULAR_WEIGHT4_TABLE: [(u64, u64); 8] = [
    (2, 0),
    (3, 0),
    (5, 0),
    (7, 1),
    (11, 1),
    (13, 2),
    (17, 2),
    (19, 3),
];

/// Ibukiyama's weight-4 paramodular formula as an exact rational, for primes `p ≥ 5`.
pub fn paramodular_weight4_formula(p: u64) -> Result<ExactRational> {
    arith::require_odd_prime(p)?;
    if p < 5 {
        return Err(Error::InvalidRange(format!(
            "the weight-4 paramodular formula requires p >= 5, got {p}"
        )));
    }
    let pp = i64::try_from(p).map_err(|_| Error::InvalidRange(format!("prime {p} too large")))?;
    let p_big = int(pp);
    let leg =
        |a: i64| -> Result<ExactRational> { Ok(int(i64::from(arith::legendre_symbol(a, p)?))) };

    let value = &p_big * &p_big / int(576) + &p_big / int(8) - ratio(143, 576)
        + (&p_big / int(96) - ratio(1, 8)) * leg(-1)?
        + ratio(1, 8) * leg(2)?
        + ratio(1, 12) * leg(3)?
        + &p_big / int(36) * leg(-3)?;
    Ok(value)
}

/// `dim S_4(K(p))` for a prime `p`.
pub fn dim_paramodular_weight4(p: u64) -> Result<DimValue> {
    match p {
        2 | 3 => Ok(DimValue::from_u64(0)),
        _ if !arith::is_prime(p) => Err(Error::NotPrime(p)),
        _ => DimValue::from_rational(
            &paramodular_weight4_formula(p)?,
            &format!("dim S_4(K({p}))"),
        ),
    }
}

/// `(2k³ − 9k² + 13k − 6)p³ + (180 − 120k)p + 360`, the weight-dependent
/// factor shared by the prime-level formula and the prime-level bounds.
pub fn principal_prime_kernel(k: u32, p: u64) -> BigInt {
    let k = BigInt::from(k);
    let p = BigInt::from(p);
    let cubic = arith::eval_poly(&[-6, 13, -9, 2], &k);
    cubic * &p * &p * &p + (BigInt::from(180) - BigInt::from(120) * k) * p + BigInt::from(360)
}

/// `dim S_k(Γ(p))` for a prime `p` (including `p = 2`) and `k ≥ 4`.
pub fn dim_principal_prime(k: Weight, p: u64) -> Result<DimValue> {
    let k = k.at_least(4)?;
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pb = BigInt::from(p);
    let p2 = &pb * &pb;
    let numerator = principal_prime_kernel(k, p) * &pb * (&p2 * &p2 - 1) * (p2 - 1);
    let value = ExactRational::new(numerator, BigInt::from(34560));
    DimValue::from_rational(&value, &format!("dim S_{k}(Gamma({p}))"))
}

/// `M = ∏ (1 − pᵢ⁻²)(1 − pᵢ⁻⁴)` over the primes dividing `N`.
pub fn hecke_factor(level: &SquareFreeLevel) -> ExactRational {
    level.primes().iter().fold(ExactRational::one(), |acc, &p| {
        acc * (int(1) - inverse_power(p, 2)) * (int(1) - inverse_power(p, 4))
    })
}

/// `dim S_k(Γ(N))` for odd square-free `N` and `k ≥ 4`, as an exact rational
/// before the integrality check.
pub fn principal_dimension_rational(k: u32, level: &SquareFreeLevel) -> ExactRational {
    let n = ExactRational::from_integer(BigInt::from(level.level()));
    let n3 = &n * &n * &n;
    let n7 = &n3 * &n3 * &n;
    let kk = i64::from(k);
    let inner = n3 / int(1440) * int((2 * kk - 2) * (2 * kk - 3) * (2 * kk - 4))
        - &n / int(6) * int(2 * kk - 3)
        + int(1);
    n7 / int(96) * inner * hecke_factor(level)
}

pub fn dim_principal(k: Weight, level: &SquareFreeLevel) -> Result<DimValue> {
    let k = k.at_least(4)?;
    DimValue::from_rational(
        &principal_dimension_rational(k, level),
        &format!("dim S_{k}(Gamma({level}))"),
    )
}

/// The level of a principal congruence subgroup: a single prime (2 allowed)
/// or an odd square-free product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrincipalLevel {
    Prime(u64),
    SquareFree(SquareFreeLevel),
}

impl PrincipalLevel {
    pub fn parse(n: u64) -> Result<Self> {
        if arith::is_prime(n) {
            Ok(PrincipalLevel::Prime(n))
        } else {
            SquareFreeLevel::parse(n).map(PrincipalLevel::SquareFree)
        }
    }

    pub fn level(&self) -> u64 {
        match self {
            PrincipalLevel::Prime(p) => *p,
            PrincipalLevel::SquareFree(l) => l.level(),
        }
    }
}

/// A congruence-subgroup family together with its level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupFamily {
    FullLevel,
    Gamma0(u64),
    Paramodular(u64),
    Principal(PrincipalLevel),
}

impl GroupFamily {
    pub fn dimension(&self, k: Weight) -> Result<DimValue> {
        match self {
            GroupFamily::FullLevel => dim_full_level(k),
            GroupFamily::Gamma0(n) => dim_gamma0(k, *n),
            GroupFamily::Paramodular(p) => {
                if k.get() != 4 {
                    return Err(Error::InvalidRange(format!(
                        "paramodular dimensions are available at weight 4 only, got k = {k}"
                    )));
                }
                dim_paramodular_weight4(*p)
            }
            GroupFamily::Principal(PrincipalLevel::Prime(p)) => dim_principal_prime(k, *p),
            GroupFamily::Principal(PrincipalLevel::SquareFree(l)) => dim_principal(k, l),
        }
    }

    pub fn level(&self) -> Option<u64> {
        match self {
            GroupFamily::FullLevel => None,
            GroupFamily::Gamma0(n) | GroupFamily::Paramodular(n) => Some(*n),
            GroupFamily::Principal(l) => Some(l.level()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(k: u32) -> Weight {
        Weight::new(k).unwrap()
    }

    fn d(v: u64) -> DimValue {
        DimValue::from_u64(v)
    }

    #[test]
    fn coefficient_tables_transcribed() {
        let c = FullLevelCoefficients::EIE;
        assert_eq!(
            c.n1,
            [1131, 229, -229, -1131, 427, -571, 123, -203, 203, -123, 571, -427]
        );
        // N₃ entries written out as a·k + b at k = 0 and k = 1
        let at0: Vec<i64> = c.n3.iter().map(|&(_, b)| b).collect();
        assert_eq!(
            at0,
            [-294, 325, 254, -261, -86, 53, -42, 91, 2, -27, 166, -181]
        );
        let slopes: Vec<i64> = c.n3.iter().map(|&(a, _)| a).collect();
        assert_eq!(slopes, [17, -25, -25, 17, 17, -1, -1, -7, -7, -1, -1, 17]);
        // 2k³+96k²−52k−3231 and 2k³−114k²+2018k−9051
        assert_eq!(c.n4_even, [-3231, -52, 96, 2]);
        assert_eq!(c.n4_odd, [-9051, 2018, -114, 2]);
    }

    #[test]
    fn full_level_k4_hand_evaluation() {
        // N₁ + N₃ + N₄ at k = 4 over the common denominator 17280
        let c = FullLevelCoefficients::EIE;
        let n1 = ratio(427, 3456);
        let n3 = ratio(17 * 4 - 86, 864);
        let n4 = ratio(2 * 64 + 96 * 16 - 52 * 4 - 3231, 17280);
        assert_eq!(n1 * int(17280), int(2135));
        assert_eq!(n3 * int(17280), int(-360));
        assert_eq!(n4 * int(17280), int(-1775));
        assert_eq!(c.evaluate(4), int(0));
    }

    #[test]
    fn full_level_examples() {
        assert_eq!(dim_full_level(w(10)).unwrap(), d(1));
        assert_eq!(dim_full_level(w(20)).unwrap(), d(3));
        assert_eq!(dim_full_level(w(11)).unwrap(), d(0));
        for k in 4..10 {
            assert_eq!(dim_full_level(w(k)).unwrap(), d(0), "k = {k}");
        }
        assert_eq!(
            dim_full_level(w(3)),
            Err(Error::WeightOutOfRange { k: 3, min: 4 })
        );
    }

    #[test]
    fn full_level_integral_over_wide_range() {
        for k in 4..400 {
            dim_full_level(w(k)).unwrap();
        }
    }

    #[test]
    fn corrupted_coefficients_are_detected() {
        let mut c = FullLevelCoefficients::EIE;
        c.n1[10] += 1;
        // k = 10: the perturbation leaves a fraction
        assert!(dim_full_level_with(&c, w(10))
            .unwrap_err()
            .is_integrity_failure());
    }

    #[test]
    fn gamma0_examples() {
        assert_eq!(dim_gamma0(w(4), 7).unwrap(), d(3));
        assert_eq!(dim_gamma0(w(4), 13).unwrap(), d(11));
        assert_eq!(dim_gamma0(w(1), 360).unwrap(), d(0));
        assert_eq!(
            dim_gamma0(w(4), 17),
            Err(Error::NotTabulated { k: 4, level: 17 })
        );
        assert_eq!(
            dim_gamma0(w(5), 3),
            Err(Error::NotTabulated { k: 5, level: 3 })
        );
        let msg = dim_gamma0(w(4), 17).unwrap_err().to_string();
        assert!(msg.contains("not tabulated") && msg.contains("provenance"));
    }

    #[test]
    fn paramodular_examples() {
        assert_eq!(dim_paramodular_weight4(7).unwrap(), d(1));
        assert_eq!(dim_paramodular_weight4(19).unwrap(), d(3));
        assert_eq!(dim_paramodular_weight4(2).unwrap(), d(0));
        assert_eq!(dim_paramodular_weight4(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn paramodular_formula_at_seven() {
        // (49 + 504 − 143 + 30 + 72 − 48 + 112) / 576
        assert_eq!(paramodular_weight4_formula(7).unwrap(), ratio(576, 576));
    }

    #[test]
    fn paramodular_formula_matches_table() {
        for &(p, expected) in PARAMODULAR_WEIGHT4_TABLE.iter().filter(|(p, _)| *p >= 5) {
            assert_eq!(
                paramodular_weight4_formula(p).unwrap(),
                int(expected as i64),
                "p = {p}"
            );
        }
    }

    #[test]
    fn paramodular_formula_integral_for_primes_below_2000() {
        for p in (5..2000).filter(|&p| arith::is_prime(p)) {
            dim_paramodular_weight4(p).unwrap();
        }
    }

    #[test]
    fn principal_prime_examples() {
        assert_eq!(dim_principal_prime(w(4), 3).unwrap(), d(15));
        assert_eq!(dim_principal_prime(w(4), 7).unwrap(), d(199_500));
        assert_eq!(dim_principal_prime(w(10), 5).unwrap(), d(321_230));
        assert_eq!(dim_principal_prime(w(4), 2).unwrap(), d(0));
        assert_eq!(
            dim_principal_prime(w(3), 5),
            Err(Error::WeightOutOfRange { k: 3, min: 4 })
        );
        assert_eq!(dim_principal_prime(w(4), 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn principal_prime_integral_sweep() {
        for k in 4..=60 {
            for p in (3..=97).filter(|&p| arith::is_prime(p)) {
                dim_principal_prime(w(k), p).unwrap();
            }
        }
    }

    #[test]
    fn hecke_factor_examples() {
        let m3 = hecke_factor(&SquareFreeLevel::parse(3).unwrap());
        assert_eq!(m3, ratio(640, 729));
        let m15 = hecke_factor(&SquareFreeLevel::parse(15).unwrap());
        assert_eq!(m15, ratio(9_584_640, 11_390_625));
        assert_eq!(m15, ratio(212_992, 253_125));
        let m5 = hecke_factor(&SquareFreeLevel::parse(5).unwrap());
        assert_eq!(m5, ratio(24, 25) * ratio(624, 625));
        for n in [3, 15, 105, 1155] {
            let m = hecke_factor(&SquareFreeLevel::parse(n).unwrap());
            assert!(m > int(0) && m < int(1));
        }
    }

    #[test]
    fn principal_square_free_examples() {
        let l3 = SquareFreeLevel::parse(3).unwrap();
        assert_eq!(dim_principal(w(4), &l3).unwrap(), d(15));
        assert_eq!(dim_principal(w(8), &l3).unwrap(), d(709));
        // Evaluating the product formula at N = 15.
        let l15 = SquareFreeLevel::parse(15).unwrap();
        assert_eq!(dim_principal(w(4), &l15).unwrap(), d(403_977_600));
    }

    #[test]
    fn group_family_dispatch() {
        assert_eq!(GroupFamily::FullLevel.dimension(w(12)).unwrap(), d(1));
        assert_eq!(GroupFamily::Gamma0(11).dimension(w(4)).unwrap(), d(7));
        assert_eq!(GroupFamily::Paramodular(13).dimension(w(4)).unwrap(), d(2));
        assert!(GroupFamily::Paramodular(13).dimension(w(5)).is_err());
        let principal = GroupFamily::Principal(PrincipalLevel::parse(2).unwrap());
        assert_eq!(principal.dimension(w(4)).unwrap(), d(0));
        let principal = GroupFamily::Principal(PrincipalLevel::parse(5).unwrap());
        assert_eq!(principal.dimension(w(5)).unwrap(), d(18_980));
        assert!(PrincipalLevel::parse(4).is_err());
    }
}
