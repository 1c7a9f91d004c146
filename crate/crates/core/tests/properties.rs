use num::bigint::BigInt;
use num::Integer;
use proptest::prelude::*;

use siegel_dims::arith::{is_prime, legendre_symbol, ratio, ExactRational};
use siegel_dims::dims::{self, DimValue, Weight};
use siegel_dims::irreps::irrep_dim;
use siegel_dims::newforms::{decompose, decompose_with, DecomposeOptions};

fn reduced(r: &ExactRational) -> bool {
    r.numer().gcd(r.denom()) == BigInt::from(1) && r.denom() > &BigInt::from(0)
}

fn odd_prime() -> impl Strategy<Value = u64> {
    (3u64..200).prop_filter("odd prime", |&p| is_prime(p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_ops_reduce_and_cancel(a in -10_000i64..10_000, b in 1i64..10_000, c in -10_000i64..10_000, d in 1i64..10_000) {
        let r = ratio(a, b);
        let s = ratio(c, d);
        prop_assert_eq!(&(&r + &s) - &s, r.clone());
        for v in [&r + &s, &r - &s, &r * &s] {
            prop_assert!(reduced(&v));
        }
        if c != 0 {
            let q = &r / &s;
            prop_assert!(reduced(&q));
            prop_assert_eq!(q * &s, r);
        }
    }

    #[test]
    fn legendre_depends_on_residue(a in -1000i64..1000, p in odd_prime()) {
        prop_assert_eq!(legendre_symbol(a, p).unwrap(), legendre_symbol(a + p as i64, p).unwrap());
    }

    #[test]
    fn principal_dimension_increases_with_weight(k in 4u32..50, p in prop::sample::select(vec![3u64, 5, 7])) {
        let lo = dims::dim_principal_prime(Weight::new(k).unwrap(), p).unwrap();
        let hi = dims::dim_principal_prime(Weight::new(k + 1).unwrap(), p).unwrap();
        prop_assert!(hi > lo);
    }

    #[test]
    fn irrep_dims_positive(n in 1usize..=17, p in odd_prime()) {
        prop_assert!(!irrep_dim(n, p).unwrap().is_zero());
    }

    #[test]
    fn every_solution_satisfies_equation(p in prop::sample::select(vec![3u64, 5, 7]), target in 0u64..200) {
        let t = DimValue::from_u64(target);
        let dims: Vec<u64> = (1..=17).map(|n| irrep_dim(n, p).unwrap().to_u64().unwrap()).collect();
        for nonunitary in [false, true] {
            for d in decompose(p, &t, nonunitary).unwrap() {
                let sum: u64 = d.multiplicities().iter().zip(&dims).map(|(c, a)| c * a).sum();
                prop_assert_eq!(sum, target);
            }
        }
    }

    #[test]
    fn nonunitary_flag_gives_superset(p in prop::sample::select(vec![3u64, 5]), target in 0u64..160) {
        let t = DimValue::from_u64(target);
        let unitary = decompose(p, &t, false).unwrap();
        let all = decompose_with(p, &t, &DecomposeOptions { include_nonunitary: true, ..Default::default() }).unwrap();
        for d in &unitary {
            let mut padded = d.multiplicities().to_vec();
            padded.extend([0, 0]);
            prop_assert!(all.iter().any(|e| e.multiplicities() == padded.as_slice()));
        }
    }
}
