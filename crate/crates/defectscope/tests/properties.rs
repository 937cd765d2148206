//! Randomized algebraic properties of the exact cyclotomic arithmetic and
//! the partition combinatorics.

use defectscope::cyclo::CycloNum;
use defectscope::symfunc::{p_core, p_weight, partitions, Partition};
use num::BigInt;
use proptest::prelude::*;

fn from_coeffs(m: u64, cs: &[i64]) -> CycloNum {
    let terms: Vec<(u64, BigInt)> = cs
        .iter()
        .enumerate()
        .map(|(i, &c)| (i as u64 % m, BigInt::from(c)))
        .collect();
    CycloNum::from_power_sum(m, &terms)
}

proptest! {
    #[test]
    fn ring_laws(m in prop::sample::select(vec![1u64, 2, 3, 4, 5, 8, 12]),
                 ca in prop::collection::vec(-9i64..=9, 1..=4),
                 cb in prop::collection::vec(-9i64..=9, 1..=4),
                 cc in prop::collection::vec(-9i64..=9, 1..=4)) {
        let a = from_coeffs(m, &ca);
        let b = from_coeffs(m, &cb);
        let c = from_coeffs(m, &cc);
        // distributivity and commutativity
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        // conjugation is a ring homomorphism
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        // exact division inverts multiplication
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
        }
        // the norm-like product a * conj(a) at these small m is fixed by conj
        let n = a.mul(&a.conj());
        prop_assert_eq!(n.conj(), n);
    }

    #[test]
    fn lift_is_injective_hom(x in -20i64..=20, y in -20i64..=20) {
        let a = CycloNum::from_integer(3, x).add(&CycloNum::root_of_unity(3, 1).scale(&num::BigRational::from_integer(BigInt::from(y))));
        let l = a.lift(12);
        prop_assert_eq!(l.mul(&l), a.mul(&a).lift(12));
    }

    #[test]
    fn core_weight_balance(n in 1usize..=11, pi in 0usize..3) {
        let p = [2u64, 3, 5][pi];
        for lam in partitions(n) {
            let core = p_core(&lam, p);
            let w = p_weight(&lam, p);
            prop_assert_eq!(core.sum() + p as usize * w, n);
            // cores are fixed points
            prop_assert_eq!(p_core(&core, p), core.clone());
            prop_assert_eq!(p_weight(&core, p), 0);
        }
    }

    #[test]
    fn beta_set_roundtrip(parts in prop::collection::vec(1usize..=8, 0..=6)) {
        let mut sorted = parts.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Partition::new(sorted);
        prop_assert_eq!(Partition::from_beta(lam.beta_set()), lam);
    }
}
