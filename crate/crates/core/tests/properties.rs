use proptest::prelude::*;

use dkostka::double_symfunc::{double_kostka_matrix, modified_double_kostka};
use dkostka::fq_oracle::{all_subspaces, enhanced_type, g_variety_counts, sampled_representatives, FqMatrix};
use dkostka::partition::{double_dominance_le, enumerate_double_partitions, enumerate_partitions};
use dkostka::tableaux::{count_bisst, double_kostka_charge};
use dkostka::{DoublePartition, IntPoly, Partition, RatFn};

fn poly() -> impl Strategy<Value = IntPoly> {
    (-3i32..4, prop::collection::vec(-9i128..10, 0..6)).prop_map(|(low, c)| IntPoly::from_coeffs(low, c))
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max, 0..=max).prop_map(Partition::from_unsorted)
}

fn double(max: usize) -> impl Strategy<Value = DoublePartition> {
    (1..=max).prop_flat_map(|n| {
        let all = enumerate_double_partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn pair_of_size(max: usize) -> impl Strategy<Value = (DoublePartition, DoublePartition)> {
    (1..=max).prop_flat_map(|n| {
        let all = enumerate_double_partitions(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

proptest! {
    #[test]
    fn poly_render_parse(p in poly()) {
        prop_assert_eq!(p.to_string().parse::<IntPoly>().unwrap(), p);
    }

    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn poly_exact_division(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn poly_eval_is_multiplicative(a in poly(), b in poly(), q in 2i128..6) {
        let a = a.shift(3);
        let b = b.shift(3);
        prop_assert_eq!((&a * &b).eval(q), a.eval(q) * b.eval(q));
        prop_assert_eq!(a.invert_variable().invert_variable(), a.clone());
        prop_assert_eq!(a.subs_power(2).root_substitution(2), Some(a));
    }

    #[test]
    fn ratfn_field_laws(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let x = RatFn::new(a.clone(), b.clone());
        let y = RatFn::new(b, a);
        prop_assert!((&x * &y).is_one());
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x + &y, &y + &x);
    }

    #[test]
    fn partition_notation_round_trip(p in partition(8)) {
        prop_assert_eq!(p.notation().parse::<Partition>().ok(), Some(p.clone()));
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn double_notation_round_trip(a in partition(4), b in partition(4)) {
        let d = DoublePartition::new(a, b);
        prop_assert_eq!(d.to_string().parse::<DoublePartition>().unwrap(), d);
    }

    #[test]
    fn double_dominance_is_a_partial_order((x, y) in pair_of_size(6)) {
        let le = double_dominance_le(&x, &y).unwrap();
        let ge = double_dominance_le(&y, &x).unwrap();
        prop_assert!(double_dominance_le(&x, &x).unwrap());
        prop_assert!(!(le && ge) || x == y);
        if le {
            prop_assert!(x.a_stat() >= y.a_stat() || x == y);
        }
    }

    #[test]
    fn kostka_column_counts_bitableaux(lam in double(5), seed in 0usize..100) {
        let parts = enumerate_partitions(lam.size());
        let mu2 = &parts[seed % parts.len()];
        let k = double_kostka_charge(&lam, mu2).unwrap();
        prop_assert_eq!(k.at_one(), count_bisst(&lam, mu2).unwrap() as i128);
    }

    #[test]
    fn modified_kostka_is_reciprocal((lam, mu) in pair_of_size(5)) {
        let k = double_kostka_matrix(lam.size());
        let kt = modified_double_kostka(&k);
        let back = kt.entry(&lam, &mu).invert_variable().shift(mu.a_stat() as i32);
        prop_assert_eq!(back, k.entry(&lam, &mu));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn conjugation_preserves_enhanced_type(lam in double(4), q in prop::sample::select(vec![2u32, 3, 5]), seed in any::<u64>()) {
        prop_assume!(lam.size() <= 3 || q <= 3);
        for p in sampled_representatives(&lam, q, 3, seed).unwrap() {
            prop_assert!(p.x.is_nilpotent());
            prop_assert_eq!(enhanced_type(&p).unwrap(), lam.clone());
        }
    }

    #[test]
    fn g_counts_cover_stable_subspaces_through_v(lam in double(3), q in prop::sample::select(vec![2u32, 3])) {
        let p = &sampled_representatives(&lam, q, 2, 5).unwrap()[1];
        let total: u64 = g_variety_counts(p).unwrap().values().sum();
        let direct = all_subspaces(lam.size(), q).unwrap().into_iter()
            .filter(|w| w.is_stable(&p.x) && w.contains(&p.v, q))
            .count() as u64;
        prop_assert_eq!(total, direct);
    }

    #[test]
    fn random_invertible_has_inverse(n in 1usize..5, q in prop::sample::select(vec![2u32, 3, 5]), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = FqMatrix::random_invertible(n, q, &mut rng);
        let h = g.inverse().unwrap();
        prop_assert_eq!(g.mul(&h), FqMatrix::identity(n, q));
        prop_assert_eq!(g.rank(), n);
    }
}
