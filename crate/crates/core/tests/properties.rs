use num_bigint::BigUint;
use proptest::prelude::*;

use youngbound::characters::{character_branching, character_mn, character_value_in_order};
use youngbound::decomposition::{build_thick_hook_decomposition, stairs_decomposition, validate_decomposition};
use youngbound::dimensions::{dim_hlf, skew_dim_det, skew_dim_oracle, SkewShape};
use youngbound::excited::{enumerate_excited, excited_sum, naruse_ratio, skew_dim_naruse};
use youngbound::{parse_cycle_type, parse_partition, CycleType, Partition};

/// Parts of a composition of `n`, read off from the cut flags.
fn composition(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<bool>(), n.saturating_sub(1)).prop_map(move |cuts| {
        let mut parts = if n == 0 { vec![] } else { vec![1] };
        for cut in cuts {
            if cut {
                parts.push(1);
            } else {
                *parts.last_mut().unwrap() += 1;
            }
        }
        parts
    })
}

/// Partitions of size at most `max`.
fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(composition).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn nonempty(max: usize) -> impl Strategy<Value = Partition> {
    partition(max).prop_filter("empty", |p| !p.is_empty())
}

/// A shape together with one of its subpartitions.
fn skew(max: usize) -> impl Strategy<Value = (Partition, Partition)> {
    partition(max).prop_flat_map(|lam| {
        let subs = lam.subpartitions();
        (Just(lam), prop::sample::select(subs))
    })
}

/// A shape with a cycle type of the same size, parts in arbitrary order.
fn shape_and_class(max: usize) -> impl Strategy<Value = (Partition, CycleType)> {
    nonempty(max).prop_flat_map(|lam| {
        let alpha = composition(lam.size()).prop_map(|c| CycleType::new(c).unwrap());
        (Just(lam), alpha)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(p in partition(30)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
        prop_assert_eq!(p.conjugate().max_hook(), p.max_hook());
        prop_assert_eq!(dim_hlf(&p.conjugate()), dim_hlf(&p));
    }

    #[test]
    fn display_round_trips(p in partition(30)) {
        prop_assert_eq!(parse_partition(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn cycle_type_display_round_trips((_, a) in shape_and_class(12)) {
        prop_assert_eq!(parse_cycle_type(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn skew_dimension_routes_agree((lam, mu) in skew(12)) {
        let shape = SkewShape::new(lam.clone(), mu.clone()).unwrap();
        let det = skew_dim_det(&shape);
        prop_assert_eq!(&det, &skew_dim_naruse(&lam, &mu).unwrap());
        prop_assert_eq!(&det, &skew_dim_oracle(&shape).unwrap());
    }

    #[test]
    fn excited_sum_is_at_least_one_term((lam, mu) in skew(14)) {
        let diagrams = enumerate_excited(&lam, &mu).unwrap();
        prop_assert!(!diagrams.is_empty());
        for e in &diagrams {
            prop_assert_eq!(e.cells().len(), mu.size());
            prop_assert!(e.cells().iter().all(|&c| lam.contains_cell(c)));
        }
        let r = naruse_ratio(&lam, &mu).unwrap();
        prop_assert!(r > num_rational::BigRational::from_integer(0.into()));
        prop_assert!(excited_sum(&lam, &mu).unwrap() >= BigUint::from(1u32));
    }

    #[test]
    fn character_routes_agree((lam, alpha) in shape_and_class(10)) {
        prop_assume!(!alpha.is_identity());
        let mn = character_mn(&lam, &alpha).unwrap();
        prop_assert_eq!(&mn.value, &character_branching(&lam, &alpha).unwrap().value);
        prop_assert_eq!(&mn.value, &character_value_in_order(&lam, &alpha).unwrap());
        prop_assert!(num_traits::Signed::abs(&mn.value) <= num_bigint::BigInt::from(mn.dimension.clone()));
    }

    #[test]
    fn conjugate_character_picks_up_the_sign((lam, alpha) in shape_and_class(10)) {
        let sign = if (alpha.size() - alpha.cycle_count()) % 2 == 0 { 1 } else { -1 };
        let v = character_mn(&lam, &alpha).unwrap().value;
        prop_assert_eq!(character_mn(&lam.conjugate(), &alpha).unwrap().value, v * sign);
    }

    #[test]
    fn thick_hook_windows_hold(lam in nonempty(24), extra in 0usize..8) {
        let a = lam.max_hook() + extra;
        prop_assume!(a <= lam.size());
        let d = build_thick_hook_decomposition(&lam, a).unwrap();
        prop_assert!(validate_decomposition(&d).is_ok());
        prop_assert_eq!(d.sizes().iter().sum::<usize>(), lam.size());
    }

    #[test]
    fn stairs_partition_the_diagram(lam in partition(30)) {
        let s = stairs_decomposition(&lam);
        prop_assert_eq!(s.lengths().iter().sum::<usize>(), lam.size());
        prop_assert!(s.len() <= 2 * lam.diagonal_length());
    }
}
