use greedyconv::density::density_valuation_class;
use greedyconv::ring::{ArithFn, Convolution, ConvolutionRule};
use greedyconv::{ssift, GreedyTable};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn small_fn(n_max: u64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, n_max as usize)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Parts are disjoint, cover 1..=n_max, and are progressions m, 2m, ...
    #[test]
    fn parts_partition_the_range(d in 1usize..=9, n_max in 1u64..3000) {
        let t = GreedyTable::build(d, n_max).unwrap();
        let mut seen = vec![0u8; n_max as usize + 1];
        for part in t.parts() {
            prop_assert!(part.size >= 1 && part.size <= d);
            for (k, e) in part.elements().enumerate() {
                prop_assert_eq!(e, (k as u64 + 1) * part.leader);
                if e <= n_max {
                    seen[e as usize] += 1;
                }
            }
        }
        prop_assert!(seen[1..].iter().all(|&c| c == 1));
    }

    #[test]
    fn heights_are_consistent(d in 1usize..=9, n_max in 1u64..3000) {
        let t = GreedyTable::build(d, n_max).unwrap();
        for n in 1..=n_max {
            let h = t.height(n).unwrap();
            prop_assert!(h >= 1 && h <= d);
            prop_assert_eq!(n % h as u64, 0);
            prop_assert!(t.is_primitive(n / h as u64).unwrap());
            prop_assert_eq!(t.is_primitive(n).unwrap(), h == 1);
        }
    }

    // Building further never changes earlier heights.
    #[test]
    fn prefix_stable(d in 1usize..=8, a in 1u64..1500, extra in 0u64..1500) {
        let small = GreedyTable::build(d, a).unwrap();
        let big = GreedyTable::build(d, a + extra).unwrap();
        prop_assert_eq!(small.heights(), &big.heights()[..small.heights().len()]);
    }

    #[test]
    fn sift_basic_invariants(set in prop::collection::vec(2u64..60, 0..5), n_max in 1u64..2000) {
        let r = ssift(&set, n_max).unwrap();
        prop_assert!(r.contains(1));
        for &a in &set {
            prop_assert!(a > n_max || !r.contains(a));
        }
        for n in 2..=n_max {
            let divisible = set.iter().any(|&a| n % a == 0);
            if !divisible {
                prop_assert!(r.contains(n));
            }
            // Recursive definition, cofactor b >= 1.
            let sifted = set.iter().any(|&a| n % a == 0 && r.contains(n / a));
            prop_assert_eq!(r.contains(n), !sifted);
        }
        let mut shuffled = set.clone();
        shuffled.reverse();
        shuffled.extend(set.iter().copied());
        let again = ssift(&shuffled, n_max).unwrap();
        prop_assert_eq!(again.bitmap(), r.bitmap());
    }

    #[test]
    fn convolution_ring_laws(
        d in 1usize..=6,
        f in small_fn(60),
        g in small_fn(60),
        h in small_fn(60),
    ) {
        let conv = Convolution::new(ConvolutionRule::greedy(d).unwrap(), 60).unwrap();
        let (f, g, h) = (ArithFn::from_integers(&f), ArithFn::from_integers(&g), ArithFn::from_integers(&h));
        let fg = conv.convolve(&f, &g).unwrap();
        prop_assert_eq!(&fg, &conv.convolve(&g, &f).unwrap());
        prop_assert_eq!(
            conv.convolve(&fg, &h).unwrap(),
            conv.convolve(&f, &conv.convolve(&g, &h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            conv.convolve(&f, &(&g + &h)).unwrap(),
            &fg + &conv.convolve(&f, &h).unwrap()
        );
        prop_assert_eq!(conv.convolve(&f, &ArithFn::indicator(1, 60)).unwrap(), f);
    }

    #[test]
    fn mobius_inverts_zeta(d in 1usize..=8) {
        let conv = Convolution::new(ConvolutionRule::greedy(d).unwrap(), 500).unwrap();
        let e1 = conv.convolve(&ArithFn::zeta(500), &conv.mobius()).unwrap();
        prop_assert_eq!(e1, ArithFn::indicator(1, 500));
    }

    #[test]
    fn valuation_classes_sum_to_one(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), m in 2u64..8) {
        let total: BigRational = (0..m).map(|r| density_valuation_class(p, m, r).unwrap()).sum();
        prop_assert_eq!(total, BigRational::one());
    }
}
