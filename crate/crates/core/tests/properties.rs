use proptest::prelude::*;

use quantale_ideals::classify::RadicalAlgorithm;
use quantale_ideals::generators::{FinitePoset, FiniteTopology, Generator};
use quantale_ideals::io::{parse_quant, write_quant};
use quantale_ideals::FiniteQuantale;

/// Lower sets of a random poset on up to 5 points (relations only go upward in
/// index, so there are no cycles), opens of a random topology on up to 4
/// points, or a chain.
fn quantale() -> impl Strategy<Value = FiniteQuantale> {
    let poset = (1usize..=5, proptest::collection::vec(any::<bool>(), 10)).prop_map(|(k, bits)| {
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|x| (x + 1..k).map(move |y| (x, y))).collect();
        let rel: Vec<_> = pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
        let labels = (1..=k).map(|i| i.to_string()).collect();
        Generator::LowerSets(FinitePoset::new(labels, &rel).unwrap()).generate().unwrap()
    });
    let topology = (1usize..=4, proptest::collection::vec(1u64..16, 0..4)).prop_map(|(k, sets)| {
        let full = (1u64 << k) - 1;
        let t = FiniteTopology::generated_by(k, sets.into_iter().map(|s| s & full)).unwrap();
        Generator::Opens(t).generate().unwrap()
    });
    let chain = (1usize..=9, any::<bool>()).prop_map(|(n, luk)| {
        let g = if luk { Generator::Lukasiewicz(n) } else { Generator::Chain(n) };
        g.generate().unwrap()
    });
    prop_oneof![poset, topology, chain]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip_is_stable(q in quantale()) {
        let text = write_quant(&q);
        let back = parse_quant(&text).unwrap();
        prop_assert_eq!(&back, &q);
        prop_assert_eq!(write_quant(&back), text);
    }

    #[test]
    fn generated_instances_are_quantales(q in quantale()) {
        prop_assert!(q.check_axioms().all_ok());
    }

    #[test]
    fn every_ideal_is_principal(q in quantale()) {
        let ideals = q.enumerate_ideals().unwrap();
        prop_assert_eq!(ideals.len(), q.size());
        for i in &ideals {
            prop_assert_eq!(&q.principal(q.apex(i)), i);
        }
    }

    #[test]
    fn radical_algorithms_agree(q in quantale()) {
        for i in q.enumerate_ideals().unwrap() {
            let r: Vec<_> = RadicalAlgorithm::ALL.iter().map(|&a| q.radical(&i, a).unwrap()).collect();
            prop_assert!(r.windows(2).all(|w| w[0] == w[1]));
            prop_assert!(i.is_subset(&r[0]));
        }
    }

    #[test]
    fn residual_is_right_adjoint_to_product(q in quantale()) {
        let ideals = q.enumerate_ideals().unwrap();
        for i in &ideals {
            for j in &ideals {
                let res = q.residual(i, j).unwrap();
                for k in &ideals {
                    let below = q.product_ideals(k, j).unwrap().is_subset(i);
                    prop_assert_eq!(below, k.is_subset(&res));
                }
                prop_assert!(q.product_ideals(i, j).unwrap().is_subset(&q.meet_ideals(i, j).unwrap()));
            }
        }
    }

    #[test]
    fn primes_are_semiprime_and_primary(q in quantale()) {
        for p in q.spectrum().unwrap() {
            prop_assert!(q.is_semiprime(&p).unwrap());
            prop_assert!(q.is_primary(&p).unwrap());
            prop_assert!(q.is_radical_ideal(&p).unwrap());
        }
    }

    #[test]
    fn primary_decompositions_meet_to_their_target(q in quantale()) {
        for i in q.proper_ideals().unwrap() {
            if let Ok(d) = q.primary_decomposition(&i) {
                prop_assert_eq!(q.meet_family(&d.components).unwrap(), i.clone());
                for (c, p) in d.components.iter().zip(&d.radicals) {
                    prop_assert!(q.is_p_primary(c, p).unwrap());
                }
                prop_assert!(q.is_minimal_decomposition(&d).unwrap());
            }
        }
    }
}
