use proptest::prelude::*;

use class_spectrum::divgraph::{height, is_chain, Convention};
use class_spectrum::BigNat;
use class_spectrum_oracle::chain_height_bruteforce;

fn nats(v: &[u64]) -> Vec<BigNat> {
    v.iter().map(|&x| BigNat::from(x)).collect()
}

fn vertices(v: &[u64]) -> usize {
    height(&nats(v), Convention::Vertices).unwrap().height
}

// small divisor-rich values so chains actually occur
fn theta(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(
        (0u32..6, 0u32..4, 0u32..3, 0u32..2)
            .prop_map(|(a, b, c, d)| 2u64.pow(a) * 3u64.pow(b) * 5u64.pow(c) * 7u64.pow(d)),
        0..=max_len,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn equals_bruteforce(v in theta(12)) {
        prop_assert_eq!(vertices(&v), chain_height_bruteforce(&v));
    }

    #[test]
    fn witness_is_a_chain_of_inputs(v in theta(30)) {
        let r = height(&nats(&v), Convention::Vertices).unwrap();
        prop_assert!(is_chain(&r.witness));
        prop_assert_eq!(r.witness.len(), r.height);
        prop_assert!(r.witness.iter().all(|w| v.contains(&u64::try_from(w).unwrap())));
        let e = height(&nats(&v), Convention::Edges).unwrap();
        prop_assert_eq!(e.height, r.height.saturating_sub(1));
    }

    #[test]
    fn scaling_invariant(v in theta(20), c in 1u64..50) {
        let scaled: Vec<u64> = v.iter().map(|x| x * c).collect();
        prop_assert_eq!(vertices(&v), vertices(&scaled));
    }

    #[test]
    fn monotone_in_vertex_set(a in theta(15), b in theta(15)) {
        let union: Vec<u64> = a.iter().chain(&b).copied().collect();
        prop_assert!(vertices(&a) <= vertices(&union));
    }

    #[test]
    fn doubling_bound(v in prop::collection::vec(1u64..100_000, 1..40)) {
        let max = *v.iter().max().unwrap();
        prop_assert!(vertices(&v) as u32 <= 1 + max.ilog2());
    }
}
