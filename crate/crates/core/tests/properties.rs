mod common;

use icdfa::{
    canonicalize, enumerate_flags, from_string, isomorphic, next_string, normal_form, Dfa,
    DfaStructure, Ranker,
};
use proptest::prelude::*;

fn dfa_strategy(max_n: usize, max_k: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_n, 1..=max_k).prop_flat_map(|(n, k)| {
        (
            proptest::collection::vec(0..n, n * k),
            0..n,
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(delta, init, fin)| {
                let s = DfaStructure::new(n, k, delta, init).unwrap();
                let finals = (0..n).filter(|&q| fin[q]);
                Dfa::new(s, finals).unwrap()
            })
    })
}

fn with_permutation(max_n: usize, max_k: usize) -> impl Strategy<Value = (Dfa, Vec<usize>)> {
    dfa_strategy(max_n, max_k).prop_flat_map(|d| {
        let n = d.structure().n();
        (Just(d), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn canonical_output_is_valid((d, _) in with_permutation(7, 3)) {
        let (s, m) = canonicalize(d.structure());
        prop_assert!(s.is_valid());
        prop_assert_eq!(s.n(), m.reachable_count());
        prop_assert_eq!(m.get(d.structure().initial()), Some(0));
        let reach = d.structure().reachable();
        for (q, &r) in reach.iter().enumerate() {
            prop_assert_eq!(m.get(q).is_some(), r);
        }
    }

    #[test]
    fn relabeling_does_not_change_the_string((d, perm) in with_permutation(7, 3)) {
        let r = d.relabel(&perm).unwrap();
        let (a, ma) = canonicalize(d.structure());
        let (b, mb) = canonicalize(r.structure());
        prop_assert_eq!(&a, &b);
        for (q, &p) in perm.iter().enumerate() {
            prop_assert_eq!(ma.get(q), mb.get(p));
        }
        prop_assert_eq!(normal_form(&d), normal_form(&r));
        prop_assert!(isomorphic(&d, &r));
    }

    #[test]
    fn isomorphism_agrees_with_bijection_search(a in dfa_strategy(4, 2), b in dfa_strategy(4, 2)) {
        prop_assert_eq!(isomorphic(&a, &b), common::brute_isomorphic(&a, &b));
        prop_assert!(isomorphic(&a, &a));
        prop_assert_eq!(isomorphic(&a, &b), isomorphic(&b, &a));
    }

    #[test]
    fn isomorphism_is_transitive((d, p) in with_permutation(6, 2), q in Just(()).prop_flat_map(|_| Just((0..6).collect::<Vec<usize>>()).prop_shuffle())) {
        let n = d.structure().n();
        let q: Vec<usize> = q.into_iter().filter(|&x| x < n).collect();
        let e = d.relabel(&p).unwrap();
        let f = e.relabel(&q).unwrap();
        prop_assert!(isomorphic(&d, &e) && isomorphic(&e, &f) && isomorphic(&d, &f));
    }

    #[test]
    fn string_round_trip(n in 1usize..8, k in 1usize..4, seed in any::<u64>()) {
        let s = icdfa::sample_uniform(n, k, seed).unwrap();
        let (t, m) = canonicalize(&from_string(&s).unwrap());
        prop_assert_eq!(&t, &s);
        prop_assert!(m.is_identity());
        prop_assert!(from_string(&s).unwrap().is_initially_connected());
    }

    #[test]
    fn rank_bijection_and_successor(n in 1usize..12, k in 1usize..5, seed in any::<u64>()) {
        let ranker = Ranker::new(n, k).unwrap();
        let mut sampler = icdfa::Sampler::new(n, k, seed).unwrap();
        let r = sampler.draw_rank();
        let s = ranker.unrank(&r).unwrap();
        prop_assert!(s.is_valid());
        prop_assert_eq!(ranker.rank(&s).unwrap(), r.clone());
        match next_string(&s).unwrap() {
            Some(t) => {
                prop_assert!(s < t);
                prop_assert_eq!(ranker.rank(&t).unwrap(), r + 1u64.into());
            }
            None => prop_assert_eq!(r + 1u64.into(), ranker.total()),
        }
    }

    #[test]
    fn flags_respect_bounds(n in 1usize..10, k in 1usize..4, seed in any::<u64>()) {
        let s = icdfa::sample_uniform(n, k, seed).unwrap();
        let fs = s.flags().unwrap();
        let f = fs.flags();
        prop_assert_eq!(f.len(), n - 1);
        for (idx, &pos) in f.iter().enumerate() {
            let label = idx + 1;
            prop_assert!(pos < k * label);
            prop_assert!(pos + 1 >= label);
            if idx > 0 { prop_assert!(f[idx - 1] < pos); }
            prop_assert_eq!(s.cells()[pos], label);
        }
        prop_assert_eq!(s.validate(), s.validate());
        prop_assert!(enumerate_flags(n, k).unwrap().any(|g| g == fs));
    }

    #[test]
    fn connected_structures_keep_all_states((d, _) in with_permutation(6, 3)) {
        if d.structure().is_initially_connected() {
            prop_assert_eq!(canonicalize(d.structure()).1.reachable_count(), d.structure().n());
        }
    }
}
