mod common;

use std::collections::BTreeSet;

use icdfa::oracle::{brute_force_icdfa, DEFAULT_BUDGET};
use icdfa::{
    count_icdfa, enumerate_flags, fillings, first_string, generate::strings_with_flags,
    next_string, CanonicalString, Generator,
};

fn shapes_with_functions_at_most(limit: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=10usize {
        for k in 1..=12usize {
            let f = (n as f64).powi((n * k) as i32);
            if f <= limit as f64 && !(n == 1 && k > 4) {
                out.push((n, k));
            }
        }
    }
    out
}

#[test]
fn two_two_sorted_list() {
    let want: Vec<Vec<usize>> = [
        "0100", "0101", "0110", "0111", "1000", "1001", "1010", "1011", "1100", "1101", "1110",
        "1111",
    ]
    .iter()
    .map(|s| s.bytes().map(|b| (b - b'0') as usize).collect())
    .collect();
    let got: Vec<Vec<usize>> = Generator::new(2, 2)
        .unwrap()
        .map(|s| s.into_cells())
        .collect();
    assert_eq!(got, want);
}

#[test]
fn order_matches_generate_and_test() {
    for (n, k) in [
        (1, 1),
        (1, 3),
        (2, 1),
        (2, 2),
        (2, 3),
        (3, 1),
        (3, 2),
        (2, 4),
        (4, 2),
        (3, 3),
    ] {
        let want = common::sorted_valid_strings(n, k);
        let got: Vec<CanonicalString> = Generator::new(n, k).unwrap().collect();
        assert_eq!(got, want, "({n}, {k})");
        assert_eq!(first_string(n, k).unwrap(), want[0]);
        for w in want.windows(2) {
            assert_eq!(next_string(&w[0]).unwrap().as_ref(), Some(&w[1]));
        }
        assert_eq!(next_string(want.last().unwrap()).unwrap(), None);
    }
}

#[test]
fn generator_set_equals_oracle_set() {
    for (n, k) in shapes_with_functions_at_most(1_000_000) {
        let oracle = brute_force_icdfa(n, k, DEFAULT_BUDGET).unwrap();
        assert!(oracle.report.mismatches.is_empty());
        let generated: BTreeSet<CanonicalString> = Generator::new(n, k).unwrap().collect();
        assert_eq!(generated, oracle.strings, "({n}, {k})");
    }
}

#[test]
fn emission_count_equals_formula() {
    for (n, k) in shapes_with_functions_at_most(10_000_000) {
        let mut g = Generator::new(n, k).unwrap();
        while g.advance() {}
        assert_eq!(count_icdfa(n, k).unwrap(), g.emitted(), "({n}, {k})");
        assert_eq!(g.candidates_touched(), g.emitted());
    }
}

#[test]
fn flag_blocks_partition_the_strings() {
    for (n, k) in [(3, 2), (2, 3), (4, 2), (3, 3)] {
        let mut all = BTreeSet::new();
        for fs in enumerate_flags(n, k).unwrap() {
            let block: Vec<_> = strings_with_flags(&fs).collect();
            assert_eq!(fillings(&fs), block.len() as u64);
            for s in block {
                assert!(s.is_valid());
                assert!(all.insert(s));
            }
        }
        let generated: BTreeSet<_> = Generator::new(n, k).unwrap().collect();
        assert_eq!(all, generated);
    }
}

#[test]
fn flag_enumeration_is_sorted_and_complete() {
    for (n, k) in [(3, 2), (4, 2), (3, 3), (5, 2)] {
        let flags: Vec<Vec<usize>> = enumerate_flags(n, k)
            .unwrap()
            .map(|f| f.flags().to_vec())
            .collect();
        assert!(flags.windows(2).all(|w| w[0] < w[1]));
        let from_strings: BTreeSet<Vec<usize>> = Generator::new(n, k)
            .unwrap()
            .map(|s| s.flags().unwrap().flags().to_vec())
            .collect();
        assert_eq!(flags, from_strings.into_iter().collect::<Vec<_>>());
    }
}
