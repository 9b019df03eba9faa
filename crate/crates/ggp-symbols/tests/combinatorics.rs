use ggp_symbols::combinatorics::*;
use proptest::prelude::*;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn s(text: &str) -> Symbol {
    text.parse().unwrap()
}

fn bp(upper: &[u32], lower: &[u32]) -> Bipartition {
    Bipartition::new(p(upper), p(lower))
}

#[test]
fn transpose_examples() {
    assert_eq!(partition_transpose(&p(&[])), p(&[]));
    assert_eq!(partition_transpose(&p(&[2, 2])), p(&[2, 2]));
    assert_eq!(partition_transpose(&p(&[3, 1])), p(&[2, 1, 1]));
}

#[test]
fn close_dominance_examples() {
    assert!(close_dominates(&p(&[1]), &p(&[1])));
    assert!(!close_dominates(&p(&[]), &p(&[2])));
    assert!(close_dominates(&p(&[3, 1]), &p(&[3, 2])));
}

#[test]
fn rank_examples() {
    assert_eq!(symbol_rank(&s("[|2,1,0]")), 2);
    assert_eq!(symbol_rank(&s("[4,3,2,1,0|]")), 6);
    assert_eq!(symbol_rank(&s("[|]")), 0);
}

#[test]
fn defect_examples() {
    assert_eq!(symbol_defect(&s("[4,3,2,1,0|]")), 5);
    assert_eq!(symbol_defect(&s("[|2,1,0]")), -3);
    assert_eq!(symbol_defect(&s("[|]")), 0);
}

#[test]
fn normalize_examples() {
    assert_eq!(symbol_normalize(vec![1, 0], vec![0]).unwrap(), s("[0|]"));
    assert_eq!(symbol_normalize(vec![], vec![]).unwrap(), s("[|]"));
    let already = symbol_normalize(vec![3, 1], vec![2]).unwrap();
    assert_eq!(already.row_a(), &[3, 1]);
    assert_eq!(already.row_b(), &[2]);
}

#[test]
fn normalize_rejects_bad_rows() {
    assert!(symbol_normalize(vec![1, 1], vec![]).is_err());
    assert!(symbol_normalize(vec![0, 2], vec![]).is_err());
}

#[test]
fn transpose_symbol_examples() {
    assert_eq!(symbol_transpose(&s("[1|0]")), s("[0|1]"));
    assert_eq!(symbol_transpose(&s("[|2,1,0]")), s("[2,1,0|]"));
    assert_eq!(symbol_transpose(&s("[2,0|1]")), s("[1|2,0]"));
}

#[test]
fn upsilon_examples() {
    assert_eq!(upsilon(&s("[2,0|1]")), bp(&[1], &[1]));
    assert_eq!(upsilon(&s("[4,3,2,1,0|]")), bp(&[], &[]));
    assert_eq!(upsilon(&s("[|]")), bp(&[], &[]));
}

#[test]
fn upsilon_inverse_examples() {
    assert_eq!(upsilon_inverse(&bp(&[1], &[1]), 1), s("[2,0|1]"));
    assert_eq!(upsilon_inverse(&bp(&[], &[]), -3), s("[|2,1,0]"));
    assert_eq!(upsilon_inverse(&bp(&[], &[]), 0), s("[|]"));
}

#[test]
fn enumerate_examples() {
    assert_eq!(
        enumerate_symbols(1, SymbolFamily::SpUnipotent),
        vec![s("[1|]"), s("[1,0|1]")]
    );
    assert_eq!(enumerate_symbols(2, SymbolFamily::SpUnipotent).len(), 6);
    assert_eq!(enumerate_symbols(0, SymbolFamily::OEvenPlus), vec![s("[|]")]);
}

#[test]
fn enumeration_is_sorted_and_in_family() {
    for family in SymbolFamily::ALL {
        for n in 0..=5 {
            let all = enumerate_symbols(n, family);
            for w in all.windows(2) {
                assert!(w[0].enumeration_key() < w[1].enumeration_key());
            }
            for x in &all {
                assert_eq!(x.rank(), n);
                assert!(family.admits(x.defect()));
            }
        }
    }
}

/// Independent count of bipartitions via the product formula for the
/// generating function of pairs of partitions.
fn bipartition_count(n: usize) -> u64 {
    let mut parts = vec![0u64; n + 1];
    parts[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            parts[m] += parts[m - k];
        }
    }
    (0..=n).map(|a| parts[a] * parts[n - a]).sum()
}

#[test]
fn fixed_defect_counts_match_bipartitions() {
    for n in 0..=8u32 {
        for beta in (-12i32..=12).filter(|b| b.rem_euclid(4) != 3) {
            let off = defect_offset(beta);
            let count = enumerate_symbols(n, SymbolFamily::for_defect(beta))
                .into_iter()
                .filter(|x| x.defect() == beta)
                .count() as u64;
            let expected = if off > n { 0 } else { bipartition_count((n - off) as usize) };
            assert_eq!(count, expected, "n={n} beta={beta}");
        }
    }
}

#[test]
fn upsilon_round_trip_exhaustive() {
    for family in SymbolFamily::ALL {
        for n in 0..=8 {
            for x in enumerate_symbols(n, family) {
                assert_eq!(upsilon_inverse(&upsilon(&x), x.defect()), x);
                assert_eq!(upsilon(&x.transpose()), upsilon(&x).swap());
            }
        }
    }
}

#[test]
fn symbol_text_round_trip() {
    for text in ["[4,3,2,1,0|]", "[|2,1,0]", "[|]", "[2,0|1]"] {
        assert_eq!(s(text).to_string(), text);
    }
    let err = "[2,0|1".parse::<Symbol>().unwrap_err();
    assert!(matches!(err, CombinatoricsError::Parse { offset: 6, .. }), "{err:?}");
    let err = "[1,1|]".parse::<Symbol>().unwrap_err();
    assert!(matches!(err, CombinatoricsError::NotStrictlyDecreasing { .. }));
}

#[test]
fn bipartition_text_round_trip() {
    let x: Bipartition = "([2,1],[])".parse().unwrap();
    assert_eq!(x, bp(&[2, 1], &[]));
    assert_eq!(x.to_string(), "([2,1],[])");
}

fn raw_row() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::btree_set(0u32..12, 0..6).prop_map(|set| set.into_iter().rev().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn rank_and_defect_are_class_invariants(a in raw_row(), b in raw_row(), shifts in 0usize..4) {
        let mut a2 = a.clone();
        let mut b2 = b.clone();
        for _ in 0..shifts {
            a2 = a2.iter().map(|x| x + 1).chain([0]).collect();
            b2 = b2.iter().map(|x| x + 1).chain([0]).collect();
        }
        let reduced = symbol_normalize(a.clone(), b.clone()).unwrap();
        let shifted = symbol_normalize(a2.clone(), b2.clone()).unwrap();
        prop_assert_eq!(&reduced, &shifted);
        prop_assert_eq!(raw_rank(&a2, &b2), reduced.rank() as i64);
        prop_assert_eq!(a2.len() as i32 - b2.len() as i32, reduced.defect());
    }

    #[test]
    fn normalize_is_idempotent(a in raw_row(), b in raw_row()) {
        let once = symbol_normalize(a, b).unwrap();
        let twice = symbol_normalize(once.row_a().to_vec(), once.row_b().to_vec()).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn transpose_is_an_involution(a in raw_row(), b in raw_row()) {
        let x = symbol_normalize(a, b).unwrap();
        prop_assert_eq!(x.transpose().transpose(), x.clone());
        prop_assert_eq!(x.transpose().rank(), x.rank());
        prop_assert_eq!(x.transpose().defect(), -x.defect());
    }

    #[test]
    fn partition_transpose_is_an_involution(mut parts in proptest::collection::vec(1u32..8, 0..8)) {
        parts.sort_unstable_by(|x, y| y.cmp(x));
        let x = Partition::new(parts).unwrap();
        prop_assert_eq!(x.transpose().transpose(), x.clone());
        prop_assert_eq!(x.transpose().size(), x.size());
    }

    #[test]
    fn close_dominance_bounds_size(mut l in proptest::collection::vec(0u32..6, 0..6), mut m in proptest::collection::vec(0u32..6, 0..6)) {
        l.sort_unstable_by(|x, y| y.cmp(x));
        m.sort_unstable_by(|x, y| y.cmp(x));
        let (l, m) = (Partition::new(l).unwrap(), Partition::new(m).unwrap());
        if close_dominates(&l, &m) {
            prop_assert!(m.size() - m.len() as u32 <= l.size());
            prop_assert!(l.size() <= m.size());
        }
    }
}

/// The rank formula evaluated on arbitrary (not necessarily reduced) rows.
fn raw_rank(a: &[u32], b: &[u32]) -> i64 {
    let total: i64 = a.iter().chain(b).map(|&x| x as i64).sum();
    let len = (a.len() + b.len()) as i64;
    total - ((len - 1) * (len - 1)).div_euclid(4)
}
