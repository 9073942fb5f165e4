use num_bigint::BigUint;
use spinal::{
    binomial, count_c1_classes, count_c2_classes, count_nlsctc, count_nlstc,
    count_nlstc_via_marked, count_pair_partitions, count_stc, count_stc_naive,
    count_stc_via_lemma, count_stc_via_marked, factorial, labeled_marked_tree_count,
    unlabeled_marked_tree_count, ExactCount, Provenance,
};

fn val(c: ExactCount) -> u64 {
    u64::try_from(c.value).unwrap()
}

#[test]
fn factorial_and_binomial_basics() {
    assert_eq!(factorial(0), BigUint::from(1u32));
    assert_eq!(factorial(1), BigUint::from(1u32));
    assert_eq!(factorial(5), BigUint::from(120u32));
    assert_eq!(factorial(10), BigUint::from(3628800u32));
    assert_eq!(binomial(0, 0), BigUint::from(1u32));
    assert_eq!(binomial(5, 2), BigUint::from(10u32));
    assert_eq!(binomial(5, 5), BigUint::from(1u32));
    assert_eq!(binomial(3, 5), BigUint::from(0u32));
    assert_eq!(binomial(10, 4), BigUint::from(210u32));
}

#[test]
fn unlabeled_network_table() {
    let expected: &[(u32, &[u64])] = &[
        (1, &[1]),
        (2, &[1, 1]),
        (3, &[1, 3, 3]),
        (4, &[1, 6, 15, 15]),
        (5, &[1, 10, 45, 105]),
    ];
    for &(n, row) in expected {
        for (k, &want) in row.iter().enumerate() {
            assert_eq!(val(count_nlstc(n, k as u32)), want, "nlstc({n},{k})");
        }
        assert_eq!(val(count_nlstc(n, n)), 0, "nlstc({n},{n})");
    }
}

#[test]
fn labeled_network_table() {
    let expected: &[(u32, &[u64])] = &[
        (1, &[1]),
        (2, &[1, 2]),
        (3, &[3, 15, 18]),
        (4, &[12, 108, 324, 360]),
        (5, &[60, 840, 4500, 11700, 12600]),
    ];
    for &(n, row) in expected {
        for (k, &want) in row.iter().enumerate() {
            assert_eq!(val(count_stc(n, k as u32)), want, "stc({n},{k})");
        }
    }
    assert_eq!(val(count_stc(0, 0)), 0);
    assert_eq!(val(count_stc(4, 4)), 0);
}

#[test]
fn caterpillar_table_matches_low_word_classes() {
    assert_eq!(val(count_nlsctc(3, 1)), 4);
    assert_eq!(val(count_nlsctc(5, 2)), 84);
    for n in 1..=9u32 {
        for k in 0..n {
            assert_eq!(
                count_nlsctc(n, k).value,
                count_c2_classes(n - 1, k).value,
                "nlsctc({n},{k})"
            );
        }
        assert_eq!(val(count_nlsctc(n, n)), 0);
    }
}

#[test]
fn word_class_counts() {
    assert_eq!(val(count_c1_classes(0, 0)), 1);
    assert_eq!(val(count_c1_classes(2, 1)), 3);
    assert_eq!(val(count_c1_classes(4, 2)), 45);
    assert_eq!(val(count_c1_classes(6, 3)), 1260);
    assert_eq!(val(count_c1_classes(7, 4)), 17325);
    assert_eq!(val(count_c2_classes(0, 0)), 1);
    assert_eq!(val(count_c2_classes(2, 1)), 4);
    assert_eq!(val(count_c2_classes(4, 2)), 84);
    assert_eq!(val(count_c2_classes(5, 2)), 252);
    assert_eq!(val(count_c1_classes(3, 4)), 0);
    assert_eq!(val(count_c2_classes(3, 4)), 0);
    for n in 0..=8u32 {
        for k in 0..=n {
            assert_eq!(
                count_c1_classes(n, k).value,
                count_pair_partitions(n, k).value
            );
            assert!(count_c1_classes(n, k).value <= count_c2_classes(n, k).value);
        }
    }
}

#[test]
fn unlabeled_counts_equal_high_word_classes() {
    for n in 1..=9u32 {
        for k in 0..n {
            assert_eq!(
                count_nlstc(n, k).value,
                count_c1_classes(n - 1, k).value,
                "nlstc({n},{k}) vs word classes"
            );
        }
    }
}

#[test]
fn marked_tree_tables() {
    let labeled: &[(u32, u32, u64)] = &[
        (1, 1, 1),
        (2, 1, 2),
        (2, 2, 2),
        (3, 1, 6),
        (3, 2, 18),
        (3, 3, 18),
        (4, 1, 24),
        (4, 2, 144),
        (4, 3, 360),
        (4, 4, 360),
    ];
    for &(n, k, want) in labeled {
        assert_eq!(val(labeled_marked_tree_count(n, k)), want, "s({n},{k})");
    }
    let unlabeled: &[(u32, u32, u64)] = &[
        (2, 2, 1),
        (3, 2, 3),
        (3, 3, 3),
        (4, 2, 6),
        (4, 3, 15),
        (4, 4, 15),
    ];
    for &(n, k, want) in unlabeled {
        assert_eq!(val(unlabeled_marked_tree_count(n, k)), want, "d({n},{k})");
    }
    for n in 1..=10u32 {
        assert_eq!(labeled_marked_tree_count(n, 1).value, factorial(n));
        assert_eq!(val(unlabeled_marked_tree_count(n, 1)), 1);
        assert_eq!(val(labeled_marked_tree_count(n, 0)), 0);
        assert_eq!(val(labeled_marked_tree_count(n, n + 1)), 0);
        for k in 1..=n {
            assert_eq!(
                labeled_marked_tree_count(n, k).value,
                unlabeled_marked_tree_count(n, k).value * factorial(n),
                "s({n},{k}) = n! d({n},{k})"
            );
        }
    }
}

#[test]
fn all_labeled_counting_paths_agree() {
    for n in 0..=12u32 {
        for k in 0..=n {
            let direct = count_stc(n, k);
            assert_eq!(direct.value, count_stc_naive(n, k).value, "naive({n},{k})");
            assert_eq!(direct.value, count_stc_via_lemma(n, k).value, "lemma({n},{k})");
            assert_eq!(direct.value, count_stc_via_marked(n, k).value, "marked({n},{k})");
        }
    }
}

#[test]
fn both_unlabeled_counting_paths_agree() {
    for n in 0..=12u32 {
        for k in 0..=n {
            assert_eq!(
                count_nlstc(n, k).value,
                count_nlstc_via_marked(n, k).value,
                "({n},{k})"
            );
        }
    }
}

#[test]
fn specific_relation_values() {
    assert_eq!(val(count_stc_via_lemma(5, 2)), 4500);
    assert_eq!(val(count_stc_via_marked(3, 1)), 15);
    assert_eq!(val(count_nlstc_via_marked(3, 1)), 3);
}

#[test]
fn tree_conventions() {
    assert_eq!(val(count_stc(1, 0)), 1);
    for n in 2..=10u32 {
        assert_eq!(count_stc(n, 0).value, factorial(n) / BigUint::from(2u32));
        assert_eq!(val(count_nlstc(n, 0)), 1);
        assert_eq!(val(count_nlsctc(n, 0)), 1);
    }
}

#[test]
fn provenance_is_recorded() {
    assert_eq!(count_stc(4, 2).provenance, Provenance::Formula);
    assert_eq!(count_nlstc(4, 2).provenance, Provenance::Formula);
    assert_eq!(count_stc_via_lemma(4, 2).provenance, Provenance::Relation);
    assert_eq!(count_stc_via_marked(4, 2).provenance, Provenance::Relation);
    assert_eq!(count_nlstc_via_marked(4, 2).provenance, Provenance::Relation);
    assert_eq!(Provenance::Formula.as_str(), "formula");
    assert_eq!(Provenance::Relation.as_str(), "relation");
    assert_eq!(Provenance::Series.as_str(), "series");
    assert_eq!(Provenance::Enumeration.as_str(), "enumeration");
    assert_eq!(Provenance::Oracle.as_str(), "oracle");
    assert_eq!(Provenance::Oracle.to_string(), "oracle");
    assert_eq!(count_stc(5, 2).to_string(), "4500");
}

#[test]
fn counts_grow_quickly_but_stay_exact() {
    let big = count_stc(30, 10);
    let again = count_stc_naive(30, 10);
    assert_eq!(big.value, again.value);
    assert!(big.value > BigUint::from(u128::MAX));
}
