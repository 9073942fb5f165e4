use spinal::{Error, PairPartition, Word};

#[test]
fn reference_partition_maps_to_reference_word() {
    let partition =
        PairPartition::new(4, 2, vec![(2, 4), (3, 5)], vec![1, 6]).unwrap();
    let word = partition.to_word();
    assert_eq!(word.n, 4);
    assert_eq!(word.k, 2);
    assert_eq!(word.letters, vec![3, 1, 2, 1, 1, 2, 2, 4, 3, 4]);
    assert_eq!(partition.to_string(), "{2,4} {3,5} {1} {6}");
}

#[test]
fn reference_word_maps_back_to_reference_partition() {
    let word = Word::new(4, 2, vec![3, 1, 2, 1, 1, 2, 2, 4, 3, 4]);
    let partition = word.to_pair_partition().unwrap();
    assert_eq!(partition.pairs, vec![(2, 4), (3, 5)]);
    assert_eq!(partition.singletons, vec![1, 6]);
}

#[test]
fn construction_normalizes_order() {
    let a = PairPartition::new(4, 2, vec![(5, 3), (4, 2)], vec![6, 1]).unwrap();
    let b = PairPartition::new(4, 2, vec![(2, 4), (3, 5)], vec![1, 6]).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.pairs, vec![(2, 4), (3, 5)]);
    assert_eq!(a.singletons, vec![1, 6]);
}

#[test]
fn pairs_are_sorted_by_larger_element() {
    let partition = PairPartition::new(3, 2, vec![(1, 5), (2, 3)], vec![4]).unwrap();
    assert_eq!(partition.pairs, vec![(2, 3), (1, 5)]);
    let word = partition.to_word();
    assert_eq!(word.letters, vec![2, 1, 1, 1, 3, 2, 2, 3]);
}

#[test]
fn malformed_partitions_are_rejected() {
    for (n, k, pairs, singletons) in [
        (4, 2, vec![(2, 4)], vec![1, 6]),
        (4, 2, vec![(2, 4), (3, 5)], vec![1]),
        (4, 2, vec![(2, 4), (3, 5)], vec![1, 7]),
        (4, 2, vec![(2, 4), (4, 5)], vec![1, 6]),
        (4, 2, vec![(2, 4), (3, 5)], vec![1, 4]),
        (4, 2, vec![(2, 2), (3, 5)], vec![1, 6]),
        (2, 3, vec![(1, 2), (3, 4), (4, 5)], vec![]),
    ] {
        let result = PairPartition::new(n, k, pairs, singletons);
        assert!(matches!(result, Err(Error::MalformedPartition(_))));
    }
}

#[test]
fn word_outside_adjacent_class_has_no_partition() {
    let separated = Word::new(2, 1, vec![1, 1, 2, 1, 2]);
    assert!(matches!(
        separated.to_pair_partition(),
        Err(Error::NotInClass { .. })
    ));
}

#[test]
fn partition_is_invariant_under_high_letter_renaming() {
    let original = Word::new(4, 2, vec![3, 1, 2, 1, 1, 2, 2, 4, 3, 4]);
    let renamed = Word::new(4, 2, vec![4, 1, 2, 1, 1, 2, 2, 3, 3, 4]);
    assert!(original.equivalent(&renamed).unwrap());
    assert_eq!(
        original.to_pair_partition().unwrap(),
        renamed.to_pair_partition().unwrap()
    );
}

#[test]
fn degenerate_sizes_roundtrip() {
    let empty = PairPartition::new(0, 0, vec![], vec![]).unwrap();
    assert_eq!(empty.to_word().letters, Vec::<u32>::new());

    let lone = PairPartition::new(1, 0, vec![], vec![1]).unwrap();
    let word = lone.to_word();
    assert_eq!(word.letters, vec![1, 1]);
    assert_eq!(word.to_pair_partition().unwrap(), lone);

    let all_paired = PairPartition::new(2, 2, vec![(1, 3), (2, 4)], vec![]).unwrap();
    let word = all_paired.to_word();
    assert_eq!(word.letters, vec![1, 2, 1, 1, 2, 2]);
    assert_eq!(word.to_pair_partition().unwrap(), all_paired);
}

#[test]
fn partition_roundtrip_is_identity_on_words() {
    for (n, k, letters) in [
        (2, 1, vec![1, 2, 1, 1, 2]),
        (4, 2, vec![3, 1, 2, 1, 1, 2, 2, 4, 3, 4]),
        (3, 0, vec![1, 2, 3, 1, 2, 3]),
        (2, 2, vec![1, 2, 1, 1, 2, 2]),
    ] {
        let word = Word::new(n, k, letters);
        let partition = word.to_pair_partition().unwrap();
        assert_eq!(partition.to_word(), word);
    }
}
