use spinal::{
    samples, PhyloNetwork, TerminalShape, VertexKind, Violation,
};

fn unlabeled(vertices: Vec<(u32, VertexKind)>, arcs: Vec<(u32, u32)>) -> PhyloNetwork {
    PhyloNetwork::from_parts(vertices, arcs, None)
}

#[test]
fn samples_validate() {
    for net in [
        samples::single_leaf(),
        samples::cherry_pair(),
        samples::five_leaf_two_ret(),
        samples::three_leaf_one_ret_noncherry(),
        samples::caterpillar_eight_two(),
        samples::labeled_cherry_six_three(),
        samples::four_leaf_not_tree_child(),
        samples::five_leaf_one_ret_nonspinal(),
    ] {
        let report = net.validate();
        assert!(report.is_empty(), "sample failed validation: {report}");
    }
}

#[test]
fn sample_parameters() {
    let five = samples::five_leaf_two_ret();
    assert_eq!(five.leaf_count(), 5);
    assert_eq!(five.reticulation_count(), 2);
    assert_eq!(five.tree_vertex_count(), 6);
    assert_eq!(five.vertex_count(), 14);

    let cat = samples::caterpillar_eight_two();
    assert_eq!(cat.leaf_count(), 8);
    assert_eq!(cat.reticulation_count(), 2);
    assert_eq!(cat.vertex_count(), 20);

    let labeled = samples::labeled_cherry_six_three();
    assert_eq!(labeled.leaf_count(), 6);
    assert_eq!(labeled.reticulation_count(), 3);
    assert!(labeled.is_labeled());
    assert_eq!(labeled.label_of(16), Some(5));
}

#[test]
fn missing_root_is_reported() {
    let net = unlabeled(
        vec![(0, VertexKind::TreeVertex), (1, VertexKind::Leaf), (2, VertexKind::Leaf)],
        vec![(0, 1), (0, 2)],
    );
    let report = net.validate();
    assert!(report.violations.contains(&Violation::NoRoot), "{report}");
}

#[test]
fn degree_mismatch_is_reported() {
    let net = unlabeled(
        vec![(0, VertexKind::Root), (1, VertexKind::TreeVertex), (2, VertexKind::Leaf)],
        vec![(0, 1), (1, 2)],
    );
    let report = net.validate();
    assert!(
        report.violations.iter().any(|v| matches!(
            v,
            Violation::DegreeMismatch { vertex: 1, kind: VertexKind::TreeVertex, .. }
        )),
        "{report}"
    );
}

#[test]
fn cycle_is_reported() {
    let net = unlabeled(
        vec![
            (0, VertexKind::Root),
            (1, VertexKind::TreeVertex),
            (2, VertexKind::Reticulation),
            (3, VertexKind::TreeVertex),
            (4, VertexKind::Leaf),
            (5, VertexKind::Leaf),
            (6, VertexKind::Leaf),
        ],
        vec![(0, 1), (1, 2), (2, 3), (3, 1), (1, 4), (3, 5), (2, 6)],
    );
    let report = net.validate();
    assert!(report.violations.contains(&Violation::Cycle), "{report}");
}

#[test]
fn unknown_arc_endpoint_is_reported() {
    let net = unlabeled(vec![(0, VertexKind::Root), (1, VertexKind::Leaf)], vec![(0, 1), (0, 9)]);
    let report = net.validate();
    assert!(
        report.violations.contains(&Violation::UnknownArcEndpoint { from: 0, to: 9 }),
        "{report}"
    );
}

#[test]
fn label_violations_are_reported() {
    let base = samples::cherry_pair();
    let dup = base.with_labels(vec![(2, 1), (3, 1)]);
    assert!(dup
        .validate()
        .violations
        .contains(&Violation::DuplicateLabel { label: 1 }));

    let out_of_range = base.with_labels(vec![(2, 1), (3, 7)]);
    assert!(out_of_range
        .validate()
        .violations
        .contains(&Violation::LabelOutOfRange { label: 7, leaf_count: 2 }));

    let partial = base.with_labels(vec![(2, 1)]);
    assert!(partial
        .validate()
        .violations
        .contains(&Violation::LeafUnlabeled { vertex: 3 }));

    let on_tree = base.with_labels(vec![(1, 1), (2, 2), (3, 1)]);
    assert!(on_tree
        .validate()
        .violations
        .contains(&Violation::LabelOnNonLeaf { vertex: 1 }));
}

#[test]
fn tree_child_distinguishes_samples() {
    assert!(samples::five_leaf_two_ret().is_tree_child().unwrap());
    assert!(samples::labeled_cherry_six_three().is_tree_child().unwrap());
    assert!(samples::caterpillar_eight_two().is_tree_child().unwrap());
    assert!(samples::five_leaf_one_ret_nonspinal().is_tree_child().unwrap());
    assert!(!samples::four_leaf_not_tree_child().is_tree_child().unwrap());
}

#[test]
fn spines_of_strictly_spinal_sample() {
    let net = samples::five_leaf_two_ret();
    let spines = net.find_spines().unwrap();
    assert_eq!(spines.len(), 2);
    let spine = &spines[0];
    assert_eq!(spine.path, vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 9]);
    assert_eq!(spines[1].path, vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 13]);
    assert_eq!(spine.reticulation_positions, vec![5, 7]);
    net.check_spine(spine).unwrap();
    net.check_spine(&spines[1]).unwrap();

    let metrics = net.spine_metrics(spine).unwrap();
    assert_eq!(metrics.tree_vertex_count, 6);
    assert_eq!(metrics.spine_length, 9);
}

#[test]
fn spine_counts_match_parameter_formulas() {
    let cases = [
        (samples::five_leaf_two_ret(), 5u32, 2u32),
        (samples::labeled_cherry_six_three(), 6, 3),
    ];
    for (net, n, k) in cases {
        let spines = net.find_spines().unwrap();
        assert!(!spines.is_empty());
        let metrics = net.spine_metrics(&spines[0]).unwrap();
        assert_eq!(metrics.tree_vertex_count as u32, n + k - 1);
        assert_eq!(metrics.spine_length as u32, n + 2 * k);
    }
}

#[test]
fn nonspinal_samples_have_no_spine() {
    assert!(samples::five_leaf_one_ret_nonspinal().find_spines().unwrap().is_empty());
    assert!(samples::caterpillar_eight_two().find_spines().unwrap().is_empty());
}

#[test]
fn cherry_spines_come_in_pairs() {
    let net = samples::labeled_cherry_six_three();
    let spines = net.find_spines().unwrap();
    assert_eq!(spines.len(), 2);
    assert_eq!(spines[0].path[..12], spines[1].path[..12]);
    assert_eq!(
        net.classify_terminal(&spines[0]).unwrap(),
        TerminalShape::Cherry
    );
}

#[test]
fn non_cherry_terminal_is_detected() {
    let net = samples::three_leaf_one_ret_noncherry();
    let spines = net.find_spines().unwrap();
    assert_eq!(spines.len(), 1);
    assert_eq!(spines[0].path, vec![0, 1, 2, 3, 4, 5]);
    assert_eq!(
        net.classify_terminal(&spines[0]).unwrap(),
        TerminalShape::NonCherry
    );
}

#[test]
fn cherry_terminal_of_strictly_spinal_sample() {
    let net = samples::five_leaf_two_ret();
    let spines = net.find_spines().unwrap();
    assert_eq!(net.classify_terminal(&spines[0]).unwrap(), TerminalShape::Cherry);
}

#[test]
fn single_leaf_is_cherry_terminated_by_convention() {
    let net = samples::single_leaf();
    let spines = net.find_spines().unwrap();
    assert_eq!(spines.len(), 1);
    assert_eq!(net.classify_terminal(&spines[0]).unwrap(), TerminalShape::Cherry);
}

#[test]
fn strip_and_relabel_roundtrip() {
    let labeled = samples::labeled_cherry_six_three();
    let stripped = labeled.strip_labels();
    assert!(!stripped.is_labeled());
    assert!(stripped.validate().is_empty());
    let relabeled = stripped.with_labels(
        labeled.leaf_labels().unwrap().iter().map(|(&v, &l)| (v, l)).collect::<Vec<_>>(),
    );
    assert_eq!(relabeled, labeled);
}
