//! Small hand-built networks used throughout the tests and the guide.
//!
//! Each constructor documents its shape well enough to redraw it on
//! paper; the negative examples (not tree-child, tree-child but not
//! spinal) are here too so callers can exercise rejection paths.

use crate::network::{PhyloNetwork, VertexKind};

/// The one-leaf network: a root above a single leaf.
pub fn single_leaf() -> PhyloNetwork {
    PhyloNetwork::from_parts(
        vec![(0, VertexKind::Root), (1, VertexKind::Leaf)],
        vec![(0, 1)],
        None,
    )
}

/// Two leaves under one tree vertex: the smallest cherry.
pub fn cherry_pair() -> PhyloNetwork {
    PhyloNetwork::from_parts(
        vec![
            (0, VertexKind::Root),
            (1, VertexKind::TreeVertex),
            (2, VertexKind::Leaf),
            (3, VertexKind::Leaf),
        ],
        vec![(0, 1), (1, 2), (1, 3)],
        None,
    )
}

/// A strictly spinal tree-child network with five leaves and two
/// reticulations.
///
/// The spine is 0..=8 ending in the cherry {9, 13} under vertex 8; the
/// reticulations sit at spine positions 5 and 7, with bend parents at
/// positions 2 and 3 and off-path leaves 10..=12 hanging from the
/// remaining tree vertices.
pub fn five_leaf_two_ret() -> PhyloNetwork {
    let vertices = vec![
        (0, VertexKind::Root),
        (1, VertexKind::TreeVertex),
        (2, VertexKind::TreeVertex),
        (3, VertexKind::TreeVertex),
        (4, VertexKind::TreeVertex),
        (5, VertexKind::Reticulation),
        (6, VertexKind::TreeVertex),
        (7, VertexKind::Reticulation),
        (8, VertexKind::TreeVertex),
        (9, VertexKind::Leaf),
        (10, VertexKind::Leaf),
        (11, VertexKind::Leaf),
        (12, VertexKind::Leaf),
        (13, VertexKind::Leaf),
    ];
    let arcs = vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (2, 5),
        (3, 7),
        (1, 12),
        (4, 10),
        (6, 11),
        (8, 13),
    ];
    PhyloNetwork::from_parts(vertices, arcs, None)
}

/// A spinal caterpillar tree-child network with eight leaves and two
/// reticulations whose spinal path carries two caterpillar dives.
///
/// The path is 0..=9; the reticulations sit at positions 5 and 7. The
/// adjacent parent at position 4 hangs a one-vertex caterpillar (10) and
/// the one at position 6 hangs a two-vertex caterpillar (13 above 15),
/// so the network is not strictly spinal.
pub fn caterpillar_eight_two() -> PhyloNetwork {
    let vertices = vec![
        (0, VertexKind::Root),
        (1, VertexKind::TreeVertex),
        (2, VertexKind::TreeVertex),
        (3, VertexKind::TreeVertex),
        (4, VertexKind::TreeVertex),
        (5, VertexKind::Reticulation),
        (6, VertexKind::TreeVertex),
        (7, VertexKind::Reticulation),
        (8, VertexKind::TreeVertex),
        (9, VertexKind::Leaf),
        (10, VertexKind::TreeVertex),
        (11, VertexKind::Leaf),
        (12, VertexKind::Leaf),
        (13, VertexKind::TreeVertex),
        (14, VertexKind::Leaf),
        (15, VertexKind::TreeVertex),
        (16, VertexKind::Leaf),
        (17, VertexKind::Leaf),
        (18, VertexKind::Leaf),
        (19, VertexKind::Leaf),
    ];
    let arcs = vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (2, 5),
        (3, 7),
        (1, 18),
        (4, 10),
        (10, 11),
        (10, 12),
        (6, 13),
        (13, 14),
        (13, 15),
        (15, 16),
        (15, 17),
        (8, 19),
    ];
    PhyloNetwork::from_parts(vertices, arcs, None)
}

/// A strictly spinal tree-child network with three leaves and one
/// reticulation whose terminal leaf hangs below the reticulation, so the
/// spine does not end in a cherry.
pub fn three_leaf_one_ret_noncherry() -> PhyloNetwork {
    let vertices = vec![
        (0, VertexKind::Root),
        (1, VertexKind::TreeVertex),
        (2, VertexKind::TreeVertex),
        (3, VertexKind::TreeVertex),
        (4, VertexKind::Reticulation),
        (5, VertexKind::Leaf),
        (6, VertexKind::Leaf),
        (7, VertexKind::Leaf),
    ];
    let arcs = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 4), (1, 6), (3, 7)];
    PhyloNetwork::from_parts(vertices, arcs, None)
}

/// A labeled cherry-terminated spinal tree-child network with six leaves
/// and three reticulations.
///
/// The spine is 0..=11 ending in leaf 16 (label 5), with leaf 17
/// (label 6) completing the cherry under vertex 11. Reticulations sit at
/// positions 5, 8, and 10 with bend parents 2, 3, and 6.
pub fn labeled_cherry_six_three() -> PhyloNetwork {
    let vertices = vec![
        (0, VertexKind::Root),
        (1, VertexKind::TreeVertex),
        (2, VertexKind::TreeVertex),
        (3, VertexKind::TreeVertex),
        (4, VertexKind::TreeVertex),
        (5, VertexKind::Reticulation),
        (6, VertexKind::TreeVertex),
        (7, VertexKind::TreeVertex),
        (8, VertexKind::Reticulation),
        (9, VertexKind::TreeVertex),
        (10, VertexKind::Reticulation),
        (11, VertexKind::TreeVertex),
        (12, VertexKind::Leaf),
        (13, VertexKind::Leaf),
        (14, VertexKind::Leaf),
        (15, VertexKind::Leaf),
        (16, VertexKind::Leaf),
        (17, VertexKind::Leaf),
    ];
    let arcs = vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (9, 10),
        (10, 11),
        (11, 16),
        (11, 17),
        (2, 5),
        (3, 8),
        (6, 10),
        (1, 12),
        (4, 13),
        (7, 14),
        (9, 15),
    ];
    let labels = vec![(12, 1), (13, 2), (14, 3), (15, 4), (16, 5), (17, 6)];
    PhyloNetwork::from_parts(vertices, arcs, Some(labels))
}

/// A four-leaf, two-reticulation network that is not tree-child: one
/// tree vertex has two reticulation children.
pub fn four_leaf_not_tree_child() -> PhyloNetwork {
    let vertices = vec![
        (0, VertexKind::Root),
        (1, VertexKind::TreeVertex),
        (2, VertexKind::TreeVertex),
        (3, VertexKind::TreeVertex),
        (4, VertexKind::TreeVertex),
        (5, VertexKind::TreeVertex),
        (6, VertexKind::Reticulation),
        (7, VertexKind::Reticulation),
        (8, VertexKind::Leaf),
        (9, VertexKind::Leaf),
        (10, VertexKind::Leaf),
        (11, VertexKind::Leaf),
    ];
    let arcs = vec![
        (0, 1),
        (1, 2),
        (1, 3),
        (2, 4),
        (2, 5),
        (4, 6),
        (4, 8),
        (5, 6),
        (5, 7),
        (3, 7),
        (3, 11),
        (6, 9),
        (7, 10),
    ];
    PhyloNetwork::from_parts(vertices, arcs, None)
}

/// A five-leaf, one-reticulation tree-child network with no spinal path:
/// no root-to-leaf path visits every internal vertex.
pub fn five_leaf_one_ret_nonspinal() -> PhyloNetwork {
    let vertices = vec![
        (0, VertexKind::Root),
        (1, VertexKind::TreeVertex),
        (2, VertexKind::TreeVertex),
        (3, VertexKind::TreeVertex),
        (4, VertexKind::TreeVertex),
        (5, VertexKind::TreeVertex),
        (6, VertexKind::Reticulation),
        (7, VertexKind::Leaf),
        (8, VertexKind::Leaf),
        (9, VertexKind::Leaf),
        (10, VertexKind::Leaf),
        (11, VertexKind::Leaf),
    ];
    let arcs = vec![
        (0, 1),
        (1, 2),
        (1, 3),
        (2, 4),
        (2, 5),
        (4, 6),
        (4, 7),
        (5, 6),
        (5, 9),
        (3, 8),
        (3, 11),
        (6, 10),
    ];
    PhyloNetwork::from_parts(vertices, arcs, None)
}
