//! Exact tools for spinal tree-child phylogenetic networks.
//!
//! A spinal network is a binary rooted network in which one root-to-leaf
//! path visits every internal vertex. This crate builds, validates, and
//! canonically compares such networks, converts them to and from compact
//! word encodings, counts them with closed formulas, relations, and a
//! generating-function expansion, enumerates them exhaustively at small
//! sizes, and cross-checks everything against an independent brute-force
//! oracle.
//!
//! The main entry points:
//!
//! * [`PhyloNetwork`] with [`PhyloNetwork::validate`],
//!   [`PhyloNetwork::is_tree_child`], and [`PhyloNetwork::find_spines`]
//!   for structure,
//! * [`encode_nlstc`] / [`decode_nlstc`] and [`encode_nlsctc`] /
//!   [`decode_nlsctc`] for the word codecs, plus [`lrq_encode`] and
//!   [`LrqWord::transform`] for the token alphabet,
//! * [`count_stc`], [`count_nlstc`], and friends for exact counts,
//! * [`enumerate_stc`], [`enumerate_nlstc`], and the word enumerators
//!   for exhaustive listings,
//! * [`oracle_nlstc`] / [`oracle_stc`] for the independent reference.
//!
//! ```
//! use spinal::{count_nlstc, decode_nlstc, encode_nlstc, Word};
//!
//! let word = Word::new(4, 2, vec![3, 1, 2, 1, 1, 2, 2, 4, 3, 4]);
//! let network = decode_nlstc(&word)?;
//! assert_eq!(network.leaf_count(), 5);
//! assert_eq!(network.reticulation_count(), 2);
//! assert_eq!(encode_nlstc(&network)?, word);
//! assert_eq!(count_nlstc(5, 2).value.to_string(), "45");
//! # Ok::<(), spinal::Error>(())
//! ```

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod canon;
pub mod codec;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod marked;
pub mod network;
pub mod oracle;
pub mod partition;
pub mod samples;
pub mod series;
pub mod word;

pub use canon::{canonical_form, isomorphic};
pub use codec::{
    decode_nlsctc, decode_nlstc, decompose_caterpillar_paths, decompose_paths, encode_nlsctc,
    encode_nlstc, lrq_encode, PathComponent, PathComponentKind,
};
pub use counting::{
    binomial, count_c1_classes, count_c2_classes, count_nlsctc, count_nlstc,
    count_nlstc_via_marked, count_pair_partitions, count_stc, count_stc_naive,
    count_stc_via_lemma, count_stc_via_marked, factorial, labeled_marked_tree_count,
    unlabeled_marked_tree_count, ExactCount, Provenance,
};
pub use enumerate::{
    enumerate_c1_classes, enumerate_c2_classes, enumerate_marked_trees, enumerate_nlsctc,
    enumerate_nlstc, enumerate_pair_partitions, enumerate_stc, enumerate_unlabeled_marked_trees,
    EnumerationBudget,
};
pub use error::{Error, Result};
pub use io::{network_from_json, network_to_dot, network_to_json};
pub use marked::{
    cherry_to_non_cherry, marked_tree_to_network, network_to_marked_tree, non_cherry_to_cherry,
    MarkedTree, MarkedVertexKind,
};
pub use network::{
    PhyloNetwork, Spine, SpineMetrics, TerminalShape, ValidationReport, VertexKind, Violation,
};
pub use oracle::{oracle_nlstc, oracle_stc};
pub use partition::PairPartition;
pub use series::{check_ode_residual, expected_series_coeff, series_expand_s, SeriesTable};
pub use word::{LrqToken, LrqWord, TransformSteps, Word, WordClass};
