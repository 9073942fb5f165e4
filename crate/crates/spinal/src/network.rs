//! Data model and structural operations for binary phylogenetic networks.
//!
//! A network is a directed acyclic graph whose vertices each carry one of
//! four kinds with fixed degree requirements: a unique root (indegree 0,
//! outdegree 1), leaves (1, 0), tree vertices (1, 2) and reticulations
//! (2, 1). Leaves may optionally carry a bijective labeling by `1..=n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// The four vertex types of a binary phylogenetic network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    /// Unique top vertex: indegree 0, outdegree 1.
    Root,
    /// Terminal vertex: indegree 1, outdegree 0.
    Leaf,
    /// Branching vertex: indegree 1, outdegree 2.
    TreeVertex,
    /// Hybridization vertex: indegree 2, outdegree 1.
    Reticulation,
}

impl VertexKind {
    /// Required (indegree, outdegree) for this kind.
    pub fn required_degrees(self) -> (usize, usize) {
        match self {
            VertexKind::Root => (0, 1),
            VertexKind::Leaf => (1, 0),
            VertexKind::TreeVertex => (1, 2),
            VertexKind::Reticulation => (2, 1),
        }
    }

    /// True for every kind except `Leaf`.
    pub fn is_internal(self) -> bool {
        !matches!(self, VertexKind::Leaf)
    }
}

/// One violated structural condition found by [`PhyloNetwork::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An arc references a vertex id that was never declared.
    UnknownArcEndpoint {
        /// Tail of the offending arc.
        from: u32,
        /// Head of the offending arc.
        to: u32,
    },
    /// No vertex is declared with the `Root` kind.
    NoRoot,
    /// More than one vertex is declared with the `Root` kind.
    MultipleRoots {
        /// Number of declared roots.
        count: usize,
    },
    /// A vertex's actual degrees do not match its declared kind.
    DegreeMismatch {
        /// The offending vertex.
        vertex: u32,
        /// Its declared kind.
        kind: VertexKind,
        /// Actual indegree.
        indegree: usize,
        /// Actual outdegree.
        outdegree: usize,
    },
    /// The arc set contains a directed cycle.
    Cycle,
    /// A label is attached to an undeclared vertex id.
    LabelOnUnknownVertex {
        /// The undeclared id.
        vertex: u32,
    },
    /// A label is attached to a non-leaf vertex.
    LabelOnNonLeaf {
        /// The offending vertex.
        vertex: u32,
    },
    /// Labels are present but this leaf has none.
    LeafUnlabeled {
        /// The unlabeled leaf.
        vertex: u32,
    },
    /// The same label value is used twice.
    DuplicateLabel {
        /// The repeated label.
        label: u32,
    },
    /// A label falls outside `1..=n` where n is the number of leaves.
    LabelOutOfRange {
        /// The offending label.
        label: u32,
        /// Number of leaves.
        leaf_count: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownArcEndpoint { from, to } => {
                write!(f, "arc ({from},{to}) references an undeclared vertex")
            }
            Violation::NoRoot => write!(f, "no root vertex"),
            Violation::MultipleRoots { count } => write!(f, "{count} root vertices"),
            Violation::DegreeMismatch { vertex, kind, indegree, outdegree } => write!(
                f,
                "vertex {vertex} declared {kind:?} has indegree {indegree}, outdegree {outdegree}"
            ),
            Violation::Cycle => write!(f, "arc set contains a directed cycle"),
            Violation::LabelOnUnknownVertex { vertex } => {
                write!(f, "label attached to undeclared vertex {vertex}")
            }
            Violation::LabelOnNonLeaf { vertex } => {
                write!(f, "label attached to non-leaf vertex {vertex}")
            }
            Violation::LeafUnlabeled { vertex } => write!(f, "leaf {vertex} has no label"),
            Violation::DuplicateLabel { label } => write!(f, "label {label} used twice"),
            Violation::LabelOutOfRange { label, leaf_count } => {
                write!(f, "label {label} outside 1..={leaf_count}")
            }
        }
    }
}

/// Outcome of [`PhyloNetwork::validate`]: the complete list of violations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    /// Every violated condition, in check order.
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// True when the network satisfies every structural condition.
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let rendered: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", rendered.join("; "))
    }
}

/// A binary phylogenetic network: typed vertices, arcs, optional leaf labels.
///
/// Vertex identifiers are opaque integers chosen at construction; all
/// semantics live in the kinds, the arcs and the labels, so renaming
/// identifiers yields an isomorphic network.
///
/// ```
/// use spinal::{PhyloNetwork, VertexKind};
///
/// let net = PhyloNetwork::from_parts(
///     vec![(0, VertexKind::Root), (1, VertexKind::Leaf)],
///     vec![(0, 1)],
///     None,
/// );
/// assert!(net.validate().is_empty());
/// assert_eq!(net.leaf_count(), 1);
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhyloNetwork {
    kinds: BTreeMap<u32, VertexKind>,
    arcs: BTreeSet<(u32, u32)>,
    leaf_labels: Option<BTreeMap<u32, u32>>,
    children: BTreeMap<u32, Vec<u32>>,
    parents: BTreeMap<u32, Vec<u32>>,
}

impl PhyloNetwork {
    /// Builds a network from raw parts without validating it; call
    /// [`PhyloNetwork::validate`] to obtain the violation report.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = (u32, VertexKind)>,
        arcs: impl IntoIterator<Item = (u32, u32)>,
        leaf_labels: Option<Vec<(u32, u32)>>,
    ) -> Self {
        let kinds: BTreeMap<u32, VertexKind> = vertices.into_iter().collect();
        let arcs: BTreeSet<(u32, u32)> = arcs.into_iter().collect();
        let leaf_labels = leaf_labels.map(|l| l.into_iter().collect());
        let mut children: BTreeMap<u32, Vec<u32>> =
            kinds.keys().map(|&v| (v, Vec::new())).collect();
        let mut parents: BTreeMap<u32, Vec<u32>> =
            kinds.keys().map(|&v| (v, Vec::new())).collect();
        for &(u, v) in &arcs {
            if kinds.contains_key(&u) && kinds.contains_key(&v) {
                children.get_mut(&u).unwrap().push(v);
                parents.get_mut(&v).unwrap().push(u);
            }
        }
        PhyloNetwork { kinds, arcs, leaf_labels, children, parents }
    }

    /// Vertex ids with their kinds, in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = (u32, VertexKind)> + '_ {
        self.kinds.iter().map(|(&v, &k)| (v, k))
    }

    /// The arc set, in ascending order.
    pub fn arcs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.arcs.iter().copied()
    }

    /// Number of arcs.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    /// Declared kind of a vertex, if the id exists.
    pub fn kind(&self, v: u32) -> Option<VertexKind> {
        self.kinds.get(&v).copied()
    }

    /// Children of `v` in ascending id order (empty for unknown ids).
    pub fn children(&self, v: u32) -> &[u32] {
        self.children.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Parents of `v` in ascending id order (empty for unknown ids).
    pub fn parents(&self, v: u32) -> &[u32] {
        self.parents.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The leaf labeling, when present.
    pub fn leaf_labels(&self) -> Option<&BTreeMap<u32, u32>> {
        self.leaf_labels.as_ref()
    }

    /// True when the network carries leaf labels.
    pub fn is_labeled(&self) -> bool {
        self.leaf_labels.is_some()
    }

    /// Label of a leaf, when labels are present.
    pub fn label_of(&self, leaf: u32) -> Option<u32> {
        self.leaf_labels.as_ref().and_then(|m| m.get(&leaf).copied())
    }

    /// The unique vertex declared with the `Root` kind, if exactly one exists.
    pub fn root(&self) -> Option<u32> {
        let mut roots = self.kinds.iter().filter(|(_, &k)| k == VertexKind::Root);
        match (roots.next(), roots.next()) {
            (Some((&r, _)), None) => Some(r),
            _ => None,
        }
    }

    /// Number of leaves (the parameter n).
    pub fn leaf_count(&self) -> usize {
        self.kinds.values().filter(|&&k| k == VertexKind::Leaf).count()
    }

    /// Number of reticulations (the parameter k).
    pub fn reticulation_count(&self) -> usize {
        self.kinds.values().filter(|&&k| k == VertexKind::Reticulation).count()
    }

    /// Number of tree vertices (the parameter t).
    pub fn tree_vertex_count(&self) -> usize {
        self.kinds.values().filter(|&&k| k == VertexKind::TreeVertex).count()
    }

    /// A copy of this network without leaf labels.
    pub fn strip_labels(&self) -> PhyloNetwork {
        let mut net = self.clone();
        net.leaf_labels = None;
        net
    }

    /// A copy of this network with the given leaf labeling attached.
    pub fn with_labels(&self, labels: impl IntoIterator<Item = (u32, u32)>) -> PhyloNetwork {
        let mut net = self.clone();
        net.leaf_labels = Some(labels.into_iter().collect());
        net
    }

    /// Checks every structural condition and reports all violations.
    ///
    /// An empty report means the input is a binary phylogenetic network
    /// (with a valid leaf labeling when labels are present). Violations are
    /// reported, never raised.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        for &(u, v) in &self.arcs {
            if !self.kinds.contains_key(&u) || !self.kinds.contains_key(&v) {
                violations.push(Violation::UnknownArcEndpoint { from: u, to: v });
            }
        }

        let root_count = self.kinds.values().filter(|&&k| k == VertexKind::Root).count();
        if root_count == 0 {
            violations.push(Violation::NoRoot);
        } else if root_count > 1 {
            violations.push(Violation::MultipleRoots { count: root_count });
        }

        for (&v, &kind) in &self.kinds {
            let indegree = self.parents(v).len();
            let outdegree = self.children(v).len();
            if (indegree, outdegree) != kind.required_degrees() {
                violations.push(Violation::DegreeMismatch { vertex: v, kind, indegree, outdegree });
            }
        }

        if self.has_cycle() {
            violations.push(Violation::Cycle);
        }

        if let Some(labels) = &self.leaf_labels {
            let leaf_count = self.leaf_count();
            let mut seen = BTreeSet::new();
            for (&v, &label) in labels {
                match self.kinds.get(&v) {
                    None => violations.push(Violation::LabelOnUnknownVertex { vertex: v }),
                    Some(VertexKind::Leaf) => {}
                    Some(_) => violations.push(Violation::LabelOnNonLeaf { vertex: v }),
                }
                if !seen.insert(label) {
                    violations.push(Violation::DuplicateLabel { label });
                }
                if label == 0 || label as usize > leaf_count {
                    violations.push(Violation::LabelOutOfRange { label, leaf_count });
                }
            }
            for (&v, &kind) in &self.kinds {
                if kind == VertexKind::Leaf && !labels.contains_key(&v) {
                    violations.push(Violation::LeafUnlabeled { vertex: v });
                }
            }
        }

        ValidationReport { violations }
    }

    fn has_cycle(&self) -> bool {
        let mut indegree: BTreeMap<u32, usize> = self.kinds.keys().map(|&v| (v, 0)).collect();
        for &(u, v) in &self.arcs {
            if self.kinds.contains_key(&u) && self.kinds.contains_key(&v) {
                *indegree.get_mut(&v).unwrap() += 1;
            }
        }
        let mut queue: Vec<u32> =
            indegree.iter().filter(|(_, &d)| d == 0).map(|(&v, _)| v).collect();
        let mut processed = 0usize;
        while let Some(v) = queue.pop() {
            processed += 1;
            for &c in self.children(v) {
                let d = indegree.get_mut(&c).unwrap();
                *d -= 1;
                if *d == 0 {
                    queue.push(c);
                }
            }
        }
        processed < self.kinds.len()
    }

    /// Returns this network's validation report as an error when nonempty.
    pub fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidNetwork(report))
        }
    }

    /// True iff every internal vertex has at least one non-reticulation child.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidNetwork`] when validation fails.
    pub fn is_tree_child(&self) -> Result<bool> {
        self.require_valid()?;
        for (&v, &kind) in &self.kinds {
            if kind.is_internal() {
                let ok = self
                    .children(v)
                    .iter()
                    .any(|&c| self.kinds[&c] != VertexKind::Reticulation);
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every root-to-leaf path that passes through all internal vertices.
    ///
    /// The list is empty iff the network is not spinal. For a spinal
    /// tree-child network there are exactly two spines when the path ends in
    /// a cherry (same internal sequence, two terminal leaves) and exactly
    /// one otherwise. Paths are produced in depth-first order with children
    /// visited in ascending id order.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidNetwork`] when validation fails.
    pub fn find_spines(&self) -> Result<Vec<Spine>> {
        self.require_valid()?;
        let root = self.root().expect("validated network has a unique root");
        let internal_count = self.vertex_count() - self.leaf_count();
        let mut spines = Vec::new();
        let mut path = vec![root];
        self.spine_search(&mut path, internal_count, &mut spines);
        Ok(spines)
    }

    fn spine_search(&self, path: &mut Vec<u32>, internal_count: usize, out: &mut Vec<Spine>) {
        let last = *path.last().unwrap();
        if self.kinds[&last] == VertexKind::Leaf {
            if path.len() == internal_count + 1 {
                let reticulation_positions = path
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| self.kinds[&v] == VertexKind::Reticulation)
                    .map(|(i, _)| i)
                    .collect();
                out.push(Spine { path: path.clone(), reticulation_positions });
            }
            return;
        }
        if path.len() > internal_count + 1 {
            return;
        }
        for &c in self.children(last) {
            path.push(c);
            self.spine_search(path, internal_count, out);
            path.pop();
        }
    }

    /// Verifies that `spine` is a spine of this network.
    pub fn check_spine(&self, spine: &Spine) -> Result<()> {
        self.require_valid()?;
        let path = &spine.path;
        if path.is_empty() {
            return Err(Error::SpineMismatch);
        }
        if self.kind(path[0]) != Some(VertexKind::Root) {
            return Err(Error::SpineMismatch);
        }
        if self.kind(*path.last().unwrap()) != Some(VertexKind::Leaf) {
            return Err(Error::SpineMismatch);
        }
        for pair in path.windows(2) {
            if !self.arcs.contains(&(pair[0], pair[1])) {
                return Err(Error::SpineMismatch);
            }
        }
        let covered: BTreeSet<u32> = path.iter().copied().collect();
        if covered.len() != path.len() {
            return Err(Error::SpineMismatch);
        }
        let all_internal_covered = self
            .kinds
            .iter()
            .filter(|(_, &k)| k.is_internal())
            .all(|(&v, _)| covered.contains(&v));
        if !all_internal_covered {
            return Err(Error::SpineMismatch);
        }
        let expected_positions: Vec<usize> = path
            .iter()
            .enumerate()
            .filter(|(_, &v)| self.kinds[&v] == VertexKind::Reticulation)
            .map(|(i, _)| i)
            .collect();
        if expected_positions != spine.reticulation_positions {
            return Err(Error::SpineMismatch);
        }
        Ok(())
    }

    /// Tree-vertex count and spine length for a spine of this network.
    ///
    /// For a member of the spinal tree-child class with n leaves and k
    /// reticulations these satisfy t = n+k-1 and l = n+2k.
    ///
    /// # Errors
    ///
    /// Returns [`Error::SpineMismatch`] when `spine` is not a spine of this
    /// network, and [`Error::InvalidNetwork`] when validation fails.
    pub fn spine_metrics(&self, spine: &Spine) -> Result<SpineMetrics> {
        self.check_spine(spine)?;
        Ok(SpineMetrics {
            tree_vertex_count: self.tree_vertex_count(),
            spine_length: spine.path.len() - 1,
        })
    }

    /// Whether the spine ends in a cherry or at a reticulation's child.
    ///
    /// The single-leaf network classifies as `Cherry` by convention.
    pub fn classify_terminal(&self, spine: &Spine) -> Result<TerminalShape> {
        self.check_spine(spine)?;
        let path = &spine.path;
        if path.len() < 2 {
            return Err(Error::SpineMismatch);
        }
        let parent = path[path.len() - 2];
        if self.kinds[&parent] == VertexKind::Reticulation {
            Ok(TerminalShape::NonCherry)
        } else {
            Ok(TerminalShape::Cherry)
        }
    }
}

/// A root-to-leaf path through all internal vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spine {
    /// The vertices u_0..u_l from the root to a leaf.
    pub path: Vec<u32>,
    /// Indices into `path` holding reticulations, in increasing order.
    pub reticulation_positions: Vec<usize>,
}

/// Structural counts attached to a spine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpineMetrics {
    /// Number of tree vertices in the network (t).
    pub tree_vertex_count: usize,
    /// Number of arcs along the spine (l).
    pub spine_length: usize,
}

/// Shape of the spine's terminal end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TerminalShape {
    /// The terminal leaf's parent is a tree vertex whose other child is a leaf.
    Cherry,
    /// The terminal leaf's parent is a reticulation.
    NonCherry,
}
