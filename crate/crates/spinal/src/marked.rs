//! Marked trees: the tree shapes obtained from cherry-terminated spinal
//! tree-child networks by detaching each reticulation from its lower
//! parent and removing the terminal leaf.
//!
//! A marked tree has elementary marked vertices (the former root and
//! reticulations, each carrying a distinct mark), runs of intermediate
//! vertices, and leaves. Every mark is smaller than all marks below it,
//! which is exactly the condition for the detached arcs to be restorable.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::network::{PhyloNetwork, Spine, TerminalShape, VertexKind};

/// The three vertex types of a marked tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarkedVertexKind {
    /// An elementary vertex carrying a mark; mark 0 is the root.
    Head {
        /// The mark, unique across the tree.
        mark: u32,
    },
    /// A vertex on the run below a head.
    Intermediate,
    /// A leaf, optionally labeled.
    Leaf {
        /// The leaf label, when the tree is labeled.
        label: Option<u32>,
    },
}

/// A marked tree; see the module documentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedTree {
    kinds: BTreeMap<u32, MarkedVertexKind>,
    arcs: BTreeSet<(u32, u32)>,
    children: BTreeMap<u32, Vec<u32>>,
    parents: BTreeMap<u32, Vec<u32>>,
}

impl MarkedTree {
    /// Builds a marked tree from raw parts without validating it.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = (u32, MarkedVertexKind)>,
        arcs: impl IntoIterator<Item = (u32, u32)>,
    ) -> Self {
        let kinds: BTreeMap<u32, MarkedVertexKind> = vertices.into_iter().collect();
        let arcs: BTreeSet<(u32, u32)> = arcs.into_iter().collect();
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
        MarkedTree { kinds, arcs, children, parents }
    }

    /// Vertex ids with their kinds, in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = (u32, MarkedVertexKind)> + '_ {
        self.kinds.iter().map(|(&v, &k)| (v, k))
    }

    /// The arc set, in ascending order.
    pub fn arcs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.arcs.iter().copied()
    }

    /// Children of `v` in ascending id order.
    pub fn children(&self, v: u32) -> &[u32] {
        self.children.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Parents of `v` in ascending id order.
    pub fn parents(&self, v: u32) -> &[u32] {
        self.parents.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Number of heads (marks).
    pub fn head_count(&self) -> usize {
        self.kinds.values().filter(|k| matches!(k, MarkedVertexKind::Head { .. })).count()
    }

    /// Number of leaves.
    pub fn leaf_count(&self) -> usize {
        self.kinds.values().filter(|k| matches!(k, MarkedVertexKind::Leaf { .. })).count()
    }

    /// True when every leaf carries a label.
    pub fn is_labeled(&self) -> bool {
        self.kinds
            .values()
            .all(|k| !matches!(k, MarkedVertexKind::Leaf { label: None }))
            && self.leaf_count() > 0
    }

    /// The set of leaf labels, when labeled.
    pub fn labels(&self) -> BTreeSet<u32> {
        self.kinds
            .values()
            .filter_map(|k| match k {
                MarkedVertexKind::Leaf { label: Some(l) } => Some(*l),
                _ => None,
            })
            .collect()
    }

    /// Checks every structural condition, reporting the first violation.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidMarkedTree(msg));
        if self.kinds.is_empty() {
            return fail("empty tree".into());
        }
        for &(u, v) in &self.arcs {
            if !self.kinds.contains_key(&u) || !self.kinds.contains_key(&v) {
                return fail(format!("arc ({u},{v}) references an undeclared vertex"));
            }
        }
        let roots: Vec<u32> =
            self.kinds.keys().filter(|&&v| self.parents(v).is_empty()).copied().collect();
        if roots.len() != 1 {
            return fail(format!("{} parentless vertices instead of one", roots.len()));
        }
        let root = roots[0];
        if !matches!(self.kinds[&root], MarkedVertexKind::Head { mark: 0 }) {
            return fail("the parentless vertex is not the head with mark 0".into());
        }
        for (&v, _) in &self.kinds {
            if v != root && self.parents(v).len() != 1 {
                return fail(format!("vertex {v} has {} parents", self.parents(v).len()));
            }
        }
        if self.arcs.len() != self.kinds.len() - 1 {
            return fail(format!(
                "{} arcs for {} vertices; not a tree",
                self.arcs.len(),
                self.kinds.len()
            ));
        }
        let mut reached = BTreeSet::new();
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            if reached.insert(v) {
                stack.extend(self.children(v).iter().copied());
            }
        }
        if reached.len() != self.kinds.len() {
            return fail("not every vertex is reachable from the root".into());
        }
        let mut marks = BTreeSet::new();
        let mut labels = BTreeSet::new();
        let mut labeled_leaves = 0usize;
        let mut unlabeled_leaves = 0usize;
        for (&v, &kind) in &self.kinds {
            let out = self.children(v);
            match kind {
                MarkedVertexKind::Head { mark } => {
                    if !marks.insert(mark) {
                        return fail(format!("mark {mark} used twice"));
                    }
                    if out.len() != 1 {
                        return fail(format!("head {v} has {} children instead of one", out.len()));
                    }
                    if !matches!(self.kinds[&out[0]], MarkedVertexKind::Intermediate) {
                        return fail(format!("head {v}'s child is not an intermediate"));
                    }
                }
                MarkedVertexKind::Intermediate => match out.len() {
                    1 => {
                        if !matches!(self.kinds[&out[0]], MarkedVertexKind::Leaf { .. }) {
                            return fail(format!(
                                "run-ending intermediate {v}'s child is not a leaf"
                            ));
                        }
                    }
                    2 => {
                        let intermediate_children = out
                            .iter()
                            .filter(|&&c| {
                                matches!(self.kinds[&c], MarkedVertexKind::Intermediate)
                            })
                            .count();
                        if intermediate_children != 1 {
                            return fail(format!(
                                "intermediate {v} must have exactly one intermediate child"
                            ));
                        }
                    }
                    other => {
                        return fail(format!("intermediate {v} has {other} children"));
                    }
                },
                MarkedVertexKind::Leaf { label } => {
                    if !out.is_empty() {
                        return fail(format!("leaf {v} has children"));
                    }
                    match label {
                        Some(l) => {
                            labeled_leaves += 1;
                            if !labels.insert(l) {
                                return fail(format!("leaf label {l} used twice"));
                            }
                        }
                        None => unlabeled_leaves += 1,
                    }
                }
            }
        }
        if labeled_leaves > 0 && unlabeled_leaves > 0 {
            return fail("mixed labeled and unlabeled leaves".into());
        }
        let expected_marks: BTreeSet<u32> = (0..marks.len() as u32).collect();
        if marks != expected_marks {
            return fail(format!("marks are not exactly 0..{}", marks.len()));
        }
        self.check_mark_order(root, u32::MAX)
    }

    fn check_mark_order(&self, v: u32, bound: u32) -> Result<()> {
        let bound = match self.kinds[&v] {
            MarkedVertexKind::Head { mark } => {
                if bound != u32::MAX && mark <= bound {
                    return Err(Error::InvalidMarkedTree(format!(
                        "mark {mark} is not larger than mark {bound} above it"
                    )));
                }
                if bound == u32::MAX && mark != 0 {
                    return Err(Error::InvalidMarkedTree(format!(
                        "topmost mark is {mark}, not 0"
                    )));
                }
                mark
            }
            _ => bound,
        };
        for &c in self.children(v) {
            self.check_mark_order(c, bound)?;
        }
        Ok(())
    }

    /// The heads sorted by mark.
    pub fn heads_by_mark(&self) -> Vec<u32> {
        let mut heads: Vec<(u32, u32)> = self
            .kinds
            .iter()
            .filter_map(|(&v, &k)| match k {
                MarkedVertexKind::Head { mark } => Some((mark, v)),
                _ => None,
            })
            .collect();
        heads.sort_unstable();
        heads.into_iter().map(|(_, v)| v).collect()
    }

    /// The run-ending intermediate reached from the given head.
    pub fn foot_of(&self, head: u32) -> u32 {
        let mut cur = self.children(head)[0];
        loop {
            let out = self.children(cur);
            if out.len() == 1 {
                return cur;
            }
            cur = *out
                .iter()
                .find(|&&c| matches!(self.kinds[&c], MarkedVertexKind::Intermediate))
                .unwrap();
        }
    }
}

/// Detaches a cherry-terminated spinal tree-child network into its marked
/// tree.
///
/// Along the given spine, the arc from each reticulation's lower parent is
/// removed, as are the arc to the terminal leaf and the terminal leaf
/// itself. The root becomes the head with mark 0 and the reticulations, in
/// spine order, the heads with marks 1, 2, and so on.
///
/// # Errors
///
/// Returns [`Error::CherryExpected`] when the spine does not end in a
/// cherry, and spine or validity errors as usual.
pub fn network_to_marked_tree(net: &PhyloNetwork, spine: &Spine) -> Result<MarkedTree> {
    net.check_spine(spine)?;
    if !net.is_tree_child()? {
        return Err(Error::NotSpinalTreeChild(
            "an internal vertex has no non-reticulation child".into(),
        ));
    }
    if net.classify_terminal(spine)? != TerminalShape::Cherry {
        return Err(Error::CherryExpected);
    }
    let path = &spine.path;
    let last = path.len() - 1;
    let terminal = path[last];
    let mut removed: BTreeSet<(u32, u32)> = BTreeSet::new();
    for &p in &spine.reticulation_positions {
        removed.insert((path[p - 1], path[p]));
    }
    removed.insert((path[last - 1], terminal));
    let mut mark_of: BTreeMap<u32, u32> = BTreeMap::new();
    mark_of.insert(path[0], 0);
    for (rank, &p) in spine.reticulation_positions.iter().enumerate() {
        mark_of.insert(path[p], rank as u32 + 1);
    }
    let vertices: Vec<(u32, MarkedVertexKind)> = net
        .vertices()
        .filter(|&(v, _)| v != terminal)
        .map(|(v, kind)| {
            let mk = match kind {
                VertexKind::Root | VertexKind::Reticulation => {
                    MarkedVertexKind::Head { mark: mark_of[&v] }
                }
                VertexKind::TreeVertex => MarkedVertexKind::Intermediate,
                VertexKind::Leaf => MarkedVertexKind::Leaf { label: net.label_of(v) },
            };
            (v, mk)
        })
        .collect();
    let arcs: Vec<(u32, u32)> = net.arcs().filter(|a| !removed.contains(a)).collect();
    let tree = MarkedTree::from_parts(vertices, arcs);
    tree.validate()?;
    Ok(tree)
}

/// Restores the network a marked tree came from.
///
/// Each head with mark i >= 1 regains an arc from the run-ending
/// intermediate under the head with mark i-1, and a fresh terminal leaf is
/// attached under the last run. For a labeled tree the terminal's label
/// must be supplied and fresh; for an unlabeled tree it must be absent.
pub fn marked_tree_to_network(
    tree: &MarkedTree,
    terminal_label: Option<u32>,
) -> Result<PhyloNetwork> {
    tree.validate()?;
    if tree.is_labeled() != terminal_label.is_some() {
        return Err(Error::LabelModeMismatch);
    }
    if let Some(label) = terminal_label {
        if tree.labels().contains(&label) {
            return Err(Error::LabelCollision(label));
        }
    }
    let heads = tree.heads_by_mark();
    let terminal = tree.vertices().map(|(v, _)| v).max().unwrap() + 1;
    let mut vertices: Vec<(u32, VertexKind)> = tree
        .vertices()
        .map(|(v, kind)| {
            let nk = match kind {
                MarkedVertexKind::Head { mark: 0 } => VertexKind::Root,
                MarkedVertexKind::Head { .. } => VertexKind::Reticulation,
                MarkedVertexKind::Intermediate => VertexKind::TreeVertex,
                MarkedVertexKind::Leaf { .. } => VertexKind::Leaf,
            };
            (v, nk)
        })
        .collect();
    vertices.push((terminal, VertexKind::Leaf));
    let mut arcs: Vec<(u32, u32)> = tree.arcs().collect();
    for pair in heads.windows(2) {
        arcs.push((tree.foot_of(pair[0]), pair[1]));
    }
    arcs.push((tree.foot_of(*heads.last().unwrap()), terminal));
    let labels: Option<Vec<(u32, u32)>> = if tree.is_labeled() {
        let mut labels: Vec<(u32, u32)> = tree
            .vertices()
            .filter_map(|(v, kind)| match kind {
                MarkedVertexKind::Leaf { label: Some(l) } => Some((v, l)),
                _ => None,
            })
            .collect();
        labels.push((terminal, terminal_label.unwrap()));
        Some(labels)
    } else {
        None
    };
    let net = PhyloNetwork::from_parts(vertices, arcs, labels);
    net.require_valid()?;
    Ok(net)
}

/// Grows a cherry-terminated network into a non-cherry one by adding a
/// reticulation.
///
/// One of the two cherry arcs (index 0 or 1, in child id order) is
/// subdivided by a new reticulation, and one spine arc whose head is a
/// tree vertex (index counted from the root) is subdivided by a new tree
/// vertex feeding that reticulation. The choices range over 2 and n+k'-1
/// values respectively, where k' counts the input's reticulations.
pub fn cherry_to_non_cherry(
    net: &PhyloNetwork,
    cherry_arc_choice: usize,
    tree_arc_choice: usize,
) -> Result<PhyloNetwork> {
    net.require_valid()?;
    if !net.is_tree_child()? {
        return Err(Error::NotSpinalTreeChild(
            "an internal vertex has no non-reticulation child".into(),
        ));
    }
    let spines = net.find_spines()?;
    let spine = spines.first().ok_or_else(|| {
        Error::NotSpinalTreeChild("no root-to-leaf path covers all internal vertices".into())
    })?;
    if net.classify_terminal(spine)? != TerminalShape::Cherry {
        return Err(Error::CherryExpected);
    }
    let path = &spine.path;
    let last = path.len() - 1;
    let cherry_parent = path[last - 1];
    if net.kind(cherry_parent) != Some(VertexKind::TreeVertex) {
        return Err(Error::CherryExpected);
    }
    let cherry_leaves = net.children(cherry_parent);
    if cherry_arc_choice > 1 {
        return Err(Error::InvalidChoice(format!(
            "cherry arc choice {cherry_arc_choice} is not 0 or 1"
        )));
    }
    let target_leaf = cherry_leaves[cherry_arc_choice];
    let tree_headed: Vec<(u32, u32)> = path
        .windows(2)
        .filter(|pair| net.kind(pair[1]) == Some(VertexKind::TreeVertex))
        .map(|pair| (pair[0], pair[1]))
        .collect();
    let &(tail, head) = tree_headed.get(tree_arc_choice).ok_or_else(|| {
        Error::InvalidChoice(format!(
            "tree arc choice {tree_arc_choice} outside 0..{}",
            tree_headed.len()
        ))
    })?;
    let max_id = net.vertices().map(|(v, _)| v).max().unwrap();
    let new_ret = max_id + 1;
    let new_tree = max_id + 2;
    let mut vertices: Vec<(u32, VertexKind)> = net.vertices().collect();
    vertices.push((new_ret, VertexKind::Reticulation));
    vertices.push((new_tree, VertexKind::TreeVertex));
    let mut arcs: Vec<(u32, u32)> = net
        .arcs()
        .filter(|&a| a != (cherry_parent, target_leaf) && a != (tail, head))
        .collect();
    arcs.extend([
        (cherry_parent, new_ret),
        (new_ret, target_leaf),
        (tail, new_tree),
        (new_tree, head),
        (new_tree, new_ret),
    ]);
    let labels = net.leaf_labels().map(|m| m.iter().map(|(&v, &l)| (v, l)).collect::<Vec<_>>());
    let grown = PhyloNetwork::from_parts(vertices, arcs, labels);
    grown.require_valid()?;
    Ok(grown)
}

/// Shrinks a non-cherry network into a cherry one, returning the removed
/// reticulation's two placement choices.
///
/// Inverse to [`cherry_to_non_cherry`]: the terminal's reticulation parent
/// and its upper feeding tree vertex are contracted away, and the returned
/// choices reproduce the input when fed back.
pub fn non_cherry_to_cherry(net: &PhyloNetwork) -> Result<(PhyloNetwork, usize, usize)> {
    net.require_valid()?;
    if !net.is_tree_child()? {
        return Err(Error::NotSpinalTreeChild(
            "an internal vertex has no non-reticulation child".into(),
        ));
    }
    let spines = net.find_spines()?;
    let spine = spines.first().ok_or_else(|| {
        Error::NotSpinalTreeChild("no root-to-leaf path covers all internal vertices".into())
    })?;
    if net.classify_terminal(spine)? != TerminalShape::NonCherry {
        return Err(Error::NonCherryExpected);
    }
    let path = &spine.path;
    let last = path.len() - 1;
    let terminal = path[last];
    let ret = path[last - 1];
    let lower_parent = path[last - 2];
    let upper_parent = *net.parents(ret).iter().find(|&&p| p != lower_parent).unwrap();
    let upper_grandparent = net.parents(upper_parent)[0];
    let upper_child = *net
        .children(upper_parent)
        .iter()
        .find(|&&c| c != ret)
        .unwrap();
    let vertices: Vec<(u32, VertexKind)> =
        net.vertices().filter(|&(v, _)| v != ret && v != upper_parent).collect();
    let mut arcs: Vec<(u32, u32)> = net
        .arcs()
        .filter(|&(u, v)| u != ret && v != ret && u != upper_parent && v != upper_parent)
        .collect();
    arcs.push((lower_parent, terminal));
    arcs.push((upper_grandparent, upper_child));
    let labels = net.leaf_labels().map(|m| m.iter().map(|(&v, &l)| (v, l)).collect::<Vec<_>>());
    let shrunk = PhyloNetwork::from_parts(vertices, arcs, labels);
    shrunk.require_valid()?;
    let cherry_leaves = shrunk.children(lower_parent);
    let cherry_arc_choice =
        cherry_leaves.iter().position(|&c| c == terminal).expect("terminal stays a cherry leaf");
    let shrunk_spines = shrunk.find_spines()?;
    let shrunk_spine = shrunk_spines
        .first()
        .ok_or_else(|| Error::NotSpinalTreeChild("shrunk network lost its spine".into()))?;
    let tree_arc_choice = shrunk_spine
        .path
        .windows(2)
        .filter(|pair| shrunk.kind(pair[1]) == Some(VertexKind::TreeVertex))
        .position(|pair| (pair[0], pair[1]) == (upper_grandparent, upper_child))
        .ok_or_else(|| {
            Error::InvalidChoice("contracted arc is not a tree-headed spine arc".into())
        })?;
    Ok((shrunk, cherry_arc_choice, tree_arc_choice))
}
