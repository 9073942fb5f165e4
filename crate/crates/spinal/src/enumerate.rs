//! Exhaustive generation of every family at small parameter sizes.
//!
//! All enumerators are deterministic and budget-guarded: they refuse
//! oversized parameters and stop with an error when an object or time
//! limit is hit, so runaway requests fail cleanly instead of hanging.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::canon::canonical_form;
use crate::codec::{decode_nlsctc, decode_nlstc};
use crate::error::{Error, Result};
use crate::marked::{cherry_to_non_cherry, marked_tree_to_network, MarkedTree, MarkedVertexKind};
use crate::network::PhyloNetwork;
use crate::partition::PairPartition;
use crate::word::Word;

/// Limits applied to every enumeration call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest accepted leaf/letter parameter.
    pub max_n: u32,
    /// Largest accepted reticulation/pair parameter.
    pub max_k: u32,
    /// Largest number of produced objects.
    pub max_objects: u64,
    /// Wall-clock limit for one call.
    pub time_limit: Duration,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_n: 12,
            max_k: 8,
            max_objects: 10_000_000,
            time_limit: Duration::from_secs(300),
        }
    }
}

pub(crate) struct BudgetGuard<'a> {
    budget: &'a EnumerationBudget,
    deadline: Instant,
    produced: u64,
}

impl<'a> BudgetGuard<'a> {
    pub(crate) fn new(budget: &'a EnumerationBudget) -> Self {
        BudgetGuard { budget, deadline: Instant::now() + budget.time_limit, produced: 0 }
    }

    pub(crate) fn check_params(&self, n: u32, k: u32) -> Result<()> {
        if n > self.budget.max_n || k > self.budget.max_k {
            return Err(Error::ParameterRange(format!(
                "parameters ({n}, {k}) exceed the budget ({}, {})",
                self.budget.max_n, self.budget.max_k
            )));
        }
        Ok(())
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.produced += 1;
        if self.produced > self.budget.max_objects {
            return Err(Error::BudgetExceeded(format!(
                "more than {} objects",
                self.budget.max_objects
            )));
        }
        if self.produced % 256 == 0 && Instant::now() > self.deadline {
            return Err(Error::BudgetExceeded(format!(
                "time limit {:?} passed",
                self.budget.time_limit
            )));
        }
        Ok(())
    }
}

/// All partitions of `1..=n+k` into k pairs and n-k singletons, in a
/// fixed recursive order.
pub fn enumerate_pair_partitions(
    n: u32,
    k: u32,
    budget: &EnumerationBudget,
) -> Result<Vec<PairPartition>> {
    let mut guard = BudgetGuard::new(budget);
    guard.check_params(n, k)?;
    if k > n {
        return Ok(Vec::new());
    }
    let ground: Vec<u32> = (1..=n + k).collect();
    let mut out = Vec::new();
    let mut pairs = Vec::new();
    let mut singletons = Vec::new();
    partition_rec(n, k, &ground, &mut pairs, &mut singletons, &mut out, &mut guard)?;
    Ok(out)
}

fn partition_rec(
    n: u32,
    k: u32,
    available: &[u32],
    pairs: &mut Vec<(u32, u32)>,
    singletons: &mut Vec<u32>,
    out: &mut Vec<PairPartition>,
    guard: &mut BudgetGuard<'_>,
) -> Result<()> {
    if available.is_empty() {
        guard.tick()?;
        out.push(PairPartition::new(n, k, pairs.clone(), singletons.clone())?);
        return Ok(());
    }
    let first = available[0];
    if (singletons.len() as u32) < n - k {
        singletons.push(first);
        partition_rec(n, k, &available[1..], pairs, singletons, out, guard)?;
        singletons.pop();
    }
    if (pairs.len() as u32) < k {
        for idx in 1..available.len() {
            let partner = available[idx];
            let rest: Vec<u32> =
                available[1..].iter().copied().filter(|&x| x != partner).collect();
            pairs.push((first, partner));
            partition_rec(n, k, &rest, pairs, singletons, out, guard)?;
            pairs.pop();
        }
    }
    Ok(())
}

/// The canonical representative of every adjacent-occurrence class with
/// parameters (n, k), via the pair-partition bijection.
pub fn enumerate_c1_classes(n: u32, k: u32, budget: &EnumerationBudget) -> Result<Vec<Word>> {
    let partitions = enumerate_pair_partitions(n, k, budget)?;
    Ok(partitions.iter().map(PairPartition::to_word).collect())
}

fn combinations(m: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    combinations_rec(0, m, t, &mut current, &mut out);
    out
}

fn combinations_rec(
    start: usize,
    m: usize,
    t: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == t {
        out.push(current.clone());
        return;
    }
    let needed = t - current.len();
    for i in start..=m.saturating_sub(needed) {
        current.push(i);
        combinations_rec(i + 1, m, t, current, out);
        current.pop();
    }
}

/// The canonical representative of every high-separated class with
/// parameters (n, k).
///
/// Each word is assembled from a perfect matching of `1..=2k` (fixing the
/// low letters' relative order) and a choice of body positions for the
/// high letters.
pub fn enumerate_c2_classes(n: u32, k: u32, budget: &EnumerationBudget) -> Result<Vec<Word>> {
    let mut guard = BudgetGuard::new(budget);
    guard.check_params(n, k)?;
    if k > n {
        return Ok(Vec::new());
    }
    let matchings = enumerate_pair_partitions(k, k, budget)?;
    let body_len = (n + 2 * k) as usize;
    let high_count = (n - k) as usize;
    let position_choices = combinations(body_len, high_count);
    let mut out = Vec::new();
    for matching in &matchings {
        let mut low_sequence: Vec<u32> = Vec::with_capacity(3 * k as usize);
        let mut slot_letter = vec![0u32; 2 * k as usize + 1];
        for (idx, &(min, max)) in matching.pairs.iter().enumerate() {
            slot_letter[min as usize] = idx as u32 + 1;
            slot_letter[max as usize] = idx as u32 + 1;
        }
        for slot in 1..=2 * k as usize {
            let letter = slot_letter[slot];
            let is_double = matching.pairs[letter as usize - 1].1 as usize == slot;
            low_sequence.push(letter);
            if is_double {
                low_sequence.push(letter);
            }
        }
        for positions in &position_choices {
            let high_positions: BTreeSet<usize> = positions.iter().copied().collect();
            let mut letters = Vec::with_capacity(2 * n as usize + k as usize);
            let mut next_high = k + 1;
            let mut low_iter = low_sequence.iter();
            for pos in 0..body_len {
                if high_positions.contains(&pos) {
                    letters.push(next_high);
                    next_high += 1;
                } else {
                    letters.push(*low_iter.next().unwrap());
                }
            }
            letters.extend(k + 1..=n);
            guard.tick()?;
            out.push(Word { n, k, letters });
        }
    }
    Ok(out)
}

/// Every unlabeled strictly spinal tree-child network with n leaves and k
/// reticulations, one per isomorphism class.
pub fn enumerate_nlstc(
    n: u32,
    k: u32,
    budget: &EnumerationBudget,
) -> Result<Vec<PhyloNetwork>> {
    if n == 0 || k >= n {
        return Ok(Vec::new());
    }
    let words = enumerate_c1_classes(n - 1, k, budget)?;
    words.iter().map(decode_nlstc).collect()
}

/// Every unlabeled spinal caterpillar tree-child network with n leaves
/// and k reticulations, one per isomorphism class.
pub fn enumerate_nlsctc(
    n: u32,
    k: u32,
    budget: &EnumerationBudget,
) -> Result<Vec<PhyloNetwork>> {
    if n == 0 || k >= n {
        return Ok(Vec::new());
    }
    let words = enumerate_c2_classes(n - 1, k, budget)?;
    words.iter().map(decode_nlsctc).collect()
}

#[derive(Clone)]
enum SeqItem {
    Leaf(Option<u32>),
    Sub(ShapeNode),
}

#[derive(Clone)]
struct ShapeNode {
    mark: u32,
    items: Vec<SeqItem>,
    foot_label: Option<u32>,
}

fn labeled_shapes(
    marks: &[u32],
    labels: &BTreeSet<u32>,
    guard: &mut BudgetGuard<'_>,
) -> Result<Vec<ShapeNode>> {
    if labels.len() < marks.len() {
        return Ok(Vec::new());
    }
    let mark = marks[0];
    let rest_marks: BTreeSet<u32> = marks[1..].iter().copied().collect();
    let mut out = Vec::new();
    for &foot in labels {
        let mut remaining = labels.clone();
        remaining.remove(&foot);
        for items in labeled_sequences(&rest_marks, &remaining, guard)? {
            guard.tick()?;
            out.push(ShapeNode { mark, items, foot_label: Some(foot) });
        }
    }
    Ok(out)
}

fn labeled_sequences(
    marks_left: &BTreeSet<u32>,
    labels_left: &BTreeSet<u32>,
    guard: &mut BudgetGuard<'_>,
) -> Result<Vec<Vec<SeqItem>>> {
    if marks_left.is_empty() && labels_left.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    let mut out = Vec::new();
    for &leaf in labels_left {
        let mut rest_labels = labels_left.clone();
        rest_labels.remove(&leaf);
        for mut seq in labeled_sequences(marks_left, &rest_labels, guard)? {
            seq.insert(0, SeqItem::Leaf(Some(leaf)));
            out.push(seq);
        }
    }
    let mark_vec: Vec<u32> = marks_left.iter().copied().collect();
    for group in nonempty_subsets(&mark_vec) {
        let group_set: BTreeSet<u32> = group.iter().copied().collect();
        let rest_marks: BTreeSet<u32> = marks_left.difference(&group_set).copied().collect();
        let label_vec: Vec<u32> = labels_left.iter().copied().collect();
        for sub_labels in nonempty_subsets(&label_vec) {
            if sub_labels.len() < group.len() {
                continue;
            }
            let sub_label_set: BTreeSet<u32> = sub_labels.iter().copied().collect();
            let rest_labels: BTreeSet<u32> =
                labels_left.difference(&sub_label_set).copied().collect();
            for sub in labeled_shapes(&group, &sub_label_set, guard)? {
                for mut seq in labeled_sequences(&rest_marks, &rest_labels, guard)? {
                    seq.insert(0, SeqItem::Sub(sub.clone()));
                    out.push(seq);
                }
            }
        }
    }
    Ok(out)
}

fn nonempty_subsets(items: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << items.len()) {
        let subset: Vec<u32> = items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &x)| x)
            .collect();
        out.push(subset);
    }
    out
}

fn unlabeled_shapes(
    marks: &[u32],
    leaves: usize,
    guard: &mut BudgetGuard<'_>,
) -> Result<Vec<ShapeNode>> {
    if leaves < marks.len() {
        return Ok(Vec::new());
    }
    let mark = marks[0];
    let rest_marks: BTreeSet<u32> = marks[1..].iter().copied().collect();
    let mut out = Vec::new();
    for items in unlabeled_sequences(&rest_marks, leaves - 1, guard)? {
        guard.tick()?;
        out.push(ShapeNode { mark, items, foot_label: None });
    }
    Ok(out)
}

fn unlabeled_sequences(
    marks_left: &BTreeSet<u32>,
    leaves_left: usize,
    guard: &mut BudgetGuard<'_>,
) -> Result<Vec<Vec<SeqItem>>> {
    if marks_left.is_empty() && leaves_left == 0 {
        return Ok(vec![Vec::new()]);
    }
    let mut out = Vec::new();
    if leaves_left > 0 {
        for mut seq in unlabeled_sequences(marks_left, leaves_left - 1, guard)? {
            seq.insert(0, SeqItem::Leaf(None));
            out.push(seq);
        }
    }
    let mark_vec: Vec<u32> = marks_left.iter().copied().collect();
    for group in nonempty_subsets(&mark_vec) {
        let group_set: BTreeSet<u32> = group.iter().copied().collect();
        let rest_marks: BTreeSet<u32> = marks_left.difference(&group_set).copied().collect();
        for sub_leaves in group.len()..=leaves_left {
            for sub in unlabeled_shapes(&group, sub_leaves, guard)? {
                for mut seq in unlabeled_sequences(&rest_marks, leaves_left - sub_leaves, guard)? {
                    seq.insert(0, SeqItem::Sub(sub.clone()));
                    out.push(seq);
                }
            }
        }
    }
    Ok(out)
}

struct TreeBuilder {
    next_id: u32,
    vertices: Vec<(u32, MarkedVertexKind)>,
    arcs: Vec<(u32, u32)>,
}

impl TreeBuilder {
    fn fresh(&mut self, kind: MarkedVertexKind) -> u32 {
        let id = self.next_id;
        self.next_id += 1;
        self.vertices.push((id, kind));
        id
    }

    fn emit(&mut self, shape: &ShapeNode) -> u32 {
        let head = self.fresh(MarkedVertexKind::Head { mark: shape.mark });
        let mut prev = head;
        for item in &shape.items {
            let inter = self.fresh(MarkedVertexKind::Intermediate);
            self.arcs.push((prev, inter));
            match item {
                SeqItem::Leaf(label) => {
                    let leaf = self.fresh(MarkedVertexKind::Leaf { label: *label });
                    self.arcs.push((inter, leaf));
                }
                SeqItem::Sub(sub) => {
                    let sub_head = self.emit(sub);
                    self.arcs.push((inter, sub_head));
                }
            }
            prev = inter;
        }
        let foot = self.fresh(MarkedVertexKind::Intermediate);
        self.arcs.push((prev, foot));
        let leaf = self.fresh(MarkedVertexKind::Leaf { label: shape.foot_label });
        self.arcs.push((foot, leaf));
        head
    }
}

fn materialize(shape: &ShapeNode) -> MarkedTree {
    let mut builder = TreeBuilder { next_id: 0, vertices: Vec::new(), arcs: Vec::new() };
    builder.emit(shape);
    MarkedTree::from_parts(builder.vertices, builder.arcs)
}

/// Every labeled marked tree over the given leaf labels with the given
/// number of marks.
pub fn enumerate_marked_trees(
    labels: &[u32],
    marks: u32,
    budget: &EnumerationBudget,
) -> Result<Vec<MarkedTree>> {
    let mut guard = BudgetGuard::new(budget);
    guard.check_params(labels.len() as u32, marks)?;
    let label_set: BTreeSet<u32> = labels.iter().copied().collect();
    if label_set.len() != labels.len() {
        return Err(Error::ParameterRange("leaf labels must be distinct".into()));
    }
    if marks == 0 {
        return Ok(Vec::new());
    }
    let mark_list: Vec<u32> = (0..marks).collect();
    let shapes = labeled_shapes(&mark_list, &label_set, &mut guard)?;
    Ok(shapes.iter().map(materialize).collect())
}

/// Every unlabeled marked tree with the given numbers of leaves and
/// marks.
pub fn enumerate_unlabeled_marked_trees(
    leaves: u32,
    marks: u32,
    budget: &EnumerationBudget,
) -> Result<Vec<MarkedTree>> {
    let mut guard = BudgetGuard::new(budget);
    guard.check_params(leaves, marks)?;
    if marks == 0 {
        return Ok(Vec::new());
    }
    let mark_list: Vec<u32> = (0..marks).collect();
    let shapes = unlabeled_shapes(&mark_list, leaves as usize, &mut guard)?;
    Ok(shapes.iter().map(materialize).collect())
}

/// Every labeled spinal tree-child network with n leaves and k
/// reticulations, one per labeled isomorphism class.
///
/// Cherry-terminated networks come from marked trees (each arises from two
/// terminal choices, removed by canonical deduplication); the rest come
/// from growing a reticulation onto the cherry-terminated networks with
/// one fewer reticulation.
pub fn enumerate_stc(n: u32, k: u32, budget: &EnumerationBudget) -> Result<Vec<PhyloNetwork>> {
    let guard = BudgetGuard::new(budget);
    guard.check_params(n, k)?;
    if n == 0 || k >= n {
        return Ok(Vec::new());
    }
    if n == 1 {
        let net = PhyloNetwork::from_parts(
            vec![(0, crate::network::VertexKind::Root), (1, crate::network::VertexKind::Leaf)],
            vec![(0, 1)],
            Some(vec![(1, 1)]),
        );
        return Ok(vec![net]);
    }
    let mut out = enumerate_stc_cherry(n, k, budget)?;
    if k >= 1 {
        let bases = enumerate_stc_cherry(n, k - 1, budget)?;
        let tree_arc_count = (n + k - 2) as usize;
        for base in &bases {
            for cherry_choice in 0..2 {
                for tree_choice in 0..tree_arc_count {
                    out.push(cherry_to_non_cherry(base, cherry_choice, tree_choice)?);
                }
            }
        }
    }
    Ok(out)
}

fn enumerate_stc_cherry(
    n: u32,
    k: u32,
    budget: &EnumerationBudget,
) -> Result<Vec<PhyloNetwork>> {
    let mut by_certificate: std::collections::BTreeMap<String, PhyloNetwork> =
        std::collections::BTreeMap::new();
    for removed in 1..=n {
        let labels: Vec<u32> = (1..=n).filter(|&l| l != removed).collect();
        for tree in enumerate_marked_trees(&labels, k + 1, budget)? {
            let net = marked_tree_to_network(&tree, Some(removed))?;
            by_certificate.insert(canonical_form(&net)?, net);
        }
    }
    Ok(by_certificate.into_values().collect())
}
