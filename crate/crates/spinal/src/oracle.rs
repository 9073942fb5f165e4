//! Brute-force reference generation, independent of the word codecs.
//!
//! Networks are built directly from spine positions: choose where the
//! reticulations sit on a path of the forced length, choose a strictly
//! higher bend parent for each, fill every remaining tree vertex with a
//! fresh off-path leaf, then keep the candidates that validate. The only
//! shared machinery is the vertex/arc container and the canonical form
//! used for deduplication, so agreement with the counting formulas and
//! the enumerators checks real structure, not one code path against
//! itself.

use std::collections::BTreeMap;

use crate::canon::canonical_form;
use crate::enumerate::{BudgetGuard, EnumerationBudget};
use crate::error::{Error, Result};
use crate::network::{PhyloNetwork, VertexKind};

const ORACLE_MAX_N: u32 = 5;
const ORACLE_MAX_K: u32 = 3;

fn check_oracle_range(n: u32, k: u32) -> Result<()> {
    if n > ORACLE_MAX_N || k > ORACLE_MAX_K {
        return Err(Error::ParameterRange(format!(
            "oracle accepts n <= {ORACLE_MAX_N} and k <= {ORACLE_MAX_K}, got ({n}, {k})"
        )));
    }
    Ok(())
}

/// One unlabeled strictly spinal tree-child network per isomorphism
/// class, produced by exhaustive spine-position search.
pub fn oracle_nlstc(
    n: u32,
    k: u32,
    budget: &EnumerationBudget,
) -> Result<Vec<PhyloNetwork>> {
    check_oracle_range(n, k)?;
    let mut guard = BudgetGuard::new(budget);
    guard.check_params(n, k)?;
    if n == 0 || k >= n {
        return Ok(Vec::new());
    }
    let length = (n + 2 * k) as usize;
    let mut by_certificate: BTreeMap<String, PhyloNetwork> = BTreeMap::new();
    let positions: Vec<usize> = (2..length).collect();
    for ret_positions in subsets_of_size(&positions, k as usize) {
        let mut assignment = Vec::new();
        assign_bends(
            &ret_positions,
            0,
            &mut assignment,
            length,
            &mut guard,
            &mut by_certificate,
        )?;
    }
    Ok(by_certificate.into_values().collect())
}

fn subsets_of_size(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        items: &[usize],
        start: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            rec(items, i + 1, size, current, out);
            current.pop();
        }
    }
    rec(items, 0, size, &mut current, &mut out);
    out
}

fn assign_bends(
    ret_positions: &[usize],
    index: usize,
    assignment: &mut Vec<(usize, usize)>,
    length: usize,
    guard: &mut BudgetGuard<'_>,
    by_certificate: &mut BTreeMap<String, PhyloNetwork>,
) -> Result<()> {
    if index == ret_positions.len() {
        guard.tick()?;
        if let Some(net) = build_candidate(ret_positions, assignment, length) {
            by_certificate.insert(canonical_form(&net)?, net);
        }
        return Ok(());
    }
    let position = ret_positions[index];
    for bend in 1..position.saturating_sub(1) {
        if ret_positions.contains(&bend) {
            continue;
        }
        if assignment.iter().any(|&(_, b)| b == bend) {
            continue;
        }
        assignment.push((position, bend));
        assign_bends(ret_positions, index + 1, assignment, length, guard, by_certificate)?;
        assignment.pop();
    }
    Ok(())
}

fn build_candidate(
    ret_positions: &[usize],
    assignment: &[(usize, usize)],
    length: usize,
) -> Option<PhyloNetwork> {
    let mut vertices: Vec<(u32, VertexKind)> = Vec::new();
    let mut arcs: Vec<(u32, u32)> = Vec::new();
    vertices.push((0, VertexKind::Root));
    for j in 1..length {
        let kind = if ret_positions.contains(&j) {
            VertexKind::Reticulation
        } else {
            VertexKind::TreeVertex
        };
        vertices.push((j as u32, kind));
    }
    vertices.push((length as u32, VertexKind::Leaf));
    for j in 0..length {
        arcs.push((j as u32, j as u32 + 1));
    }
    for &(position, bend) in assignment {
        arcs.push((bend as u32, position as u32));
    }
    let mut next_leaf = length as u32 + 1;
    for j in 1..length {
        if ret_positions.contains(&j) {
            continue;
        }
        if assignment.iter().any(|&(_, b)| b == j) {
            continue;
        }
        arcs.push((j as u32, next_leaf));
        vertices.push((next_leaf, VertexKind::Leaf));
        next_leaf += 1;
    }
    let net = PhyloNetwork::from_parts(vertices, arcs, None);
    if !net.validate().is_empty() {
        return None;
    }
    if !net.is_tree_child().unwrap_or(false) {
        return None;
    }
    match net.find_spines() {
        Ok(spines) if !spines.is_empty() => Some(net),
        _ => None,
    }
}

/// One labeled spinal tree-child network per labeled isomorphism class,
/// produced by attaching every leaf labeling to every oracle shape and
/// deduplicating canonically.
pub fn oracle_stc(n: u32, k: u32, budget: &EnumerationBudget) -> Result<Vec<PhyloNetwork>> {
    check_oracle_range(n, k)?;
    let shapes = oracle_nlstc(n, k, budget)?;
    let mut guard = BudgetGuard::new(budget);
    let mut by_certificate: BTreeMap<String, PhyloNetwork> = BTreeMap::new();
    for shape in &shapes {
        let leaves: Vec<u32> = shape
            .vertices()
            .filter(|&(_, kind)| kind == VertexKind::Leaf)
            .map(|(v, _)| v)
            .collect();
        for labeling in permutations(n) {
            guard.tick()?;
            let pairs: Vec<(u32, u32)> =
                leaves.iter().copied().zip(labeling.iter().copied()).collect();
            let labeled = shape.with_labels(pairs);
            by_certificate.insert(canonical_form(&labeled)?, labeled);
        }
    }
    Ok(by_certificate.into_values().collect())
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; n as usize + 1];
    fn rec(n: u32, current: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if current.len() == n as usize {
            out.push(current.clone());
            return;
        }
        for value in 1..=n {
            if !used[value as usize] {
                used[value as usize] = true;
                current.push(value);
                rec(n, current, used, out);
                current.pop();
                used[value as usize] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}
