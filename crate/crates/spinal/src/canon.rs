//! Canonical forms and isomorphism tests for networks.
//!
//! The canonical form is a string certificate: two networks produce the same
//! certificate iff they are isomorphic (respecting leaf labels when both
//! carry them). It is computed by color refinement with individualization,
//! taking the lexicographically smallest certificate over all branches.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::network::{PhyloNetwork, VertexKind};

/// A certificate invariant under vertex renaming.
///
/// ```
/// use spinal::{canonical_form, PhyloNetwork, VertexKind};
///
/// let a = PhyloNetwork::from_parts(
///     vec![(0, VertexKind::Root), (7, VertexKind::Leaf)],
///     vec![(0, 7)],
///     None,
/// );
/// let b = PhyloNetwork::from_parts(
///     vec![(5, VertexKind::Leaf), (9, VertexKind::Root)],
///     vec![(9, 5)],
///     None,
/// );
/// assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
/// ```
pub fn canonical_form(net: &PhyloNetwork) -> Result<String> {
    net.require_valid()?;
    let ids: Vec<u32> = net.vertices().map(|(v, _)| v).collect();
    let index: BTreeMap<u32, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let children: Vec<Vec<usize>> =
        ids.iter().map(|&v| net.children(v).iter().map(|c| index[c]).collect()).collect();
    let parents: Vec<Vec<usize>> =
        ids.iter().map(|&v| net.parents(v).iter().map(|p| index[p]).collect()).collect();
    let initial: Vec<u64> = ids
        .iter()
        .map(|&v| {
            let kind_rank = match net.kind(v).unwrap() {
                VertexKind::Root => 0u64,
                VertexKind::TreeVertex => 1,
                VertexKind::Reticulation => 2,
                VertexKind::Leaf => 3,
            };
            kind_rank + 4 * u64::from(net.label_of(v).unwrap_or(0))
        })
        .collect();
    let ctx = Ctx { children: &children, parents: &parents };
    let mode = if net.is_labeled() { "lab" } else { "unl" };
    Ok(format!("{mode}|{}", ctx.search(initial)))
}

/// True iff the two networks are isomorphic.
///
/// Both must be labeled or both unlabeled; a labeled isomorphism must match
/// labels exactly.
///
/// # Errors
///
/// Returns [`Error::LabelModeMismatch`] when one side is labeled and the
/// other is not, and [`Error::InvalidNetwork`] when either fails validation.
pub fn isomorphic(a: &PhyloNetwork, b: &PhyloNetwork) -> Result<bool> {
    if a.is_labeled() != b.is_labeled() {
        return Err(Error::LabelModeMismatch);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

struct Ctx<'a> {
    children: &'a [Vec<usize>],
    parents: &'a [Vec<usize>],
}

impl Ctx<'_> {
    fn refine(&self, mut colors: Vec<u64>) -> Vec<u64> {
        loop {
            let mut signatures: Vec<(u64, Vec<u64>, Vec<u64>)> = Vec::with_capacity(colors.len());
            for v in 0..colors.len() {
                let mut ch: Vec<u64> = self.children[v].iter().map(|&c| colors[c]).collect();
                ch.sort_unstable();
                let mut pa: Vec<u64> = self.parents[v].iter().map(|&p| colors[p]).collect();
                pa.sort_unstable();
                signatures.push((colors[v], ch, pa));
            }
            let mut sorted: Vec<&(u64, Vec<u64>, Vec<u64>)> = signatures.iter().collect();
            sorted.sort();
            sorted.dedup();
            let rank: BTreeMap<&(u64, Vec<u64>, Vec<u64>), u64> =
                sorted.iter().enumerate().map(|(i, &s)| (s, i as u64)).collect();
            let next: Vec<u64> = signatures.iter().map(|s| rank[s]).collect();
            if next == colors {
                return colors;
            }
            colors = next;
        }
    }

    fn search(&self, colors: Vec<u64>) -> String {
        let colors = self.refine(colors);
        let n = colors.len();
        let mut class_size = BTreeMap::new();
        for &c in &colors {
            *class_size.entry(c).or_insert(0usize) += 1;
        }
        if let Some((&target, _)) = class_size.iter().find(|(_, &size)| size > 1) {
            let mut best: Option<String> = None;
            for v in 0..n {
                if colors[v] == target {
                    let mut branched = colors.clone();
                    branched[v] = n as u64 + 1 + branched[v] * (n as u64 + 1);
                    let cert = self.search(branched);
                    if best.as_ref().map_or(true, |b| cert < *b) {
                        best = Some(cert);
                    }
                }
            }
            return best.unwrap();
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| colors[v]);
        let position: BTreeMap<usize, usize> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut out = String::new();
        for &v in &order {
            let kind = match (self.parents[v].len(), self.children[v].len()) {
                (0, _) => 'R',
                (_, 0) => 'L',
                (1, _) => 'T',
                _ => 'H',
            };
            out.push(kind);
            let mut ch: Vec<usize> = self.children[v].iter().map(|&c| position[&c]).collect();
            ch.sort_unstable();
            for c in ch {
                out.push_str(&format!("{c},"));
            }
            out.push(';');
        }
        out
    }
}
