//! Encoding between networks and words.
//!
//! A spinal tree-child network maps to a word in the adjacent-occurrence
//! class; allowing caterpillars off the spine enlarges the image to the
//! high-separated class. Decoding inverts both maps with one shared
//! construction. A separate token form reads the spine bottom-to-top.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::network::{PhyloNetwork, Spine, VertexKind};
use crate::word::{LrqToken, LrqWord, Word, WordClass};

/// The role of one piece of a path decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathComponentKind {
    /// A maximal run of the spine, ending at a leaf.
    SpinalSegment,
    /// A single off-spine leaf.
    ExteriorLeaf,
}

/// One piece of a path decomposition: a directed path in the network.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathComponent {
    /// The vertices of the piece, in arc order.
    pub vertices: Vec<u32>,
    /// Whether the piece is a spine run or an exterior leaf.
    pub kind: PathComponentKind,
}

fn off_child(net: &PhyloNetwork, v: u32, spine_child: u32) -> u32 {
    let children = net.children(v);
    if children[0] == spine_child {
        children[1]
    } else {
        children[0]
    }
}

fn require_unlabeled(net: &PhyloNetwork) -> Result<()> {
    if net.is_labeled() {
        return Err(Error::LabeledInput);
    }
    Ok(())
}

fn require_tree_child(net: &PhyloNetwork) -> Result<()> {
    if !net.is_tree_child()? {
        return Err(Error::NotSpinalTreeChild(
            "an internal vertex has no non-reticulation child".into(),
        ));
    }
    Ok(())
}

/// Splits a spinal tree-child network into path pieces along the given
/// spine.
///
/// The spine is cut just before each reticulation; every piece before the
/// last is closed off by the off-spine leaf of the reticulation's lower
/// parent, and the last piece ends at the terminal leaf. Off-spine leaves
/// of the remaining tree vertices form single-leaf pieces, ordered by
/// their parents' spine positions.
pub fn decompose_paths(net: &PhyloNetwork, spine: &Spine) -> Result<Vec<PathComponent>> {
    require_unlabeled(net)?;
    net.check_spine(spine)?;
    require_tree_child(net)?;
    let path = &spine.path;
    let last = path.len() - 1;
    let ret_positions: BTreeSet<usize> = spine.reticulation_positions.iter().copied().collect();
    let mut components = Vec::new();
    let mut start = 0usize;
    for &p in &spine.reticulation_positions {
        let mut vertices: Vec<u32> = path[start..p].to_vec();
        vertices.push(off_child(net, path[p - 1], path[p]));
        components.push(PathComponent { vertices, kind: PathComponentKind::SpinalSegment });
        start = p;
    }
    components
        .push(PathComponent { vertices: path[start..].to_vec(), kind: PathComponentKind::SpinalSegment });
    for j in 1..last {
        if ret_positions.contains(&j) || ret_positions.contains(&(j + 1)) {
            continue;
        }
        let off = off_child(net, path[j], path[j + 1]);
        if net.kind(off) == Some(VertexKind::Leaf) {
            components
                .push(PathComponent { vertices: vec![off], kind: PathComponentKind::ExteriorLeaf });
        }
    }
    Ok(components)
}

struct CaterpillarChain {
    internals: Vec<u32>,
    side_leaves: Vec<u32>,
    terminator: u32,
}

fn caterpillar_chain(net: &PhyloNetwork, root: u32) -> Result<CaterpillarChain> {
    if net.kind(root) == Some(VertexKind::Leaf) {
        return Ok(CaterpillarChain { internals: Vec::new(), side_leaves: Vec::new(), terminator: root });
    }
    let mut internals = Vec::new();
    let mut side_leaves = Vec::new();
    let mut cur = root;
    loop {
        if net.kind(cur) != Some(VertexKind::TreeVertex) {
            return Err(Error::NotSpinalCaterpillar(format!(
                "off-spine vertex {cur} is not a tree vertex or leaf"
            )));
        }
        let children = net.children(cur);
        let leaf_children: Vec<u32> = children
            .iter()
            .copied()
            .filter(|&c| net.kind(c) == Some(VertexKind::Leaf))
            .collect();
        internals.push(cur);
        match leaf_children.len() {
            2 => {
                side_leaves.push(leaf_children[0]);
                return Ok(CaterpillarChain { internals, side_leaves, terminator: leaf_children[1] });
            }
            1 => {
                side_leaves.push(leaf_children[0]);
                cur = *children.iter().find(|&&c| c != leaf_children[0]).unwrap();
            }
            _ => {
                return Err(Error::NotSpinalCaterpillar(format!(
                    "off-spine vertex {cur} has no leaf child"
                )))
            }
        }
    }
}

/// Finds the root-to-leaf path through all reticulations such that every
/// off-path part is a caterpillar, nontrivial only beside a reticulation.
fn find_caterpillar_path(net: &PhyloNetwork) -> Result<Vec<u32>> {
    net.require_valid()?;
    require_tree_child(net)?;
    let root = net.root().expect("validated network has a unique root");
    let total_rets = net.reticulation_count();
    let mut stack = vec![vec![root]];
    while let Some(path) = stack.pop() {
        let last = *path.last().unwrap();
        if net.kind(last) == Some(VertexKind::Leaf) {
            if caterpillar_path_ok(net, &path, total_rets) {
                return Ok(path);
            }
            continue;
        }
        for &c in net.children(last).iter().rev() {
            let mut next = path.clone();
            next.push(c);
            stack.push(next);
        }
    }
    Err(Error::NotSpinalCaterpillar(
        "no root-to-leaf path carries all reticulations with caterpillars beside them".into(),
    ))
}

fn caterpillar_path_ok(net: &PhyloNetwork, path: &[u32], total_rets: usize) -> bool {
    let on_path: BTreeSet<u32> = path.iter().copied().collect();
    let rets_on_path =
        path.iter().filter(|&&v| net.kind(v) == Some(VertexKind::Reticulation)).count();
    if rets_on_path != total_rets {
        return false;
    }
    let mut covered = on_path.clone();
    for j in 1..path.len() - 1 {
        let v = path[j];
        if net.kind(v) != Some(VertexKind::TreeVertex) {
            continue;
        }
        let off = off_child(net, v, path[j + 1]);
        if net.kind(off) == Some(VertexKind::Reticulation) {
            continue;
        }
        let chain = match caterpillar_chain(net, off) {
            Ok(chain) => chain,
            Err(_) => return false,
        };
        if !chain.internals.is_empty()
            && net.kind(path[j + 1]) != Some(VertexKind::Reticulation)
        {
            return false;
        }
        covered.extend(chain.internals.iter().copied());
        covered.extend(chain.side_leaves.iter().copied());
        covered.insert(chain.terminator);
    }
    covered.len() == net.vertex_count()
}

fn encode_along(net: &PhyloNetwork, path: &[u32]) -> Result<Word> {
    let k = net.reticulation_count() as u32;
    let n_word = net.leaf_count() as u32 - 1;
    let mut low_index = std::collections::BTreeMap::new();
    for &v in path {
        if net.kind(v) == Some(VertexKind::Reticulation) {
            let next = low_index.len() as u32 + 1;
            low_index.insert(v, next);
        }
    }
    let mut letters = Vec::new();
    let mut next_high = k + 1;
    for j in 1..path.len() - 1 {
        let v = path[j];
        match net.kind(v).unwrap() {
            VertexKind::Reticulation => letters.push(low_index[&v]),
            VertexKind::TreeVertex => {
                let succ = path[j + 1];
                let off = off_child(net, v, succ);
                if net.kind(off) == Some(VertexKind::Reticulation) {
                    letters.push(low_index[&off]);
                } else {
                    let chain = caterpillar_chain(net, off)?;
                    if net.kind(succ) == Some(VertexKind::Reticulation) {
                        letters.push(low_index[&succ]);
                        for _ in &chain.internals {
                            letters.push(next_high);
                            next_high += 1;
                        }
                    } else {
                        if !chain.internals.is_empty() {
                            return Err(Error::NotSpinalCaterpillar(
                                "nontrivial caterpillar beside a non-reticulation".into(),
                            ));
                        }
                        letters.push(next_high);
                        next_high += 1;
                    }
                }
            }
            kind => {
                return Err(Error::NotSpinalTreeChild(format!(
                    "unexpected {kind:?} at path position {j}"
                )))
            }
        }
    }
    letters.extend(k + 1..=n_word);
    Ok(Word { n: n_word, k, letters })
}

/// Encodes a strictly spinal tree-child network as a word in the
/// adjacent-occurrence class with parameters (n-1, k).
///
/// The result is already canonical: high letters first appear in
/// increasing order.
///
/// # Errors
///
/// Returns [`Error::LabeledInput`] for labeled networks and
/// [`Error::NotSpinalTreeChild`] when the network has no spine or is not
/// tree-child.
pub fn encode_nlstc(net: &PhyloNetwork) -> Result<Word> {
    require_unlabeled(net)?;
    require_tree_child(net)?;
    let spines = net.find_spines()?;
    let spine = spines.first().ok_or_else(|| {
        Error::NotSpinalTreeChild("no root-to-leaf path covers all internal vertices".into())
    })?;
    encode_along(net, &spine.path)
}

/// Encodes a spinal caterpillar tree-child network as a word in the
/// high-separated class with parameters (n-1, k).
///
/// This accepts every network [`encode_nlstc`] accepts, plus networks
/// whose reticulations have caterpillar siblings.
pub fn encode_nlsctc(net: &PhyloNetwork) -> Result<Word> {
    require_unlabeled(net)?;
    let path = find_caterpillar_path(net)?;
    encode_along(net, &path)
}

/// Decodes a word of the given class back into the network it encodes.
fn decode(word: &Word, class: WordClass) -> Result<PhyloNetwork> {
    word.check_class(class)?;
    let n_word = word.n as usize;
    let k = word.k as usize;
    let body_len = n_word + 2 * k;
    let body = &word.letters[..body_len];
    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); n_word + 1];
    for (pos, &x) in body.iter().enumerate() {
        occurrences[x as usize].push(pos);
    }
    let mut boundaries = Vec::with_capacity(k);
    for i in 1..=k {
        boundaries.push(occurrences[i][2]);
    }
    let root = 0u32;
    let vertex_at = |pos: usize| pos as u32 + 1;
    let terminator = |piece: usize| (body_len + 1 + piece) as u32;
    let exterior = |letter: u32| body_len as u32 + 1 + (k as u32 + 1) + (letter - k as u32 - 1);

    let mut vertices: Vec<(u32, VertexKind)> = vec![(root, VertexKind::Root)];
    let third_positions: BTreeSet<usize> = boundaries.iter().copied().collect();
    for pos in 0..body_len {
        let kind = if third_positions.contains(&pos) {
            VertexKind::Reticulation
        } else {
            VertexKind::TreeVertex
        };
        vertices.push((vertex_at(pos), kind));
    }
    for piece in 0..=k {
        vertices.push((terminator(piece), VertexKind::Leaf));
    }
    for letter in k as u32 + 1..=n_word as u32 {
        vertices.push((exterior(letter), VertexKind::Leaf));
    }

    let mut arcs: Vec<(u32, u32)> = Vec::new();
    let mut piece_start = 0usize;
    let mut piece_index = 0usize;
    let mut starts = boundaries.clone();
    starts.push(body_len);
    for &end in &starts {
        let head = if piece_start == end {
            terminator(piece_index)
        } else {
            vertex_at(piece_start)
        };
        if piece_index == 0 {
            arcs.push((root, head));
        }
        for pos in piece_start..end {
            let next =
                if pos + 1 == end { terminator(piece_index) } else { vertex_at(pos + 1) };
            arcs.push((vertex_at(pos), next));
        }
        piece_start = end;
        piece_index += 1;
    }
    for i in 1..=k {
        let occ = &occurrences[i];
        arcs.push((vertex_at(occ[0]), vertex_at(occ[2])));
        arcs.push((vertex_at(occ[1]), vertex_at(occ[2])));
    }
    for letter in k as u32 + 1..=n_word as u32 {
        let first = occurrences[letter as usize][0];
        arcs.push((vertex_at(first), exterior(letter)));
    }

    let net = PhyloNetwork::from_parts(vertices, arcs, None);
    net.require_valid()?;
    Ok(net)
}

/// Decodes an adjacent-occurrence word into a strictly spinal tree-child
/// network with n+1 leaves and k reticulations.
pub fn decode_nlstc(word: &Word) -> Result<PhyloNetwork> {
    decode(word, WordClass::Adjacent)
}

/// Decodes a high-separated word into a spinal caterpillar tree-child
/// network with n+1 leaves and k reticulations.
pub fn decode_nlsctc(word: &Word) -> Result<PhyloNetwork> {
    decode(word, WordClass::HighSeparated)
}

/// Reads the spine of a strictly spinal tree-child network bottom-to-top
/// into tokens.
///
/// Reticulations are indexed from the terminal end; each internal spine
/// vertex below the root contributes one token: `R_i` for the i-th
/// reticulation, `Q_i` for the upper parent of the i-th reticulation, `L`
/// for a vertex with an off-spine leaf.
pub fn lrq_encode(net: &PhyloNetwork) -> Result<LrqWord> {
    require_unlabeled(net)?;
    require_tree_child(net)?;
    let spines = net.find_spines()?;
    let spine = spines.first().ok_or_else(|| {
        Error::NotSpinalTreeChild("no root-to-leaf path covers all internal vertices".into())
    })?;
    let path = &spine.path;
    let k = spine.reticulation_positions.len() as u32;
    let mut from_terminal = std::collections::BTreeMap::new();
    for (rank, &p) in spine.reticulation_positions.iter().enumerate() {
        from_terminal.insert(path[p], k - rank as u32);
    }
    let mut tokens = Vec::new();
    for j in (1..path.len() - 1).rev() {
        let v = path[j];
        let token = match net.kind(v).unwrap() {
            VertexKind::Reticulation => LrqToken::R(from_terminal[&v]),
            VertexKind::TreeVertex => {
                let off = off_child(net, v, path[j + 1]);
                if net.kind(off) == Some(VertexKind::Reticulation) {
                    LrqToken::Q(from_terminal[&off])
                } else {
                    LrqToken::L
                }
            }
            kind => {
                return Err(Error::NotSpinalTreeChild(format!(
                    "unexpected {kind:?} on the spine"
                )))
            }
        };
        tokens.push(token);
    }
    LrqWord::from_tokens(tokens)
}

/// Splits a spinal caterpillar tree-child network into path pieces.
///
/// Like [`decompose_paths`] with the spine found automatically, but each
/// piece before the last dives through the caterpillar beside its closing
/// reticulation, and the caterpillars' side leaves join the exterior
/// pieces.
pub fn decompose_caterpillar_paths(net: &PhyloNetwork) -> Result<Vec<PathComponent>> {
    require_unlabeled(net)?;
    let path = find_caterpillar_path(net)?;
    let mut segments: Vec<Vec<u32>> = vec![vec![path[0]]];
    let mut exterior: Vec<u32> = Vec::new();
    for j in 1..path.len() - 1 {
        let v = path[j];
        if net.kind(v) == Some(VertexKind::Reticulation) {
            segments.push(vec![v]);
            continue;
        }
        segments.last_mut().unwrap().push(v);
        let succ = path[j + 1];
        let off = off_child(net, v, succ);
        if net.kind(off) == Some(VertexKind::Reticulation) {
            continue;
        }
        let chain = caterpillar_chain(net, off)?;
        if net.kind(succ) == Some(VertexKind::Reticulation) {
            let segment = segments.last_mut().unwrap();
            segment.extend(chain.internals.iter().copied());
            segment.push(chain.terminator);
            exterior.extend(chain.side_leaves.iter().copied());
        } else {
            exterior.push(chain.terminator);
        }
    }
    segments.last_mut().unwrap().push(*path.last().unwrap());
    let mut components: Vec<PathComponent> = segments
        .into_iter()
        .map(|vertices| PathComponent { vertices, kind: PathComponentKind::SpinalSegment })
        .collect();
    components.extend(exterior.into_iter().map(|leaf| PathComponent {
        vertices: vec![leaf],
        kind: PathComponentKind::ExteriorLeaf,
    }));
    Ok(components)
}
