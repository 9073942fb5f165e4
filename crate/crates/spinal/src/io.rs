//! JSON and Graphviz interchange for networks.
//!
//! The JSON layout is stable and explicit: declared parameters, a vertex
//! list with kinds (and labels when present), and an arc list. Reading
//! re-derives the parameters from the content and rejects files whose
//! declaration disagrees, so a hand-edited file cannot silently lie
//! about its size.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::{PhyloNetwork, VertexKind};

#[derive(Serialize, Deserialize)]
struct VertexRecord {
    id: u32,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<u32>,
}

#[derive(Serialize, Deserialize)]
struct NetworkRecord {
    n: usize,
    k: usize,
    labeled: bool,
    vertices: Vec<VertexRecord>,
    arcs: Vec<(u32, u32)>,
}

fn kind_name(kind: VertexKind) -> &'static str {
    match kind {
        VertexKind::Root => "root",
        VertexKind::Leaf => "leaf",
        VertexKind::TreeVertex => "tree",
        VertexKind::Reticulation => "ret",
    }
}

fn kind_from_name(name: &str) -> Result<VertexKind> {
    match name {
        "root" => Ok(VertexKind::Root),
        "leaf" => Ok(VertexKind::Leaf),
        "tree" => Ok(VertexKind::TreeVertex),
        "ret" => Ok(VertexKind::Reticulation),
        other => Err(Error::Parse(format!(
            "unknown vertex kind {other:?}, expected root, leaf, tree, or ret"
        ))),
    }
}

/// Serializes a network to pretty-printed JSON with vertices and arcs in
/// ascending order.
pub fn network_to_json(net: &PhyloNetwork) -> String {
    let record = NetworkRecord {
        n: net.leaf_count(),
        k: net.reticulation_count(),
        labeled: net.is_labeled(),
        vertices: net
            .vertices()
            .map(|(id, kind)| VertexRecord {
                id,
                kind: kind_name(kind).to_string(),
                label: net.label_of(id),
            })
            .collect(),
        arcs: net.arcs().collect(),
    };
    serde_json::to_string_pretty(&record).expect("network serialization cannot fail")
}

/// Parses a network from the JSON layout written by [`network_to_json`].
///
/// The declared n, k, and labeling flag must match the vertex list;
/// structural validity beyond that is left to
/// [`PhyloNetwork::validate`].
pub fn network_from_json(text: &str) -> Result<PhyloNetwork> {
    let record: NetworkRecord =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad network JSON: {e}")))?;
    let mut vertices = Vec::with_capacity(record.vertices.len());
    let mut labels = Vec::new();
    for vertex in &record.vertices {
        let kind = kind_from_name(&vertex.kind)?;
        vertices.push((vertex.id, kind));
        if let Some(label) = vertex.label {
            labels.push((vertex.id, label));
        }
    }
    let labeled = !labels.is_empty();
    if labeled != record.labeled {
        return Err(Error::Parse(format!(
            "declared labeled={} but the vertex list {} labels",
            record.labeled,
            if labeled { "carries" } else { "has no" }
        )));
    }
    let net = PhyloNetwork::from_parts(
        vertices,
        record.arcs.clone(),
        if labeled { Some(labels) } else { None },
    );
    if net.leaf_count() != record.n {
        return Err(Error::Parse(format!(
            "declared n={} but found {} leaves",
            record.n,
            net.leaf_count()
        )));
    }
    if net.reticulation_count() != record.k {
        return Err(Error::Parse(format!(
            "declared k={} but found {} reticulations",
            record.k,
            net.reticulation_count()
        )));
    }
    Ok(net)
}

/// Renders a network in Graphviz DOT, with reticulations drawn as boxes
/// and labeled leaves showing their labels.
pub fn network_to_dot(net: &PhyloNetwork) -> String {
    let mut out = String::from("digraph network {\n");
    out.push_str("  rankdir=TB;\n");
    for (id, kind) in net.vertices() {
        let shape = match kind {
            VertexKind::Reticulation => "box",
            VertexKind::Leaf => "plaintext",
            _ => "circle",
        };
        let text = match (kind, net.label_of(id)) {
            (VertexKind::Leaf, Some(label)) => format!("{label}"),
            (VertexKind::Leaf, None) => format!("{id}"),
            (VertexKind::Root, _) => "root".to_string(),
            _ => String::new(),
        };
        out.push_str(&format!("  v{id} [shape={shape}, label=\"{text}\"];\n"));
    }
    for (from, to) in net.arcs() {
        out.push_str(&format!("  v{from} -> v{to};\n"));
    }
    out.push_str("}\n");
    out
}
