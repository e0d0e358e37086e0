//! Graphviz export of decompositions and split trees.

use std::fmt::Write;

use crate::split::{BlockKind, Centre, Decomposition, Node, NodeKind, SplitTree};

fn node_name(a: Node) -> String {
    match a {
        Node::Vertex(v) => format!("v{v}"),
        Node::Marker(m) => format!("h{m}"),
    }
}

fn kind_name(k: &BlockKind) -> &'static str {
    match k {
        BlockKind::Prime => "prime",
        BlockKind::Clique => "clique",
        BlockKind::Star { .. } => "star",
    }
}

/// `S(D)`: one cluster per block, solid edges inside blocks, dashed marked
/// edges between partnered markers. Vertices carry their input labels.
pub fn decomposition_to_dot(d: &Decomposition) -> String {
    let g = d.origin();
    let mut out = String::from("graph decomposition {\n  node [shape=circle];\n");
    for b in d.blocks() {
        writeln!(out, "  subgraph cluster_b{} {{", b.id).unwrap();
        writeln!(out, "    label=\"block {} ({})\";", b.id, kind_name(&b.kind)).unwrap();
        for a in b.members() {
            let (label, extra) = match a {
                Node::Vertex(v) => (g.label(v).to_string(), ""),
                Node::Marker(m) => (format!("{}", Node::Marker(m)), ", shape=box"),
            };
            let centre = if b.is_centre(a) { ", penwidth=2" } else { "" };
            writeln!(out, "    {} [label=\"{}\"{}{}];", node_name(a), label, extra, centre).unwrap();
        }
        for (x, y) in b.edges() {
            writeln!(out, "    {} -- {};", node_name(x), node_name(y)).unwrap();
        }
        out.push_str("  }\n");
    }
    for m in d.markers() {
        if m.id < m.partner {
            writeln!(
                out,
                "  {} -- {} [style=dashed];",
                node_name(Node::Marker(m.id)),
                node_name(Node::Marker(m.partner))
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// `T_G`: node label shows kind, centre and `V(u)`.
pub fn split_tree_to_dot(t: &SplitTree, d: &Decomposition) -> String {
    let g = d.origin();
    let mut out = String::from("graph split_tree {\n  node [shape=box];\n");
    for (u, node) in t.nodes().iter().enumerate() {
        let kind = match node.kind {
            NodeKind::Prime => "prime".to_string(),
            NodeKind::Clique => "clique".to_string(),
            NodeKind::Star { centre: Centre::Vertex(v) } => format!("star, centre {}", g.label(v)),
            NodeKind::Star { centre: Centre::Toward(w) } => format!("star, centre marker toward u{w}"),
        };
        let verts: Vec<&str> = node.vertices.iter().map(|&v| g.label(v)).collect();
        writeln!(out, "  u{u} [label=\"u{u}: {kind}\\nV = {{{}}}\"];", verts.join(", ")).unwrap();
    }
    for (u, w) in t.edges() {
        writeln!(out, "  u{u} -- u{w};").unwrap();
    }
    out.push_str("}\n");
    out
}
