//! Recognition of linear rank-width at most 1 with certificates.
//!
//! A connected graph has linear rank-width at most 1 iff it is
//! distance-hereditary and its split tree is a path. Accepted graphs get a
//! vertex ordering whose every prefix cut has rank at most 1; rejected
//! graphs get a minimal induced subgraph of linear rank-width 2.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::dh::{self, NonDhFamily};
use crate::error::{Error, Location, Result};
use crate::graph::{families, is_isomorphic_small, Graph};
use crate::split::{self, Block, Centre, Decomposition, Marker, Node, NodeKind, SplitTree};
use crate::{gf2, oracle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Hole(usize),
    House,
    Gem,
    Domino,
    /// Distance-hereditary, with a split-tree node of degree three.
    DhStar3,
}

impl From<NonDhFamily> for Family {
    fn from(f: NonDhFamily) -> Family {
        match f {
            NonDhFamily::Hole(k) => Family::Hole(k),
            NonDhFamily::House => Family::House,
            NonDhFamily::Gem => Family::Gem,
            NonDhFamily::Domino => Family::Domino,
        }
    }
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Hole(_) => "hole",
            Family::House => "house",
            Family::Gem => "gem",
            Family::Domino => "domino",
            Family::DhStar3 => "dh_star3",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Hole(k) => write!(f, "hole C{k}"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    /// Ascending vertex ids of the input graph.
    pub vertices: Vec<usize>,
    pub family: Family,
    /// Position in [`dh_obstruction_catalog`] of the isomorphic entry.
    pub catalog_index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Ordering(Vec<usize>),
    Obstruction(Obstruction),
}

impl Certificate {
    pub fn accepts(&self) -> bool {
        matches!(self, Certificate::Ordering(_))
    }
}

/// Decides `lrw(g) <= 1`.
///
/// Components are handled in order of their smallest vertex; the first
/// component with linear rank-width 2 supplies the obstruction. Errors only
/// signal a broken internal invariant.
pub fn recognize(g: &Graph) -> Result<Certificate> {
    let mut ordering = Vec::with_capacity(g.n());
    for comp in g.connected_components() {
        if comp.len() <= 2 {
            ordering.extend(comp);
            continue;
        }
        let h = g.induced_subgraph(&comp)?;
        match recognize_connected(&h)? {
            Certificate::Ordering(o) => ordering.extend(o.into_iter().map(|v| comp[v])),
            Certificate::Obstruction(mut ob) => {
                ob.vertices = ob.vertices.into_iter().map(|v| comp[v]).collect();
                ob.vertices.sort_unstable();
                return Ok(Certificate::Obstruction(ob));
            }
        }
    }
    Ok(Certificate::Ordering(ordering))
}

fn invariant(what: impl Into<String>) -> Error {
    Error::InternalInvariantViolation(what.into())
}

fn recognize_connected(h: &Graph) -> Result<Certificate> {
    let Some(seq) = dh::pruning_sequence(h)? else {
        let s = dh::non_dh_obstruction(h)?;
        let family = dh::classify_non_dh(&h.induced_subgraph(&s)?)
            .ok_or_else(|| invariant("minimal non-DH subgraph of unknown shape"))?;
        let cert = Certificate::Obstruction(Obstruction {
            vertices: s,
            family: family.into(),
            catalog_index: None,
        });
        verify_certificate(h, &cert).map_err(|r| invariant(r.0))?;
        return Ok(cert);
    };
    let d = split::canonical_decomposition_dh(h, &seq)?;
    let t = split::split_tree(&d)?;
    if t.is_path() {
        return Ok(Certificate::Ordering(ordering_from_path_tree(&t, &d)?));
    }
    let v = (0..t.len())
        .find(|&u| t.degree(u) >= 3)
        .ok_or_else(|| invariant("non-path tree without a branch node"))?;
    let vertices = extract_lrw1_obstruction(h, &t, &d, v)?;
    let catalog_index = catalog_position(&h.induced_subgraph(&vertices)?);
    Ok(Certificate::Obstruction(Obstruction {
        vertices,
        family: Family::DhStar3,
        catalog_index,
    }))
}

/// Concatenates `V(u)` along the path, each in ascending order.
pub fn ordering_from_path_tree(t: &SplitTree, d: &Decomposition) -> Result<Vec<usize>> {
    if t.len() != d.blocks().len() {
        return Err(Error::MalformedDecomposition("tree does not match decomposition".into()));
    }
    let order = t.path_order().ok_or(Error::NotAPath)?;
    Ok(order.into_iter().flat_map(|u| t.node(u).vertices.iter().copied()).collect())
}

/// Six or seven vertices inducing a catalog graph, read off the three
/// branches at the split-tree node `v` of degree at least 3.
///
/// A vertex of a branch is active when it has a neighbour outside that
/// branch; the pairs picked on each branch depend on the type of `v`.
pub fn extract_lrw1_obstruction(g: &Graph, t: &SplitTree, d: &Decomposition, v: usize) -> Result<Vec<usize>> {
    if v >= t.len() || t.degree(v) < 3 {
        return Err(Error::NotApplicable(format!("node {v} has degree below 3")));
    }
    if t.len() != d.blocks().len() || d.origin().n() != g.n() {
        return Err(Error::MalformedDecomposition("tree does not match graph".into()));
    }
    let nbrs: Vec<usize> = t.links(v).iter().map(|l| l.node).collect();
    #[derive(Clone, Copy)]
    enum Rule {
        /// Two non-adjacent active vertices, or an adjacent pair with exactly one active.
        Clique,
        /// Any two active vertices.
        TwoActive,
        /// An adjacent pair with at least one active.
        Edge,
    }
    let (sides, rules, centre): (Vec<usize>, [Rule; 3], Option<usize>) = match t.node(v).kind {
        NodeKind::Clique => (nbrs[..3].to_vec(), [Rule::Clique; 3], None),
        NodeKind::Star { centre: Centre::Toward(w) } => {
            let mut s = vec![w];
            s.extend(nbrs.iter().copied().filter(|&x| x != w).take(2));
            (s, [Rule::TwoActive, Rule::Edge, Rule::Edge], None)
        }
        NodeKind::Star { centre: Centre::Vertex(c) } => (nbrs[..3].to_vec(), [Rule::Edge; 3], Some(c)),
        NodeKind::Prime => return Err(Error::NotApplicable("prime node".into())),
    };

    let mut out: Vec<usize> = centre.into_iter().collect();
    for (&w, rule) in sides.iter().zip(rules) {
        let side = split::side_vertices(t, w, v)?;
        let mut inside = vec![false; g.n()];
        for &a in &side {
            inside[a] = true;
        }
        let active: Vec<bool> = side.iter().map(|&a| g.neighbors(a).any(|b| !inside[b])).collect();
        let mut found = None;
        'pairs: for i in 0..side.len() {
            for j in i + 1..side.len() {
                let adj = g.has_edge(side[i], side[j]);
                let (ai, aj) = (active[i], active[j]);
                let ok = match rule {
                    Rule::Clique => (!adj && ai && aj) || (adj && ai != aj),
                    Rule::TwoActive => ai && aj,
                    Rule::Edge => adj && (ai || aj),
                };
                if ok {
                    found = Some((side[i], side[j]));
                    break 'pairs;
                }
            }
        }
        let (a, b) = found.ok_or_else(|| invariant(format!("no suitable pair toward node {w}")))?;
        out.extend([a, b]);
    }
    out.sort_unstable();
    let cert = Certificate::Obstruction(Obstruction {
        vertices: out.clone(),
        family: Family::DhStar3,
        catalog_index: None,
    });
    verify_certificate(g, &cert).map_err(|r| invariant(format!("extracted set rejected: {}", r.0)))?;
    Ok(out)
}

#[derive(Clone, Copy)]
enum Leaf {
    /// Both vertices hang off the marker.
    MarkerCentre,
    /// First vertex is the centre, second a pendant of it.
    VertexCentre,
    Clique,
}

fn catalog_graph(centre: Block, leaves: [Leaf; 3], n: usize) -> Graph {
    let mut blocks = vec![centre];
    let mut markers = Vec::new();
    for (i, leaf) in leaves.into_iter().enumerate() {
        let (a, b, h) = (Node::Vertex(2 * i), Node::Vertex(2 * i + 1), Node::Marker(2 * i + 1));
        let edges = match leaf {
            Leaf::MarkerCentre => vec![(h, a), (h, b)],
            Leaf::VertexCentre => vec![(a, b), (a, h)],
            Leaf::Clique => vec![(a, b), (a, h), (b, h)],
        };
        blocks.push(Block::new(i + 1, [a, b, h], edges));
        markers.push(Marker { id: 2 * i, home: 0, partner: 2 * i + 1 });
        markers.push(Marker { id: 2 * i + 1, home: i + 1, partner: 2 * i });
    }
    split::recompose_parts(&blocks, &markers, n).expect("catalog decomposition is well formed")
}

/// Pairwise non-isomorphic DH graphs of linear rank-width 2 whose split tree
/// is a degree-3 node with three two-vertex leaves.
pub fn dh_obstruction_catalog() -> &'static [Graph] {
    static CATALOG: OnceLock<Vec<Graph>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let m = [Node::Marker(0), Node::Marker(2), Node::Marker(4)];
        let clique_centre = || Block::new(0, m, [(m[0], m[1]), (m[0], m[2]), (m[1], m[2])]);
        let marker_star = || Block::new(0, m, [(m[0], m[1]), (m[0], m[2])]);
        let c = Node::Vertex(6);
        let vertex_star = || Block::new(0, m.into_iter().chain([c]), m.map(|x| (c, x)));

        let choose = |opts: [[Leaf; 2]; 3]| {
            (0..8).map(move |bits: usize| [0, 1, 2].map(|i| opts[i][bits >> (2 - i) & 1]))
        };
        use Leaf::*;
        let mut candidates = Vec::new();
        for leaves in choose([[MarkerCentre, VertexCentre]; 3]) {
            candidates.push(catalog_graph(clique_centre(), leaves, 6));
        }
        for leaves in choose([[Clique, MarkerCentre], [Clique, VertexCentre], [Clique, VertexCentre]]) {
            candidates.push(catalog_graph(marker_star(), leaves, 6));
        }
        for leaves in choose([[Clique, VertexCentre]; 3]) {
            candidates.push(catalog_graph(vertex_star(), leaves, 7));
        }
        let mut out: Vec<Graph> = Vec::new();
        for g in candidates {
            if !out.iter().any(|h| is_isomorphic_small(h, &g).unwrap_or(false)) {
                out.push(g);
            }
        }
        out
    })
}

fn catalog_position(h: &Graph) -> Option<usize> {
    dh_obstruction_catalog()
        .iter()
        .position(|c| is_isomorphic_small(c, h).unwrap_or(false))
}

/// Why [`verify_certificate`] rejected a certificate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("certificate rejected: {0}")]
pub struct Rejection(pub String);

fn reject<T>(why: impl Into<String>) -> std::result::Result<T, Rejection> {
    Err(Rejection(why.into()))
}

fn is_cycle(h: &Graph) -> bool {
    h.n() >= 3 && h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
}

/// Checks a certificate against `g` independently of how it was produced.
///
/// Orderings are checked by cut ranks. Obstructions are checked by exact
/// linear rank-width of the induced subgraph and of each one-vertex
/// deletion; holes too large for that are checked structurally.
pub fn verify_certificate(g: &Graph, c: &Certificate) -> std::result::Result<(), Rejection> {
    match c {
        Certificate::Ordering(o) => match gf2::cutrank_of_ordering(g, o) {
            Ok(r) if r <= 1 => Ok(()),
            Ok(r) => reject(format!("ordering has a cut of rank {r}")),
            Err(e) => reject(e.to_string()),
        },
        Certificate::Obstruction(ob) => verify_obstruction(g, ob),
    }
}

fn verify_obstruction(g: &Graph, ob: &Obstruction) -> std::result::Result<(), Rejection> {
    let s = &ob.vertices;
    if s.is_empty() {
        return reject("empty vertex set");
    }
    if let Err(e) = g.check_vertex_set(s) {
        return reject(e.to_string());
    }
    let h = g.induced_subgraph(s).map_err(|e| Rejection(e.to_string()))?;
    if !h.is_connected() {
        return reject("induced subgraph is disconnected");
    }
    let k = h.n();
    if k > oracle::BRUTE_LIMIT {
        if ob.family != Family::Hole(k) || !is_cycle(&h) {
            return reject(format!("{k} vertices and not an induced hole"));
        }
        // Every deletion from a cycle is a path, and paths have cut rank 1
        // along their natural order; C_k for k >= 5 is not DH.
        return Ok(());
    }
    let width = oracle::brute_lrw(&h).map_err(|e| Rejection(e.to_string()))?;
    if width != 2 {
        return reject(format!("induced subgraph has linear rank-width {width}"));
    }
    for (i, &v) in s.iter().enumerate() {
        let rest: Vec<usize> = (0..k).filter(|&j| j != i).collect();
        let sub = h.induced_subgraph(&rest).map_err(|e| Rejection(e.to_string()))?;
        if oracle::brute_lrw(&sub).map_err(|e| Rejection(e.to_string()))? > 1 {
            return reject(format!("not minimal: removing {} keeps width 2", g.label(v)));
        }
    }
    let shape_ok = match ob.family {
        Family::Hole(len) => len == k && k >= 5 && is_cycle(&h),
        Family::House => is_isomorphic_small(&h, &families::house()).unwrap_or(false),
        Family::Gem => is_isomorphic_small(&h, &families::gem()).unwrap_or(false),
        Family::Domino => is_isomorphic_small(&h, &families::domino()).unwrap_or(false),
        Family::DhStar3 => oracle::is_dh_by_distances(&h).unwrap_or(false),
    };
    if !shape_ok {
        return reject(format!("induced subgraph is not a {}", ob.family));
    }
    if let Some(i) = ob.catalog_index {
        let matches = dh_obstruction_catalog()
            .get(i)
            .is_some_and(|c| is_isomorphic_small(c, &h).unwrap_or(false));
        if !matches {
            return reject(format!("induced subgraph is not catalog entry {i}"));
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "status")]
enum Report {
    #[serde(rename = "lrw_le_1")]
    Accept { ordering: Vec<String> },
    #[serde(rename = "lrw_ge_2")]
    Reject { obstruction: ObstructionReport },
}

#[derive(Serialize, Deserialize)]
struct ObstructionReport {
    vertices: Vec<String>,
    family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    catalog_index: Option<usize>,
}

/// JSON form of a certificate with vertices written by label.
pub fn certificate_to_json(g: &Graph, c: &Certificate) -> String {
    let labels = |vs: &[usize]| vs.iter().map(|&v| g.label(v).to_string()).collect();
    let report = match c {
        Certificate::Ordering(o) => Report::Accept { ordering: labels(o) },
        Certificate::Obstruction(ob) => Report::Reject {
            obstruction: ObstructionReport {
                vertices: labels(&ob.vertices),
                family: ob.family.name().to_string(),
                catalog_index: ob.catalog_index,
            },
        },
    };
    serde_json::to_string(&report).expect("report serializes")
}

/// Inverse of [`certificate_to_json`]; labels are resolved against `g`.
pub fn certificate_from_json(g: &Graph, text: &str) -> Result<Certificate> {
    let report: Report = serde_json::from_str(text).map_err(|e| Error::Parse {
        location: Location::Line(e.line()),
        reason: e.to_string(),
    })?;
    let ids = |labels: &[String]| -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| {
                g.vertex_by_label(l).ok_or_else(|| Error::Parse {
                    location: Location::Line(1),
                    reason: format!("unknown vertex label {l:?}"),
                })
            })
            .collect()
    };
    Ok(match report {
        Report::Accept { ordering } => Certificate::Ordering(ids(&ordering)?),
        Report::Reject { obstruction } => {
            let vertices = ids(&obstruction.vertices)?;
            let family = match obstruction.family.as_str() {
                "hole" => Family::Hole(vertices.len()),
                "house" => Family::House,
                "gem" => Family::Gem,
                "domino" => Family::Domino,
                "dh_star3" => Family::DhStar3,
                other => {
                    return Err(Error::Parse {
                        location: Location::Line(1),
                        reason: format!("unknown family {other:?}"),
                    })
                }
            };
            Certificate::Obstruction(Obstruction {
                vertices,
                family,
                catalog_index: obstruction.catalog_index,
            })
        }
    })
}
