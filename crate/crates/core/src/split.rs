//! Splits, marker refinement, and the canonical split decomposition of
//! connected distance-hereditary graphs.
//!
//! A decomposition is a set of blocks. Each block is a small graph whose
//! members are either original vertices or markers; partnered markers in two
//! different blocks stand for a marked edge. Contracting every marked edge
//! (joining the solid neighbourhoods of the two markers) gives back the
//! original graph.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::bitset::BitSet;
use crate::dh::{self, PruningKind, PruningSequence};
use crate::error::{Error, Result};
use crate::gf2;
use crate::graph::Graph;

/// A block member: an original vertex or a marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Vertex(usize),
    Marker(usize),
}

impl Node {
    /// Integer id with markers in the negative range: marker `m` is `-(m+1)`.
    pub fn serial_id(self) -> i64 {
        match self {
            Node::Vertex(v) => v as i64,
            Node::Marker(m) => -(m as i64) - 1,
        }
    }

    pub fn vertex(self) -> Option<usize> {
        match self {
            Node::Vertex(v) => Some(v),
            Node::Marker(_) => None,
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.serial_id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Prime,
    Clique,
    Star { centre: Node },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub id: usize,
    adj: BTreeMap<Node, BTreeSet<Node>>,
    pub kind: BlockKind,
}

impl Block {
    /// Builds a block and classifies it from its edges.
    pub fn new(id: usize, members: impl IntoIterator<Item = Node>, edges: impl IntoIterator<Item = (Node, Node)>) -> Block {
        let mut adj: BTreeMap<Node, BTreeSet<Node>> = members.into_iter().map(|m| (m, BTreeSet::new())).collect();
        for (a, b) in edges {
            assert!(a != b, "loop in block");
            adj.get_mut(&a).expect("edge endpoint is a member").insert(b);
            adj.get_mut(&b).expect("edge endpoint is a member").insert(a);
        }
        let kind = classify(&adj);
        Block { id, adj, kind }
    }

    /// Members in `Node` order (vertices first, then markers).
    pub fn members(&self) -> impl Iterator<Item = Node> + '_ {
        self.adj.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn contains(&self, a: Node) -> bool {
        self.adj.contains_key(&a)
    }

    pub fn has_edge(&self, a: Node, b: Node) -> bool {
        self.adj.get(&a).is_some_and(|s| s.contains(&b))
    }

    pub fn neighbors(&self, a: Node) -> impl Iterator<Item = Node> + '_ {
        self.adj.get(&a).into_iter().flatten().copied()
    }

    /// Solid edges `(a, b)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (Node, Node)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&a, s)| s.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members().filter_map(Node::vertex)
    }

    pub fn markers(&self) -> impl Iterator<Item = usize> + '_ {
        self.members().filter_map(|m| match m {
            Node::Marker(h) => Some(h),
            Node::Vertex(_) => None,
        })
    }

    pub fn is_centre(&self, a: Node) -> bool {
        matches!(self.kind, BlockKind::Star { centre } if centre == a)
    }

    /// The block as a plain graph; vertex `i` is the `i`-th member.
    pub fn as_graph(&self) -> (Graph, Vec<Node>) {
        let members: Vec<Node> = self.members().collect();
        let index: HashMap<Node, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut g = Graph::with_labels(members.iter().map(|m| m.to_string()).collect());
        for (a, b) in self.edges() {
            g.add_edge(index[&a], index[&b]);
        }
        (g, members)
    }

    fn add_member(&mut self, a: Node, neighbours: &[Node]) {
        self.adj.insert(a, neighbours.iter().copied().collect());
        for b in neighbours {
            self.adj.get_mut(b).unwrap().insert(a);
        }
    }

    fn rename(&mut self, from: Node, to: Node) {
        let nbrs = self.adj.remove(&from).unwrap();
        for b in &nbrs {
            let s = self.adj.get_mut(b).unwrap();
            s.remove(&from);
            s.insert(to);
        }
        self.adj.insert(to, nbrs);
        if let BlockKind::Star { centre } = &mut self.kind {
            if *centre == from {
                *centre = to;
            }
        }
    }
}

fn classify(adj: &BTreeMap<Node, BTreeSet<Node>>) -> BlockKind {
    let k = adj.len();
    let m: usize = adj.values().map(BTreeSet::len).sum::<usize>() / 2;
    if m == k * k.saturating_sub(1) / 2 {
        return BlockKind::Clique;
    }
    if k >= 3 && m == k - 1 {
        if let Some((&c, _)) = adj.iter().find(|(_, s)| s.len() == k - 1) {
            return BlockKind::Star { centre: c };
        }
    }
    BlockKind::Prime
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Marker {
    pub id: usize,
    pub home: usize,
    pub partner: usize,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    blocks: Vec<Block>,
    markers: Vec<Marker>,
    origin: Graph,
}

impl Decomposition {
    /// Assembles a decomposition from parts. Only id/index agreement is
    /// checked here; use [`validate_canonical`] for everything else.
    pub fn from_parts(blocks: Vec<Block>, markers: Vec<Marker>, origin: Graph) -> Result<Self> {
        if let Some((i, _)) = blocks.iter().enumerate().find(|(i, b)| b.id != *i) {
            return Err(Error::MalformedDecomposition(format!("block at index {i} has a different id")));
        }
        if let Some((i, _)) = markers.iter().enumerate().find(|(i, m)| m.id != *i) {
            return Err(Error::MalformedDecomposition(format!("marker at index {i} has a different id")));
        }
        Ok(Decomposition { blocks, markers, origin })
    }

    /// The single-block decomposition `{G}`.
    pub fn trivial(g: &Graph) -> Self {
        let block = Block::new(
            0,
            (0..g.n()).map(Node::Vertex),
            g.edges().map(|(u, v)| (Node::Vertex(u), Node::Vertex(v))),
        );
        Decomposition {
            blocks: vec![block],
            markers: Vec::new(),
            origin: g.clone(),
        }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn markers(&self) -> &[Marker] {
        &self.markers
    }

    pub fn origin(&self) -> &Graph {
        &self.origin
    }

    pub fn marker(&self, m: usize) -> &Marker {
        &self.markers[m]
    }

    /// Splits block `b` along `side`; the side keeps id `b`, the rest becomes
    /// a new block at the end.
    pub(crate) fn refine_block(&mut self, b: usize, side: &[Node]) -> Result<usize> {
        let hx = self.markers.len();
        let hy = hx + 1;
        let new_id = self.blocks.len();
        let (x_block, y_block) = refine(&self.blocks[b], side, hx, hy, new_id)?;
        for m in y_block.markers() {
            if m != hy {
                self.markers[m].home = new_id;
            }
        }
        self.markers.push(Marker { id: hx, home: b, partner: hy });
        self.markers.push(Marker { id: hy, home: new_id, partner: hx });
        self.blocks[b] = x_block;
        self.blocks.push(y_block);
        Ok(new_id)
    }

    /// Canonical form up to renaming markers: each marker is replaced by the
    /// set of original vertices behind its marked edge.
    pub fn canonical_form(&self) -> Result<Vec<CanonicalBlock>> {
        let tree = split_tree(self)?;
        let mut behind = vec![Vec::new(); self.markers.len()];
        for (u, links) in tree.links.iter().enumerate() {
            for l in links {
                behind[l.marker] = side_vertices(&tree, l.node, u)?;
            }
        }
        let label = |a: Node| match a {
            Node::Vertex(v) => Label::Vertex(v),
            Node::Marker(m) => Label::Toward(behind[m].clone()),
        };
        let mut forms: Vec<_> = self
            .blocks
            .iter()
            .map(|b| {
                let mut members: Vec<Label> = b.members().map(label).collect();
                members.sort();
                let mut edges: Vec<(Label, Label)> = b
                    .edges()
                    .map(|(x, y)| {
                        let (p, q) = (label(x), label(y));
                        if p < q {
                            (p, q)
                        } else {
                            (q, p)
                        }
                    })
                    .collect();
                edges.sort();
                (members, edges)
            })
            .collect();
        forms.sort();
        Ok(forms)
    }

    /// Isomorphism of decompositions fixing every original vertex.
    pub fn is_isomorphic_to(&self, other: &Decomposition) -> bool {
        match (self.canonical_form(), other.canonical_form()) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

/// Marker-free name of a block member, used by [`Decomposition::canonical_form`].
/// A block in [`Decomposition::canonical_form`]: members and edges.
pub type CanonicalBlock = (Vec<Label>, Vec<(Label, Label)>);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Vertex(usize),
    Toward(Vec<usize>),
}

/// `{X, V \ X}` is a split: both sides have two or more vertices and the cut
/// has rank exactly one.
pub fn is_split(g: &Graph, x: &[usize]) -> Result<bool> {
    let inside = g.check_vertex_set(x)?;
    let k = inside.len();
    if k < 2 || g.n() - k < 2 {
        return Ok(false);
    }
    Ok(gf2::cutrank_of_bitset(g, &inside) == 1)
}

/// Splits a block along `side`, returning `(G^X, G^Y)`. Marker `hx` joins
/// the side block, `hy` the rest, each adjacent to exactly the members with a
/// neighbour across the split.
pub fn refine(block: &Block, side: &[Node], hx: usize, hy: usize, y_block_id: usize) -> Result<(Block, Block)> {
    let (g, members) = block.as_graph();
    let index: HashMap<Node, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut x_idx = Vec::with_capacity(side.len());
    for a in side {
        x_idx.push(*index.get(a).ok_or(Error::NotASplit)?);
    }
    if !is_split(&g, &x_idx).map_err(|_| Error::NotASplit)? {
        return Err(Error::NotASplit);
    }
    let in_x: BTreeSet<Node> = side.iter().copied().collect();
    let rest: Vec<Node> = members.iter().copied().filter(|a| !in_x.contains(a)).collect();
    let build = |id: usize, part: &[Node], other: &BTreeSet<Node>, h: usize| {
        let part_set: BTreeSet<Node> = part.iter().copied().collect();
        let mut edges: Vec<(Node, Node)> = block
            .edges()
            .filter(|(a, b)| part_set.contains(a) && part_set.contains(b))
            .collect();
        for &a in part {
            if block.neighbors(a).any(|b| other.contains(&b)) {
                edges.push((a, Node::Marker(h)));
            }
        }
        Block::new(id, part.iter().copied().chain([Node::Marker(h)]), edges)
    };
    let rest_set: BTreeSet<Node> = rest.iter().copied().collect();
    let xb = build(block.id, side, &rest_set, hx);
    let yb = build(y_block_id, &rest, &in_x, hy);
    Ok((xb, yb))
}

/// Contracts every marked edge. Fails on structural problems: unpartnered or
/// misplaced markers, repeated or missing vertices.
pub fn recompose(d: &Decomposition) -> Result<Graph> {
    let g = recompose_parts(&d.blocks, &d.markers, d.origin.n())?;
    let mut out = Graph::with_labels(d.origin.labels().to_vec());
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    Ok(out)
}

pub(crate) fn recompose_parts(blocks: &[Block], markers: &[Marker], n: usize) -> Result<Graph> {
    check_structure(blocks, markers, n).map_err(Error::MalformedDecomposition)?;
    let mut adj: HashMap<Node, BTreeSet<Node>> = HashMap::new();
    for b in blocks {
        for a in b.members() {
            adj.insert(a, b.neighbors(a).collect());
        }
    }
    for m in markers {
        if m.id > m.partner {
            continue;
        }
        let (h1, h2) = (Node::Marker(m.id), Node::Marker(m.partner));
        let left = adj.remove(&h1).unwrap_or_default();
        let right = adj.remove(&h2).unwrap_or_default();
        for a in &left {
            adj.get_mut(a).unwrap().remove(&h1);
        }
        for b in &right {
            adj.get_mut(b).unwrap().remove(&h2);
        }
        for &a in &left {
            for &b in &right {
                if a == b {
                    return Err(Error::MalformedDecomposition("marked edges form a cycle".into()));
                }
                adj.get_mut(&a).unwrap().insert(b);
                adj.get_mut(&b).unwrap().insert(a);
            }
        }
    }
    let mut g = Graph::new(n);
    for (a, nbrs) in &adj {
        let Node::Vertex(u) = *a else {
            return Err(Error::MalformedDecomposition("marker survived contraction".into()));
        };
        for b in nbrs {
            match *b {
                Node::Vertex(v) if u < v => g.add_edge(u, v),
                Node::Vertex(_) => {}
                Node::Marker(_) => {
                    return Err(Error::MalformedDecomposition("marker survived contraction".into()));
                }
            }
        }
    }
    Ok(g)
}

fn check_structure(blocks: &[Block], markers: &[Marker], n: usize) -> std::result::Result<(), String> {
    let mut seen = vec![false; n];
    let mut marker_seen = vec![false; markers.len()];
    for b in blocks {
        for a in b.members() {
            match a {
                Node::Vertex(v) => {
                    if v >= n {
                        return Err(format!("vertex {v} out of range"));
                    }
                    if std::mem::replace(&mut seen[v], true) {
                        return Err(format!("vertex {v} appears in two blocks"));
                    }
                }
                Node::Marker(m) => {
                    let Some(mk) = markers.get(m) else {
                        return Err(format!("unknown marker {m}"));
                    };
                    if mk.home != b.id || std::mem::replace(&mut marker_seen[m], true) {
                        return Err(format!("marker {m} is not in its home block"));
                    }
                }
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(format!("vertex {v} is in no block"));
    }
    for m in markers {
        if !marker_seen[m.id] {
            return Err(format!("marker {} is in no block", m.id));
        }
        let Some(p) = markers.get(m.partner) else {
            return Err(format!("marker {} has unknown partner", m.id));
        };
        if p.partner != m.id || p.id == m.id {
            return Err(format!("marker {} is not matched", m.id));
        }
        if p.home == m.home {
            return Err(format!("markers {} and {} share a block", m.id, p.id));
        }
    }
    Ok(())
}

/// Canonical split decomposition of a connected DH graph, built by replaying
/// `seq` backwards.
///
/// Each re-inserted vertex `x` refers to a present vertex `y`. Either `x`
/// joins `y`'s block directly (true twin in a clique, false twin of a star
/// leaf, pendant on a star centre) or `y` is replaced in its block by a fresh
/// marker whose partner sits in a new three-vertex block on `{y, x}`. The new
/// block can only conflict with its one neighbour, and the three absorbing
/// cases are exactly those conflicts, so the result stays canonical.
pub fn canonical_decomposition_dh(g: &Graph, seq: &PruningSequence) -> Result<Decomposition> {
    if g.n() == 0 {
        return Err(Error::Empty);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    seq.validate(g)?;

    let mut blocks = vec![Block::new(0, [Node::Vertex(seq.last)], [])];
    let mut markers: Vec<Marker> = Vec::new();
    let mut home = vec![usize::MAX; g.n()];
    home[seq.last] = 0;
    let mut present = vec![seq.last];

    for step in seq.steps.iter().rev() {
        let x = step.removed;
        let y = step.kind.anchor();
        present.push(x);
        if present.len() <= 3 {
            // Too small for a split: the whole graph is one block.
            let members: Vec<Node> = present.iter().map(|&v| Node::Vertex(v)).collect();
            let edges: Vec<(Node, Node)> = present
                .iter()
                .flat_map(|&u| present.iter().map(move |&v| (u, v)))
                .filter(|&(u, v)| u < v && g.has_edge(u, v))
                .map(|(u, v)| (Node::Vertex(u), Node::Vertex(v)))
                .collect();
            blocks[0] = Block::new(0, members, edges);
            home[x] = 0;
            continue;
        }

        let b = home[y];
        let (vx, vy) = (Node::Vertex(x), Node::Vertex(y));
        let block = &mut blocks[b];
        match (step.kind, block.kind) {
            (PruningKind::TrueTwin { .. }, BlockKind::Clique) => {
                let all: Vec<Node> = block.members().collect();
                block.add_member(vx, &all);
                home[x] = b;
            }
            (PruningKind::FalseTwin { .. }, BlockKind::Star { centre }) if centre != vy => {
                block.add_member(vx, &[centre]);
                home[x] = b;
            }
            (PruningKind::Pendant { .. }, BlockKind::Star { centre }) if centre == vy => {
                block.add_member(vx, &[vy]);
                home[x] = b;
            }
            (kind, _) => {
                let m_old = markers.len();
                let m_new = m_old + 1;
                let nb = blocks.len();
                blocks[b].rename(vy, Node::Marker(m_old));
                let hm = Node::Marker(m_new);
                let edges: Vec<(Node, Node)> = match kind {
                    PruningKind::TrueTwin { .. } => vec![(vy, vx), (vy, hm), (vx, hm)],
                    PruningKind::FalseTwin { .. } => vec![(vy, hm), (vx, hm)],
                    PruningKind::Pendant { .. } => vec![(vy, vx), (vy, hm)],
                };
                blocks.push(Block::new(nb, [vy, vx, hm], edges));
                markers.push(Marker { id: m_old, home: b, partner: m_new });
                markers.push(Marker { id: m_new, home: nb, partner: m_old });
                home[x] = nb;
                home[y] = nb;
            }
        }
    }
    Ok(Decomposition {
        blocks,
        markers,
        origin: g.clone(),
    })
}

/// Convenience wrapper: prune, then decompose. Fails with `NotDh` when no
/// pruning sequence exists.
pub fn decompose(g: &Graph) -> Result<Decomposition> {
    let seq = dh::pruning_sequence(g)?.ok_or(Error::NotDh)?;
    canonical_decomposition_dh(g, &seq)
}

/// Star centre as seen from the split tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Centre {
    /// Centre is an original vertex.
    Vertex(usize),
    /// Centre is the marker whose marked edge leads to this tree node.
    Toward(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Prime,
    Clique,
    Star { centre: Centre },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub block: usize,
    pub kind: NodeKind,
    /// `V(u)`: original vertices in the block, ascending.
    pub vertices: Vec<usize>,
}

/// A tree edge seen from one endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Link {
    pub node: usize,
    /// Marker on this side of the edge.
    pub marker: usize,
    /// Its partner on the other side.
    pub partner: usize,
}

/// Blocks contracted to nodes, one tree edge per marker pair. Node `u`
/// corresponds to block `u`.
#[derive(Clone, Debug)]
pub struct SplitTree {
    nodes: Vec<TreeNode>,
    links: Vec<Vec<Link>>,
}

impl SplitTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, u: usize) -> &TreeNode {
        &self.nodes[u]
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    /// Neighbours of `u`, ascending by node id.
    pub fn links(&self, u: usize) -> &[Link] {
        &self.links[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.links[u].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, ls) in self.links.iter().enumerate() {
            for l in ls {
                if u < l.node {
                    out.push((u, l.node));
                }
            }
        }
        out
    }

    pub fn is_path(&self) -> bool {
        (0..self.len()).all(|u| self.degree(u) <= 2)
    }

    /// Nodes from one end of a path to the other, starting at the end whose
    /// smallest vertex id is smaller. `None` unless the tree is a path.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if !self.is_path() || self.is_empty() {
            return None;
        }
        let ends: Vec<usize> = (0..self.len()).filter(|&u| self.degree(u) <= 1).collect();
        let start = *ends
            .iter()
            .min_by_key(|&&u| self.nodes[u].vertices.first().copied().unwrap_or(usize::MAX))?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(next) = self.links[cur].iter().map(|l| l.node).find(|&w| w != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order)
    }
}

pub fn split_tree(d: &Decomposition) -> Result<SplitTree> {
    check_structure(&d.blocks, &d.markers, d.origin.n()).map_err(Error::MalformedDecomposition)?;
    let k = d.blocks.len();
    let mut links = vec![Vec::new(); k];
    for m in &d.markers {
        let p = &d.markers[m.partner];
        links[m.home].push(Link {
            node: p.home,
            marker: m.id,
            partner: p.id,
        });
    }
    for ls in &mut links {
        ls.sort_by_key(|l| l.node);
    }
    if d.markers.len() / 2 + 1 != k || !tree_connected(&links) {
        return Err(Error::MalformedDecomposition("marked edges do not form a tree".into()));
    }
    let nodes = d
        .blocks
        .iter()
        .map(|b| {
            let kind = match b.kind {
                BlockKind::Prime => NodeKind::Prime,
                BlockKind::Clique => NodeKind::Clique,
                BlockKind::Star { centre: Node::Vertex(v) } => NodeKind::Star { centre: Centre::Vertex(v) },
                BlockKind::Star { centre: Node::Marker(m) } => NodeKind::Star {
                    centre: Centre::Toward(d.markers[d.markers[m].partner].home),
                },
            };
            TreeNode {
                block: b.id,
                kind,
                vertices: b.vertices().collect(),
            }
        })
        .collect();
    Ok(SplitTree { nodes, links })
}

fn tree_connected(links: &[Vec<Link>]) -> bool {
    if links.is_empty() {
        return true;
    }
    let mut seen = vec![false; links.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for l in &links[u] {
            if !std::mem::replace(&mut seen[l.node], true) {
                stack.push(l.node);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// `V(G^{uv})`: original vertices in nodes on `u`'s side of the edge `uv`.
pub fn side_vertices(t: &SplitTree, u: usize, v: usize) -> Result<Vec<usize>> {
    if u >= t.len() || v >= t.len() || !t.links[u].iter().any(|l| l.node == v) {
        return Err(Error::NotATreeEdge(u, v));
    }
    let mut out = Vec::new();
    let mut stack = vec![(u, v)];
    while let Some((w, from)) = stack.pop() {
        out.extend_from_slice(&t.nodes[w].vertices);
        for l in &t.links[w] {
            if l.node != from {
                stack.push((l.node, w));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Ids, marker placement or vertex coverage is broken.
    Structure(String),
    /// Marked edges do not form a tree over the blocks.
    NotATree,
    BlockTooSmall { block: usize },
    /// The recorded kind does not match the block's edges.
    KindMismatch { block: usize },
    /// A block recorded as prime has a split.
    PrimeHasSplit { block: usize },
    /// Two neighbouring clique blocks.
    AdjacentCliques { a: usize, b: usize },
    /// Neighbouring stars joined centre-to-leaf.
    StarOrientation { a: usize, b: usize },
    RecomposeMismatch,
}

/// Largest prime block checked exhaustively for hidden splits.
const PRIME_CHECK_LIMIT: usize = 16;

/// Empty iff the decomposition is canonical and recomposes to its origin.
pub fn validate_canonical(d: &Decomposition) -> Vec<Violation> {
    let mut out = Vec::new();
    if let Err(e) = check_structure(&d.blocks, &d.markers, d.origin.n()) {
        out.push(Violation::Structure(e));
        return out;
    }
    let tree = match split_tree(d) {
        Ok(t) => t,
        Err(_) => {
            out.push(Violation::NotATree);
            return out;
        }
    };
    let single = d.blocks.len() == 1;
    for b in &d.blocks {
        if b.len() < 3 && !(single && d.origin.n() <= 2) {
            out.push(Violation::BlockTooSmall { block: b.id });
        }
        let recorded = b.kind;
        if recorded != classify(&b.adj) || !b.as_graph().0.is_connected() {
            out.push(Violation::KindMismatch { block: b.id });
        }
        if recorded == BlockKind::Prime && b.len() <= PRIME_CHECK_LIMIT && has_split(&b.as_graph().0) {
            out.push(Violation::PrimeHasSplit { block: b.id });
        }
    }
    for m in &d.markers {
        let p = &d.markers[m.partner];
        if m.id > p.id {
            continue;
        }
        let (a, b) = (&d.blocks[m.home], &d.blocks[p.home]);
        match (a.kind, b.kind) {
            (BlockKind::Clique, BlockKind::Clique) => out.push(Violation::AdjacentCliques { a: a.id, b: b.id }),
            (BlockKind::Star { .. }, BlockKind::Star { .. })
                if a.is_centre(Node::Marker(m.id)) != b.is_centre(Node::Marker(p.id)) =>
            {
                out.push(Violation::StarOrientation { a: a.id, b: b.id })
            }
            _ => {}
        }
    }
    debug_assert_eq!(tree.len(), d.blocks.len());
    match recompose(d) {
        Ok(g) if g.same_edges(&d.origin) => {}
        _ => out.push(Violation::RecomposeMismatch),
    }
    out
}

fn has_split(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    // Canonical side contains vertex 0.
    (0u64..1 << (n - 1)).any(|mask| {
        let inside = BitSet::from_iter_with_capacity(n, std::iter::once(0).chain((1..n).filter(|i| mask >> (i - 1) & 1 == 1)));
        let k = inside.len();
        k >= 2 && n - k >= 2 && gf2::cutrank_of_bitset(g, &inside) == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn v(i: usize) -> Node {
        Node::Vertex(i)
    }

    #[test]
    fn is_split_examples() {
        assert!(is_split(&cycle(4), &[0, 2]).unwrap());
        assert!(!is_split(&cycle(4), &[0, 1]).unwrap());
        assert!(is_split(&path(4), &[0, 1]).unwrap());
        assert!(!is_split(&path(4), &[0]).unwrap());
        let c5 = cycle(5);
        for mask in 0u32..32 {
            let x: Vec<usize> = (0..5).filter(|i| mask >> i & 1 == 1).collect();
            assert!(!is_split(&c5, &x).unwrap());
        }
        assert_eq!(is_split(&c5, &[9]), Err(Error::InvalidVertex(9)));
    }

    #[test]
    fn refine_c4() {
        let d = Decomposition::trivial(&cycle(4));
        let (x, y) = refine(&d.blocks()[0], &[v(0), v(2)], 0, 1, 1).unwrap();
        assert_eq!(x.kind, BlockKind::Star { centre: Node::Marker(0) });
        assert_eq!(y.kind, BlockKind::Star { centre: Node::Marker(1) });
        assert_eq!(x.vertices().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(y.vertices().collect::<Vec<_>>(), vec![1, 3]);
        let markers = vec![Marker { id: 0, home: 0, partner: 1 }, Marker { id: 1, home: 1, partner: 0 }];
        let d2 = Decomposition::from_parts(vec![x, y], markers, cycle(4)).unwrap();
        assert!(recompose(&d2).unwrap().same_edges(&cycle(4)));
        assert!(validate_canonical(&d2).is_empty());
    }

    #[test]
    fn refine_p4() {
        let d = Decomposition::trivial(&path(4));
        let (x, y) = refine(&d.blocks()[0], &[v(0), v(1)], 0, 1, 1).unwrap();
        assert_eq!(x.edges().collect::<Vec<_>>(), vec![(v(0), v(1)), (v(1), Node::Marker(0))]);
        assert_eq!(y.edges().collect::<Vec<_>>(), vec![(v(2), v(3)), (v(2), Node::Marker(1))]);
        let markers = vec![Marker { id: 0, home: 0, partner: 1 }, Marker { id: 1, home: 1, partner: 0 }];
        let d2 = Decomposition::from_parts(vec![x, y], markers, path(4)).unwrap();
        assert!(recompose(&d2).unwrap().same_edges(&path(4)));
    }

    #[test]
    fn refine_rejects_non_split() {
        let d = Decomposition::trivial(&cycle(5));
        assert_eq!(refine(&d.blocks()[0], &[v(0), v(1)], 0, 1, 1), Err(Error::NotASplit));
        assert_eq!(refine(&d.blocks()[0], &[v(7), v(1)], 0, 1, 1), Err(Error::NotASplit));
    }

    #[test]
    fn recompose_trivial() {
        let g = net();
        assert_eq!(recompose(&Decomposition::trivial(&g)).unwrap(), g);
    }

    #[test]
    fn clique_is_one_block() {
        for n in 1..=6 {
            let d = decompose(&complete(n)).unwrap();
            assert_eq!(d.blocks().len(), 1);
            assert_eq!(d.blocks()[0].kind, BlockKind::Clique);
            assert!(validate_canonical(&d).is_empty());
        }
    }

    #[test]
    fn p4_two_stars() {
        let d = decompose(&path(4)).unwrap();
        assert_eq!(d.blocks().len(), 2);
        assert!(validate_canonical(&d).is_empty());
        let t = split_tree(&d).unwrap();
        let mut parts: Vec<Vec<usize>> = t.nodes().iter().map(|n| n.vertices.clone()).collect();
        parts.sort();
        assert_eq!(parts, vec![vec![0, 1], vec![2, 3]]);
        for n in t.nodes() {
            let centre = if n.vertices == [0, 1] { 1 } else { 2 };
            assert_eq!(n.kind, NodeKind::Star { centre: Centre::Vertex(centre) });
        }
        let (u, w) = t.edges()[0];
        let a = side_vertices(&t, u, w).unwrap();
        let b = side_vertices(&t, w, u).unwrap();
        assert_eq!(a.len() + b.len(), 4);
        assert!(a == vec![0, 1] || b == vec![0, 1]);
    }

    #[test]
    fn net_tree_is_star_with_three_leaves() {
        let d = decompose(&net()).unwrap();
        assert!(validate_canonical(&d).is_empty());
        let t = split_tree(&d).unwrap();
        assert_eq!(t.len(), 4);
        let centre = (0..4).find(|&u| t.degree(u) == 3).unwrap();
        assert!(t.node(centre).vertices.is_empty());
        assert_eq!(t.node(centre).kind, NodeKind::Clique);
        let mut sides: Vec<Vec<usize>> = t
            .links(centre)
            .iter()
            .map(|l| side_vertices(&t, l.node, centre).unwrap())
            .collect();
        sides.sort();
        assert_eq!(sides, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
    }

    #[test]
    fn side_vertices_rejects_non_edges() {
        let t = split_tree(&decompose(&path(4)).unwrap()).unwrap();
        assert_eq!(side_vertices(&t, 0, 0), Err(Error::NotATreeEdge(0, 0)));
        assert_eq!(side_vertices(&t, 0, 5), Err(Error::NotATreeEdge(0, 5)));
    }

    #[test]
    fn degenerate_orders() {
        let d1 = decompose(&Graph::new(1)).unwrap();
        assert_eq!(d1.blocks().len(), 1);
        assert!(validate_canonical(&d1).is_empty());
        let d2 = decompose(&path(2)).unwrap();
        assert_eq!(d2.blocks()[0].len(), 2);
        assert!(validate_canonical(&d2).is_empty());
    }

    #[test]
    fn decompose_rejects_non_dh() {
        assert_eq!(decompose(&cycle(5)).unwrap_err(), Error::NotDh);
        assert_eq!(decompose(&three_k2()).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn adjacent_cliques_flagged() {
        // Two triangles {0,1,h0} and {2,3,h1} glued by a marked edge: K4
        // written non-canonically.
        let a = Block::new(0, [v(0), v(1), Node::Marker(0)], [(v(0), v(1)), (v(0), Node::Marker(0)), (v(1), Node::Marker(0))]);
        let b = Block::new(1, [v(2), v(3), Node::Marker(1)], [(v(2), v(3)), (v(2), Node::Marker(1)), (v(3), Node::Marker(1))]);
        let markers = vec![Marker { id: 0, home: 0, partner: 1 }, Marker { id: 1, home: 1, partner: 0 }];
        let d = Decomposition::from_parts(vec![a, b], markers, complete(4)).unwrap();
        assert_eq!(validate_canonical(&d), vec![Violation::AdjacentCliques { a: 0, b: 1 }]);
    }

    #[test]
    fn star_orientation_flagged() {
        // Star centred at h0 next to a star where h1 is a leaf: K_{1,3}
        // with centre 2 split non-canonically.
        let a = Block::new(0, [v(0), v(1), Node::Marker(0)], [(v(0), Node::Marker(0)), (v(1), Node::Marker(0))]);
        let b = Block::new(1, [v(2), v(3), Node::Marker(1)], [(v(2), v(3)), (v(2), Node::Marker(1))]);
        let markers = vec![Marker { id: 0, home: 0, partner: 1 }, Marker { id: 1, home: 1, partner: 0 }];
        let g = Graph::from_edges(4, &[(0, 2), (1, 2), (2, 3)]).unwrap();
        let d = Decomposition::from_parts(vec![a, b], markers, g).unwrap();
        assert_eq!(validate_canonical(&d), vec![Violation::StarOrientation { a: 0, b: 1 }]);
    }

    #[test]
    fn structure_violations() {
        let a = Block::new(0, [v(0), v(1), Node::Marker(0)], [(v(0), v(1)), (v(1), Node::Marker(0))]);
        let markers = vec![Marker { id: 0, home: 0, partner: 0 }];
        let d = Decomposition::from_parts(vec![a], markers, path(3)).unwrap();
        assert!(matches!(validate_canonical(&d)[0], Violation::Structure(_)));
        assert!(matches!(recompose(&d), Err(Error::MalformedDecomposition(_))));
    }

    #[test]
    fn recompose_mismatch_flagged() {
        let d = Decomposition::from_parts(vec![Decomposition::trivial(&path(3)).blocks()[0].clone()], vec![], complete(3)).unwrap();
        assert!(validate_canonical(&d).contains(&Violation::RecomposeMismatch));
    }

    #[test]
    fn serial_ids_are_disjoint() {
        assert_eq!(Node::Vertex(0).serial_id(), 0);
        assert_eq!(Node::Marker(0).serial_id(), -1);
        assert_eq!(Node::Marker(4).to_string(), "-5");
    }
}
