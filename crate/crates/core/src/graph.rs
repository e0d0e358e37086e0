//! Simple undirected graphs on dense vertex ids, plus the surgery used
//! throughout the crate: induced subgraphs, local complementation and pivots.

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Loop-free simple graph on vertices `0..n`.
///
/// External names are kept in a side table so certificates can be reported in
/// the terms of the input. Equality compares labels as well as edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<BitSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices labelled `"0"`, `"1"`, ...
    pub fn new(n: usize) -> Self {
        Graph {
            labels: (0..n).map(|i| i.to_string()).collect(),
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        let n = labels.len();
        Graph {
            labels,
            adj: vec![BitSet::new(n); n],
        }
    }

    /// Builds a graph from an edge list. Loops, duplicates and out-of-range
    /// endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v || g.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Adds the edge `uv`. Panics on a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    /// Validates a vertex set: every id in range, no repeats.
    pub fn check_vertex_set(&self, s: &[usize]) -> Result<BitSet> {
        let mut seen = BitSet::new(self.n());
        for &v in s {
            self.check_vertex(v)?;
            if seen.contains(v) {
                return Err(Error::DuplicateVertex(v));
            }
            seen.insert(v);
        }
        Ok(seen)
    }

    /// `G[S]`. Vertex `i` of the result is `s[i]`; labels follow along.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Graph> {
        self.check_vertex_set(s)?;
        let mut h = Graph::with_labels(s.iter().map(|&v| self.labels[v].clone()).collect());
        for (i, &u) in s.iter().enumerate() {
            for (j, &v) in s.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        Ok(h)
    }

    /// `G * x`: complements the subgraph induced on `N(x)`.
    pub fn local_complement(&self, x: usize) -> Result<Graph> {
        self.check_vertex(x)?;
        let mut h = self.clone();
        h.local_complement_in_place(x);
        Ok(h)
    }

    pub(crate) fn local_complement_in_place(&mut self, x: usize) {
        let nx = self.adj[x].clone();
        for u in nx.iter() {
            self.adj[u].symmetric_difference_with(&nx);
            self.adj[u].toggle(u);
        }
    }

    /// Pivot on the edge `xy`, i.e. `G * x * y * x`.
    pub fn pivot(&self, x: usize, y: usize) -> Result<Graph> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if !self.has_edge(x, y) {
            return Err(Error::NotAnEdge(x, y));
        }
        let mut h = self.clone();
        h.local_complement_in_place(x);
        h.local_complement_in_place(y);
        h.local_complement_in_place(x);
        Ok(h)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Hop distances from `s`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True when the graph is a tree (connected and acyclic).
    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.m() + 1 == self.n() && self.is_connected()
    }

    /// Same vertex count and identical edge sets; labels ignored.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }
}

/// Largest order accepted by [`is_isomorphic_small`].
pub const ISOMORPHISM_LIMIT: usize = 10;

/// Isomorphism test by degree-sequence pruning and backtracking.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.n() > ISOMORPHISM_LIMIT {
            return Err(Error::TooLarge {
                n: x.n(),
                max: ISOMORPHISM_LIMIT,
            });
        }
    }
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    // Map high-degree vertices first; they constrain the search most.
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut image = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    Ok(extend_isomorphism(g, h, &order, 0, &mut image, &mut used))
}

fn extend_isomorphism(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    for cand in 0..h.n() {
        if used[cand] || h.degree(cand) != g.degree(u) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&p| g.has_edge(u, p) == h.has_edge(cand, image[p]));
        if !consistent {
            continue;
        }
        image[u] = cand;
        used[cand] = true;
        if extend_isomorphism(g, h, order, depth + 1, image, used) {
            return true;
        }
        used[cand] = false;
    }
    image[u] = usize::MAX;
    false
}

/// Named small graphs used by tests, the catalog and the CLI examples.
pub mod families {
    use super::Graph;

    fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).expect("static edge list")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        build(n, &edges)
    }

    /// `C_n` for `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        build(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        build(leaves + 1, &edges)
    }

    /// Triangle 0,1,2 with pendants 3,4,5 attached to 0,1,2.
    pub fn net() -> Graph {
        build(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    }

    /// Complement of three disjoint edges {0,1}, {2,3}, {4,5}: the octahedron.
    pub fn co_3k2() -> Graph {
        let mut g = complete(6);
        for i in 0..3 {
            g.remove_edge(2 * i, 2 * i + 1);
        }
        g
    }

    /// Three disjoint edges.
    pub fn three_k2() -> Graph {
        build(6, &[(0, 1), (2, 3), (4, 5)])
    }

    /// Centre 0 with legs 1-2, 3-4, 5-6.
    pub fn spider3() -> Graph {
        build(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    }

    /// Square 0-1-2-3 with roof vertex 4 on the edge 0-1.
    pub fn house() -> Graph {
        build(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])
    }

    /// Path 0-1-2-3 plus vertex 4 adjacent to all of it.
    pub fn gem() -> Graph {
        build(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
    }

    /// Two squares sharing the edge 1-4: 0-1-2, 3-4-5 rows.
    pub fn domino() -> Graph {
        build(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])
    }

    /// Spine `0..spine` with `legs[i]` leaves hanging off spine vertex `i`.
    pub fn caterpillar(legs: &[usize]) -> Graph {
        let spine = legs.len();
        let n = spine + legs.iter().sum::<usize>();
        let mut g = Graph::new(n);
        for i in 1..spine {
            g.add_edge(i - 1, i);
        }
        let mut next = spine;
        for (i, &k) in legs.iter().enumerate() {
            for _ in 0..k {
                g.add_edge(i, next);
                next += 1;
            }
        }
        g
    }
}
