//! Distance-hereditary recognition by pendant and twin elimination.
//!
//! A connected graph is distance-hereditary iff it can be reduced to a single
//! vertex by repeatedly deleting a pendant vertex or one vertex of a twin
//! pair. The class is hereditary and closed under adding pendants and twins,
//! so any greedy elimination order succeeds on every DH graph.

use std::collections::BTreeSet;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{families, is_isomorphic_small, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PruningKind {
    /// The removed vertex had exactly one neighbour.
    Pendant { attached_to: usize },
    /// `N[removed] = N[of]`.
    TrueTwin { of: usize },
    /// `N(removed) = N(of)` and the two are not adjacent.
    FalseTwin { of: usize },
}

impl PruningKind {
    /// The surviving vertex the step refers to.
    pub fn anchor(&self) -> usize {
        match *self {
            PruningKind::Pendant { attached_to } => attached_to,
            PruningKind::TrueTwin { of } | PruningKind::FalseTwin { of } => of,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PruningStep {
    pub removed: usize,
    pub kind: PruningKind,
}

/// Elimination order reducing a connected graph to `last`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PruningSequence {
    pub steps: Vec<PruningStep>,
    pub last: usize,
}

impl PruningSequence {
    /// Replays the steps on `g`, checking each pendant/twin condition against
    /// the graph as it stands at that step.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        if n == 0 {
            return Err(Error::Empty);
        }
        if self.steps.len() + 1 != n {
            return Err(Error::InvalidSequence(format!(
                "{} steps for {} vertices",
                self.steps.len(),
                n
            )));
        }
        let mut alive = BitSet::full(n);
        let row = |v: usize, alive: &BitSet| {
            let mut r = g.neighbor_set(v).clone();
            r.intersect_with(alive);
            r
        };
        for (i, step) in self.steps.iter().enumerate() {
            let (x, y) = (step.removed, step.kind.anchor());
            let bad = |what: &str| Error::InvalidSequence(format!("step {i}: {what}"));
            if x >= n || y >= n || x == y || !alive.contains(x) || !alive.contains(y) {
                return Err(bad("vertex not present"));
            }
            let (nx, ny) = (row(x, &alive), row(y, &alive));
            let ok = match step.kind {
                PruningKind::Pendant { .. } => nx.len() == 1 && nx.contains(y),
                PruningKind::TrueTwin { .. } => {
                    let (mut a, mut b) = (nx.clone(), ny.clone());
                    a.insert(x);
                    b.insert(y);
                    nx.contains(y) && a == b
                }
                PruningKind::FalseTwin { .. } => !nx.contains(y) && nx == ny,
            };
            if !ok {
                return Err(bad("pendant/twin condition fails"));
            }
            alive.remove(x);
        }
        if alive.first() != Some(self.last) || alive.len() != 1 {
            return Err(Error::InvalidSequence("surviving vertex mismatch".into()));
        }
        Ok(())
    }
}

/// Working copy of the adjacency restricted to surviving vertices.
struct Pruner {
    adj: Vec<BitSet>,
    deg: Vec<usize>,
    alive: BitSet,
    /// Every vertex that might currently be eliminable. Anything outside it
    /// was found stuck and has not been touched since.
    pending: BTreeSet<usize>,
    /// Removed vertices with their neighbours at removal time, for rollback.
    journal: Vec<(usize, Vec<usize>)>,
}

impl Pruner {
    fn new(g: &Graph, keep: &BitSet) -> Self {
        let adj: Vec<BitSet> = (0..g.n())
            .map(|v| {
                let mut r = g.neighbor_set(v).clone();
                r.intersect_with(keep);
                r
            })
            .collect();
        Pruner {
            deg: adj.iter().map(BitSet::len).collect(),
            adj,
            alive: keep.clone(),
            pending: keep.iter().collect(),
            journal: Vec::new(),
        }
    }

    /// Removes `x` and queues every vertex whose status may have changed:
    /// the old neighbours of `x`, and vertices that just became twins of one
    /// of them.
    fn remove(&mut self, x: usize) {
        let nbrs: Vec<usize> = self.adj[x].iter().collect();
        for &u in &nbrs {
            self.adj[u].remove(x);
            self.adj[x].remove(u);
            self.deg[u] -= 1;
        }
        self.deg[x] = 0;
        self.alive.remove(x);
        for &u in &nbrs {
            self.pending.insert(u);
            for w in self.twins_of(u) {
                self.pending.insert(w);
            }
        }
        self.journal.push((x, nbrs));
    }

    /// Undoes removals until the journal has `len` entries.
    fn rollback(&mut self, len: usize) {
        while self.journal.len() > len {
            let (x, nbrs) = self.journal.pop().unwrap();
            for &u in &nbrs {
                self.adj[u].insert(x);
                self.adj[x].insert(u);
                self.deg[u] += 1;
            }
            self.deg[x] = nbrs.len();
            self.alive.insert(x);
        }
        self.pending.clear();
    }

    fn true_twins(&self, v: usize, w: usize) -> bool {
        self.deg[v] == self.deg[w] && self.adj[v].contains(w) && self.adj[v].eq_except(&self.adj[w], v, w)
    }

    fn false_twins(&self, v: usize, w: usize) -> bool {
        v != w && self.deg[v] == self.deg[w] && !self.adj[v].contains(w) && self.adj[v] == self.adj[w]
    }

    fn twins_of(&self, v: usize) -> Vec<usize> {
        let Some(u) = self.adj[v].first() else { return Vec::new() };
        let mut out: Vec<usize> = self.adj[v].iter().filter(|&w| self.true_twins(v, w)).collect();
        out.extend(self.adj[u].iter().filter(|&w| self.false_twins(v, w)));
        out
    }

    /// First applicable elimination for `v`: pendant, then true twin, then
    /// false twin, each with the smallest partner.
    fn elimination_for(&self, v: usize) -> Option<PruningKind> {
        let nv = &self.adj[v];
        match self.deg[v] {
            0 => return None,
            1 => {
                return Some(PruningKind::Pendant {
                    attached_to: nv.first().unwrap(),
                })
            }
            _ => {}
        }
        // True twins are adjacent, so they sit in N(v).
        if let Some(of) = nv.iter().find(|&w| self.true_twins(v, w)) {
            return Some(PruningKind::TrueTwin { of });
        }
        // False twins share every neighbour, in particular the first one.
        let u = nv.first().unwrap();
        self.adj[u]
            .iter()
            .find(|&w| self.false_twins(v, w))
            .map(|of| PruningKind::FalseTwin { of })
    }

    /// Eliminates the smallest eliminable vertex until none is left.
    fn run(&mut self, mut on_step: impl FnMut(PruningStep)) {
        while let Some(v) = self.pending.pop_first() {
            if let Some(kind) = self.elimination_for(v) {
                self.remove(v);
                on_step(PruningStep { removed: v, kind });
            }
        }
    }

    /// Whether the survivors induce one cycle. Such a cycle is chordless, and
    /// every proper induced subgraph of it is a union of paths.
    fn is_cycle(&self) -> bool {
        let Some(start) = self.alive.first() else { return false };
        if self.alive.iter().any(|v| self.deg[v] != 2) {
            return false;
        }
        let (mut prev, mut cur, mut len) = (start, self.adj[start].first().unwrap(), 1);
        while cur != start {
            let next = self.adj[cur].iter().find(|&w| w != prev).unwrap();
            (prev, cur, len) = (cur, next, len + 1);
        }
        len == self.alive.len()
    }

    /// Whether every surviving vertex is isolated, i.e. each component was
    /// reduced to one vertex.
    fn fully_reduced(&self) -> bool {
        self.alive.iter().all(|v| self.deg[v] == 0)
    }
}

/// Greedy pendant/twin elimination of a connected graph, always removing the
/// smallest eliminable vertex. `Ok(None)` means the graph is not
/// distance-hereditary.
pub fn pruning_sequence(g: &Graph) -> Result<Option<PruningSequence>> {
    if g.n() == 0 {
        return Err(Error::Empty);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut p = Pruner::new(g, &BitSet::full(g.n()));
    let mut steps = Vec::with_capacity(g.n() - 1);
    p.run(|s| steps.push(s));
    if p.alive.len() != 1 {
        return Ok(None);
    }
    let last = p.alive.first().unwrap();
    Ok(Some(PruningSequence { steps, last }))
}

fn is_dh_on(g: &Graph, keep: &BitSet) -> bool {
    let mut p = Pruner::new(g, keep);
    p.run(|_| ());
    p.fully_reduced()
}

/// True iff every connected component is distance-hereditary.
pub fn is_distance_hereditary(g: &Graph) -> bool {
    is_dh_on(g, &BitSet::full(g.n()))
}

/// A minimal non-DH induced subgraph: prune what can be pruned, then try
/// deleting each remaining vertex in ascending order. A deletion is kept,
/// together with whatever it lets pruning remove, when the rest stays
/// non-DH.
///
/// One pass suffices: if `S - v` was DH when `v` was tried, every later
/// `S' - v` with `S'` smaller is an induced subgraph of it and DH too.
pub fn non_dh_obstruction(g: &Graph) -> Result<Vec<usize>> {
    // What pruning cannot remove is itself non-DH, since adding pendants
    // and twins keeps a graph DH.
    let mut p = Pruner::new(g, &BitSet::full(g.n()));
    p.run(|_| ());
    if p.fully_reduced() {
        return Err(Error::AlreadyDh);
    }
    for v in p.alive.iter().collect::<Vec<_>>() {
        if p.is_cycle() {
            break;
        }
        if !p.alive.contains(v) {
            continue;
        }
        let mark = p.journal.len();
        p.remove(v);
        p.run(|_| ());
        if p.fully_reduced() {
            p.rollback(mark);
        }
    }
    Ok(p.alive.iter().collect())
}

/// The four shapes of a minimal non-DH graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NonDhFamily {
    /// Induced cycle of the given length, at least 5.
    Hole(usize),
    House,
    Gem,
    Domino,
}

/// Identifies `g` as one of the minimal non-DH graphs, if it is one.
pub fn classify_non_dh(g: &Graph) -> Option<NonDhFamily> {
    let n = g.n();
    if n >= 5 && g.is_connected() && (0..n).all(|v| g.degree(v) == 2) {
        return Some(NonDhFamily::Hole(n));
    }
    let named = [
        (NonDhFamily::House, families::house()),
        (NonDhFamily::Gem, families::gem()),
        (NonDhFamily::Domino, families::domino()),
    ];
    named
        .into_iter()
        .find(|(_, h)| h.n() == n && is_isomorphic_small(g, h).unwrap_or(false))
        .map(|(f, _)| f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn k1_has_empty_sequence() {
        let s = pruning_sequence(&Graph::new(1)).unwrap().unwrap();
        assert!(s.steps.is_empty());
        assert_eq!(s.last, 0);
    }

    #[test]
    fn trees_prune_by_pendants_only() {
        for g in [path(6), star(4), spider3(), caterpillar(&[1, 3, 0, 2])] {
            let s = pruning_sequence(&g).unwrap().unwrap();
            s.validate(&g).unwrap();
            assert!(s.steps.iter().all(|st| matches!(st.kind, PruningKind::Pendant { .. })));
        }
    }

    #[test]
    fn holes_and_small_obstructions_are_not_dh() {
        for g in [cycle(5), cycle(6), cycle(9), house(), gem(), domino()] {
            assert_eq!(pruning_sequence(&g).unwrap(), None);
            assert!(!is_distance_hereditary(&g));
        }
    }

    #[test]
    fn octahedron_and_net_are_dh() {
        for g in [co_3k2(), net(), complete(5)] {
            let s = pruning_sequence(&g).unwrap().unwrap();
            s.validate(&g).unwrap();
        }
    }

    #[test]
    fn errors() {
        assert_eq!(pruning_sequence(&Graph::new(0)), Err(Error::Empty));
        assert_eq!(pruning_sequence(&three_k2()), Err(Error::Disconnected));
        assert!(is_distance_hereditary(&three_k2()));
        assert_eq!(non_dh_obstruction(&path(4)), Err(Error::AlreadyDh));
    }

    #[test]
    fn validate_rejects_tampering() {
        let g = path(4);
        let mut s = pruning_sequence(&g).unwrap().unwrap();
        s.steps[0].kind = PruningKind::FalseTwin { of: s.steps[0].kind.anchor() };
        assert!(matches!(s.validate(&g), Err(Error::InvalidSequence(_))));
    }

    #[test]
    fn c5_obstruction_is_whole_cycle() {
        assert_eq!(non_dh_obstruction(&cycle(5)).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(classify_non_dh(&cycle(5)), Some(NonDhFamily::Hole(5)));
    }

    #[test]
    fn c5_with_pendant_drops_pendant() {
        let mut g = Graph::new(6);
        for (u, v) in cycle(5).edges() {
            g.add_edge(u, v);
        }
        g.add_edge(0, 5);
        let s = non_dh_obstruction(&g).unwrap();
        assert_eq!(s, vec![0, 1, 2, 3, 4]);
        for v in &s {
            let rest: Vec<usize> = s.iter().copied().filter(|u| u != v).collect();
            assert!(is_distance_hereditary(&g.induced_subgraph(&rest).unwrap()));
        }
    }

    #[test]
    fn c8_is_its_own_obstruction() {
        assert_eq!(non_dh_obstruction(&cycle(8)).unwrap(), (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn classify_named() {
        assert_eq!(classify_non_dh(&house()), Some(NonDhFamily::House));
        assert_eq!(classify_non_dh(&gem()), Some(NonDhFamily::Gem));
        assert_eq!(classify_non_dh(&domino()), Some(NonDhFamily::Domino));
        assert_eq!(classify_non_dh(&cycle(4)), None);
        assert_eq!(classify_non_dh(&net()), None);
    }
}
