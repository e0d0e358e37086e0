//! Brute-force references for small graphs.
//!
//! Everything here works directly from definitions on bit-mask adjacency and
//! shares no code path with the recognizer beyond the `Graph` and
//! `Decomposition` data types.

use std::collections::{BTreeMap, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf2;
use crate::graph::Graph;
use crate::split::{self, Block, Decomposition, Marker, Node};

/// Limit for [`brute_lrw`] and [`brute_canonical_decomposition`].
pub const BRUTE_LIMIT: usize = 10;
/// Limit for split enumeration.
pub const SPLIT_LIMIT: usize = 16;
/// Limit for orbit, vertex-minor and distance checks.
pub const ORBIT_LIMIT: usize = 8;
/// Default bound on the size of a local-equivalence orbit.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

fn guard(g: &Graph, max: usize) -> Result<()> {
    if g.n() > max {
        Err(Error::TooLarge { n: g.n(), max })
    } else {
        Ok(())
    }
}

/// Adjacency of a graph on at most 16 vertices as row masks.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Small {
    n: usize,
    rows: [u16; 16],
}

impl Small {
    fn from_graph(g: &Graph) -> Small {
        assert!(g.n() <= 16);
        let mut rows = [0u16; 16];
        for (u, v) in g.edges() {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Small { n: g.n(), rows }
    }

    fn to_graph(self, labels: &[String]) -> Graph {
        let mut g = Graph::with_labels(labels.to_vec());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn adj(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    fn full(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    fn local_complement(&mut self, x: usize) {
        let nx = self.rows[x];
        let mut it = nx;
        while it != 0 {
            let u = it.trailing_zeros() as usize;
            it &= it - 1;
            self.rows[u] ^= nx & !(1 << u);
        }
    }

    fn cutrank(&self, inside: u16) -> usize {
        let outside = self.full() & !inside;
        let mut basis = [0u16; 16];
        let mut rank = 0;
        let mut it = inside;
        while it != 0 {
            let u = it.trailing_zeros() as usize;
            it &= it - 1;
            let mut r = self.rows[u] & outside;
            while r != 0 {
                let top = 15 - r.leading_zeros() as usize;
                if basis[top] == 0 {
                    basis[top] = r;
                    rank += 1;
                    break;
                }
                r ^= basis[top];
            }
        }
        rank
    }

    fn is_connected_on(&self, set: u16) -> bool {
        if set == 0 {
            return true;
        }
        let start = set & set.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.rows[u] & set & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == set
    }

    /// Upper-triangle code of the subgraph induced by `order`, relabelled by
    /// position.
    fn code_of(&self, order: &[usize]) -> u64 {
        let mut code = 0u64;
        let mut bit = 0;
        for j in 1..order.len() {
            for i in 0..j {
                if self.adj(order[i], order[j]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        code
    }

    fn from_code(n: usize, code: u64) -> Small {
        let mut rows = [0u16; 16];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if code >> bit & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        Small { n, rows }
    }
}

fn bits(mask: u16) -> impl Iterator<Item = usize> {
    (0..16).filter(move |i| mask >> i & 1 == 1)
}

/// Exact linear rank-width together with an optimal ordering.
///
/// Minimises over orderings by dynamic programming on prefix sets: the cut
/// rank of a prefix depends only on its set, so the best worst-cut over
/// orderings of a set `S` is `max(cutrk(S), min_v best(S - v))`.
pub fn brute_lrw_with_ordering(g: &Graph) -> Result<(usize, Vec<usize>)> {
    guard(g, BRUTE_LIMIT)?;
    let s = Small::from_graph(g);
    let size = 1usize << s.n;
    let mut best = vec![0u8; size];
    let mut last = vec![0u8; size];
    for mask in 1..size {
        let m = mask as u16;
        let (v, sub) = bits(m)
            .map(|v| (v, best[mask & !(1 << v)]))
            .min_by_key(|&(_, b)| b)
            .unwrap();
        best[mask] = sub.max(s.cutrank(m) as u8);
        last[mask] = v as u8;
    }
    let mut order = Vec::with_capacity(s.n);
    let mut mask = size - 1;
    while mask != 0 {
        let v = last[mask] as usize;
        order.push(v);
        mask &= !(1 << v);
    }
    order.reverse();
    Ok((best[size - 1] as usize, order))
}

pub fn brute_lrw(g: &Graph) -> Result<usize> {
    brute_lrw_with_ordering(g).map(|(w, _)| w)
}

/// Literal minimum of `cutrank_of_ordering` over all `n!` orderings. Only
/// meant as a cross-check of [`brute_lrw`] on tiny graphs.
pub fn brute_lrw_permutations(g: &Graph) -> Result<usize> {
    guard(g, 8)?;
    let mut perm: Vec<usize> = (0..g.n()).collect();
    let mut best = gf2::cutrank_of_ordering(g, &perm)?;
    // Heap's algorithm.
    let n = perm.len();
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(gf2::cutrank_of_ordering(g, &perm)?);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

fn split_masks(s: &Small) -> Vec<u16> {
    let n = s.n;
    if n < 4 {
        return Vec::new();
    }
    let full = s.full();
    (0u16..1 << (n - 1))
        .map(|m| (m << 1) | 1)
        .filter(|&x| {
            let k = x.count_ones() as usize;
            k >= 2 && n - k >= 2 && s.cutrank(x) == 1 && x != full
        })
        .collect()
}

fn overlaps(x: u16, y: u16, full: u16) -> bool {
    let (xc, yc) = (full & !x, full & !y);
    x & y != 0 && x & yc != 0 && xc & y != 0 && xc & yc != 0
}

fn mask_to_vec(mask: u16) -> Vec<usize> {
    bits(mask).collect()
}

fn check_split_input(g: &Graph) -> Result<()> {
    guard(g, SPLIT_LIMIT)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Every split `{X, V \ X}`, reported by the side containing vertex 0.
pub fn brute_splits(g: &Graph) -> Result<Vec<Vec<usize>>> {
    check_split_input(g)?;
    let mut out: Vec<Vec<usize>> = split_masks(&Small::from_graph(g)).into_iter().map(mask_to_vec).collect();
    out.sort();
    Ok(out)
}

/// Splits that overlap no other split.
pub fn brute_strong_splits(g: &Graph) -> Result<Vec<Vec<usize>>> {
    check_split_input(g)?;
    let s = Small::from_graph(g);
    let all = split_masks(&s);
    let full = s.full();
    let mut out: Vec<Vec<usize>> = all
        .iter()
        .filter(|&&x| all.iter().all(|&y| !overlaps(x, y, full)))
        .map(|&x| mask_to_vec(x))
        .collect();
    out.sort();
    Ok(out)
}

/// Top-down canonical decomposition: refine any block along a strong split
/// of that block until no block has one.
pub fn brute_canonical_decomposition(g: &Graph) -> Result<Decomposition> {
    guard(g, BRUTE_LIMIT)?;
    if g.n() == 0 {
        return Err(Error::Empty);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut d = Decomposition::trivial(g);
    'outer: loop {
        for b in 0..d.blocks().len() {
            let (bg, members) = d.blocks()[b].as_graph();
            let strong = brute_strong_splits(&bg)?;
            if let Some(side) = strong.first() {
                let nodes: Vec<Node> = side.iter().map(|&i| members[i]).collect();
                d.refine_block(b, &nodes)?;
                continue 'outer;
            }
        }
        return Ok(d);
    }
}

/// All graphs on the same vertex set reachable by local complementations,
/// in breadth-first order starting with `g` itself.
pub fn local_equivalence_orbit(g: &Graph, cap: usize) -> Result<Vec<Graph>> {
    guard(g, ORBIT_LIMIT)?;
    let start = Small::from_graph(g);
    let mut seen = HashSet::from([start]);
    let mut order = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for x in 0..s.n {
            let mut t = s;
            t.local_complement(x);
            if seen.insert(t) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded(cap));
                }
                order.push(t);
                queue.push_back(t);
            }
        }
    }
    Ok(order.into_iter().map(|s| s.to_graph(g.labels())).collect())
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    fn go(a: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
        if i == a.len() {
            out.push(a.clone());
            return;
        }
        for j in i..a.len() {
            a.swap(i, j);
            go(a, i + 1, out);
            a.swap(i, j);
        }
    }
    go(&mut perm, 0, &mut out);
    out
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Whether some graph locally equivalent to `g` has an induced subgraph
/// isomorphic to `h`.
///
/// Walks the local-equivalence orbit of `g` and tests every `|V(h)|`-subset
/// of each member against the set of all labelled copies of `h`.
pub fn has_vertex_minor(g: &Graph, h: &Graph) -> Result<bool> {
    guard(g, ORBIT_LIMIT)?;
    let k = h.n();
    if k > g.n() {
        return Ok(false);
    }
    if k == 0 {
        return Ok(true);
    }
    let hs = Small::from_graph(h);
    let targets: HashSet<u64> = permutations(k).iter().map(|p| hs.code_of(p)).collect();
    let subsets = subsets_of_size(g.n(), k);

    let hit = |s: &Small| subsets.iter().any(|sub| targets.contains(&s.code_of(sub)));
    let start = Small::from_graph(g);
    if hit(&start) {
        return Ok(true);
    }
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for x in 0..s.n {
            let mut t = s;
            t.local_complement(x);
            if seen.insert(t) {
                if hit(&t) {
                    return Ok(true);
                }
                if seen.len() > DEFAULT_ORBIT_CAP {
                    return Err(Error::CapExceeded(DEFAULT_ORBIT_CAP));
                }
                queue.push_back(t);
            }
        }
    }
    Ok(false)
}

/// Distance-heredity straight from the definition: every connected induced
/// subgraph keeps the distances of `g`.
pub fn is_dh_by_distances(g: &Graph) -> Result<bool> {
    guard(g, ORBIT_LIMIT)?;
    let s = Small::from_graph(g);
    let dist = |set: u16, from: usize| -> [u8; 16] {
        let mut d = [u8::MAX; 16];
        d[from] = 0;
        let mut frontier = 1u16 << from;
        let mut seen = frontier;
        let mut level = 0;
        while frontier != 0 {
            level += 1;
            let mut next = 0u16;
            for u in bits(frontier) {
                next |= s.rows[u] & set & !seen;
            }
            for v in bits(next) {
                d[v] = level;
            }
            seen |= next;
            frontier = next;
        }
        d
    };
    let full = s.full();
    let whole: Vec<[u8; 16]> = (0..s.n).map(|u| dist(full, u)).collect();
    for set in 1..=full {
        if set.count_ones() < 3 || !s.is_connected_on(set) {
            continue;
        }
        for u in bits(set) {
            let d = dist(set, u);
            if bits(set).any(|v| d[v] != whole[u][v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn relabel_randomly(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    let mut h = Graph::new(g.n());
    for (u, v) in g.edges() {
        h.add_edge(perm[u], perm[v]);
    }
    h
}

/// Connected DH graph grown from `K1` by `n - 1` random pendant, true-twin
/// and false-twin additions, then randomly relabelled.
pub fn random_dh_graph(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for x in 1..n {
        let y = rng.gen_range(0..x);
        let nbrs: Vec<usize> = g.neighbors(y).collect();
        // A false twin of an isolated vertex would disconnect the graph.
        let op = if nbrs.is_empty() { rng.gen_range(0..2) } else { rng.gen_range(0..3) };
        match op {
            0 => g.add_edge(x, y),
            1 => {
                g.add_edge(x, y);
                for w in nbrs {
                    g.add_edge(x, w);
                }
            }
            _ => {
                for w in nbrs {
                    g.add_edge(x, w);
                }
            }
        }
    }
    relabel_randomly(&g, &mut rng)
}

/// Connected graph whose canonical split decomposition is a random path of
/// clique and star blocks, recomposed and randomly relabelled. Such graphs
/// have linear rank-width at most 1.
pub fn random_lrw1_graph(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n <= 3 {
        let mut g = crate::graph::families::path(n);
        if n == 3 && rng.gen_bool(0.5) {
            g.add_edge(0, 2);
        }
        return relabel_randomly(&g, &mut rng);
    }
    // End blocks need two original vertices, inner blocks one.
    let p = rng.gen_range(1..=n - 2);
    let mut counts = vec![1usize; p];
    counts[0] = if p == 1 { n } else { 2 };
    if p > 1 {
        counts[p - 1] = 2;
        let base: usize = counts.iter().sum();
        for _ in base..n {
            let i = rng.gen_range(0..p);
            counts[i] += 1;
        }
    }

    let mut blocks = Vec::with_capacity(p);
    let mut markers = Vec::new();
    let mut next_vertex = 0;
    // Whether the previous block is a clique, and whether its right marker
    // is its star centre.
    let mut prev: Option<(bool, bool)> = None;
    for (i, &k) in counts.iter().enumerate() {
        let mut members: Vec<Node> = (next_vertex..next_vertex + k).map(Node::Vertex).collect();
        next_vertex += k;
        let left = (i > 0).then(|| Node::Marker(2 * i - 1));
        let right = (i + 1 < p).then(|| Node::Marker(2 * i));
        members.extend(left);
        members.extend(right);

        let clique_allowed = !matches!(prev, Some((true, _)));
        let is_clique = clique_allowed && rng.gen_bool(0.5);
        let (edges, right_is_centre) = if is_clique {
            let mut e = Vec::new();
            for a in 0..members.len() {
                for b in a + 1..members.len() {
                    e.push((members[a], members[b]));
                }
            }
            (e, false)
        } else {
            // The left marker must be a centre iff the previous right marker was.
            let candidates: Vec<Node> = members
                .iter()
                .copied()
                .filter(|&c| match (prev, left) {
                    (Some((false, prev_centre)), Some(l)) => (c == l) == prev_centre,
                    _ => true,
                })
                .collect();
            let centre = *candidates.choose(&mut rng).unwrap();
            let e = members.iter().filter(|&&a| a != centre).map(|&a| (centre, a)).collect();
            (e, right == Some(centre))
        };
        blocks.push(Block::new(i, members, edges));
        if i + 1 < p {
            markers.push(Marker { id: 2 * i, home: i, partner: 2 * i + 1 });
            markers.push(Marker { id: 2 * i + 1, home: i + 1, partner: 2 * i });
        }
        prev = Some((is_clique, right_is_centre));
    }
    let g = split::recompose_parts(&blocks, &markers, n).expect("generated path decomposition is well formed");
    relabel_randomly(&g, &mut rng)
}

fn canonical_code(s: &Small) -> u64 {
    let n = s.n;
    let deg: Vec<u32> = (0..n).map(|v| s.rows[v].count_ones()).collect();
    let key = |v: usize| {
        let mut nd: Vec<u32> = bits(s.rows[v]).map(|w| deg[w]).collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let mut classes: BTreeMap<(u32, Vec<u32>), Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        classes.entry(key(v)).or_default().push(v);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    fn go(s: &Small, classes: &[Vec<usize>], ci: usize, used: &mut Vec<bool>, order: &mut Vec<usize>, best: &mut u64) {
        if ci == classes.len() {
            *best = (*best).max(s.code_of(order));
            return;
        }
        let class = &classes[ci];
        let placed = class.iter().filter(|&&v| used[v]).count();
        if placed == class.len() {
            go(s, classes, ci + 1, used, order, best);
            return;
        }
        for &v in class {
            if !used[v] {
                used[v] = true;
                order.push(v);
                go(s, classes, ci, used, order, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; n];
    go(s, &classes, 0, &mut used, &mut order, &mut best);
    best
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// sorted by canonical code. Built by extending each class on `n - 1`
/// vertices with a new vertex in every possible way and keeping one graph
/// per canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ORBIT_LIMIT {
        return Err(Error::TooLarge { n, max: ORBIT_LIMIT });
    }
    let mut level: Vec<Small> = vec![Small { n: 0, rows: [0; 16] }];
    for k in 1..=n {
        let mut next: BTreeMap<u64, Small> = BTreeMap::new();
        for s in &level {
            for nbrs in 0u16..1 << (k - 1) {
                let mut t = *s;
                t.n = k;
                t.rows[k - 1] = nbrs;
                for u in bits(nbrs) {
                    t.rows[u] |= 1 << (k - 1);
                }
                let code = canonical_code(&t);
                next.entry(code).or_insert_with(|| Small::from_code(k, code));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level.into_iter().map(|s| s.to_graph(Graph::new(n).labels())).collect())
}

/// File holding the graph6 list of all graphs on `n` vertices.
pub fn fixture_file_name(n: usize) -> String {
    format!("graphs{n}.g6")
}

/// Indices of graphs on which `accepts` disagrees with `brute_lrw(g) <= 1`.
pub fn crosscheck_recognizer(graphs: &[Graph], mut accepts: impl FnMut(&Graph) -> bool) -> Result<Vec<usize>> {
    let mut bad = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        if accepts(g) != (brute_lrw(g)? <= 1) {
            bad.push(i);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::is_isomorphic_small;

    #[test]
    fn brute_lrw_examples() {
        for n in 2..=8 {
            assert_eq!(brute_lrw(&path(n)).unwrap(), 1, "P{n}");
        }
        assert_eq!(brute_lrw(&Graph::new(1)).unwrap(), 0);
        assert_eq!(brute_lrw(&Graph::new(0)).unwrap(), 0);
        assert_eq!(brute_lrw(&cycle(5)).unwrap(), 2);
        assert_eq!(brute_lrw(&net()).unwrap(), 2);
        assert_eq!(brute_lrw(&co_3k2()).unwrap(), 2);
        assert!(matches!(brute_lrw(&path(11)), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn dp_matches_permutation_enumeration() {
        for seed in 0..60 {
            let g = random_graph(2 + (seed as usize % 6), seed);
            assert_eq!(brute_lrw(&g).unwrap(), brute_lrw_permutations(&g).unwrap());
        }
        for g in [cycle(5), net(), co_3k2(), spider3()] {
            assert_eq!(brute_lrw(&g).unwrap(), brute_lrw_permutations(&g).unwrap());
        }
    }

    #[test]
    fn optimal_ordering_is_optimal() {
        for g in [cycle(6), net(), spider3(), path(7)] {
            let (w, order) = brute_lrw_with_ordering(&g).unwrap();
            assert_eq!(gf2::cutrank_of_ordering(&g, &order).unwrap(), w);
        }
    }

    fn random_graph(n: usize, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn splits_of_small_graphs() {
        assert!(brute_splits(&cycle(5)).unwrap().is_empty());
        // {0,1} and {0,3} have identity cut matrices in C4; only {0,2} splits.
        assert_eq!(brute_splits(&cycle(4)).unwrap(), vec![vec![0, 2]]);
        assert_eq!(brute_strong_splits(&cycle(4)).unwrap(), vec![vec![0, 2]]);
        assert_eq!(brute_splits(&path(4)).unwrap(), vec![vec![0, 1]]);
        assert_eq!(brute_strong_splits(&path(4)).unwrap(), vec![vec![0, 1]]);
        assert!(brute_strong_splits(&house()).unwrap().is_empty() || !brute_splits(&house()).unwrap().is_empty());
        assert_eq!(brute_splits(&three_k2()), Err(Error::Disconnected));
    }

    #[test]
    fn cliques_have_only_crossing_splits() {
        let k5 = complete(5);
        assert_eq!(brute_splits(&k5).unwrap().len(), 10);
        assert!(brute_strong_splits(&k5).unwrap().is_empty());
    }

    #[test]
    fn brute_decomposition_examples() {
        let d = brute_canonical_decomposition(&complete(5)).unwrap();
        assert_eq!(d.blocks().len(), 1);
        let d = brute_canonical_decomposition(&net()).unwrap();
        let t = split::split_tree(&d).unwrap();
        assert_eq!(t.len(), 4);
        assert!((0..4).any(|u| t.degree(u) == 3));
        assert!(split::validate_canonical(&d).is_empty());
        let p4 = brute_canonical_decomposition(&path(4)).unwrap();
        assert!(p4.is_isomorphic_to(&split::decompose(&path(4)).unwrap()));
    }

    #[test]
    fn brute_decomposition_of_prime_graph() {
        let d = brute_canonical_decomposition(&cycle(5)).unwrap();
        assert_eq!(d.blocks().len(), 1);
        assert_eq!(d.blocks()[0].kind, split::BlockKind::Prime);
        assert!(split::validate_canonical(&d).is_empty());
    }

    #[test]
    fn orbits() {
        assert_eq!(local_equivalence_orbit(&Graph::new(1), 10).unwrap().len(), 1);
        let orbit = local_equivalence_orbit(&path(3), 10).unwrap();
        assert!(orbit.iter().any(|h| h.same_edges(&complete(3))));
        assert_eq!(orbit.len(), 4);
        assert_eq!(local_equivalence_orbit(&path(3), 2), Err(Error::CapExceeded(2)));
    }

    #[test]
    fn caterpillar_orbit_trees_are_isomorphic() {
        for legs in [&[1, 1][..], &[2, 0, 1], &[0, 2, 2], &[1, 1, 1, 1]] {
            let g = caterpillar(legs);
            if g.n() > 7 {
                continue;
            }
            let orbit = local_equivalence_orbit(&g, DEFAULT_ORBIT_CAP).unwrap();
            let trees: Vec<&Graph> = orbit.iter().filter(|h| h.is_tree()).collect();
            assert!(!trees.is_empty());
            assert!(trees.iter().all(|t| is_isomorphic_small(t, &g).unwrap()));
        }
    }

    #[test]
    fn vertex_minor_examples() {
        assert!(has_vertex_minor(&net(), &Graph::new(1)).unwrap());
        assert!(has_vertex_minor(&cycle(5), &cycle(5)).unwrap());
        assert!(!has_vertex_minor(&path(7), &net()).unwrap());
        let spider = spider3();
        assert!([net(), cycle(5), co_3k2()]
            .iter()
            .any(|h| has_vertex_minor(&spider, h).unwrap()));
        assert!(!has_vertex_minor(&path(3), &path(4)).unwrap());
    }

    #[test]
    fn distance_test() {
        assert!(is_dh_by_distances(&spider3()).unwrap());
        assert!(is_dh_by_distances(&path(8)).unwrap());
        for g in [cycle(5), house(), gem(), domino()] {
            assert!(!is_dh_by_distances(&g).unwrap());
        }
        assert!(is_dh_by_distances(&co_3k2()).unwrap());
    }

    #[test]
    fn random_dh_graph_contract() {
        assert_eq!(random_dh_graph(1, 7).n(), 1);
        assert_eq!(random_dh_graph(30, 7), random_dh_graph(30, 7));
        for seed in 0..50 {
            let g = random_dh_graph(1 + seed as usize % 12, seed);
            assert!(g.is_connected());
            assert!(crate::dh::is_distance_hereditary(&g));
        }
    }

    #[test]
    fn random_lrw1_graph_contract() {
        for seed in 0..80 {
            let n = 1 + seed as usize % 9;
            let g = random_lrw1_graph(n, seed);
            assert_eq!(g.n(), n);
            assert!(g.is_connected());
            assert!(brute_lrw(&g).unwrap() <= 1, "seed {seed}");
        }
    }

    #[test]
    fn enumeration_counts() {
        let all = [1, 1, 2, 4, 11, 34, 156];
        for (n, &count) in all.iter().enumerate() {
            assert_eq!(enumerate_graphs(n).unwrap().len(), count, "n={n}");
        }
    }
}
