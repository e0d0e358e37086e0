#![allow(dead_code)]

use std::path::PathBuf;

use lrw1_core::{io, oracle, Graph};

pub fn fixtures_dir() -> PathBuf {
    std::env::var_os("LRW1_FIXTURES")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"))
}

/// Every graph on `n` vertices up to isomorphism, read from the fixtures.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let path = fixtures_dir().join(oracle::fixture_file_name(n));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    io::parse_graph6_list(&text).unwrap()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Every connected graph on 1..=max_n vertices.
pub fn connected_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

pub fn delete_vertex(g: &Graph, v: usize) -> Graph {
    let rest: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    g.induced_subgraph(&rest).unwrap()
}

/// Largest exact linear rank-width over the components of `g`.
pub fn component_lrw(g: &Graph) -> usize {
    g.connected_components()
        .iter()
        .map(|c| oracle::brute_lrw(&g.induced_subgraph(c).unwrap()).unwrap())
        .max()
        .unwrap_or(0)
}
