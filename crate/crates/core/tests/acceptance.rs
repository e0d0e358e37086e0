//! Acceptance suite. Each criterion runs on its own thread and reports one
//! PASS/FAIL line; the process exits nonzero if any criterion fails.
//!
//!   1. recognizer vs exact lrw on every connected graph with n <= 7
//!   2. C5, Net and the octahedron: width 2, whole-graph obstruction, minimal
//!   3. lrw >= 2 iff one of C5, Net, octahedron is a vertex-minor (n <= 7)
//!   4. path-tree orderings have every prefix cut of rank <= 1 (n <= 200);
//!      branch-node extractions pass verification
//!   5. incremental decomposition equals the top-down one, is canonical, and
//!      recomposes to the input
//!   6. obstruction catalog: distinct, width 2, star-3 trees, minimal, and
//!      present in every small DH graph of width 2
//!   7. local complementation preserves lrw and the recognizer's decision

mod common;

use std::panic::{self, AssertUnwindSafe};

use lrw1_core::graph::families::{co_3k2, cycle, net};
use lrw1_core::graph::is_isomorphic_small;
use lrw1_core::lrw::{self, Certificate};
use lrw1_core::{dh, gf2, oracle, split, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{all_graphs, component_lrw, connected_graphs, connected_up_to, delete_vertex};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn exhaustive_equivalence() -> Outcome {
    let mut checked = 0;
    for n in 1..=7 {
        let graphs = connected_graphs(n);
        for g in &graphs {
            let c = lrw::recognize(g).map_err(|e| e.to_string())?;
            let exact = oracle::brute_lrw(g).unwrap();
            ensure!(c.accepts() == (exact <= 1), "disagreement on {}", lrw1_core::io::to_graph6(g));
            lrw::verify_certificate(g, &c).map_err(|r| format!("{}: {r}", lrw1_core::io::to_graph6(g)))?;
        }
        checked += graphs.len();
        if n == 7 {
            ensure!(graphs.len() == 853, "{} connected 7-vertex graphs", graphs.len());
        }
    }
    Ok(format!("{checked} connected graphs, 0 disagreements"))
}

fn named_obstructions() -> Outcome {
    for (name, g) in [("C5", cycle(5)), ("Net", net()), ("co-3K2", co_3k2())] {
        ensure!(oracle::brute_lrw(&g).unwrap() == 2, "{name}: lrw is not 2");
        match lrw::recognize(&g).unwrap() {
            Certificate::Obstruction(ob) => {
                ensure!(ob.vertices == (0..g.n()).collect::<Vec<_>>(), "{name}: obstruction {:?}", ob.vertices)
            }
            Certificate::Ordering(_) => return Err(format!("{name} accepted")),
        }
        for v in 0..g.n() {
            ensure!(component_lrw(&delete_vertex(&g, v)) <= 1, "{name} - {v} still has width 2");
        }
    }
    Ok("C5, Net, co-3K2: width 2, whole-graph obstruction, minimal".into())
}

fn vertex_minor_completeness() -> Outcome {
    let obstructions = [cycle(5), net(), co_3k2()];
    let graphs = connected_up_to(7);
    let mut wide = 0;
    for g in &graphs {
        let exact = oracle::brute_lrw(g).unwrap();
        let has = obstructions.iter().any(|h| oracle::has_vertex_minor(g, h).unwrap());
        ensure!((exact >= 2) == has, "mismatch on {}", lrw1_core::io::to_graph6(g));
        wide += (exact >= 2) as usize;
    }
    Ok(format!("{} graphs, {wide} with a forbidden vertex-minor, 0 disagreements", graphs.len()))
}

fn certificate_soundness() -> Outcome {
    let mut total_n = 0;
    for seed in 0..1000u64 {
        let n = 2 + (seed as usize * 7919) % 199;
        let g = oracle::random_lrw1_graph(n, seed);
        let seq = dh::pruning_sequence(&g).unwrap().ok_or(format!("seed {seed}: not DH"))?;
        let d = split::canonical_decomposition_dh(&g, &seq).unwrap();
        let t = split::split_tree(&d).unwrap();
        ensure!(t.is_path(), "seed {seed}: split tree is not a path");
        let order = lrw::ordering_from_path_tree(&t, &d).unwrap();
        let mut sorted = order.clone();
        sorted.sort_unstable();
        ensure!(sorted == (0..n).collect::<Vec<_>>(), "seed {seed}: not a permutation");
        for k in 1..n {
            let r = gf2::cut_matrix(&g, &order[..k]).unwrap().rank();
            ensure!(r <= 1, "seed {seed}: prefix {k} has cut rank {r}");
        }
        total_n += n;
    }

    let mut found = 0;
    let mut seed = 0u64;
    while found < 1000 {
        seed += 1;
        let n = 6 + (seed as usize % 35);
        let g = oracle::random_dh_graph(n, seed);
        let d = split::decompose(&g).unwrap();
        let t = split::split_tree(&d).unwrap();
        let Some(v) = (0..t.len()).find(|&u| t.degree(u) >= 3) else {
            continue;
        };
        let s = lrw::extract_lrw1_obstruction(&g, &t, &d, v).map_err(|e| format!("seed {seed}: {e}"))?;
        let cert = Certificate::Obstruction(lrw::Obstruction {
            vertices: s,
            family: lrw::Family::DhStar3,
            catalog_index: None,
        });
        lrw::verify_certificate(&g, &cert).map_err(|r| format!("seed {seed}: {r}"))?;
        found += 1;
    }
    Ok(format!(
        "1000 path-tree graphs (mean n = {}), 1000 verified extractions from {seed} samples",
        total_n / 1000
    ))
}

fn check_decomposition(g: &Graph) -> Result<(), String> {
    let tag = lrw1_core::io::to_graph6(g);
    let seq = dh::pruning_sequence(g).unwrap().ok_or(format!("{tag}: not DH"))?;
    let d = split::canonical_decomposition_dh(g, &seq).map_err(|e| format!("{tag}: {e}"))?;
    let b = oracle::brute_canonical_decomposition(g).unwrap();
    ensure!(d.is_isomorphic_to(&b), "{tag}: differs from top-down decomposition");
    let violations = split::validate_canonical(&d);
    ensure!(violations.is_empty(), "{tag}: {violations:?}");
    let back = split::recompose(&d).map_err(|e| format!("{tag}: {e}"))?;
    ensure!(back == *g, "{tag}: recomposition differs");
    Ok(())
}

fn decomposition_correctness() -> Outcome {
    let mut sample = 0;
    for seed in 0..500u64 {
        let g = oracle::random_dh_graph(1 + seed as usize % 8, seed);
        check_decomposition(&g)?;
        sample += 1;
    }
    let mut exhaustive = 0;
    for g in connected_up_to(7) {
        if dh::is_distance_hereditary(&g) {
            check_decomposition(&g)?;
            exhaustive += 1;
        }
    }
    Ok(format!("{sample} sampled + {exhaustive} exhaustive DH graphs"))
}

fn contains_induced(g: &Graph, h: &Graph) -> bool {
    let (n, k) = (g.n(), h.n());
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
        let s: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
        is_isomorphic_small(&g.induced_subgraph(&s).unwrap(), h).unwrap()
    })
}

fn catalog_fidelity() -> Outcome {
    let cat = lrw::dh_obstruction_catalog();
    for (i, a) in cat.iter().enumerate() {
        for b in &cat[i + 1..] {
            ensure!(!is_isomorphic_small(a, b).unwrap(), "catalog has duplicates");
        }
    }
    for (name, g) in [("Net", net()), ("co-3K2", co_3k2())] {
        ensure!(cat.iter().any(|m| is_isomorphic_small(m, &g).unwrap()), "{name} missing");
    }
    for (i, m) in cat.iter().enumerate() {
        ensure!(oracle::brute_lrw(m).unwrap() == 2, "entry {i}: width is not 2");
        let t = split::split_tree(&split::decompose(m).unwrap()).unwrap();
        let mut degrees: Vec<usize> = (0..t.len()).map(|u| t.degree(u)).collect();
        degrees.sort_unstable();
        ensure!(degrees == [1, 1, 1, 3], "entry {i}: split tree degrees {degrees:?}");
        for v in 0..m.n() {
            ensure!(component_lrw(&delete_vertex(m, v)) <= 1, "entry {i} is not minimal");
        }
    }
    let mut wide = 0;
    for n in 1..=7 {
        for g in all_graphs(n) {
            if dh::is_distance_hereditary(&g) && component_lrw(&g) >= 2 {
                ensure!(
                    cat.iter().any(|m| m.n() <= g.n() && contains_induced(&g, m)),
                    "{} contains no catalog entry",
                    lrw1_core::io::to_graph6(&g)
                );
                wide += 1;
            }
        }
    }
    Ok(format!("{} entries; all {wide} DH graphs of width 2 with n <= 7 contain one", cat.len()))
}

fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
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

fn local_complementation_invariance() -> Outcome {
    let mut pairs = 0;
    for n in 1..=6 {
        for g in all_graphs(n) {
            let w = oracle::brute_lrw(&g).unwrap();
            for x in 0..n {
                let h = g.local_complement(x).unwrap();
                ensure!(oracle::brute_lrw(&h).unwrap() == w, "lrw changed under G*{x}");
                pairs += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut accepted = 0;
    for i in 0..200u64 {
        let n = rng.gen_range(1..=8);
        let g = if i % 2 == 0 { oracle::random_lrw1_graph(n, i) } else { random_graph(n, &mut rng) };
        let before = lrw::recognize(&g).unwrap().accepts();
        let mut h = g.clone();
        for _ in 0..rng.gen_range(1..=10) {
            h = h.local_complement(rng.gen_range(0..n)).unwrap();
        }
        ensure!(lrw::recognize(&h).unwrap().accepts() == before, "decision changed on sample {i}");
        accepted += before as usize;
    }
    Ok(format!("{pairs} (graph, vertex) pairs; 200 sequences, {accepted} accepted"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("exhaustive oracle equivalence", exhaustive_equivalence),
        ("named obstructions", named_obstructions),
        ("vertex-minor completeness", vertex_minor_completeness),
        ("certificate soundness", certificate_soundness),
        ("canonical decomposition", decomposition_correctness),
        ("obstruction catalog", catalog_fidelity),
        ("local complementation invariance", local_complementation_invariance),
    ];
    let outcomes: Vec<Outcome> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, f)| {
                s.spawn(move || {
                    panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
                        let msg = e
                            .downcast_ref::<String>()
                            .cloned()
                            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                            .unwrap_or_default();
                        Err(format!("panicked: {msg}"))
                    })
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut failed = 0;
    for (i, ((name, _), outcome)) in criteria.iter().zip(&outcomes).enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS - {detail}", i + 1),
            Err(why) => {
                println!("criterion {} ({name}): FAIL - {why}", i + 1);
                failed += 1;
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} acceptance criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} acceptance criteria passed", criteria.len());
}
