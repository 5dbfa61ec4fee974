mod common;

use common::*;
use powerdom::blocks::blocks;
use powerdom::exact::{min_cpds, min_pds};
use powerdom::recognize::recognize;
use powerdom::structural::{
    block_graph_cpds, cactus_cpds, cactus_cpds_detailed, cycle_order, decompose_cpds, feasible_segments, solve_cpds,
    tree_cpds, tree_pd_equals_cpd,
};
use powerdom::taxonomy::{classify_cut_vertices, is_path_graph, CutVertexTaxonomy};
use powerdom::{Graph, Method, Vertex};
use proptest::prelude::*;

/// The cut-vertex condition for excluding a segment from a connected power
/// dominating set.
fn lemma_says_excludable(g: &Graph, t: &CutVertexTaxonomy, cuts: &[Vertex], seg: &[Vertex]) -> bool {
    let inside: Vec<Vertex> = seg.iter().copied().filter(|v| cuts.contains(v)).collect();
    match inside[..] {
        [] => true,
        [a] => t.in_r1(a),
        [a, b] => t.in_r1(a) && t.in_r1(b) && g.has_edge(a, b),
        _ => false,
    }
}

/// Checks every proper contiguous segment of every cycle block of `g`.
fn check_segments(g: &Graph) -> Result<(), TestCaseError> {
    let d = blocks(g).unwrap();
    let t = classify_cut_vertices(g).unwrap();
    for b in 0..d.blocks.len() {
        if !d.is_cycle(b) {
            continue;
        }
        let order = cycle_order(g, &d.blocks[b]).unwrap();
        let cuts: Vec<Vertex> = order.iter().copied().filter(|&v| d.is_cut_vertex(v)).collect();
        if cuts.is_empty() {
            continue;
        }
        let k = order.len();
        let mut best = 0;
        for i in 0..k {
            for len in 1..k {
                let seg: Vec<Vertex> = (0..len).map(|j| order[(i + j) % k]).collect();
                let brute = excludable(g, &seg);
                prop_assert_eq!(brute, lemma_says_excludable(g, &t, &cuts, &seg), "segment {:?}", seg);
                if brute {
                    best = best.max(len);
                }
            }
        }
        let f = feasible_segments(g, &d.blocks[b], &t).unwrap();
        prop_assert_eq!(f.s_max, best);
        for s in f.s0.iter().chain(&f.s1).chain(&f.s2) {
            let avoided = s.with_pendant_paths(&t);
            let rest: Vec<Vertex> = (0..g.n()).filter(|v| !avoided.contains(v)).collect();
            prop_assert!(is_cpds(g, &rest), "family member {:?}", s);
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tree_solver_matches_oracle(g in tree(14)) {
        let fast = tree_cpds(&g).unwrap();
        let brute = min_cpds(&g, &opts()).unwrap();
        prop_assert_eq!(fast.optimum, brute.optimum);
        prop_assert!(is_cpds(&g, &fast.witness));
        if g.n() >= 2 && !is_path_graph(&g) {
            // the minimum connected set of a non-path tree is unique
            let all = min_cpds(&g, &opts().all()).unwrap().all_optima.unwrap();
            prop_assert_eq!(all.len(), 1);
            prop_assert_eq!(&all[0], &classify_cut_vertices(&g).unwrap().m);
        }
    }

    #[test]
    fn tree_pd_cpd_test_matches_oracle(g in tree(12)) {
        let o = opts();
        let equal = min_pds(&g, &o).unwrap().optimum == min_cpds(&g, &o).unwrap().optimum;
        prop_assert_eq!(tree_pd_equals_cpd(&g).unwrap(), equal);
    }

    #[test]
    fn block_graph_solver_matches_oracle(g in block_graph(13)) {
        let fast = block_graph_cpds(&g).unwrap();
        prop_assert_eq!(fast.optimum, min_cpds(&g, &opts()).unwrap().optimum);
        prop_assert!(is_cpds(&g, &fast.witness));
    }

    #[test]
    fn cactus_solver_matches_oracle(g in cactus(13)) {
        let fast = cactus_cpds(&g).unwrap();
        prop_assert_eq!(fast.optimum, min_cpds(&g, &opts()).unwrap().optimum);
        prop_assert!(is_cpds(&g, &fast.witness));
    }

    #[test]
    fn segment_lemma_against_exclusion(g in cactus(12)) {
        check_segments(&g)?;
    }

    #[test]
    fn decomposition_matches_oracle(g in with_cut_vertex(11)) {
        prop_assume!(!is_path_graph(&g));
        let d = decompose_cpds(&g, &opts()).unwrap();
        prop_assert_eq!(d.result.optimum, min_cpds(&g, &opts()).unwrap().optimum);
        prop_assert!(is_cpds(&g, &d.result.witness));
        let t = classify_cut_vertices(&g).unwrap();
        prop_assert!(t.m.iter().all(|v| d.result.witness.contains(v)));
        let formula: i64 = d.blocks.iter().map(|b| b.optimum as i64).sum::<i64>()
            - d.mu.iter().map(|&m| m as i64 - 1).sum::<i64>();
        prop_assert_eq!(formula, d.result.optimum as i64);
    }

    #[test]
    fn auto_dispatch_matches_oracle(g in connected(11)) {
        let auto = solve_cpds(&g, None, &opts()).unwrap();
        prop_assert_eq!(auto.optimum, min_cpds(&g, &opts()).unwrap().optimum);
    }
}

/// Nine-cycle with seven cut vertices: `p1, p3, p4, p5` carry one leaf,
/// `p2, p6, p7` two, and two plain vertices sit between `p3, p4` and
/// `p5, p6`.
fn seven_cut_cycle() -> Graph {
    let ring = ["p1", "p2", "p3", "g1", "p4", "p5", "g2", "p6", "p7"];
    let mut edges: Vec<(String, String)> =
        (0..9).map(|i| (ring[i].to_string(), ring[(i + 1) % 9].to_string())).collect();
    for (p, leaves) in [("p1", 1), ("p2", 2), ("p3", 1), ("p4", 1), ("p5", 1), ("p6", 2), ("p7", 2)] {
        for j in 0..leaves {
            edges.push((p.to_string(), format!("{p}_l{j}")));
        }
    }
    let refs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Graph::from_labeled_edges(&refs)
}

#[test]
fn seven_cut_cycle_families() {
    let g = seven_cut_cycle();
    let t = classify_cut_vertices(&g).unwrap();
    let ring: Vec<Vertex> = (0..9).collect();
    let f = feasible_segments(&g, &ring, &t).unwrap();
    let name = |v: Vertex| g.label(v).to_string();
    let pairs = |s: &[powerdom::structural::Segment]| -> Vec<(String, String)> {
        s.iter().map(|s| (name(s.start), name(s.end))).collect()
    };
    assert_eq!(f.s0.len(), 7);
    let mut s1 = pairs(&f.s1);
    s1.sort();
    let want: Vec<(String, String)> =
        [("p2", "p4"), ("p3", "p5"), ("p4", "p6"), ("p7", "p2")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    assert_eq!(s1, want);
    assert_eq!(pairs(&f.s2), vec![("p3".to_string(), "p6".to_string())]);
    assert_eq!(f.s_max, 4);
    let sol = cactus_cpds_detailed(&g).unwrap();
    assert_eq!(sol.result.optimum, min_cpds(&g, &opts()).unwrap().optimum);
    // 9 ring vertices, 4 excluded, no leaf chosen
    assert_eq!(sol.result.optimum, 5);
}

#[test]
fn spider_centre_survives_decomposition() {
    // centre with three legs of length 2, plus a triangle hanging off one leg
    let g = Graph::from_edges(9, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (6, 7), (7, 8), (8, 6)]);
    let d = decompose_cpds(&g, &opts()).unwrap();
    assert_eq!(d.result.optimum, min_cpds(&g, &opts()).unwrap().optimum);
}

#[test]
fn dispatch_prefers_structure() {
    assert_eq!(solve_cpds(&Graph::star(4), None, &opts()).unwrap().method, Method::Tree);
    assert_eq!(solve_cpds(&Graph::complete(4), None, &opts()).unwrap().method, Method::Block);
    let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
    assert!(recognize(&bowtie).unwrap().block_graph);
    let c4_tail = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]);
    assert_eq!(solve_cpds(&c4_tail, None, &opts()).unwrap().method, Method::Cactus);
    let k23_tail = Graph::from_edges(6, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (4, 5)]);
    assert_eq!(solve_cpds(&k23_tail, None, &opts()).unwrap().method, Method::Decomposition);
    assert_eq!(solve_cpds(&Graph::complete_bipartite(3, 3), None, &opts()).unwrap().method, Method::Brute);
}
