#![allow(dead_code)]

use powerdom::exact::{Budget, ExactOptions};
use powerdom::generators::{random_block_graph, random_cactus, random_connected, random_tree, random_with_cut_vertex, rng};
use powerdom::propagation::{is_connected_set, is_power_dominating};
use powerdom::{Graph, Vertex, VertexSet};
use proptest::prelude::*;

pub fn opts() -> ExactOptions {
    ExactOptions::with_budget(Budget::with_max_vertices(24))
}

pub fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>()).prop_map(|(n, s)| random_tree(n, &mut rng(s)))
}

pub fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..0.6, any::<u64>()).prop_map(|(n, p, s)| random_connected(n, p, &mut rng(s)))
}

pub fn block_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 2usize..=5, any::<u64>()).prop_map(|(n, k, s)| random_block_graph(n, k, &mut rng(s)))
}

pub fn cactus(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n, 3usize..=7, any::<u64>()).prop_map(|(n, k, s)| random_cactus(n, k, &mut rng(s)))
}

pub fn with_cut_vertex(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n, 0.1f64..0.6, any::<u64>()).prop_map(|(n, p, s)| random_with_cut_vertex(n, p, &mut rng(s)))
}

pub fn set(g: &Graph, vs: &[Vertex]) -> VertexSet {
    VertexSet::from_vertices(g.n(), vs.iter().copied())
}

pub fn is_pds(g: &Graph, vs: &[Vertex]) -> bool {
    is_power_dominating(g, &set(g, vs)).0
}

pub fn is_cpds(g: &Graph, vs: &[Vertex]) -> bool {
    let s = set(g, vs);
    is_power_dominating(g, &s).0 && is_connected_set(g, &s)
}

/// Vertex sets of the connected components of `g − removed`.
pub fn components_without(g: &Graph, removed: &VertexSet) -> Vec<Vec<Vertex>> {
    let mut seen = removed.clone();
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen.contains(s) {
            continue;
        }
        seen.insert(s);
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if seen.insert(w) {
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A vertex set can be avoided by some connected power dominating set iff
/// one component of its complement power dominates: connected supersets
/// stay inside a component, and supersets of power dominating sets power
/// dominate.
pub fn excludable(g: &Graph, avoided: &[Vertex]) -> bool {
    components_without(g, &set(g, avoided)).iter().any(|c| is_pds(g, c))
}
