mod common;

use common::*;
use powerdom::exact::{
    l_round_cpd, l_round_pd, min_cpds, min_cpds_subject_to, min_pds, min_zero_forcing, ppt, ppt_connected, zf_to_cpd_gadget,
    Budget, ExactOptions,
};
use powerdom::generators::all_graphs;
use powerdom::propagation::{is_power_dominating, is_zero_forcing, ppt_of_set};
use powerdom::taxonomy::{classify_cut_vertices, is_path_graph};
use powerdom::{Error, Graph, VertexSet};
use proptest::prelude::*;

fn subset(g: &Graph, mask: u64) -> VertexSet {
    VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| mask >> v & 1 == 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn power_domination_is_monotone(g in connected(10), a in any::<u64>(), b in any::<u64>()) {
        let small = subset(&g, a & b);
        let large = subset(&g, a | b);
        if is_power_dominating(&g, &small).0 {
            prop_assert!(is_power_dominating(&g, &large).0);
        }
    }

    #[test]
    fn traces_replay_to_their_final_set(g in connected(10), a in any::<u64>()) {
        let s = subset(&g, a | 1);
        let (ok, trace) = is_power_dominating(&g, &s);
        let replayed = trace.replay(&g).unwrap();
        prop_assert_eq!(&replayed, &trace.final_colored);
        prop_assert_eq!(ok, replayed.is_full());
        if ok {
            prop_assert!(ppt_of_set(&g, &s).unwrap() <= g.n());
            prop_assert_eq!(ppt_of_set(&g, &s).unwrap(), trace.last_timestep());
        }
    }

    #[test]
    fn zero_forcing_sets_power_dominate(g in connected(10), a in any::<u64>()) {
        let s = subset(&g, a);
        if is_zero_forcing(&g, &s) {
            prop_assert!(is_power_dominating(&g, &s).0);
        }
    }

    #[test]
    fn connected_number_dominates_plain_number(g in connected(11)) {
        let o = opts();
        let pd = min_pds(&g, &o).unwrap();
        let cpd = min_cpds(&g, &o).unwrap();
        prop_assert!(pd.optimum <= cpd.optimum);
        prop_assert!(is_pds(&g, &pd.witness));
        prop_assert!(is_cpds(&g, &cpd.witness));
    }

    #[test]
    fn forced_vertices_lie_in_every_minimum_cpds(g in with_cut_vertex(10)) {
        let t = classify_cut_vertices(&g).unwrap();
        let all = min_cpds(&g, &opts().all()).unwrap().all_optima.unwrap();
        let path = is_path_graph(&g);
        for s in &all {
            for v in &t.m {
                prop_assert!(s.contains(v));
            }
            if !path {
                prop_assert!(s.iter().all(|&v| g.degree(v) != 1), "leaf in {:?}", s);
            }
        }
    }

    #[test]
    fn some_minimum_pds_holds_every_double_leaf_parent(g in connected(10)) {
        let heavy: Vec<_> = (0..g.n()).filter(|&v| g.neighbors(v).iter().filter(|&&w| g.degree(w) == 1).count() >= 2).collect();
        let all = min_pds(&g, &opts().all()).unwrap().all_optima.unwrap();
        prop_assert!(all.iter().any(|s| heavy.iter().all(|v| s.contains(v))));
    }

    #[test]
    fn subject_to_equals_leaf_attachment(g in connected(8), pick in any::<u64>()) {
        let x: Vec<_> = (0..g.n()).filter(|&v| pick >> v & 1 == 1).take(2).collect();
        let o = opts();
        let direct = min_cpds_subject_to(&g, &x, &o).unwrap();
        let via = min_cpds(&g.attach_leaves(&x, 3).unwrap(), &o).unwrap();
        prop_assert_eq!(direct.optimum, via.optimum);
        prop_assert!(x.iter().all(|v| direct.witness.contains(v)));
    }

    #[test]
    fn round_numbers_decrease_to_the_domination_number(g in connected(9)) {
        let o = opts();
        let n = g.n();
        let mut last = usize::MAX;
        for l in 1..=n {
            let r = l_round_pd(&g, l, &o).unwrap();
            prop_assert!(r.optimum <= last);
            prop_assert!(ppt_of_set(&g, &VertexSet::from_vertices(n, r.witness.iter().copied())).unwrap() <= l);
            last = r.optimum;
        }
        prop_assert_eq!(last, min_pds(&g, &o).unwrap().optimum);
        prop_assert_eq!(l_round_cpd(&g, n, &o).unwrap().optimum, min_cpds(&g, &o).unwrap().optimum);
    }

    #[test]
    fn ppt_is_attained_by_a_minimum_set(g in connected(9)) {
        let o = opts();
        let p = ppt(&g, &o).unwrap();
        prop_assert_eq!(p.set.len(), p.optimum);
        prop_assert_eq!(ppt_of_set(&g, &VertexSet::from_vertices(g.n(), p.set.iter().copied())).unwrap(), p.ppt);
        let pc = ppt_connected(&g, &o).unwrap();
        prop_assert!(is_cpds(&g, &pc.set));
    }
}

#[test]
fn reduction_biconditional_on_tiny_graphs() {
    let budget = Budget::with_max_vertices(64);
    let o = ExactOptions::with_budget(budget.clone());
    for n in 1..=3 {
        for g in all_graphs(n) {
            let z = min_zero_forcing(&g, &budget).unwrap().number;
            let gadget = zf_to_cpd_gadget(&g, z);
            let c = min_cpds(&gadget.graph, &o).unwrap().optimum;
            // a zero forcing instance has 1 <= k <= n
            for k in 1..=n {
                assert_eq!(z <= k, c <= k + 1, "n={n} k={k} z={z} c={c}");
            }
        }
    }
}

#[test]
fn named_values() {
    let o = opts();
    assert_eq!(min_pds(&Graph::complete_bipartite(3, 3), &o).unwrap().optimum, 2);
    assert_eq!(min_cpds(&Graph::cycle(7), &o).unwrap().optimum, 1);
    assert_eq!(min_zero_forcing(&Graph::complete(5), &Budget::default()).unwrap().number, 4);
    assert_eq!(min_zero_forcing(&Graph::path(5), &Budget::default()).unwrap().number, 1);
    // P6 from one vertex: N[S] after the first round, one force per side after
    assert_eq!(ppt(&Graph::path(6), &o).unwrap().ppt, 3);
}

#[test]
fn budget_and_precondition_errors() {
    let small = ExactOptions::with_budget(Budget::with_max_vertices(4));
    assert!(matches!(min_pds(&Graph::path(6), &small), Err(Error::BudgetExceeded(_))));
    let two = Graph::from_edges(4, &[(0, 1), (2, 3)]);
    assert_eq!(min_cpds(&two, &opts()).unwrap_err(), Error::Disconnected);
}
