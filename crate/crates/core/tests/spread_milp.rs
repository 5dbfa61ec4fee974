mod common;

use common::*;
use powerdom::exact::{l_round_pd, min_cpds, min_pds, ppt};
use powerdom::milp::{
    build_model, build_model1, decode_assignment, encode_trace, export, feasible_points, parse_model, ppt_by_search,
    round_number, solve_by_enumeration, solve_small, ModelFormat, SolveBudget, SolveStatus,
};
use powerdom::propagation::is_power_dominating;
use powerdom::spread::{make_cycle_gadget, make_path_gadget, spread, subdivide_edge_delta, SpreadOp};
use powerdom::{Graph, Result, SolveResult, VertexSet};
use proptest::prelude::*;

fn brute(g: &Graph) -> Result<SolveResult> {
    min_cpds(g, &opts())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn subdivision_never_lowers_the_number(g in connected(10), pick in any::<prop::sample::Index>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let r = subdivide_edge_delta(&g, u, v, &brute).unwrap();
        prop_assert!(r.spread >= 0);
    }

    #[test]
    fn model_optimum_is_the_domination_number(g in connected(7)) {
        let b = SolveBudget::default();
        let n = g.n();
        let pd = solve_small(&build_model(&g, n, false).unwrap(), &b).unwrap();
        prop_assert_eq!(pd.objective_value, Some(min_pds(&g, &opts()).unwrap().optimum as i64));
        let cpd = solve_small(&build_model(&g, n, true).unwrap(), &b).unwrap();
        prop_assert_eq!(cpd.objective_value, Some(min_cpds(&g, &opts()).unwrap().optimum as i64));
    }

    #[test]
    fn round_numbers_and_ppt_from_the_model(g in connected(6)) {
        let b = SolveBudget::default();
        for l in 1..=g.n() {
            prop_assert_eq!(round_number(&g, l, false, &b).unwrap(), l_round_pd(&g, l, &opts()).unwrap().optimum);
        }
        prop_assert_eq!(ppt_by_search(&g, false, &b).unwrap(), ppt(&g, &opts()).unwrap().ppt);
    }

    #[test]
    fn model_optimum_is_monotone_in_the_horizon(g in connected(7)) {
        let b = SolveBudget::default();
        let mut last = i64::MAX;
        for t in 1..=g.n() {
            let v = solve_small(&build_model1(&g, t).unwrap(), &b).unwrap().objective_value.unwrap();
            prop_assert!(v <= last);
            last = v;
        }
    }

    #[test]
    fn traces_encode_and_decode(g in connected(8), mask in any::<u64>()) {
        let s = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| mask >> v & 1 == 1));
        let (ok, trace) = is_power_dominating(&g, &s);
        prop_assume!(ok);
        let model = build_model1(&g, g.n()).unwrap();
        let values = encode_trace(&model, &trace).unwrap();
        prop_assert!(model.is_feasible(&values));
        let back = decode_assignment(&model, &values).unwrap();
        prop_assert_eq!(&back.initial, &trace.initial);
        prop_assert_eq!(back.last_timestep(), trace.last_timestep());
    }

    #[test]
    fn exports_round_trip(g in connected(8), t in 1usize..6, connected_rows in any::<bool>()) {
        let model = build_model(&g, t, connected_rows).unwrap();
        for format in [ModelFormat::Lp, ModelFormat::Mps] {
            let text = export(&model, format).unwrap();
            prop_assert_eq!(&text, &export(&build_model(&g, t, connected_rows).unwrap(), format).unwrap());
            let parsed = parse_model(&text, format).unwrap();
            prop_assert_eq!(&parsed, &model);
        }
    }
}

/// The flat model evaluator knows nothing about propagation; its optimum on
/// tiny graphs must still be the domination number.
#[test]
fn model_semantics_by_full_enumeration() {
    for n in 1..=4 {
        for g in powerdom::generators::all_graphs(n).filter(|g| g.is_connected()) {
            let pd = solve_by_enumeration(&build_model(&g, n, false).unwrap(), 40).unwrap();
            assert_eq!(pd.objective_value, Some(min_pds(&g, &opts()).unwrap().optimum as i64), "{}", g.to_edgelist());
            if n <= 3 {
                let cpd = solve_by_enumeration(&build_model(&g, n, true).unwrap(), 40).unwrap();
                assert_eq!(cpd.objective_value, Some(min_cpds(&g, &opts()).unwrap().optimum as i64));
            }
        }
    }
}

/// Every feasible point decodes to a replayable trace whose chosen set power
/// dominates: the model admits nothing the propagation rules forbid.
#[test]
fn every_feasible_point_is_a_valid_schedule() {
    for g in [Graph::path(3), Graph::cycle(3), Graph::star(3), Graph::path(4)] {
        let model = build_model1(&g, 2).unwrap();
        let points = feasible_points(&model, 40).unwrap();
        assert!(!points.is_empty());
        for p in points {
            let trace = decode_assignment(&model, &p).unwrap();
            assert!(is_pds(&g, &trace.initial));
            assert!(trace.last_timestep() <= 2);
        }
    }
}

#[test]
fn budget_is_reported_not_run() {
    let g = Graph::path(40);
    let m = build_model1(&g, 40).unwrap();
    assert_eq!(solve_small(&m, &SolveBudget::default()).unwrap().status, SolveStatus::BudgetExceeded);
}

#[test]
fn gadget_spreads_for_small_parameters() {
    for c in 1..=3i64 {
        let g = make_path_gadget(c as usize).unwrap();
        let v = |h: &Graph, l: &str| h.vertex(l).unwrap();
        assert_eq!(spread(&g, SpreadOp::DeleteVertex, &[v(&g, "y")], &brute).unwrap().spread, -c);
        let gy = g.remove_vertex(v(&g, "y")).unwrap();
        assert_eq!(spread(&gy, SpreadOp::DeleteVertex, &[v(&gy, "x")], &brute).unwrap().spread, c);
        assert_eq!(spread(&g, SpreadOp::DeleteEdge, &[v(&g, "x"), v(&g, "y")], &brute).unwrap().spread, -c);
        let gxy = g.remove_edge(v(&g, "x"), v(&g, "y")).unwrap();
        assert_eq!(spread(&gxy, SpreadOp::DeleteEdge, &[v(&gxy, "x"), v(&gxy, "v2")], &brute).unwrap().spread, c);

        let h = make_cycle_gadget(c as usize).unwrap();
        let uv = [v(&h, "u"), v(&h, "v")];
        assert_eq!(spread(&h, SpreadOp::ContractEdge, &uv, &brute).unwrap().spread, -c);
        assert_eq!(spread(&h, SpreadOp::SubdivideEdge, &uv, &brute).unwrap().spread, c);
        let (hs, z) = h.subdivide_edge(uv[0], uv[1]).unwrap();
        assert_eq!(spread(&hs, SpreadOp::ContractEdge, &[v(&hs, "u"), z], &brute).unwrap().spread, c);
    }
}
