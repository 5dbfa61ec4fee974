//! Exact evaluation of the graph models on small instances.
//!
//! Only the `s` variables are enumerated, by cardinality and then
//! lexicographically. A choice of `s` extends to a feasible point exactly
//! when the chosen set power dominates within the horizon (and, with the
//! connectivity rows, induces a connected subgraph). The extension is built
//! explicitly from the synchronous propagation schedule and every row of the
//! model is checked against it, so a bad encoding cannot go unnoticed.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, vec_to_mask, MaskGraph};
use crate::graph::{Graph, Vertex};
use crate::milp::build::build_model;
use crate::milp::model::{GraphLayout, MilpModel};
use crate::propagation::{is_power_dominating, Force, ForceKind, PropagationTrace};
use crate::result::{Method, SolveResult};
use crate::vset::VertexSet;

pub const DEFAULT_MAX_ENUMERATED: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveBudget {
    /// Ceiling on the number of enumerated binaries (the `s` variables).
    pub max_enumerated: usize,
    pub time_limit: Option<Duration>,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget { max_enumerated: DEFAULT_MAX_ENUMERATED, time_limit: None }
    }
}

impl SolveBudget {
    /// Carries the oracle's vertex ceiling and time limit over.
    pub fn from_exact(b: &exact::Budget) -> Self {
        SolveBudget { max_enumerated: b.max_vertices, time_limit: b.time_limit }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelSolution {
    pub status: SolveStatus,
    /// One value per model variable, in declaration order; empty unless
    /// optimal.
    pub values: Vec<i64>,
    pub objective_value: Option<i64>,
}

impl ModelSolution {
    pub fn assignment<'a>(&'a self, model: &'a MilpModel) -> impl Iterator<Item = (&'a str, i64)> + 'a {
        model.variables.iter().zip(&self.values).map(|(v, &x)| (v.name.as_str(), x))
    }
}

fn layout(model: &MilpModel) -> Result<&GraphLayout> {
    model.layout.as_ref().ok_or(Error::NoGraphLayout)
}

/// Value vector for the chosen set `s`, derived from its propagation trace.
/// Fails when `s` does not power dominate within the horizon or, for
/// connected models, is not connected.
pub fn encode_trace(model: &MilpModel, trace: &PropagationTrace) -> Result<Vec<i64>> {
    let lay = layout(model)?;
    let g = &lay.graph;
    let n = g.n();
    if !trace.final_colored.is_full() {
        return Err(Error::NotPowerDominating);
    }
    if trace.last_timestep() > lay.horizon {
        return Err(Error::InvalidTrace(format!("trace needs {} rounds, horizon is {}", trace.last_timestep(), lay.horizon)));
    }
    let mut values = vec![0i64; model.variables.len()];
    for &v in &trace.initial {
        values[lay.s[v]] = 1;
    }
    let arc = |u: Vertex, v: Vertex| lay.arcs.binary_search(&(u, v)).expect("arc of the graph");
    for f in &trace.forces {
        values[lay.y[arc(f.source, f.target)]] = 1;
        values[lay.x[f.target]] = f.timestep as i64;
    }
    if let Some(mtz) = &lay.mtz {
        let s: Vec<Vertex> = trace.initial.clone();
        let chosen = VertexSet::from_vertices(n, s.iter().copied());
        let root = *s.first().ok_or(Error::NotPowerDominating)?;
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        values[mtz.root[root]] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if chosen.contains(w) && depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    values[mtz.z[arc(u, w)]] = 1;
                    queue.push_back(w);
                }
            }
        }
        for &v in &s {
            if depth[v] == usize::MAX {
                return Err(Error::InvalidTrace("chosen set is not connected".into()));
            }
        }
        for v in 0..n {
            values[mtz.order[v]] = if depth[v] == usize::MAX { 1 } else { depth[v] as i64 + 1 };
        }
    }
    let bad = model.violations(&values);
    if let Some(first) = bad.first() {
        return Err(Error::Internal(format!("encoded schedule violates the model: {first}")));
    }
    Ok(values)
}

/// Reads a feasible point back as a propagation trace: `y_uv = 1` with `u`
/// chosen is a domination at time 1, otherwise a force at time `x_v`. The
/// trace is replayed before it is returned.
pub fn decode_assignment(model: &MilpModel, values: &[i64]) -> Result<PropagationTrace> {
    let lay = layout(model)?;
    let g = &lay.graph;
    if let Some(first) = model.violations(values).first() {
        return Err(Error::InvalidTrace(format!("assignment is infeasible: {first}")));
    }
    let chosen: Vec<Vertex> = (0..g.n()).filter(|&v| values[lay.s[v]] == 1).collect();
    let mut forces = Vec::new();
    for (a, &(u, v)) in lay.arcs.iter().enumerate() {
        if values[lay.y[a]] == 1 {
            let (timestep, kind) = if values[lay.s[u]] == 1 {
                (1, ForceKind::Dominate)
            } else {
                (values[lay.x[v]] as usize, ForceKind::Force)
            };
            forces.push(Force { timestep, source: u, target: v, kind });
        }
    }
    forces.sort_by_key(|f| (f.timestep, f.target));
    let trace = PropagationTrace {
        initial: chosen,
        forces,
        final_colored: VertexSet::full(g.n()),
    };
    trace.replay(g)?;
    Ok(trace)
}

/// Minimises the objective of a graph model by enumerating the `s` variables.
pub fn solve_small(model: &MilpModel, budget: &SolveBudget) -> Result<ModelSolution> {
    let lay = layout(model)?;
    let g = &lay.graph;
    let n = g.n();
    if n > budget.max_enumerated || n > exact::MAX_ORACLE_VERTICES {
        return Ok(ModelSolution { status: SolveStatus::BudgetExceeded, values: Vec::new(), objective_value: None });
    }
    let mg = MaskGraph::new(g)?;
    let connected = lay.mtz.is_some();
    let start = Instant::now();
    let mut checked = 0u64;
    for k in 1..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            checked += 1;
            if checked % 4096 == 0 {
                if let Some(limit) = budget.time_limit {
                    if start.elapsed() > limit {
                        return Ok(ModelSolution { status: SolveStatus::BudgetExceeded, values: Vec::new(), objective_value: None });
                    }
                }
            }
            let mask = vec_to_mask(&idx);
            let fits = mg.ppt(mask).is_some_and(|t| t <= lay.horizon);
            if fits && (!connected || mg.is_connected(mask)) {
                let set = VertexSet::from_vertices(n, idx.iter().copied());
                let (_, trace) = is_power_dominating(g, &set);
                let values = encode_trace(model, &trace)?;
                let objective_value = model.objective.eval(&values);
                return Ok(ModelSolution { status: SolveStatus::Optimal, values, objective_value: Some(objective_value) });
            }
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(ModelSolution { status: SolveStatus::Infeasible, values: Vec::new(), objective_value: None })
}

fn optimum(g: &Graph, t: usize, connected: bool, budget: &SolveBudget) -> Result<(MilpModel, ModelSolution)> {
    let model = build_model(g, t, connected)?;
    let sol = solve_small(&model, budget)?;
    match sol.status {
        SolveStatus::Optimal => Ok((model, sol)),
        SolveStatus::BudgetExceeded => Err(Error::BudgetExceeded(format!("{} vertices exceeds the model budget of {}", g.n(), budget.max_enumerated))),
        SolveStatus::Infeasible => Err(Error::Internal("graph model reported infeasible".into())),
    }
}

/// Solves `g` through its model with horizon `t` (default `n`) and returns a
/// certified result.
pub fn solve_graph(g: &Graph, connected: bool, t: Option<usize>, budget: &SolveBudget) -> Result<SolveResult> {
    let (model, sol) = optimum(g, t.unwrap_or(g.n()), connected, budget)?;
    let trace = decode_assignment(&model, &sol.values)?;
    let mut res = SolveResult::certified(g, trace.initial.clone(), Method::Milp, connected)?;
    res.trace = trace;
    Ok(res)
}

/// Optimal value of the model with horizon `l`: the `l`-round (connected)
/// power domination number.
pub fn round_number(g: &Graph, l: usize, connected: bool, budget: &SolveBudget) -> Result<usize> {
    let (_, sol) = optimum(g, l, connected, budget)?;
    Ok(sol.objective_value.expect("optimal") as usize)
}

/// Smallest horizon whose optimum matches the optimum at horizon `n`, found
/// by binary search.
pub fn ppt_by_search(g: &Graph, connected: bool, budget: &SolveBudget) -> Result<usize> {
    let n = g.n();
    let target = round_number(g, n, connected, budget)?;
    let (mut lo, mut hi) = (1, n);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if round_number(g, mid, connected, budget)? == target {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milp::build::build_model1;

    fn b() -> SolveBudget {
        SolveBudget::default()
    }

    #[test]
    fn model_optima() {
        let m = build_model1(&Graph::path(5), 5).unwrap();
        assert_eq!(solve_small(&m, &b()).unwrap().objective_value, Some(1));
        let m = build_model1(&Graph::complete_bipartite(3, 3), 6).unwrap();
        assert_eq!(solve_small(&m, &b()).unwrap().objective_value, Some(2));
        let bridged = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]);
        let m = build_model(&bridged, 6, true).unwrap();
        assert_eq!(solve_small(&m, &b()).unwrap().objective_value, Some(2));
        let m = build_model(&bridged, 6, false).unwrap();
        assert_eq!(solve_small(&m, &b()).unwrap().objective_value, Some(2));
        let m = build_model(&Graph::path(3), 3, true).unwrap();
        assert_eq!(solve_small(&m, &b()).unwrap().objective_value, Some(1));
    }

    #[test]
    fn rounds_and_ppt() {
        let p5 = Graph::path(5);
        assert_eq!(round_number(&p5, 1, false, &b()).unwrap(), 2);
        assert_eq!(round_number(&p5, 4, false, &b()).unwrap(), 1);
        assert_eq!(round_number(&Graph::complete(5), 1, false, &b()).unwrap(), 1);
        assert_eq!(ppt_by_search(&p5, false, &b()).unwrap(), 2);
        assert_eq!(ppt_by_search(&Graph::complete(4), false, &b()).unwrap(), 1);
        assert_eq!(ppt_by_search(&Graph::cycle(6), false, &b()).unwrap(), 3);
    }

    #[test]
    fn budget_status() {
        let m = build_model1(&Graph::path(12), 12).unwrap();
        let sol = solve_small(&m, &SolveBudget { max_enumerated: 10, time_limit: None }).unwrap();
        assert_eq!(sol.status, SolveStatus::BudgetExceeded);
        assert!(matches!(
            round_number(&Graph::path(12), 3, false, &SolveBudget { max_enumerated: 10, time_limit: None }),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn decode_inverts_encode() {
        let g = Graph::complete_bipartite(2, 3);
        let m = build_model1(&g, 5).unwrap();
        let sol = solve_small(&m, &b()).unwrap();
        let trace = decode_assignment(&m, &sol.values).unwrap();
        assert_eq!(encode_trace(&m, &trace).unwrap(), sol.values);
    }
}
