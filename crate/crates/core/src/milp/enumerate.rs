//! Model-agnostic exact solver for tiny models: depth-first enumeration of
//! all binary variables, with the integer variables settled by shortest
//! paths. It needs no graph layout, so it also solves parsed files, and it
//! shares no code with the propagation engine, which makes it an independent
//! check of the graph models.
//!
//! Once the binaries are fixed every row must reduce to a difference
//! constraint `x_a − x_b <= c`, a bound on one integer variable, or a
//! constant check. Anything else is rejected.

use crate::error::{Error, Result};
use crate::milp::model::{MilpModel, Relation, VarKind};
use crate::milp::solve::{ModelSolution, SolveStatus};

pub const DEFAULT_MAX_BINARIES: usize = 24;

struct Plan {
    binaries: Vec<usize>,
    integers: Vec<usize>,
    /// Rows that only touch binaries, keyed by the depth of their last one.
    pure_at: Vec<Vec<usize>>,
    mixed: Vec<usize>,
}

fn plan(model: &MilpModel) -> Result<Plan> {
    let binaries: Vec<usize> = (0..model.variables.len()).filter(|&v| model.variables[v].kind == VarKind::Binary).collect();
    let integers: Vec<usize> = (0..model.variables.len()).filter(|&v| model.variables[v].kind == VarKind::Integer).collect();
    let mut depth = vec![usize::MAX; model.variables.len()];
    for (d, &v) in binaries.iter().enumerate() {
        depth[v] = d;
    }
    let mut pure_at = vec![Vec::new(); binaries.len() + 1];
    let mut mixed = Vec::new();
    for (r, c) in model.constraints.iter().enumerate() {
        let ints: Vec<(usize, i64)> = c.expr.terms().iter().copied().filter(|&(v, _)| depth[v] == usize::MAX).collect();
        match ints[..] {
            [] => {
                let last = c.expr.terms().iter().map(|&(v, _)| depth[v] + 1).max().unwrap_or(0);
                pure_at[last].push(r);
            }
            [(_, a)] if a.abs() == 1 => mixed.push(r),
            [(_, a), (_, b)] if a.abs() == 1 && a == -b => mixed.push(r),
            _ => return Err(Error::InvalidArgument(format!("row {} is not a difference constraint", c.name))),
        }
    }
    Ok(Plan { binaries, integers, pure_at, mixed })
}

/// Integer values satisfying the mixed rows for the current binaries, or
/// `None` when the difference system has a negative cycle.
fn settle(model: &MilpModel, plan: &Plan, values: &[i64]) -> Option<Vec<(usize, i64)>> {
    let k = plan.integers.len();
    let mut node = vec![usize::MAX; model.variables.len()];
    for (i, &v) in plan.integers.iter().enumerate() {
        node[v] = i;
    }
    let src = k;
    // edge (from, to, w) encodes x_to − x_from <= w
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    for (i, &v) in plan.integers.iter().enumerate() {
        let var = &model.variables[v];
        edges.push((src, i, var.upper));
        edges.push((i, src, -var.lower));
    }
    for &r in &plan.mixed {
        let c = &model.constraints[r];
        let mut constant = 0;
        let mut ints = Vec::new();
        for &(v, a) in c.expr.terms() {
            if node[v] == usize::MAX {
                constant += a * values[v];
            } else {
                ints.push((node[v], a));
            }
        }
        let rhs = c.rhs - constant;
        // a·x ≤ rhs and/or a·x ≥ rhs, with a·x ∈ {±x_i, x_i − x_j}
        let mut add_le = |ints: &[(usize, i64)], rhs: i64| match ints {
            [(i, 1)] => edges.push((src, *i, rhs)),
            [(i, -1)] => edges.push((*i, src, rhs)),
            [(i, 1), (j, -1)] | [(j, -1), (i, 1)] => edges.push((*j, *i, rhs)),
            _ => unreachable!("checked when planning"),
        };
        let neg: Vec<(usize, i64)> = ints.iter().map(|&(i, a)| (i, -a)).collect();
        match c.relation {
            Relation::Le => add_le(&ints, rhs),
            Relation::Ge => add_le(&neg, -rhs),
            Relation::Eq => {
                add_le(&ints, rhs);
                add_le(&neg, -rhs);
            }
        }
    }
    let mut dist = vec![i64::MAX; k + 1];
    dist[src] = 0;
    for round in 0..=k + 1 {
        let mut changed = false;
        for &(a, b, w) in &edges {
            if dist[a] != i64::MAX && dist[a] + w < dist[b] {
                dist[b] = dist[a] + w;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        if round == k + 1 {
            return None;
        }
    }
    Some(plan.integers.iter().enumerate().map(|(i, &v)| (v, dist[i] - dist[src])).collect())
}

/// Optimal point of `model` by exhaustive search over its binaries. Among
/// optimal points the first in binary enumeration order (0 before 1, in
/// declaration order) is returned.
pub fn solve_by_enumeration(model: &MilpModel, max_binaries: usize) -> Result<ModelSolution> {
    model.validate()?;
    let plan = plan(model)?;
    if plan.binaries.len() > max_binaries {
        return Ok(ModelSolution { status: SolveStatus::BudgetExceeded, values: Vec::new(), objective_value: None });
    }
    let mut values = vec![0i64; model.variables.len()];
    let mut best: Option<(i64, Vec<i64>)> = None;

    fn dfs(model: &MilpModel, plan: &Plan, depth: usize, values: &mut Vec<i64>, best: &mut Option<(i64, Vec<i64>)>) {
        if !plan.pure_at[depth].iter().all(|&r| model.constraints[r].satisfied(values)) {
            return;
        }
        if depth == plan.binaries.len() {
            if let Some(ints) = settle(model, plan, values) {
                let mut point = values.clone();
                for (v, x) in ints {
                    point[v] = x;
                }
                debug_assert!(model.is_feasible(&point));
                let obj = model.objective.eval(&point);
                if best.as_ref().is_none_or(|(b, _)| obj < *b) {
                    *best = Some((obj, point));
                }
            }
            return;
        }
        for bit in [0, 1] {
            values[plan.binaries[depth]] = bit;
            dfs(model, plan, depth + 1, values, best);
        }
        values[plan.binaries[depth]] = 0;
    }

    dfs(model, &plan, 0, &mut values, &mut best);
    Ok(match best {
        Some((obj, point)) => ModelSolution { status: SolveStatus::Optimal, values: point, objective_value: Some(obj) },
        None => ModelSolution { status: SolveStatus::Infeasible, values: Vec::new(), objective_value: None },
    })
}

/// Every feasible point's binary part together with one integer completion.
/// Meant for exhaustive checks on tiny models.
pub fn feasible_points(model: &MilpModel, max_binaries: usize) -> Result<Vec<Vec<i64>>> {
    let plan = plan(model)?;
    if plan.binaries.len() > max_binaries {
        return Err(Error::BudgetExceeded(format!("{} binaries exceeds {max_binaries}", plan.binaries.len())));
    }
    let mut out = Vec::new();
    let mut values = vec![0i64; model.variables.len()];

    fn walk(model: &MilpModel, plan: &Plan, depth: usize, values: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if !plan.pure_at[depth].iter().all(|&r| model.constraints[r].satisfied(values)) {
            return;
        }
        if depth == plan.binaries.len() {
            if let Some(ints) = settle(model, plan, values) {
                let mut point = values.clone();
                for (v, x) in ints {
                    point[v] = x;
                }
                out.push(point);
            }
            return;
        }
        for bit in [0, 1] {
            values[plan.binaries[depth]] = bit;
            walk(model, plan, depth + 1, values, out);
        }
        values[plan.binaries[depth]] = 0;
    }

    walk(model, &plan, 0, &mut values, &mut out);
    Ok(out)
}
