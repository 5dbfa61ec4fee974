use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::milp::model::{sanitize, GraphLayout, LinExpr, MilpModel, MtzLayout, Relation};

/// Propagation model with horizon `t`: `s_v` marks the chosen set, `y_uv` says `u`
/// colours `v`, and `x_v ∈ [0, t]` is the time `v` is coloured.
///
/// Rows, per vertex `v`, per arc `(u, v)` and per `w ∈ N(u) \ {v}`:
///
/// ```text
/// c3_v:        s_v + Σ_{(u,v)} y_uv             = 1
/// c4_u__v:     x_u − x_v + (t+1) y_uv           <= t
/// c5_u__v__w:  x_w − x_v + (t+1) y_uv − (t+1) s_u <= t
/// ```
pub fn build_model1(g: &Graph, t: usize) -> Result<MilpModel> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if t == 0 {
        return Err(Error::InvalidArgument("horizon must be at least 1".into()));
    }
    let n = g.n();
    let t = t as i64;
    let name = |v: usize| sanitize(g.label(v));
    let mut model = MilpModel::new("powerdom");

    let s: Vec<usize> = (0..n).map(|v| model.binary(format!("s_{}", name(v)))).collect();
    let x: Vec<usize> = (0..n).map(|v| model.integer(format!("x_{}", name(v)), 0, t)).collect();
    let arcs: Vec<(usize, usize)> = (0..n).flat_map(|u| g.neighbors(u).iter().map(move |&v| (u, v))).collect();
    let y: Vec<usize> = arcs.iter().map(|&(u, v)| model.binary(format!("y_{}__{}", name(u), name(v)))).collect();

    model.objective = LinExpr::from_terms(s.iter().map(|&sv| (sv, 1)));

    let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, &(_, v)) in arcs.iter().enumerate() {
        incoming[v].push(a);
    }
    for v in 0..n {
        let expr = LinExpr::from_terms(std::iter::once((s[v], 1)).chain(incoming[v].iter().map(|&a| (y[a], 1))));
        model.add_constraint(format!("c3_{}", name(v)), expr, Relation::Eq, 1);
    }
    for (a, &(u, v)) in arcs.iter().enumerate() {
        let expr = LinExpr::from_terms([(x[u], 1), (x[v], -1), (y[a], t + 1)]);
        model.add_constraint(format!("c4_{}__{}", name(u), name(v)), expr, Relation::Le, t);
    }
    for (a, &(u, v)) in arcs.iter().enumerate() {
        for &w in g.neighbors(u).iter().filter(|&&w| w != v) {
            let expr = LinExpr::from_terms([(x[w], 1), (x[v], -1), (y[a], t + 1), (s[u], -(t + 1))]);
            model.add_constraint(format!("c5_{}__{}__{}", name(u), name(v), name(w)), expr, Relation::Le, t);
        }
    }
    model.layout = Some(GraphLayout { graph: g.clone(), horizon: t as usize, arcs, s, x, y, mtz: None });
    Ok(model)
}

/// Adds connectivity of the chosen set as an arborescence hanging off an
/// artificial root: one root arc `zr_v` enters the set, every chosen vertex
/// has exactly one parent, arcs leave chosen vertices only, and order
/// variables `o_v ∈ [1, n]` rule out cycles.
///
/// ```text
/// mtz_root:       Σ_v zr_v                      = 1
/// mtz_in_v:       zr_v + Σ_{(u,v)} z_uv − s_v    = 0
/// mtz_out_u__v:   z_uv − s_u                    <= 0
/// mtz_ord_u__v:   o_u − o_v + n z_uv            <= n − 1
/// ```
pub fn add_mtz_connectivity(model: &mut MilpModel) -> Result<()> {
    let layout = model.layout.as_ref().ok_or(Error::NoGraphLayout)?;
    if layout.mtz.is_some() {
        return Err(Error::ConnectivityAlreadyApplied);
    }
    layout.graph.require_connected()?;
    let g = layout.graph.clone();
    let (arcs, s) = (layout.arcs.clone(), layout.s.clone());
    let n = g.n();
    let name = |v: usize| sanitize(g.label(v));

    let root: Vec<usize> = (0..n).map(|v| model.binary(format!("zr_{}", name(v)))).collect();
    let z: Vec<usize> = arcs.iter().map(|&(u, v)| model.binary(format!("z_{}__{}", name(u), name(v)))).collect();
    let order: Vec<usize> = (0..n).map(|v| model.integer(format!("o_{}", name(v)), 1, n as i64)).collect();

    model.add_constraint("mtz_root".into(), LinExpr::from_terms(root.iter().map(|&r| (r, 1))), Relation::Eq, 1);
    let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, &(_, v)) in arcs.iter().enumerate() {
        incoming[v].push(a);
    }
    for v in 0..n {
        let expr = LinExpr::from_terms(
            [(root[v], 1), (s[v], -1)].into_iter().chain(incoming[v].iter().map(|&a| (z[a], 1))),
        );
        model.add_constraint(format!("mtz_in_{}", name(v)), expr, Relation::Eq, 0);
    }
    for (a, &(u, v)) in arcs.iter().enumerate() {
        let expr = LinExpr::from_terms([(z[a], 1), (s[u], -1)]);
        model.add_constraint(format!("mtz_out_{}__{}", name(u), name(v)), expr, Relation::Le, 0);
    }
    for (a, &(u, v)) in arcs.iter().enumerate() {
        let expr = LinExpr::from_terms([(order[u], 1), (order[v], -1), (z[a], n as i64)]);
        model.add_constraint(format!("mtz_ord_{}__{}", name(u), name(v)), expr, Relation::Le, n as i64 - 1);
    }
    model.layout.as_mut().expect("checked above").mtz = Some(MtzLayout { root, z, order });
    Ok(())
}

/// Propagation model with horizon `t`, plus connectivity rows when `connected`.
pub fn build_model(g: &Graph, t: usize, connected: bool) -> Result<MilpModel> {
    let mut m = build_model1(g, t)?;
    if connected {
        add_mtz_connectivity(&mut m)?;
    }
    Ok(m)
}
