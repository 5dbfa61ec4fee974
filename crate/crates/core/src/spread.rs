//! Spread of `γ_{P,c}` under vertex deletion, edge deletion, edge contraction
//! and edge subdivision, and the gadgets showing those spreads are unbounded.

use std::fmt;

use serde::Serialize;

use crate::blocks::blocks;
use crate::error::{Error, Result};
use crate::exact::ExactOptions;
use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::result::SolveResult;
use crate::structural::solve_cpds;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpreadOp {
    DeleteVertex,
    DeleteEdge,
    ContractEdge,
    SubdivideEdge,
}

impl fmt::Display for SpreadOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpreadOp::DeleteVertex => "delete_vertex",
            SpreadOp::DeleteEdge => "delete_edge",
            SpreadOp::ContractEdge => "contract_edge",
            SpreadOp::SubdivideEdge => "subdivide_edge",
        })
    }
}

impl std::str::FromStr for SpreadOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "delete_vertex" | "vertex" => SpreadOp::DeleteVertex,
            "delete_edge" | "edge" => SpreadOp::DeleteEdge,
            "contract_edge" | "contract" => SpreadOp::ContractEdge,
            "subdivide_edge" | "subdivide" => SpreadOp::SubdivideEdge,
            other => return Err(Error::InvalidArgument(format!("unknown spread operation `{other}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadReport {
    pub operation: SpreadOp,
    /// Labels of the target vertex or edge endpoints.
    pub target: Vec<String>,
    pub before: SolveResult,
    pub after: SolveResult,
    /// `before − after`, except for subdivision where it is `after − before`.
    pub spread: i64,
}

/// Solver used for both sides of a spread.
pub type Solver<'a> = dyn Fn(&Graph) -> Result<SolveResult> + 'a;

/// Automatic dispatch with the given oracle options.
pub fn auto_solver(opts: &ExactOptions) -> impl Fn(&Graph) -> Result<SolveResult> + '_ {
    move |g| solve_cpds(g, None, opts)
}

fn report(op: SpreadOp, target: Vec<String>, before: SolveResult, after: SolveResult) -> SpreadReport {
    let (b, a) = (before.optimum as i64, after.optimum as i64);
    let spread = if op == SpreadOp::SubdivideEdge { a - b } else { b - a };
    SpreadReport { operation: op, target, before, after, spread }
}

/// `γ_{P,c}(G) − γ_{P,c}(G − v)` for a non-cut vertex `v`.
pub fn vertex_spread(g: &Graph, v: Vertex, solver: &Solver) -> Result<SpreadReport> {
    g.require_connected()?;
    g.check_vertex(v)?;
    if blocks(g)?.is_cut_vertex(v) {
        return Err(Error::CutVertex(g.label(v).to_string()));
    }
    let before = solver(g)?;
    let after = solver(&g.remove_vertex(v)?)?;
    Ok(report(SpreadOp::DeleteVertex, vec![g.label(v).to_string()], before, after))
}

fn edge_labels(g: &Graph, u: Vertex, v: Vertex) -> Vec<String> {
    vec![g.label(u).to_string(), g.label(v).to_string()]
}

/// `γ_{P,c}(G) − γ_{P,c}(G − e)` for an edge `e` that is not a bridge.
pub fn edge_spread(g: &Graph, u: Vertex, v: Vertex, solver: &Solver) -> Result<SpreadReport> {
    g.require_connected()?;
    let h = g.remove_edge(u, v)?;
    if !h.is_connected() {
        return Err(Error::CutEdge(g.label(u).to_string(), g.label(v).to_string()));
    }
    let before = solver(g)?;
    let after = solver(&h)?;
    Ok(report(SpreadOp::DeleteEdge, edge_labels(g, u, v), before, after))
}

/// `γ_{P,c}(G) − γ_{P,c}(G / e)`.
pub fn contract_edge_spread(g: &Graph, u: Vertex, v: Vertex, solver: &Solver) -> Result<SpreadReport> {
    g.require_connected()?;
    let h = g.contract_edge(u, v)?;
    let before = solver(g)?;
    let after = solver(&h)?;
    Ok(report(SpreadOp::ContractEdge, edge_labels(g, u, v), before, after))
}

/// `γ_{P,c}(G : e) − γ_{P,c}(G)`, which is never negative; a negative value
/// is reported as an internal error.
pub fn subdivide_edge_delta(g: &Graph, u: Vertex, v: Vertex, solver: &Solver) -> Result<SpreadReport> {
    g.require_connected()?;
    let (h, _) = g.subdivide_edge(u, v)?;
    let before = solver(g)?;
    let after = solver(&h)?;
    if after.optimum < before.optimum {
        return Err(Error::Internal(format!(
            "subdividing {}-{} lowered the connected power domination number from {} to {}",
            g.label(u),
            g.label(v),
            before.optimum,
            after.optimum
        )));
    }
    Ok(report(SpreadOp::SubdivideEdge, edge_labels(g, u, v), before, after))
}

pub fn spread(g: &Graph, op: SpreadOp, target: &[Vertex], solver: &Solver) -> Result<SpreadReport> {
    match (op, target) {
        (SpreadOp::DeleteVertex, &[v]) => vertex_spread(g, v, solver),
        (SpreadOp::DeleteEdge, &[u, v]) => edge_spread(g, u, v, solver),
        (SpreadOp::ContractEdge, &[u, v]) => contract_edge_spread(g, u, v, solver),
        (SpreadOp::SubdivideEdge, &[u, v]) => subdivide_edge_delta(g, u, v, solver),
        (SpreadOp::DeleteVertex, _) => Err(Error::InvalidArgument("vertex deletion takes one vertex".into())),
        _ => Err(Error::InvalidArgument(format!("{op} takes an edge (two vertices)"))),
    }
}

/// Path `v1 … v_{c+3}` plus `x`, `y`, `z` with edges `x v1`, `x v2`, `x y`,
/// `y z` and `z v_{c+2}`. `γ_{P,c}` is 1, and rises to `c + 1` after deleting
/// `y` or the edge `xy`.
pub fn make_path_gadget(c: usize) -> Result<Graph> {
    if c == 0 {
        return Err(Error::InvalidArgument("gadget parameter must be at least 1".into()));
    }
    let len = c + 3;
    let mut b = GraphBuilder::new();
    let v: Vec<Vertex> = (1..=len).map(|i| b.vertex(&format!("v{i}"))).collect();
    for w in v.windows(2) {
        b.edge(w[0], w[1]);
    }
    let x = b.vertex("x");
    let y = b.vertex("y");
    let z = b.vertex("z");
    b.edge(x, v[0]);
    b.edge(x, v[1]);
    b.edge(x, y);
    b.edge(y, z);
    b.edge(z, v[len - 2]);
    Ok(b.build())
}

/// Cycle on `2c + 1` vertices with an edge `uv`, the vertex `x` opposite it,
/// leaves `l1`, `l2` on `x`, `l3` on `u` and `l4` on `v`. `γ_{P,c}` is 1, and
/// `c + 1` after subdividing or contracting `uv`.
pub fn make_cycle_gadget(c: usize) -> Result<Graph> {
    if c == 0 {
        return Err(Error::InvalidArgument("gadget parameter must be at least 1".into()));
    }
    let len = 2 * c + 1;
    let mut b = GraphBuilder::new();
    let ring: Vec<Vertex> = (0..len)
        .map(|i| match i {
            0 => b.vertex("u"),
            1 => b.vertex("v"),
            _ if i == c + 1 => b.vertex("x"),
            _ => b.vertex(&format!("c{}", i + 1)),
        })
        .collect();
    for i in 0..len {
        b.edge(ring[i], ring[(i + 1) % len]);
    }
    for (leaf, at) in [("l1", c + 1), ("l2", c + 1), ("l3", 0), ("l4", 1)] {
        let l = b.vertex(leaf);
        b.edge(ring[at], l);
    }
    Ok(b.build())
}
