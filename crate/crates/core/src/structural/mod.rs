//! Structural solvers for connected power domination and the dispatcher that
//! picks one.

mod block_graph;
mod cactus;
mod decompose;
pub mod segments;
mod tree;

pub use block_graph::block_graph_cpds;
pub use cactus::{cactus_cpds, cactus_cpds_detailed, CactusSolution};
pub use decompose::{decompose_cpds, decompose_cpds_with, default_block_solver, BlockInstance, Decomposition};
pub use segments::{cycle_order, feasible_segments, segment, FeasibleSegmentFamily, Segment};
pub use tree::{tree_cpds, tree_pd_equals_cpd};

use crate::blocks::blocks;
use crate::error::{Error, Result};
use crate::exact::{min_cpds, min_pds, ExactOptions};
use crate::graph::Graph;
use crate::milp;
use crate::recognize::recognize_with_blocks;
use crate::result::{Method, SolveResult};

/// Strongest solver applicable to `g` for connected power domination: tree,
/// block graph, cactus, decomposition when there is a cut vertex, else brute
/// force.
pub fn auto_method(g: &Graph) -> Result<Method> {
    g.require_connected()?;
    let d = blocks(g)?;
    let c = recognize_with_blocks(g, &d);
    Ok(if c.tree {
        Method::Tree
    } else if c.block_graph {
        Method::Block
    } else if c.cactus {
        Method::Cactus
    } else if !d.cut_vertices.is_empty() {
        Method::Decomposition
    } else {
        Method::Brute
    })
}

/// `γ_{P,c}(G)` with the given method, or [`auto_method`] when `None`.
pub fn solve_cpds(g: &Graph, method: Option<Method>, opts: &ExactOptions) -> Result<SolveResult> {
    let method = match method {
        Some(m) => m,
        None => auto_method(g)?,
    };
    match method {
        Method::Tree => tree_cpds(g),
        Method::Block => block_graph_cpds(g),
        Method::Cactus => cactus_cpds(g),
        Method::Decomposition => decompose_cpds(g, opts).map(|d| d.result),
        Method::Brute => min_cpds(g, opts),
        Method::Milp => milp::solve_graph(g, true, None, &milp::SolveBudget::from_exact(&opts.budget)),
    }
}

/// `γ_P(G)`; only the oracle and the model evaluator compute it.
pub fn solve_pds(g: &Graph, method: Option<Method>, opts: &ExactOptions) -> Result<SolveResult> {
    match method.unwrap_or(Method::Brute) {
        Method::Brute => min_pds(g, opts),
        Method::Milp => milp::solve_graph(g, false, None, &milp::SolveBudget::from_exact(&opts.budget)),
        other => Err(Error::InvalidArgument(format!("method `{other}` solves connected power domination only"))),
    }
}
