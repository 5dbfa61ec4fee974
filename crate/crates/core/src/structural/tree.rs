use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::result::{Method, SolveResult};
use crate::taxonomy::{classify_cut_vertices, is_path_graph, pendant_paths};

fn require_tree(g: &Graph) -> Result<()> {
    g.require_connected()?;
    if g.m() + 1 != g.n() {
        return Err(Error::WrongClass("tree"));
    }
    Ok(())
}

/// `γ_{P,c}(T) = max{1, |𝓜(T)|}`; for a non-path tree `𝓜(T)` is the unique
/// minimum connected power dominating set.
pub fn tree_cpds(g: &Graph) -> Result<SolveResult> {
    require_tree(g)?;
    let t = classify_cut_vertices(g)?;
    let witness = if t.m.is_empty() { vec![0] } else { t.m };
    SolveResult::certified(g, witness, Method::Tree, true)
}

/// Whether `γ_P(T) = γ_{P,c}(T)`: `T` is a path, or every degree-2 vertex
/// lies on a pendant path and every vertex of degree at least 3 has at least
/// two pendant paths attached to it.
pub fn tree_pd_equals_cpd(g: &Graph) -> Result<bool> {
    require_tree(g)?;
    if is_path_graph(g) {
        return Ok(true);
    }
    let paths = pendant_paths(g);
    let mut on_path = vec![false; g.n()];
    let mut attached = vec![0usize; g.n()];
    for p in &paths {
        attached[p.attachment] += 1;
        for &v in &p.vertices {
            on_path[v] = true;
        }
    }
    Ok((0..g.n()).all(|v| match g.degree(v) {
        2 => on_path[v],
        d if d >= 3 => attached[v] >= 2,
        _ => true,
    }))
}
