use crate::blocks::blocks;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognize::recognize_with_blocks;
use crate::result::{Method, SolveResult};
use crate::taxonomy::classify_with_blocks;

/// `γ_{P,c}(G) = max{1, |𝓜(G)|}` for block graphs. When `𝓜` is empty the
/// graph is a path or a single clique of size at least 3 with pendant paths,
/// and the smallest vertex of that clique is returned.
pub fn block_graph_cpds(g: &Graph) -> Result<SolveResult> {
    g.require_connected()?;
    let d = blocks(g)?;
    if !recognize_with_blocks(g, &d).block_graph {
        return Err(Error::WrongClass("block graph"));
    }
    let t = classify_with_blocks(g, &d);
    let witness = if !t.m.is_empty() {
        t.m
    } else {
        let big = d.blocks.iter().filter(|b| b.len() >= 3).max_by_key(|b| (b.len(), std::cmp::Reverse(b[0])));
        vec![big.map_or(0, |b| b[0])]
    };
    SolveResult::certified(g, witness, Method::Block, true)
}
