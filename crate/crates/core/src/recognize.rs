use serde::Serialize;

use crate::blocks::{blocks, BlockDecomposition};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    pub path: bool,
    pub cycle: bool,
    pub tree: bool,
    pub block_graph: bool,
    pub cactus: bool,
}

impl GraphClass {
    pub fn general(&self) -> bool {
        !(self.tree || self.block_graph || self.cactus)
    }

    pub fn names(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (flag, name) in [
            (self.path, "path"),
            (self.cycle, "cycle"),
            (self.tree, "tree"),
            (self.block_graph, "block_graph"),
            (self.cactus, "cactus"),
        ] {
            if flag {
                out.push(name);
            }
        }
        if out.is_empty() {
            out.push("general");
        }
        out
    }
}

pub fn recognize(g: &Graph) -> Result<GraphClass> {
    let d = blocks(g)?;
    Ok(recognize_with_blocks(g, &d))
}

pub fn recognize_with_blocks(g: &Graph, d: &BlockDecomposition) -> GraphClass {
    let n = g.n();
    let tree = g.m() + 1 == n;
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let path = tree && max_deg <= 2;
    let cycle = n >= 3 && g.m() == n && (0..n).all(|v| g.degree(v) == 2);
    let block_graph = (0..d.blocks.len()).all(|b| d.is_clique(b));
    let cactus = (0..d.blocks.len()).all(|b| d.blocks[b].len() <= 2 || d.is_cycle(b));
    GraphClass { path, cycle, tree, block_graph, cactus }
}
