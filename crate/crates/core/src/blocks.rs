//! Biconnected components (blocks) and cut vertices, Hopcroft–Tarjan style
//! with an explicit stack so deep graphs do not overflow.

use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::taxonomy::pendant_paths;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex set of every block, sorted; blocks ordered lexicographically.
    pub blocks: Vec<Vec<Vertex>>,
    /// Edges `(u, v)`, `u < v`, of every block.
    pub block_edges: Vec<Vec<(Vertex, Vertex)>>,
    pub cut_vertices: Vec<Vertex>,
    /// Block-tree incidence: the blocks containing each vertex.
    pub vertex_blocks: Vec<Vec<usize>>,
    /// A bridge block is trivial when it lies on a pendant path, i.e. at least
    /// one endpoint belongs to the path (the other may be its attachment).
    pub trivial: Vec<bool>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.vertex_blocks[v].len() >= 2
    }

    /// `c(G - v)` for a connected graph.
    pub fn components_without(&self, v: Vertex) -> usize {
        if self.blocks.len() == 1 && self.blocks[0].len() == 1 {
            0
        } else {
            self.vertex_blocks[v].len()
        }
    }

    pub fn is_clique(&self, b: usize) -> bool {
        let k = self.blocks[b].len();
        self.block_edges[b].len() == k * (k - 1) / 2
    }

    pub fn is_cycle(&self, b: usize) -> bool {
        let k = self.blocks[b].len();
        k >= 3 && self.block_edges[b].len() == k
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.blocks.len()).filter(|&b| !self.trivial[b])
    }
}

pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let n = g.n();
    let mut raw_blocks: Vec<Vec<(Vertex, Vertex)>> = Vec::new();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    // (vertex, parent, next neighbor position)
    let mut stack: Vec<(Vertex, Vertex, usize)> = Vec::new();

    disc[0] = time;
    low[0] = time;
    time += 1;
    stack.push((0, usize::MAX, 0));
    while let Some(top) = stack.last_mut() {
        let (v, parent) = (top.0, top.1);
        let next = g.neighbors(v).get(top.2).copied();
        if let Some(w) = next {
            top.2 += 1;
            if disc[w] == usize::MAX {
                edge_stack.push((v, w));
                disc[w] = time;
                low[w] = time;
                time += 1;
                stack.push((w, v, 0));
            } else if w != parent && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (parent, v) {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                }
            }
        }
    }

    let mut pairs: Vec<(Vec<Vertex>, Vec<(Vertex, Vertex)>)> = raw_blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut verts: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            verts.sort_unstable();
            verts.dedup();
            (verts, edges)
        })
        .collect();
    if pairs.is_empty() {
        pairs.push((vec![0], Vec::new()));
    }
    pairs.sort();

    let mut vertex_blocks = vec![Vec::new(); n];
    for (i, (verts, _)) in pairs.iter().enumerate() {
        for &v in verts {
            vertex_blocks[v].push(i);
        }
    }
    let cut_vertices = (0..n).filter(|&v| vertex_blocks[v].len() >= 2).collect();

    let mut on_pendant = vec![false; n];
    for p in pendant_paths(g) {
        for v in p.vertices {
            on_pendant[v] = true;
        }
    }
    let trivial = pairs
        .iter()
        .map(|(verts, _)| verts.len() == 2 && (on_pendant[verts[0]] || on_pendant[verts[1]]))
        .collect();

    let (blocks, block_edges) = pairs.into_iter().unzip();
    Ok(BlockDecomposition { blocks, block_edges, cut_vertices, vertex_blocks, trivial })
}
