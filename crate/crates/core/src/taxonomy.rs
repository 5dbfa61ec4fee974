//! Pendant paths and the `R1 / R2 / R3` partition of cut vertices.
//!
//! A pendant path attached to `v` is a component of `G - v` that is a path
//! joined to `v` by exactly one edge at one of its ends. In a connected graph
//! other than a path these are exactly the maximal chains of degree-<=2
//! vertices hanging off a leaf, and their attachment vertex has degree >= 3.

use serde::Serialize;

use crate::blocks::{blocks, BlockDecomposition};
use crate::error::Result;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PendantPath {
    pub attachment: Vertex,
    /// Ordered from the base (the neighbour of `attachment`) outwards.
    pub vertices: Vec<Vertex>,
}

impl PendantPath {
    pub fn base(&self) -> Vertex {
        self.vertices[0]
    }
}

pub fn is_path_graph(g: &Graph) -> bool {
    g.is_connected() && g.m() + 1 == g.n() && (0..g.n()).all(|v| g.degree(v) <= 2)
}

/// All pendant paths, sorted by `(attachment, base)`. Empty for paths.
pub fn pendant_paths(g: &Graph) -> Vec<PendantPath> {
    if is_path_graph(g) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for leaf in (0..g.n()).filter(|&v| g.degree(v) == 1) {
        let mut chain = vec![leaf];
        let mut prev = leaf;
        let mut cur = g.neighbors(leaf)[0];
        loop {
            match g.degree(cur) {
                2 => {
                    chain.push(cur);
                    let nb = g.neighbors(cur);
                    let next = if nb[0] == prev { nb[1] } else { nb[0] };
                    prev = cur;
                    cur = next;
                }
                1 => break, // path component; not a pendant path
                _ => {
                    chain.reverse();
                    out.push(PendantPath { attachment: cur, vertices: chain });
                    break;
                }
            }
        }
    }
    out.sort_by_key(|p| (p.attachment, p.base()));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutVertexTaxonomy {
    /// Cut vertices with `c(G-v) = 2` and `p(v) = 1`.
    pub r1: Vec<Vertex>,
    /// Cut vertices with `c(G-v) = 2` and `p(v) = 0`.
    pub r2: Vec<Vertex>,
    /// Cut vertices with `c(G-v) >= 3`.
    pub r3: Vec<Vertex>,
    /// `R2 ∪ R3`, contained in every connected power dominating set.
    pub m: Vec<Vertex>,
    pub pendant_paths: Vec<PendantPath>,
    /// Pendant paths attached to each vertex; 1 for cut vertices inside one.
    pub p: Vec<usize>,
    /// `c(G - v)` per vertex.
    pub components: Vec<usize>,
    /// Index into `pendant_paths` for vertices lying on a pendant path.
    pub on_pendant: Vec<Option<usize>>,
}

impl CutVertexTaxonomy {
    pub fn in_m(&self, v: Vertex) -> bool {
        self.m.binary_search(&v).is_ok()
    }

    pub fn in_r1(&self, v: Vertex) -> bool {
        self.r1.binary_search(&v).is_ok()
    }
}

pub fn classify_cut_vertices(g: &Graph) -> Result<CutVertexTaxonomy> {
    let d = blocks(g)?;
    Ok(classify_with_blocks(g, &d))
}

pub fn classify_with_blocks(g: &Graph, d: &BlockDecomposition) -> CutVertexTaxonomy {
    let n = g.n();
    let paths = pendant_paths(g);
    let mut p = vec![0usize; n];
    let mut on_pendant = vec![None; n];
    for (i, path) in paths.iter().enumerate() {
        p[path.attachment] += 1;
        for &v in &path.vertices {
            on_pendant[v] = Some(i);
        }
    }
    let components: Vec<usize> = (0..n).map(|v| d.components_without(v)).collect();
    for v in 0..n {
        if on_pendant[v].is_some() && components[v] >= 2 {
            p[v] = 1;
        }
    }

    let (mut r1, mut r2, mut r3) = (Vec::new(), Vec::new(), Vec::new());
    if !is_path_graph(g) {
        for v in 0..n {
            match (components[v], p[v]) {
                (c, _) if c >= 3 => r3.push(v),
                (2, 0) => r2.push(v),
                (2, _) => r1.push(v),
                _ => {}
            }
        }
    }
    let mut m: Vec<Vertex> = r2.iter().chain(&r3).copied().collect();
    m.sort_unstable();
    CutVertexTaxonomy { r1, r2, r3, m, pendant_paths: paths, p, components, on_pendant }
}
