//! Connected power domination through nontrivial blocks.
//!
//! A nontrivial block is a block that is not a bridge on a pendant path,
//! together with the pendant paths hanging off its vertices. Writing
//! `A_i = V(B_i) ∩ 𝓜(G)` and `μ(v)` for the number of nontrivial blocks
//! containing `v`,
//!
//! `γ_{P,c}(G) = Σ γ_{P,c}(ℓ₃(B_i, A_i)) − Σ_{v ∈ 𝓜} (μ(v) − 1)`.
//!
//! The three leaves on each `v ∈ A_i` force `v` into every minimum solution of
//! the block instance, so the block solutions overlap exactly on `𝓜` and
//! their union, together with `𝓜` itself, is a minimum connected power
//! dominating set of `G`. Vertices of `𝓜` in no nontrivial block (the centre
//! of a spider, say) have `μ = 0` and enter through that last union.

use serde::Serialize;

use crate::blocks::blocks;
use crate::error::{Error, Result};
use crate::exact::{min_cpds, ExactOptions};
use crate::graph::{Graph, Vertex};
use crate::recognize::recognize;
use crate::result::{Method, SolveResult};
use crate::structural::{block_graph_cpds, cactus_cpds, tree_cpds};
use crate::taxonomy::{classify_with_blocks, is_path_graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockInstance {
    /// Index into the block decomposition.
    pub block: usize,
    /// Block vertices plus attached pendant paths, sorted.
    pub vertices: Vec<Vertex>,
    /// `A_i`.
    pub anchors: Vec<Vertex>,
    /// `γ_{P,c}(ℓ₃(B_i, A_i))`.
    pub optimum: usize,
    pub method: Method,
    /// Block solution mapped back to vertices of `G`.
    pub witness: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub blocks: Vec<BlockInstance>,
    pub m: Vec<Vertex>,
    /// `μ(v)` for each `v ∈ 𝓜`, aligned with `m`.
    pub mu: Vec<usize>,
    /// Members of `𝓜` lying in no nontrivial block.
    pub uncovered: Vec<Vertex>,
    pub result: SolveResult,
}

/// Solves a block instance with a linear-time solver when its class allows
/// one, otherwise with the exact oracle. Never decomposes again.
pub fn default_block_solver(h: &Graph, opts: &ExactOptions) -> Result<SolveResult> {
    let class = recognize(h)?;
    if class.tree {
        tree_cpds(h)
    } else if class.block_graph {
        block_graph_cpds(h)
    } else if class.cactus {
        cactus_cpds(h)
    } else {
        min_cpds(h, opts)
    }
}

pub fn decompose_cpds(g: &Graph, opts: &ExactOptions) -> Result<Decomposition> {
    decompose_cpds_with(g, &mut |h| default_block_solver(h, opts))
}

pub fn decompose_cpds_with(g: &Graph, solver: &mut dyn FnMut(&Graph) -> Result<SolveResult>) -> Result<Decomposition> {
    g.require_connected()?;
    if is_path_graph(g) {
        return Err(Error::IsPath);
    }
    let d = blocks(g)?;
    if d.cut_vertices.is_empty() {
        return Err(Error::NoCutVertex);
    }
    let t = classify_with_blocks(g, &d);

    let mut mu = vec![0usize; g.n()];
    let mut instances = Vec::new();
    for b in d.nontrivial() {
        let mut vertices = d.blocks[b].clone();
        for p in &t.pendant_paths {
            if d.blocks[b].binary_search(&p.attachment).is_ok() {
                vertices.extend(&p.vertices);
            }
        }
        vertices.sort_unstable();
        vertices.dedup();
        let anchors: Vec<Vertex> = d.blocks[b].iter().copied().filter(|&v| t.in_m(v)).collect();
        for &v in &anchors {
            mu[v] += 1;
        }

        let (h, back) = g.induced_subgraph(&vertices);
        let local: Vec<Vertex> = anchors.iter().map(|a| back.binary_search(a).expect("anchor inside block")).collect();
        let h3 = h.attach_leaves(&local, 3)?;
        let sub = solver(&h3)?;
        let mut witness = Vec::with_capacity(sub.witness.len());
        for &v in &sub.witness {
            if v >= h.n() {
                return Err(Error::Internal(format!("block {b} solution uses an added leaf")));
            }
            witness.push(back[v]);
        }
        if let Some(&a) = anchors.iter().find(|a| !witness.contains(a)) {
            return Err(Error::Internal(format!("block {b} solution misses anchor {}", g.label(a))));
        }
        instances.push(BlockInstance { block: b, vertices, anchors, optimum: sub.optimum, method: sub.method, witness });
    }

    let total: usize = instances.iter().map(|i| i.optimum).sum();
    let shared: i64 = t.m.iter().map(|&v| mu[v] as i64 - 1).sum();
    let formula = total as i64 - shared;

    let mut union = vec![false; g.n()];
    for &v in instances.iter().flat_map(|i| &i.witness).chain(&t.m) {
        union[v] = true;
    }
    let witness: Vec<Vertex> = (0..g.n()).filter(|&v| union[v]).collect();
    if witness.len() as i64 != formula {
        return Err(Error::Internal(format!(
            "block solutions overlap outside 𝓜: union has {} vertices, formula gives {formula}",
            witness.len()
        )));
    }
    let result = SolveResult::certified(g, witness, Method::Decomposition, true)?;
    let uncovered = t.m.iter().copied().filter(|&v| mu[v] == 0).collect();
    let mu_m = t.m.iter().map(|&v| mu[v]).collect();
    Ok(Decomposition { blocks: instances, m: t.m, mu: mu_m, uncovered, result })
}
