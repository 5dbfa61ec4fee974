//! Segments of cycle blocks and the families `𝓢₀`, `𝓢₁`, `𝓢₂` of maximal
//! feasible segments.
//!
//! A cycle has no embedding, so its vertices are put in a canonical cyclic
//! order: start at the smallest vertex and step to its smaller neighbour on
//! the cycle. The segment `(u ↪ v)` is everything strictly between `u` and
//! `v` in that order; `(u ↪ u)` is the whole cycle except `u`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::taxonomy::CutVertexTaxonomy;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub start: Vertex,
    pub end: Vertex,
    /// Vertices strictly between `start` and `end`, in traversal order.
    pub interior: Vec<Vertex>,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.interior.len()
    }

    pub fn is_empty(&self) -> bool {
        self.interior.is_empty()
    }

    /// The segment together with the pendant paths attached to it; this is
    /// what a connected set avoiding the segment must avoid.
    pub fn with_pendant_paths(&self, t: &CutVertexTaxonomy) -> Vec<Vertex> {
        let mut out = self.interior.clone();
        for p in &t.pendant_paths {
            if self.interior.contains(&p.attachment) {
                out.extend(&p.vertices);
            }
        }
        out.sort_unstable();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibleSegmentFamily {
    /// The cycle in canonical traversal order.
    pub order: Vec<Vertex>,
    /// Cut vertices `p_1, …, p_k` of the cycle in traversal order.
    pub cut_vertices: Vec<Vertex>,
    pub s0: Vec<Segment>,
    pub s1: Vec<Segment>,
    pub s2: Vec<Segment>,
    /// `s(C)`, the largest size over the three families.
    pub s_max: usize,
    /// First segment of size `s_max`, searched in `s0`, `s1`, `s2` order.
    pub witness: Segment,
}

/// Canonical cyclic order of a vertex set inducing a cycle.
pub fn cycle_order(g: &Graph, cycle: &[Vertex]) -> Result<Vec<Vertex>> {
    let mut members: Vec<Vertex> = cycle.to_vec();
    members.sort_unstable();
    members.dedup();
    if members.len() < 3 {
        return Err(Error::InvalidArgument("a cycle needs at least 3 vertices".into()));
    }
    for &v in &members {
        g.check_vertex(v)?;
    }
    let inside = |v: Vertex| members.binary_search(&v).is_ok();
    let ring = |v: Vertex| -> Vec<Vertex> { g.neighbors(v).iter().copied().filter(|&w| inside(w)).collect() };
    if members.iter().any(|&v| ring(v).len() != 2) {
        return Err(Error::InvalidArgument("vertex set does not induce a cycle".into()));
    }
    let start = members[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = ring(start)[0];
    while cur != start {
        order.push(cur);
        let nb = ring(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    if order.len() != members.len() {
        return Err(Error::InvalidArgument("vertex set does not induce a cycle".into()));
    }
    Ok(order)
}

/// The segment `(u ↪ v)` of a cycle given in traversal order.
pub fn segment(order: &[Vertex], u: Vertex, v: Vertex) -> Result<Segment> {
    let pos = |x: Vertex| order.iter().position(|&y| y == x).ok_or_else(|| Error::InvalidArgument(format!("vertex {x} is not on the cycle")));
    let (i, j) = (pos(u)?, pos(v)?);
    let len = order.len();
    let mut interior = Vec::new();
    let mut k = (i + 1) % len;
    while k != j {
        interior.push(order[k]);
        k = (k + 1) % len;
    }
    Ok(Segment { start: u, end: v, interior })
}

fn families(g: &Graph, order: &[Vertex], t: &CutVertexTaxonomy) -> Result<FeasibleSegmentFamily> {
    let cut: Vec<Vertex> = order.iter().copied().filter(|&v| t.components[v] >= 2).collect();
    let k = cut.len();
    if k == 0 {
        return Err(Error::NoCutVertex);
    }
    let p = |i: usize| cut[i % k];
    let mut s0 = Vec::new();
    let mut s1 = Vec::new();
    let mut s2 = Vec::new();
    for i in 0..k {
        s0.push(segment(order, p(i), p(i + 1))?);
        if k > 1 && t.in_r1(p(i + 1)) {
            s1.push(segment(order, p(i), p(i + 2))?);
        }
        if k > 2 && t.in_r1(p(i + 1)) && t.in_r1(p(i + 2)) && g.has_edge(p(i + 1), p(i + 2)) {
            s2.push(segment(order, p(i), p(i + 3))?);
        }
    }
    let witness = s0
        .iter()
        .chain(&s1)
        .chain(&s2)
        .fold(None::<&Segment>, |best, s| match best {
            Some(b) if b.len() >= s.len() => Some(b),
            _ => Some(s),
        })
        .cloned()
        .expect("s0 is nonempty when k >= 1");
    Ok(FeasibleSegmentFamily { order: order.to_vec(), cut_vertices: cut, s_max: witness.len(), s0, s1, s2, witness })
}

/// `𝓢₀(C)`, `𝓢₁(C)`, `𝓢₂(C)` and `s(C)` for a cycle block `cycle` of `g`.
///
/// The families are listed for the canonical direction. The reverse
/// direction yields the mirror images `(v ↪ u)` with the same vertex sets, so
/// it cannot change `s(C)`; it is scanned anyway and its witness used if it
/// were ever strictly larger.
pub fn feasible_segments(g: &Graph, cycle: &[Vertex], t: &CutVertexTaxonomy) -> Result<FeasibleSegmentFamily> {
    let order = cycle_order(g, cycle)?;
    let mut forward = families(g, &order, t)?;
    let mut rev = order.clone();
    rev[1..].reverse();
    let backward = families(g, &rev, t)?;
    if backward.s_max > forward.s_max {
        forward.s_max = backward.s_max;
        forward.witness = backward.witness;
    }
    Ok(forward)
}
