//! Simple undirected graphs with external string labels.
//!
//! Vertices are dense indices `0..n`. Neighbor lists are sorted ascending,
//! loops and parallel edges are dropped at construction time, and every
//! derived graph (deletion, contraction, subdivision, leaf attachment) keeps
//! those invariants.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::vset::VertexSet;

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    m: usize,
}

/// Incremental construction of a [`Graph`].
#[derive(Default, Debug, Clone)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    edges: BTreeSet<(Vertex, Vertex)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the index of `label`, creating the vertex if needed.
    pub fn vertex(&mut self, label: &str) -> Vertex {
        if let Some(&v) = self.index.get(label) {
            return v;
        }
        let v = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), v);
        v
    }

    /// Adds a vertex whose label does not clash with any existing one.
    pub fn fresh_vertex(&mut self, base: &str) -> Vertex {
        if !self.index.contains_key(base) {
            return self.vertex(base);
        }
        let mut k = 1;
        loop {
            let candidate = format!("{base}_{k}");
            if !self.index.contains_key(&candidate) {
                return self.vertex(&candidate);
            }
            k += 1;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Loops and repeated edges are ignored.
    pub fn edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u < self.labels.len() && v < self.labels.len());
        if u != v {
            self.edges.insert((u.min(v), u.max(v)));
        }
    }

    pub fn labeled_edge(&mut self, a: &str, b: &str) {
        let u = self.vertex(a);
        let v = self.vertex(b);
        self.edge(u, v);
    }

    pub fn build(self) -> Graph {
        let n = self.labels.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj, labels: self.labels, index: self.index, m: self.edges.len() }
    }
}

impl Graph {
    /// Graph on `n` vertices labelled `0..n` by their index.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut b = GraphBuilder::new();
        for v in 0..n {
            b.vertex(&v.to_string());
        }
        for &(u, v) in edges {
            b.edge(u, v);
        }
        b.build()
    }

    pub fn from_labeled_edges(edges: &[(&str, &str)]) -> Self {
        let mut b = GraphBuilder::new();
        for (x, y) in edges {
            b.labeled_edge(x, y);
        }
        b.build()
    }

    /// Path `v1 - v2 - ... - vn`.
    pub fn path(n: usize) -> Self {
        let mut b = GraphBuilder::new();
        for i in 1..=n {
            b.vertex(&format!("v{i}"));
        }
        for i in 1..n {
            b.edge(i - 1, i);
        }
        b.build()
    }

    /// Cycle `v1 - ... - vn - v1`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut b = GraphBuilder::new();
        for i in 1..=n {
            b.vertex(&format!("v{i}"));
        }
        for i in 0..n {
            b.edge(i, (i + 1) % n);
        }
        b.build()
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new();
        for i in 1..=n {
            b.vertex(&format!("v{i}"));
        }
        for u in 0..n {
            for v in u + 1..n {
                b.edge(u, v);
            }
        }
        b.build()
    }

    /// `K_{a,b}` with sides `a1..` and `b1..`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut gb = GraphBuilder::new();
        for i in 1..=a {
            gb.vertex(&format!("a{i}"));
        }
        for j in 1..=b {
            gb.vertex(&format!("b{j}"));
        }
        for i in 0..a {
            for j in 0..b {
                gb.edge(i, a + j);
            }
        }
        gb.build()
    }

    /// `K_{1,k}` with center `c` and leaves `l1..lk`.
    pub fn star(k: usize) -> Self {
        let mut b = GraphBuilder::new();
        let c = b.vertex("c");
        for i in 1..=k {
            let l = b.vertex(&format!("l{i}"));
            b.edge(c, l);
        }
        b.build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Result<Vertex> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn vertices_by_label<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<Vertex>> {
        let mut out = labels.iter().map(|l| self.vertex(l.as_ref())).collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn label_set(&self, vertices: &[Vertex]) -> Vec<String> {
        vertices.iter().map(|&v| self.labels[v].clone()).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        out
    }

    /// Number of connected components among the vertices not in `removed`.
    pub fn component_count_without(&self, removed: &VertexSet) -> usize {
        let n = self.n();
        let mut seen = removed.clone();
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            count += 1;
            seen.insert(start);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn component_count(&self) -> usize {
        self.component_count_without(&VertexSet::new(self.n()))
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.component_count() == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.n() == 0 {
            Err(Error::EmptyGraph)
        } else if !self.is_connected() {
            Err(Error::Disconnected)
        } else {
            Ok(())
        }
    }

    /// Induced subgraph on `vertices` (in ascending order); returns the graph
    /// and the map from new to old indices.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut keep: Vec<Vertex> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_index = vec![usize::MAX; self.n()];
        let mut b = GraphBuilder::new();
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
            b.vertex(&self.labels[v]);
        }
        for &v in &keep {
            for &w in &self.adj[v] {
                if w > v && new_index[w] != usize::MAX {
                    b.edge(new_index[v], new_index[w]);
                }
            }
        }
        (b.build(), keep)
    }

    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<Vertex> = (0..self.n()).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep).0)
    }

    pub fn remove_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.require_edge(u, v)?;
        let mut b = self.to_builder();
        b.edges.remove(&(u.min(v), u.max(v)));
        Ok(b.build())
    }

    /// `G / uv`: the larger index is merged into the smaller one, which keeps
    /// its label; parallel edges are merged.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.require_edge(u, v)?;
        let (keep, gone) = (u.min(v), u.max(v));
        let remap = |x: Vertex| -> Vertex {
            let x = if x == gone { keep } else { x };
            if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut b = GraphBuilder::new();
        for (i, l) in self.labels.iter().enumerate() {
            if i != gone {
                b.vertex(l);
            }
        }
        for (a, c) in self.edges() {
            b.edge(remap(a), remap(c));
        }
        Ok(b.build())
    }

    /// `G : uv`; returns the new graph and the index of the subdivision vertex.
    pub fn subdivide_edge(&self, u: Vertex, v: Vertex) -> Result<(Graph, Vertex)> {
        self.require_edge(u, v)?;
        let mut b = self.to_builder();
        b.edges.remove(&(u.min(v), u.max(v)));
        let base = format!("{}_{}", self.labels[u.min(v)], self.labels[u.max(v)]);
        let w = b.fresh_vertex(&base);
        b.edge(u, w);
        b.edge(w, v);
        Ok((b.build(), w))
    }

    /// `ℓ_r(G, X)`: attach `r` new leaves to every vertex of `x`. Leaf labels
    /// are `<label>_leaf<j>` (made unique if necessary).
    pub fn attach_leaves(&self, x: &[Vertex], r: usize) -> Result<Graph> {
        for &v in x {
            self.check_vertex(v)?;
        }
        if r == 0 {
            return Err(Error::InvalidArgument("leaf count must be at least 1".into()));
        }
        let mut xs = x.to_vec();
        xs.sort_unstable();
        xs.dedup();
        let mut b = self.to_builder();
        for &v in &xs {
            for j in 1..=r {
                let leaf = b.fresh_vertex(&format!("{}_leaf{j}", self.labels[v]));
                b.edge(v, leaf);
            }
        }
        Ok(b.build())
    }

    pub fn to_builder(&self) -> GraphBuilder {
        let mut b = GraphBuilder::new();
        for l in &self.labels {
            b.vertex(l);
        }
        b.edges.extend(self.edges());
        b
    }

    fn require_edge(&self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(self.labels[u].clone(), self.labels[v].clone()))
        }
    }

    /// Writes the graph as a whitespace edge list; isolated vertices get a
    /// line of their own.
    pub fn to_edgelist(&self) -> String {
        let mut out = String::new();
        for v in 0..self.n() {
            if self.adj[v].is_empty() {
                out.push_str(&self.labels[v]);
                out.push('\n');
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&self.labels[u]);
            out.push(' ');
            out.push_str(&self.labels[v]);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_drops_loops_and_duplicates() {
        let g = Graph::from_labeled_edges(&[("a", "a"), ("a", "b"), ("b", "a")]);
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn contraction_keeps_smaller_label_and_merges_edges() {
        let g = Graph::complete(3);
        let h = g.contract_edge(0, 1).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.m(), 1);
        assert_eq!(h.label(0), "v1");
        assert_eq!(h.label(1), "v3");
    }

    #[test]
    fn subdivision_adds_vertex_between_endpoints() {
        let g = Graph::path(2);
        let (h, w) = g.subdivide_edge(0, 1).unwrap();
        assert_eq!(h.n(), 3);
        assert!(h.has_edge(0, w) && h.has_edge(w, 1) && !h.has_edge(0, 1));
    }

    #[test]
    fn attach_leaves_examples() {
        let k3 = Graph::complete(3);
        let g = k3.attach_leaves(&[0], 3).unwrap();
        assert_eq!((g.n(), g.m()), (6, 6));

        let p2 = Graph::path(2);
        let same = p2.attach_leaves(&[], 3).unwrap();
        assert_eq!(same, p2);

        let p3 = Graph::path(3);
        let star = p3.attach_leaves(&[1], 1).unwrap();
        assert_eq!(star.n(), 4);
        assert_eq!(star.degree(1), 3);

        assert!(p3.attach_leaves(&[7], 1).is_err());
    }

    #[test]
    fn missing_edge_is_rejected() {
        let g = Graph::path(3);
        assert!(matches!(g.remove_edge(0, 2), Err(Error::NotAnEdge(..))));
    }
}
