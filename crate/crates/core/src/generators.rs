//! Seeded random graph families used by the test suites and the CLI.
//!
//! Every generator returns a connected graph with labels `"0".."n-1"`. Vertex
//! indices are shuffled after construction so that structure and index order
//! are uncorrelated.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn shuffled(n: usize, edges: Vec<(Vertex, Vertex)>, rng: &mut impl Rng) -> Graph {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(n, &edges)
}

fn tree_edges(n: usize, rng: &mut impl Rng) -> Vec<(Vertex, Vertex)> {
    (1..n).map(|v| (rng.gen_range(0..v), v)).collect()
}

/// Uniform random recursive tree on `n` vertices.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 1);
    let edges = tree_edges(n, rng);
    shuffled(n, edges, rng)
}

/// Random spanning tree plus each remaining pair independently with
/// probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    assert!(n >= 1);
    let mut edges = tree_edges(n, rng);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    shuffled(n, edges, rng)
}

/// Grows a graph to exactly `n` vertices by repeatedly gluing a new piece at
/// a random existing vertex. `piece(size_left)` returns the number of new
/// vertices and the edges of the piece on local vertices `0..=k`, where
/// local 0 is the glue vertex.
fn glued(n: usize, rng: &mut ChaCha8Rng, mut piece: impl FnMut(usize, &mut ChaCha8Rng) -> (usize, Vec<(usize, usize)>)) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    let mut count = 1;
    while count < n {
        let (k, local) = piece(n - count, rng);
        let at = rng.gen_range(0..count);
        let map = |x: usize| if x == 0 { at } else { count + x - 1 };
        edges.extend(local.into_iter().map(|(a, b)| (map(a), map(b))));
        count += k;
    }
    shuffled(n, edges, rng)
}

/// Cliques of size 2 to `max_clique` glued at single vertices.
pub fn random_block_graph(n: usize, max_clique: usize, rng: &mut ChaCha8Rng) -> Graph {
    let max_clique = max_clique.max(2);
    glued(n, rng, |left, rng| {
        let size = rng.gen_range(2..=max_clique.min(left + 1));
        let mut e = Vec::new();
        for a in 0..size {
            for b in a + 1..size {
                e.push((a, b));
            }
        }
        (size - 1, e)
    })
}

/// Cycles of length 3 to `max_cycle` and single edges glued at vertices.
pub fn random_cactus(n: usize, max_cycle: usize, rng: &mut ChaCha8Rng) -> Graph {
    let max_cycle = max_cycle.max(3);
    glued(n, rng, |left, rng| {
        if left >= 2 && rng.gen_bool(0.6) {
            let len = rng.gen_range(3..=max_cycle.min(left + 1));
            let e = (0..len).map(|i| (i, (i + 1) % len)).collect();
            (len - 1, e)
        } else {
            (1, vec![(0, 1)])
        }
    })
}

/// Random connected pieces glued at vertices; has a cut vertex whenever
/// `n >= 3`.
pub fn random_with_cut_vertex(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 3);
    loop {
        let g = glued(n, rng, |left, rng| {
            let size = rng.gen_range(1..=left.min(5));
            let mut e: Vec<(usize, usize)> = (1..=size).map(|v| (rng.gen_range(0..v), v)).collect();
            for a in 0..=size {
                for b in a + 1..=size {
                    if rng.gen_bool(p) {
                        e.push((a, b));
                    }
                }
            }
            (size, e)
        });
        let d = crate::blocks::blocks(&g).expect("glued graphs are connected");
        if !d.cut_vertices.is_empty() {
            return g;
        }
    }
}

/// Every labelled simple graph on `n` vertices, in edge-mask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::recognize;

    #[test]
    fn families_have_their_class() {
        let mut r = rng(7);
        for n in 1..15 {
            let t = random_tree(n, &mut r);
            assert!(t.is_connected() && t.m() + 1 == n);
            let b = random_block_graph(n, 4, &mut r);
            assert_eq!(b.n(), n);
            assert!(recognize(&b).unwrap().block_graph);
            let c = random_cactus(n, 6, &mut r);
            assert_eq!(c.n(), n);
            assert!(recognize(&c).unwrap().cactus);
            assert!(random_connected(n, 0.3, &mut r).is_connected());
        }
        for n in 3..13 {
            let g = random_with_cut_vertex(n, 0.4, &mut r);
            assert_eq!(g.n(), n);
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_connected(10, 0.3, &mut rng(42));
        let b = random_connected(10, 0.3, &mut rng(42));
        assert_eq!(a, b);
    }

    #[test]
    fn labelled_graph_counts() {
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(all_graphs(1).count(), 1);
    }
}
