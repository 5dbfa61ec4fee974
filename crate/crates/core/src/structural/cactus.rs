use crate::blocks::blocks;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognize::recognize_with_blocks;
use crate::result::{Method, SolveResult};
use crate::structural::segments::{feasible_segments, FeasibleSegmentFamily};
use crate::taxonomy::classify_with_blocks;

#[derive(Clone, Debug)]
pub struct CactusSolution {
    pub result: SolveResult,
    /// One family per cycle block, in block order.
    pub cycles: Vec<FeasibleSegmentFamily>,
    pub pendant_vertices: usize,
}

/// `γ_{P,c}` of a cactus: 1 for cycles and paths, otherwise
/// `n − Σ|P_i| − Σ s(C_i)`, realised by deleting every pendant path and one
/// maximum feasible segment (with its pendant paths) from each cycle.
pub fn cactus_cpds(g: &Graph) -> Result<SolveResult> {
    Ok(cactus_cpds_detailed(g)?.result)
}

pub fn cactus_cpds_detailed(g: &Graph) -> Result<CactusSolution> {
    g.require_connected()?;
    let d = blocks(g)?;
    let class = recognize_with_blocks(g, &d);
    if !class.cactus {
        return Err(Error::WrongClass("cactus"));
    }
    if class.path || class.cycle {
        let result = SolveResult::certified(g, vec![0], Method::Cactus, true)?;
        return Ok(CactusSolution { result, cycles: Vec::new(), pendant_vertices: 0 });
    }
    let t = classify_with_blocks(g, &d);
    let mut removed = vec![false; g.n()];
    let mut pendant_vertices = 0;
    for p in &t.pendant_paths {
        pendant_vertices += p.vertices.len();
        for &v in &p.vertices {
            removed[v] = true;
        }
    }
    let mut cycles = Vec::new();
    for (b, verts) in d.blocks.iter().enumerate() {
        if !d.is_cycle(b) {
            continue;
        }
        let fam = feasible_segments(g, verts, &t)?;
        for &v in &fam.witness.interior {
            removed[v] = true;
        }
        cycles.push(fam);
    }
    let witness: Vec<_> = (0..g.n()).filter(|&v| !removed[v]).collect();
    let expected = g.n() - pendant_vertices - cycles.iter().map(|c| c.s_max).sum::<usize>();
    if witness.len() != expected {
        return Err(Error::Internal(format!("cactus witness has {} vertices, formula gives {expected}", witness.len())));
    }
    let result = SolveResult::certified(g, witness, Method::Cactus, true)?;
    Ok(CactusSolution { result, cycles, pendant_vertices })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cactus_examples() {
        assert_eq!(cactus_cpds(&Graph::cycle(10)).unwrap().optimum, 1);

        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 6), (3, 7)]);
        let s = cactus_cpds_detailed(&Graph::from_edges(8, &edges)).unwrap();
        assert_eq!((s.result.optimum, s.pendant_vertices, s.cycles[0].s_max), (1, 2, 5));

        // two C4 sharing vertex 0
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)]);
        let s = cactus_cpds_detailed(&g).unwrap();
        assert_eq!(s.result.witness, vec![0]);
        assert!(s.cycles.iter().all(|c| c.s_max == 3));

        assert_eq!(cactus_cpds(&Graph::complete(4)).unwrap_err(), Error::WrongClass("cactus"));
    }
}
