//! Brute-force oracle: exact `γ_P`, `γ_{P,c}`, `γ_{P,c}(G; X)`, ℓ-round power
//! domination, power propagation time and zero forcing number, plus the
//! zero forcing to connected power domination gadget.
//!
//! Candidate sets are 64-bit masks, so the oracle handles at most 64
//! vertices; the configurable [`Budget`] is usually much tighter. Exceeding a
//! budget is always an error, never an approximation.
//!
//! Connected searches grow candidates from `𝓜(G)` (every connected power
//! dominating set of a non-path contains it) by adding neighbours of the
//! current set, level by level, so only supersets of `𝓜` that can become
//! connected are visited.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::result::{Method, SolveResult};
use crate::taxonomy::{classify_cut_vertices, is_path_graph};

pub const MAX_ORACLE_VERTICES: usize = 64;
pub const DEFAULT_MAX_VERTICES: usize = 24;
pub const BUDGET_ENV: &str = "POWERDOM_BUDGET_N";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_candidates: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_vertices: DEFAULT_MAX_VERTICES, max_candidates: None, time_limit: None }
    }
}

impl Budget {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        Budget { max_vertices, ..Budget::default() }
    }

    /// Default budget with the vertex ceiling taken from `POWERDOM_BUDGET_N`
    /// when it is set to a valid number.
    pub fn from_env() -> Self {
        match std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(n) => Budget::with_max_vertices(n),
            None => Budget::default(),
        }
    }

    fn admit(&self, g: &Graph) -> Result<()> {
        if g.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        let cap = self.max_vertices.min(MAX_ORACLE_VERTICES);
        if g.n() > cap {
            return Err(Error::BudgetExceeded(format!("{} vertices exceeds oracle budget of {cap}", g.n())));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactOptions {
    pub budget: Budget,
    /// Collect every minimum set, not just the lexicographically first.
    pub all_optima: bool,
    /// Restrict connected searches to supersets of `𝓜(G)`. Turning this off
    /// gives an unrestricted search, used to check that restriction.
    pub seed_with_m: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { budget: Budget::default(), all_optima: false, seed_with_m: true }
    }
}

impl ExactOptions {
    pub fn with_budget(budget: Budget) -> Self {
        ExactOptions { budget, ..Self::default() }
    }

    pub fn all(mut self) -> Self {
        self.all_optima = true;
        self
    }
}

/// Adjacency masks with the propagation rules specialised to `u64`.
#[derive(Clone, Debug)]
pub struct MaskGraph {
    n: usize,
    nbr: Vec<u64>,
    full: u64,
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Result<Self> {
        if g.n() > MAX_ORACLE_VERTICES {
            return Err(Error::BudgetExceeded(format!("{} vertices exceeds the 64-vertex mask limit", g.n())));
        }
        let nbr = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
        let full = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
        Ok(MaskGraph { n: g.n(), nbr, full })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> u64 {
        self.full
    }

    pub fn closed(&self, s: u64) -> u64 {
        bits(s).fold(s, |acc, v| acc | self.nbr[v])
    }

    /// Zero forcing rounds from `colored`; returns the closure and the number
    /// of rounds that coloured something.
    pub fn force(&self, mut colored: u64) -> (u64, usize) {
        let mut rounds = 0;
        loop {
            let mut fresh = 0u64;
            for v in bits(colored) {
                let unc = self.nbr[v] & !colored;
                if unc.count_ones() == 1 {
                    fresh |= unc;
                }
            }
            if fresh == 0 {
                return (colored, rounds);
            }
            colored |= fresh;
            rounds += 1;
        }
    }

    pub fn is_power_dominating(&self, s: u64) -> bool {
        s != 0 && self.force(self.closed(s)).0 == self.full
    }

    pub fn ppt(&self, s: u64) -> Option<usize> {
        if s == 0 {
            return None;
        }
        let (c, rounds) = self.force(self.closed(s));
        (c == self.full).then_some(rounds + 1)
    }

    pub fn is_zero_forcing(&self, s: u64) -> bool {
        self.force(s).0 == self.full
    }

    pub fn is_connected(&self, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        let mut seen = s & s.wrapping_neg();
        loop {
            let grow = bits(seen).fold(seen, |acc, v| acc | (self.nbr[v] & s));
            if grow == seen {
                return seen == s;
            }
            seen = grow;
        }
    }

    fn open_neighborhood(&self, s: u64) -> u64 {
        bits(s).fold(0, |acc, v| acc | self.nbr[v]) & !s
    }
}

pub fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

pub fn mask_to_vec(m: u64) -> Vec<Vertex> {
    bits(m).collect()
}

pub fn vec_to_mask(vs: &[Vertex]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// Lexicographic order of the sorted vertex lists of two equal-size sets.
fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    d != 0 && a & (d & d.wrapping_neg()) != 0
}

struct Meter<'a> {
    budget: &'a Budget,
    start: Instant,
    count: u64,
}

impl<'a> Meter<'a> {
    fn new(budget: &'a Budget) -> Self {
        Meter { budget, start: Instant::now(), count: 0 }
    }

    fn tick(&mut self) -> Result<()> {
        self.count += 1;
        if let Some(max) = self.budget.max_candidates {
            if self.count > max {
                return Err(Error::BudgetExceeded(format!("more than {max} candidate sets")));
            }
        }
        if self.count % 4096 == 0 {
            if let Some(limit) = self.budget.time_limit {
                if self.start.elapsed() > limit {
                    return Err(Error::BudgetExceeded(format!("time limit of {limit:?} reached")));
                }
            }
        }
        Ok(())
    }
}

/// Minimum-cardinality masks satisfying `accept`, by cardinality-ascending,
/// lexicographic subset enumeration. Returns all minimum masks in
/// lexicographic order when `all` is set, otherwise just the first.
fn smallest_subsets(
    n: usize,
    budget: &Budget,
    all: bool,
    mut accept: impl FnMut(u64) -> bool,
) -> Result<Option<Vec<u64>>> {
    let mut meter = Meter::new(budget);
    for k in 1..=n {
        let mut found = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            meter.tick()?;
            let mask = vec_to_mask(&idx);
            if accept(mask) {
                found.push(mask);
                if !all {
                    return Ok(Some(found));
                }
            }
            // next combination in lexicographic order
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
        if !found.is_empty() {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// Minimum-cardinality connected masks containing `seed` and satisfying
/// `accept`. With an empty seed the search starts from every single vertex.
fn smallest_connected_supersets(
    mg: &MaskGraph,
    seed: u64,
    budget: &Budget,
    all: bool,
    mut accept: impl FnMut(u64) -> bool,
) -> Result<Option<Vec<u64>>> {
    let mut meter = Meter::new(budget);
    let mut level: Vec<u64> = if seed == 0 { (0..mg.n).map(|v| 1u64 << v).collect() } else { vec![seed] };
    while !level.is_empty() {
        let mut found: Vec<u64> = Vec::new();
        for &s in &level {
            meter.tick()?;
            if mg.is_connected(s) && accept(s) {
                found.push(s);
            }
        }
        if !found.is_empty() {
            found.sort_by(|&a, &b| {
                if a == b {
                    std::cmp::Ordering::Equal
                } else if lex_less(a, b) {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            });
            if !all {
                found.truncate(1);
            }
            return Ok(Some(found));
        }
        let mut next = HashSet::new();
        for &s in &level {
            for v in bits(mg.open_neighborhood(s)) {
                next.insert(s | 1 << v);
            }
        }
        level = next.into_iter().collect();
    }
    Ok(None)
}

fn into_result(g: &Graph, masks: Vec<u64>, method: Method, connected: bool, all: bool) -> Result<SolveResult> {
    let mut res = SolveResult::certified(g, mask_to_vec(masks[0]), method, connected)?;
    if all {
        res.all_optima = Some(masks.into_iter().map(mask_to_vec).collect());
    }
    Ok(res)
}

/// Exact power domination number.
pub fn min_pds(g: &Graph, opts: &ExactOptions) -> Result<SolveResult> {
    opts.budget.admit(g)?;
    let mg = MaskGraph::new(g)?;
    let masks = smallest_subsets(g.n(), &opts.budget, opts.all_optima, |s| mg.is_power_dominating(s))?
        .ok_or_else(|| Error::Internal("V is always power dominating".into()))?;
    into_result(g, masks, Method::Brute, false, opts.all_optima)
}

fn connected_seed(g: &Graph, x: &[Vertex], opts: &ExactOptions) -> Result<u64> {
    let mut seed = vec_to_mask(x);
    if opts.seed_with_m && !is_path_graph(g) {
        seed |= vec_to_mask(&classify_cut_vertices(g)?.m);
    }
    Ok(seed)
}

/// Exact connected power domination number.
pub fn min_cpds(g: &Graph, opts: &ExactOptions) -> Result<SolveResult> {
    min_cpds_subject_to(g, &[], opts)
}

/// Minimum connected power dominating set containing `x`.
pub fn min_cpds_subject_to(g: &Graph, x: &[Vertex], opts: &ExactOptions) -> Result<SolveResult> {
    g.require_connected()?;
    opts.budget.admit(g)?;
    for &v in x {
        g.check_vertex(v)?;
    }
    let mg = MaskGraph::new(g)?;
    let seed = connected_seed(g, x, opts)?;
    let masks = smallest_connected_supersets(&mg, seed, &opts.budget, opts.all_optima, |s| mg.is_power_dominating(s))?
        .ok_or_else(|| Error::Internal("V is always a connected power dominating set".into()))?;
    into_result(g, masks, Method::Brute, true, opts.all_optima)
}

/// Minimum `|S|` with `ppt(G, S) <= rounds`.
pub fn l_round_pd(g: &Graph, rounds: usize, opts: &ExactOptions) -> Result<SolveResult> {
    if rounds == 0 {
        return Err(Error::InvalidArgument("round budget must be at least 1".into()));
    }
    opts.budget.admit(g)?;
    let mg = MaskGraph::new(g)?;
    let masks = smallest_subsets(g.n(), &opts.budget, opts.all_optima, |s| mg.ppt(s).is_some_and(|t| t <= rounds))?
        .ok_or_else(|| Error::Internal("S = V finishes in one round".into()))?;
    into_result(g, masks, Method::Brute, false, opts.all_optima)
}

/// Connected analogue of [`l_round_pd`].
pub fn l_round_cpd(g: &Graph, rounds: usize, opts: &ExactOptions) -> Result<SolveResult> {
    if rounds == 0 {
        return Err(Error::InvalidArgument("round budget must be at least 1".into()));
    }
    g.require_connected()?;
    opts.budget.admit(g)?;
    let mg = MaskGraph::new(g)?;
    // 𝓜 is forced into every connected power dominating set, whatever the
    // round budget, so seeding stays exact here.
    let seed = connected_seed(g, &[], opts)?;
    let masks = smallest_connected_supersets(&mg, seed, &opts.budget, opts.all_optima, |s| {
        mg.ppt(s).is_some_and(|t| t <= rounds)
    })?
    .ok_or_else(|| Error::Internal("S = V finishes in one round".into()))?;
    into_result(g, masks, Method::Brute, true, opts.all_optima)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PptResult {
    pub ppt: usize,
    /// A minimum (connected) power dominating set attaining `ppt`.
    pub set: Vec<Vertex>,
    pub optimum: usize,
}

fn ppt_over(g: &Graph, optima: Vec<u64>) -> Result<PptResult> {
    let mg = MaskGraph::new(g)?;
    let optimum = optima[0].count_ones() as usize;
    let (ppt, best) = optima
        .into_iter()
        .map(|s| (mg.ppt(s).expect("optimum is power dominating"), s))
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| if lex_less(a.1, b.1) { std::cmp::Ordering::Less } else { std::cmp::Ordering::Greater }))
        .ok_or_else(|| Error::Internal("no optimum".into()))?;
    Ok(PptResult { ppt, set: mask_to_vec(best), optimum })
}

/// Power propagation time: minimum `ppt(G, S)` over minimum power
/// dominating sets `S`.
pub fn ppt(g: &Graph, opts: &ExactOptions) -> Result<PptResult> {
    let all = ExactOptions { all_optima: true, ..opts.clone() };
    let res = min_pds(g, &all)?;
    let optima = res.all_optima.unwrap_or_default().iter().map(|s| vec_to_mask(s)).collect();
    ppt_over(g, optima)
}

/// Minimum `ppt(G, S)` over minimum connected power dominating sets.
pub fn ppt_connected(g: &Graph, opts: &ExactOptions) -> Result<PptResult> {
    let all = ExactOptions { all_optima: true, ..opts.clone() };
    let res = min_cpds(g, &all)?;
    let optima = res.all_optima.unwrap_or_default().iter().map(|s| vec_to_mask(s)).collect();
    ppt_over(g, optima)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroForcingResult {
    pub number: usize,
    pub witness: Vec<Vertex>,
}

/// Zero forcing number `Z(G)`; any simple graph, connected or not.
pub fn min_zero_forcing(g: &Graph, budget: &Budget) -> Result<ZeroForcingResult> {
    budget.admit(g)?;
    let mg = MaskGraph::new(g)?;
    let masks = smallest_subsets(g.n(), budget, false, |s| mg.is_zero_forcing(s))?
        .ok_or_else(|| Error::Internal("V is always zero forcing".into()))?;
    let witness = mask_to_vec(masks[0]);
    Ok(ZeroForcingResult { number: witness.len(), witness })
}

/// Named vertices of the reduction gadget, 0-based over the input's vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionGadget {
    pub graph: Graph,
    pub k: usize,
    pub hub: Vertex,
    pub original: Vec<Vertex>,
    pub u: Vec<Vertex>,
    pub w: Vec<Vertex>,
    /// `p[i][j]` for `j = 0..n`; `p[i][n-1]` is adjacent to the hub.
    pub p: Vec<Vec<Vertex>>,
    pub q: Vec<Vec<Vertex>>,
}

/// Maps a zero forcing instance `(G, k)` to the connected power domination
/// instance `(G', k + 1)`: a hub `v*` with two leaves, and for every `v_i` a
/// vertex `u_i` joined to `v_i` and to two paths `p_{i,1..n}`, `q_{i,1..n}`
/// whose far ends hang off `v*`, with a leaf `w_i` on `p_{i,n}`.
pub fn zf_to_cpd_gadget(g: &Graph, k: usize) -> ReductionGadget {
    let n = g.n();
    let mut b = GraphBuilder::new();
    let original: Vec<Vertex> = (0..n).map(|v| b.vertex(g.label(v))).collect();
    for (a, c) in g.edges() {
        b.edge(a, c);
    }
    let hub = b.fresh_vertex("v*");
    let l1 = b.fresh_vertex("l1");
    let l2 = b.fresh_vertex("l2");
    b.edge(hub, l1);
    b.edge(hub, l2);
    let mut u = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    let mut p = Vec::with_capacity(n);
    let mut q = Vec::with_capacity(n);
    for i in 0..n {
        let ui = b.fresh_vertex(&format!("u{}", i + 1));
        let wi = b.fresh_vertex(&format!("w{}", i + 1));
        let pi: Vec<Vertex> = (0..n).map(|j| b.fresh_vertex(&format!("p{}_{}", i + 1, j + 1))).collect();
        let qi: Vec<Vertex> = (0..n).map(|j| b.fresh_vertex(&format!("q{}_{}", i + 1, j + 1))).collect();
        b.edge(original[i], ui);
        b.edge(pi[0], ui);
        b.edge(qi[0], ui);
        b.edge(pi[n - 1], wi);
        b.edge(pi[n - 1], hub);
        b.edge(qi[n - 1], hub);
        for j in 0..n - 1 {
            b.edge(pi[j], pi[j + 1]);
            b.edge(qi[j], qi[j + 1]);
        }
        u.push(ui);
        w.push(wi);
        p.push(pi);
        q.push(qi);
    }
    ReductionGadget { graph: b.build(), k: k + 1, hub, original, u, w, p, q }
}
