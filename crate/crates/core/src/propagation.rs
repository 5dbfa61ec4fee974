//! The two colour-change rules: domination (`N[S]`) followed by zero forcing
//! (a coloured vertex with exactly one uncoloured neighbour colours it).
//!
//! Forcing runs in synchronised rounds: the forcing candidates of a round are
//! computed against the colouring at the start of that round and applied
//! together. With `S^[1] = N[S]` this is exactly the recursion behind power
//! propagation time. When several vertices could colour the same target the
//! smallest-index source is recorded.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorState {
    pub colored: VertexSet,
    pub timestep: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ForceKind {
    Dominate,
    Force,
}

impl fmt::Display for ForceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForceKind::Dominate => "dominate",
            ForceKind::Force => "force",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Force {
    pub timestep: usize,
    pub source: Vertex,
    pub target: Vertex,
    pub kind: ForceKind,
}

/// Chronological list of colourings caused by an initial set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropagationTrace {
    pub initial: Vec<Vertex>,
    pub forces: Vec<Force>,
    pub final_colored: VertexSet,
}

impl PropagationTrace {
    /// Time at which the last vertex was coloured (1 if only domination ran).
    pub fn last_timestep(&self) -> usize {
        self.forces.iter().map(|f| f.timestep).max().unwrap_or(1)
    }

    /// Replays the trace, checking every entry against the colour-change
    /// rules. A force at time `t` needs its source and all of the source's
    /// other neighbours coloured strictly before `t`; the initial set counts
    /// as coloured at time 0 and dominated vertices at time 1.
    pub fn replay(&self, g: &Graph) -> Result<VertexSet> {
        let n = g.n();
        let mut time = vec![usize::MAX; n];
        for &v in &self.initial {
            g.check_vertex(v)?;
            time[v] = 0;
        }
        let mut forces = self.forces.clone();
        forces.sort_by_key(|f| f.timestep);
        for f in &forces {
            g.check_vertex(f.source)?;
            g.check_vertex(f.target)?;
            if time[f.target] != usize::MAX {
                return Err(Error::InvalidTrace(format!("vertex {} coloured twice", f.target)));
            }
            if !g.has_edge(f.source, f.target) {
                return Err(Error::InvalidTrace(format!("{} -> {} is not an edge", f.source, f.target)));
            }
            match f.kind {
                ForceKind::Dominate => {
                    if f.timestep != 1 || time[f.source] != 0 {
                        return Err(Error::InvalidTrace(format!(
                            "domination {} -> {} must come from the initial set at t=1",
                            f.source, f.target
                        )));
                    }
                }
                ForceKind::Force => {
                    let ok = time[f.source] < f.timestep
                        && g
                            .neighbors(f.source)
                            .iter()
                            .filter(|&&w| w != f.target)
                            .all(|&w| time[w] < f.timestep);
                    if !ok || f.timestep < 2 {
                        return Err(Error::InvalidTrace(format!(
                            "force {} -> {} at t={} is not enabled",
                            f.source, f.target, f.timestep
                        )));
                    }
                }
            }
            time[f.target] = f.timestep;
        }
        let colored = VertexSet::from_vertices(n, (0..n).filter(|&v| time[v] != usize::MAX));
        if colored != self.final_colored {
            return Err(Error::InvalidTrace("final colouring does not match replay".into()));
        }
        Ok(colored)
    }

    /// One line per entry: `t=<k> <src> -> <tgt> <kind>`.
    pub fn render(&self, g: &Graph) -> String {
        let mut out = String::new();
        for f in &self.forces {
            out.push_str(&format!("t={} {} -> {} {}\n", f.timestep, g.label(f.source), g.label(f.target), f.kind));
        }
        out
    }
}

/// Rule 1: `N[S]` at timestep 1.
pub fn dominate_step(g: &Graph, s: &VertexSet) -> ColorState {
    ColorState { colored: g.closed_neighborhood(s), timestep: 1 }
}

fn domination_forces(g: &Graph, s: &VertexSet) -> Vec<Force> {
    let mut claimed = s.clone();
    let mut forces = Vec::new();
    for src in s.iter() {
        for &t in g.neighbors(src) {
            if claimed.insert(t) {
                forces.push(Force { timestep: 1, source: src, target: t, kind: ForceKind::Dominate });
            }
        }
    }
    forces.sort_by_key(|f| f.target);
    forces
}

/// One synchronised round of rule 2; returns the forces it performs, sorted
/// by target.
fn forcing_round(g: &Graph, colored: &VertexSet, timestep: usize) -> Vec<Force> {
    let mut claimed = VertexSet::new(g.n());
    let mut forces = Vec::new();
    for src in colored.iter() {
        let mut uncolored = g.neighbors(src).iter().filter(|&&w| !colored.contains(w));
        if let (Some(&t), None) = (uncolored.next(), uncolored.next()) {
            if claimed.insert(t) {
                forces.push(Force { timestep, source: src, target: t, kind: ForceKind::Force });
            }
        }
    }
    forces.sort_by_key(|f| f.target);
    forces
}

/// Applies rule 2 until stable, starting from `state`; forces are stamped
/// `state.timestep + 1`, `+ 2`, ... The returned state's timestep is the
/// last round that coloured something.
pub fn forcing_closure_from(g: &Graph, state: ColorState) -> (ColorState, Vec<Force>) {
    let ColorState { mut colored, mut timestep } = state;
    let mut all = Vec::new();
    loop {
        let round = forcing_round(g, &colored, timestep + 1);
        if round.is_empty() {
            break;
        }
        timestep += 1;
        for f in &round {
            colored.insert(f.target);
        }
        all.extend(round);
    }
    (ColorState { colored, timestep }, all)
}

/// Rule 2 alone from `colored`, rounds numbered from 1.
pub fn forcing_closure(g: &Graph, colored: &VertexSet) -> (VertexSet, Vec<Force>) {
    let (state, forces) = forcing_closure_from(g, ColorState { colored: colored.clone(), timestep: 0 });
    (state.colored, forces)
}

/// Rule 1 once, then rule 2 exhaustively. The trace is returned either way.
pub fn is_power_dominating(g: &Graph, s: &VertexSet) -> (bool, PropagationTrace) {
    let mut forces = domination_forces(g, s);
    let (state, more) = forcing_closure_from(g, dominate_step(g, s));
    forces.extend(more);
    let ok = g.n() > 0 && state.colored.is_full();
    (ok, PropagationTrace { initial: s.to_vec(), forces, final_colored: state.colored })
}

pub fn is_zero_forcing(g: &Graph, s: &VertexSet) -> bool {
    forcing_closure(g, s).0.is_full()
}

/// Smallest `l` with `S^[l] = V`.
pub fn ppt_of_set(g: &Graph, s: &VertexSet) -> Result<usize> {
    let (state, _) = forcing_closure_from(g, dominate_step(g, s));
    if g.n() == 0 || !state.colored.is_full() {
        return Err(Error::NotPowerDominating);
    }
    Ok(state.timestep)
}

/// `G[S]` is connected and `S` is nonempty.
pub fn is_connected_set(g: &Graph, s: &VertexSet) -> bool {
    let Some(start) = s.iter().next() else {
        return false;
    };
    let mut seen = VertexSet::new(g.n());
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if s.contains(w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == s.len()
}

pub fn is_connected_power_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_connected_set(g, s) && is_power_dominating(g, s).0
}
