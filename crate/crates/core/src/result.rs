use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::propagation::{is_connected_set, is_power_dominating, PropagationTrace};
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Tree,
    Block,
    Cactus,
    Decomposition,
    Milp,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Tree => "tree",
            Method::Block => "block",
            Method::Cactus => "cactus",
            Method::Decomposition => "decomposition",
            Method::Milp => "milp",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "brute" => Method::Brute,
            "tree" => Method::Tree,
            "block" => Method::Block,
            "cactus" => Method::Cactus,
            "decompose" | "decomposition" => Method::Decomposition,
            "milp" => Method::Milp,
            other => return Err(Error::InvalidArgument(format!("unknown method `{other}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: usize,
    /// Sorted vertex indices.
    pub witness: Vec<Vertex>,
    pub trace: PropagationTrace,
    pub method: Method,
    pub all_optima: Option<Vec<Vec<Vertex>>>,
}

impl SolveResult {
    /// Builds a result for `witness`, checking that it power dominates `g`
    /// (and is connected when `connected` is set).
    pub fn certified(g: &Graph, witness: Vec<Vertex>, method: Method, connected: bool) -> Result<Self> {
        let mut witness = witness;
        witness.sort_unstable();
        witness.dedup();
        let set = VertexSet::from_vertices(g.n(), witness.iter().copied());
        let (ok, trace) = is_power_dominating(g, &set);
        if !ok {
            return Err(Error::Internal(format!("{method} witness is not power dominating")));
        }
        if connected && !is_connected_set(g, &set) {
            return Err(Error::Internal(format!("{method} witness is not connected")));
        }
        Ok(SolveResult { optimum: witness.len(), witness, trace, method, all_optima: None })
    }
}
