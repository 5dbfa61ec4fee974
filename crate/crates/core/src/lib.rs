//! Power domination, connected power domination and power propagation time.
//!
//! The crate is organised bottom-up: [`graph`] and [`io`] hold the graph type
//! and readers, [`blocks`] and [`taxonomy`] the block and cut-vertex
//! structure, [`propagation`] the colour-change rules, [`exact`] a
//! brute-force oracle, [`structural`] the linear-time solvers and the
//! cut-vertex decomposition, [`spread`] the spread computations and gadgets,
//! and [`milp`] the integer programming models.

pub mod blocks;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod milp;
pub mod propagation;
pub mod recognize;
pub mod result;
pub mod spread;
pub mod structural;
pub mod taxonomy;
pub mod vset;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, Vertex};
pub use result::{Method, SolveResult};
pub use vset::VertexSet;
