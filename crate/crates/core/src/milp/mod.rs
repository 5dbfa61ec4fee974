//! Integer programming models for power domination: the propagation model with horizon
//! `T`, optional connectivity rows, LP/MPS text export and parsing, and an
//! exact evaluator for small graphs.

mod build;
mod enumerate;
mod export;
mod model;
mod parse;
mod solve;

pub use build::{add_mtz_connectivity, build_model, build_model1};
pub use enumerate::{feasible_points, solve_by_enumeration, DEFAULT_MAX_BINARIES};
pub use export::{export, to_lp, to_mps, ModelFormat};
pub use model::{sanitize, Constraint, GraphLayout, LinExpr, MilpModel, MtzLayout, Relation, VarKind, Variable};
pub use parse::{parse_lp, parse_model, parse_mps};
pub use solve::{
    decode_assignment, encode_trace, ppt_by_search, round_number, solve_graph, solve_small, ModelSolution, SolveBudget,
    SolveStatus, DEFAULT_MAX_ENUMERATED,
};
