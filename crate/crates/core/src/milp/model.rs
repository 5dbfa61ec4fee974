use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VarKind {
    Binary,
    Integer,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
    pub lower: i64,
    pub upper: i64,
}

/// Linear expression with integer coefficients, kept canonical: terms sorted
/// by variable index, merged, zero coefficients dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LinExpr {
    terms: Vec<(usize, i64)>,
}

impl LinExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, i64)>>(terms: I) -> Self {
        let mut e = LinExpr::new();
        for (v, c) in terms {
            e.add(v, c);
        }
        e
    }

    pub fn add(&mut self, var: usize, coef: i64) {
        match self.terms.binary_search_by_key(&var, |t| t.0) {
            Ok(i) => {
                self.terms[i].1 += coef;
                if self.terms[i].1 == 0 {
                    self.terms.remove(i);
                }
            }
            Err(i) if coef != 0 => self.terms.insert(i, (var, coef)),
            Err(_) => {}
        }
    }

    pub fn terms(&self) -> &[(usize, i64)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, values: &[i64]) -> i64 {
        self.terms.iter().map(|&(v, c)| c * values[v]).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub name: String,
    pub expr: LinExpr,
    pub relation: Relation,
    pub rhs: i64,
}

impl Constraint {
    pub fn satisfied(&self, values: &[i64]) -> bool {
        self.relation.holds(self.expr.eval(values), self.rhs)
    }
}

/// Where the graph-derived variables of a model live.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphLayout {
    pub graph: Graph,
    pub horizon: usize,
    /// Directed arcs `(tail, head)`: tails ascending, heads in adjacency order.
    pub arcs: Vec<(Vertex, Vertex)>,
    pub s: Vec<usize>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub mtz: Option<MtzLayout>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MtzLayout {
    pub root: Vec<usize>,
    pub z: Vec<usize>,
    pub order: Vec<usize>,
}

/// A minimisation model over bounded binary and integer variables.
///
/// Equality compares variables, objective and constraints only; the graph
/// layout is bookkeeping that does not survive export.
#[derive(Clone, Debug, Default)]
pub struct MilpModel {
    pub name: String,
    pub variables: Vec<Variable>,
    pub objective: LinExpr,
    pub constraints: Vec<Constraint>,
    pub layout: Option<GraphLayout>,
}

impl PartialEq for MilpModel {
    fn eq(&self, other: &Self) -> bool {
        self.variables == other.variables && self.objective == other.objective && self.constraints == other.constraints
    }
}

impl MilpModel {
    pub fn new(name: &str) -> Self {
        MilpModel { name: name.to_string(), ..Self::default() }
    }

    pub fn add_variable(&mut self, name: String, kind: VarKind, lower: i64, upper: i64) -> usize {
        self.variables.push(Variable { name, kind, lower, upper });
        self.variables.len() - 1
    }

    pub fn binary(&mut self, name: String) -> usize {
        self.add_variable(name, VarKind::Binary, 0, 1)
    }

    pub fn integer(&mut self, name: String, lower: i64, upper: i64) -> usize {
        self.add_variable(name, VarKind::Integer, lower, upper)
    }

    pub fn add_constraint(&mut self, name: String, expr: LinExpr, relation: Relation, rhs: i64) {
        self.constraints.push(Constraint { name, expr, relation, rhs });
    }

    pub fn binary_count(&self) -> usize {
        self.variables.iter().filter(|v| v.kind == VarKind::Binary).count()
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    /// Checks bounds and every row.
    pub fn violations(&self, values: &[i64]) -> Vec<String> {
        let mut out = Vec::new();
        if values.len() != self.variables.len() {
            out.push(format!("expected {} values, got {}", self.variables.len(), values.len()));
            return out;
        }
        for (v, &val) in self.variables.iter().zip(values) {
            if val < v.lower || val > v.upper {
                out.push(format!("{} = {val} outside [{}, {}]", v.name, v.lower, v.upper));
            }
        }
        for c in &self.constraints {
            if !c.satisfied(values) {
                out.push(format!("row {} violated", c.name));
            }
        }
        out
    }

    pub fn is_feasible(&self, values: &[i64]) -> bool {
        self.violations(values).is_empty()
    }

    /// Rejects models that cannot be written out: no variables, or two
    /// variables or rows sharing a name.
    pub fn validate(&self) -> Result<()> {
        if self.variables.is_empty() {
            return Err(Error::EmptyModel);
        }
        let mut seen = HashSet::new();
        for v in &self.variables {
            if !seen.insert(v.name.as_str()) {
                return Err(Error::NameCollision(v.name.clone()));
            }
        }
        let mut rows = HashSet::from(["obj"]);
        for c in &self.constraints {
            if !rows.insert(c.name.as_str()) {
                return Err(Error::NameCollision(c.name.clone()));
            }
        }
        Ok(())
    }
}

/// Replaces every character outside `[A-Za-z0-9_]` with `_`.
pub fn sanitize(label: &str) -> String {
    label.chars().map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '_' }).collect()
}
