//! CPLEX LP and MPS writers. Output is a pure function of the model, so equal
//! models give byte-identical files.
//!
//! Both writers list every variable in declaration order (LP through the
//! `Bounds` section, MPS through `COLUMNS`), which lets the parsers rebuild
//! the model exactly.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::milp::model::{LinExpr, MilpModel, Relation, VarKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelFormat {
    Lp,
    Mps,
}

impl FromStr for ModelFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lp" => Ok(ModelFormat::Lp),
            "mps" => Ok(ModelFormat::Mps),
            other => Err(Error::InvalidArgument(format!("unknown model format `{other}`"))),
        }
    }
}

pub fn export(model: &MilpModel, format: ModelFormat) -> Result<String> {
    match format {
        ModelFormat::Lp => to_lp(model),
        ModelFormat::Mps => to_mps(model),
    }
}

const LP_WIDTH: usize = 78;

/// Appends `pieces` to `out` after `head`, wrapping before a piece once a line
/// would pass [`LP_WIDTH`]. Continuation lines are indented.
fn wrap(out: &mut String, head: &str, pieces: &[String]) {
    let mut line = format!(" {head}");
    for p in pieces {
        if line.len() + 1 + p.len() > LP_WIDTH && !line.trim().is_empty() {
            out.push_str(&line);
            out.push('\n');
            line = String::from("   ");
        }
        line.push(' ');
        line.push_str(p);
    }
    out.push_str(&line);
    out.push('\n');
}

fn lp_terms(model: &MilpModel, e: &LinExpr) -> Vec<String> {
    let mut out = Vec::new();
    for (i, &(v, c)) in e.terms().iter().enumerate() {
        let name = &model.variables[v].name;
        let sign = if c < 0 { "-" } else { "+" };
        let mag = c.unsigned_abs();
        let body = if mag == 1 { name.clone() } else { format!("{mag} {name}") };
        out.push(if i == 0 && c > 0 { body } else { format!("{sign} {body}") });
    }
    if out.is_empty() {
        out.push("0".to_string());
    }
    out
}

pub fn to_lp(model: &MilpModel) -> Result<String> {
    model.validate()?;
    let mut out = String::new();
    let _ = writeln!(out, "\\ {}", if model.name.is_empty() { "model" } else { &model.name });
    out.push_str("Minimize\n");
    wrap(&mut out, "obj:", &lp_terms(model, &model.objective));
    out.push_str("Subject To\n");
    for c in &model.constraints {
        let mut pieces = lp_terms(model, &c.expr);
        pieces.push(c.relation.to_string());
        pieces.push(c.rhs.to_string());
        wrap(&mut out, &format!("{}:", c.name), &pieces);
    }
    out.push_str("Bounds\n");
    for v in &model.variables {
        let _ = writeln!(out, " {} <= {} <= {}", v.lower, v.name, v.upper);
    }
    for (section, kind) in [("Generals", VarKind::Integer), ("Binaries", VarKind::Binary)] {
        let names: Vec<String> = model.variables.iter().filter(|v| v.kind == kind).map(|v| v.name.clone()).collect();
        if !names.is_empty() {
            out.push_str(section);
            out.push('\n');
            let mut line = String::new();
            for n in names {
                if !line.is_empty() && line.len() + 1 + n.len() > LP_WIDTH {
                    let _ = writeln!(out, "{line}");
                    line.clear();
                }
                line.push(' ');
                line.push_str(&n);
            }
            let _ = writeln!(out, "{line}");
        }
    }
    out.push_str("End\n");
    Ok(out)
}

/// MPS in the fixed-field column layout. Fields are widened past the classic
/// eight characters when a name is longer, so readers should split on
/// whitespace (free MPS), which every mainstream solver accepts.
pub fn to_mps(model: &MilpModel) -> Result<String> {
    model.validate()?;
    let w = model
        .variables
        .iter()
        .map(|v| v.name.len())
        .chain(model.constraints.iter().map(|c| c.name.len()))
        .chain([8])
        .max()
        .unwrap_or(8);
    let mut out = String::new();
    let _ = writeln!(out, "NAME          {}", if model.name.is_empty() { "model" } else { &model.name });
    out.push_str("ROWS\n");
    out.push_str(" N  obj\n");
    for c in &model.constraints {
        let tag = match c.relation {
            Relation::Le => 'L',
            Relation::Eq => 'E',
            Relation::Ge => 'G',
        };
        let _ = writeln!(out, " {tag}  {}", c.name);
    }

    let mut columns: Vec<Vec<(&str, i64)>> = vec![Vec::new(); model.variables.len()];
    for &(v, c) in model.objective.terms() {
        columns[v].push(("obj", c));
    }
    for c in &model.constraints {
        for &(v, coef) in c.expr.terms() {
            columns[v].push((&c.name, coef));
        }
    }

    out.push_str("COLUMNS\n");
    let mut in_marker = false;
    let mut marker = 0;
    for (i, v) in model.variables.iter().enumerate() {
        let integral = v.kind == VarKind::Integer || v.kind == VarKind::Binary;
        if integral && !in_marker {
            let _ = writeln!(out, "    {:<w$}  'MARKER'                 'INTORG'", format!("MARKER{marker:02}"));
            in_marker = true;
        }
        if columns[i].is_empty() {
            columns[i].push(("obj", 0));
        }
        for (row, coef) in &columns[i] {
            let _ = writeln!(out, "    {:<w$}  {:<w$}  {coef}", v.name, row);
        }
        let next_integral = model.variables.get(i + 1).is_some_and(|n| n.kind == VarKind::Integer || n.kind == VarKind::Binary);
        if in_marker && !next_integral {
            let _ = writeln!(out, "    {:<w$}  'MARKER'                 'INTEND'", format!("MARKER{marker:02}"));
            in_marker = false;
            marker += 1;
        }
    }

    out.push_str("RHS\n");
    for c in model.constraints.iter().filter(|c| c.rhs != 0) {
        let _ = writeln!(out, "    {:<w$}  {:<w$}  {}", "RHS", c.name, c.rhs);
    }
    out.push_str("BOUNDS\n");
    for v in &model.variables {
        if v.kind == VarKind::Binary {
            let _ = writeln!(out, " BV {:<w$}  {}", "BND", v.name);
        } else {
            let _ = writeln!(out, " LO {:<w$}  {:<w$}  {}", "BND", v.name, v.lower);
            let _ = writeln!(out, " UP {:<w$}  {:<w$}  {}", "BND", v.name, v.upper);
        }
    }
    out.push_str("ENDATA\n");
    Ok(out)
}
