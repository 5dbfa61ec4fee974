//! Readers for the LP and MPS dialects written by the exporters: integer
//! coefficients, every variable bounded, minimisation only.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::milp::export::ModelFormat;
use crate::milp::model::{LinExpr, MilpModel, Relation, VarKind};

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn int(tok: &str, line: usize) -> Result<i64> {
    tok.parse().map_err(|_| perr(line, format!("expected an integer, found `{tok}`")))
}

pub fn parse_model(text: &str, format: ModelFormat) -> Result<MilpModel> {
    match format {
        ModelFormat::Lp => parse_lp(text),
        ModelFormat::Mps => parse_mps(text),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum LpSection {
    Preamble,
    Objective,
    Rows,
    Bounds,
    Generals,
    Binaries,
    Done,
}

fn lp_header(line: &str) -> Option<LpSection> {
    match line.trim().to_ascii_lowercase().as_str() {
        "minimize" | "minimise" | "min" => Some(LpSection::Objective),
        "subject to" | "such that" | "st" | "s.t." => Some(LpSection::Rows),
        "bounds" => Some(LpSection::Bounds),
        "generals" | "general" | "gen" => Some(LpSection::Generals),
        "binaries" | "binary" | "bin" => Some(LpSection::Binaries),
        "end" => Some(LpSection::Done),
        _ => None,
    }
}

struct PendingRow {
    name: String,
    line: usize,
    terms: Vec<(String, i64)>,
    relation: Option<Relation>,
    rhs: Option<i64>,
}

/// Folds `± [coef] name` token sequences into terms.
fn push_tokens(row: &mut PendingRow, toks: &[(String, usize)]) -> Result<()> {
    let mut sign = 1i64;
    let mut coef: Option<i64> = None;
    for (tok, line) in toks {
        let line = *line;
        if row.relation.is_some() {
            if row.rhs.is_some() {
                return Err(perr(line, format!("unexpected `{tok}` after right-hand side")));
            }
            row.rhs = Some(int(tok, line)?);
            continue;
        }
        match tok.as_str() {
            "+" => sign = 1,
            "-" => sign = -1,
            "<=" | "=<" => row.relation = Some(Relation::Le),
            ">=" | "=>" => row.relation = Some(Relation::Ge),
            "=" => row.relation = Some(Relation::Eq),
            t if t.parse::<i64>().is_ok() => coef = Some(int(t, line)?),
            name => {
                row.terms.push((name.to_string(), sign * coef.unwrap_or(1)));
                sign = 1;
                coef = None;
            }
        }
    }
    Ok(())
}

/// Reads a CPLEX LP file. Variables are declared in `Bounds` order, which is
/// how the exporter lists them; variables appearing only in rows are
/// appended in order of first use.
pub fn parse_lp(text: &str) -> Result<MilpModel> {
    let mut model = MilpModel::new("");
    let mut section = LpSection::Preamble;
    let mut objective: Option<PendingRow> = None;
    let mut rows: Vec<PendingRow> = Vec::new();
    let mut bounds: Vec<(String, i64, i64)> = Vec::new();
    let mut generals = Vec::new();
    let mut binaries = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if let Some(rest) = raw.trim_start().strip_prefix('\\') {
            if model.name.is_empty() && section == LpSection::Preamble {
                model.name = rest.trim().to_string();
            }
            continue;
        }
        if raw.trim().is_empty() {
            continue;
        }
        if let Some(s) = lp_header(raw) {
            section = s;
            continue;
        }
        let toks: Vec<String> = raw.split_whitespace().map(str::to_string).collect();
        match section {
            LpSection::Preamble | LpSection::Done => return Err(perr(line, "text outside a section")),
            LpSection::Objective | LpSection::Rows => {
                let mut rest: &[String] = &toks;
                let mut tagged = Vec::new();
                while let Some(first) = rest.first() {
                    if let Some(name) = first.strip_suffix(':') {
                        let row = PendingRow { name: name.to_string(), line, terms: Vec::new(), relation: None, rhs: None };
                        if section == LpSection::Objective {
                            if objective.is_some() {
                                return Err(perr(line, "more than one objective"));
                            }
                            objective = Some(row);
                        } else {
                            rows.push(row);
                        }
                        rest = &rest[1..];
                        continue;
                    }
                    tagged.push((first.clone(), line));
                    rest = &rest[1..];
                }
                let target = if section == LpSection::Objective { objective.as_mut() } else { rows.last_mut() };
                let target = target.ok_or_else(|| perr(line, "row without a name"))?;
                push_tokens(target, &tagged)?;
            }
            LpSection::Bounds => match toks.as_slice() {
                [lo, a, name, b, hi] if a == "<=" && b == "<=" => bounds.push((name.clone(), int(lo, line)?, int(hi, line)?)),
                _ => return Err(perr(line, "expected `lower <= name <= upper`")),
            },
            LpSection::Generals => generals.extend(toks),
            LpSection::Binaries => binaries.extend(toks),
        }
    }
    if section != LpSection::Done {
        return Err(perr(text.lines().count(), "missing End"));
    }

    let mut index: HashMap<String, usize> = HashMap::new();
    for (name, lo, hi) in bounds {
        if index.contains_key(&name) {
            return Err(Error::NameCollision(name));
        }
        index.insert(name.clone(), model.variables.len());
        model.add_variable(name, VarKind::Integer, lo, hi);
    }
    let mut lookup = |model: &mut MilpModel, name: &str| -> usize {
        *index.entry(name.to_string()).or_insert_with(|| model.add_variable(name.to_string(), VarKind::Integer, 0, i64::MAX))
    };
    let mut resolve = |model: &mut MilpModel, row: &PendingRow| -> LinExpr {
        let mut e = LinExpr::new();
        for (name, c) in &row.terms {
            e.add(lookup(model, name), *c);
        }
        e
    };
    if let Some(obj) = &objective {
        if obj.relation.is_some() {
            return Err(perr(obj.line, "objective has a relation"));
        }
        model.objective = resolve(&mut model, obj);
    }
    for row in &rows {
        let (Some(rel), Some(rhs)) = (row.relation, row.rhs) else {
            return Err(perr(row.line, format!("row {} has no relation or right-hand side", row.name)));
        };
        let expr = resolve(&mut model, row);
        model.add_constraint(row.name.clone(), expr, rel, rhs);
    }
    for name in &binaries {
        let i = model.variable_index(name).ok_or_else(|| Error::UnknownVertex(name.clone()))?;
        model.variables[i].kind = VarKind::Binary;
    }
    for name in &generals {
        model.variable_index(name).ok_or_else(|| Error::UnknownVertex(name.clone()))?;
    }
    Ok(model)
}

/// Reads MPS split on whitespace, so both strict fixed-field files and the
/// widened fields written by the exporter are accepted.
pub fn parse_mps(text: &str) -> Result<MilpModel> {
    #[derive(PartialEq)]
    enum Sec {
        None,
        Rows,
        Columns,
        Rhs,
        Bounds,
        End,
    }
    let mut model = MilpModel::new("");
    let mut sec = Sec::None;
    let mut objective_row: Option<String> = None;
    let mut row_index: HashMap<String, usize> = HashMap::new();
    let mut rows: Vec<(String, Relation, LinExpr, i64)> = Vec::new();
    let mut var_index: HashMap<String, usize> = HashMap::new();
    let mut objective = LinExpr::new();
    let mut integral = false;
    let mut bounded: Vec<bool> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() || raw.starts_with('*') {
            continue;
        }
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if !raw.starts_with(' ') && !raw.starts_with('\t') {
            sec = match toks[0] {
                "NAME" => {
                    model.name = toks.get(1).copied().unwrap_or("").to_string();
                    Sec::None
                }
                "ROWS" => Sec::Rows,
                "COLUMNS" => Sec::Columns,
                "RHS" => Sec::Rhs,
                "BOUNDS" => Sec::Bounds,
                "RANGES" => return Err(perr(line, "RANGES are not supported")),
                "ENDATA" => Sec::End,
                other => return Err(perr(line, format!("unknown section `{other}`"))),
            };
            continue;
        }
        match sec {
            Sec::Rows => {
                let [kind, name] = toks[..] else { return Err(perr(line, "expected `type name`")) };
                let rel = match kind {
                    "N" => {
                        if objective_row.is_none() {
                            objective_row = Some(name.to_string());
                        }
                        continue;
                    }
                    "L" => Relation::Le,
                    "G" => Relation::Ge,
                    "E" => Relation::Eq,
                    other => return Err(perr(line, format!("unknown row type `{other}`"))),
                };
                if row_index.insert(name.to_string(), rows.len()).is_some() {
                    return Err(Error::NameCollision(name.to_string()));
                }
                rows.push((name.to_string(), rel, LinExpr::new(), 0));
            }
            Sec::Columns => {
                if toks.len() >= 3 && toks[1] == "'MARKER'" {
                    integral = match toks[2] {
                        "'INTORG'" => true,
                        "'INTEND'" => false,
                        other => return Err(perr(line, format!("unknown marker `{other}`"))),
                    };
                    continue;
                }
                if toks.len() != 3 && toks.len() != 5 {
                    return Err(perr(line, "expected `column row value [row value]`"));
                }
                let col = toks[0];
                let v = match var_index.get(col) {
                    Some(&v) => v,
                    None => {
                        // continuous columns would need real arithmetic
                        if !integral {
                            return Err(perr(line, format!("column {col} is not integral")));
                        }
                        let v = model.add_variable(col.to_string(), VarKind::Integer, 0, i64::MAX);
                        var_index.insert(col.to_string(), v);
                        bounded.push(false);
                        v
                    }
                };
                for pair in toks[1..].chunks(2) {
                    let coef = int(pair[1], line)?;
                    if Some(pair[0]) == objective_row.as_deref() {
                        objective.add(v, coef);
                    } else {
                        let r = *row_index.get(pair[0]).ok_or_else(|| perr(line, format!("unknown row `{}`", pair[0])))?;
                        rows[r].2.add(v, coef);
                    }
                }
            }
            Sec::Rhs => {
                if toks.len() != 3 && toks.len() != 5 {
                    return Err(perr(line, "expected `set row value [row value]`"));
                }
                for pair in toks[1..].chunks(2) {
                    let r = *row_index.get(pair[0]).ok_or_else(|| perr(line, format!("unknown row `{}`", pair[0])))?;
                    rows[r].3 = int(pair[1], line)?;
                }
            }
            Sec::Bounds => {
                let find = |name: &str| var_index.get(name).copied().ok_or_else(|| perr(line, format!("unknown column `{name}`")));
                match toks[..] {
                    ["BV", _, name] => {
                        let v = find(name)?;
                        let var = &mut model.variables[v];
                        var.kind = VarKind::Binary;
                        var.lower = 0;
                        var.upper = 1;
                        bounded[v] = true;
                    }
                    ["LO", _, name, val] => {
                        let v = find(name)?;
                        model.variables[v].lower = int(val, line)?;
                    }
                    ["UP", _, name, val] => {
                        let v = find(name)?;
                        model.variables[v].upper = int(val, line)?;
                        bounded[v] = true;
                    }
                    ["FX", _, name, val] => {
                        let v = find(name)?;
                        let x = int(val, line)?;
                        model.variables[v].lower = x;
                        model.variables[v].upper = x;
                        bounded[v] = true;
                    }
                    _ => return Err(perr(line, "unsupported bound")),
                }
            }
            Sec::None | Sec::End => return Err(perr(line, "data outside a section")),
        }
    }
    if sec != Sec::End {
        return Err(perr(text.lines().count(), "missing ENDATA"));
    }
    if let Some(v) = bounded.iter().position(|b| !b) {
        return Err(Error::InvalidArgument(format!("column {} has no upper bound", model.variables[v].name)));
    }
    model.objective = objective;
    for (name, rel, expr, rhs) in rows {
        model.add_constraint(name, expr, rel, rhs);
    }
    Ok(model)
}
