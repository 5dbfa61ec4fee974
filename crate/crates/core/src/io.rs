//! Graph ingestion: whitespace edge lists, DIMACS `p edge`, and Matrix Market
//! `coordinate pattern symmetric` files.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
    MatrixMarket,
}

impl GraphFormat {
    /// Guess from a file extension; anything unknown is an edge list.
    pub fn from_extension(path: &str) -> Self {
        let lower = path.to_ascii_lowercase();
        if lower.ends_with(".dimacs") || lower.ends_with(".col") || lower.ends_with(".dim") {
            GraphFormat::Dimacs
        } else if lower.ends_with(".mtx") || lower.ends_with(".mm") {
            GraphFormat::MatrixMarket
        } else {
            GraphFormat::EdgeList
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            "matrixmarket" | "mm" | "mtx" => Ok(GraphFormat::MatrixMarket),
            other => Err(Error::InvalidArgument(format!("unknown graph format `{other}`"))),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn load_graph(source: &str, format: GraphFormat) -> Result<Graph> {
    let g = match format {
        GraphFormat::EdgeList => parse_edgelist(source)?,
        GraphFormat::Dimacs => parse_dimacs(source)?,
        GraphFormat::MatrixMarket => parse_matrix_market(source)?,
    };
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(g)
}

fn parse_edgelist(source: &str) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    for (i, raw) in source.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [v] => {
                b.vertex(v);
            }
            [u, v] => b.labeled_edge(u, v),
            _ => return Err(parse_err(i + 1, format!("expected `u v`, got `{line}`"))),
        }
    }
    Ok(b.build())
}

fn parse_index(token: &str, n: usize, line: usize) -> Result<usize> {
    let v: usize = token.parse().map_err(|_| parse_err(line, format!("bad vertex `{token}`")))?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn numbered_builder(n: usize) -> GraphBuilder {
    let mut b = GraphBuilder::new();
    for v in 1..=n {
        b.vertex(&v.to_string());
    }
    b
}

fn parse_dimacs(source: &str) -> Result<Graph> {
    let mut builder: Option<(GraphBuilder, usize)> = None;
    for (i, raw) in source.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["p", kind, n, _m] if *kind == "edge" || *kind == "col" => {
                if builder.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                let n: usize = n.parse().map_err(|_| parse_err(lineno, "bad vertex count"))?;
                builder = Some((numbered_builder(n), n));
            }
            ["e", u, v] => {
                let (b, n) = builder.as_mut().ok_or_else(|| parse_err(lineno, "edge before `p edge` line"))?;
                let u = parse_index(u, *n, lineno)?;
                let v = parse_index(v, *n, lineno)?;
                b.edge(u, v);
            }
            _ => return Err(parse_err(lineno, format!("unrecognised line `{line}`"))),
        }
    }
    builder.map(|(b, _)| b.build()).ok_or_else(|| parse_err(0, "missing `p edge` line"))
}

fn parse_matrix_market(source: &str) -> Result<Graph> {
    let mut lines = source.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let fields: Vec<String> = header.split_whitespace().map(str::to_ascii_lowercase).collect();
    let expected = ["%%matrixmarket", "matrix", "coordinate", "pattern", "symmetric"];
    if fields.len() != expected.len() || fields.iter().zip(expected).any(|(a, b)| a != b) {
        return Err(parse_err(1, "only `%%MatrixMarket matrix coordinate pattern symmetric` is supported"));
    }
    let mut builder: Option<(GraphBuilder, usize)> = None;
    for (i, raw) in lines {
        let line = raw.trim();
        let lineno = i + 1;
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match (&mut builder, tokens.as_slice()) {
            (None, [rows, cols, _nnz]) => {
                let rows: usize = rows.parse().map_err(|_| parse_err(lineno, "bad row count"))?;
                let cols: usize = cols.parse().map_err(|_| parse_err(lineno, "bad column count"))?;
                if rows != cols {
                    return Err(parse_err(lineno, "adjacency matrix must be square"));
                }
                builder = Some((numbered_builder(rows), rows));
            }
            (Some((b, n)), [r, c]) => {
                let u = parse_index(r, *n, lineno)?;
                let v = parse_index(c, *n, lineno)?;
                b.edge(u, v);
            }
            _ => return Err(parse_err(lineno, format!("unrecognised line `{line}`"))),
        }
    }
    builder.map(|(b, _)| b.build()).ok_or_else(|| parse_err(0, "missing size line"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgelist_path() {
        let g = load_graph("a b\nb c\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.labels(), &["a", "b", "c"]);
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
    }

    #[test]
    fn edgelist_cleans_loops_and_multi_edges() {
        let g = load_graph("a a\na b\na b\n", GraphFormat::EdgeList).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn edgelist_comments_and_errors() {
        let g = load_graph("# header\nx y # trailing\n\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.m(), 1);
        let err = load_graph("a b\na b c\n", GraphFormat::EdgeList).unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, message: "expected `u v`, got `a b c`".into() });
        assert_eq!(load_graph("# nothing\n", GraphFormat::EdgeList), Err(Error::EmptyGraph));
    }

    #[test]
    fn dimacs_triangle() {
        let g = load_graph("c tri\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::Dimacs).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        let bad = load_graph("p edge 3 1\ne 1 4\n", GraphFormat::Dimacs).unwrap_err();
        assert!(matches!(bad, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn matrix_market_pattern() {
        let src = "%%MatrixMarket matrix coordinate pattern symmetric\n% c\n4 4 3\n2 1\n3 2\n4 3\n";
        let g = load_graph(src, GraphFormat::MatrixMarket).unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        let real = "%%MatrixMarket matrix coordinate real general\n2 2 1\n1 2 1.0\n";
        assert!(load_graph(real, GraphFormat::MatrixMarket).is_err());
    }
}
