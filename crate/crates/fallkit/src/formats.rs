//! Text formats: DIMACS edge and CNF files, coloring files, JSON graphs.
//!
//! DIMACS files are 1-indexed on disk; everything in memory is 0-indexed.

use std::fmt::Write as _;

use fallkit_core::reduce::CnfFormula;
use fallkit_core::{Coloring, EdgeColoring, Graph, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p {0}` header")]
    MissingHeader(&'static str),
    #[error(transparent)]
    Core(#[from] fallkit_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// A parsed file plus anything worth telling the user that did not stop the
/// parse.
#[derive(Debug, Clone, PartialEq)]
pub struct Parsed<T> {
    pub value: T,
    pub warnings: Vec<String>,
}

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, FormatError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

/// Reads a DIMACS edge file: `p edge n m` then `e u v` lines. Repeated
/// edges collapse; a header `m` that disagrees with the edge lines is only a
/// warning.
pub fn parse_dimacs(text: &str) -> Result<Parsed<Graph>, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(line, "second `p` line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => return Err(syntax(line, format!("expected `p edge`, found {other:?}"))),
                }
                let n = parse_num(toks.next(), line, "vertex count")?;
                let m = parse_num(toks.next(), line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or(FormatError::MissingHeader("edge"))?;
                let u: usize = parse_num(toks.next(), line, "endpoint")?;
                let v: usize = parse_num(toks.next(), line, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(syntax(line, format!("vertex {x} out of range 1..={n}")));
                    }
                }
                if u == v {
                    return Err(syntax(line, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) if other.starts_with('c') => {}
            Some(other) => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingHeader("edge"))?;
    let lines = edges.len();
    let g = Graph::new(n, edges)?;
    let mut warnings = Vec::new();
    if lines != m || g.m() != m {
        warnings.push(format!(
            "header declares {m} edges; file lists {lines} edge lines giving {} distinct edges",
            g.m()
        ));
    }
    Ok(Parsed { value: g, warnings })
}

/// Writes `p edge n m` and one `e u v` line per edge in sorted order.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Reads a DIMACS CNF file. Clauses end with `0` and may span lines; a `%`
/// line ends the clause list.
pub fn parse_cnf(text: &str) -> Result<Parsed<CnfFormula>, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            let mut toks = trimmed.split_whitespace().skip(1);
            if toks.next() != Some("cnf") {
                return Err(syntax(line, "expected `p cnf`"));
            }
            let n = parse_num(toks.next(), line, "variable count")?;
            let m = parse_num(toks.next(), line, "clause count")?;
            header = Some((n, m));
            continue;
        }
        if header.is_none() {
            return Err(FormatError::MissingHeader("cnf"));
        }
        for tok in trimmed.split_whitespace() {
            let lit: i32 = parse_num(Some(tok), line, "literal")?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingHeader("cnf"))?;
    if !current.is_empty() {
        clauses.push(current);
    }
    let mut warnings = Vec::new();
    if clauses.len() != m {
        warnings.push(format!("header declares {m} clauses; file lists {}", clauses.len()));
    }
    Ok(Parsed {
        value: CnfFormula::new(n, clauses)?,
        warnings,
    })
}

pub fn write_cnf(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.num_vars(), phi.clauses().len());
    for [a, b, c] in phi.clauses() {
        writeln!(out, "{a} {b} {c} 0").unwrap();
    }
    out
}

/// Reads `v c` lines (0-indexed vertex, 1-indexed color). Every vertex of
/// `0..n` must appear exactly once. `k` defaults to the largest color used.
pub fn parse_coloring(text: &str, n: usize, k: Option<usize>) -> Result<Coloring, FormatError> {
    let mut colors = vec![0usize; n];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('c') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let v: usize = parse_num(toks.next(), line, "vertex")?;
        let c: usize = parse_num(toks.next(), line, "color")?;
        if toks.next().is_some() {
            return Err(syntax(line, "expected `vertex color`"));
        }
        if v >= n {
            return Err(syntax(line, format!("vertex {v} out of range 0..{n}")));
        }
        if c == 0 {
            return Err(syntax(line, "colors start at 1"));
        }
        if colors[v] != 0 {
            return Err(syntax(line, format!("vertex {v} colored twice")));
        }
        colors[v] = c;
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(FormatError::Core(fallkit_core::Error::MalformedColoring(format!(
            "vertex {v} has no color"
        ))));
    }
    let k = k.unwrap_or_else(|| colors.iter().copied().max().unwrap_or(0));
    Ok(Coloring::new(k, colors)?)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, col) in c.colors().iter().enumerate() {
        writeln!(out, "{v} {col}").unwrap();
    }
    out
}

/// Edge colorings use the same layout keyed by edge index in sorted edge
/// order.
pub fn parse_edge_coloring(text: &str, m: usize, k: Option<usize>) -> Result<EdgeColoring, FormatError> {
    let c = parse_coloring(text, m, k)?;
    Ok(EdgeColoring::new(c.k(), c.colors().to_vec())?)
}

pub fn write_edge_coloring(h: &EdgeColoring) -> String {
    let mut out = String::new();
    for (e, col) in h.colors().iter().enumerate() {
        writeln!(out, "{e} {col}").unwrap();
    }
    out
}

/// Truth assignment as signed DIMACS literals (`1 -2 3`), optionally with
/// `v` prefixes and a trailing `0` as printed by SAT solvers.
pub fn parse_assignment(text: &str, num_vars: usize) -> Result<Vec<bool>, FormatError> {
    let mut tau = vec![None; num_vars];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('s') {
            continue;
        }
        for tok in trimmed.split_whitespace().filter(|t| *t != "v") {
            let lit: i64 = parse_num(Some(tok), line, "literal")?;
            if lit == 0 {
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > num_vars {
                return Err(syntax(line, format!("variable {var} out of range 1..={num_vars}")));
            }
            tau[var - 1] = Some(lit > 0);
        }
    }
    Ok(tau.into_iter().map(|v| v.unwrap_or(false)).collect())
}

pub fn write_assignment(tau: &[bool]) -> String {
    let lits: Vec<String> = tau
        .iter()
        .enumerate()
        .map(|(i, &t)| if t { format!("{}", i + 1) } else { format!("-{}", i + 1) })
        .collect();
    format!("{} 0\n", lits.join(" "))
}

/// Two lines of 0-indexed vertices: the first set, then the second.
pub fn parse_set_pair(text: &str, n: usize) -> Result<(VertexSet, VertexSet), FormatError> {
    let mut sets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.starts_with('#') {
            continue;
        }
        let members = trimmed
            .split_whitespace()
            .map(|t| parse_num::<usize>(Some(t), line, "vertex"))
            .collect::<Result<Vec<_>, _>>()?;
        sets.push(VertexSet::from_vertices(n, members)?);
        if sets.len() == 2 {
            break;
        }
    }
    match <[VertexSet; 2]>::try_from(sets) {
        Ok([a, b]) => Ok((a, b)),
        Err(_) => Err(syntax(0, "expected two lines of vertices")),
    }
}

pub fn write_set_pair(a: &VertexSet, b: &VertexSet) -> String {
    let line = |s: &VertexSet| {
        s.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!("{}\n{}\n", line(a), line(b))
}

/// `{n, edges: [[u, v], ...], labels?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = FormatError;

    fn try_from(j: GraphJson) -> Result<Self, FormatError> {
        let g = Graph::new(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))?;
        Ok(match j.labels {
            Some(labels) => g.with_labels(labels)?,
            None => g,
        })
    }
}

pub fn parse_graph_json(text: &str) -> Result<Graph, FormatError> {
    serde_json::from_str::<GraphJson>(text)?.try_into()
}

pub fn write_graph_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&GraphJson::from(g)).expect("graph serializes") + "\n"
}

/// Picks the graph reader from the text: JSON if it starts with `{`,
/// DIMACS otherwise.
pub fn parse_graph(text: &str) -> Result<Parsed<Graph>, FormatError> {
    if text.trim_start().starts_with('{') {
        Ok(Parsed {
            value: parse_graph_json(text)?,
            warnings: Vec::new(),
        })
    } else {
        parse_dimacs(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fallkit_core::graph::{complete, petersen};

    #[test]
    fn dimacs_examples() {
        let k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3").unwrap();
        assert_eq!(k3.value, complete(3).unwrap());
        assert!(k3.warnings.is_empty());
        let e2 = parse_dimacs("p edge 2 0").unwrap().value;
        assert_eq!((e2.n(), e2.m()), (2, 0));
        let err = parse_dimacs("p edge 2 1\ne 1 3").unwrap_err();
        assert!(err.to_string().contains("out of range"), "{err}");
    }

    #[test]
    fn dimacs_edge_cases() {
        assert!(matches!(parse_dimacs("e 1 2"), Err(FormatError::MissingHeader(_))));
        assert!(parse_dimacs("p edge 3 1\ne 2 2").is_err());
        let dup = parse_dimacs("c hi\np edge 3 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(dup.value.m(), 1);
        assert_eq!(dup.warnings.len(), 1);
    }

    #[test]
    fn dimacs_round_trip() {
        let p = petersen();
        let text = write_dimacs(&p);
        assert_eq!(parse_dimacs(&text).unwrap().value, p);
        assert_eq!(write_dimacs(&parse_dimacs(&text).unwrap().value), text);
    }

    #[test]
    fn json_round_trip() {
        let g = complete(3).unwrap().with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let text = write_graph_json(&g);
        let back = parse_graph_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.label(1), Some("b"));
        assert_eq!(parse_graph(&text).unwrap().value, g);
    }

    #[test]
    fn cnf_reading() {
        let text = "c example\np cnf 5 3\n1 2 3 0\n-1 -3\n-4 0\n1 4 5 0\n%\n0\n";
        let phi = parse_cnf(text).unwrap().value;
        assert_eq!(phi.clauses(), &[[1, 2, 3], [-1, -3, -4], [1, 4, 5]]);
        assert!(phi.is_monotone());
        assert_eq!(parse_cnf(&write_cnf(&phi)).unwrap().value, phi);
        assert!(parse_cnf("p cnf 2 1\n1 2 0\n").is_err());
    }

    #[test]
    fn coloring_files() {
        let c = parse_coloring("0 1\n1 2\n2 3\n3 1\n4 2\n5 3\n", 6, None).unwrap();
        assert_eq!(c.k(), 3);
        assert_eq!(parse_coloring(&write_coloring(&c), 6, Some(3)).unwrap(), c);
        assert!(parse_coloring("0 1\n", 2, None).is_err());
        assert!(parse_coloring("0 1\n0 2\n", 1, None).is_err());
        assert!(parse_coloring("0 0\n", 1, None).is_err());
        assert!(parse_coloring("0 4\n", 1, Some(3)).is_err());
    }

    #[test]
    fn assignments_and_pairs() {
        assert_eq!(parse_assignment("v 1 -2 3 0\n", 3).unwrap(), vec![true, false, true]);
        assert_eq!(parse_assignment("-1\n", 2).unwrap(), vec![false, false]);
        let tau = vec![true, false];
        assert_eq!(parse_assignment(&write_assignment(&tau), 2).unwrap(), tau);
        let (a, b) = parse_set_pair("0 2\n1 3\n", 4).unwrap();
        assert_eq!(write_set_pair(&a, &b), "0 2\n1 3\n");
        assert!(parse_set_pair("0 9\n1\n", 4).is_err());
    }
}
