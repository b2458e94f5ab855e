//! DIMACS-style instance files: `p edge n m`, then `e u v` lines and an
//! optional `s v1 v2 ...` root line. Ids are 1-based in the file.

use rootminor::Graph;
use std::collections::BTreeSet;
use std::fmt::Write;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    /// 0-based, ascending.
    pub roots: Option<Vec<usize>>,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        msg: msg.into(),
    })
}

fn parse_id(tok: &str, n: usize, line: usize) -> Result<usize, ParseError> {
    let v: usize = match tok.parse() {
        Ok(v) => v,
        Err(_) => return err(line, format!("'{tok}' is not a vertex id")),
    };
    if v == 0 || v > n {
        return err(line, format!("vertex {v} outside 1..={n}"));
    }
    Ok(v - 1)
}

/// Parses a comma- or whitespace-separated list of 1-based ids.
pub fn parse_id_list(text: &str, n: usize) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    for tok in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        out.push(parse_id(tok, n, 0)?);
    }
    Ok(out)
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    let mut roots: Option<Vec<usize>> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return err(line, "second problem line");
                }
                if toks.len() != 4 || toks[1] != "edge" {
                    return err(line, "expected 'p edge <n> <m>'");
                }
                let (Ok(n), Ok(m)) = (toks[2].parse(), toks[3].parse()) else {
                    return err(line, "n and m must be non-negative integers");
                };
                header = Some((n, m, line));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return err(line, "edge before the problem line");
                };
                if toks.len() != 3 {
                    return err(line, "expected 'e <u> <v>'");
                }
                let (u, v) = (parse_id(toks[1], n, line)?, parse_id(toks[2], n, line)?);
                if u == v {
                    return err(line, format!("self-loop at {}", u + 1));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return err(line, format!("repeated edge {} {}", u + 1, v + 1));
                }
                edges.push((u, v));
            }
            Some("s") => {
                let Some((n, _, _)) = header else {
                    return err(line, "root line before the problem line");
                };
                if roots.is_some() {
                    return err(line, "second root line");
                }
                let mut rs = toks[1..]
                    .iter()
                    .map(|t| parse_id(t, n, line))
                    .collect::<Result<Vec<_>, _>>()?;
                let len = rs.len();
                rs.sort_unstable();
                rs.dedup();
                if rs.len() != len {
                    return err(line, "repeated root");
                }
                roots = Some(rs);
            }
            Some(other) => return err(line, format!("unknown line type '{other}'")),
        }
    }
    let Some((n, m, hline)) = header else {
        return err(text.lines().count().max(1), "missing problem line");
    };
    if edges.len() != m {
        return err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        );
    }
    let graph = Graph::from_edges(n, &edges).map_err(|e| ParseError {
        line: hline,
        msg: e.to_string(),
    })?;
    Ok(Instance { graph, roots })
}

/// Canonical text: header, edges in lexicographic order, then the roots.
pub fn emit_instance(inst: &Instance) -> String {
    let g = &inst.graph;
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    if let Some(roots) = &inst.roots {
        out.push('s');
        for r in roots {
            write!(out, " {}", r + 1).unwrap();
        }
        out.push('\n');
    }
    out
}
