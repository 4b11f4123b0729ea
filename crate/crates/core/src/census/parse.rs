//! Graph files: one graph per line, `name: u1 v1 u2 v2 ...`, `#` comments.

use std::collections::HashSet;
use std::path::Path;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphRecord {
    pub name: String,
    /// Repeats are parallel edges, `(u, u)` is a self-loop.
    pub edges: Vec<(usize, usize)>,
    /// 1-based source line, 0 for records built in code.
    pub line: usize,
}

impl GraphRecord {
    pub fn new(name: impl Into<String>, g: &Multigraph) -> Self {
        GraphRecord { name: name.into(), edges: g.edges(), line: 0 }
    }

    /// Vertices are `0..=max label`.
    pub fn graph(&self) -> Result<Multigraph> {
        let n = self.edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Multigraph::from_edges(n, &self.edges)
    }

    /// The line this record would be parsed from.
    pub fn to_line(&self) -> String {
        let mut s = format!("{}:", self.name);
        for &(u, v) in &self.edges {
            s.push_str(&format!(" {u} {v}"));
        }
        s
    }
}

fn parse_line(line: &str, number: usize) -> Result<Option<GraphRecord>> {
    let body = line.split('#').next().unwrap_or("").trim();
    if body.is_empty() {
        return Ok(None);
    }
    let err = |message: String| Error::Parse { line: number, message };
    let (name, rest) = body.split_once(':').ok_or_else(|| err("missing `:` after the name".into()))?;
    let name = name.trim();
    if name.is_empty() || name.contains(char::is_whitespace) {
        return Err(err(format!("bad graph name `{name}`")));
    }
    let labels = rest
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| err(format!("`{t}` is not a vertex label"))))
        .collect::<Result<Vec<_>>>()?;
    if labels.is_empty() {
        return Err(err("no edges".into()));
    }
    if labels.len() % 2 == 1 {
        return Err(err("odd number of endpoints".into()));
    }
    let edges = labels.chunks(2).map(|p| (p[0], p[1])).collect();
    Ok(Some(GraphRecord { name: name.to_string(), edges, line: number }))
}

/// Parses every line, collecting the failures instead of stopping at the
/// first one. A repeated name is an error on its later line.
pub fn parse_graphs_lenient(text: &str) -> (Vec<GraphRecord>, Vec<Error>) {
    let mut out = Vec::new();
    let mut errors = Vec::new();
    let mut names = HashSet::new();
    for (i, line) in text.lines().enumerate() {
        match parse_line(line, i + 1) {
            Ok(Some(r)) => {
                if names.insert(r.name.clone()) {
                    out.push(r);
                } else {
                    errors.push(Error::DuplicateName { name: r.name, line: i + 1 });
                }
            }
            Ok(None) => {}
            Err(e) => errors.push(e),
        }
    }
    (out, errors)
}

pub fn parse_graphs(text: &str) -> Result<Vec<GraphRecord>> {
    let (records, errors) = parse_graphs_lenient(text);
    match errors.into_iter().next() {
        Some(e) => Err(e),
        None => Ok(records),
    }
}

pub fn parse_graph_file(path: impl AsRef<Path>) -> Result<Vec<GraphRecord>> {
    parse_graphs(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{families, is_isomorphic};

    #[test]
    fn examples() {
        let text = "# comment\nK5: 0 1 0 2 0 3 0 4 1 2 1 3 1 4 2 3 2 4 3 4\n\nL: 0 0  # a loop\n";
        let r = parse_graphs(text).unwrap();
        assert_eq!(r.len(), 2);
        assert!(is_isomorphic(&r[0].graph().unwrap(), &families::complete(5)));
        assert_eq!(r[0].line, 2);
        let l = r[1].graph().unwrap();
        assert_eq!((l.vertex_count(), l.loops(0)), (1, 1));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse_graphs("a: 0 1\nb 0 1\n"), Err(Error::Parse { line: 2, message: "missing `:` after the name".into() }));
        assert!(matches!(parse_graphs("a: 0 1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graphs("a: 0 x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graphs("a:"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(
            parse_graphs("a: 0 1\n# x\na: 1 2\n"),
            Err(Error::DuplicateName { name: "a".into(), line: 3 })
        );
    }

    #[test]
    fn lenient_parse_keeps_good_lines() {
        let (r, e) = parse_graphs_lenient("a: 0 1\nbad\nc: 1 1\n");
        assert_eq!(r.len(), 2);
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn line_round_trip() {
        let rec = GraphRecord::new("oct", &families::octahedron());
        let back = parse_graphs(&rec.to_line()).unwrap();
        assert_eq!(back[0].graph().unwrap(), families::octahedron());
    }
}
