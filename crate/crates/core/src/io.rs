//! Text, JSON and DOT formats for graphs and digraphs.
//!
//! Text format: a header line `n m` followed by `m` lines `u v`. Blank lines
//! and lines starting with `#` are ignored. JSON uses `{"n": .., "edges": ..}`
//! for graphs and `{"n": .., "arcs": ..}` for digraphs, optionally with a
//! `names` array used only for DOT labels. DOT output lists every vertex so
//! isolated vertices survive a round trip through [`parse_graph`].

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::graph::{Digraph, Graph};

/// A malformed document, located by 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }

    fn from_json(err: serde_json::Error) -> Self {
        Self::new(err.line(), err.column(), err.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self, Error> {
        Graph::from_edges(r.n, r.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        Self {
            n: g.vertex_count(),
            edges: g.edges().collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct DigraphRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<DigraphRepr> for Digraph {
    type Error = Error;

    fn try_from(r: DigraphRepr) -> Result<Self, Error> {
        Digraph::from_arcs(r.n, r.arcs)
    }
}

impl From<Digraph> for DigraphRepr {
    fn from(d: Digraph) -> Self {
        Self {
            n: d.vertex_count(),
            arcs: d.arcs().collect(),
        }
    }
}

/// A parsed graph or digraph together with its optional vertex names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labelled<T> {
    pub value: T,
    pub names: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct LabelledRepr {
    n: usize,
    edges: Option<Vec<(usize, usize)>>,
    arcs: Option<Vec<(usize, usize)>>,
    names: Option<Vec<String>>,
}

/// Either kind of document, as told apart by its content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Undirected(Graph),
    Directed(Digraph),
}

/// Parses a graph in text, JSON or DOT form (detected from the first
/// non-blank character).
pub fn parse_graph(input: &str) -> Result<Graph, ParseError> {
    match sniff(input) {
        Syntax::Json => serde_json::from_str(input).map_err(ParseError::from_json),
        Syntax::Dot => match parse_dot(input)? {
            AnyGraph::Undirected(g) => Ok(g),
            AnyGraph::Directed(_) => Err(ParseError::new(1, 1, "expected an undirected graph, found a digraph")),
        },
        Syntax::Text => {
            let (n, pairs) = parse_pairs(input)?;
            build(Graph::from_edges(n, pairs.iter().map(|p| (p.0, p.1))), &pairs)
        }
    }
}

/// Parses a digraph in text, JSON or DOT form.
pub fn parse_digraph(input: &str) -> Result<Digraph, ParseError> {
    match sniff(input) {
        Syntax::Json => serde_json::from_str(input).map_err(ParseError::from_json),
        Syntax::Dot => match parse_dot(input)? {
            AnyGraph::Directed(d) => Ok(d),
            AnyGraph::Undirected(_) => Err(ParseError::new(1, 1, "expected a digraph, found an undirected graph")),
        },
        Syntax::Text => {
            let (n, pairs) = parse_pairs(input)?;
            build(Digraph::from_arcs(n, pairs.iter().map(|p| (p.0, p.1))), &pairs)
        }
    }
}

/// Parses a JSON or DOT document that may hold either kind of graph, keeping
/// vertex names when present. Text input is ambiguous and is read as
/// undirected unless `directed` is set.
pub fn parse_any(input: &str, directed: bool) -> Result<Labelled<AnyGraph>, ParseError> {
    match sniff(input) {
        Syntax::Json => {
            let r: LabelledRepr = serde_json::from_str(input).map_err(ParseError::from_json)?;
            let value = match (r.edges, r.arcs) {
                (Some(edges), None) => Graph::from_edges(r.n, edges).map(AnyGraph::Undirected),
                (None, Some(arcs)) => Digraph::from_arcs(r.n, arcs).map(AnyGraph::Directed),
                _ => return Err(ParseError::new(1, 1, "expected exactly one of \"edges\" or \"arcs\"")),
            }
            .map_err(|e| ParseError::new(1, 1, e.to_string()))?;
            if let Some(names) = &r.names {
                if names.len() != r.n {
                    return Err(ParseError::new(1, 1, format!("expected {} names, found {}", r.n, names.len())));
                }
            }
            Ok(Labelled { value, names: r.names })
        }
        Syntax::Dot => Ok(Labelled {
            value: parse_dot(input)?,
            names: None,
        }),
        Syntax::Text => {
            let value = if directed {
                AnyGraph::Directed(parse_digraph(input)?)
            } else {
                AnyGraph::Undirected(parse_graph(input)?)
            };
            Ok(Labelled { value, names: None })
        }
    }
}

pub fn graph_to_text(g: &Graph) -> String {
    pairs_to_text(g.vertex_count(), g.edges())
}

pub fn digraph_to_text(d: &Digraph) -> String {
    pairs_to_text(d.vertex_count(), d.arcs())
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serialisation is infallible")
}

pub fn digraph_to_json(d: &Digraph) -> String {
    serde_json::to_string(d).expect("digraph serialisation is infallible")
}

pub fn graph_to_dot(g: &Graph, names: Option<&[String]>) -> String {
    write_dot("graph", "--", g.vertex_count(), g.edges(), names)
}

pub fn digraph_to_dot(d: &Digraph, names: Option<&[String]>) -> String {
    write_dot("digraph", "->", d.vertex_count(), d.arcs(), names)
}

fn write_dot(
    kind: &str,
    connector: &str,
    n: usize,
    pairs: impl Iterator<Item = (usize, usize)>,
    names: Option<&[String]>,
) -> String {
    let mut out = format!("{kind} G {{\n");
    for v in 0..n {
        match names.and_then(|ns| ns.get(v)) {
            Some(name) => writeln!(out, "  {v} [label={}];", DotString(name)),
            None => writeln!(out, "  {v};"),
        }
        .unwrap();
    }
    for (u, v) in pairs {
        writeln!(out, "  {u} {connector} {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

struct DotString<'a>(&'a str);

impl fmt::Display for DotString<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('"')?;
        for c in self.0.chars() {
            if c == '"' || c == '\\' {
                f.write_char('\\')?;
            }
            f.write_char(c)?;
        }
        f.write_char('"')
    }
}

enum Syntax {
    Text,
    Json,
    Dot,
}

fn sniff(input: &str) -> Syntax {
    let body = input.trim_start();
    if body.starts_with('{') {
        Syntax::Json
    } else if body.starts_with("graph") || body.starts_with("digraph") || body.starts_with("strict") {
        Syntax::Dot
    } else {
        Syntax::Text
    }
}

/// A pair read from text, with the location of its first token.
struct Located(usize, usize, usize, usize);

fn build<T>(built: Result<T, Error>, pairs: &[Located]) -> Result<T, ParseError> {
    built.map_err(|e| {
        // report the first offending line
        let at = match &e {
            Error::Loop(v) => pairs.iter().find(|p| p.0 == *v && p.1 == *v),
            Error::VertexOutOfRange { vertex, .. } => pairs.iter().find(|p| p.0 == *vertex || p.1 == *vertex),
            Error::DuplicateEdge(u, v) => {
                let mut hits = pairs.iter().filter(|p| (p.0, p.1) == (*u, *v) || (p.1, p.0) == (*u, *v));
                hits.nth(1)
            }
            Error::DuplicateArc(u, v) => pairs.iter().filter(|p| (p.0, p.1) == (*u, *v)).nth(1),
            _ => None,
        };
        let (line, column) = at.map_or((1, 1), |p| (p.2, p.3));
        ParseError::new(line, column, e.to_string())
    })
}

fn parse_pairs(input: &str) -> Result<(usize, Vec<Located>), ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(idx, l)| (idx + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "empty input: expected a header line \"n m\""))?;
    let header = numbers(hline, header, 2)?;
    let (n, m) = (header[0].0, header[1].0);
    let mut pairs = Vec::with_capacity(m);
    for (line, text) in lines {
        if pairs.len() == m {
            let column = text.len() - text.trim_start().len() + 1;
            return Err(ParseError::new(line, column, format!("more than the {m} declared pairs")));
        }
        let nums = numbers(line, text, 2)?;
        pairs.push(Located(nums[0].0, nums[1].0, line, nums[0].1));
    }
    if pairs.len() < m {
        let last = input.lines().count().max(1);
        return Err(ParseError::new(
            last,
            1,
            format!("expected {m} pairs, found {}", pairs.len()),
        ));
    }
    Ok((n, pairs))
}

/// Splits a line into exactly `count` non-negative integers with their columns.
fn numbers(line: usize, text: &str, count: usize) -> Result<Vec<(usize, usize)>, ParseError> {
    let mut out = Vec::with_capacity(count);
    let mut rest = text;
    let mut offset = 0;
    loop {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            break;
        }
        let len = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let token = &trimmed[..len];
        let column = offset + 1;
        if out.len() == count {
            return Err(ParseError::new(line, column, format!("unexpected token {token:?}")));
        }
        let value = token
            .parse::<usize>()
            .map_err(|_| ParseError::new(line, column, format!("expected a non-negative integer, found {token:?}")))?;
        out.push((value, column));
        rest = &trimmed[len..];
        offset += len;
    }
    if out.len() < count {
        return Err(ParseError::new(
            line,
            offset + 1,
            format!("expected {count} integers, found {}", out.len()),
        ));
    }
    Ok(out)
}

fn pairs_to_text(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> String {
    let pairs: Vec<_> = pairs.collect();
    let mut out = format!("{n} {}\n", pairs.len());
    for (u, v) in pairs {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Reads the DOT subset this crate writes: one statement per line, numeric
/// node ids, optional bracketed attributes which are ignored.
fn parse_dot(input: &str) -> Result<AnyGraph, ParseError> {
    let mut directed = None;
    let mut n = 0usize;
    let mut pairs = Vec::new();
    let mut closed = false;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with("//") {
            continue;
        }
        let indent = raw.len() - raw.trim_start().len();
        if directed.is_none() {
            let head = text.trim_start_matches("strict").trim_start();
            directed = Some(if head.starts_with("digraph") {
                true
            } else if head.starts_with("graph") {
                false
            } else {
                return Err(ParseError::new(line, indent + 1, "expected `graph` or `digraph`"));
            });
            if !head.ends_with('{') {
                return Err(ParseError::new(line, raw.len(), "expected `{` at end of header"));
            }
            continue;
        }
        if closed {
            return Err(ParseError::new(line, indent + 1, "content after closing `}`"));
        }
        if text == "}" {
            closed = true;
            continue;
        }
        let stmt = text.strip_suffix(';').unwrap_or(text);
        let stmt = match stmt.find('[') {
            Some(pos) => stmt[..pos].trim_end(),
            None => stmt,
        };
        let connector = if directed == Some(true) { "->" } else { "--" };
        let parse_id = |s: &str, col: usize| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| ParseError::new(line, col, format!("expected a numeric node id, found {:?}", s.trim())))
        };
        match stmt.split_once(connector) {
            Some((a, b)) => {
                let u = parse_id(a, indent + 1)?;
                let v = parse_id(b, indent + a.len() + connector.len() + 1)?;
                n = n.max(u + 1).max(v + 1);
                pairs.push(Located(u, v, line, indent + 1));
            }
            None => {
                let u = parse_id(stmt, indent + 1)?;
                n = n.max(u + 1);
            }
        }
    }
    if !closed {
        return Err(ParseError::new(input.lines().count().max(1), 1, "missing closing `}`"));
    }
    let iter = pairs.iter().map(|p| (p.0, p.1));
    match directed {
        Some(true) => build(Digraph::from_arcs(n, iter), &pairs).map(AnyGraph::Directed),
        Some(false) => build(Graph::from_edges(n, iter), &pairs).map(AnyGraph::Undirected),
        None => Err(ParseError::new(1, 1, "empty DOT document")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_format() {
        let g = parse_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(graph_to_text(&g), "3 2\n0 1\n1 2\n");
        let d = parse_digraph("# comment\n3 2\n\n0 2\n1 2\n").unwrap();
        assert_eq!(d.in_neighbors(2), &[0, 1]);
    }

    #[test]
    fn text_errors_carry_locations() {
        let e = parse_graph("3 2\n0 1\n1 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 1));
        assert!(e.message.contains("loop"));

        let e = parse_graph("3 2\n0 1\n  1 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        assert!(e.message.contains("duplicate"));

        let e = parse_graph("3 1\n0 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));

        let e = parse_graph("3 1\n0 5\n").unwrap_err();
        assert!(e.message.contains("out of range"));

        let e = parse_graph("3 2\n0 1\n").unwrap_err();
        assert!(e.message.contains("expected 2 pairs"));

        let e = parse_graph("3 1\n0 1\n1 2\n").unwrap_err();
        assert_eq!(e.line, 3);

        // parallel arcs are rejected but digons are not
        assert!(parse_digraph("2 2\n0 1\n1 0\n").is_ok());
        assert!(parse_digraph("2 2\n0 1\n0 1\n").is_err());
    }

    #[test]
    fn json_format() {
        let g: Graph = serde_json::from_str(r#"{"n": 3, "edges": [[0, 1]]}"#).unwrap();
        assert_eq!(graph_to_json(&g), r#"{"n":3,"edges":[[0,1]]}"#);
        let d = parse_digraph(r#"{"n": 2, "arcs": [[0, 1], [1, 0]]}"#).unwrap();
        assert_eq!(digraph_to_json(&d), r#"{"n":2,"arcs":[[0,1],[1,0]]}"#);
        assert!(parse_graph(r#"{"n": 2, "edges": [[0, 0]]}"#).is_err());
        let e = parse_graph("{\"n\": 2,\n \"edges\": [[0, 1]],}").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn dot_round_trip_keeps_isolated_vertices() {
        let g = Graph::from_edges(4, [(0, 2)]).unwrap();
        let dot = graph_to_dot(&g, None);
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 -- 2;"));
        assert_eq!(parse_graph(&dot).unwrap(), g);

        let d = Digraph::from_arcs(3, [(2, 0), (0, 2)]).unwrap();
        let dot = digraph_to_dot(&d, None);
        assert!(dot.contains("2 -> 0;"));
        assert_eq!(parse_digraph(&dot).unwrap(), d);
        assert!(parse_graph(&dot).is_err());
    }

    #[test]
    fn names_become_labels() {
        let doc = parse_any(r#"{"n": 2, "arcs": [[0, 1]], "names": ["fox", "hare \"x\""]}"#, false).unwrap();
        let AnyGraph::Directed(d) = &doc.value else { panic!("expected a digraph") };
        let dot = digraph_to_dot(d, doc.names.as_deref());
        assert!(dot.contains(r#"1 [label="hare \"x\""];"#));
        assert_eq!(parse_digraph(&dot).unwrap(), *d);
        assert!(parse_any(r#"{"n": 2, "arcs": [], "names": ["a"]}"#, false).is_err());
        assert!(parse_any(r#"{"n": 2}"#, false).is_err());
    }
}
