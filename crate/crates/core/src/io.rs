//! File formats. Vertices are 0-based everywhere; colors are 1-based.
//!
//! * Graph JSON: `{"n": 3, "edges": [[0, 1], [1, 2]]}`, edges written with
//!   `u < v` in sorted order.
//! * Edge list: one `u v` pair per line, `#` starts a comment, blank lines
//!   are ignored. The order is one more than the largest vertex mentioned.
//! * Certificate JSON: `{"n": 3, "k": 2, "colors": [1, 2, 1]}`.
//! * DOT: an undirected graph with one fill color per color index and
//!   vertex labels `v:color`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};
use crate::verify::{Color, Coloring, ColoringError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("JSON error at line {line}, column {column}: {msg}")]
    Json {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("invalid certificate: {0}")]
    Certificate(String),
    #[error("invalid coloring: {0}")]
    Coloring(#[from] ColoringError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    EdgeList,
}

impl GraphFormat {
    /// JSON when the first non-blank character is `{`, edge list otherwise.
    pub fn detect(text: &str) -> Self {
        if text.trim_start().starts_with('{') {
            GraphFormat::Json
        } else {
            GraphFormat::EdgeList
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphDoc {
        n: g.n(),
        edges: g.edges().to_vec(),
    })
    .expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph, IoError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    Ok(Graph::new(doc.n, doc.edges)?)
}

pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a string");
    }
    out
}

pub fn graph_from_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(IoError::EdgeList {
                line,
                msg: format!("expected two vertex ids, found {}", fields.len()),
            });
        }
        let parse = |s: &str| {
            s.parse::<Vertex>().map_err(|_| IoError::EdgeList {
                line,
                msg: format!("'{s}' is not a vertex id"),
            })
        };
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        if u == v {
            return Err(IoError::EdgeList {
                line,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        if edges.contains(&(u.min(v), u.max(v))) {
            return Err(IoError::EdgeList {
                line,
                msg: format!("duplicate edge ({u}, {v})"),
            });
        }
        edges.push((u.min(v), u.max(v)));
        n = n.max(u + 1).max(v + 1);
    }
    if edges.is_empty() {
        return Err(IoError::EdgeList {
            line: 0,
            msg: "no edges".into(),
        });
    }
    Ok(Graph::new(n, edges)?)
}

pub fn read_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph, IoError> {
    match format.unwrap_or_else(|| GraphFormat::detect(text)) {
        GraphFormat::Json => graph_from_json(text),
        GraphFormat::EdgeList => graph_from_edge_list(text),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    n: usize,
    k: usize,
    colors: Vec<Color>,
}

pub fn certificate_to_json(c: &Coloring) -> String {
    serde_json::to_string(&CertificateDoc {
        n: c.len(),
        k: c.k(),
        colors: c.colors().to_vec(),
    })
    .expect("certificate serializes")
}

pub fn certificate_from_json(text: &str) -> Result<Coloring, IoError> {
    let doc: CertificateDoc = serde_json::from_str(text)?;
    if doc.colors.len() != doc.n {
        return Err(IoError::Certificate(format!(
            "n is {} but {} colors are listed",
            doc.n,
            doc.colors.len()
        )));
    }
    Ok(Coloring::new(doc.k, doc.colors)?)
}

const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff",
];

/// Fill color of a color index; the palette repeats after twelve colors.
pub fn palette_color(c: Color) -> &'static str {
    PALETTE[(c as usize - 1) % PALETTE.len()]
}

pub fn to_dot(g: &Graph, c: Option<&Coloring>) -> String {
    let mut out = String::from("graph G {\n  node [style=filled];\n");
    for v in 0..g.n() {
        match c {
            Some(c) => writeln!(
                out,
                "  {v} [label=\"{v}:{}\", fillcolor=\"{}\"];",
                c.color(v),
                palette_color(c.color(v))
            ),
            None => writeln!(out, "  {v} [label=\"{v}\", fillcolor=\"white\"];"),
        }
        .expect("writing to a string");
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("writing to a string");
    }
    out.push_str("}\n");
    out
}
