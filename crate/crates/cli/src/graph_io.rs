//! Graph input: a line-based edge list or a JSON graph document.
//!
//! Edge list: one edge per line as two whitespace-separated labels,
//! `#` starts a comment, and `node <label>` declares a node that may have no
//! edges. Nodes are numbered by first appearance.

use std::collections::HashMap;

use fdim_core::Graph;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::VERSION;

/// A graph with the labels its nodes had in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    /// Labels `0..n`.
    pub fn numbered(graph: Graph) -> Self {
        let labels = (0..graph.node_count()).map(|i| i.to_string()).collect();
        LabeledGraph { graph, labels }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub edges: Vec<[String; 2]>,
    pub nodes: Vec<String>,
    pub version: String,
}

impl From<&LabeledGraph> for GraphDocument {
    fn from(g: &LabeledGraph) -> Self {
        let edges = g.graph.edges().map(|(u, v)| [g.labels[u].clone(), g.labels[v].clone()]).collect();
        GraphDocument { edges, nodes: g.labels.clone(), version: VERSION.into() }
    }
}

struct Builder {
    index: HashMap<String, usize>,
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { index: HashMap::new(), labels: Vec::new(), edges: Vec::new() }
    }

    fn node(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), self.labels.len() - 1);
        self.labels.len() - 1
    }

    fn edge(&mut self, a: &str, b: &str, line: usize) -> Result<()> {
        if a == b {
            return Err(CliError::Loop { line, label: a.to_string() });
        }
        let (u, v) = (self.node(a), self.node(b));
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self) -> Result<LabeledGraph> {
        let graph = Graph::new(self.labels.len(), self.edges)?;
        Ok(LabeledGraph { graph, labels: self.labels })
    }
}

/// Parses either format; JSON is recognized by a leading `{`.
pub fn parse_graph(input: &str) -> Result<LabeledGraph> {
    if input.trim_start().starts_with('{') {
        return parse_graph_document(input);
    }
    let mut b = Builder::new();
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["node", label] => {
                b.node(label);
            }
            ["node", ..] => return Err(CliError::Parse { line, message: "expected `node <label>`".into() }),
            [a, c] => b.edge(a, c, line)?,
            _ => {
                return Err(CliError::Parse {
                    line,
                    message: format!("expected two labels, found {} tokens", tokens.len()),
                })
            }
        }
    }
    b.finish()
}

fn parse_graph_document(input: &str) -> Result<LabeledGraph> {
    let doc: GraphDocument = serde_json::from_str(input)?;
    check_version(&doc.version)?;
    let mut b = Builder::new();
    for label in &doc.nodes {
        if b.index.contains_key(label) {
            return Err(CliError::Invalid(format!("node {label:?} listed twice")));
        }
        b.node(label);
    }
    for (i, [a, c]) in doc.edges.iter().enumerate() {
        for l in [a, c] {
            if !b.index.contains_key(l) {
                return Err(CliError::Invalid(format!("edge {i} uses undeclared node {l:?}")));
            }
        }
        b.edge(a, c, 0).map_err(|_| CliError::Invalid(format!("node {a:?} has a loop")))?;
    }
    b.finish()
}

pub(crate) fn check_version(v: &str) -> Result<()> {
    if v != VERSION {
        return Err(CliError::Invalid(format!("unsupported version {v:?}, expected {VERSION:?}")));
    }
    Ok(())
}

/// The edge-list form, with `node` lines for isolated nodes.
pub fn to_edge_list(g: &LabeledGraph) -> String {
    let mut out = String::new();
    for v in 0..g.graph.node_count() {
        if g.graph.degree(v) == 0 {
            out.push_str(&format!("node {}\n", g.labels[v]));
        }
    }
    for (u, v) in g.graph.edges() {
        out.push_str(&format!("{} {}\n", g.labels[u], g.labels[v]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fdim_core::graph::is_isomorphic;

    #[test]
    fn path_from_edge_list() {
        let g = parse_graph("a b\nb c").unwrap();
        assert_eq!(g.labels, ["a", "b", "c"]);
        assert_eq!(g.graph, Graph::path(3));
    }

    #[test]
    fn loops_name_the_node() {
        let err = parse_graph("# comment\nx x\n").unwrap_err();
        assert!(matches!(&err, CliError::Loop { line: 2, label } if label == "x"));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn five_cycle() {
        let g = parse_graph("1 2\n2 3\n3 4\n4 5\n5 1\n").unwrap();
        assert!(is_isomorphic(&g.graph, &Graph::cycle(5)).is_some());
    }

    #[test]
    fn comments_duplicates_and_isolated_nodes() {
        let g = parse_graph("node z   # lonely\n\na b\nb a\n  a b # again\n").unwrap();
        assert_eq!(g.graph.node_count(), 3);
        assert_eq!(g.graph.edge_count(), 1);
        assert_eq!(g.graph.degree(0), 0);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = parse_graph("a b\na b c\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }));
        assert!(matches!(parse_graph("node\n").unwrap_err(), CliError::Parse { line: 1, .. }));
    }

    #[test]
    fn document_round_trip() {
        let g = parse_graph("node q\na b\nb c\n").unwrap();
        let json = serde_json::to_string(&GraphDocument::from(&g)).unwrap();
        assert_eq!(parse_graph(&json).unwrap(), g);
        assert_eq!(parse_graph(&to_edge_list(&g)).unwrap().graph.edge_count(), 2);
    }
}
