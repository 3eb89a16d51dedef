//! Graph ingestion and the two interchange formats.
//!
//! Edge-list format: one edge per line, two whitespace-separated labels,
//! `#` starts a comment, blank lines are skipped. Labels are arbitrary
//! non-whitespace tokens. Vertices are numbered densely in first-appearance
//! order.
//!
//! JSON format: `{"vertices": ["u", ...], "edges": [["u","v"], ...]}`.
//! The vertices array fixes the dense numbering; every edge endpoint must
//! appear in it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use slicetree::graph::{CutPair, Graph, VertexId};

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: expected two labels per edge, got {got}")]
    BadLine { line: usize, got: usize },
    #[error("line {line}: loop edge at '{label}' rejected")]
    Loop { line: usize, label: String },
    #[error("line {line}: duplicate edge '{a}' '{b}' rejected")]
    Duplicate { line: usize, a: String, b: String },
    #[error("invalid graph json: {0}")]
    Json(String),
    #[error("duplicate vertex label '{0}'")]
    DuplicateLabel(String),
    #[error("unknown vertex label '{0}' in edge list")]
    UnknownLabel(String),
}

/// A graph together with the original labels of its densely renumbered
/// vertices; `labels[i]` is the label of vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    /// Wraps a bare graph using its vertex indices as labels.
    pub fn from_graph(graph: Graph) -> Self {
        let labels = (0..graph.n()).map(|i| i.to_string()).collect();
        LabeledGraph { graph, labels }
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn pair_labels(&self, p: CutPair) -> [String; 2] {
        [self.label(p.a()).to_string(), self.label(p.b()).to_string()]
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(VertexId)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(a, b) in self.graph.edges() {
            out.push_str(self.label(a));
            out.push(' ');
            out.push_str(self.label(b));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            vertices: self.labels.clone(),
            edges: self
                .graph
                .edges()
                .iter()
                .map(|&(a, b)| [self.label(a).to_string(), self.label(b).to_string()])
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("graph json serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

/// Sniffs the format: leading `{` means JSON, anything else edge list.
pub fn parse_auto(text: &str) -> Result<LabeledGraph, IngestError> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph, IngestError> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut intern = |tok: &str, labels: &mut Vec<String>| -> usize {
        if let Some(&i) = index.get(tok) {
            return i;
        }
        let i = labels.len();
        labels.push(tok.to_string());
        index.insert(tok.to_string(), i);
        i
    };
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            return Err(IngestError::BadLine {
                line,
                got: tokens.len(),
            });
        }
        let a = intern(tokens[0], &mut labels);
        let b = intern(tokens[1], &mut labels);
        if a == b {
            return Err(IngestError::Loop {
                line,
                label: tokens[0].to_string(),
            });
        }
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            return Err(IngestError::Duplicate {
                line,
                a: labels[key.0].clone(),
                b: labels[key.1].clone(),
            });
        }
        edges.push((a, b));
    }
    let graph = Graph::new(labels.len(), &edges).expect("validated edge list");
    Ok(LabeledGraph { graph, labels })
}

pub fn parse_graph_json(text: &str) -> Result<LabeledGraph, IngestError> {
    let doc: GraphJson =
        serde_json::from_str(text).map_err(|e| IngestError::Json(e.to_string()))?;
    let mut index: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, label) in doc.vertices.iter().enumerate() {
        if index.insert(label, i).is_some() {
            return Err(IngestError::DuplicateLabel(label.clone()));
        }
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    let mut seen: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    for [la, lb] in &doc.edges {
        let &a = index
            .get(la.as_str())
            .ok_or_else(|| IngestError::UnknownLabel(la.clone()))?;
        let &b = index
            .get(lb.as_str())
            .ok_or_else(|| IngestError::UnknownLabel(lb.clone()))?;
        if a == b {
            return Err(IngestError::Loop {
                line: 0,
                label: la.clone(),
            });
        }
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            return Err(IngestError::Duplicate {
                line: 0,
                a: doc.vertices[key.0].clone(),
                b: doc.vertices[key.1].clone(),
            });
        }
        edges.push((a, b));
    }
    let graph = Graph::new(doc.vertices.len(), &edges).expect("validated json edges");
    Ok(LabeledGraph {
        graph,
        labels: doc.vertices,
    })
}
