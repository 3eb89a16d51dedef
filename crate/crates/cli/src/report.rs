//! The classification report and its JSON shape. Field order is part of the
//! documented schema; serialization goes through serde structs so key order
//! is stable across runs.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Disconnected,
    HasCutPoint,
    Circle,
    SplitsOverPair,
    Rigid,
    Degenerate,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Disconnected => "disconnected",
            Verdict::HasCutPoint => "has-cut-point",
            Verdict::Circle => "circle",
            Verdict::SplitsOverPair => "splits-over-pair",
            Verdict::Rigid => "rigid",
            Verdict::Degenerate => "degenerate",
        };
        f.write_str(s)
    }
}

/// Slice tree in label form. Nodes are indexed pair nodes first, then set
/// nodes, and `edges` uses those combined indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeJson {
    pub pair_nodes: Vec<[String; 2]>,
    pub set_nodes: Vec<Vec<[String; 2]>>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub connected: bool,
    pub cut_vertices: Vec<String>,
    pub two_connected: bool,
    pub cycle: bool,
    pub cut_pair_count: usize,
    pub inseparable_pair: Option<[String; 2]>,
    pub family_provenance: String,
    pub family_size: Option<usize>,
    pub noncrossing: Option<bool>,
    pub tree_nodes: Option<usize>,
    pub tree_edges: Option<usize>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
    pub labels: Vec<String>,
    pub tree: Option<TreeJson>,
}
