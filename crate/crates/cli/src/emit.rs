//! JSON and DOT emitters. All output is built from sorted structures, so a
//! given artifact always serializes to the same bytes.

use serde::Serialize;

use slicetree::graph::{BlockCutTree, CutPair};
use slicetree::slice::Slice;
use slicetree::symmetry::AutomorphismGroup;
use slicetree::tree::{SliceTree, TreeNode};

use crate::ingest::LabeledGraph;
use crate::report::ClassificationReport;

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("artifacts serialize");
    s.push('\n');
    s
}

pub fn report_to_json(report: &ClassificationReport) -> String {
    pretty(report)
}

pub fn tree_to_json_text(t: &SliceTree, lg: &LabeledGraph) -> String {
    pretty(&crate::pipeline::tree_to_json(t, lg))
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn pair_label(lg: &LabeledGraph, p: CutPair) -> String {
    format!("{{{},{}}}", lg.label(p.a()), lg.label(p.b()))
}

/// Pair nodes as boxes labeled `{a,b}`, set nodes as ellipses labeled with
/// their member lists, undirected edges.
pub fn tree_to_dot(t: &SliceTree, lg: &LabeledGraph) -> String {
    let mut out = String::from("graph slice_tree {\n");
    let mut names: Vec<String> = Vec::with_capacity(t.nodes.len());
    let mut set_count = 0;
    for (i, node) in t.nodes.iter().enumerate() {
        match node {
            TreeNode::Pair(p) => {
                let name = format!("p{i}");
                out.push_str(&format!(
                    "  {name} [shape=box, label=\"{}\"];\n",
                    dot_escape(&pair_label(lg, *p))
                ));
                names.push(name);
            }
            TreeNode::Set(s) => {
                let name = format!("s{set_count}");
                set_count += 1;
                let members: Vec<String> =
                    s.members.iter().map(|&p| pair_label(lg, p)).collect();
                out.push_str(&format!(
                    "  {name} [shape=ellipse, label=\"{}\"];\n",
                    dot_escape(&format!("{{{}}}", members.join(",")))
                ));
                names.push(name);
            }
        }
    }
    for &(a, b) in &t.edges {
        out.push_str(&format!("  {} -- {};\n", names[a], names[b]));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct BlockCutJson {
    blocks: Vec<Vec<String>>,
    cut_vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
}

pub fn block_cut_to_json(t: &BlockCutTree, lg: &LabeledGraph) -> String {
    pretty(&BlockCutJson {
        blocks: t
            .blocks
            .iter()
            .map(|b| b.iter().map(|&v| lg.label(v).to_string()).collect())
            .collect(),
        cut_vertices: t
            .cut_vertices
            .iter()
            .map(|&v| lg.label(v).to_string())
            .collect(),
        edges: t.edges.iter().map(|&(b, c)| [b, c]).collect(),
    })
}

/// Blocks as boxes, cut vertices as ellipses.
pub fn block_cut_to_dot(t: &BlockCutTree, lg: &LabeledGraph) -> String {
    let mut out = String::from("graph block_cut_tree {\n");
    for (i, block) in t.blocks.iter().enumerate() {
        let members: Vec<&str> = block.iter().map(|&v| lg.label(v)).collect();
        out.push_str(&format!(
            "  b{i} [shape=box, label=\"{}\"];\n",
            dot_escape(&format!("{{{}}}", members.join(",")))
        ));
    }
    for (i, &c) in t.cut_vertices.iter().enumerate() {
        out.push_str(&format!(
            "  c{i} [shape=ellipse, label=\"{}\"];\n",
            dot_escape(lg.label(c))
        ));
    }
    for &(b, c) in &t.edges {
        out.push_str(&format!("  b{b} -- c{c};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_dot(lg: &LabeledGraph) -> String {
    let mut out = String::from("graph g {\n");
    for v in lg.graph.vertices() {
        out.push_str(&format!("  \"{}\";\n", dot_escape(lg.label(v))));
    }
    for &(a, b) in lg.graph.edges() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\";\n",
            dot_escape(lg.label(a)),
            dot_escape(lg.label(b))
        ));
    }
    out.push_str("}\n");
    out
}

pub fn cut_pairs_to_json(pairs: &[CutPair], lg: &LabeledGraph) -> String {
    let rows: Vec<[String; 2]> = pairs.iter().map(|&p| lg.pair_labels(p)).collect();
    pretty(&rows)
}

#[derive(Serialize)]
struct SliceJson {
    boundary: [String; 2],
    interior: Vec<String>,
    closure: Vec<String>,
}

fn slice_json(s: &Slice, lg: &LabeledGraph) -> SliceJson {
    SliceJson {
        boundary: lg.pair_labels(s.boundary),
        interior: s.interior.iter().map(|&v| lg.label(v).to_string()).collect(),
        closure: s.closure.iter().map(|&v| lg.label(v).to_string()).collect(),
    }
}

pub fn slices_to_json(slices: &[Slice], lg: &LabeledGraph) -> String {
    let rows: Vec<SliceJson> = slices.iter().map(|s| slice_json(s, lg)).collect();
    pretty(&rows)
}

pub fn single_slice_to_json(s: &Slice, lg: &LabeledGraph) -> String {
    pretty(&slice_json(s, lg))
}

#[derive(Serialize)]
struct AutJson {
    order: usize,
    elements: Vec<Vec<String>>,
}

/// The group as label-image arrays, identity first.
pub fn aut_to_json(group: &AutomorphismGroup, lg: &LabeledGraph) -> String {
    pretty(&AutJson {
        order: group.order(),
        elements: group
            .elements()
            .iter()
            .map(|e| e.image().iter().map(|&v| lg.label(v).to_string()).collect())
            .collect(),
    })
}
