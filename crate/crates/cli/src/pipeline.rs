//! End-to-end classification: routing through the connectivity, cycle, rigid
//! and splitting branches, family construction, tree assembly, and the
//! symmetry diagnostics.

use thiserror::Error;

use slicetree::graph::{
    block_cut_tree, cut_vertices, enumerate_cut_pairs, is_connected, is_cycle, BlockCutTree,
    CutPair, Graph,
};
use slicetree::slice::{find_inseparable_pair, minimal_slice_containing, Crossing};
use slicetree::symmetry::{
    action_on_tree, automorphisms_with_cap, edge_stabilizer_check, global_fixed_point_check,
    orbit_of_pair, AutomorphismGroup, SymmetryError,
};
use slicetree::tree::{
    build_incidence, build_tree, path_separator_check, verify_tree, FamilyProvenance, PairFamily,
    SliceTree, TreeDefect, TreeError, TreeNode,
};

use crate::ingest::LabeledGraph;
use crate::report::{ClassificationReport, TreeJson, Verdict};

/// How the pair family is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySource {
    /// Orbit of the minimal-slice boundary pair under the automorphism group.
    Orbit,
    /// All cut pairs of the graph.
    AllCutPairs,
    /// Caller-supplied pairs (the CLI reads them from a file).
    Supplied(Vec<CutPair>),
}

impl FamilySource {
    fn provenance_str(&self) -> &'static str {
        match self {
            FamilySource::Orbit => "orbit",
            FamilySource::AllCutPairs => "all-noncrossing",
            FamilySource::Supplied(_) => "file",
        }
    }
}

#[derive(Debug, Clone)]
pub struct PipelineOptions {
    pub family: FamilySource,
    /// Vertex cap for automorphism enumeration.
    pub aut_cap: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            family: FamilySource::Orbit,
            aut_cap: slicetree::symmetry::DEFAULT_AUT_CAP,
        }
    }
}

/// Exit code 2 for bad input, 3 for a certified internal verification
/// failure (a witness that some claimed invariant does not hold).
#[derive(Debug, Error)]
pub enum PipelineFailure {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Internal(String),
}

/// Everything a run produces: the report plus the raw artifacts for DOT
/// output and for the test suites.
#[derive(Debug, Clone)]
pub struct PipelineOutcome {
    pub report: ClassificationReport,
    pub tree: Option<SliceTree>,
    pub block_cut: Option<BlockCutTree>,
    pub family: Option<PairFamily>,
    pub aut_order: Option<usize>,
    pub fixed_nodes: Option<Vec<usize>>,
}

pub fn tree_to_json(t: &SliceTree, lg: &LabeledGraph) -> TreeJson {
    let mut pair_nodes = Vec::new();
    let mut set_nodes = Vec::new();
    for node in &t.nodes {
        match node {
            TreeNode::Pair(p) => pair_nodes.push(lg.pair_labels(*p)),
            TreeNode::Set(s) => {
                set_nodes.push(s.members.iter().map(|&p| lg.pair_labels(p)).collect())
            }
        }
    }
    TreeJson {
        pair_nodes,
        set_nodes,
        edges: t.edges.iter().map(|&(a, b)| [a, b]).collect(),
    }
}

/// Builds the pair family for a 2-connected graph with at least one cut
/// pair. Returns the family, the crossing witness if the fallback kicked in,
/// and the automorphism group when one was computed along the way.
pub fn build_family(
    g: &Graph,
    source: &FamilySource,
    aut_cap: usize,
) -> Result<(PairFamily, Option<Crossing>, Option<AutomorphismGroup>), PipelineFailure> {
    let cut_pairs = enumerate_cut_pairs(g).map_err(|e| PipelineFailure::Input(e.to_string()))?;
    if cut_pairs.is_empty() {
        return Err(PipelineFailure::Input(
            "graph has no cut pairs (rigid); there is no family to build".into(),
        ));
    }
    let (members, provenance, group) = match source {
        FamilySource::Orbit => {
            let witness = find_inseparable_pair(g)
                .map_err(|e| PipelineFailure::Input(e.to_string()))?
                .ok_or_else(|| {
                    PipelineFailure::Input(
                        "every candidate pair is separated by a cut pair; no inseparable pair to \
                         anchor the orbit family"
                            .into(),
                    )
                })?;
            let base = minimal_slice_containing(g, witness.a)
                .map_err(|e| PipelineFailure::Internal(format!("minimal slice failed: {e}")))?
                .boundary;
            let group = automorphisms_with_cap(g, aut_cap).map_err(|e| match e {
                SymmetryError::CapExceeded { n, cap } => PipelineFailure::Input(format!(
                    "{n} vertices exceeds the automorphism cap {cap}; rerun with --max-n {n}"
                )),
                other => PipelineFailure::Internal(other.to_string()),
            })?;
            (
                orbit_of_pair(&group, base),
                FamilyProvenance::Orbit { base },
                Some(group),
            )
        }
        FamilySource::AllCutPairs => (cut_pairs.clone(), FamilyProvenance::AllCutPairs, None),
        FamilySource::Supplied(pairs) => {
            if pairs.is_empty() {
                return Err(PipelineFailure::Input("supplied family is empty".into()));
            }
            (pairs.clone(), FamilyProvenance::UserSupplied, None)
        }
    };
    let (family, crossing) = PairFamily::new_with_fallback(g, members, provenance).map_err(
        |e| match (&e, source) {
            (TreeError::NotACutPair(_), FamilySource::Supplied(_)) => {
                PipelineFailure::Input(e.to_string())
            }
            (TreeError::FamilyTooLarge(_), _) => PipelineFailure::Input(e.to_string()),
            _ => PipelineFailure::Internal(e.to_string()),
        },
    )?;
    Ok((family, crossing, group))
}

pub fn run_pipeline(
    lg: &LabeledGraph,
    opts: &PipelineOptions,
) -> Result<PipelineOutcome, PipelineFailure> {
    let g = &lg.graph;
    let provenance = opts.family.provenance_str().to_string();
    let mut notes: Vec<String> = Vec::new();

    let base_report = |verdict: Verdict, notes: Vec<String>| ClassificationReport {
        connected: true,
        cut_vertices: Vec::new(),
        two_connected: false,
        cycle: false,
        cut_pair_count: 0,
        inseparable_pair: None,
        family_provenance: provenance.clone(),
        family_size: None,
        noncrossing: None,
        tree_nodes: None,
        tree_edges: None,
        verdict,
        notes,
        labels: lg.labels.clone(),
        tree: None,
    };

    if !is_connected(g) {
        let mut report = base_report(Verdict::Disconnected, notes);
        report.connected = false;
        return Ok(PipelineOutcome {
            report,
            tree: None,
            block_cut: None,
            family: None,
            aut_order: None,
            fixed_nodes: None,
        });
    }

    let cuts = cut_vertices(g).expect("connectivity already checked");
    if !cuts.is_empty() {
        let bct = block_cut_tree(g).expect("connectivity already checked");
        notes.push(format!(
            "block-cut tree: {} blocks, {} cut vertices",
            bct.blocks.len(),
            bct.cut_vertices.len()
        ));
        let mut report = base_report(Verdict::HasCutPoint, notes);
        report.cut_vertices = cuts.iter().map(|&v| lg.label(v).to_string()).collect();
        report.tree_nodes = Some(bct.node_count());
        report.tree_edges = Some(bct.edges.len());
        return Ok(PipelineOutcome {
            report,
            tree: None,
            block_cut: Some(bct),
            family: None,
            aut_order: None,
            fixed_nodes: None,
        });
    }

    if g.n() < 3 {
        notes.push(format!(
            "graph too small for cut-pair analysis ({} vertices)",
            g.n()
        ));
        return Ok(PipelineOutcome {
            report: base_report(Verdict::Degenerate, notes),
            tree: None,
            block_cut: None,
            family: None,
            aut_order: None,
            fixed_nodes: None,
        });
    }

    // Connected, no cut vertices, n >= 3: 2-connected territory.
    let cycle = is_cycle(g);
    let cut_pairs = if g.n() >= 4 {
        enumerate_cut_pairs(g).expect("2-connected with n >= 4")
    } else {
        Vec::new() // the triangle: 2-connected, a cycle, no cut pairs
    };
    let inseparable = if g.n() >= 4 {
        find_inseparable_pair(g).expect("2-connected with n >= 4")
    } else {
        None
    };

    let finish_simple = |verdict: Verdict, notes: Vec<String>| {
        let mut report = base_report(verdict, notes);
        report.two_connected = true;
        report.cycle = cycle;
        report.cut_pair_count = cut_pairs.len();
        report.inseparable_pair = inseparable.map(|w| {
            [lg.label(w.a).to_string(), lg.label(w.b).to_string()]
        });
        report
    };

    if cycle {
        return Ok(PipelineOutcome {
            report: finish_simple(Verdict::Circle, notes),
            tree: None,
            block_cut: None,
            family: None,
            aut_order: None,
            fixed_nodes: None,
        });
    }
    if cut_pairs.is_empty() {
        return Ok(PipelineOutcome {
            report: finish_simple(Verdict::Rigid, notes),
            tree: None,
            block_cut: None,
            family: None,
            aut_order: None,
            fixed_nodes: None,
        });
    }
    if inseparable.is_none() {
        notes.push(
            "every candidate pair is separated by a cut pair, but the graph is not a cycle; \
             no inseparable pair anchors a family"
                .to_string(),
        );
        return Ok(PipelineOutcome {
            report: finish_simple(Verdict::Degenerate, notes),
            tree: None,
            block_cut: None,
            family: None,
            aut_order: None,
            fixed_nodes: None,
        });
    }

    let (family, crossing, mut group) = build_family(g, &opts.family, opts.aut_cap)?;
    let noncrossing = crossing.is_none();
    if let Some(w) = crossing {
        notes.push(format!(
            "family is crossing ({w}); greedy non-crossing subfamily of size {} substituted",
            family.len()
        ));
    }

    // Assemble the incidence structure and decide the verdict.
    let incidence = build_incidence(g, &family)
        .map_err(|e| PipelineFailure::Internal(format!("incidence build failed: {e}")))?;
    let (verdict, tree) = match verify_tree(&incidence) {
        Ok(()) => {
            path_separator_check(g, &family, &incidence).map_err(|e| {
                PipelineFailure::Internal(format!("path separator check failed: {e}"))
            })?;
            if family.len() <= 1 {
                notes.push("family has a single member; the two-node tree is degenerate".into());
                (Verdict::Degenerate, Some(incidence))
            } else {
                (Verdict::SplitsOverPair, Some(incidence))
            }
        }
        Err(TreeDefect::Disconnected { a, b }) => {
            notes.push(format!(
                "incidence graph is a forest ({} nodes, {} edges, no path between nodes {a} \
                 and {b}): no splitting tree",
                incidence.node_count(),
                incidence.edge_count()
            ));
            (Verdict::Degenerate, None)
        }
        Err(defect @ TreeDefect::Cycle { .. }) => {
            return Err(PipelineFailure::Internal(format!(
                "incidence graph of a non-crossing family is not a tree: {defect}"
            )));
        }
        Err(TreeDefect::Empty) => {
            return Err(PipelineFailure::Internal(
                "incidence graph of a nonempty family is empty".into(),
            ));
        }
    };

    // Symmetry diagnostics on the built tree.
    let mut aut_order = None;
    let mut fixed_nodes = None;
    if let Some(t) = &tree {
        if group.is_none() {
            if g.n() <= opts.aut_cap {
                group = Some(
                    automorphisms_with_cap(g, opts.aut_cap)
                        .map_err(|e| PipelineFailure::Internal(e.to_string()))?,
                );
            } else {
                notes.push(format!(
                    "symmetry checks skipped: {} vertices exceeds the automorphism cap {}",
                    g.n(),
                    opts.aut_cap
                ));
            }
        }
        if let Some(group) = &group {
            aut_order = Some(group.order());
            notes.push(format!("automorphism group order {}", group.order()));
            let closed = group.elements().iter().all(|e| {
                family
                    .members()
                    .iter()
                    .all(|&p| family.contains(e.apply_pair(p)))
            });
            if !closed {
                if matches!(opts.family, FamilySource::Orbit) && noncrossing {
                    return Err(PipelineFailure::Internal(
                        "orbit family is not closed under the automorphism group".into(),
                    ));
                }
                notes.push(
                    "symmetry checks skipped: family is not closed under the automorphism group"
                        .into(),
                );
            } else {
                let action = action_on_tree(group, &family, t)
                    .map_err(|e| PipelineFailure::Internal(e.to_string()))?;
                edge_stabilizer_check(group, t, &action).map_err(|f| {
                    PipelineFailure::Internal(format!(
                        "edge stabilizer check failed: element {} on edge ({}, {})",
                        f.element, f.edge.0, f.edge.1
                    ))
                })?;
                let fixed = global_fixed_point_check(&action, t);
                if fixed.is_empty() {
                    notes.push("no globally fixed tree node under the automorphism action".into());
                } else {
                    notes.push(format!(
                        "globally fixed tree nodes under the automorphism action: {fixed:?} \
                         (finite-model degeneracy)"
                    ));
                }
                fixed_nodes = Some(fixed);
            }
        }
    }

    let mut report = finish_simple(verdict, notes);
    report.family_size = Some(family.len());
    report.noncrossing = Some(noncrossing);
    report.tree_nodes = tree.as_ref().map(|t| t.node_count());
    report.tree_edges = tree.as_ref().map(|t| t.edge_count());
    report.tree = tree.as_ref().map(|t| tree_to_json(t, lg));
    Ok(PipelineOutcome {
        report,
        tree,
        block_cut: None,
        family: Some(family),
        aut_order,
        fixed_nodes,
    })
}

/// Family construction plus tree assembly for the `tree` subcommand: unlike
/// [`run_pipeline`] there is no verdict routing, and a non-tree incidence
/// structure is a hard failure with its witness.
pub fn build_tree_artifact(
    lg: &LabeledGraph,
    source: &FamilySource,
    aut_cap: usize,
) -> Result<(PairFamily, SliceTree, Option<Crossing>), PipelineFailure> {
    let (family, crossing, _) = build_family(&lg.graph, source, aut_cap)?;
    let tree = build_tree(&lg.graph, &family).map_err(|e| match e {
        TreeError::NotATree(defect) => PipelineFailure::Internal(format!(
            "incidence graph is not a tree: {defect}"
        )),
        other => PipelineFailure::Internal(other.to_string()),
    })?;
    Ok((family, tree, crossing))
}
