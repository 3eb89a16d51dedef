//! The separation and adjacency relations on a family of cut pairs, vertex
//! sets (maximal mutually-adjacent subsets), and assembly plus verification
//! of the bipartite incidence tree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::graph::{components, CutPair, Graph, GraphError};
use crate::slice::{family_is_noncrossing, greedy_noncrossing, slices_of_pair, Crossing};

/// Families larger than this are refused; the maximal-clique step is
/// exhaustive and meant for desk scale.
pub const MAX_FAMILY_SIZE: usize = 64;

/// Where a family came from; carried through to reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyProvenance {
    /// Orbit of a minimal-slice boundary pair under the automorphism group.
    Orbit { base: CutPair },
    /// All cut pairs of the graph.
    AllCutPairs,
    /// Supplied by the caller.
    UserSupplied,
}

impl std::fmt::Display for FamilyProvenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyProvenance::Orbit { .. } => write!(f, "orbit"),
            FamilyProvenance::AllCutPairs => write!(f, "all-noncrossing"),
            FamilyProvenance::UserSupplied => write!(f, "file"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0} does not separate the graph, so it cannot join a pair family")]
    NotACutPair(CutPair),
    #[error("family is crossing: {0}")]
    FamilyCrossing(Crossing),
    #[error("family has {0} members, cap is {MAX_FAMILY_SIZE}")]
    FamilyTooLarge(usize),
    #[error("family is empty")]
    EmptyFamily,
    #[error("{0} is not a member of the family")]
    NotInFamily(CutPair),
    #[error("{0} cannot separate a pair involving itself")]
    SeparatorOfSelf(CutPair),
    #[error("incidence graph is not a tree: {0}")]
    NotATree(TreeDefect),
    #[error(
        "separator set of {p} and {q} disagrees with the tree path: separators {separators:?}, on path {on_path:?}"
    )]
    PathSeparatorMismatch {
        p: CutPair,
        q: CutPair,
        separators: Vec<CutPair>,
        on_path: Vec<CutPair>,
    },
}

/// A family of cut pairs known to be non-crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFamily {
    members: Vec<CutPair>,
    provenance: FamilyProvenance,
}

impl PairFamily {
    /// Sorts, deduplicates and validates: every member must actually
    /// disconnect `g` and the family must be non-crossing.
    pub fn new(
        g: &Graph,
        members: Vec<CutPair>,
        provenance: FamilyProvenance,
    ) -> Result<Self, TreeError> {
        let mut members = members;
        members.sort();
        members.dedup();
        if members.len() > MAX_FAMILY_SIZE {
            return Err(TreeError::FamilyTooLarge(members.len()));
        }
        for &p in &members {
            let parts = components(g, &[p.a(), p.b()])?.parts;
            if parts.len() < 2 {
                return Err(TreeError::NotACutPair(p));
            }
        }
        family_is_noncrossing(g, &members).map_err(TreeError::FamilyCrossing)?;
        Ok(PairFamily {
            members,
            provenance,
        })
    }

    /// Sorts and deduplicates without validating against a graph. For
    /// diagnostics on families the pipeline would reject (crossing orbits,
    /// hand-built examples); everything downstream still works, but nothing
    /// guarantees the incidence structure is a tree.
    pub fn new_unchecked(members: Vec<CutPair>, provenance: FamilyProvenance) -> Self {
        let mut members = members;
        members.sort();
        members.dedup();
        PairFamily {
            members,
            provenance,
        }
    }

    /// Like [`PairFamily::new`], but a crossing family falls back to its
    /// greedy maximal non-crossing subfamily; the violation is returned
    /// alongside so callers can report it.
    pub fn new_with_fallback(
        g: &Graph,
        members: Vec<CutPair>,
        provenance: FamilyProvenance,
    ) -> Result<(Self, Option<Crossing>), TreeError> {
        match Self::new(g, members.clone(), provenance) {
            Ok(fam) => Ok((fam, None)),
            Err(TreeError::FamilyCrossing(witness)) => {
                let kept = greedy_noncrossing(g, &members);
                let fam = Self::new(g, kept, provenance)?;
                Ok((fam, Some(witness)))
            }
            Err(e) => Err(e),
        }
    }

    pub fn members(&self) -> &[CutPair] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn provenance(&self) -> FamilyProvenance {
        self.provenance
    }

    pub fn contains(&self, p: CutPair) -> bool {
        self.members.binary_search(&p).is_ok()
    }
}

/// True iff no slice of `r` has a closure containing all four vertices of
/// `p` and `q`.
pub fn pair_separates_pairs(
    g: &Graph,
    r: CutPair,
    p: CutPair,
    q: CutPair,
) -> Result<bool, TreeError> {
    if r == p || r == q {
        return Err(TreeError::SeparatorOfSelf(r));
    }
    let slices = slices_of_pair(g, r).map_err(|e| match e {
        crate::slice::SliceError::Graph(ge) => TreeError::Graph(ge),
        other => panic!("unexpected slice error: {other}"),
    })?;
    let wanted: Vec<_> = p.members().into_iter().chain(q.members()).collect();
    Ok(!slices
        .iter()
        .any(|s| wanted.iter().all(|&v| s.contains(v))))
}

/// Members of the family (other than `p`, `q`) that separate `p` from `q`,
/// sorted.
pub fn separator_set(
    g: &Graph,
    family: &PairFamily,
    p: CutPair,
    q: CutPair,
) -> Result<Vec<CutPair>, TreeError> {
    if !family.contains(p) {
        return Err(TreeError::NotInFamily(p));
    }
    if !family.contains(q) {
        return Err(TreeError::NotInFamily(q));
    }
    let mut out = Vec::new();
    for &r in family.members() {
        if r == p || r == q {
            continue;
        }
        if pair_separates_pairs(g, r, p, q)? {
            out.push(r);
        }
    }
    Ok(out)
}

/// The adjacency relation on a family: `p ~ q` iff `p != q` and no family
/// member separates them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyRelation {
    members: Vec<CutPair>,
    matrix: Vec<bool>,
}

impl AdjacencyRelation {
    pub fn members(&self) -> &[CutPair] {
        &self.members
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.matrix[i * self.members.len() + j]
    }

    /// Adjacent index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.members.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in (i + 1)..k {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

pub fn adjacency_graph(g: &Graph, family: &PairFamily) -> Result<AdjacencyRelation, TreeError> {
    let members = family.members().to_vec();
    let k = members.len();
    let mut matrix = vec![false; k * k];
    for i in 0..k {
        for j in (i + 1)..k {
            let adjacent = separator_set(g, family, members[i], members[j])?.is_empty();
            matrix[i * k + j] = adjacent;
            matrix[j * k + i] = adjacent;
        }
    }
    Ok(AdjacencyRelation { members, matrix })
}

/// A maximal set of pairwise-adjacent family members.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet {
    pub members: Vec<CutPair>,
}

/// All maximal cliques of the adjacency relation, isolated members included
/// as singletons, sorted.
pub fn vertex_sets(g: &Graph, family: &PairFamily) -> Result<Vec<VertexSet>, TreeError> {
    if family.len() > MAX_FAMILY_SIZE {
        return Err(TreeError::FamilyTooLarge(family.len()));
    }
    let adj = adjacency_graph(g, family)?;
    let k = adj.members().len();
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let all: BTreeSet<usize> = (0..k).collect();
    bron_kerbosch(&adj, &mut Vec::new(), all, BTreeSet::new(), &mut cliques);
    cliques.sort();
    let sets = cliques
        .into_iter()
        .map(|idxs| VertexSet {
            members: idxs.into_iter().map(|i| adj.members()[i]).collect(),
        })
        .collect();
    Ok(sets)
}

/// Bron-Kerbosch with pivoting; exhaustive and deterministic after the final
/// sort, which is all that desk-scale families need.
fn bron_kerbosch(
    adj: &AdjacencyRelation,
    current: &mut Vec<usize>,
    mut candidates: BTreeSet<usize>,
    mut excluded: BTreeSet<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() && excluded.is_empty() {
        let mut clique = current.clone();
        clique.sort();
        out.push(clique);
        return;
    }
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .copied()
        .max_by_key(|&u| candidates.iter().filter(|&&v| adj.adjacent(u, v)).count())
        .expect("candidates or excluded is nonempty");
    let frontier: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&v| !adj.adjacent(pivot, v))
        .collect();
    for v in frontier {
        current.push(v);
        let next_candidates = candidates
            .iter()
            .copied()
            .filter(|&u| adj.adjacent(v, u))
            .collect();
        let next_excluded = excluded
            .iter()
            .copied()
            .filter(|&u| adj.adjacent(v, u))
            .collect();
        bron_kerbosch(adj, current, next_candidates, next_excluded, out);
        current.pop();
        candidates.remove(&v);
        excluded.insert(v);
    }
}

/// A node of the incidence structure: a family member or a vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeNode {
    Pair(CutPair),
    Set(VertexSet),
}

impl TreeNode {
    pub fn is_pair(&self) -> bool {
        matches!(self, TreeNode::Pair(_))
    }
}

/// Bipartite incidence structure on family members and vertex sets.
/// Pair nodes come first (in family order), then set nodes (sorted); an edge
/// joins a pair to every set containing it. [`build_tree`] guarantees the
/// structure is a tree; [`build_incidence`] does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceTree {
    pub nodes: Vec<TreeNode>,
    pub edges: Vec<(usize, usize)>,
}

impl SliceTree {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn pair_node_index(&self, p: CutPair) -> Option<usize> {
        self.nodes
            .iter()
            .position(|n| matches!(n, TreeNode::Pair(q) if *q == p))
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// What went wrong when an incidence structure failed tree verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeDefect {
    Empty,
    /// Two nodes with no path between them.
    Disconnected { a: usize, b: usize },
    /// A cycle, listed as a closed node walk.
    Cycle { nodes: Vec<usize> },
}

impl std::fmt::Display for TreeDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TreeDefect::Empty => write!(f, "no nodes"),
            TreeDefect::Disconnected { a, b } => {
                write!(f, "no path between nodes {a} and {b}")
            }
            TreeDefect::Cycle { nodes } => write!(f, "cycle through nodes {nodes:?}"),
        }
    }
}

/// The incidence structure of a family, whether or not it is a tree.
pub fn build_incidence(g: &Graph, family: &PairFamily) -> Result<SliceTree, TreeError> {
    if family.is_empty() {
        return Err(TreeError::EmptyFamily);
    }
    let sets = vertex_sets(g, family)?;
    let mut nodes: Vec<TreeNode> = family
        .members()
        .iter()
        .map(|&p| TreeNode::Pair(p))
        .collect();
    let pair_count = nodes.len();
    let mut edges = Vec::new();
    for (si, set) in sets.iter().enumerate() {
        for &p in &set.members {
            let pi = family
                .members()
                .binary_search(&p)
                .expect("vertex set members come from the family");
            edges.push((pi, pair_count + si));
        }
    }
    nodes.extend(sets.into_iter().map(TreeNode::Set));
    edges.sort();
    Ok(SliceTree { nodes, edges })
}

/// Builds the incidence structure and verifies it is a tree; a forest or a
/// cycle comes back as a certified defect, never as a silent non-tree.
pub fn build_tree(g: &Graph, family: &PairFamily) -> Result<SliceTree, TreeError> {
    let t = build_incidence(g, family)?;
    verify_tree(&t).map_err(TreeError::NotATree)?;
    Ok(t)
}

/// Connectivity plus `|E| = |V| - 1`, with a named witness on failure.
pub fn verify_tree(t: &SliceTree) -> Result<(), TreeDefect> {
    if t.nodes.is_empty() {
        return Err(TreeDefect::Empty);
    }
    let adj = t.adjacency();
    let mut seen = vec![false; t.nodes.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    if let Some(unreached) = seen.iter().position(|&s| !s) {
        return Err(TreeDefect::Disconnected { a: 0, b: unreached });
    }
    if t.edges.len() != t.nodes.len() - 1 {
        return Err(TreeDefect::Cycle {
            nodes: find_cycle(t).expect("connected with |E| != |V|-1 must contain a cycle"),
        });
    }
    Ok(())
}

/// First cycle found by depth-first search, as a closed node walk. Tracks the
/// incoming edge id rather than the parent node, so duplicated edges count.
fn find_cycle(t: &SliceTree) -> Option<Vec<usize>> {
    let n = t.nodes.len();
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (eid, &(a, b)) in t.edges.iter().enumerate() {
        if a == b {
            return Some(vec![a]);
        }
        incident[a].push((b, eid));
        incident[b].push((a, eid));
    }
    let mut state = vec![0u8; n]; // 0 unseen, 1 on stack, 2 done
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, usize::MAX)];
        while let Some(&(v, via)) = stack.last() {
            if state[v] == 0 {
                state[v] = 1;
                for &(w, eid) in &incident[v] {
                    if eid == via {
                        continue;
                    }
                    if state[w] == 1 {
                        // Back edge: walk v up to w.
                        let mut cycle = vec![v];
                        let mut cur = v;
                        while cur != w {
                            let (p, _) = parent[cur].expect("on-stack nodes have parents");
                            cycle.push(p);
                            cur = p;
                        }
                        return Some(cycle);
                    }
                    if state[w] == 0 {
                        parent[w] = Some((v, eid));
                        stack.push((w, eid));
                    }
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Path between two nodes in a verified tree, endpoints included.
fn tree_path(t: &SliceTree, from: usize, to: usize) -> Vec<usize> {
    let adj = t.adjacency();
    let mut parent: Vec<Option<usize>> = vec![None; t.nodes.len()];
    let mut seen = vec![false; t.nodes.len()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur].expect("tree is connected");
        path.push(cur);
    }
    path.reverse();
    path
}

/// For every pair `p, q` of family members, the separator set must equal the
/// pair nodes strictly between them on the unique tree path.
pub fn path_separator_check(
    g: &Graph,
    family: &PairFamily,
    t: &SliceTree,
) -> Result<(), TreeError> {
    let index: BTreeMap<CutPair, usize> = family
        .members()
        .iter()
        .map(|&p| {
            let i = t.pair_node_index(p).expect("family member has a pair node");
            (p, i)
        })
        .collect();
    for (i, &p) in family.members().iter().enumerate() {
        for &q in &family.members()[i + 1..] {
            let separators = separator_set(g, family, p, q)?;
            let path = tree_path(t, index[&p], index[&q]);
            let mut on_path: Vec<CutPair> = path[1..path.len() - 1]
                .iter()
                .filter_map(|&ni| match &t.nodes[ni] {
                    TreeNode::Pair(r) => Some(*r),
                    TreeNode::Set(_) => None,
                })
                .collect();
            on_path.sort();
            if separators != on_path {
                return Err(TreeError::PathSeparatorMismatch {
                    p,
                    q,
                    separators,
                    on_path,
                });
            }
        }
    }
    Ok(())
}
