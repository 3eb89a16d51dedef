//! Finite simple undirected graphs and the exact connectivity primitives the
//! rest of the crate is built on: component partitions under vertex removal,
//! cut vertices, the block-cut tree, and enumeration of separating pairs.

use std::fmt;

use thiserror::Error;

/// Index of a vertex, dense in `0..n` for its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    UnknownVertex(VertexId, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has a cut vertex: {0}")]
    NotTwoConnected(VertexId),
    #[error("graph has {n} vertices, need at least {min}")]
    TooSmall { n: usize, min: usize },
    #[error("vertex {0} collides with the removed pair")]
    VertexCollision(VertexId),
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Loops and multi-edges are rejected at construction. The edge list is kept
/// normalized (`a < b`, sorted) and the per-vertex neighbor lists sorted, so
/// every operation downstream is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut norm: Vec<(VertexId, VertexId)> = Vec::with_capacity(edges.len());
        for &(x, y) in edges {
            if x >= n {
                return Err(GraphError::UnknownVertex(VertexId(x), n));
            }
            if y >= n {
                return Err(GraphError::UnknownVertex(VertexId(y), n));
            }
            if x == y {
                return Err(GraphError::LoopEdge(VertexId(x)));
            }
            let (a, b) = if x < y { (x, y) } else { (y, x) };
            norm.push((VertexId(a), VertexId(b)));
        }
        norm.sort();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for &(a, b) in &norm {
            adj[a.index()].push(b);
            adj[b.index()].push(a);
        }
        for list in &mut adj {
            list.sort();
        }
        Ok(Graph { n, edges: norm, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn are_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.adj[a.index()].binary_search(&b).is_ok()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index() < self.n
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v, self.n))
        }
    }
}

/// Unordered pair of distinct vertices, normalized so `a < b`.
///
/// Any distinct pair can be held in a `CutPair`; the "removal disconnects"
/// property is guaranteed only for pairs produced by [`enumerate_cut_pairs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CutPair {
    a: VertexId,
    b: VertexId,
}

impl CutPair {
    /// Panics if `x == y`.
    pub fn new(x: VertexId, y: VertexId) -> Self {
        Self::try_new(x, y).expect("cut pair members must be distinct")
    }

    pub fn try_new(x: VertexId, y: VertexId) -> Option<Self> {
        if x == y {
            None
        } else if x < y {
            Some(CutPair { a: x, b: y })
        } else {
            Some(CutPair { a: y, b: x })
        }
    }

    #[inline]
    pub fn a(self) -> VertexId {
        self.a
    }

    #[inline]
    pub fn b(self) -> VertexId {
        self.b
    }

    pub fn members(self) -> [VertexId; 2] {
        [self.a, self.b]
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for CutPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

/// The connected components of a graph after removing a vertex set.
///
/// Parts are sorted internally and ordered by their smallest vertex; the
/// union of the parts is exactly the set of non-removed vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub removed: Vec<VertexId>,
    pub parts: Vec<Vec<VertexId>>,
}

impl ComponentPartition {
    pub fn part_of(&self, v: VertexId) -> Option<usize> {
        self.parts
            .iter()
            .position(|p| p.binary_search(&v).is_ok())
    }

    /// Dense lookup table: `map[v] = Some(part index)` for surviving vertices.
    pub fn part_index_map(&self, n: usize) -> Vec<Option<usize>> {
        let mut map = vec![None; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                map[v.index()] = Some(i);
            }
        }
        map
    }
}

/// Components of `g` with `removed` deleted, via breadth-first search.
pub fn components(g: &Graph, removed: &[VertexId]) -> Result<ComponentPartition, GraphError> {
    for &v in removed {
        g.check_vertex(v)?;
    }
    let mut gone = vec![false; g.n()];
    for &v in removed {
        gone[v.index()] = true;
    }
    let mut seen = vec![false; g.n()];
    let mut parts: Vec<Vec<VertexId>> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    for start in g.vertices() {
        if gone[start.index()] || seen[start.index()] {
            continue;
        }
        let mut part = Vec::new();
        seen[start.index()] = true;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            part.push(v);
            for &w in g.neighbors(v) {
                if !gone[w.index()] && !seen[w.index()] {
                    seen[w.index()] = true;
                    queue.push_back(w);
                }
            }
        }
        part.sort();
        parts.push(part);
    }
    let mut removed_sorted: Vec<VertexId> = removed.to_vec();
    removed_sorted.sort();
    removed_sorted.dedup();
    let partition = ComponentPartition {
        removed: removed_sorted,
        parts,
    };
    #[cfg(debug_assertions)]
    validate_partition(g, &partition);
    Ok(partition)
}

/// Debug-build self-check: parts disjointly cover the survivors and no edge
/// joins two distinct parts.
#[cfg(debug_assertions)]
fn validate_partition(g: &Graph, partition: &ComponentPartition) {
    let map = partition.part_index_map(g.n());
    let mut covered = 0;
    for (i, part) in partition.parts.iter().enumerate() {
        covered += part.len();
        for &x in part {
            assert_eq!(map[x.index()], Some(i), "parts must be disjoint");
        }
    }
    assert_eq!(
        covered,
        g.n() - partition.removed.len(),
        "parts must cover all surviving vertices"
    );
    for &r in &partition.removed {
        assert_eq!(map[r.index()], None);
    }
    for &(a, b) in g.edges() {
        if let (Some(x), Some(y)) = (map[a.index()], map[b.index()]) {
            assert_eq!(x, y, "no edge may join two distinct parts");
        }
    }
}

/// True iff `g` has at most one component. The empty graph counts as
/// connected.
pub fn is_connected(g: &Graph) -> bool {
    components(g, &[]).expect("no removals").parts.len() <= 1
}

struct ArtState<'g> {
    g: &'g Graph,
    skip: Option<VertexId>,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    points: Vec<bool>,
}

impl ArtState<'_> {
    fn dfs(&mut self, v: VertexId, parent: Option<VertexId>) {
        self.time += 1;
        self.disc[v.index()] = self.time;
        self.low[v.index()] = self.time;
        let mut children = 0;
        for &w in self.g.neighbors(v) {
            if Some(w) == self.skip || Some(w) == parent {
                continue;
            }
            if self.disc[w.index()] == 0 {
                children += 1;
                self.dfs(w, Some(v));
                self.low[v.index()] = self.low[v.index()].min(self.low[w.index()]);
                if parent.is_some() && self.low[w.index()] >= self.disc[v.index()] {
                    self.points[v.index()] = true;
                }
            } else {
                self.low[v.index()] = self.low[v.index()].min(self.disc[w.index()]);
            }
        }
        if parent.is_none() && children >= 2 {
            self.points[v.index()] = true;
        }
    }
}

/// Articulation points of `g` with `skip` (if any) treated as deleted.
/// Assumes the graph minus `skip` is connected.
fn articulation_points(g: &Graph, skip: Option<VertexId>) -> Vec<VertexId> {
    let mut st = ArtState {
        g,
        skip,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        points: vec![false; g.n()],
    };
    if let Some(root) = g.vertices().find(|&v| Some(v) != skip) {
        st.dfs(root, None);
    }
    st.points
        .iter()
        .enumerate()
        .filter(|(_, &p)| p)
        .map(|(i, _)| VertexId(i))
        .collect()
}

/// Vertices whose removal disconnects `g`. Errors on disconnected input.
pub fn cut_vertices(g: &Graph) -> Result<Vec<VertexId>, GraphError> {
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    Ok(articulation_points(g, None))
}

/// True iff `g` is connected, has no cut vertex, and `n >= 3`.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && is_connected(g) && articulation_points(g, None).is_empty()
}

/// The bipartite tree of maximal 2-connected blocks and cut vertices.
///
/// Block nodes are vertex sets (a bridge edge is a 2-vertex block); an edge
/// joins a cut vertex to every block that contains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    pub blocks: Vec<Vec<VertexId>>,
    pub cut_vertices: Vec<VertexId>,
    /// `(block index, cut-vertex index)` incidences, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl BlockCutTree {
    pub fn node_count(&self) -> usize {
        self.blocks.len() + self.cut_vertices.len()
    }
}

struct BlockState<'g> {
    g: &'g Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(VertexId, VertexId)>,
    blocks: Vec<Vec<VertexId>>,
}

impl BlockState<'_> {
    fn dfs(&mut self, v: VertexId, parent: Option<VertexId>) {
        self.time += 1;
        self.disc[v.index()] = self.time;
        self.low[v.index()] = self.time;
        let mut parent_skipped = false;
        for &w in self.g.neighbors(v) {
            // Skip the tree edge to the parent once; a parallel edge would
            // have been rejected at construction.
            if Some(w) == parent && !parent_skipped {
                parent_skipped = true;
                continue;
            }
            if self.disc[w.index()] == 0 {
                self.stack.push((v, w));
                self.dfs(w, Some(v));
                self.low[v.index()] = self.low[v.index()].min(self.low[w.index()]);
                if self.low[w.index()] >= self.disc[v.index()] {
                    let mut verts = std::collections::BTreeSet::new();
                    while let Some(&(x, y)) = self.stack.last() {
                        if self.disc[x.index()] >= self.disc[w.index()] {
                            self.stack.pop();
                            verts.insert(x);
                            verts.insert(y);
                        } else {
                            break;
                        }
                    }
                    // The edge (v, w) itself.
                    if let Some(&(x, y)) = self.stack.last() {
                        if (x, y) == (v, w) {
                            self.stack.pop();
                            verts.insert(x);
                            verts.insert(y);
                        }
                    }
                    verts.insert(v);
                    verts.insert(w);
                    self.blocks.push(verts.into_iter().collect());
                }
            } else if self.disc[w.index()] < self.disc[v.index()] {
                self.stack.push((v, w));
                self.low[v.index()] = self.low[v.index()].min(self.disc[w.index()]);
            }
        }
    }
}

/// Block-cut tree of a connected graph.
pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree, GraphError> {
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    if g.n() == 0 {
        return Ok(BlockCutTree {
            blocks: Vec::new(),
            cut_vertices: Vec::new(),
            edges: Vec::new(),
        });
    }
    if g.n() == 1 {
        return Ok(BlockCutTree {
            blocks: vec![vec![VertexId(0)]],
            cut_vertices: Vec::new(),
            edges: Vec::new(),
        });
    }
    let mut st = BlockState {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    st.dfs(VertexId(0), None);
    debug_assert!(st.stack.is_empty());
    let mut blocks = st.blocks;
    blocks.sort();
    let cuts = articulation_points(g, None);
    let mut edges = Vec::new();
    for (bi, block) in blocks.iter().enumerate() {
        for (ci, &c) in cuts.iter().enumerate() {
            if block.binary_search(&c).is_ok() {
                edges.push((bi, ci));
            }
        }
    }
    edges.sort();
    Ok(BlockCutTree {
        blocks,
        cut_vertices: cuts,
        edges,
    })
}

/// All pairs `{a,b}` whose removal disconnects `g`, sorted lexicographically.
///
/// Requires a 2-connected graph on at least 4 vertices. Rather than testing
/// every pair, removes each vertex `a` in turn and reads off the articulation
/// points of the remainder; `{a,b}` separates exactly when `b` is one.
pub fn enumerate_cut_pairs(g: &Graph) -> Result<Vec<CutPair>, GraphError> {
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    if let Some(&cv) = articulation_points(g, None).first() {
        return Err(GraphError::NotTwoConnected(cv));
    }
    if g.n() < 4 {
        return Err(GraphError::TooSmall { n: g.n(), min: 4 });
    }
    let mut pairs = std::collections::BTreeSet::new();
    for a in g.vertices() {
        for b in articulation_points(g, Some(a)) {
            pairs.insert(CutPair::new(a, b));
        }
    }
    Ok(pairs.into_iter().collect())
}

/// True iff `a` and `b` land in distinct components of `g - {p.a, p.b}`.
pub fn separates(g: &Graph, p: CutPair, a: VertexId, b: VertexId) -> Result<bool, GraphError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if p.contains(a) {
        return Err(GraphError::VertexCollision(a));
    }
    if p.contains(b) {
        return Err(GraphError::VertexCollision(b));
    }
    let partition = components(g, &[p.a(), p.b()])?;
    let map = partition.part_index_map(g.n());
    Ok(match (map[a.index()], map[b.index()]) {
        (Some(x), Some(y)) => x != y,
        _ => false,
    })
}

/// True iff `g` is a cycle: connected, `n >= 3`, every degree exactly 2.
pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.vertices().all(|v| g.degree(v) == 2) && is_connected(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn v(i: usize) -> VertexId {
        VertexId(i)
    }

    fn pair(a: usize, b: usize) -> CutPair {
        CutPair::new(v(a), v(b))
    }

    fn ids(xs: &[usize]) -> Vec<VertexId> {
        xs.iter().map(|&i| v(i)).collect()
    }

    fn c6() -> Graph {
        generate::cycle(6).unwrap()
    }

    fn theta222() -> Graph {
        generate::theta(2, 2, 2).unwrap()
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert_eq!(
            Graph::new(2, &[(0, 0)]),
            Err(GraphError::LoopEdge(v(0)))
        );
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(v(0), v(1)))
        );
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::UnknownVertex(v(2), 2))
        );
    }

    #[test]
    fn adjacency_agrees_with_edges() {
        let g = theta222();
        assert_eq!(g.neighbors(v(0)), &ids(&[2, 3, 4])[..]);
        assert_eq!(g.neighbors(v(2)), &ids(&[0, 1])[..]);
        assert!(g.are_adjacent(v(0), v(2)));
        assert!(!g.are_adjacent(v(0), v(1)));
    }

    #[test]
    fn components_cycle_minus_antipodal_pair() {
        let parts = components(&c6(), &[v(0), v(3)]).unwrap().parts;
        assert_eq!(parts, vec![ids(&[1, 2]), ids(&[4, 5])]);
    }

    #[test]
    fn components_empty_removal_is_identity() {
        let got = components(&c6(), &[]).unwrap();
        assert_eq!(got.parts, vec![ids(&[0, 1, 2, 3, 4, 5])]);
    }

    #[test]
    fn components_theta_minus_hubs() {
        let parts = components(&theta222(), &[v(0), v(1)]).unwrap().parts;
        assert_eq!(parts, vec![ids(&[2]), ids(&[3]), ids(&[4])]);
    }

    #[test]
    fn components_rejects_unknown_vertex() {
        assert_eq!(
            components(&c6(), &[v(9)]),
            Err(GraphError::UnknownVertex(v(9), 6))
        );
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&c6()));
        assert!(is_connected(&theta222()));
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_connected(&two_edges));
        assert!(is_connected(&Graph::new(0, &[]).unwrap()));
    }

    #[test]
    fn cut_vertices_path_and_cycle() {
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(cut_vertices(&path).unwrap(), ids(&[1]));
        assert_eq!(cut_vertices(&c6()).unwrap(), Vec::<VertexId>::new());
    }

    #[test]
    fn cut_vertices_two_triangles_sharing_a_vertex() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(cut_vertices(&g).unwrap(), ids(&[2]));
    }

    #[test]
    fn cut_vertices_rejects_disconnected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(cut_vertices(&g), Err(GraphError::Disconnected));
    }

    #[test]
    fn block_cut_tree_two_triangles() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let t = block_cut_tree(&g).unwrap();
        assert_eq!(t.blocks, vec![ids(&[0, 1, 2]), ids(&[2, 3, 4])]);
        assert_eq!(t.cut_vertices, ids(&[2]));
        assert_eq!(t.edges, vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn block_cut_tree_single_block() {
        let t = block_cut_tree(&c6()).unwrap();
        assert_eq!(t.blocks.len(), 1);
        assert_eq!(t.blocks[0], ids(&[0, 1, 2, 3, 4, 5]));
        assert!(t.cut_vertices.is_empty());
        assert!(t.edges.is_empty());
    }

    #[test]
    fn block_cut_tree_path() {
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let t = block_cut_tree(&path).unwrap();
        assert_eq!(t.blocks, vec![ids(&[0, 1]), ids(&[1, 2])]);
        assert_eq!(t.cut_vertices, ids(&[1]));
        assert_eq!(t.edges, vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn cut_pairs_theta() {
        assert_eq!(enumerate_cut_pairs(&theta222()).unwrap(), vec![pair(0, 1)]);
    }

    #[test]
    fn cut_pairs_complete_graph_has_none() {
        let k4 = generate::complete(4).unwrap();
        assert!(enumerate_cut_pairs(&k4).unwrap().is_empty());
    }

    #[test]
    fn cut_pairs_cycle_are_the_distance_two_pairs() {
        let expected: Vec<CutPair> = [
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 4),
            (2, 5),
            (3, 5),
        ]
        .iter()
        .map(|&(a, b)| pair(a, b))
        .collect();
        assert_eq!(enumerate_cut_pairs(&c6()).unwrap(), expected);
    }

    #[test]
    fn cut_pairs_report_precondition_violations() {
        let path = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            enumerate_cut_pairs(&path),
            Err(GraphError::NotTwoConnected(v(1)))
        );
        let k3 = generate::complete(3).unwrap();
        assert_eq!(
            enumerate_cut_pairs(&k3),
            Err(GraphError::TooSmall { n: 3, min: 4 })
        );
    }

    #[test]
    fn separates_on_cycle_and_theta() {
        let g = c6();
        assert!(separates(&g, pair(0, 3), v(1), v(4)).unwrap());
        assert!(!separates(&g, pair(0, 3), v(1), v(2)).unwrap());
        assert!(separates(&theta222(), pair(0, 1), v(2), v(3)).unwrap());
        assert_eq!(
            separates(&g, pair(0, 3), v(0), v(4)),
            Err(GraphError::VertexCollision(v(0)))
        );
    }

    #[test]
    fn cycle_recognition() {
        assert!(is_cycle(&c6()));
        assert!(!is_cycle(&theta222()));
        assert!(!is_cycle(&generate::complete(4).unwrap()));
        // Two disjoint triangles: 2-regular but disconnected.
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_cycle(&g));
    }
}
