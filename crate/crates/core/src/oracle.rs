//! Naive reference implementations used as ground truth in property and
//! differential tests. These deliberately share no traversal code with
//! the `graph` module: components come from label propagation instead of
//! breadth-first search, cut pairs from brute force over all pairs, and
//! tree-ness from fixed-point reachability.

use crate::graph::{ComponentPartition, CutPair, Graph, GraphError, VertexId};

/// Components of `g - removed` by label propagation to a fixed point.
///
/// Every vertex starts labeled with itself; each sweep lowers both endpoint
/// labels of every surviving edge to their minimum, until nothing changes.
/// The final label of a vertex is the smallest vertex id in its component.
pub fn naive_components(
    g: &Graph,
    removed: &[VertexId],
) -> Result<ComponentPartition, GraphError> {
    for &v in removed {
        if !g.contains(v) {
            return Err(GraphError::UnknownVertex(v, g.n()));
        }
    }
    let mut gone = vec![false; g.n()];
    for &v in removed {
        gone[v.index()] = true;
    }
    let mut label: Vec<usize> = (0..g.n()).collect();
    loop {
        let mut changed = false;
        for &(a, b) in g.edges() {
            if gone[a.index()] || gone[b.index()] {
                continue;
            }
            let m = label[a.index()].min(label[b.index()]);
            if label[a.index()] != m {
                label[a.index()] = m;
                changed = true;
            }
            if label[b.index()] != m {
                label[b.index()] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<VertexId>> =
        std::collections::BTreeMap::new();
    for i in 0..g.n() {
        if !gone[i] {
            groups.entry(label[i]).or_default().push(VertexId(i));
        }
    }
    let mut removed_sorted: Vec<VertexId> = removed.to_vec();
    removed_sorted.sort();
    removed_sorted.dedup();
    Ok(ComponentPartition {
        removed: removed_sorted,
        parts: groups.into_values().collect(),
    })
}

/// Brute force over all C(n,2) pairs: `{a,b}` is a cut pair iff removing it
/// leaves at least two components.
pub fn naive_cut_pairs(g: &Graph) -> Vec<CutPair> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in (a + 1)..g.n() {
            let parts = naive_components(g, &[VertexId(a), VertexId(b)])
                .expect("vertices in range")
                .parts;
            if parts.len() >= 2 {
                out.push(CutPair::new(VertexId(a), VertexId(b)));
            }
        }
    }
    out
}

/// Tree check on an abstract node/edge list: `|E| = |V| - 1` and every node
/// reachable from node 0, where reachability is computed by running edge
/// relaxation to a fixed point.
pub fn naive_tree_check(node_count: usize, edges: &[(usize, usize)]) -> bool {
    if node_count == 0 {
        return false;
    }
    if edges.len() != node_count - 1 {
        return false;
    }
    let mut reached = vec![false; node_count];
    reached[0] = true;
    loop {
        let mut changed = false;
        for &(a, b) in edges {
            if a >= node_count || b >= node_count {
                return false;
            }
            if reached[a] != reached[b] {
                reached[a] = true;
                reached[b] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    reached.iter().all(|&r| r)
}
