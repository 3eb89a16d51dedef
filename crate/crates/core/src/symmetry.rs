//! The automorphism group of a graph, orbits of vertex pairs, and the action
//! of the group on a slice tree, with the edge-stabilizer and global
//! fixed-point diagnostics.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{CutPair, Graph, VertexId};
use crate::tree::{PairFamily, SliceTree, TreeNode, VertexSet};

/// Default vertex-count cap for exhaustive enumeration.
pub const DEFAULT_AUT_CAP: usize = 12;

/// A permutation of the vertices preserving the edge set exactly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Automorphism {
    image: Vec<VertexId>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism {
            image: (0..n).map(VertexId).collect(),
        }
    }

    /// Wraps a raw image array; callers are responsible for it being a
    /// bijection that preserves edges.
    pub fn from_image(image: Vec<VertexId>) -> Self {
        Automorphism { image }
    }

    pub fn image(&self) -> &[VertexId] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, v: VertexId) -> VertexId {
        self.image[v.index()]
    }

    pub fn apply_pair(&self, p: CutPair) -> CutPair {
        CutPair::new(self.apply(p.a()), self.apply(p.b()))
    }

    /// `self.compose(other)` applies `other` first, then `self`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            image: other.image.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![VertexId(0); self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v.index()] = VertexId(i);
        }
        Automorphism { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v.index() == i)
    }
}

/// The full automorphism group, identity first, the rest sorted by image
/// array. Closure under composition and inverse is verified after
/// enumeration (sampled once the group gets large).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    elements: Vec<Automorphism>,
}

impl AutomorphismGroup {
    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("graph has {n} vertices, automorphism cap is {cap} (raise the cap to proceed)")]
    CapExceeded { n: usize, cap: usize },
    #[error("family is not closed under the group action: element {element} maps {pair} to {image}, which is not a member")]
    FamilyNotClosed {
        element: usize,
        pair: CutPair,
        image: CutPair,
    },
    #[error("element {element} maps a vertex set to {image:?}, which is not a vertex set of the tree")]
    ImageNotVertexSet {
        element: usize,
        image: Vec<CutPair>,
    },
    #[error("element {element} maps tree edge ({a},{b}) to ({ia},{ib}), which is not an edge")]
    EdgeNotPreserved {
        element: usize,
        a: usize,
        b: usize,
        ia: usize,
        ib: usize,
    },
}

/// One-dimensional refinement: start from degrees, then repeatedly re-color
/// by (color, sorted multiset of neighbor colors) until stable. Backtracking
/// only ever maps within a color class.
fn stable_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|i| g.degree(VertexId(i))).collect();
    normalize_colors(&mut colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for i in 0..n {
            let mut nbr: Vec<usize> = g
                .neighbors(VertexId(i))
                .iter()
                .map(|w| colors[w.index()])
                .collect();
            nbr.sort_unstable();
            sigs.push((colors[i], nbr));
        }
        let mut ranks: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for sig in &sigs {
            let next = ranks.len();
            ranks.entry(sig).or_insert(next);
        }
        let new_colors: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        if new_colors == colors {
            return colors;
        }
        colors = new_colors;
    }
}

fn normalize_colors(colors: &mut [usize]) {
    let mut ranks: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in colors.iter() {
        let next = ranks.len();
        ranks.entry(c).or_insert(next);
    }
    for c in colors.iter_mut() {
        *c = ranks[c];
    }
}

struct AutSearch<'g> {
    g: &'g Graph,
    colors: Vec<usize>,
    adj: Vec<bool>,
    image: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Automorphism>,
}

impl AutSearch<'_> {
    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.g.n() + b]
    }

    fn assign(&mut self, v: usize) {
        let n = self.g.n();
        if v == n {
            self.found.push(Automorphism {
                image: self.image.iter().map(|&w| VertexId(w)).collect(),
            });
            return;
        }
        for w in 0..n {
            if self.used[w] || self.colors[w] != self.colors[v] {
                continue;
            }
            let consistent = (0..v).all(|u| self.adjacent(u, v) == self.adjacent(self.image[u], w));
            if consistent {
                self.image[v] = w;
                self.used[w] = true;
                self.assign(v + 1);
                self.used[w] = false;
            }
        }
    }
}

/// Exhaustive enumeration with the default cap of [`DEFAULT_AUT_CAP`].
pub fn automorphisms(g: &Graph) -> Result<AutomorphismGroup, SymmetryError> {
    automorphisms_with_cap(g, DEFAULT_AUT_CAP)
}

/// Exhaustive degree/neighborhood-refined backtracking over vertex images.
pub fn automorphisms_with_cap(g: &Graph, cap: usize) -> Result<AutomorphismGroup, SymmetryError> {
    let n = g.n();
    if n > cap {
        return Err(SymmetryError::CapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(AutomorphismGroup {
            elements: vec![Automorphism::identity(0)],
        });
    }
    let mut adj = vec![false; n * n];
    for &(a, b) in g.edges() {
        adj[a.index() * n + b.index()] = true;
        adj[b.index() * n + a.index()] = true;
    }
    let mut search = AutSearch {
        g,
        colors: stable_colors(g),
        adj,
        image: vec![0; n],
        used: vec![false; n],
        found: Vec::new(),
    };
    search.assign(0);
    let mut elements = search.found;
    elements.sort();
    let group = AutomorphismGroup { elements };
    verify_group(g, &group);
    Ok(group)
}

/// Post-enumeration sanity: identity present, every element preserves every
/// edge, closed under inverse, and closed under composition (full table for
/// small groups, a deterministic sample for large ones). Violations are bugs
/// in the enumeration, so they panic.
fn verify_group(g: &Graph, group: &AutomorphismGroup) {
    assert!(
        group.elements.first().is_some_and(|e| e.is_identity()),
        "identity must be the first element"
    );
    for e in &group.elements {
        for &(a, b) in g.edges() {
            assert!(
                g.are_adjacent(e.apply(a), e.apply(b)),
                "automorphism must preserve edges"
            );
        }
    }
    let index: BTreeSet<&[VertexId]> =
        group.elements.iter().map(|e| e.image()).collect();
    let contains = |a: &Automorphism| index.contains(a.image());
    for e in &group.elements {
        assert!(contains(&e.inverse()), "group must be closed under inverse");
    }
    if group.order() <= 2000 {
        for e in &group.elements {
            for f in &group.elements {
                assert!(
                    contains(&e.compose(f)),
                    "group must be closed under composition"
                );
            }
        }
    } else {
        let first = &group.elements[1.min(group.order() - 1)];
        for e in &group.elements {
            assert!(contains(&e.compose(e)), "closure sample failed");
            assert!(contains(&e.compose(first)), "closure sample failed");
        }
    }
}

/// All images of `p` under the group, normalized, deduplicated and sorted.
pub fn orbit_of_pair(group: &AutomorphismGroup, p: CutPair) -> Vec<CutPair> {
    let orbit: BTreeSet<CutPair> = group
        .elements()
        .iter()
        .map(|e| e.apply_pair(p))
        .collect();
    orbit.into_iter().collect()
}

/// The action of every group element on the tree nodes: one node-index
/// permutation per element, in group order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeAction {
    pub node_images: Vec<Vec<usize>>,
}

impl TreeAction {
    /// Node indices fixed by every element.
    pub fn fixed_nodes(&self, node_count: usize) -> Vec<usize> {
        (0..node_count)
            .filter(|&i| self.node_images.iter().all(|img| img[i] == i))
            .collect()
    }
}

/// Computes `g . PairNode(p) = PairNode(g p)` and `g . SetNode(V) = SetNode(g V)`
/// for every element, verifying that each map permutes the nodes and
/// preserves the edges.
///
/// Requires the family to be closed under the action and every image of a
/// vertex set to be a vertex set; failures mean the inputs do not fit
/// together and are returned as errors.
pub fn action_on_tree(
    group: &AutomorphismGroup,
    family: &PairFamily,
    t: &SliceTree,
) -> Result<TreeAction, SymmetryError> {
    let mut pair_index: BTreeMap<CutPair, usize> = BTreeMap::new();
    let mut set_index: BTreeMap<&[CutPair], usize> = BTreeMap::new();
    for (i, node) in t.nodes.iter().enumerate() {
        match node {
            TreeNode::Pair(p) => {
                pair_index.insert(*p, i);
            }
            TreeNode::Set(VertexSet { members }) => {
                set_index.insert(members.as_slice(), i);
            }
        }
    }
    let edge_set: BTreeSet<(usize, usize)> = t
        .edges
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    let mut node_images = Vec::with_capacity(group.order());
    for (ei, e) in group.elements().iter().enumerate() {
        let mut img = vec![0usize; t.nodes.len()];
        for (i, node) in t.nodes.iter().enumerate() {
            img[i] = match node {
                TreeNode::Pair(p) => {
                    let q = e.apply_pair(*p);
                    if !family.contains(q) {
                        return Err(SymmetryError::FamilyNotClosed {
                            element: ei,
                            pair: *p,
                            image: q,
                        });
                    }
                    pair_index[&q]
                }
                TreeNode::Set(VertexSet { members }) => {
                    let mut mapped: Vec<CutPair> =
                        members.iter().map(|&p| e.apply_pair(p)).collect();
                    mapped.sort();
                    match set_index.get(mapped.as_slice()) {
                        Some(&i) => i,
                        None => {
                            return Err(SymmetryError::ImageNotVertexSet {
                                element: ei,
                                image: mapped,
                            })
                        }
                    }
                }
            };
        }
        let mut seen = vec![false; img.len()];
        for &i in &img {
            assert!(!seen[i], "node map must be a permutation");
            seen[i] = true;
        }
        for &(a, b) in &t.edges {
            let (ia, ib) = (img[a].min(img[b]), img[a].max(img[b]));
            if !edge_set.contains(&(ia, ib)) {
                return Err(SymmetryError::EdgeNotPreserved {
                    element: ei,
                    a,
                    b,
                    ia,
                    ib,
                });
            }
        }
        node_images.push(img);
    }
    Ok(TreeAction { node_images })
}

/// First failure of the edge-stabilizer property, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeStabilizerFailure {
    pub element: usize,
    pub edge: (usize, usize),
    pub pair: CutPair,
}

/// Every element that stabilizes an edge (as a two-node set) must fix the
/// edge's pair node, and with it the underlying vertex pair setwise.
pub fn edge_stabilizer_check(
    group: &AutomorphismGroup,
    t: &SliceTree,
    action: &TreeAction,
) -> Result<(), EdgeStabilizerFailure> {
    for (ei, img) in action.node_images.iter().enumerate() {
        for &(a, b) in &t.edges {
            let stabilizes =
                (img[a] == a && img[b] == b) || (img[a] == b && img[b] == a);
            if !stabilizes {
                continue;
            }
            let (pair_node, pair) = match (&t.nodes[a], &t.nodes[b]) {
                (TreeNode::Pair(p), _) => (a, *p),
                (_, TreeNode::Pair(p)) => (b, *p),
                _ => continue,
            };
            let fixed_node = img[pair_node] == pair_node;
            let fixed_pair = group.elements()[ei].apply_pair(pair) == pair;
            if !(fixed_node && fixed_pair) {
                return Err(EdgeStabilizerFailure {
                    element: ei,
                    edge: (a, b),
                    pair,
                });
            }
        }
    }
    Ok(())
}

/// Exact list of node indices fixed by the whole group. The splitting
/// reading of the tree wants this empty; finite models often report fixed
/// nodes instead, which callers surface rather than suppress.
pub fn global_fixed_point_check(action: &TreeAction, t: &SliceTree) -> Vec<usize> {
    action.fixed_nodes(t.node_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::tree::{build_incidence, build_tree, FamilyProvenance};

    fn pair(a: usize, b: usize) -> CutPair {
        CutPair::new(VertexId(a), VertexId(b))
    }

    #[test]
    fn dihedral_group_of_the_hexagon() {
        let g = generate::cycle(6).unwrap();
        let group = automorphisms(&g).unwrap();
        assert_eq!(group.order(), 12);
        assert!(group.elements()[0].is_identity());
    }

    #[test]
    fn theta_group_swaps_hubs_and_permutes_midpoints() {
        let g = generate::theta(2, 2, 2).unwrap();
        let group = automorphisms(&g).unwrap();
        assert_eq!(group.order(), 12);
    }

    #[test]
    fn off_center_pendant_tree_is_asymmetric() {
        // Path 0-1-2-3-4-5 with a pendant 6 at vertex 2: the three branch
        // lengths at the unique degree-3 vertex differ.
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).unwrap();
        let group = automorphisms(&g).unwrap();
        assert_eq!(group.order(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let g = generate::theta_chain(3, 2).unwrap(); // 13 vertices
        assert_eq!(
            automorphisms(&g).unwrap_err(),
            SymmetryError::CapExceeded { n: 13, cap: 12 }
        );
        assert_eq!(automorphisms_with_cap(&g, 16).unwrap().order(), 432);
    }

    #[test]
    fn orbits_of_pairs() {
        let theta = generate::theta(2, 2, 2).unwrap();
        let group = automorphisms(&theta).unwrap();
        assert_eq!(orbit_of_pair(&group, pair(0, 1)), vec![pair(0, 1)]);

        let c6 = generate::cycle(6).unwrap();
        let group = automorphisms(&c6).unwrap();
        assert_eq!(
            orbit_of_pair(&group, pair(0, 3)),
            vec![pair(0, 3), pair(1, 4), pair(2, 5)]
        );

        let trivial = AutomorphismGroup {
            elements: vec![Automorphism::identity(6)],
        };
        assert_eq!(orbit_of_pair(&trivial, pair(0, 3)), vec![pair(0, 3)]);
    }

    #[test]
    fn orbit_is_closed_under_the_action() {
        for (_, g) in generate::curated_corpus() {
            if g.n() > 10 || !crate::graph::is_two_connected(&g) {
                continue;
            }
            let Ok(pairs) = crate::graph::enumerate_cut_pairs(&g) else {
                continue;
            };
            let Some(&p) = pairs.first() else { continue };
            let group = automorphisms(&g).unwrap();
            let orbit = orbit_of_pair(&group, p);
            for e in group.elements() {
                for &q in &orbit {
                    assert!(orbit.binary_search(&e.apply_pair(q)).is_ok());
                }
            }
        }
    }

    #[test]
    fn action_on_theta_tree_fixes_both_nodes() {
        let g = generate::theta(2, 2, 2).unwrap();
        let group = automorphisms(&g).unwrap();
        let fam = PairFamily::new(&g, vec![pair(0, 1)], FamilyProvenance::UserSupplied).unwrap();
        let t = build_tree(&g, &fam).unwrap();
        let action = action_on_tree(&group, &fam, &t).unwrap();
        for img in &action.node_images {
            assert_eq!(img, &vec![0, 1]);
        }
        assert_eq!(global_fixed_point_check(&action, &t), vec![0, 1]);
        assert!(edge_stabilizer_check(&group, &t, &action).is_ok());
    }

    #[test]
    fn rotation_permutes_the_hexagon_pair_nodes() {
        // The C_6 orbit family is crossing and gives a forest; the action is
        // still a node permutation preserving the incidence edges.
        let g = generate::cycle(6).unwrap();
        let group = automorphisms(&g).unwrap();
        let fam = PairFamily::new_unchecked(
            vec![pair(0, 3), pair(1, 4), pair(2, 5)],
            FamilyProvenance::UserSupplied,
        );
        let t = build_incidence(&g, &fam).unwrap();
        let action = action_on_tree(&group, &fam, &t).unwrap();
        let rotation = group
            .elements()
            .iter()
            .position(|e| e.apply(VertexId(0)) == VertexId(1) && e.apply(VertexId(1)) == VertexId(2))
            .expect("the rotation by one is an automorphism");
        let img = &action.node_images[rotation];
        assert_eq!(&img[0..3], &[1, 2, 0]);
        assert!(global_fixed_point_check(&action, &t).is_empty());
        assert!(edge_stabilizer_check(&group, &t, &action).is_ok());
    }

    #[test]
    fn identity_action_fixes_everything() {
        let g = generate::theta_chain(2, 2).unwrap();
        let fam = PairFamily::new(
            &g,
            vec![pair(0, 1), pair(1, 2)],
            FamilyProvenance::UserSupplied,
        )
        .unwrap();
        let t = build_tree(&g, &fam).unwrap();
        let trivial = AutomorphismGroup {
            elements: vec![Automorphism::identity(g.n())],
        };
        let action = action_on_tree(&trivial, &fam, &t).unwrap();
        assert_eq!(action.node_images[0], vec![0, 1, 2]);
        assert_eq!(
            global_fixed_point_check(&action, &t),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn end_swap_of_the_triple_chain_stabilizes_no_mixed_edge() {
        let g = generate::theta_chain(3, 2).unwrap();
        let group = automorphisms_with_cap(&g, 16).unwrap();
        let fam = PairFamily::new(
            &g,
            vec![pair(0, 1), pair(1, 2), pair(2, 3)],
            FamilyProvenance::UserSupplied,
        )
        .unwrap();
        let t = build_tree(&g, &fam).unwrap();
        let action = action_on_tree(&group, &fam, &t).unwrap();
        assert!(edge_stabilizer_check(&group, &t, &action).is_ok());
        // The end swap fixes only the middle pair node.
        let swap = group
            .elements()
            .iter()
            .position(|e| e.apply(VertexId(0)) == VertexId(3))
            .expect("the chain has an end-to-end symmetry");
        let img = &action.node_images[swap];
        assert_eq!(img[0], 2);
        assert_eq!(img[1], 1);
        assert_eq!(img[2], 0);
    }

    #[test]
    fn action_rejects_a_family_that_is_not_closed() {
        let g = generate::cycle(6).unwrap();
        let group = automorphisms(&g).unwrap();
        let fam = PairFamily::new(&g, vec![pair(0, 3)], FamilyProvenance::UserSupplied).unwrap();
        let t = build_incidence(&g, &fam).unwrap();
        assert!(matches!(
            action_on_tree(&group, &fam, &t),
            Err(SymmetryError::FamilyNotClosed { .. })
        ));
    }
}
