//! Decomposition of finite 2-connected graphs along separating vertex pairs.
//!
//! A pair of vertices whose removal disconnects the graph bounds *slices*
//! (closures of the components left behind). Out of a non-crossing family of
//! such pairs this crate builds the bipartite *slice tree* on family members
//! and their maximal mutually-adjacent subsets, checks that the incidence
//! structure really is a tree, and verifies how the graph's automorphism
//! group acts on it. Graphs with single cut vertices are handled by the
//! block-cut tree instead; cycles and graphs without separating pairs are
//! recognized as such.
//!
//! ```
//! use slicetree::tree::{FamilyProvenance, PairFamily};
//! use slicetree::{build_tree, enumerate_cut_pairs, generate};
//!
//! // Three theta links in a chain: the cut pairs are the consecutive hub
//! // pairs, and their slice tree is the five-node path.
//! let g = generate::theta_chain(3, 2).unwrap();
//! let pairs = enumerate_cut_pairs(&g).unwrap();
//! let family = PairFamily::new(&g, pairs, FamilyProvenance::AllCutPairs).unwrap();
//! let tree = build_tree(&g, &family).unwrap();
//! assert_eq!(tree.node_count(), 5);
//! ```
//!
//! Modules:
//! - [`graph`]: graphs, component partitions, cut vertices, block-cut tree,
//!   cut-pair enumeration.
//! - [`mod@slice`]: slices, inseparable pairs, minimal slices, the
//!   non-crossing relation.
//! - [`tree`]: separation/adjacency on a pair family, vertex sets, the slice
//!   tree and its verification.
//! - [`symmetry`]: automorphism enumeration, pair orbits, the action on the
//!   tree, edge-stabilizer and fixed-point diagnostics.
//! - [`oracle`]: independent naive reference implementations for tests.
//! - [`generate`]: deterministic graph constructors and the curated corpus.

pub mod generate;
pub mod graph;
pub mod oracle;
pub mod slice;
pub mod symmetry;
pub mod tree;

pub use graph::{
    block_cut_tree, components, cut_vertices, enumerate_cut_pairs, is_connected, is_cycle,
    is_two_connected, separates, BlockCutTree, ComponentPartition, CutPair, Graph, GraphError,
    VertexId,
};
pub use slice::{
    chain_intersection, family_is_noncrossing, find_inseparable_pair, greedy_noncrossing,
    minimal_slice_containing, pair_crosses, slice_contains, slices_of_pair, Crossing,
    InseparablePair, Slice, SliceError,
};
pub use symmetry::{
    action_on_tree, automorphisms, automorphisms_with_cap, edge_stabilizer_check,
    global_fixed_point_check, orbit_of_pair, Automorphism, AutomorphismGroup, SymmetryError,
    TreeAction, DEFAULT_AUT_CAP,
};
pub use tree::{
    adjacency_graph, build_incidence, build_tree, pair_separates_pairs, path_separator_check,
    separator_set, vertex_sets, verify_tree, AdjacencyRelation, FamilyProvenance, PairFamily,
    SliceTree, TreeDefect, TreeError, TreeNode, VertexSet, MAX_FAMILY_SIZE,
};
