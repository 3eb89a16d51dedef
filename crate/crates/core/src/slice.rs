//! Slices of a graph minus a vertex pair, inseparable pairs, descending
//! chains, minimal slices, and the non-crossing condition on cut pairs.

use thiserror::Error;

use crate::graph::{components, enumerate_cut_pairs, CutPair, Graph, GraphError, VertexId};

/// One component of `g - {boundary}` together with the boundary vertices
/// attached to it.
///
/// `closure = interior ∪ {boundary members with a neighbor in the interior}`;
/// in a 2-connected graph both boundary members always qualify, so the
/// closure is `interior ∪ {a, b}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Slice {
    pub boundary: CutPair,
    pub interior: Vec<VertexId>,
    pub closure: Vec<VertexId>,
}

impl Slice {
    pub fn contains(&self, v: VertexId) -> bool {
        self.closure.binary_search(&v).is_ok()
    }
}

/// A vertex pair that no cut pair separates.
///
/// Members are usually at distance >= 2; they are adjacent exactly when the
/// witness is itself a cut pair (for example the chord endpoints of a chorded
/// cycle), which the search range deliberately admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InseparablePair {
    pub a: VertexId,
    pub b: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SliceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("chain is not descending at position {position}")]
    NotDescending { position: usize },
    #[error("no slice contains vertex {0}: the graph has no cut pairs")]
    NoSliceContains(VertexId),
    #[error("pairs must be distinct, got {0} twice")]
    PairsEqual(CutPair),
}

/// First crossing found in a family: the members of `q` outside `p` meet two
/// distinct components of `g - p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub p: CutPair,
    pub q: CutPair,
}

impl std::fmt::Display for Crossing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} x {}", self.p, self.q)
    }
}

/// One slice per component of `g - {p.a, p.b}`, ordered by smallest interior
/// vertex. Works for any distinct pair; a non-separating pair yields a single
/// slice whose closure is the whole vertex set.
pub fn slices_of_pair(g: &Graph, p: CutPair) -> Result<Vec<Slice>, SliceError> {
    let partition = components(g, &[p.a(), p.b()])?;
    let mut out = Vec::with_capacity(partition.parts.len());
    for part in partition.parts {
        let mut closure = part.clone();
        for m in p.members() {
            if part.iter().any(|&v| g.are_adjacent(m, v)) {
                closure.push(m);
            }
        }
        closure.sort();
        out.push(Slice {
            boundary: p,
            interior: part,
            closure,
        });
    }
    Ok(out)
}

/// Membership in the slice closure.
pub fn slice_contains(s: &Slice, v: VertexId) -> bool {
    s.contains(v)
}

/// Searches for a pair of vertices that no cut pair separates.
///
/// The range is every pair at distance >= 2 plus every cut pair (whose
/// members may be adjacent, as with chord endpoints); the lexicographically
/// least unseparated pair wins. `None` means every candidate is separated —
/// on the curated corpus that happens exactly for cycles.
pub fn find_inseparable_pair(g: &Graph) -> Result<Option<InseparablePair>, SliceError> {
    let cut_pairs = enumerate_cut_pairs(g)?;
    let maps: Vec<(CutPair, Vec<Option<usize>>)> = cut_pairs
        .iter()
        .map(|&cp| {
            let partition = components(g, &[cp.a(), cp.b()]).expect("members in range");
            (cp, partition.part_index_map(g.n()))
        })
        .collect();
    let is_cut_pair = |a: VertexId, b: VertexId| {
        cut_pairs.binary_search(&CutPair::new(a, b)).is_ok()
    };
    for i in 0..g.n() {
        for j in (i + 1)..g.n() {
            let (a, b) = (VertexId(i), VertexId(j));
            if g.are_adjacent(a, b) && !is_cut_pair(a, b) {
                continue;
            }
            let separated = maps.iter().any(|(cp, map)| {
                !cp.contains(a)
                    && !cp.contains(b)
                    && matches!(
                        (map[a.index()], map[b.index()]),
                        (Some(x), Some(y)) if x != y
                    )
            });
            if !separated {
                return Ok(Some(InseparablePair { a, b }));
            }
        }
    }
    Ok(None)
}

/// Intersection of a weakly descending chain of slices.
///
/// On a finite graph a descending chain stabilizes, so the intersection of
/// the closures equals the last closure; this is asserted rather than
/// assumed. Returns `None` for an empty chain or an empty intersection.
pub fn chain_intersection(chain: &[Slice]) -> Result<Option<Slice>, SliceError> {
    let Some(first) = chain.first() else {
        return Ok(None);
    };
    for (i, w) in chain.windows(2).enumerate() {
        if !is_subset(&w[1].closure, &w[0].closure) {
            return Err(SliceError::NotDescending { position: i + 1 });
        }
    }
    let mut intersection = first.closure.clone();
    for s in &chain[1..] {
        intersection.retain(|v| s.closure.binary_search(v).is_ok());
    }
    if intersection.is_empty() {
        return Ok(None);
    }
    let last = chain.last().expect("chain is nonempty");
    assert_eq!(
        intersection, last.closure,
        "descending chain must stabilize at its last element"
    );
    Ok(Some(last.clone()))
}

fn is_subset(small: &[VertexId], big: &[VertexId]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

fn is_proper_subset(small: &[VertexId], big: &[VertexId]) -> bool {
    small.len() < big.len() && is_subset(small, big)
}

/// An inclusion-minimal slice whose closure contains `a`, over all slices of
/// all cut pairs. Ties are broken by closure cardinality, then by the sorted
/// closure, then by the boundary pair.
pub fn minimal_slice_containing(g: &Graph, a: VertexId) -> Result<Slice, SliceError> {
    if !g.contains(a) {
        return Err(GraphError::UnknownVertex(a, g.n()).into());
    }
    let cut_pairs = enumerate_cut_pairs(g)?;
    let mut candidates: Vec<Slice> = Vec::new();
    for &cp in &cut_pairs {
        for s in slices_of_pair(g, cp)? {
            if s.contains(a) {
                candidates.push(s);
            }
        }
    }
    if candidates.is_empty() {
        return Err(SliceError::NoSliceContains(a));
    }
    let minimal: Vec<&Slice> = candidates
        .iter()
        .filter(|s| {
            !candidates
                .iter()
                .any(|t| is_proper_subset(&t.closure, &s.closure))
        })
        .collect();
    let best = minimal
        .into_iter()
        .min_by(|s, t| {
            (s.closure.len(), &s.closure, s.boundary)
                .cmp(&(t.closure.len(), &t.closure, t.boundary))
        })
        .expect("candidates is nonempty");
    Ok(best.clone())
}

/// True iff the members of `q` outside `p` meet two distinct components of
/// `g - {p.a, p.b}`.
pub fn pair_crosses(g: &Graph, p: CutPair, q: CutPair) -> Result<bool, SliceError> {
    if p == q {
        return Err(SliceError::PairsEqual(p));
    }
    let outside: Vec<VertexId> = q
        .members()
        .iter()
        .copied()
        .filter(|&v| !p.contains(v))
        .collect();
    if outside.len() < 2 {
        return Ok(false);
    }
    let partition = components(g, &[p.a(), p.b()])?;
    let map = partition.part_index_map(g.n());
    Ok(match (map[outside[0].index()], map[outside[1].index()]) {
        (Some(x), Some(y)) => x != y,
        _ => false,
    })
}

/// Checks every ordered pair in the family; `Err` carries the first crossing
/// in lexicographic scan order.
pub fn family_is_noncrossing(g: &Graph, members: &[CutPair]) -> Result<(), Crossing> {
    for &p in members {
        for &q in members {
            if p == q {
                continue;
            }
            if pair_crosses(g, p, q).expect("distinct pairs on a valid graph") {
                return Err(Crossing { p, q });
            }
        }
    }
    Ok(())
}

/// Greedy maximal non-crossing subfamily, scanned in lexicographic order:
/// a pair is kept iff it crosses no already-kept pair in either direction.
pub fn greedy_noncrossing(g: &Graph, members: &[CutPair]) -> Vec<CutPair> {
    let mut sorted: Vec<CutPair> = members.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut kept: Vec<CutPair> = Vec::new();
    for &q in &sorted {
        let clashes = kept.iter().any(|&p| {
            pair_crosses(g, p, q).expect("distinct pairs") || pair_crosses(g, q, p).expect("distinct pairs")
        });
        if !clashes {
            kept.push(q);
        }
    }
    kept
}
