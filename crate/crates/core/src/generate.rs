//! Deterministic graph constructors: the named families the CLI exposes and
//! the curated corpus the test suites sweep.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{is_two_connected, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no 2-connected graph with n={n}, m={m} found after {attempts} attempts")]
    RetriesExhausted { n: usize, m: usize, attempts: usize },
}

fn invalid(msg: impl Into<String>) -> GenerateError {
    GenerateError::InvalidParameter(msg.into())
}

/// Cycle on `n >= 3` vertices, edges `i - (i+1) mod n`.
pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges).expect("cycle edges are simple"))
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            edges.push((a, b));
        }
    }
    Ok(Graph::new(n, &edges).expect("complete edges are simple"))
}

/// Theta graph: hubs 0 and 1 joined by three internally disjoint paths of
/// `l1`, `l2`, `l3` edges. Each `li >= 1` and at most one may equal 1
/// (two length-1 paths would be a multi-edge).
pub fn theta(l1: usize, l2: usize, l3: usize) -> Result<Graph, GenerateError> {
    let lengths = [l1, l2, l3];
    if lengths.contains(&0) {
        return Err(invalid("theta path lengths must be >= 1"));
    }
    if lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(invalid("theta allows at most one path of length 1"));
    }
    let n = 2 + lengths.iter().map(|&l| l - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &l in &lengths {
        chain_path(&mut edges, 0, 1, l, &mut next);
    }
    Ok(Graph::new(n, &edges).expect("theta edges are simple"))
}

/// Appends a path of `len` edges from `from` to `to`, drawing interior
/// vertices from `next`.
fn chain_path(edges: &mut Vec<(usize, usize)>, from: usize, to: usize, len: usize, next: &mut usize) {
    let mut prev = from;
    for _ in 0..len.saturating_sub(1) {
        edges.push((prev, *next));
        prev = *next;
        *next += 1;
    }
    edges.push((prev, to));
}

/// Chain of `k >= 1` theta graphs: hubs `0..=k`, consecutive hubs joined by
/// three parallel paths of `l >= 2` edges each, plus the skip edges
/// `u_i - u_{i+2}` so interior hubs are not cut vertices. The cut pairs are
/// exactly the consecutive hub pairs. `theta_chain(2, 2)` is the double
/// theta on three hubs with six midpoints.
pub fn theta_chain(k: usize, l: usize) -> Result<Graph, GenerateError> {
    if k == 0 {
        return Err(invalid("theta chain needs k >= 1 links"));
    }
    if l < 2 {
        return Err(invalid("theta chain needs path length l >= 2"));
    }
    let n = (k + 1) + 3 * k * (l - 1);
    let mut edges = Vec::new();
    let mut next = k + 1;
    for i in 0..k {
        for _ in 0..3 {
            chain_path(&mut edges, i, i + 1, l, &mut next);
        }
    }
    for i in 0..k.saturating_sub(1) {
        edges.push((i, i + 2));
    }
    debug_assert_eq!(next, n);
    Ok(Graph::new(n, &edges).expect("theta chain edges are simple"))
}

/// Ring of `k >= 3` hubs where consecutive hubs are joined by two parallel
/// paths of `l >= 2` edges. For `k = 3, l = 2` the cut pairs are exactly the
/// three hub pairs and they are mutually adjacent, so the slice tree is a
/// star.
pub fn theta_ring(k: usize, l: usize) -> Result<Graph, GenerateError> {
    if k < 3 {
        return Err(invalid("theta ring needs k >= 3 hubs"));
    }
    if l < 2 {
        return Err(invalid("theta ring needs path length l >= 2"));
    }
    let n = k + 2 * k * (l - 1);
    let mut edges = Vec::new();
    let mut next = k;
    for i in 0..k {
        for _ in 0..2 {
            chain_path(&mut edges, i, (i + 1) % k, l, &mut next);
        }
    }
    debug_assert_eq!(next, n);
    Ok(Graph::new(n, &edges).expect("theta ring edges are simple"))
}

/// Prism over `C_n`: two `n`-cycles `0..n` and `n..2n` joined by spokes.
pub fn prism(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(invalid(format!("prism needs n >= 3, got {n}")));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
    }
    Ok(Graph::new(2 * n, &edges).expect("prism edges are simple"))
}

const RANDOM_ATTEMPTS: usize = 256;

/// Seed-determined random 2-connected graph with `n` vertices and `m` edges.
/// Samples `m` of the C(n,2) possible edges uniformly and retries (bounded)
/// until the result is 2-connected.
pub fn random_two_connected(n: usize, m: usize, seed: u64) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(invalid(format!("random graph needs n >= 3, got {n}")));
    }
    let max_edges = n * (n - 1) / 2;
    if m < n {
        return Err(invalid(format!(
            "a 2-connected graph on {n} vertices needs at least {n} edges, got {m}"
        )));
    }
    if m > max_edges {
        return Err(invalid(format!(
            "at most {max_edges} edges possible on {n} vertices, got {m}"
        )));
    }
    let mut all_pairs: Vec<(usize, usize)> = Vec::with_capacity(max_edges);
    for a in 0..n {
        for b in (a + 1)..n {
            all_pairs.push((a, b));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let mut pairs = all_pairs.clone();
        pairs.shuffle(&mut rng);
        pairs.truncate(m);
        let g = Graph::new(n, &pairs).expect("sampled edges are simple");
        if is_two_connected(&g) {
            return Ok(g);
        }
    }
    Err(GenerateError::RetriesExhausted {
        n,
        m,
        attempts: RANDOM_ATTEMPTS,
    })
}

/// Cycle on `n` vertices plus the chord `{a, b}`.
pub fn chorded_cycle(n: usize, a: usize, b: usize) -> Result<Graph, GenerateError> {
    if a >= n || b >= n || a == b {
        return Err(invalid(format!("chord {a}-{b} out of range for C_{n}")));
    }
    let diff = (n + b - a) % n;
    if diff == 1 || diff == n - 1 {
        return Err(invalid(format!("chord {a}-{b} is already a cycle edge")));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.push((a, b));
    Ok(Graph::new(n, &edges).expect("chorded cycle edges are simple"))
}

/// The curated corpus swept by the invariant and acceptance suites:
/// cycles, thetas, theta chains, a theta ring, chorded cycles, prisms and
/// complete graphs, each with a stable name.
pub fn curated_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in [4, 5, 6, 7, 8, 12] {
        out.push((format!("cycle-{n}"), cycle(n).unwrap()));
    }
    for (l1, l2, l3) in [(2, 2, 2), (1, 2, 2), (2, 2, 3), (2, 3, 3), (3, 3, 3)] {
        out.push((format!("theta-{l1}-{l2}-{l3}"), theta(l1, l2, l3).unwrap()));
    }
    out.push(("theta-chain-2-2".into(), theta_chain(2, 2).unwrap()));
    out.push(("theta-chain-3-2".into(), theta_chain(3, 2).unwrap()));
    out.push(("theta-ring-3-2".into(), theta_ring(3, 2).unwrap()));
    for (n, a, b) in [(4, 0, 2), (5, 0, 2), (6, 0, 2), (6, 0, 3), (8, 0, 4)] {
        out.push((format!("chorded-c{n}-{a}-{b}"), chorded_cycle(n, a, b).unwrap()));
    }
    for n in [3, 4, 5] {
        out.push((format!("prism-{n}"), prism(n).unwrap()));
    }
    for n in [4, 5, 6, 7, 8] {
        out.push((format!("complete-{n}"), complete(n).unwrap()));
    }
    out
}
