//! Named graphs and seeded random generators. Every random generator is a
//! pure function of its parameters and seed.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{categorical_product, Graph};
use crate::{Error, Result};

/// Attempts made by [`random_regular`] before giving up.
pub const REGULAR_PAIRING_RETRIES: usize = 10_000;

pub fn edgeless(n: usize) -> Graph {
    Graph::new(n, []).expect("edgeless graph")
}

/// `P_n`, the path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs at least one vertex".into()));
    }
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

/// `C_n` with vertices in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(alloc::format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `F_k = K_2 × K_k`. Vertex `(side, j)` has index `side * k + j`; it is
/// adjacent to `(1 - side, j')` for every `j' != j`.
pub fn f_k(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter(alloc::format!("F_k needs k >= 2, got {k}")));
    }
    categorical_product(&complete(2)?, &complete(k)?)
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes
/// `i ~ i + 5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::new(10, outer.chain(inner).chain(spokes)).expect("petersen")
}

/// Random `k`-regular simple graph via the configuration (pairing) model,
/// rejecting non-simple pairings.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k >= n || (n * k) % 2 != 0 {
        return Err(Error::InvalidParameter(alloc::format!(
            "no {k}-regular graph on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| core::iter::repeat_n(v, k)).collect();
    'attempt: for _ in 0..REGULAR_PAIRING_RETRIES {
        points.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(n * k / 2);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || edges.contains(&(u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        return Graph::new(n, edges);
    }
    Err(Error::GenerationFailed(alloc::format!(
        "no simple {k}-regular pairing on {n} vertices after {REGULAR_PAIRING_RETRIES} attempts"
    )))
}

/// Random `k`-tree: starts from `K_{k+1}` on `0..=k`, then attaches each
/// further vertex to a uniformly chosen existing `k`-clique. Always chordal,
/// with `δ = k` and `k(k+1)/2 + (n-k-1)k` edges.
pub fn random_chordal_ktree(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(alloc::format!(
            "k-tree needs 1 <= k < n, got n = {n}, k = {k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    let mut cliques: Vec<Vec<usize>> = (0..=k)
        .map(|skip| (0..=k).filter(|&x| x != skip).collect())
        .collect();
    for v in k + 1..n {
        let base = cliques[rng.gen_range(0..cliques.len())].clone();
        edges.extend(base.iter().map(|&u| (u, v)));
        for i in 0..base.len() {
            let mut next = base.clone();
            next[i] = v;
            cliques.push(next);
        }
    }
    Graph::new(n, edges)
}

/// Random maximal outerplanar graph: the polygon `0 - 1 - ... - (n-1) - 0`
/// plus a random triangulation of its interior, built by splitting each
/// sub-polygon at a uniformly chosen apex. Has `2n - 3` edges.
pub fn random_maximal_outerplanar(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(alloc::format!(
            "maximal outerplanar graph needs n >= 3, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    // Sub-polygons lo..=hi whose closing chord (lo, hi) is already present.
    let mut pending = alloc::vec![(0usize, n - 1)];
    while let Some((lo, hi)) = pending.pop() {
        if hi - lo < 2 {
            continue;
        }
        let apex = rng.gen_range(lo + 1..hi);
        if apex - lo >= 2 {
            edges.push((lo, apex));
        }
        if hi - apex >= 2 {
            edges.push((apex, hi));
        }
        pending.push((lo, apex));
        pending.push((apex, hi));
    }
    Graph::new(n, edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gnp_with(n, p, &mut rng)
}

pub(crate) fn gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("gnp")
}
