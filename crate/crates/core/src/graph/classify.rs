use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::{Graph, VertexSet};

/// Structural flags used as theorem preconditions and as assertions on
/// generated instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub bipartite: bool,
    pub triangle_free: bool,
    pub chordal: bool,
    /// `Some(r)` when the graph is `r`-regular.
    pub regular: Option<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Connected components, ordered by smallest member.
    pub components: Vec<VertexSet>,
}

pub fn classify(g: &Graph) -> StructureReport {
    StructureReport {
        bipartite: is_bipartite(g),
        triangle_free: is_triangle_free(g),
        chordal: is_chordal(g),
        regular: g.regular_degree(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        components: components(g),
    }
}

/// BFS distances from `src`; `None` for unreachable vertices.
pub fn distances_from(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let mut dist = alloc::vec![None; g.n()];
    let mut queue = VecDeque::from([src]);
    dist[src] = Some(0);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or(0);
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = VertexSet::new(g.n());
    let mut out = Vec::new();
    for v in g.vertices() {
        if seen.contains(v) {
            continue;
        }
        let mut comp = VertexSet::new(g.n());
        for (u, d) in distances_from(g, v).into_iter().enumerate() {
            if d.is_some() {
                comp.insert(u);
            }
        }
        seen.union_with(&comp);
        out.push(comp);
    }
    out
}

/// Side (0 or 1) of every vertex in a proper 2-coloring, where each
/// component's smallest vertex gets side 0. `None` if the graph has an odd
/// cycle.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let mut side: Vec<Option<u8>> = alloc::vec![None; g.n()];
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let s = side[u]?;
            for w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(1 - s);
                        queue.push_back(w);
                    }
                    Some(t) if t == s => return None,
                    Some(_) => {}
                }
            }
        }
    }
    side.into_iter().collect()
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| g.neighbors(u).is_disjoint(g.neighbors(v)))
}

/// A perfect elimination ordering, if one exists.
///
/// Runs maximum cardinality search; the reverse of the visit order is a
/// perfect elimination ordering iff the graph is chordal, which is then
/// verified directly: for each vertex, its neighbors later in the ordering
/// minus the earliest of them must all be adjacent to that earliest one.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = alloc::vec![0usize; n];
    let mut numbered = VertexSet::new(n);
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g
            .vertices()
            .filter(|&v| !numbered.contains(v))
            .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))?;
        numbered.insert(v);
        visit.push(v);
        for w in g.neighbors(v) {
            if !numbered.contains(w) {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    let order = visit;

    let mut position = alloc::vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for &v in &order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&w| position[w] > position[v])
            .collect();
        if let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) {
            let others = later.iter().filter(|&&w| w != parent);
            if others.into_iter().any(|&w| !g.has_edge(parent, w)) {
                return None;
            }
        }
    }
    Some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}
