//! Structural transforms. Each documents how it numbers the vertices of its
//! output so reduction traces stay reproducible.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Graph, VertexSet};
use crate::{Error, Result};

/// `G^{1/s}`: every edge replaced by a path of length `s`.
///
/// Original vertices keep their indices. The `s - 1` internal vertices of the
/// path for the `e`-th edge `(u, v)` (sorted edge order, walking from `u` to
/// `v`) are `n + e*(s-1) + j` for `j in 0..s-1`. `s = 1` returns a copy of
/// the input.
pub fn subdivide(g: &Graph, s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::InvalidParameter("subdivision factor must be >= 1".into()));
    }
    if s == 1 {
        return Ok(g.clone());
    }
    let inner = s - 1;
    let n = g.n() + inner * g.m();
    let mut edges = Vec::with_capacity(s * g.m());
    let mut labels: Vec<String> = (0..g.n())
        .map(|v| g.label(v).map_or_else(|| format!("v{v}"), String::from))
        .collect();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let base = g.n() + e * inner;
        let mut prev = u;
        for j in 0..inner {
            edges.push((prev, base + j));
            labels.push(format!("sub({u},{v})#{j}"));
            prev = base + j;
        }
        edges.push((prev, v));
    }
    Graph::new(n, edges)?.with_labels(labels)
}

/// `G^s`: same vertices, `u ~ v` iff `1 <= dist(u, v) <= s`.
pub fn power(g: &Graph, s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::InvalidParameter("power must be >= 1".into()));
    }
    if s == 1 {
        return Ok(g.clone());
    }
    let mut edges = Vec::new();
    let mut dist = alloc::vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for src in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            if dist[u] == s {
                continue;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                    if w > src {
                        edges.push((src, w));
                    }
                }
            }
        }
    }
    Graph::new(g.n(), edges)
}

/// `G × H`. Vertex `(a, b)` has index `a * |V(H)| + b`.
pub fn categorical_product(g: &Graph, h: &Graph) -> Result<Graph> {
    check_nonempty(g, h)?;
    let w = h.n();
    let mut edges = Vec::with_capacity(2 * g.m() * h.m());
    for &(u1, u2) in g.edges() {
        for &(v1, v2) in h.edges() {
            edges.push((u1 * w + v1, u2 * w + v2));
            edges.push((u1 * w + v2, u2 * w + v1));
        }
    }
    Graph::new(g.n() * w, edges)
}

/// `G □ H`. Vertex `(a, b)` has index `a * |V(H)| + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    check_nonempty(g, h)?;
    let w = h.n();
    let mut edges = Vec::with_capacity(g.m() * h.n() + g.n() * h.m());
    for &(u1, u2) in g.edges() {
        for b in h.vertices() {
            edges.push((u1 * w + b, u2 * w + b));
        }
    }
    for a in g.vertices() {
        for &(v1, v2) in h.edges() {
            edges.push((a * w + v1, a * w + v2));
        }
    }
    Graph::new(g.n() * w, edges)
}

/// `L(G)`. Vertex `e` is the `e`-th edge of [`Graph::edges`].
pub fn line_graph(g: &Graph) -> Result<Graph> {
    if g.m() == 0 {
        return Err(Error::InvalidParameter("line graph of an edgeless graph".into()));
    }
    let mut incident: Vec<Vec<usize>> = alloc::vec![Vec::new(); g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }
    let mut edges = Vec::new();
    for star in &incident {
        for (i, &a) in star.iter().enumerate() {
            for &b in &star[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    let labels = g.edges().iter().map(|(u, v)| format!("e({u},{v})")).collect();
    Graph::new(g.m(), edges)?.with_labels(labels)
}

/// `G + H`; vertices of `h` are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::new(g.n() + h.n(), edges).expect("union of valid graphs is valid")
}

/// Subgraph induced by `keep`, with vertices renumbered in ascending order.
/// Returns the subgraph and the map from new index to original index.
pub fn induced_subgraph(g: &Graph, keep: &VertexSet) -> (Graph, Vec<usize>) {
    let old: Vec<usize> = keep.to_vec();
    let mut new_index = alloc::vec![usize::MAX; g.n()];
    for (i, &v) in old.iter().enumerate() {
        new_index[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| keep.contains(u) && keep.contains(v))
        .map(|&(u, v)| (new_index[u], new_index[v]));
    let sub = Graph::new(old.len(), edges).expect("induced subgraph of a valid graph");
    (sub, old)
}

fn check_nonempty(g: &Graph, h: &Graph) -> Result<()> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::InvalidParameter("product factors must be nonempty".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::{complete, cycle, edgeless, path, classify};
    use super::*;

    #[test]
    fn subdivide_edge_and_triangle() {
        let p3 = subdivide(&complete(2).unwrap(), 2).unwrap();
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edges(), &[(0, 2), (1, 2)]);

        let c6 = subdivide(&cycle(3).unwrap(), 2).unwrap();
        assert_eq!(c6.n(), 6);
        assert_eq!(c6.regular_degree(), Some(2));
        assert_eq!(classify(&c6).components.len(), 1);
    }

    #[test]
    fn subdivide_identity_and_size() {
        let g = complete(4).unwrap();
        assert_eq!(subdivide(&g, 1).unwrap(), g);
        assert_eq!(subdivide(&g, 4).unwrap().n(), 4 + 3 * 6);
        assert!(subdivide(&g, 0).is_err());
    }

    #[test]
    fn power_examples() {
        assert_eq!(power(&path(3).unwrap(), 2).unwrap(), complete(3).unwrap());
        let sq = power(&cycle(6).unwrap(), 2).unwrap();
        assert_eq!(sq.regular_degree(), Some(4));
        assert_eq!(sq.m(), 12);
        let c = cycle(5).unwrap();
        assert_eq!(power(&c, 1).unwrap(), c);
    }

    #[test]
    fn categorical_examples() {
        let k2 = complete(2).unwrap();
        let pm = categorical_product(&k2, &k2).unwrap();
        assert_eq!(pm.n(), 4);
        assert_eq!(pm.edges(), &[(0, 3), (1, 2)]);

        let c6 = categorical_product(&k2, &complete(3).unwrap()).unwrap();
        assert_eq!(c6.regular_degree(), Some(2));
        assert_eq!(classify(&c6).components.len(), 1);

        let empty = categorical_product(&complete(3).unwrap(), &edgeless(4)).unwrap();
        assert_eq!((empty.n(), empty.m()), (12, 0));
        assert!(categorical_product(&k2, &edgeless(0)).is_err());
    }

    #[test]
    fn cartesian_examples() {
        let k2 = complete(2).unwrap();
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(c4.regular_degree(), Some(2));
        assert_eq!(c4.m(), 4);

        let prism = cartesian_product(&cycle(5).unwrap(), &k2).unwrap();
        assert_eq!(prism.n(), 10);
        assert_eq!(prism.regular_degree(), Some(3));
        assert_eq!(prism.m(), 2 * 5 + 5);
    }

    #[test]
    fn line_graph_examples() {
        let k3 = complete(3).unwrap();
        assert_eq!(line_graph(&k3).unwrap().without_labels(), k3);
        let l = line_graph(&path(3).unwrap()).unwrap();
        assert_eq!((l.n(), l.m()), (2, 1));
        let lk4 = line_graph(&complete(4).unwrap()).unwrap();
        assert_eq!(lk4.n(), 6);
        assert_eq!(lk4.regular_degree(), Some(4));
        assert!(line_graph(&edgeless(3)).is_err());
    }

    #[test]
    fn induced_and_union() {
        let g = disjoint_union(&complete(3).unwrap(), &path(2).unwrap());
        assert_eq!((g.n(), g.m()), (5, 4));
        let keep = VertexSet::from_vertices(5, [1, 2, 3]).unwrap();
        let (sub, map) = induced_subgraph(&g, &keep);
        assert_eq!(map, [1, 2, 3]);
        assert_eq!(sub.edges(), &[(0, 1)]);
    }
}
